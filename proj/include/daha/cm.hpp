#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/linalg.hpp"
#include "daha/weights.hpp"

namespace daha {

// Candidate point (g, g', v, phi) of the fiber m_+^{-1}(0) with the constant
// zeta^{2l} attached. Membership in the variety is a queried property.
template <class K>
struct CMPoint {
    Mat<K> g, gp;
    Vec<K> v;
    RowVec<K> phi;
    K zeta2l;

    int n() const { return static_cast<int>(g.rows()); }
};

template <class K>
struct DiagPair {
    std::vector<K> h, hp;
};

// m_+(g, g', v, phi) = g g' - zeta^{2l} g' g + v phi
template <class K>
Mat<K> moment_plus(const CMPoint<K>& p) {
    Mat<K> m = p.g * p.gp - (p.gp * p.g) * p.zeta2l;
    for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j) m(i, j) += p.v(i) * p.phi(j);
    return m;
}

template <class K>
bool on_variety(const CMPoint<K>& p) {
    return is_zero_mat(moment_plus(p));
}

// multiplicative-model moment map m_S(x) = [g, g'](e + v phi), [g, h] = g^{-1} h g h^{-1}
template <class K>
Mat<K> moment_mult(const CMPoint<K>& p, const K& zero, const K& one) {
    Mat<K> ginv = exact_inverse(p.g, zero, one);
    Mat<K> gpinv = exact_inverse(p.gp, zero, one);
    Mat<K> comm = ginv * p.gp * p.g * gpinv;
    Mat<K> e = identity_mat(p.n(), zero, one);
    for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j) e(i, j) += p.v(i) * p.phi(j);
    return comm * e;
}

// coordinate change (g, h, v, phi) -> (g, h^{-1}, g h^{-1} v, phi); the image
// solves m_+ = 0 exactly when m_S = zeta^{2l} e
template <class K>
CMPoint<K> model_transfer(const CMPoint<K>& p, const K& zero, const K& one) {
    CMPoint<K> out = p;
    Mat<K> hinv = exact_inverse(p.gp, zero, one);
    out.gp = hinv;
    out.v = p.g * (hinv * p.v);
    return out;
}

// H_star membership: entries nonzero, pairwise distinct, no ratio equals zeta^{2l}
template <class K>
bool in_h_star(const std::vector<K>& h, const K& zeta2l) {
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (h[i].is_zero()) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (h[i] == h[j]) return false;
            if (h[i] == zeta2l * h[j]) return false;
        }
    }
    return true;
}

// explicit solved point x_{h, h'}: g = diag(h), v = h', phi = h, and
// g'_{ij} = h'_i h_j / (zeta^{2l} h_j - h_i). For zeta^{2l} = 1 (where that
// formula has no diagonal) the commuting-diagonal family (diag h, diag h',
// v = 0, phi = h) is used instead.
template <class K>
CMPoint<K> point_from_pair(const DiagPair<K>& d, const K& zeta2l, const K& zero, const K& one) {
    const int n = static_cast<int>(d.h.size());
    if (!in_h_star(d.h, zeta2l))
        fail(Err::SingularParameter, "h is not in H_star for this zeta^{2l}");
    CMPoint<K> p;
    p.zeta2l = zeta2l;
    p.g = zero_mat(n, n, zero);
    p.gp = zero_mat(n, n, zero);
    p.v = Vec<K>(n);
    p.phi = RowVec<K>(n);
    for (int i = 0; i < n; ++i) {
        p.g(i, i) = d.h[static_cast<std::size_t>(i)];
        p.phi(i) = d.h[static_cast<std::size_t>(i)];
    }
    if (zeta2l == one) {
        for (int i = 0; i < n; ++i) {
            p.gp(i, i) = d.hp[static_cast<std::size_t>(i)];
            p.v(i) = zero;
        }
        return p;
    }
    for (int i = 0; i < n; ++i) {
        p.v(i) = d.hp[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            K den = zeta2l * d.h[static_cast<std::size_t>(j)] - d.h[static_cast<std::size_t>(i)];
            if (den.is_zero()) fail(Err::SingularParameter, "zeta^{2l} h_j = h_i");
            p.gp(i, j) = d.hp[static_cast<std::size_t>(i)] * d.h[static_cast<std::size_t>(j)] *
                         den.inverse();
        }
    }
    return p;
}

// conjugation action a . (g, g', v, phi) = (a g a^{-1}, a g' a^{-1}, a v, phi a^{-1})
template <class K>
CMPoint<K> g_act(const Mat<K>& a, const CMPoint<K>& p, const K& zero, const K& one) {
    Mat<K> ainv = exact_inverse(a, zero, one);
    CMPoint<K> out;
    out.zeta2l = p.zeta2l;
    out.g = a * p.g * ainv;
    out.gp = a * p.gp * ainv;
    out.v = a * p.v;
    out.phi = p.phi * ainv;
    return out;
}

// ---------------------------------------------------------------------------
// Invariant record: tr(m), det(m)^{±1} (when invertible), phi(m v) for words m
// over {A = g, B = g'} of length <= D, plus the determinant of the first n
// Krylov rows. Keys are deterministic (words ordered by length then lex).

template <class K>
using InvariantRecord = std::map<std::string, K>;

inline std::vector<std::string> monomial_words(int maxlen) {
    std::vector<std::string> out{""};
    std::vector<std::string> prev{""};
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<std::string> next;
        for (const auto& w : prev) {
            next.push_back(w + "A");
            next.push_back(w + "B");
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(next);
    }
    return out;
}

template <class K>
Mat<K> word_matrix(const CMPoint<K>& p, const std::string& w, const K& zero, const K& one) {
    Mat<K> m = identity_mat(p.n(), zero, one);
    for (char c : w) m = m * (c == 'A' ? p.g : p.gp);
    return m;
}

template <class K>
InvariantRecord<K> invariants(const CMPoint<K>& p, int maxlen, const K& zero, const K& one) {
    InvariantRecord<K> rec;
    const int n = p.n();
    std::vector<std::string> words = monomial_words(maxlen);
    std::vector<RowVec<K>> krylov;
    for (const auto& w : words) {
        Mat<K> m = word_matrix(p, w, zero, one);
        K tr = zero;
        for (int i = 0; i < n; ++i) tr += m(i, i);
        rec["tr(" + w + ")"] = tr;
        K det = exact_det(m, zero, one);
        rec["det(" + w + ")"] = det;
        if (!det.is_zero()) rec["det_inv(" + w + ")"] = det.inverse();
        RowVec<K> pm = p.phi * m;
        K pmv = zero;
        for (int i = 0; i < n; ++i) pmv += pm(i) * p.v(i);
        rec["phi(" + w + " v)"] = pmv;
        if (static_cast<int>(krylov.size()) < n) krylov.push_back(pm);
    }
    if (static_cast<int>(krylov.size()) == n) {
        Mat<K> kmat(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) kmat(i, j) = krylov[static_cast<std::size_t>(i)](j);
        // weight-one semi-invariant (scales by det(a)^{-1} along orbits);
        // keyed apart so orbit-constancy checks can treat it accordingly
        rec["semi|det(phi m_1,...,phi m_n)"] = exact_det(kmat, zero, one);
    }
    return rec;
}

// the conjugation-invariant entries only
template <class K>
InvariantRecord<K> invariant_part(const InvariantRecord<K>& rec) {
    InvariantRecord<K> out;
    for (const auto& [k, v] : rec)
        if (k.rfind("semi|", 0) != 0) out.emplace(k, v);
    return out;
}

// cyclic covector test: rank of {phi m : len(m) < 2n} equals n
template <class K>
bool is_cyclic(const CMPoint<K>& p, const K& zero, const K& one) {
    const int n = p.n();
    std::vector<std::string> words = monomial_words(2 * n - 1);
    Mat<K> rows(static_cast<int>(words.size()), n);
    for (std::size_t i = 0; i < words.size(); ++i) {
        RowVec<K> r = p.phi * word_matrix(p, words[i], zero, one);
        for (int j = 0; j < n; ++j) rows(static_cast<int>(i), j) = r(j);
    }
    return exact_rank(rows) == n;
}

// normal form of a solved point with diagonal g: h'_i = v_i phi_i / h_i,
// reached by conjugating with diag(phi_i / h_i); output sorted canonically
template <class K>
DiagPair<K> normal_form(const CMPoint<K>& p, const K& zero, const K& one) {
    const int n = p.n();
    if (p.zeta2l == one)
        fail(Err::SingularParameter, "normal form chart requires zeta^{2l} != 1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !p.g(i, j).is_zero())
                fail(Err::NonGenericPoint, "normal form requires diagonal g");
    std::vector<K> h(static_cast<std::size_t>(n), zero), hp(static_cast<std::size_t>(n), zero);
    for (int i = 0; i < n; ++i) {
        h[static_cast<std::size_t>(i)] = p.g(i, i);
        if (p.phi(i).is_zero()) fail(Err::NonGenericPoint, "phi has a zero entry");
    }
    if (!in_h_star(h, p.zeta2l)) fail(Err::NonGenericPoint, "diagonal of g is not in H_star");
    if (!on_variety(p)) fail(Err::NotOnVariety, "moment map does not vanish");
    for (int i = 0; i < n; ++i)
        hp[static_cast<std::size_t>(i)] = p.v(i) * p.phi(i) * p.g(i, i).inverse();
    // canonical sort by the scalar ordering, h' permuted along
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return scalar_cmp(h[a], h[b]) < 0;
    });
    DiagPair<K> out;
    for (std::size_t i : idx) {
        out.h.push_back(h[i]);
        out.hp.push_back(hp[i]);
    }
    return out;
}

// Fourier map x -> (g', g, -zeta^{-2l} v, phi); the image solves the moment
// equation with the inverted parameter whenever x solves it
template <class K>
CMPoint<K> fourier_point(const CMPoint<K>& p) {
    CMPoint<K> out;
    out.zeta2l = p.zeta2l;
    out.g = p.gp;
    out.gp = p.g;
    out.v = p.v * (-(p.zeta2l.inverse()));
    out.phi = p.phi;
    return out;
}

template <class K>
CMPoint<K> with_zeta(CMPoint<K> p, const K& z) {
    p.zeta2l = z;
    return p;
}

} // namespace daha
