#pragma once

#include <string>
#include <vector>

#include "daha/daha_suites.hpp"

namespace daha {

// Candidate central elements carried with generic coefficients and the l that
// makes them central; specialization happens at check time.
struct CenterCandidate {
    std::string name;
    unsigned l;
    DahaElement<QTScalar> elt;
};

inline void add_to(DahaElement<QTScalar>& e, const PBWKey& k, const QTScalar& c) {
    auto [it, fresh] = e.emplace(k, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) e.erase(it);
    }
}

// power sums sum_i x_i^{l a} (a <= n), the units (x_1...x_n)^{±l}, and the
// Fourier images on the y side
inline std::vector<CenterCandidate> central_generators(int n, unsigned l) {
    if (l < 2) fail(Err::ConfigError, "central_generators requires l >= 2");
    std::vector<CenterCandidate> out;
    const std::int64_t L = static_cast<std::int64_t>(l);
    for (int a = 1; a <= n; ++a) {
        DahaElement<QTScalar> px, py;
        for (int i = 1; i <= n; ++i) {
            Weight mu = wscale(L * a, eps(n, i));
            add_to(px, PBWKey{mu, Perm(n), zero_weight(n)}, QTScalar(1l));
            add_to(py, PBWKey{zero_weight(n), Perm(n), mu}, QTScalar(1l));
        }
        out.push_back({"p_" + std::to_string(a) + "(x^l)", l, std::move(px)});
        out.push_back({"p_" + std::to_string(a) + "(y^l)", l, std::move(py)});
    }
    for (int sgn : {1, -1}) {
        DahaElement<QTScalar> ux, uy;
        Weight mu = wscale(sgn * L, omega(n, n));
        add_to(ux, PBWKey{mu, Perm(n), zero_weight(n)}, QTScalar(1l));
        add_to(uy, PBWKey{zero_weight(n), Perm(n), mu}, QTScalar(1l));
        std::string tag = sgn > 0 ? "^l" : "^-l";
        out.push_back({"(x_1...x_n)" + tag, l, std::move(ux)});
        out.push_back({"(y_1...y_n)" + tag, l, std::move(uy)});
    }
    return out;
}

// sigma_x = prod_{alpha in Pi, k = 0,1} (x_{l alpha} - t^{2 l k}), read as an
// x-side symmetric Laurent element; sigma_y is its Fourier image.
inline CenterCandidate sigma_x(int n, unsigned l) {
    const std::int64_t L = static_cast<std::int64_t>(l);
    // roots alpha = eps_a - eps_b, a != b
    DahaElement<QTScalar> acc;
    add_to(acc, PBWKey{zero_weight(n), Perm(n), zero_weight(n)}, QTScalar(1l));
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            Weight root = wsum(eps(n, a), wneg(eps(n, b)));
            for (int k = 0; k <= 1; ++k) {
                DahaElement<QTScalar> next;
                for (const auto& [key, c] : acc) {
                    // multiply by x_{l alpha}
                    PBWKey shifted{wsum(key.x, wscale(L, root)), key.w, key.y};
                    add_to(next, shifted, c);
                    // minus t^{2 l k}
                    add_to(next, key, -(c * QTScalar::t(2 * L * k)));
                }
                acc = std::move(next);
            }
        }
    }
    return {"sigma_x", l, std::move(acc)};
}

inline CenterCandidate sigma_y(const DahaRep<QtField>& rep, unsigned l) {
    CenterCandidate sx = sigma_x(rep.rank(), l);
    return {"sigma_y", l, apply_symmetry(rep, SymmetryKind::Fourier, sx.elt)};
}

// ---------------------------------------------------------------------------
// Centrality certification on a finite monomial window: the commutator with
// every generator in {t_0..t_{n-1}, t_pi^{±1}, x_{eps_1}} must annihilate all
// monomials with exponents in [-bound, bound]^n.

struct CentralityResult {
    bool central = false;
    std::string witness;  // "generator @ monomial" on failure
};

template <class F>
std::vector<std::pair<std::string, std::vector<Token>>> center_generator_words(int n) {
    std::vector<std::pair<std::string, std::vector<Token>>> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back({"t_" + std::to_string(i), {Token::t(i)}});
    gens.push_back({"t_pi", {Token::pi(1)}});
    gens.push_back({"t_pi^-1", {Token::pi(-1)}});
    gens.push_back({"x_eps1", {Token::x(eps(n, 1))}});
    return gens;
}

template <class F>
CentralityResult is_central(const DahaRep<F>& rep, const DahaElement<typename F::K>& cand,
                            int bound) {
    using K = typename F::K;
    const int n = rep.rank();
    CentralityResult out;
    auto gens = center_generator_words<F>(n);
    for (const auto& [gname, gword] : gens) {
        bool ok = true;
        Weight bad;
        for_each_monomial(n, bound, [&](const Weight& mu) {
            if (!ok) return;
            LaurentPoly<K> f = rep.monomial(mu);
            LaurentPoly<K> a = rep.apply_element(cand, rep.apply_word(gword, f));
            LaurentPoly<K> b = rep.apply_word(gword, rep.apply_element(cand, f));
            if (!(a - b).is_zero()) {
                ok = false;
                bad = mu;
            }
        });
        if (!ok) {
            out.witness = gname + " @ x^(" + weight_str(bad) + ")";
            return out;
        }
    }
    out.central = true;
    return out;
}

// checked entry point at a specialization point
inline CentralityResult is_central_at(const DahaRep<CycField>& rep, const CenterCandidate& cand,
                                      int bound) {
    if (rep.field().spec.l != cand.l)
        fail(Err::InvalidSpecialization,
             "candidate built for l = " + std::to_string(cand.l) + " checked at order " +
                 std::to_string(rep.field().spec.l));
    return is_central(rep, specialize_element(cand.elt, rep.field().spec), bound);
}

// evidence for the spherical statement: o*c commutes with the o-compressed
// generators o g o on the window
template <class F>
CentralityResult spherical_center_evidence(const DahaRep<F>& rep,
                                           const DahaElement<typename F::K>& cand, int bound) {
    using K = typename F::K;
    const int n = rep.rank();
    CentralityResult out;
    auto sd = spherical_data(rep);
    DahaElement<K> oc = rep.multiply(sd.o, cand);
    auto gens = center_generator_words<F>(n);
    for (const auto& [gname, gword] : gens) {
        DahaWord<K> gw;
        gw.add(rep.field().one(), gword);
        DahaElement<K> g = rep.pbw_straighten(gw);
        DahaElement<K> ogo = rep.multiply(sd.o, rep.multiply(g, sd.o));
        bool ok = true;
        Weight bad;
        for_each_monomial(n, bound, [&](const Weight& mu) {
            if (!ok) return;
            LaurentPoly<K> f = rep.monomial(mu);
            LaurentPoly<K> a = rep.apply_element(oc, rep.apply_element(ogo, f));
            LaurentPoly<K> b = rep.apply_element(ogo, rep.apply_element(oc, f));
            if (!(a - b).is_zero()) {
                ok = false;
                bad = mu;
            }
        });
        if (!ok) {
            out.witness = "o-compressed " + gname + " @ x^(" + weight_str(bad) + ")";
            return out;
        }
    }
    out.central = true;
    return out;
}

} // namespace daha
