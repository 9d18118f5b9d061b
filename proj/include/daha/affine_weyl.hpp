#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "daha/weights.hpp"

namespace daha {

// Element w * tau_lam of the extended affine Weyl group Sigma_n ⋉ X, with
// group law (w, lam)(w', lam') = (w w', w'^{-1} lam + lam').
struct ExtAffineElt {
    Perm w;
    Weight lam;

    static ExtAffineElt identity(int n) { return {Perm(n), zero_weight(n)}; }
    static ExtAffineElt translation(const Weight& mu) {
        return {Perm(static_cast<int>(mu.size())), mu};
    }
    static ExtAffineElt finite(const Perm& u) { return {u, zero_weight(u.n())}; }
    // s_0 = s_theta tau_{-theta}
    static ExtAffineElt s0(int n) {
        return {Perm::transposition(n, 0, n - 1), wneg(theta(n))};
    }
    static ExtAffineElt simple(int n, int i) {  // i in 0..n-1
        return i == 0 ? s0(n) : finite(Perm::simple(n, i));
    }
    // pi = c tau_{eps_n}, c the cycle i -> i+1
    static ExtAffineElt pi_elt(int n) { return {Perm::cycle(n), eps(n, n)}; }

    int n() const { return w.n(); }
    ExtAffineElt operator*(const ExtAffineElt& o) const {
        return {w * o.w, wsum(o.w.inverse().act(lam), o.lam)};
    }
    ExtAffineElt inverse() const {
        // (w, lam)^{-1} = (w^{-1}, -w(lam))
        return {w.inverse(), wneg(w.act(lam))};
    }
    bool operator==(const ExtAffineElt& o) const { return w == o.w && lam == o.lam; }

    // pi-power: class of the translation part in P = X/Y
    std::int64_t pi_class() const {
        std::int64_t s = 0;
        for (auto v : lam) s += v;
        return s;
    }

    std::string str() const { return w.str() + " tau(" + weight_str(lam) + ")"; }
};

// length: sum over positive roots alpha of |lam.alpha + [w(alpha) < 0]|
inline int aw_length(const ExtAffineElt& e) {
    const int n = e.n();
    std::int64_t len = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::int64_t pairing = e.lam[static_cast<std::size_t>(i)] - e.lam[static_cast<std::size_t>(j)];
            if (e.w(i) > e.w(j)) pairing += 1;
            len += std::llabs(pairing);
        }
    }
    return static_cast<int>(len);
}

// Independent inversion-counting oracle: enumerate affine roots alpha + m*delta
// (alpha finite, positive when m > 0 or m = 0 and alpha > 0) inside a window
// wide enough for e, and count those sent to negatives. Used by tests against
// aw_length.
inline int aw_inversions_bruteforce(const ExtAffineElt& e) {
    const int n = e.n();
    std::int64_t bound = 1;
    for (auto v : e.lam) bound += std::llabs(v);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            // alpha = eps_i - eps_j
            bool alpha_pos = i < j;
            for (std::int64_t m = alpha_pos ? 0 : 1; m <= bound; ++m) {
                // action: w tau_lam sends alpha + m delta to w(alpha) + (m - lam.alpha) delta
                std::int64_t m2 = m - (e.lam[static_cast<std::size_t>(i)] - e.lam[static_cast<std::size_t>(j)]);
                bool image_pos = m2 > 0 || (m2 == 0 && e.w(i) < e.w(j));
                if (!image_pos) ++count;
            }
        }
    }
    return count;
}

// word = s_{refl[0]} ... s_{refl[k-1]} * pi^{pi_power}
struct AffineWord {
    std::vector<int> refl;  // generator indices in 0..n-1
    std::int64_t pi_power = 0;
};

inline ExtAffineElt aw_eval(int n, const AffineWord& word) {
    ExtAffineElt e = ExtAffineElt::identity(n);
    for (int i : word.refl) e = e * ExtAffineElt::simple(n, i);
    ExtAffineElt p = word.pi_power >= 0 ? ExtAffineElt::pi_elt(n)
                                        : ExtAffineElt::pi_elt(n).inverse();
    for (std::int64_t j = 0; j < std::llabs(word.pi_power); ++j) e = e * p;
    return e;
}

// greedy left-descent reduced word; deterministic (smallest generator index)
inline AffineWord reduced_word(const ExtAffineElt& in) {
    const int n = in.n();
    AffineWord word;
    ExtAffineElt e = in;
    int len = aw_length(e);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < n; ++i) {
            ExtAffineElt se = ExtAffineElt::simple(n, i) * e;
            int l2 = aw_length(se);
            if (l2 < len) {
                word.refl.push_back(i);
                e = se;
                len = l2;
                found = true;
                break;
            }
        }
        if (!found) fail(Err::ConfigError, "no descent found on positive-length element");
    }
    word.pi_power = e.pi_class();
    // remaining element must be pi^a
    if (!(aw_eval(n, {{}, word.pi_power}) == e))
        fail(Err::ConfigError, "length-zero remainder is not a pi power");
    return word;
}

// ---------------------------------------------------------------------------
// Action on the x-token lattice X + ZZ*delta used when conjugating x_lam by
// group generators inside the DAHA: w acts on X, fixes delta;
// tau_mu: (lam, m) -> (lam, m + mu.lam); hence
// s_0:   (lam, m) -> (s_theta lam, m - theta.lam)
// pi:    (lam, m) -> (c lam, m + lam_n)

struct XToken {
    Weight lam;
    std::int64_t dexp = 0;  // coefficient of delta; x_delta carries the scalar q^{-2}
};

inline XToken xact(const ExtAffineElt& e, const XToken& x) {
    return {e.w.act(x.lam), x.dexp + dot(e.lam, x.lam)};
}

} // namespace daha
