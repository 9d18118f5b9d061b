#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "daha/daha_suites.hpp"
#include "daha/torus_ops.hpp"

namespace daha {

enum class SumConvention { Full, Coset };

// Difference operator with coefficient
//   prod_{alpha > 0, alpha.omega_i = 1} (t^2 x^{w(alpha)} - 1)/(x^{w(alpha)} - 1)
// and shift k_{2 w(omega_i)} per term. Full sum runs over all of Sigma_n,
// coset sum over Sigma_n / Stab(omega_i).
template <class F>
struct HCOperator {
    TorusOp<F> op;
    int index = 1;
    SumConvention convention = SumConvention::Full;
};

namespace detail {

// positive roots pairing to 1 with omega_i: eps_a - eps_b with a <= i < b (1-based)
inline std::vector<std::pair<int, int>> level_one_roots(int n, int i) {
    std::vector<std::pair<int, int>> roots;
    for (int a = 1; a <= i; ++a)
        for (int b = i + 1; b <= n; ++b) roots.push_back({a, b});
    return roots;
}

template <class F>
FracCoeff<typename F::K> hc_coeff(const F& field, int n, int i, const Perm& w) {
    using K = typename F::K;
    FracCoeff<K> acc(LaurentPoly<K>::constant(n, field.one()));
    for (auto [a, b] : level_one_roots(n, i)) {
        int wa = w(a - 1), wb = w(b - 1);  // 0-based images
        LaurentPoly<K> num(n);
        Weight e = zero_weight(n);
        e[static_cast<std::size_t>(wa)] = 1;
        e[static_cast<std::size_t>(wb)] = -1;
        num.add_term(e, field.t(2));
        num.add_term(zero_weight(n), -field.one());
        FracCoeff<K> factor =
            FracCoeff<K>(num) * FracCoeff<K>::inv_root_binomial(n, wa, wb, field.one());
        acc = acc * factor;
    }
    return acc;
}

} // namespace detail

template <class F>
HCOperator<F> hc_operator(const F& field, int n, int i,
                          SumConvention conv = SumConvention::Full) {
    using K = typename F::K;
    if (i < 1 || i > n) fail(Err::ConfigError, "hc_operator index out of range");
    HCOperator<F> out;
    out.index = i;
    out.convention = conv;
    out.op = TorusOp<F>(field, n);
    std::map<Weight, bool> seen;
    for (const auto& w : all_perms(n)) {
        Weight shift = wscale(2, w.act(omega(n, i)));
        if (conv == SumConvention::Coset) {
            if (!seen.emplace(shift, true).second) continue;  // one rep per coset
        }
        out.op.add_term(detail::hc_coeff(field, n, i, w), shift, Perm(n));
    }
    return out;
}

// apply expecting an exact symmetric Laurent result
template <class F>
LaurentPoly<typename F::K> hc_apply(const HCOperator<F>& L,
                                    const LaurentPoly<typename F::K>& f) {
    auto r = L.op.apply(f);
    if (!r.is_polynomial())
        fail(Err::NotOnVariety, "Macdonald operator left the Laurent ring on this input");
    return r.num();
}

// ---------------------------------------------------------------------------

template <class F>
Suite commuting_family_check(const F& field, int n, int action_degree = 3) {
    using K = typename F::K;
    Suite suite{"hc-commute", {}};
    std::vector<HCOperator<F>> ops;
    for (int i = 1; i <= n; ++i) ops.push_back(hc_operator(field, n, i));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            TorusOp<F> comm = ops[static_cast<std::size_t>(i)].op * ops[static_cast<std::size_t>(j)].op -
                              ops[static_cast<std::size_t>(j)].op * ops[static_cast<std::size_t>(i)].op;
            suite.check("symbolic [L_" + std::to_string(i + 1) + ", L_" + std::to_string(j + 1) + "] = 0",
                        comm.is_zero(), comm.is_zero() ? "" : comm.str().substr(0, 160));
        }
    }
    // action check on the monomial window
    bool ok = true;
    std::string witness;
    for_each_monomial(n, action_degree, [&](const Weight& mu) {
        if (!ok) return;
        auto f = LaurentPoly<K>::monomial(mu, field.one());
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n && ok; ++j) {
                auto a = ops[static_cast<std::size_t>(i)].op.apply(ops[static_cast<std::size_t>(j)].op.apply(f));
                auto b = ops[static_cast<std::size_t>(j)].op.apply(ops[static_cast<std::size_t>(i)].op.apply(f));
                if (!(a - b).is_zero()) {
                    ok = false;
                    witness = "x^(" + weight_str(mu) + ") at (i,j)=(" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")";
                }
            }
        }
    });
    suite.check("action commutativity on window", ok, witness);
    return suite;
}

// mutation control: dropping one summand of L_1 breaks commutativity with
// some member of the family (for n = 2 the witness is L_1 itself, since L_2
// is a central total shift there)
template <class F>
bool hc_mutation_breaks(const F& field, int n) {
    if (n < 2) return false;
    HCOperator<F> L1 = hc_operator(field, n, 1);
    TorusOp<F> broken(field, n);
    bool dropped = false;
    for (const auto& [k, c] : L1.op.terms()) {
        if (!dropped) {
            dropped = true;
            continue;
        }
        broken.add_term(c, k.shift, k.perm);
    }
    for (int j = 1; j <= n; ++j) {
        HCOperator<F> Lj = hc_operator(field, n, j);
        TorusOp<F> comm = broken * Lj.op - Lj.op * broken;
        if (!comm.is_zero()) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Macdonald polynomials as joint eigenfunctions: unitriangular solve over the
// dominance-ordered monomial symmetric basis against L(Omega_1).

template <class F>
struct MacdonaldResult {
    LaurentPoly<typename F::K> poly;       // P_lambda
    std::map<Weight, typename F::K> mexp;  // expansion in m_mu
    typename F::K eigenvalue;              // L(Omega_1) eigenvalue
};

namespace detail {

// dominant mu <= lam of the same degree
inline std::vector<Weight> dominance_below(int n, const Weight& lam) {
    std::vector<Weight> out;
    std::int64_t total = 0;
    for (auto v : lam) total += v;
    Weight cur(static_cast<std::size_t>(n), 0);
    std::int64_t lo = lam[static_cast<std::size_t>(n - 1)], hi = lam[0];
    std::function<void(int, std::int64_t, std::int64_t)> rec =
        [&](int pos, std::int64_t remaining, std::int64_t cap) {
            if (pos == n) {
                if (remaining == 0 && dominance_geq(lam, cur)) out.push_back(cur);
                return;
            }
            for (std::int64_t v = lo; v <= cap; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                std::int64_t rest = remaining - v;
                // remaining positions bounded by v each (dominant) and lo below
                if (rest < lo * (n - pos - 1) || rest > v * (n - pos - 1)) continue;
                rec(pos + 1, rest, v);
            }
        };
    rec(0, total, hi);
    return out;
}

// symmetric Laurent poly -> m-basis coefficients
template <class K>
std::map<Weight, K> m_expand(const LaurentPoly<K>& p) {
    std::map<Weight, K> out;
    for (const auto& [mu, c] : p.terms()) {
        if (is_dominant(mu)) out[mu] = c;
    }
    return out;
}

} // namespace detail

template <class F>
MacdonaldResult<F> macdonald_poly(const F& field, int n, const Weight& lam) {
    using K = typename F::K;
    if (!is_dominant(lam)) fail(Err::ConfigError, "macdonald_poly requires a dominant weight");
    HCOperator<F> L = hc_operator(field, n, 1);
    std::vector<Weight> basis = detail::dominance_below(n, lam);
    std::sort(basis.begin(), basis.end());
    // matrix of L on m_mu, and diagonal eigenvalues
    std::map<Weight, std::map<Weight, K>> A;
    for (const auto& mu : basis) {
        auto img = hc_apply(L, monomial_symmetric<K>(field, n, mu));
        auto exp = detail::m_expand(img);
        // sanity: the image must stay in the span of the basis
        LaurentPoly<K> rebuilt(n);
        for (const auto& [nu, c] : exp) rebuilt = rebuilt + monomial_symmetric<K>(field, n, nu).scale(c);
        if (!(rebuilt == img))
            fail(Err::ConfigError, "Macdonald operator image not symmetric on m-basis");
        A[mu] = std::move(exp);
    }
    K dlam = A[lam].count(lam) ? A[lam][lam] : field.zero();
    std::map<Weight, K> coeff;
    coeff[lam] = field.one();
    std::map<Weight, bool> known;
    known[lam] = true;
    bool progress = true;
    while (known.size() < basis.size() && progress) {
        progress = false;
        for (const auto& mu : basis) {
            if (known.count(mu)) continue;
            // c_mu (d_mu - d_lam) = -sum_{nu != mu} A[mu-row? ...]
            // the eigen equation row for m_mu: sum_nu A[nu][mu-entry]...
            // L(P) = sum_nu c_nu L(m_nu) = sum_nu c_nu sum_rho A[nu][rho] m_rho
            // coefficient of m_mu: sum_nu c_nu A[nu][mu] = d_lam c_mu
            bool ready = true;
            K acc = field.zero();
            for (const auto& nu : basis) {
                if (nu == mu) continue;
                auto it = A[nu].find(mu);
                if (it == A[nu].end() || it->second.is_zero()) continue;
                if (!known.count(nu)) {
                    ready = false;
                    break;
                }
                acc = acc + coeff[nu] * it->second;
            }
            if (!ready) continue;
            K dmu = A[mu].count(mu) ? A[mu][mu] : field.zero();
            K gap = dmu - dlam;
            if (gap.is_zero()) {
                if (!acc.is_zero())
                    fail(Err::DegenerateSpectrum,
                         "vanishing eigenvalue gap at m_(" + weight_str(mu) + ")");
                coeff[mu] = field.zero();
            } else {
                coeff[mu] = (-acc) * gap.inverse();
            }
            known[mu] = true;
            progress = true;
        }
    }
    if (known.size() < basis.size())
        fail(Err::DegenerateSpectrum, "triangular solve did not complete");
    MacdonaldResult<F> out;
    out.eigenvalue = dlam;
    LaurentPoly<K> P(n);
    for (const auto& [mu, c] : coeff) {
        if (c.is_zero()) continue;
        P = P + monomial_symmetric<K>(field, n, mu).scale(c);
        out.mexp[mu] = c;
    }
    out.poly = std::move(P);
    return out;
}

// residual of the eigen equation for certification
template <class F>
bool is_joint_eigenfunction(const F& field, int n, const MacdonaldResult<F>& P,
                            std::vector<typename F::K>* eigenvalues = nullptr) {
    using K = typename F::K;
    for (int i = 1; i <= n; ++i) {
        HCOperator<F> L = hc_operator(field, n, i);
        LaurentPoly<K> img = hc_apply(L, P.poly);
        // img must be c * P: find c from any term of P
        if (P.poly.is_zero()) return false;
        auto it = P.poly.terms().begin();
        auto jt = img.terms().find(it->first);
        K c = (jt == img.terms().end()) ? field.zero() : jt->second * it->second.inverse();
        if (!(img - P.poly.scale(c)).is_zero()) return false;
        if (eigenvalues) eigenvalues->push_back(c);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Spherical side against the Harish-Chandra side: Psi'(sum_w y_{w(omega_i)})
// acts on symmetric polynomials as a constant kappa times the image of
// L(Omega_i) under the parameter flip (q, t) -> (q^{-1}, t^{-1}) — the
// translation operators land in k_{-2 lam}, so the y-side realizes the
// Fourier-dual of the x-side family. kappa is fixed on f = 1 and must
// persist across the test set.

// dual member: coefficients with t^{-2} and shifts k_{-2 w(omega_i)}
template <class F>
TorusOp<F> hc_operator_dual(const F& field, int n, int i) {
    using K = typename F::K;
    TorusOp<F> op(field, n);
    for (const auto& w : all_perms(n)) {
        FracCoeff<K> acc(LaurentPoly<K>::constant(n, field.one()));
        for (auto [a, b] : detail::level_one_roots(n, i)) {
            int wa = w(a - 1), wb = w(b - 1);
            LaurentPoly<K> num(n);
            Weight e = zero_weight(n);
            e[static_cast<std::size_t>(wa)] = 1;
            e[static_cast<std::size_t>(wb)] = -1;
            num.add_term(e, field.t(-2));
            num.add_term(zero_weight(n), -field.one());
            acc = acc * (FracCoeff<K>(num) * FracCoeff<K>::inv_root_binomial(n, wa, wb, field.one()));
        }
        op.add_term(acc, wscale(-2, w.act(omega(n, i))), Perm(n));
    }
    return op;
}

template <class F>
struct HcCompareResult {
    bool consistent = false;
    typename F::K kappa;
    std::string witness;
};

template <class F>
HcCompareResult<F> spherical_hc_compare(const DahaRep<F>& rep, int i,
                                        const std::vector<LaurentPoly<typename F::K>>& tests) {
    using K = typename F::K;
    const F& f = rep.field();
    const int n = rep.rank();
    HcCompareResult<F> out;
    DahaElement<K> ydiag;
    for (const auto& w : all_perms(n)) {
        PBWKey key{zero_weight(n), Perm(n), w.act(omega(n, i))};
        auto [it, fresh] = ydiag.emplace(key, f.one());
        if (!fresh) it->second = it->second + f.one();
    }
    TorusOp<F> L = hc_operator_dual(f, n, i);
    LaurentPoly<K> one = LaurentPoly<K>::constant(n, f.one());
    LaurentPoly<K> lhs0 = rep.apply_element(ydiag, one);
    auto rhs0f = L.apply(one);
    if (!rhs0f.is_polynomial()) {
        out.witness = "dual operator not polynomial on 1";
        return out;
    }
    LaurentPoly<K> rhs0 = rhs0f.num();
    // both are scalars
    auto scalar_of = [&](const LaurentPoly<K>& p) -> K {
        if (p.is_zero()) return f.zero();
        auto it = p.terms().find(zero_weight(n));
        return it == p.terms().end() ? f.zero() : it->second;
    };
    K l0 = scalar_of(lhs0), r0 = scalar_of(rhs0);
    if (r0.is_zero()) {
        out.witness = "L(1) vanished";
        return out;
    }
    out.kappa = l0 * r0.inverse();
    for (const auto& test : tests) {
        LaurentPoly<K> lhs = rep.apply_element(ydiag, test);
        auto rf = L.apply(test);
        if (!rf.is_polynomial()) {
            out.witness = "dual operator not polynomial on " + test.str().substr(0, 80);
            return out;
        }
        LaurentPoly<K> rhs = rf.num().scale(out.kappa);
        if (!(lhs - rhs).is_zero()) {
            out.witness = "mismatch on " + test.str().substr(0, 120);
            return out;
        }
    }
    out.consistent = true;
    return out;
}

// x-side of the comparison: Psi'(sum_w x_{w(omega_i)}) is multiplication by
// the full orbit sum of x^{omega_i}
template <class F>
bool spherical_x_side_check(const DahaRep<F>& rep, int i,
                            const LaurentPoly<typename F::K>& test) {
    using K = typename F::K;
    const F& f = rep.field();
    const int n = rep.rank();
    DahaElement<K> xdiag;
    LaurentPoly<K> msum(n);
    for (const auto& w : all_perms(n)) {
        PBWKey key{w.act(omega(n, i)), Perm(n), zero_weight(n)};
        auto [it, fresh] = xdiag.emplace(key, f.one());
        if (!fresh) it->second = it->second + f.one();
        msum.add_term(w.act(omega(n, i)), f.one());
    }
    return (rep.apply_element(xdiag, test) - msum * test).is_zero();
}

} // namespace daha
