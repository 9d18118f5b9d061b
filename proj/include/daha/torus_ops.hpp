#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/frac.hpp"
#include "daha/scalars.hpp"

namespace daha {

// Element of the difference-reflection operator algebra on Laurent
// polynomials in x_1..x_n: finite sum of terms f(x) * k_lam * w in normal
// form (terms merged on equal (lam, w)). The shift part acts by
// k_lam(x^mu) = q^{lam.mu} x^mu, the permutation part by w(x^mu) = x^{w mu},
// and f multiplies.
template <class F>
class TorusOp {
public:
    using K = typename F::K;
    using Coeff = FracCoeff<K>;
    struct Key {
        Weight shift;
        Perm perm;
        bool operator<(const Key& o) const {
            if (shift != o.shift) return shift < o.shift;
            return perm.oneline() < o.perm.oneline();
        }
        bool operator==(const Key& o) const = default;
    };
    using Terms = std::map<Key, Coeff>;

    TorusOp() = default;
    TorusOp(const F& field, int n) : field_(&field), n_(n) {}

    static TorusOp identity(const F& field, int n) {
        TorusOp op(field, n);
        op.add_term(LaurentPoly<K>::constant(n, field.one()), zero_weight(n), Perm(n));
        return op;
    }
    static TorusOp shift(const F& field, int n, const Weight& lam) {  // k_lam
        TorusOp op(field, n);
        op.add_term(LaurentPoly<K>::constant(n, field.one()), lam, Perm(n));
        return op;
    }
    static TorusOp reflection(const F& field, int n, const Perm& w) {
        TorusOp op(field, n);
        op.add_term(LaurentPoly<K>::constant(n, field.one()), zero_weight(n), w);
        return op;
    }
    static TorusOp multiplication(const F& field, const LaurentPoly<K>& f) {
        TorusOp op(field, f.nvars());
        op.add_term(f, zero_weight(f.nvars()), Perm(f.nvars()));
        return op;
    }
    static TorusOp scalar(const F& field, int n, const K& c) {
        TorusOp op(field, n);
        op.add_term(LaurentPoly<K>::constant(n, c), zero_weight(n), Perm(n));
        return op;
    }

    int nvars() const { return n_; }
    const F& field() const { return *field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(Coeff c, Weight lam, Perm w) {
        if (c.is_zero()) return;
        Key k{std::move(lam), std::move(w)};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_term(LaurentPoly<K> f, Weight lam, Perm w) {
        add_term(Coeff(std::move(f)), std::move(lam), std::move(w));
    }

    TorusOp operator+(const TorusOp& o) const {
        TorusOp r = *this;
        if (!r.field_) { r.field_ = o.field_; r.n_ = o.n_; }
        for (const auto& [k, c] : o.terms_) r.add_term(c, k.shift, k.perm);
        return r;
    }
    TorusOp operator-() const {
        TorusOp r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    TorusOp operator-(const TorusOp& o) const { return *this + (-o); }

    TorusOp scale(const K& c) const {
        TorusOp r(*field_, n_);
        Coeff cc(LaurentPoly<K>::constant(n_, c));
        for (const auto& [k, f] : terms_) r.add_term(f * cc, k.shift, k.perm);
        return r;
    }

    // (f k_lam w)(g k_mu v) = f * subst_lam(w(g)) * k_{lam + w(mu)} * (w v)
    TorusOp operator*(const TorusOp& o) const {
        TorusOp r(*field_, n_);
        for (const auto& [k1, f] : terms_) {
            for (const auto& [k2, g] : o.terms_) {
                Coeff gg = g.permute(k1.perm).shift_subst(*field_, k1.shift);
                r.add_term(f * gg, wsum(k1.shift, k1.perm.act(k2.shift)), k1.perm * k2.perm);
            }
        }
        return r;
    }

    bool operator==(const TorusOp& o) const { return terms_ == o.terms_; }

    // apply to a rational function
    Coeff apply(const Coeff& g) const {
        Coeff acc;
        for (const auto& [k, f] : terms_) {
            Coeff h = g.permute(k.perm).shift_subst(*field_, k.shift);
            acc = acc + f * h;
        }
        return acc;
    }
    Coeff apply(const LaurentPoly<K>& g) const { return apply(Coeff(g)); }

    // apply expecting an exact Laurent result
    LaurentPoly<K> apply_poly(const LaurentPoly<K>& g) const {
        Coeff r = apply(g);
        if (!r.is_polynomial())
            fail(Err::NotOnVariety, "operator application left the polynomial ring");
        return r.num();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) s += "  +  ";
            first = false;
            s += "[" + c.str() + "] k(" + weight_str(k.shift) + ") " + k.perm.str();
        }
        return s;
    }

private:
    const F* field_ = nullptr;
    int n_ = 0;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Demazure-Lusztig layer. Generator index i runs over 0..n-1; index 0 is the
// affine reflection s_0 = s_theta tau_{-theta}, realized as s_theta k_{2theta}
// with divided-difference denominator 1 - q^2 x^{-theta}.

template <class F>
struct DLGen {
    using K = typename F::K;
    int n;
    bool affine;      // index 0
    Perm refl;        // underlying finite permutation
    Weight op_shift;  // normal-form shift of the reflection operator term
    Weight gamma;     // reflection root: d(mu) = gamma . mu
    Weight delta_dir; // denominator direction: 1 - c x^{delta_dir}
    K c;              // denominator scalar

    static DLGen make(const F& field, int n, int i) {
        DLGen g;
        g.n = n;
        g.affine = (i == 0);
        if (i >= 1) {
            g.refl = Perm::simple(n, i);
            g.op_shift = zero_weight(n);
            g.gamma = alpha(n, i);
            g.delta_dir = alpha(n, i);
            g.c = field.one();
        } else {
            Perm sth = Perm::transposition(n, 0, n - 1);
            g.refl = sth;
            g.op_shift = wscale(-2, theta(n));
            g.gamma = theta(n);
            g.delta_dir = wneg(theta(n));
            g.c = field.q(2);
        }
        return g;
    }

    // s_i as an operator (for i = 0 this includes the k_{2 theta} shift)
    TorusOp<F> refl_op(const F& field) const {
        TorusOp<F> op(field, n);
        op.add_term(LaurentPoly<K>::constant(n, field.one()), op_shift, refl);
        return op;
    }

    // reflection applied to a single monomial: scalar * x^{refl(mu)}
    std::pair<K, Weight> refl_mono(const F& field, const Weight& mu) const {
        Weight img = refl.act(mu);
        // scalar q^{op_shift . refl(mu)}... the term (1, op_shift, refl) acts as
        // x^mu -> q^{op_shift . refl(mu)} x^{refl(mu)}
        return {field.q(dot(op_shift, img)), img};
    }
};

template <class F>
typename F::K pow_scalar(const F& field, const typename F::K& c, std::int64_t e) {
    using K = typename F::K;
    if (e == 0) return field.one();
    K base = e > 0 ? c : c.inverse();
    std::uint64_t n = static_cast<std::uint64_t>(e > 0 ? e : -e);
    K acc = field.one();
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

// exact divided difference (f - s_i f) / (1 - c x^delta); stays Laurent
template <class F>
LaurentPoly<typename F::K> dd_apply_gen(const F& field, const DLGen<F>& g,
                                        const LaurentPoly<typename F::K>& f) {
    using K = typename F::K;
    LaurentPoly<K> out(g.n);
    for (const auto& [mu, coef] : f.terms()) {
        std::int64_t d = dot(g.gamma, mu);
        // s(x^mu) = c^d x^{mu - d*gamma} in the affine case (delta = -gamma),
        // x^{mu - d*gamma} in the classical one (delta = gamma, c = 1); both
        // read (x^mu - c^kk x^{mu + kk*delta}) with kk as below
        std::int64_t kk = g.affine ? d : -d;
        // (x^mu - c^kk x^{mu+kk delta})/(1 - c x^delta):
        //   kk >= 0: sum_{j=0}^{kk-1} c^j x^{mu + j delta}
        //   kk < 0: -sum_{j=kk}^{-1} c^j x^{mu + j delta}
        if (kk >= 0) {
            for (std::int64_t j = 0; j < kk; ++j)
                out.add_term(wsum(mu, wscale(j, g.delta_dir)), coef * pow_scalar(field, g.c, j));
        } else {
            for (std::int64_t j = kk; j <= -1; ++j)
                out.add_term(wsum(mu, wscale(j, g.delta_dir)), -(coef * pow_scalar(field, g.c, j)));
        }
    }
    return out;
}

// spec-facing entry point: divided difference for generator index i (0..n-1)
template <class F>
LaurentPoly<typename F::K> dd_apply(const F& field, int n, int i,
                                    const LaurentPoly<typename F::K>& f) {
    return dd_apply_gen(field, DLGen<F>::make(field, n, i), f);
}

} // namespace daha
