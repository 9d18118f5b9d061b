#pragma once

#include <map>
#include <string>

#include "daha/laurent.hpp"

namespace daha {

// Rational function in x_1..x_n whose denominator is a product of binomials
// x_a - c*x_b (a < b, c != 0). Every denominator in this library has that
// shape: the localization is at the set {x^alpha - t^{2j} q^m}. Reduced form
// (numerator divisible by no denominator factor) is unique, so equality is
// structural.
template <class K>
class FracCoeff {
public:
    struct Factor {
        int a;
        int b;
        K c;
        bool operator<(const Factor& o) const {
            if (a != o.a) return a < o.a;
            if (b != o.b) return b < o.b;
            return scalar_cmp(c, o.c) < 0;
        }
        bool operator==(const Factor& o) const { return a == o.a && b == o.b && c == o.c; }
    };
    using Den = std::map<Factor, int>;

    FracCoeff() = default;
    explicit FracCoeff(LaurentPoly<K> num) : num_(std::move(num)) {}
    FracCoeff(LaurentPoly<K> num, Den den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero()) den_.clear();
        reduce();
    }

    const LaurentPoly<K>& num() const { return num_; }
    const Den& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    static LaurentPoly<K> factor_poly(int n, const Factor& f) {
        K one = f.c * f.c.inverse();
        LaurentPoly<K> p(n);
        Weight xa = zero_weight(n), xb = zero_weight(n);
        xa[static_cast<std::size_t>(f.a)] = 1;
        xb[static_cast<std::size_t>(f.b)] = 1;
        p.add_term(xa, one);
        p.add_term(xb, -f.c);
        return p;
    }

    // 1 / (x^{eps_a - eps_b} - s), s != 0, a != b (0-based indices).
    static FracCoeff inv_root_binomial(int n, int a, int b, const K& s) {
        K one = s * s.inverse();
        LaurentPoly<K> num(n);
        Den d;
        Weight xb = zero_weight(n);
        xb[static_cast<std::size_t>(b)] = 1;
        if (a < b) {
            // x_a/x_b - s = (x_a - s x_b)/x_b
            num.add_term(xb, one);
            d[Factor{a, b, s}] = 1;
        } else {
            // a > b: x_a - s x_b = -s (x_b - s^{-1} x_a)
            K sinv = s.inverse();
            num.add_term(xb, -sinv);
            d[Factor{b, a, sinv}] = 1;
        }
        return FracCoeff(std::move(num), std::move(d));
    }

    FracCoeff operator-() const {
        FracCoeff r = *this;
        r.num_ = -r.num_;
        return r;
    }

    FracCoeff operator*(const FracCoeff& o) const {
        if (is_zero() || o.is_zero())
            return FracCoeff(LaurentPoly<K>(num_.nvars() ? num_.nvars() : o.num_.nvars()));
        Den d = den_;
        for (const auto& [f, m] : o.den_) d[f] += m;
        return FracCoeff(num_ * o.num_, std::move(d));
    }

    FracCoeff operator+(const FracCoeff& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        int n = num_.nvars();
        Den d = den_;
        for (const auto& [f, m] : o.den_) {
            auto it = d.find(f);
            if (it == d.end()) d[f] = m;
            else it->second = std::max(it->second, m);
        }
        LaurentPoly<K> lhs = num_, rhs = o.num_;
        for (const auto& [f, m] : d) {
            int have = 0;
            if (auto it = den_.find(f); it != den_.end()) have = it->second;
            for (int j = have; j < m; ++j) lhs = lhs * factor_poly(n, f);
            have = 0;
            if (auto it = o.den_.find(f); it != o.den_.end()) have = it->second;
            for (int j = have; j < m; ++j) rhs = rhs * factor_poly(n, f);
        }
        return FracCoeff(lhs + rhs, std::move(d));
    }
    FracCoeff operator-(const FracCoeff& o) const { return *this + (-o); }

    bool operator==(const FracCoeff& o) const { return num_ == o.num_ && den_ == o.den_; }

    // variable permutation; factors renormalized to a < b
    FracCoeff permute(const Perm& w) const {
        FracCoeff r;
        r.num_ = num_.permute(w);
        for (const auto& [f, m] : den_) {
            int a = w(f.a), b = w(f.b);
            K c = f.c;
            if (a > b) {
                // x_a - c x_b = -c (x_b - c^{-1} x_a); fold (-c)^{-m} into num
                std::swap(a, b);
                K u = -(c.inverse());
                K acc = u;
                for (int j = 1; j < m; ++j) acc = acc * u;
                r.num_ = r.num_.scale(acc);
                c = c.inverse();
            }
            r.den_[Factor{a, b, c}] += m;
        }
        r.reduce();
        return r;
    }

    // substitution x_i -> q^{lam_i} x_i (the action of a shift k_lam)
    template <class F>
    FracCoeff shift_subst(const F& field, const Weight& lam) const {
        FracCoeff r;
        r.num_ = num_.map_terms([&](const Weight& mu) { return field.q(dot(lam, mu)); });
        K ucorr = field.one();
        for (const auto& [f, m] : den_) {
            // x_a - c x_b -> q^{lam_a} (x_a - c q^{lam_b - lam_a} x_b)
            K c = f.c * field.q(lam[static_cast<std::size_t>(f.b)] - lam[static_cast<std::size_t>(f.a)]);
            for (int j = 0; j < m; ++j) ucorr = ucorr * field.q(-lam[static_cast<std::size_t>(f.a)]);
            r.den_[Factor{f.a, f.b, c}] += m;
        }
        r.num_ = r.num_.scale(ucorr);
        r.reduce();
        return r;
    }

    std::string str() const {
        std::string s = num_.str();
        if (!den_.empty()) {
            s = "(" + s + ") / (";
            bool first = true;
            for (const auto& [f, m] : den_) {
                if (!first) s += " * ";
                first = false;
                s += "(x" + std::to_string(f.a + 1) + " - (" + f.c.str() + ")*x" +
                     std::to_string(f.b + 1) + ")";
                if (m > 1) s += "^" + std::to_string(m);
            }
            s += ")";
        }
        return s;
    }

    // exact division of p by (x_a - c x_b); false if not divisible
    static bool divide_binomial(const LaurentPoly<K>& p, const Factor& f, LaurentPoly<K>& quot) {
        const int n = p.nvars();
        const std::size_t ia = static_cast<std::size_t>(f.a), ib = static_cast<std::size_t>(f.b);
        // Split into lines mu = key + j*(eps_a - eps_b): terms on distinct
        // lines do not interact. On each line, division by (x_a - c x_b) is a
        // univariate synthetic division with exactness condition at the end.
        std::map<Weight, std::map<std::int64_t, K>> lines;
        for (const auto& [mu, coef] : p.terms()) {
            Weight key = mu;
            std::int64_t j = mu[ia];
            key[ib] += j;
            key[ia] = 0;
            lines[key][j] = coef;
        }
        LaurentPoly<K> q(n);
        for (const auto& [key, cs] : lines) {
            std::int64_t hi = cs.rbegin()->first, lo = cs.begin()->first;
            // c_j = d_{j-1} - c*d_j downward from j = hi (d_hi = 0); at the
            // bottom d_{lo-1} must be zero
            K d;  // current d_j, starts as d_hi = 0 (default-constructed zero)
            bool dset = false;
            for (std::int64_t j = hi; j >= lo; --j) {
                K cj;
                bool have = false;
                if (auto it = cs.find(j); it != cs.end()) {
                    cj = it->second;
                    have = true;
                }
                K dprev = (dset ? (have ? cj + f.c * d : f.c * d) : cj);
                if (j > lo || !dprev.is_zero()) {
                    if (j == lo) return false;  // nonzero d_{lo-1}: not divisible
                    // quotient term index j-1: x^{key + (j-1)(eps_a-eps_b) - eps_b}
                    Weight mu = key;
                    mu[ia] += j - 1;
                    mu[ib] += -(j - 1) - 1;
                    q.add_term(mu, dprev);
                }
                d = dprev;
                dset = true;
            }
        }
        quot = std::move(q);
        return true;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                LaurentPoly<K> quot(num_.nvars());
                if (!divide_binomial(num_, it->first, quot)) break;
                num_ = std::move(quot);
                --it->second;
            }
            if (it->second == 0) it = den_.erase(it);
            else ++it;
        }
    }

    LaurentPoly<K> num_;
    Den den_;
};

} // namespace daha
