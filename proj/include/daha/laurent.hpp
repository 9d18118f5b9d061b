#pragma once

#include <map>
#include <string>

#include "daha/weights.hpp"

namespace daha {

// Multivariate Laurent polynomial in x_1..x_n with exact coefficients.
// Canonical iteration order: lex on exponent vectors (std::map).
template <class K>
class LaurentPoly {
public:
    using Map = std::map<Weight, K>;

    LaurentPoly() = default;
    explicit LaurentPoly(int n) : n_(n) {}

    static LaurentPoly monomial(const Weight& mu, K c) {
        LaurentPoly p(static_cast<int>(mu.size()));
        if (!c.is_zero()) p.m_.emplace(mu, std::move(c));
        return p;
    }
    static LaurentPoly constant(int n, K c) { return monomial(zero_weight(n), std::move(c)); }

    int nvars() const { return n_; }
    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }

    void add_term(const Weight& mu, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = m_.emplace(mu, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        if (r.n_ == 0) r.n_ = o.n_;
        for (const auto& [mu, c] : o.m_) r.add_term(mu, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [mu, c] : r.m_) c = -c;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r(n_ ? n_ : o.n_);
        for (const auto& [mu, c] : m_)
            for (const auto& [nu, d] : o.m_) r.add_term(wsum(mu, nu), c * d);
        return r;
    }
    LaurentPoly scale(const K& c) const {
        LaurentPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [mu, d] : m_) r.add_term(mu, d * c);
        return r;
    }
    LaurentPoly mul_mono(const Weight& nu, const K& c) const {
        LaurentPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [mu, d] : m_) r.m_.emplace(wsum(mu, nu), d * c);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return m_ == o.m_; }

    // substitution x_i -> q^{lam_i} x_i realized through a scalar-per-term map
    template <class ShiftFn>
    LaurentPoly map_terms(ShiftFn&& f) const {  // f(Weight) -> K multiplier
        LaurentPoly r(n_);
        for (const auto& [mu, c] : m_) r.add_term(mu, c * f(mu));
        return r;
    }
    // variable permutation: x^mu -> x^{w(mu)}
    LaurentPoly permute(const Perm& w) const {
        LaurentPoly r(n_);
        for (const auto& [mu, c] : m_) r.m_.emplace(w.act(mu), c);
        return r;
    }

    // invariance under all adjacent transpositions
    bool is_symmetric() const {
        for (int i = 1; i < n_; ++i)
            if (!(permute(Perm::simple(n_, i)) == *this)) return false;
        return true;
    }

    std::string str() const {
        if (m_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [mu, c] : m_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ")";
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (mu[i] != 0) {
                    s += "*x" + std::to_string(i + 1);
                    if (mu[i] != 1) s += "^" + std::to_string(mu[i]);
                }
            }
        }
        return s;
    }

private:
    int n_ = 0;
    Map m_;
};

// monomial symmetric function m_mu (mu dominant): sum over the orbit
template <class K, class F>
LaurentPoly<K> monomial_symmetric(const F& field, int n, const Weight& mu) {
    LaurentPoly<K> r(n);
    std::map<Weight, bool> seen;
    for (const auto& w : all_perms(n)) {
        Weight nu = w.act(mu);
        if (seen.emplace(nu, true).second) r.add_term(nu, field.one());
    }
    return r;
}

} // namespace daha
