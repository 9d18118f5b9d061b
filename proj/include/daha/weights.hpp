#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "daha/errors.hpp"

namespace daha {

// Integer weight vector in X = ZZ^n.
using Weight = std::vector<std::int64_t>;

inline Weight zero_weight(int n) { return Weight(static_cast<std::size_t>(n), 0); }

inline Weight eps(int n, int i) {  // epsilon_i, 1-based
    Weight w = zero_weight(n);
    w[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

inline Weight alpha(int n, int i) {  // alpha_i = eps_i - eps_{i+1}, 1-based, i < n
    Weight w = zero_weight(n);
    w[static_cast<std::size_t>(i - 1)] = 1;
    w[static_cast<std::size_t>(i)] = -1;
    return w;
}

inline Weight omega(int n, int i) {  // omega_i = eps_1 + ... + eps_i
    Weight w = zero_weight(n);
    for (int j = 0; j < i; ++j) w[static_cast<std::size_t>(j)] = 1;
    return w;
}

inline Weight theta(int n) {  // eps_1 - eps_n
    Weight w = zero_weight(n);
    w[0] += 1;
    w[static_cast<std::size_t>(n - 1)] -= 1;
    return w;
}

inline Weight two_rho(int n) {  // (n-1, n-3, ..., 1-n)
    Weight w = zero_weight(n);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - 1 - 2 * i;
    return w;
}

inline std::int64_t dot(const Weight& x, const Weight& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Weight wsum(const Weight& x, const Weight& y) {
    Weight r = x;
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    return r;
}

inline Weight wneg(const Weight& x) {
    Weight r = x;
    for (auto& v : r) v = -v;
    return r;
}

inline Weight wscale(std::int64_t c, const Weight& x) {
    Weight r = x;
    for (auto& v : r) v *= c;
    return r;
}

inline bool is_dominant(const Weight& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

// lambda >= mu in dominance: lambda - mu a nonnegative sum of simple roots,
// i.e. equal total sum and all partial sums of the difference nonnegative.
inline bool dominance_geq(const Weight& lam, const Weight& mu) {
    std::int64_t acc = 0, total = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) total += lam[i] - mu[i];
    if (total != 0) return false;
    for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
        acc += lam[i] - mu[i];
        if (acc < 0) return false;
    }
    return true;
}

inline std::string weight_str(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

// Permutation of {0, .., n-1} in one-line notation: p[i] = image of i.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : p_(static_cast<std::size_t>(n)) {
        std::iota(p_.begin(), p_.end(), 0);
    }
    explicit Perm(std::vector<int> oneline) : p_(std::move(oneline)) {}

    static Perm transposition(int n, int i, int j) {  // 0-based
        Perm w(n);
        std::swap(w.p_[static_cast<std::size_t>(i)], w.p_[static_cast<std::size_t>(j)]);
        return w;
    }
    static Perm simple(int n, int i) { return transposition(n, i - 1, i); }  // s_i, 1-based
    static Perm cycle(int n) {  // i -> i+1 mod n
        Perm w(n);
        for (int i = 0; i < n; ++i) w.p_[static_cast<std::size_t>(i)] = (i + 1) % n;
        return w;
    }

    int n() const { return static_cast<int>(p_.size()); }
    int operator()(int i) const { return p_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& oneline() const { return p_; }

    Perm operator*(const Perm& o) const {  // composition: (this*o)(i) = this(o(i))
        Perm r;
        r.p_.resize(p_.size());
        for (std::size_t i = 0; i < p_.size(); ++i)
            r.p_[i] = p_[static_cast<std::size_t>(o.p_[i])];
        return r;
    }
    Perm inverse() const {
        Perm r;
        r.p_.resize(p_.size());
        for (std::size_t i = 0; i < p_.size(); ++i) r.p_[static_cast<std::size_t>(p_[i])] = static_cast<int>(i);
        return r;
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < p_.size(); ++i)
            if (p_[i] != static_cast<int>(i)) return false;
        return true;
    }

    // action on weights: (w.lam)_{w(i)} = lam_i
    Weight act(const Weight& lam) const {
        Weight r(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i) r[static_cast<std::size_t>(p_[i])] = lam[i];
        return r;
    }

    int length() const {  // inversion count
        int len = 0;
        for (std::size_t i = 0; i < p_.size(); ++i)
            for (std::size_t j = i + 1; j < p_.size(); ++j)
                if (p_[i] > p_[j]) ++len;
        return len;
    }

    auto operator<=>(const Perm& o) const = default;

    std::string str() const {  // one-line, 1-based
        std::string s = "[";
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p_[i] + 1);
        }
        return s + "]";
    }

private:
    std::vector<int> p_;
};

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// visit all exponent vectors in [-d, d]^n
template <class Fn>
void for_each_monomial(int n, int d, Fn&& fn) {
    Weight mu(static_cast<std::size_t>(n), -d);
    for (;;) {
        fn(const_cast<const Weight&>(mu));
        int i = 0;
        while (i < n) {
            if (mu[static_cast<std::size_t>(i)] < d) {
                ++mu[static_cast<std::size_t>(i)];
                break;
            }
            mu[static_cast<std::size_t>(i)] = -d;
            ++i;
        }
        if (i == n) return;
    }
}

// reduced word of a finite permutation as 1-based simple reflection indices
inline std::vector<int> perm_reduced_word(Perm w) {
    std::vector<int> word;
    const int n = w.n();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 1; i < n; ++i) {
            // left descent: w^{-1}(i-1) > w^{-1}(i) means s_i * w shorter... use length directly
            Perm sw = Perm::simple(n, i) * w;
            if (sw.length() < w.length()) {
                word.push_back(i);
                w = sw;
                progress = true;
                break;
            }
        }
        if (w.is_identity()) break;
    }
    return word;  // w = s_{word[0]} * s_{word[1]} * ...
}

} // namespace daha
