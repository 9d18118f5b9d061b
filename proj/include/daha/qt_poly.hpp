#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "daha/errors.hpp"

namespace daha {

using Int = mpz_class;
using Rat = mpq_class;

// Monomial q^a t^b. Order: degree-lex with q before t.
struct QTMono {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const QTMono&, const QTMono&) = default;
};

inline int mono_cmp(const QTMono& x, const QTMono& y) {
    std::int64_t dx = x.a + x.b, dy = y.a + y.b;
    if (dx != dy) return dx < dy ? -1 : 1;
    if (x.a != y.a) return x.a < y.a ? -1 : 1;
    if (x.b != y.b) return x.b < y.b ? -1 : 1;
    return 0;
}

// Sparse integer Laurent polynomial in q, t. Terms kept sorted descending in
// the monomial order, no zero coefficients.
class QTPoly {
public:
    struct Term {
        QTMono m;
        Int c;
    };

    QTPoly() = default;
    explicit QTPoly(long v) {
        if (v != 0) terms_.push_back({{0, 0}, Int(v)});
    }
    explicit QTPoly(const Int& v) {
        if (v != 0) terms_.push_back({{0, 0}, v});
    }
    static QTPoly mono(std::int64_t a, std::int64_t b, Int c = Int(1)) {
        QTPoly p;
        if (c != 0) p.terms_.push_back({{a, b}, std::move(c)});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].m == QTMono{0, 0} && terms_[0].c == 1;
    }
    // Single term?
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    const Term& lead() const { return terms_.front(); }

    QTPoly operator-() const;
    QTPoly operator+(const QTPoly& o) const;
    QTPoly operator-(const QTPoly& o) const;
    QTPoly operator*(const QTPoly& o) const;
    bool operator==(const QTPoly& o) const;

    QTPoly mul_mono(std::int64_t a, std::int64_t b, const Int& c) const;
    QTPoly pow(unsigned e) const;

    // Exact division; fails with ZeroDenominator if d == 0, returns false if
    // not divisible.
    static bool div_exact(const QTPoly& p, const QTPoly& d, QTPoly& quot);

    Int int_content() const;           // gcd of coefficients, >= 0
    QTMono mono_gcd() const;           // componentwise min exponent
    void shift(std::int64_t da, std::int64_t db);  // multiply by q^da t^db

    // Substitute q -> q^e (used by parameter flips q -> q^{-1}).
    QTPoly sub_q_pow(int e) const;
    QTPoly sub_t_pow(int e) const;

    std::string str() const;

    static QTPoly gcd(const QTPoly& x, const QTPoly& y);

    friend int poly_cmp(const QTPoly& x, const QTPoly& y);

    static QTPoly q() { return mono(1, 0); }
    static QTPoly t() { return mono(0, 1); }

private:
    std::vector<Term> terms_;
    friend class QTPolyBuilder;
};

// Accumulates terms in any order, then normalizes once.
class QTPolyBuilder {
public:
    void add(QTMono m, Int c) { terms_.push_back({m, std::move(c)}); }
    QTPoly build();

private:
    std::vector<QTPoly::Term> terms_;
};

int poly_cmp(const QTPoly& x, const QTPoly& y);

} // namespace daha
