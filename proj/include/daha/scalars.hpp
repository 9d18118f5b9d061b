#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "daha/qt_poly.hpp"

namespace daha {

// Reduced fraction over ZZ[q^{±1}, t^{±1}]. Canonical form: denominator is a
// true polynomial (no monomial factor), has positive leading coefficient in
// the degree-lex (q before t) order, and gcd(num, den) = 1 including integer
// content. Equality is structural.
class QTScalar {
public:
    QTScalar() = default;
    QTScalar(long v) : num_(v) {}
    QTScalar(const Int& v) : num_(v) {}
    QTScalar(QTPoly num, QTPoly den = QTPoly(1)) { normalize(std::move(num), std::move(den)); }

    static QTScalar q(std::int64_t e = 1) { return QTScalar(QTPoly::mono(e, 0)); }
    static QTScalar t(std::int64_t e = 1) { return QTScalar(QTPoly::mono(0, e)); }
    static QTScalar qt(std::int64_t a, std::int64_t b) { return QTScalar(QTPoly::mono(a, b)); }
    static QTScalar rational(const Int& p, const Int& q) { return QTScalar(QTPoly(p), QTPoly(q)); }

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QTScalar operator+(const QTScalar& o) const;
    QTScalar operator-(const QTScalar& o) const;
    QTScalar operator*(const QTScalar& o) const;
    QTScalar operator/(const QTScalar& o) const;
    QTScalar operator-() const;
    QTScalar inverse() const;
    bool operator==(const QTScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QTScalar& o) const { return !(*this == o); }

    // Parameter flips used by the Fourier and IM symmetries.
    QTScalar flip_q() const { return QTScalar(num_.sub_q_pow(-1), den_.sub_q_pow(-1)); }
    QTScalar flip_t() const { return QTScalar(num_.sub_t_pow(-1), den_.sub_t_pow(-1)); }

    std::string str() const;

    friend int scalar_cmp(const QTScalar& x, const QTScalar& y) {
        int c = poly_cmp(x.num_, y.num_);
        if (c != 0) return c;
        return poly_cmp(x.den_, y.den_);
    }

private:
    void normalize(QTPoly num, QTPoly den);

    QTPoly num_;            // zero scalar: num = 0, den = 1
    QTPoly den_ = QTPoly(1);
};

QTScalar qt_normalize(const QTPoly& num, const QTPoly& den);

// ---------------------------------------------------------------------------

// Element of QQ[e]/Phi_h(e), e a primitive h-th root of unity; coefficient
// vector has degree < phi(h).
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(unsigned h, std::vector<Rat> coeffs);
    static CycScalar zero(unsigned h) { return CycScalar(h, {}); }
    static CycScalar one(unsigned h) { return from_rational(h, Rat(1)); }
    static CycScalar from_rational(unsigned h, const Rat& r);
    static CycScalar root_pow(unsigned h, std::int64_t e);  // e^{e mod h}

    unsigned conductor() const { return h_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar operator/(const CycScalar& o) const;
    CycScalar operator-() const;
    CycScalar inverse() const;  // extended Euclid mod Phi_h
    // rationals (degree < 1) compare equal across conductors
    bool operator==(const CycScalar& o) const {
        return c_ == o.c_ && (h_ == o.h_ || c_.size() <= 1);
    }
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    std::string str() const;

    friend int scalar_cmp(const CycScalar& x, const CycScalar& y);

    // Phi_h as integer coefficient vector (monic), cached per conductor.
    static const std::vector<Int>& cyclotomic(unsigned h);

private:
    unsigned h_ = 1;
    std::vector<Rat> c_;  // zero scalar: empty; trailing zeros trimmed
};

CycScalar cyc_invert(const CycScalar& x);

// ---------------------------------------------------------------------------

// A root-of-unity point of the curve q^k = t^m: u is a primitive h-th root of
// unity with h = l*m, and q -> tau = u^m (order l), t -> zeta = u^k.
struct SpecMap {
    unsigned l = 1;      // multiplicative order of tau
    std::int64_t k = 0;  // c = k/m with gcd(k, m) = 1, m > 0
    std::int64_t m = 1;
    std::int64_t a = 0;  // Bezout pair: a*k + b*m = 1
    std::int64_t b = 0;
    unsigned h = 1;      // conductor of u

    SpecMap(unsigned l, std::int64_t k, std::int64_t m);

    CycScalar u_pow(std::int64_t e) const { return CycScalar::root_pow(h, e); }
    CycScalar tau(std::int64_t e = 1) const { return u_pow(m * e); }
    CycScalar zeta(std::int64_t e = 1) const { return u_pow(k * e); }
    bool odd_l() const { return l % 2 == 1; }
};

CycScalar specialize(const QTScalar& x, const SpecMap& s);

// ---------------------------------------------------------------------------
// Field policies: the symbolic layers are templated on one of these.

struct QtField {
    using K = QTScalar;
    static constexpr bool generic = true;
    K zero() const { return K(0l); }
    K one() const { return K(1l); }
    K of_int(long v) const { return K(v); }
    K q(std::int64_t e) const { return QTScalar::q(e); }
    K t(std::int64_t e) const { return QTScalar::t(e); }
    K qt(std::int64_t a, std::int64_t b) const { return QTScalar::qt(a, b); }
    std::string name() const { return "generic"; }
};

struct CycField {
    SpecMap spec;
    using K = CycScalar;
    static constexpr bool generic = false;
    explicit CycField(SpecMap s) : spec(s) {}
    K zero() const { return CycScalar::zero(spec.h); }
    K one() const { return CycScalar::one(spec.h); }
    K of_int(long v) const { return CycScalar::from_rational(spec.h, Rat(v)); }
    K q(std::int64_t e) const { return spec.tau(e); }
    K t(std::int64_t e) const { return spec.zeta(e); }
    K qt(std::int64_t a, std::int64_t b) const { return q(a) * t(b); }
    std::string name() const {
        return "cyclotomic(l=" + std::to_string(spec.l) + ",k=" + std::to_string(spec.k) +
               ",m=" + std::to_string(spec.m) + ",h=" + std::to_string(spec.h) + ")";
    }
};

// Parse the canonical scalar grammar (sums of terms c*q^a*t^b, fractions
// "num / den", parentheses).
QTScalar parse_qt_scalar(const std::string& s);

unsigned euler_phi(unsigned h);

} // namespace daha
