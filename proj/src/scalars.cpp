#include "daha/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace daha {

void QTScalar::normalize(QTPoly num, QTPoly den) {
    if (den.is_zero()) fail(Err::ZeroDenominator, "scalar with zero denominator");
    if (num.is_zero()) {
        num_ = QTPoly();
        den_ = QTPoly(1);
        return;
    }
    // clear monomial units: lowest exponents move to the numerator
    QTMono md = den.mono_gcd();
    den.shift(-md.a, -md.b);
    num.shift(-md.a, -md.b);
    if (!den.is_one()) {
        QTPoly g = QTPoly::gcd(num, den);
        if (!g.is_one() && !g.is_monomial()) {
            QTPoly qn, qd;
            bool ok1 = QTPoly::div_exact(num, g, qn);
            bool ok2 = QTPoly::div_exact(den, g, qd);
            if (ok1 && ok2) {
                num = std::move(qn);
                den = std::move(qd);
                QTMono m2 = den.mono_gcd();
                den.shift(-m2.a, -m2.b);
                num.shift(-m2.a, -m2.b);
            }
        }
        // integer content
        Int cn = num.int_content(), cd = den.int_content(), g2;
        mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (g2 > 1) {
            QTPoly qn, qd;
            QTPoly::div_exact(num, QTPoly(g2), qn);
            QTPoly::div_exact(den, QTPoly(g2), qd);
            num = std::move(qn);
            den = std::move(qd);
        }
    }
    // positive leading coefficient in the denominator
    if (den.lead().c < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

QTScalar qt_normalize(const QTPoly& num, const QTPoly& den) { return QTScalar(num, den); }

QTScalar QTScalar::operator+(const QTScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QTScalar(num_ + o.num_, den_);
    return QTScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QTScalar QTScalar::operator-(const QTScalar& o) const { return *this + (-o); }

QTScalar QTScalar::operator-() const {
    QTScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QTScalar QTScalar::operator*(const QTScalar& o) const {
    if (is_zero() || o.is_zero()) return QTScalar();
    if (den_.is_one() && o.den_.is_one()) {
        QTScalar r;
        r.num_ = num_ * o.num_;
        r.den_ = QTPoly(1);
        return r;
    }
    return QTScalar(num_ * o.num_, den_ * o.den_);
}

QTScalar QTScalar::operator/(const QTScalar& o) const {
    if (o.is_zero()) fail(Err::ZeroDenominator, "scalar division by zero");
    return QTScalar(num_ * o.den_, den_ * o.num_);
}

QTScalar QTScalar::inverse() const {
    if (is_zero()) fail(Err::ZeroInverse, "inverse of zero scalar");
    return QTScalar(den_, num_);
}

std::string QTScalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    bool npar = num_.size() > 1, dpar = den_.size() > 1;
    std::string out;
    out += npar ? "(" + n + ")" : n;
    out += " / ";
    out += dpar ? "(" + d + ")" : d;
    return out;
}

// ---------------------------------------------------------------------------

unsigned euler_phi(unsigned h) {
    unsigned r = h;
    for (unsigned p = 2; p * p <= h; ++p) {
        if (h % p == 0) {
            r -= r / p;
            while (h % p == 0) h /= p;
        }
    }
    if (h > 1) r -= r / h;
    return r;
}

namespace {

// Divide monic-leading integer polys exactly: x^h - 1 by products of Phi_d.
std::vector<Int> poly_div_exact_int(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !num.empty()) {
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.size() < den.size()) break;
        std::size_t k = num.size() - den.size();
        Int c = num.back() / den.back();
        quot[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    return quot;
}

std::map<unsigned, std::vector<Int>>& cyc_cache() {
    static std::map<unsigned, std::vector<Int>> cache;
    return cache;
}

} // namespace

const std::vector<Int>& CycScalar::cyclotomic(unsigned h) {
    auto& cache = cyc_cache();
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
    // x^h - 1 divided by all Phi_d, d | h, d < h
    std::vector<Int> p(h + 1, Int(0));
    p[0] = -1;
    p[h] = 1;
    for (unsigned d = 1; d < h; ++d) {
        if (h % d != 0) continue;
        p = poly_div_exact_int(std::move(p), cyclotomic(d));
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return cache.emplace(h, std::move(p)).first->second;
}

CycScalar::CycScalar(unsigned h, std::vector<Rat> coeffs) : h_(h), c_(std::move(coeffs)) {
    const unsigned deg = euler_phi(h_);
    if (c_.size() > deg) {
        const auto& phi = cyclotomic(h_);  // monic, degree deg
        while (c_.size() > deg) {
            Rat lead = c_.back();
            c_.pop_back();
            if (lead != 0) {
                std::size_t shift = c_.size() - deg;
                for (unsigned j = 0; j < deg; ++j) c_[shift + j] -= lead * Rat(phi[j]);
            }
        }
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (auto& r : c_) r.canonicalize();
}

CycScalar CycScalar::from_rational(unsigned h, const Rat& r) {
    if (r == 0) return zero(h);
    return CycScalar(h, {r});
}

CycScalar CycScalar::root_pow(unsigned h, std::int64_t e) {
    std::int64_t r = e % static_cast<std::int64_t>(h);
    if (r < 0) r += h;
    std::vector<Rat> c(static_cast<std::size_t>(r) + 1, Rat(0));
    c.back() = 1;
    return CycScalar(h, std::move(c));
}

bool CycScalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

namespace {
// scalars with conductor 1 are plain rationals and join any conductor
unsigned join_conductor(unsigned a, unsigned b) {
    if (a == b) return a;
    if (a == 1) return b;
    if (b == 1) return a;
    fail(Err::ConfigError, "mixed cyclotomic conductors " + std::to_string(a) + " and " +
                               std::to_string(b));
}
} // namespace

CycScalar CycScalar::operator+(const CycScalar& o) const {
    unsigned h = join_conductor(h_, o.h_);
    std::vector<Rat> c = c_;
    if (c.size() < o.c_.size()) c.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return CycScalar(h, std::move(c));
}

CycScalar CycScalar::operator-(const CycScalar& o) const { return *this + (-o); }

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    unsigned h = join_conductor(h_, o.h_);
    if (is_zero() || o.is_zero()) return zero(h);
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return CycScalar(h, std::move(c));
}

CycScalar CycScalar::operator/(const CycScalar& o) const { return *this * o.inverse(); }

CycScalar CycScalar::inverse() const {
    if (is_zero()) fail(Err::ZeroInverse, "inverse of zero cyclotomic element");
    // extended Euclid over QQ[x] against Phi_h; Phi_h is irreducible so the
    // gcd with a nonzero residue is a nonzero constant.
    using P = std::vector<Rat>;
    auto trim = [](P& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto sub_scaled = [](P& x, const P& y, const Rat& c, std::size_t shift) {
        if (x.size() < y.size() + shift) x.resize(y.size() + shift, Rat(0));
        for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= c * y[i];
    };
    // divmod: r := r mod d, returns quotient
    auto divmod = [&](P& r, const P& d) {
        P q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Rat(0));
        while (r.size() >= d.size()) {
            std::size_t k = r.size() - d.size();
            Rat c = r.back() / d.back();
            q[k] += c;
            sub_scaled(r, d, c, k);
            trim(r);
        }
        return q;
    };
    const auto& phi = cyclotomic(h_);
    P r0(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rat(phi[i]);
    P r1(c_.begin(), c_.end());
    P s0 = {}, s1 = {Rat(1)};  // cofactors of `this`
    trim(r1);
    while (r1.size() > 1) {
        P q = divmod(r0, r1);  // r0 becomes the remainder
        P s2 = s0;
        for (std::size_t k = 0; k < q.size(); ++k)
            if (q[k] != 0) sub_scaled(s2, s1, q[k], k);
        trim(s2);
        std::swap(r0, r1);  // (r0, r1) := (r1, remainder)
        s0 = s1;
        s1 = s2;
    }
    if (r1.empty()) fail(Err::ZeroInverse, "element not invertible (zero residue)");
    Rat lead = r1[0];
    std::vector<Rat> out(s1.begin(), s1.end());
    for (auto& v : out) v /= lead;
    return CycScalar(h_, std::move(out));
}

CycScalar cyc_invert(const CycScalar& x) { return x.inverse(); }

std::string CycScalar::str() const {
    if (c_.empty()) return "0";
    // pull out the common denominator
    Int den(1);
    for (const auto& r : c_) {
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
        den = den / g * r.get_den();
    }
    std::ostringstream os;
    bool par = false;
    std::ostringstream body;
    bool first = true;
    int printed = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int c = c_[i].get_num() * (den / c_[i].get_den());
        if (first) {
            if (c < 0) {
                body << "-";
                c = -c;
            }
        } else {
            body << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        ++printed;
        bool shown = (c != 1) || i == 0;
        if (shown) body << c.get_str();
        if (i >= 1) {
            if (shown) body << "*";
            body << "e";
            if (i > 1) body << "^" << i;
        }
    }
    par = printed > 1 && den != 1;
    if (den == 1) return body.str();
    os << (par ? "(" + body.str() + ")" : body.str()) << "/" << den.get_str();
    return os.str();
}

int scalar_cmp(const CycScalar& x, const CycScalar& y) {
    if (x.h_ != y.h_) return x.h_ < y.h_ ? -1 : 1;
    std::size_t n = std::min(x.c_.size(), y.c_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (x.c_.size() != y.c_.size()) return x.c_.size() < y.c_.size() ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------------------

namespace {
std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}
} // namespace

SpecMap::SpecMap(unsigned l_, std::int64_t k_, std::int64_t m_) : l(l_), k(k_), m(m_) {
    if (m < 0) {
        m = -m;
        k = -k;
    }
    if (l < 1 || m < 1) fail(Err::ConfigError, "SpecMap requires l >= 1 and m != 0");
    if (gcd64(k, m) != 1) fail(Err::ConfigError, "SpecMap requires gcd(k, m) = 1");
    h = l * static_cast<unsigned>(m);
    // Bezout: a*k + b*m = 1
    std::int64_t r0 = k, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
    }
    // r0 = gcd = 1 = s0*k + b*m
    a = s0;
    b = (1 - a * k) / m;
}

CycScalar specialize(const QTScalar& x, const SpecMap& s) {
    auto eval = [&s](const QTPoly& p) {
        CycScalar acc = CycScalar::zero(s.h);
        for (const auto& t : p.terms()) {
            CycScalar mono = CycScalar::root_pow(s.h, t.m.a * s.m + t.m.b * s.k);
            acc = acc + mono * CycScalar::from_rational(s.h, Rat(t.c));
        }
        return acc;
    };
    CycScalar den = eval(x.den());
    if (den.is_zero())
        fail(Err::DenominatorVanishes, "denominator vanishes at the specialization point");
    return eval(x.num()) * den.inverse();
}

// ---------------------------------------------------------------------------
// Scalar grammar parser: expr := term (('+'|'-') term)*; term := factor
// (('*'|'/') factor)*; factor := INT | 'q' ['^' INT] | 't' ['^' INT] |
// '(' expr ')' | '-' factor.

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::int64_t integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail(Err::ConfigError, "expected integer in scalar at position " + std::to_string(pos));
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
        std::int64_t v = std::stoll(digits);
        return neg ? -v : v;
    }

    QTScalar factor() {
        skip();
        if (eat('(')) {
            QTScalar e = expr();
            if (!eat(')')) fail(Err::ConfigError, "expected ')' in scalar");
            return e;
        }
        if (eat('-')) return -factor();
        char c = peek();
        if (c == 'q' || c == 't') {
            ++pos;
            std::int64_t e = 1;
            if (eat('^')) e = integer();
            return c == 'q' ? QTScalar::q(e) : QTScalar::t(e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip();
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
            return QTScalar(QTPoly(Int(digits)));
        }
        fail(Err::ConfigError, std::string("unexpected character '") + c + "' in scalar");
    }

    QTScalar term() {
        QTScalar r = factor();
        for (;;) {
            if (eat('*')) {
                r = r * factor();
            } else if (eat('/')) {
                r = r / factor();
            } else {
                return r;
            }
        }
    }

    QTScalar expr() {
        QTScalar r = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                r = r + term();
            } else if (c == '-') {
                ++pos;
                r = r - term();
            } else {
                return r;
            }
        }
    }
};

} // namespace

QTScalar parse_qt_scalar(const std::string& s) {
    Parser p(s);
    QTScalar r = p.expr();
    p.skip();
    if (p.pos != s.size()) fail(Err::ConfigError, "trailing characters in scalar: " + s);
    return r;
}

} // namespace daha
