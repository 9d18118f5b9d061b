#include "daha/qt_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace daha {

QTPoly QTPolyBuilder::build() {
    std::sort(terms_.begin(), terms_.end(),
              [](const QTPoly::Term& x, const QTPoly::Term& y) { return mono_cmp(x.m, y.m) > 0; });
    QTPoly out;
    for (auto& t : terms_) {
        if (!out.terms_.empty() && out.terms_.back().m == t.m) {
            out.terms_.back().c += t.c;
            if (out.terms_.back().c == 0) out.terms_.pop_back();
        } else if (t.c != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    terms_.clear();
    return out;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
    QTPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Int s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const { return *this + (-o); }

QTPoly QTPoly::operator*(const QTPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.is_monomial())
        return mul_mono(o.terms_[0].m.a, o.terms_[0].m.b, o.terms_[0].c);
    if (is_monomial())
        return o.mul_mono(terms_[0].m.a, terms_[0].m.b, terms_[0].c);
    QTPolyBuilder b;
    for (const auto& x : terms_)
        for (const auto& y : o.terms_)
            b.add({x.m.a + y.m.a, x.m.b + y.m.b}, x.c * y.c);
    return b.build();
}

bool QTPoly::operator==(const QTPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

QTPoly QTPoly::mul_mono(std::int64_t a, std::int64_t b, const Int& c) const {
    if (c == 0) return {};
    QTPoly r = *this;
    for (auto& t : r.terms_) {
        t.m.a += a;
        t.m.b += b;
        t.c *= c;
    }
    return r;
}

QTPoly QTPoly::pow(unsigned e) const {
    QTPoly r(1);
    QTPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool QTPoly::div_exact(const QTPoly& p, const QTPoly& d, QTPoly& quot) {
    if (d.is_zero()) fail(Err::ZeroDenominator, "division by zero polynomial");
    if (p.is_zero()) {
        quot = QTPoly();
        return true;
    }
    // work with true polynomials so the leading-term descent terminates
    QTPoly rem = p, div = d;
    QTMono mp = rem.mono_gcd(), md = div.mono_gcd();
    rem.shift(-mp.a, -mp.b);
    div.shift(-md.a, -md.b);
    std::vector<Term> q;
    while (!rem.is_zero()) {
        const Term& lr = rem.lead();
        const Term& ld = div.lead();
        if (lr.m.a < ld.m.a || lr.m.b < ld.m.b) return false;
        if (lr.c % ld.c != 0) return false;
        Term qt{{lr.m.a - ld.m.a, lr.m.b - ld.m.b}, lr.c / ld.c};
        q.push_back(qt);
        rem = rem - div.mul_mono(qt.m.a, qt.m.b, qt.c);
    }
    QTPolyBuilder b;
    for (auto& t : q) b.add({t.m.a + mp.a - md.a, t.m.b + mp.b - md.b}, t.c);
    quot = b.build();
    return true;
}

Int QTPoly::int_content() const {
    Int g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QTMono QTPoly::mono_gcd() const {
    if (terms_.empty()) return {0, 0};
    QTMono m = terms_[0].m;
    for (const auto& t : terms_) {
        m.a = std::min(m.a, t.m.a);
        m.b = std::min(m.b, t.m.b);
    }
    return m;
}

void QTPoly::shift(std::int64_t da, std::int64_t db) {
    for (auto& t : terms_) {
        t.m.a += da;
        t.m.b += db;
    }
}

QTPoly QTPoly::sub_q_pow(int e) const {
    QTPolyBuilder b;
    for (const auto& t : terms_) b.add({t.m.a * e, t.m.b}, t.c);
    return b.build();
}

QTPoly QTPoly::sub_t_pow(int e) const {
    QTPolyBuilder b;
    for (const auto& t : terms_) b.add({t.m.a, t.m.b * e}, t.c);
    return b.build();
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit_mono = (t.m.a == 0 && t.m.b == 0);
        bool coeff_shown = (c != 1) || unit_mono;
        if (coeff_shown) os << c.get_str();
        if (t.m.a != 0) {
            if (coeff_shown) os << "*";
            os << "q";
            if (t.m.a != 1) os << "^" << t.m.a;
            coeff_shown = true;
        }
        if (t.m.b != 0) {
            if (coeff_shown) os << "*";
            os << "t";
            if (t.m.b != 1) os << "^" << t.m.b;
        }
    }
    return os.str();
}

int poly_cmp(const QTPoly& x, const QTPoly& y) {
    std::size_t n = std::min(x.terms_.size(), y.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = mono_cmp(x.terms_[i].m, y.terms_[i].m);
        if (c != 0) return c;
        int s = cmp(x.terms_[i].c, y.terms_[i].c);
        if (s != 0) return s < 0 ? -1 : 1;
    }
    if (x.terms_.size() != y.terms_.size()) return x.terms_.size() < y.terms_.size() ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------------------
// gcd: view ZZ[q,t] as (ZZ[q])[t] and run a primitive PRS, with the
// univariate case handled the same way one level down.

namespace {

using UPoly = std::vector<Int>;  // dense in q, index = degree, may have leading zeros trimmed

UPoly utrim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool uzero(const UPoly& p) { return p.empty(); }

UPoly umul(const UPoly& x, const UPoly& y) {
    if (uzero(x) || uzero(y)) return {};
    UPoly r(x.size() + y.size() - 1, Int(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return utrim(std::move(r));
}

UPoly uscale(UPoly x, const Int& c) {
    if (c == 0) return {};
    for (auto& v : x) v *= c;
    return x;
}

UPoly usub(const UPoly& x, const UPoly& y) {
    UPoly r = x;
    if (r.size() < y.size()) r.resize(y.size(), Int(0));
    for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    return utrim(std::move(r));
}

Int ucontent(const UPoly& p) {
    Int g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly uprim(UPoly p) {
    Int g = ucontent(p);
    if (g == 0 || g == 1) return p;
    for (auto& c : p) c /= g;
    return p;
}

// Pseudo-remainder of x by y (y nonzero).
UPoly uprem(UPoly x, const UPoly& y) {
    const std::size_t dy = y.size() - 1;
    const Int& ly = y.back();
    while (x.size() > dy) {
        std::size_t dx = x.size() - 1;
        Int lx = x.back();
        // x := ly*x - lx*q^{dx-dy}*y; the leading term cancels exactly
        x = uscale(std::move(x), ly);
        UPoly shifted(dx - dy, Int(0));
        shifted.insert(shifted.end(), y.begin(), y.end());
        x = usub(x, uscale(std::move(shifted), lx));
    }
    return x;
}

UPoly ugcd(UPoly x, UPoly y) {
    x = utrim(std::move(x));
    y = utrim(std::move(y));
    if (uzero(x)) return uprim(std::move(y));
    if (uzero(y)) return uprim(std::move(x));
    Int cx = ucontent(x), cy = ucontent(y), cg;
    mpz_gcd(cg.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    x = uprim(std::move(x));
    y = uprim(std::move(y));
    if (x.size() < y.size()) std::swap(x, y);
    while (!uzero(y)) {
        UPoly r = uprem(x, y);
        x = std::move(y);
        y = uprim(std::move(r));
    }
    x = uprim(std::move(x));
    if (!x.empty() && x.back() < 0) x = uscale(std::move(x), Int(-1));
    UPoly g = umul(x, {cg});
    return g;
}

// Bivariate dense-in-t view: coefficient i is the ZZ[q]-coefficient of t^i.
using BPoly = std::vector<UPoly>;

BPoly btrim(BPoly p) {
    while (!p.empty() && uzero(p.back())) p.pop_back();
    return p;
}

BPoly bfrom(const QTPoly& p) {
    // requires nonnegative exponents
    std::int64_t db = 0, da = 0;
    for (const auto& t : p.terms()) {
        db = std::max(db, t.m.b);
        da = std::max(da, t.m.a);
    }
    BPoly r(static_cast<std::size_t>(db + 1));
    for (const auto& t : p.terms()) {
        UPoly& u = r[static_cast<std::size_t>(t.m.b)];
        if (u.size() <= static_cast<std::size_t>(t.m.a)) u.resize(t.m.a + 1, Int(0));
        u[static_cast<std::size_t>(t.m.a)] = t.c;
    }
    for (auto& u : r) u = utrim(std::move(u));
    return btrim(std::move(r));
}

QTPoly bto(const BPoly& p) {
    QTPolyBuilder b;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) b.add({static_cast<std::int64_t>(j), static_cast<std::int64_t>(i)}, p[i][j]);
    return b.build();
}

UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& u : p) g = ugcd(g, u);
    return g;
}

bool bdiv_by_u(BPoly& p, const UPoly& d) {
    // divide every ZZ[q]-coefficient exactly by d; exactness is guaranteed by construction
    for (auto& u : p) {
        if (uzero(u)) continue;
        // long division u / d over ZZ[q]; must be exact
        UPoly q(u.size(), Int(0));
        UPoly r = u;
        while (!uzero(r) && r.size() >= d.size()) {
            std::size_t k = r.size() - d.size();
            Int c = r.back() / d.back();
            q[k] = c;
            UPoly shifted(k, Int(0));
            shifted.insert(shifted.end(), d.begin(), d.end());
            r = usub(r, uscale(std::move(shifted), c));
        }
        u = utrim(std::move(q));
    }
    return true;
}

BPoly bmul_u(const BPoly& p, const UPoly& c) {
    BPoly r = p;
    for (auto& u : r) u = umul(u, c);
    return btrim(std::move(r));
}

BPoly bsub(const BPoly& x, const BPoly& y) {
    BPoly r = x;
    if (r.size() < y.size()) r.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = usub(r[i], y[i]);
    return btrim(std::move(r));
}

BPoly bprem(BPoly x, const BPoly& y) {
    const std::size_t dy = y.size() - 1;
    const UPoly& ly = y.back();
    while (x.size() > dy) {
        std::size_t dx = x.size() - 1;
        UPoly lx = x.back();
        x = bmul_u(x, ly);
        BPoly shifted(dx - dy);
        for (const auto& u : y) shifted.push_back(u);
        x = bsub(x, bmul_u(shifted, lx));
    }
    return x;
}

BPoly bprim(BPoly p, UPoly* content_out = nullptr) {
    UPoly c = bcontent(p);
    if (content_out) *content_out = c;
    if (!uzero(c) && !(c.size() == 1 && c[0] == 1)) bdiv_by_u(p, c);
    return p;
}

} // namespace

QTPoly QTPoly::gcd(const QTPoly& xin, const QTPoly& yin) {
    if (xin.is_zero()) return yin;
    if (yin.is_zero()) return xin;
    // strip monomial units
    QTPoly x = xin, y = yin;
    QTMono mx = x.mono_gcd(), my = y.mono_gcd();
    x.shift(-mx.a, -mx.b);
    y.shift(-my.a, -my.b);
    if (x.is_monomial() || y.is_monomial()) {
        Int cg;
        Int cx = x.int_content(), cy = y.int_content();
        mpz_gcd(cg.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
        return QTPoly(cg);
    }
    BPoly bx = bfrom(x), by = bfrom(y);
    UPoly cx, cy;
    bx = bprim(std::move(bx), &cx);
    by = bprim(std::move(by), &cy);
    UPoly cg = ugcd(cx, cy);
    if (bx.size() < by.size()) std::swap(bx, by);
    while (!by.empty()) {
        BPoly r = bprem(bx, by);
        bx = std::move(by);
        by = bprim(std::move(r));
    }
    bx = bprim(std::move(bx));
    BPoly g = bmul_u(bx, cg);
    QTPoly out = bto(g);
    if (!out.is_zero() && out.lead().c < 0) out = -out;
    return out;
}

} // namespace daha
