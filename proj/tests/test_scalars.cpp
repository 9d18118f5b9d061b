#include <doctest.h>

#include <random>
#include <tuple>

#include "daha/scalars.hpp"

using namespace daha;

TEST_CASE("qt_normalize canonical forms") {
    QTScalar q = QTScalar::q(), t = QTScalar::t();

    // (q - q^{-1})(q + q^{-1}) = q^2 - q^{-2}
    QTScalar prod = (q - q.inverse()) * (q + q.inverse());
    CHECK(prod == QTScalar::q(2) - QTScalar::q(-2));

    // (q^2 - 1)/(q - 1) = q + 1
    QTScalar r = (QTScalar::q(2) - QTScalar(1l)) / (q - QTScalar(1l));
    CHECK(r == q + QTScalar(1l));
    CHECK(r.den().is_one());

    // (t - t^{-1})/(1 - t^2) = -t^{-1}; cross-multiplication oracle
    QTScalar lhs = (t - t.inverse()) / (QTScalar(1l) - QTScalar::t(2));
    QTScalar expect = -t.inverse();
    CHECK(lhs == expect);
    CHECK((t - t.inverse()) == expect * (QTScalar(1l) - QTScalar::t(2)));
}

TEST_CASE("scalar string grammar round trip") {
    QTScalar a = (QTScalar::q(2) * QTScalar::t(-1) - QTScalar(3l)) / (QTScalar::q() - QTScalar(1l));
    std::string s = a.str();
    CHECK(parse_qt_scalar(s) == a);
    CHECK(parse_qt_scalar("q^2*t^-1") == QTScalar::qt(2, -1));
    CHECK(parse_qt_scalar("(q^2 - 1) / (q - 1)") == QTScalar::q() + QTScalar(1l));
}

TEST_CASE("field axioms on random triples, generic field") {
    std::mt19937_64 rng(12345);
    auto rand_scalar = [&]() {
        QTPoly p;
        for (int i = 0; i < 3; ++i) {
            std::int64_t a = static_cast<std::int64_t>(rng() % 5) - 2;
            std::int64_t b = static_cast<std::int64_t>(rng() % 5) - 2;
            long c = static_cast<long>(rng() % 7) - 3;
            p = p + QTPoly::mono(a, b, Int(c));
        }
        return QTScalar(p, QTPoly(1));
    };
    for (int trial = 0; trial < 1000; ++trial) {
        QTScalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inverse() == QTScalar(1l));
    }
}

TEST_CASE("cyclotomic arithmetic, h = 3") {
    // eps^2 reduces to -1 - eps
    CycScalar e = CycScalar::root_pow(3, 1);
    CycScalar e2 = e * e;
    CHECK(e2 == CycScalar(3, {Rat(-1), Rat(-1)}));

    // (1 - eps)^{-1} = (2 + eps)/3, certified by multiplication
    CycScalar one = CycScalar::one(3);
    CycScalar x = one - e;
    CycScalar inv = cyc_invert(x);
    CHECK(inv == CycScalar(3, {Rat(2, 3), Rat(1, 3)}));
    CHECK(x * inv == one);
    CHECK((x * CycScalar(3, {Rat(2), Rat(1)})) == CycScalar::from_rational(3, Rat(3)));

    CHECK(cyc_invert(one) == one);
    CHECK_THROWS_AS(cyc_invert(CycScalar::zero(3)), Error);
}

TEST_CASE("field axioms on random triples, cyclotomic h = 5") {
    std::mt19937_64 rng(777);
    auto rand_c = [&]() {
        std::vector<Rat> v;
        for (int i = 0; i < 4; ++i) v.push_back(Rat(static_cast<long>(rng() % 9) - 4));
        return CycScalar(5, v);
    };
    for (int trial = 0; trial < 1000; ++trial) {
        CycScalar a = rand_c(), b = rand_c(), c = rand_c();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar::one(5));
    }
}

TEST_CASE("SpecMap and specialization") {
    // l = 3, m = 1, k = 0: u = tau a primitive third root, zeta = 1
    SpecMap s(3, 0, 1);
    CHECK(s.h == 3);
    CHECK(specialize(QTScalar::q(), s) == CycScalar::root_pow(3, 1));
    CHECK(specialize(QTScalar::q(3), s) == CycScalar::one(3));

    // 1/(1 - q) -> (2 + eps)/3 via the cyc_invert oracle
    QTScalar x = (QTScalar(1l) - QTScalar::q()).inverse();
    CycScalar expected = cyc_invert(CycScalar::one(3) - CycScalar::root_pow(3, 1));
    CHECK(specialize(x, s) == expected);

    // defining curve equation tau^k = zeta^m for several maps
    for (auto [l, k, m] : std::vector<std::tuple<unsigned, std::int64_t, std::int64_t>>{
             {3, 0, 1}, {3, 2, 1}, {5, 1, 2}, {5, -1, 3}, {7, 2, 3}}) {
        SpecMap sm(l, k, m);
        CHECK(sm.tau(sm.k) == sm.zeta(sm.m));
        // tau really has order l
        CHECK(sm.tau(static_cast<std::int64_t>(sm.l)) == CycScalar::one(sm.h));
        for (unsigned d = 1; d < sm.l; ++d)
            if (sm.l % d == 0) CHECK(sm.tau(d) != CycScalar::one(sm.h));
        CHECK(sm.a * sm.k + sm.b * sm.m == 1);
    }

    // denominator vanishing at the point is reported
    QTScalar bad = (QTScalar(1l) - QTScalar::q(3)).inverse();
    CHECK_THROWS_AS(specialize(bad, s), Error);

    // normalize-then-specialize agrees with specialize of unnormalized parts
    QTScalar y = (QTScalar::q(2) - QTScalar(1l)) / (QTScalar::q() - QTScalar(1l));
    CHECK(specialize(y, s) == specialize(QTScalar::q() + QTScalar(1l), s));
}

TEST_CASE("specialization is a ring homomorphism on samples") {
    SpecMap s(5, 2, 1);
    std::mt19937_64 rng(99);
    auto rand_scalar = [&]() {
        QTPoly p;
        for (int i = 0; i < 3; ++i)
            p = p + QTPoly::mono(static_cast<std::int64_t>(rng() % 5) - 2,
                                 static_cast<std::int64_t>(rng() % 5) - 2,
                                 Int(static_cast<long>(rng() % 7) - 3));
        return QTScalar(p);
    };
    for (int trial = 0; trial < 200; ++trial) {
        QTScalar a = rand_scalar(), b = rand_scalar();
        CHECK(specialize(a * b, s) == specialize(a, s) * specialize(b, s));
        CHECK(specialize(a + b, s) == specialize(a, s) + specialize(b, s));
    }
}
