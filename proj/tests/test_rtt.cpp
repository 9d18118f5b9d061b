#include <doctest.h>

#include "daha/rtt.hpp"

using namespace daha;

TEST_CASE("Yang-Baxter identity for the explicit R-matrix") {
    CHECK(ybe_check(2).pass);
    CHECK(ybe_check(3).pass);

    // sign flip on one off-diagonal entry breaks it with a witness
    Mat<QTScalar> R = r_matrix(2);
    R(0 * 2 + 1, 1 * 2 + 0) = -R(0 * 2 + 1, 1 * 2 + 0);
    auto bad = ybe_check_matrix(R, 2);
    CHECK(!bad.pass);
    CHECK(!bad.witness.empty());
}

TEST_CASE("Hecke spectral identity for the flipped R-matrix") {
    CHECK(hecke_identity_check(2));
    CHECK(hecke_identity_check(3));
}

TEST_CASE("reflection algebra construction") {
    // n = 1: single generator, no relations
    auto a1 = build_algebra(AlgebraKind::ReflectionF, 1);
    CHECK(a1.gens == 1);
    CHECK(a1.relations.empty());

    auto a2 = build_algebra(AlgebraKind::ReflectionF, 2);
    CHECK(a2.gens == 4);
    CHECK(!a2.relations.empty());

    auto d2 = build_algebra(AlgebraKind::DoubleD, 2);
    CHECK(d2.gens == 8);
    // three families contribute: relations touching only l, only l', and mixed
    bool has_l = false, has_lp = false, has_mixed = false;
    for (const auto& r : d2.relations) {
        bool l = false, lp = false;
        for (const auto& [w, c] : r) {
            if (w.first < 4 || w.second < 4) l = true;
            if (w.first >= 4 || w.second >= 4) lp = true;
        }
        if (l && !lp) has_l = true;
        if (lp && !l) has_lp = true;
        if (l && lp) has_mixed = true;
    }
    CHECK(has_l);
    CHECK(has_lp);
    CHECK(has_mixed);
}

TEST_CASE("graded dimensions match the PBW expectation") {
    auto a2 = build_algebra(AlgebraKind::ReflectionF, 2);
    // binomial(3 + d, d): symmetric algebra on 4 variables
    std::int64_t expect[] = {1, 4, 10, 20, 35, 56};
    for (int d = 0; d <= 5; ++d) CHECK(graded_dim(a2, d) == expect[d]);

    auto d2 = build_algebra(AlgebraKind::DoubleD, 2);
    // binomial(7 + d, d): symmetric algebra on 8 variables
    std::int64_t expect_d[] = {1, 8, 36, 120};
    for (int d = 0; d <= 3; ++d) CHECK(graded_dim(d2, d) == expect_d[d]);

    auto a3 = build_algebra(AlgebraKind::ReflectionF, 3);
    CHECK(graded_dim(a3, 2) == 45);  // binomial(10, 2)
    CHECK(graded_dim(a3, 3) == 165);
}

TEST_CASE("relation set matches the rearranged exchange identities, n = 2") {
    const int n = 2;
    auto alg = build_algebra(AlgebraKind::ReflectionF, n);
    auto qs = QTScalar::q();
    auto corr = QTScalar::q() - QTScalar::q(-1);
    auto gen = [&](int i, int j) { return (i - 1) * n + (j - 1); };  // 1-based c_ij

    std::vector<QuadraticAlgebra::Rel> identities;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m) {
                    QuadraticAlgebra::Rel r;
                    auto add = [&](int g1, int g2, const QTScalar& c) {
                        if (c.is_zero()) return;
                        auto key = std::make_pair(g1, g2);
                        auto [it, fresh] = r.emplace(key, c);
                        if (!fresh) {
                            it->second = it->second + c;
                            if (it->second.is_zero()) r.erase(it);
                        }
                    };
                    auto qpow = [&](int e) { return QTScalar::q(e); };
                    int dmi = m == i, dmj = m == j, dil = i == l, djl = j == l, dij = i == j;
                    int dig = i > l ? 1 : 0, djm = j > m ? 1 : 0;
                    add(gen(l, m), gen(i, j), qpow(dmi + dmj));
                    add(gen(i, j), gen(l, m), -qpow(dil + djl));
                    // rhs terms moved to the left with minus signs
                    QTScalar f1 = corr * qpow(dij) * QTScalar(static_cast<long>(dig - djm));
                    add(gen(l, j), gen(i, m), -f1);
                    for (int p = 1; p < j; ++p)
                        if (djl) add(gen(i, p), gen(p, m), -(corr * qpow(dij)));
                    for (int p = 1; p < m; ++p)
                        if (i == m) add(gen(l, p), gen(p, j), corr * qpow(dij));
                    if (dij) {
                        QTScalar f3 = corr * corr * QTScalar(static_cast<long>(dig - djm));
                        for (int p = 1; p < j; ++p) add(gen(l, p), gen(p, m), -f3);
                    }
                    if (!r.empty()) identities.push_back(std::move(r));
                }

    // mutual span containment
    auto to_row = [&](const QuadraticAlgebra::Rel& r) {
        SparseEchelon::Row row;
        for (const auto& [w, c] : r)
            row.push_back({static_cast<std::int64_t>(w.first) * alg.gens + w.second, c});
        std::sort(row.begin(), row.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
        return row;
    };
    SparseEchelon from_alg, from_ids;
    for (const auto& r : alg.relations) from_alg.insert(to_row(r));
    for (const auto& r : identities) from_ids.insert(to_row(r));
    CHECK(from_alg.rank() == from_ids.rank());
    for (const auto& r : identities) CHECK(from_alg.reduce(to_row(r)).empty());
    for (const auto& r : alg.relations) CHECK(from_ids.reduce(to_row(r)).empty());
}

TEST_CASE("central elements") {
    auto a2 = build_algebra(AlgebraKind::ReflectionF, 2);

    // degree 0: scalars
    auto c0 = central_elements(a2, 0);
    CHECK(c0.basis.size() == 1);

    // degree 2: nonzero, contains the quantum determinant; re-verified by
    // commutation in degree d + 2
    auto c2 = central_elements(a2, 2);
    CHECK(!c2.basis.empty());
    for (const auto& z : c2.basis) CHECK(central_reverify(a2, z, 2));

    // double_D at degree 2: the determinants of the two matrix copies are
    // q-normal (they generate a denominator set), not central; the computed
    // degree-2 center is zero and the normality is certified with explicit
    // twists instead
    auto d2 = build_algebra(AlgebraKind::DoubleD, 2);
    auto cd2 = central_elements(d2, 2);
    CHECK(cd2.basis.size() == 0);
    // map the reflection-algebra determinant into the l-block of double_D
    REQUIRE(!c2.basis.empty());
    std::map<std::int64_t, QTScalar> det_l;
    for (const auto& [w, c] : c2.basis[0]) {
        std::int64_t a = w / a2.gens, b = w % a2.gens;
        det_l[a * d2.gens + b] = c;
    }
    auto tw = normal_twists(d2, det_l, 2);
    REQUIRE(tw.has_value());
    // commutes with the l generators, q-twists past the l' ones
    for (int g = 0; g < 4; ++g) CHECK((*tw)[static_cast<std::size_t>(g)] == 0);
    bool twisted = false;
    for (int g = 4; g < 8; ++g)
        if ((*tw)[static_cast<std::size_t>(g)] != 0) twisted = true;
    CHECK(twisted);
}
