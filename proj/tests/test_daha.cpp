#include <doctest.h>

#include <random>

#include "daha/daha_suites.hpp"

using namespace daha;

namespace {
const QtField QF;

LaurentPoly<QTScalar> mono(std::initializer_list<std::int64_t> e) {
    return LaurentPoly<QTScalar>::monomial(Weight(e), QTScalar(1l));
}
} // namespace

TEST_CASE("polynomial representation generator values") {
    DahaRep<QtField> rep(QF, 2);
    auto one = LaurentPoly<QTScalar>::constant(2, QTScalar(1l));

    // t_1 acting on 1 gives zeta = t
    CHECK(rep.apply_t(1, one) == one.scale(QTScalar::t()));
    // t_1 acting on x_1 gives t^{-1} x_2
    CHECK(rep.apply_t(1, mono({1, 0})) == mono({0, 1}).scale(QTScalar::t(-1)));
    // y_{(1,1)} = t_pi^2 acts on x_1 as q^{-2} x_1
    CHECK(rep.apply_pi(2, mono({1, 0})) == mono({1, 0}).scale(QTScalar::q(-2)));
    auto viaY = rep.apply_word(rep.y_tokens({1, 1}), mono({1, 0}));
    CHECK(viaY == mono({1, 0}).scale(QTScalar::q(-2)));
}

TEST_CASE("presentation suite passes for n = 2 and n = 3") {
    for (int n : {2, 3}) {
        DahaRep<QtField> rep(QF, n);
        Suite s = verify_presentation(rep, 2);
        for (const auto& c : s.cases) {
            INFO(c.name, " witness: ", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("presentation suite vacuous for n = 1") {
    DahaRep<QtField> rep(QF, 1);
    Suite s = verify_presentation(rep, 3);
    CHECK(s.all_pass());
}

TEST_CASE("mutated t_1 fails the quadratic relation with a witness") {
    DahaRep<QtField> rep(QF, 2);
    PresentationOptions opts;
    opts.mutate_t1 = true;
    Suite s = verify_presentation(rep, 2, opts);
    bool quad_failed = false;
    for (const auto& c : s.cases)
        if (c.name == "quadratic t_1" && !c.pass && !c.witness.empty()) quad_failed = true;
    CHECK(quad_failed);
}

TEST_CASE("pbw straighten basic examples") {
    DahaRep<QtField> rep(QF, 2);

    // x_{eps_1} is already a PBW basis vector
    DahaWord<QTScalar> w;
    w.add(QTScalar(1l), {Token::x({1, 0})});
    auto e = rep.pbw_straighten(w);
    REQUIRE(e.size() == 1);
    CHECK(e.begin()->first == PBWKey{{1, 0}, Perm(2), {0, 0}});
    CHECK(e.begin()->second == QTScalar(1l));

    // t_1 x_{eps_1} = x_{eps_2} t_1 - (t - t^{-1}) x_{eps_2}
    DahaWord<QTScalar> w2;
    w2.add(QTScalar(1l), {Token::t(1), Token::x({1, 0})});
    auto e2 = rep.pbw_straighten(w2);
    DahaElement<QTScalar> expect;
    expect[PBWKey{{0, 1}, Perm::simple(2, 1), {0, 0}}] = QTScalar(1l);
    expect[PBWKey{{0, 1}, Perm(2), {0, 0}}] = -(QTScalar::t() - QTScalar::t(-1));
    CHECK(e2 == expect);

    // idempotence on straightened input
    DahaWord<QTScalar> w3;
    for (const auto& [k, c] : e2) {
        auto toks = rep.element_tokens(k);
        w3.add(c, toks);
    }
    CHECK(rep.pbw_straighten(w3) == e2);
}

TEST_CASE("straightening is sound for the representation") {
    // Psi'(straighten(w)) = Psi'(w) on the degree <= 2 window, n = 2
    DahaRep<QtField> rep(QF, 2);
    std::mt19937_64 rng(42);
    auto rand_token = [&]() -> Token {
        switch (rng() % 4) {
            case 0: return Token::t(static_cast<int>(rng() % 2));
            case 1: return Token::pi((rng() % 2) ? 1 : -1);
            case 2: return Token::x({static_cast<std::int64_t>(rng() % 3) - 1,
                                     static_cast<std::int64_t>(rng() % 3) - 1});
            default: return Token::tinv(static_cast<int>(rng() % 2));
        }
    };
    for (int trial = 0; trial < 40; ++trial) {
        DahaWord<QTScalar> w;
        std::vector<Token> toks;
        int len = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i) toks.push_back(rand_token());
        w.add(QTScalar(1l), toks);
        auto e = rep.pbw_straighten(w);
        bool ok = true;
        for_each_monomial(2, 2, [&](const Weight& mu) {
            if (!ok) return;
            auto f = rep.monomial(mu);
            if (!(rep.apply_daha_word(w, f) - rep.apply_element(e, f)).is_zero()) ok = false;
        });
        CHECK(ok);
    }
}

TEST_CASE("y_eps1 times x_eps1 straightens consistently (operator oracle)") {
    DahaRep<QtField> rep(QF, 2);
    DahaWord<QTScalar> w;
    auto ytoks = rep.y_tokens({1, 0});
    ytoks.push_back(Token::x({1, 0}));
    w.add(QTScalar(1l), ytoks);
    auto e = rep.pbw_straighten(w);
    bool ok = true;
    for_each_monomial(2, 3, [&](const Weight& mu) {
        if (!ok) return;
        auto f = rep.monomial(mu);
        if (!(rep.apply_daha_word(w, f) - rep.apply_element(e, f)).is_zero()) ok = false;
    });
    CHECK(ok);
}

TEST_CASE("reduced-word independence of the representation") {
    // two different reduced words of the same element act identically
    DahaRep<QtField> rep(QF, 3);
    // s_1 s_2 s_1 = s_2 s_1 s_2
    auto f = mono({1, -1, 2});
    auto a = rep.apply_t(1, rep.apply_t(2, rep.apply_t(1, f)));
    auto b = rep.apply_t(2, rep.apply_t(1, rep.apply_t(2, f)));
    CHECK(a == b);
}

TEST_CASE("spherical data") {
    // n = 1: o = 1, a_o = 1
    {
        DahaRep<QtField> rep(QF, 1);
        auto sd = spherical_data(rep);
        CHECK(sd.a_o == QTScalar(1l));
        CHECK(sd.o.size() == 1);
        CHECK(spherical_idempotent_check(rep, sd));
    }
    // n = 2: o = 1 + t t_1, a_o = 1 + t^2
    {
        DahaRep<QtField> rep(QF, 2);
        auto sd = spherical_data(rep);
        CHECK(sd.a_o == QTScalar(1l) + QTScalar::t(2));
        CHECK(sd.o.at(PBWKey{{0, 0}, Perm(2), {0, 0}}) == QTScalar(1l));
        CHECK(sd.o.at(PBWKey{{0, 0}, Perm::simple(2, 1), {0, 0}}) == QTScalar::t());
        CHECK(spherical_idempotent_check(rep, sd));
    }
    // n = 3: a_o = (1 + t^2)(1 + t^2 + t^4)
    {
        DahaRep<QtField> rep(QF, 3);
        auto sd = spherical_data(rep);
        QTScalar expect = (QTScalar(1l) + QTScalar::t(2)) *
                          (QTScalar(1l) + QTScalar::t(2) + QTScalar::t(4));
        CHECK(sd.a_o == expect);
        CHECK(spherical_idempotent_check(rep, sd));
    }
}

TEST_CASE("Fourier and IM symmetries") {
    DahaRep<QtField> rep(QF, 2);

    // fourier(x_{eps_1}) = y_{eps_1}
    DahaElement<QTScalar> xe;
    xe[PBWKey{{1, 0}, Perm(2), {0, 0}}] = QTScalar(1l);
    auto fx = apply_symmetry(rep, SymmetryKind::Fourier, xe);
    DahaElement<QTScalar> ye;
    ye[PBWKey{{0, 0}, Perm(2), {1, 0}}] = QTScalar(1l);
    CHECK(fx == ye);

    // fourier(t_1) = t_1^{-1} = t_1 - (t - t^{-1})
    DahaElement<QTScalar> t1;
    t1[PBWKey{{0, 0}, Perm::simple(2, 1), {0, 0}}] = QTScalar(1l);
    auto ft = apply_symmetry(rep, SymmetryKind::Fourier, t1);
    DahaElement<QTScalar> t1inv;
    t1inv[PBWKey{{0, 0}, Perm::simple(2, 1), {0, 0}}] = QTScalar(1l);
    t1inv[PBWKey{{0, 0}, Perm(2), {0, 0}}] = -(QTScalar::t() - QTScalar::t(-1));
    CHECK(ft == t1inv);

    // im(im(t_1)) = t_1; im(im(x)) = x
    auto imt = apply_symmetry(rep, SymmetryKind::IM, apply_symmetry(rep, SymmetryKind::IM, t1));
    CHECK(imt == t1);
    auto imx = apply_symmetry(rep, SymmetryKind::IM, apply_symmetry(rep, SymmetryKind::IM, xe));
    CHECK(imx == xe);

    // homomorphism property on samples: S(a b) = S(a) S(b)
    std::mt19937_64 rng(5);
    auto rand_elt = [&]() {
        DahaWord<QTScalar> w;
        std::vector<Token> toks;
        int len = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < len; ++i) {
            switch (rng() % 3) {
                case 0: toks.push_back(Token::t(static_cast<int>(rng() % 2))); break;
                case 1: toks.push_back(Token::x({static_cast<std::int64_t>(rng() % 2),
                                                 static_cast<std::int64_t>(rng() % 2)})); break;
                default: toks.push_back(Token::pi(1)); break;
            }
        }
        w.add(QTScalar(1l), toks);
        return rep.pbw_straighten(w);
    };
    for (int trial = 0; trial < 6; ++trial) {
        auto a = rand_elt(), b = rand_elt();
        for (auto kind : {SymmetryKind::Fourier, SymmetryKind::IM}) {
            auto lhs = apply_symmetry(rep, kind, rep.multiply(a, b));
            auto rhs = rep.multiply(apply_symmetry(rep, kind, a), apply_symmetry(rep, kind, b));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("faithfulness evidence: distinct PBW basis vectors act differently") {
    DahaRep<QtField> rep(QF, 2);
    std::map<std::string, PBWKey> signatures;
    bool collision = false;
    for_each_monomial(2, 1, [&](const Weight& lx) {
        for (const auto& w : all_perms(2)) {
            for_each_monomial(2, 1, [&](const Weight& ly) {
                PBWKey key{lx, w, ly};
                std::string sig;
                for_each_monomial(2, 1, [&](const Weight& mu) {
                    sig += rep.apply_word(rep.element_tokens(key), rep.monomial(mu)).str();
                    sig += ";";
                });
                auto [it, fresh] = signatures.emplace(sig, key);
                if (!fresh) collision = true;
            });
        }
    });
    CHECK(!collision);
}
