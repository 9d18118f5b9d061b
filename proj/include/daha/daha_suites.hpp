#pragma once

#include <functional>
#include <random>

#include "daha/daha.hpp"
#include "daha/report.hpp"

namespace daha {

// ---------------------------------------------------------------------------
// Presentation suite: every defining relation checked as an exact operator
// identity on the monomial window [-testDegree, testDegree]^n.

struct PresentationOptions {
    bool mutate_t1 = false;  // replace t_1 by zeta*s_1 (control experiment)
};

template <class F>
Suite verify_presentation(const DahaRep<F>& rep, int test_degree,
                          PresentationOptions opts = {}) {
    using K = typename F::K;
    using LP = LaurentPoly<K>;
    const F& f = rep.field();
    const int n = rep.rank();
    Suite suite{"daha-presentation", {}};

    auto T = [&](int i, const LP& p) -> LP {
        if (i == 1 && opts.mutate_t1) {
            return rep.apply_refl(DLGen<F>::make(f, n, 1), p).scale(f.t(1));
        }
        return rep.apply_t(i, p);
    };

    // check op == 0 on the window; returns witness monomial
    auto window_zero = [&](const std::function<LP(const LP&)>& op, std::string& witness) {
        bool ok = true;
        for_each_monomial(n, test_degree, [&](const Weight& mu) {
            if (!ok) return;
            LP r = op(rep.monomial(mu));
            if (!r.is_zero()) {
                ok = false;
                witness = "x^(" + weight_str(mu) + ")";
            }
        });
        return ok;
    };

    const K corr = f.t(1) - f.t(-1);

    if (n >= 2) {
        for (int i = 0; i < n; ++i) {
            std::string w;
            bool ok = window_zero(
                [&](const LP& p) {
                    LP tp = T(i, p);
                    return T(i, tp) - tp.scale(corr) - p;
                },
                w);
            suite.check("quadratic t_" + std::to_string(i), ok, w);
        }
    }

    if (n >= 3) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                bool adjacent = (j - i == 1) || (i == 0 && j == n - 1);
                std::string w;
                if (adjacent) {
                    bool ok = window_zero(
                        [&](const LP& p) {
                            return T(i, T(j, T(i, p))) - T(j, T(i, T(j, p)));
                        },
                        w);
                    suite.check("braid t_" + std::to_string(i) + " t_" + std::to_string(j), ok, w);
                } else {
                    bool ok = window_zero(
                        [&](const LP& p) { return T(i, T(j, p)) - T(j, T(i, p)); }, w);
                    suite.check("commute t_" + std::to_string(i) + " t_" + std::to_string(j), ok, w);
                }
            }
        }
    }

    // pi conjugation: t_pi t_i t_pi^{-1} = t_{i+1 mod n}
    if (n >= 2) {
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            std::string w;
            bool ok = window_zero(
                [&](const LP& p) {
                    return rep.apply_pi(1, T(i, rep.apply_pi(-1, p))) - T(j, p);
                },
                w);
            suite.check("pi-conj t_" + std::to_string(i) + " -> t_" + std::to_string(j), ok, w);
        }
    }

    // x-lattice law on a sample
    {
        std::string w;
        Weight a = eps(n, 1), b = n >= 2 ? eps(n, 2) : eps(n, 1);
        bool ok = window_zero(
            [&](const LP& p) {
                return rep.apply_x(a, rep.apply_x(b, p)) - rep.apply_x(wsum(a, b), p);
            },
            w);
        suite.check("x-lattice x_a x_b = x_{a+b}", ok, w);
    }

    // pi-x: t_pi x_lam t_pi^{-1} = x_{pi(lam)}
    {
        std::vector<Weight> sample;
        for (int j = 1; j <= n; ++j) sample.push_back(eps(n, j));
        sample.push_back(theta(n));
        for (const auto& lam : sample) {
            auto [img, scal] = rep.collapse(xact(ExtAffineElt::pi_elt(n), XToken{lam, 0}));
            std::string w;
            bool ok = window_zero(
                [&](const LP& p) {
                    return rep.apply_pi(1, rep.apply_x(lam, rep.apply_pi(-1, p))) -
                           rep.apply_x(img, p).scale(scal);
                },
                w);
            suite.check("pi-x conj x_(" + weight_str(lam) + ")", ok, w);
        }
    }

    // cross relations t_i x_lam - x_{s_i lam} t_i = (t - t^{-1}) (x_lam - x_{s_i lam})/(1 - x_{beta_i})
    if (n >= 2) {
        std::vector<Weight> sample;
        for (int j = 1; j <= n; ++j) {
            sample.push_back(eps(n, j));
            sample.push_back(wneg(eps(n, j)));
        }
        sample.push_back(theta(n));
        for (int i = 0; i < n; ++i) {
            for (const auto& lam : sample) {
                auto [rimg, rscal] = rep.collapse(xact(ExtAffineElt::simple(n, i), XToken{lam, 0}));
                auto geom = rep.geom_tokens(i, XToken{lam, 0});
                std::string w;
                bool ok = window_zero(
                    [&](const LP& p) {
                        LP lhs = T(i, rep.apply_x(lam, p)) -
                                 rep.apply_x(rimg, T(i, p)).scale(rscal);
                        LP rhs(n);
                        for (const auto& [tok, sgn] : geom) {
                            auto [ilam, iscal] = rep.collapse(tok);
                            rhs = rhs + rep.apply_x(ilam, p).scale(iscal * sgn);
                        }
                        return lhs - rhs.scale(corr);
                    },
                    w);
                suite.check("cross t_" + std::to_string(i) + " x_(" + weight_str(lam) + ")", ok, w);
            }
        }
    }

    return suite;
}

// ---------------------------------------------------------------------------
// Spherical data: o = sum_w t^{l(w)} t_w with o^2 = a_o o, a_o = sum t^{2 l(w)}.

template <class F>
struct SphericalData {
    DahaElement<typename F::K> o;
    typename F::K a_o;
};

template <class F>
SphericalData<F> spherical_data(const DahaRep<F>& rep) {
    using K = typename F::K;
    const F& f = rep.field();
    const int n = rep.rank();
    SphericalData<F> out;
    out.a_o = f.zero();
    for (const auto& w : all_perms(n)) {
        int l = w.length();
        out.o[PBWKey{zero_weight(n), w, zero_weight(n)}] = f.t(l);
        out.a_o = out.a_o + f.t(2 * l);
    }
    if (out.a_o.is_zero())
        fail(Err::SphericalDegenerate, "a_o vanishes at this specialization");
    return out;
}

template <class F>
bool spherical_idempotent_check(const DahaRep<F>& rep, const SphericalData<F>& sd) {
    auto o2 = rep.multiply(sd.o, sd.o);
    auto scaled = sd.o;
    for (auto& [k, c] : scaled) c = c * sd.a_o;
    return o2 == scaled;
}

// ---------------------------------------------------------------------------
// Symmetries F_H and IM on PBW elements (generic coefficients).

enum class SymmetryKind { Fourier, IM };

// F_H: x_i -> y_i, y_i -> x_i, t_i -> t_i^{-1}, q -> q^{-1}, t -> t^{-1}
// IM:  t_i -> -t^2 t_i^{-1}, x_lam -> x_{-lam}, q -> q^{-1}, t -> t
inline QTScalar symmetry_scalar(SymmetryKind kind, const QTScalar& c) {
    return kind == SymmetryKind::Fourier ? c.flip_q().flip_t() : c.flip_q();
}

inline DahaWord<QTScalar> symmetry_word(const DahaRep<QtField>& rep, SymmetryKind kind,
                                        const PBWKey& key, const QTScalar& coeff) {
    const int n = rep.rank();
    DahaWord<QTScalar> out;
    std::vector<Token> toks;
    QTScalar c = symmetry_scalar(kind, coeff);
    if (kind == SymmetryKind::Fourier) {
        // y_{key.x} * prod t_{i}^{-1} * x_{key.y}
        bool xz = std::all_of(key.x.begin(), key.x.end(), [](auto v) { return v == 0; });
        if (!xz) {
            auto yt = rep.y_tokens(key.x);
            toks.insert(toks.end(), yt.begin(), yt.end());
        }
        for (int i : perm_reduced_word(key.w)) toks.push_back(Token::tinv(i));
        bool yz = std::all_of(key.y.begin(), key.y.end(), [](auto v) { return v == 0; });
        if (!yz) toks.push_back(Token::x(key.y));
        out.add(c, std::move(toks));
        return out;
    }
    // IM: x_lam -> x_{-lam}; t_i -> -t_i^{-1}; t_pi fixed; y_mu transported
    // through its t-word. The eigenvalues of t_i are t and -t^{-1}, and the
    // inverse-negate map swaps them, so the quadratic relation survives with
    // t fixed; a unit of the form c t^2 would move the eigenvalues off the
    // admissible pair.
    std::vector<Token> word;
    bool xz = std::all_of(key.x.begin(), key.x.end(), [](auto v) { return v == 0; });
    if (!xz) word.push_back(Token::x(wneg(key.x)));
    QTScalar unit(1l);
    for (int i : perm_reduced_word(key.w)) {
        word.push_back(Token::tinv(i));
        unit = -unit;
    }
    bool yz = std::all_of(key.y.begin(), key.y.end(), [](auto v) { return v == 0; });
    if (!yz) {
        for (const auto& tok : rep.y_tokens(key.y)) {
            switch (tok.kind) {
                case Token::T:
                    word.push_back(Token::tinv(tok.i));
                    unit = -unit;
                    break;
                case Token::Tinv:
                    word.push_back(Token::t(tok.i));
                    unit = -unit;
                    break;
                default:
                    word.push_back(tok);
            }
        }
    }
    out.add(c * unit, std::move(word));
    return out;
}

inline DahaElement<QTScalar> apply_symmetry(const DahaRep<QtField>& rep, SymmetryKind kind,
                                            const DahaElement<QTScalar>& e) {
    DahaWord<QTScalar> total;
    for (const auto& [key, c] : e) {
        DahaWord<QTScalar> w = symmetry_word(rep, kind, key, c);
        for (auto& t : w.terms) total.terms.push_back(std::move(t));
    }
    return rep.pbw_straighten(total);
}

// specialization of PBW elements to a root-of-unity point
inline DahaElement<CycScalar> specialize_element(const DahaElement<QTScalar>& e,
                                                 const SpecMap& s) {
    DahaElement<CycScalar> out;
    for (const auto& [k, c] : e) {
        CycScalar v = specialize(c, s);
        if (!v.is_zero()) out[k] = v;
    }
    return out;
}

} // namespace daha
