#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/report.hpp"
#include "daha/scalars.hpp"
#include "daha/weights.hpp"

namespace daha {

// Finitely supported vector over a weight-indexed basis (a_mu in the deformed
// module, c_{1 mu} in the quantum torus).
template <class K>
using WtVector = std::map<Weight, K>;

template <class K>
void wt_add(WtVector<K>& v, const Weight& mu, const K& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(mu, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) v.erase(it);
    }
}

enum class UqGen { E, F, Klam, C1lam };

struct UqToken {
    UqGen kind;
    int i = 0;      // for E/F, 1-based simple index
    Weight lam;     // for Klam/C1lam
    static UqToken e(int i) { return {UqGen::E, i, {}}; }
    static UqToken f(int i) { return {UqGen::F, i, {}}; }
    static UqToken k(Weight lam) { return {UqGen::Klam, 0, std::move(lam)}; }
    static UqToken c1(Weight lam) { return {UqGen::C1lam, 0, std::move(lam)}; }
};

// tilde(lam) = sum_{j != 1} lam_j omega_{j-1}
inline Weight tilde_weight(const Weight& lam) {
    const int n = static_cast<int>(lam.size());
    Weight t = zero_weight(n);
    for (int j = 2; j <= n; ++j)
        t = wsum(t, wscale(lam[static_cast<std::size_t>(j - 1)], omega(n, j - 1)));
    return t;
}

enum class UqModel { Wt, Torus };

// One basis-vector action. In the deformed module (dotted normalization):
//   k_lam  a_mu = q^{lam.mu} a_mu
//   f_i    a_mu = (q^{mu_i + 1} t^{-1} - q^{-mu_i - 1} t) a_{mu - alpha_i}
//   e_i    a_mu = (q^{mu_{i+1} + 1} t^{-1} - q^{-mu_{i+1} - 1} t) a_{mu + alpha_i}
//   c_1lam a_mu = q^{tilde.(mu + omega_n)} t^{-tilde.omega_n} a_{lam + mu}
// In the quantum torus:
//   k_lam  c_mu = q^{lam.mu} c_mu
//   e_j    c_mu = (q^{mu_{j+1}} - q^{-mu_{j+1}}) c_{mu + alpha_j}
//   f_j    c_mu = (q^{mu_j} - q^{-mu_j}) c_{mu - alpha_j}
//   c_1lam c_mu = q^{tilde.mu} c_{lam + mu}
template <class F>
struct UqRep {
    const F& field;
    int n;
    UqModel model;
    bool mutate_drop_t = false;  // control: drop the t-factors in the f action

    using K = typename F::K;

    WtVector<K> act_basis(const UqToken& g, const Weight& mu) const {
        WtVector<K> out;
        const F& f = field;
        std::int64_t m;
        switch (g.kind) {
            case UqGen::Klam:
                wt_add(out, mu, f.q(dot(g.lam, mu)));
                break;
            case UqGen::F:
                m = mu[static_cast<std::size_t>(g.i - 1)];
                if (model == UqModel::Wt) {
                    K c = mutate_drop_t ? f.q(m + 1) - f.q(-m - 1)
                                        : f.q(m + 1) * f.t(-1) - f.q(-m - 1) * f.t(1);
                    wt_add(out, wsum(mu, wneg(alpha(n, g.i))), c);
                } else {
                    wt_add(out, wsum(mu, wneg(alpha(n, g.i))), f.q(m) - f.q(-m));
                }
                break;
            case UqGen::E:
                m = mu[static_cast<std::size_t>(g.i)];
                if (model == UqModel::Wt) {
                    wt_add(out, wsum(mu, alpha(n, g.i)),
                           f.q(m + 1) * f.t(-1) - f.q(-m - 1) * f.t(1));
                } else {
                    wt_add(out, wsum(mu, alpha(n, g.i)), f.q(m) - f.q(-m));
                }
                break;
            case UqGen::C1lam: {
                Weight til = tilde_weight(g.lam);
                if (model == UqModel::Wt) {
                    K c = f.q(dot(til, wsum(mu, omega(n, n)))) * f.t(-dot(til, omega(n, n)));
                    wt_add(out, wsum(g.lam, mu), c);
                } else {
                    wt_add(out, wsum(g.lam, mu), f.q(dot(til, mu)));
                }
                break;
            }
        }
        return out;
    }

    WtVector<K> act(const UqToken& g, const WtVector<K>& v) const {
        WtVector<K> out;
        for (const auto& [mu, c] : v) {
            WtVector<K> part = act_basis(g, mu);
            for (const auto& [nu, d] : part) wt_add(out, nu, c * d);
        }
        return out;
    }

    WtVector<K> act_word(const std::vector<UqToken>& word, WtVector<K> v) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
        return v;
    }
};

template <class K>
WtVector<K> wt_sub(const WtVector<K>& a, const WtVector<K>& b) {
    WtVector<K> out = a;
    for (const auto& [mu, c] : b) wt_add(out, mu, -c);
    return out;
}

// spec-facing single-generator action in the deformed module
template <class F>
WtVector<typename F::K> wt_act(const F& field, int n, const UqToken& g,
                               const WtVector<typename F::K>& x) {
    UqRep<F> rep{field, n, UqModel::Wt};
    return rep.act(g, x);
}

// full defining-relation suite on the grid |mu_j| <= grid, both models
template <class F>
Suite uq_relation_check(const F& field, int n, int grid, UqModel model,
                        bool mutate_drop_t = false) {
    using K = typename F::K;
    UqRep<F> rep{field, n, model, mutate_drop_t};
    Suite suite{model == UqModel::Wt ? "uq-wt-model" : "uq-torus-model", {}};
    const F& f = field;

    auto window_zero = [&](auto&& op, std::string& witness) {
        bool ok = true;
        for_each_monomial(n, grid, [&](const Weight& mu) {
            if (!ok) return;
            WtVector<K> v;
            wt_add(v, mu, f.one());
            if (!op(v).empty()) {
                ok = false;
                witness = "a_(" + weight_str(mu) + ")";
            }
        });
        return ok;
    };

    std::vector<Weight> lams;
    for (int j = 1; j <= n; ++j) lams.push_back(eps(n, j));
    for (int i = 1; i < n; ++i) lams.push_back(alpha(n, i));

    // k_lam e_i = q^{lam.alpha_i} e_i k_lam and the f twin
    for (int i = 1; i < n; ++i) {
        for (const auto& lam : lams) {
            std::string w;
            bool ok = window_zero(
                [&](const WtVector<K>& v) {
                    auto lhs = rep.act(UqToken::k(lam), rep.act(UqToken::e(i), v));
                    auto rhs = rep.act(UqToken::e(i), rep.act(UqToken::k(lam), v));
                    for (auto& [mu, c] : rhs) c = c * f.q(dot(lam, alpha(n, i)));
                    return wt_sub(lhs, rhs);
                },
                w);
            suite.check("k-e exchange i=" + std::to_string(i) + " lam=(" + weight_str(lam) + ")",
                        ok, w);
            ok = window_zero(
                [&](const WtVector<K>& v) {
                    auto lhs = rep.act(UqToken::k(lam), rep.act(UqToken::f(i), v));
                    auto rhs = rep.act(UqToken::f(i), rep.act(UqToken::k(lam), v));
                    for (auto& [mu, c] : rhs) c = c * f.q(-dot(lam, alpha(n, i)));
                    return wt_sub(lhs, rhs);
                },
                w);
            suite.check("k-f exchange i=" + std::to_string(i) + " lam=(" + weight_str(lam) + ")",
                        ok, w);
        }
    }

    // k_lam k_mu = k_{lam + mu}
    {
        std::string w;
        Weight a = lams[0], b = lams.back();
        bool ok = window_zero(
            [&](const WtVector<K>& v) {
                auto lhs = rep.act(UqToken::k(a), rep.act(UqToken::k(b), v));
                auto rhs = rep.act(UqToken::k(wsum(a, b)), v);
                return wt_sub(lhs, rhs);
            },
            w);
        suite.check("k-lattice", ok, w);
    }

    // [e_i, f_j] = delta_ij (q - q^{-1})(k_{alpha_i} - k_{-alpha_i}) in the
    // dotted normalization
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            std::string w;
            bool ok = window_zero(
                [&](const WtVector<K>& v) {
                    auto lhs = wt_sub(rep.act(UqToken::e(i), rep.act(UqToken::f(j), v)),
                                      rep.act(UqToken::f(j), rep.act(UqToken::e(i), v)));
                    if (i == j) {
                        auto ka = rep.act(UqToken::k(alpha(n, i)), v);
                        auto kb = rep.act(UqToken::k(wneg(alpha(n, i))), v);
                        auto rhs = wt_sub(ka, kb);
                        for (auto& [mu, c] : rhs) c = c * (f.q(1) - f.q(-1));
                        return wt_sub(lhs, rhs);
                    }
                    return lhs;
                },
                w);
            suite.check("commutator e_" + std::to_string(i) + " f_" + std::to_string(j), ok, w);
        }
    }

    // dotted quantum Serre
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (i == j) continue;
            std::string w;
            if (std::abs(i - j) == 1) {
                for (bool use_e : {true, false}) {
                    auto X = [&](int a) { return use_e ? UqToken::e(a) : UqToken::f(a); };
                    bool ok = window_zero(
                        [&](const WtVector<K>& v) {
                            auto xxy = rep.act(X(i), rep.act(X(i), rep.act(X(j), v)));
                            auto xyx = rep.act(X(i), rep.act(X(j), rep.act(X(i), v)));
                            auto yxx = rep.act(X(j), rep.act(X(i), rep.act(X(i), v)));
                            for (auto& [mu, c] : xyx) c = c * (f.q(1) + f.q(-1));
                            return wt_sub(wt_sub(xxy, xyx), wneg_vec(yxx));
                        },
                        w);
                    suite.check(std::string("serre ") + (use_e ? "e" : "f") + "_" +
                                    std::to_string(i) + "," + std::to_string(j),
                                ok, w);
                }
            } else if (i < j) {
                bool ok = window_zero(
                    [&](const WtVector<K>& v) {
                        return wt_sub(rep.act(UqToken::e(i), rep.act(UqToken::e(j), v)),
                                      rep.act(UqToken::e(j), rep.act(UqToken::e(i), v)));
                    },
                    w);
                suite.check("distant commute e_" + std::to_string(i) + " e_" + std::to_string(j),
                            ok, w);
            }
        }
    }

    // quantum torus exchange through the c_{1 lam} action:
    // l(c_{1 eps_i}) l(c_{1 eps_j}) = q l(c_{1 eps_j}) l(c_{1 eps_i}) for i > j
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < i; ++j) {
            std::string w;
            bool ok = window_zero(
                [&](const WtVector<K>& v) {
                    auto lhs = rep.act(UqToken::c1(eps(n, i)), rep.act(UqToken::c1(eps(n, j)), v));
                    auto rhs = rep.act(UqToken::c1(eps(n, j)), rep.act(UqToken::c1(eps(n, i)), v));
                    for (auto& [mu, c] : rhs) c = c * f.q(1);
                    return wt_sub(lhs, rhs);
                },
                w);
            suite.check("torus exchange c_" + std::to_string(i) + " c_" + std::to_string(j), ok, w);
        }
    }

    return suite;
}

template <class K>
WtVector<K> wneg_vec(const WtVector<K>& v) {
    WtVector<K> out = v;
    for (auto& [mu, c] : out) c = -c;
    return out;
}

} // namespace daha
