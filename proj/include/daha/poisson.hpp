#pragma once

#include <array>
#include <string>
#include <vector>

#include "daha/laurent.hpp"
#include "daha/report.hpp"
#include "daha/scalars.hpp"

namespace daha {

// Poisson brackets of the coordinate functions of (g, g') from the classical
// r-matrix R^c = (1/2) sum_i e_ii (x) e_ii + sum_{i<j} e_ij (x) e_ji, the
// q-linear coefficient of R^q at q = 1 up to an overall scalar:
//   {L_1, L_2}  = R^c_21 L_1 L_2 - L_1 L_2 R^c_12 + L_1 R^c_12 L_2 - L_2 R^c_21 L_1
//   {L'_1, L'_2} = same with L'
//   {L_1, L'_2} = -R^c_21 L_1 L'_2 - L_1 L'_2 R^c_21 + L'_2 R^c_21 L_1 - L_1 R^c_12 L'_2
// with the remaining block filled in by antisymmetry. Entries live in the
// polynomial ring on the 2 n^2 coordinates.

class PoissonTable {
public:
    using K = QTScalar;
    using Poly = LaurentPoly<K>;

    explicit PoissonTable(int n);

    int n() const { return n_; }
    int vars() const { return 2 * n_ * n_; }

    // variable indices: g_{ij} -> i*n + j, g'_{ij} -> n^2 + i*n + j (0-based)
    int var_g(int i, int j) const { return i * n_ + j; }
    int var_gp(int i, int j) const { return n_ * n_ + i * n_ + j; }
    Poly coordinate(int var) const {
        Weight e = zero_weight(vars());
        e[static_cast<std::size_t>(var)] = 1;
        return Poly::monomial(e, K(1l));
    }
    std::string var_name(int var) const {
        int m = var % (n_ * n_);
        std::string base = var < n_ * n_ ? "g" : "g'";
        return base + "[" + std::to_string(m / n_ + 1) + "," + std::to_string(m % n_ + 1) + "]";
    }

    // bracket of two coordinate variables
    const Poly& bracket(int a, int b) const { return table_[index(a, b)]; }

    // Leibniz extension to polynomials
    Poly bracket_poly(const Poly& p, const Poly& q) const;

    // antisymmetry of the displayed blocks; returns failing pair description
    bool antisymmetry_check(std::string& witness) const;
    // Jacobi on all coordinate triples
    bool jacobi_check(std::string& witness) const;

    Poly trace_power(bool primed, int a) const;  // tr(g^a) or tr(g'^a)

    Suite rs_report(int max_power) const;

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(vars()) +
               static_cast<std::size_t>(b);
    }
    Poly deriv(const Poly& p, int var) const;

    int n_;
    std::vector<Poly> table_;  // vars x vars
};

inline PoissonTable::PoissonTable(int n) : n_(n) {
    const int N = n * n;
    const int V = 2 * N;
    table_.assign(static_cast<std::size_t>(V) * static_cast<std::size_t>(V), Poly(V));

    // square matrices over the polynomial ring, flat row-major storage
    struct PolyMat {
        int N;
        std::vector<Poly> e;
        PolyMat(int N_, int vars) : N(N_), e(static_cast<std::size_t>(N_) * N_, Poly(vars)) {}
        Poly& at(int a, int b) { return e[static_cast<std::size_t>(a) * N + b]; }
        const Poly& at(int a, int b) const { return e[static_cast<std::size_t>(a) * N + b]; }
    };
    auto mul = [&](const PolyMat& A, const PolyMat& B) {
        PolyMat C(N, V);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                Poly acc(V);
                for (int c = 0; c < N; ++c)
                    if (!A.at(a, c).is_zero() && !B.at(c, b).is_zero())
                        acc = acc + A.at(a, c) * B.at(c, b);
                C.at(a, b) = acc;
            }
        return C;
    };
    auto sub = [&](const PolyMat& A, const PolyMat& B) {
        PolyMat C(N, V);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) C.at(a, b) = A.at(a, b) - B.at(a, b);
        return C;
    };
    auto add = [&](const PolyMat& A, const PolyMat& B) {
        PolyMat C(N, V);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) C.at(a, b) = A.at(a, b) + B.at(a, b);
        return C;
    };
    // R^c in the tensor basis e_x (x) e_y -> index x*n + y
    auto rc = [&](bool swapped) {
        PolyMat R(N, V);
        for (int i = 0; i < n; ++i) {
            R.at(i * n + i, i * n + i) =
                Poly::constant(V, QTScalar::rational(Int(1), Int(2)));
            for (int j = i + 1; j < n; ++j) {
                // e_ij (x) e_ji sends e_j (x) e_i to e_i (x) e_j
                R.at(i * n + j, j * n + i) = Poly::constant(V, K(1l));
            }
        }
        if (!swapped) return R;
        PolyMat S(N, V);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        S.at(b * n + a, d * n + c) = R.at(a * n + c, b * n + d);
        return S;
    };
    PolyMat r12 = rc(false), r21 = rc(true);

    // L_1 = L (x) I, L_2 = I (x) L with coordinate entries
    auto lmat = [&](bool primed, bool second_slot) {
        PolyMat L(N, V);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l) {
                        if (!second_slot && k == l)
                            L.at(i * n + k, j * n + l) =
                                coordinate(primed ? var_gp(i, j) : var_g(i, j));
                        else if (second_slot && i == j)
                            L.at(i * n + k, j * n + l) =
                                coordinate(primed ? var_gp(k, l) : var_g(k, l));
                    }
        return L;
    };

    auto fill_block = [&](const PolyMat& B, auto var_left, auto var_right) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l)
                        table_[index(var_left(i, j), var_right(k, l))] = B.at(i * n + k, j * n + l);
    };

    {
        PolyMat L1 = lmat(false, false), L2 = lmat(false, true);
        PolyMat B = add(sub(sub(mul(r21, mul(L1, L2)), mul(mul(L1, L2), r12)),
                            mul(L2, mul(r21, L1))),
                        mul(L1, mul(r12, L2)));
        fill_block(B, [&](int i, int j) { return var_g(i, j); },
                   [&](int k, int l) { return var_g(k, l); });
    }
    {
        PolyMat L1 = lmat(true, false), L2 = lmat(true, true);
        PolyMat B = add(sub(sub(mul(r21, mul(L1, L2)), mul(mul(L1, L2), r12)),
                            mul(L2, mul(r21, L1))),
                        mul(L1, mul(r12, L2)));
        fill_block(B, [&](int i, int j) { return var_gp(i, j); },
                   [&](int k, int l) { return var_gp(k, l); });
    }
    {
        // semiclassical limit of the third exchange family, signed to match
        // the orientation of the first two (the mixed display alone carries
        // the opposite overall sign and would break Jacobi on mixed triples)
        PolyMat L1 = lmat(false, false), L2 = lmat(true, true);
        PolyMat B = add(add(mul(r21, mul(L1, L2)), mul(L1, mul(r12, L2))),
                        sub(mul(mul(L1, L2), r21), mul(L2, mul(r21, L1))));
        fill_block(B, [&](int i, int j) { return var_g(i, j); },
                   [&](int k, int l) { return var_gp(k, l); });
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        table_[index(var_gp(k, l), var_g(i, j))] =
                            -table_[index(var_g(i, j), var_gp(k, l))];
    }
}

inline PoissonTable::Poly PoissonTable::deriv(const Poly& p, int var) const {
    Poly out(vars());
    for (const auto& [mu, c] : p.terms()) {
        std::int64_t e = mu[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Weight nu = mu;
        nu[static_cast<std::size_t>(var)] -= 1;
        out.add_term(nu, c * K(static_cast<long>(e)));
    }
    return out;
}

inline PoissonTable::Poly PoissonTable::bracket_poly(const Poly& p, const Poly& q) const {
    Poly out(vars());
    for (int a = 0; a < vars(); ++a) {
        Poly pa = deriv(p, a);
        if (pa.is_zero()) continue;
        for (int b = 0; b < vars(); ++b) {
            const Poly& br = bracket(a, b);
            if (br.is_zero()) continue;
            Poly qb = deriv(q, b);
            if (qb.is_zero()) continue;
            out = out + pa * qb * br;
        }
    }
    return out;
}

inline bool PoissonTable::antisymmetry_check(std::string& witness) const {
    for (int a = 0; a < vars(); ++a) {
        for (int b = 0; b < vars(); ++b) {
            if (!(bracket(a, b) + bracket(b, a)).is_zero()) {
                witness = "{" + var_name(a) + ", " + var_name(b) + "}";
                return false;
            }
        }
    }
    return true;
}

inline bool PoissonTable::jacobi_check(std::string& witness) const {
    for (int a = 0; a < vars(); ++a) {
        Poly pa = coordinate(a);
        for (int b = a + 1; b < vars(); ++b) {
            Poly pb = coordinate(b);
            for (int c = b + 1; c < vars(); ++c) {
                Poly pc = coordinate(c);
                Poly j = bracket_poly(pa, bracket(b, c)) + bracket_poly(pb, bracket(c, a)) +
                         bracket_poly(pc, bracket(a, b));
                if (!j.is_zero()) {
                    witness = "(" + var_name(a) + ", " + var_name(b) + ", " + var_name(c) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

inline PoissonTable::Poly PoissonTable::trace_power(bool primed, int a) const {
    const int V = vars();
    std::vector<Poly> M(static_cast<std::size_t>(n_) * n_, Poly(V));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            M[static_cast<std::size_t>(i) * n_ + j] = coordinate(primed ? var_gp(i, j) : var_g(i, j));
    std::vector<Poly> P = M;
    for (int s = 1; s < a; ++s) {
        std::vector<Poly> Q(static_cast<std::size_t>(n_) * n_, Poly(V));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Poly acc(V);
                for (int k = 0; k < n_; ++k)
                    acc = acc + P[static_cast<std::size_t>(i) * n_ + k] * M[static_cast<std::size_t>(k) * n_ + j];
                Q[static_cast<std::size_t>(i) * n_ + j] = acc;
            }
        P = std::move(Q);
    }
    Poly tr(V);
    for (int i = 0; i < n_; ++i) tr = tr + P[static_cast<std::size_t>(i) * n_ + i];
    return tr;
}

inline Suite PoissonTable::rs_report(int max_power) const {
    Suite s{"rs-bracket", {}};
    for (int a = 1; a <= max_power; ++a) {
        for (int b = 1; b <= max_power; ++b) {
            Poly br = bracket_poly(trace_power(false, a), trace_power(false, b));
            s.check("{tr(g^" + std::to_string(a) + "), tr(g^" + std::to_string(b) + ")} = 0",
                    br.is_zero(), br.is_zero() ? "" : br.str().substr(0, 160));
        }
    }
    return s;
}

} // namespace daha
