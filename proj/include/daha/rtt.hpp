#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/linalg.hpp"
#include "daha/report.hpp"

namespace daha {

// R-matrix on V (x) V, V = K^n:
//   R = sum_{i,j} q^{delta_ij} e_ii (x) e_jj + (q - q^{-1}) sum_{i<j} e_ij (x) e_ji
inline Mat<QTScalar> r_matrix(int n) {
    const int N = n * n;
    Mat<QTScalar> R = zero_mat(N, N, QTScalar(0l));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            R(i * n + j, i * n + j) = i == j ? QTScalar::q() : QTScalar(1l);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            R(i * n + j, j * n + i) = QTScalar::q() - QTScalar::q(-1);
    return R;
}

inline Mat<QTScalar> flip_matrix(int n) {
    const int N = n * n;
    Mat<QTScalar> P = zero_mat(N, N, QTScalar(0l));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P(i * n + j, j * n + i) = QTScalar(1l);
    return P;
}

// embed an n^2 x n^2 two-slot matrix into slots (a, b) of V^{(x) 3}
inline Mat<QTScalar> embed3(const Mat<QTScalar>& R, int n, int a, int b) {
    const int M = n * n * n;
    Mat<QTScalar> out = zero_mat(M, M, QTScalar(0l));
    auto idx = [&](int x, int y, int z) { return (x * n + y) * n + z; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int src[3] = {x, y, z};
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        const QTScalar& c = R(u * n + v, src[a] * n + src[b]);
                        if (c.is_zero()) continue;
                        int dst[3] = {x, y, z};
                        dst[a] = u;
                        dst[b] = v;
                        out(idx(dst[0], dst[1], dst[2]), idx(src[0], src[1], src[2])) += c;
                    }
            }
    return out;
}

struct YbeResult {
    bool pass = false;
    std::string witness;
};

inline YbeResult ybe_check_matrix(const Mat<QTScalar>& R, int n) {
    Mat<QTScalar> R12 = embed3(R, n, 0, 1), R13 = embed3(R, n, 0, 2), R23 = embed3(R, n, 1, 2);
    Mat<QTScalar> lhs = R12 * R13 * R23;
    Mat<QTScalar> rhs = R23 * R13 * R12;
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j)
            if (!(lhs(i, j) - rhs(i, j)).is_zero())
                return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    return {true, ""};
}

inline YbeResult ybe_check(int n) { return ybe_check_matrix(r_matrix(n), n); }

// Hecke-type spectral identity (P R - q)(P R + q^{-1}) = 0
inline bool hecke_identity_check(int n) {
    const int N = n * n;
    Mat<QTScalar> PR = flip_matrix(n) * r_matrix(n);
    Mat<QTScalar> A = PR, B = PR;
    for (int i = 0; i < N; ++i) {
        A(i, i) -= QTScalar::q();
        B(i, i) += QTScalar::q(-1);
    }
    return is_zero_mat(Mat<QTScalar>(A * B));
}

// ---------------------------------------------------------------------------
// Quadratic algebras from matrix exchange relations. A relation is a sparse
// degree-2 form over ordered generator pairs.

struct QuadraticAlgebra {
    std::string kind;
    int n = 0;
    int gens = 0;
    std::vector<std::string> names;
    using Rel = std::map<std::pair<int, int>, QTScalar>;
    std::vector<Rel> relations;
};

namespace rtt_detail {

using Lin = std::map<int, QTScalar>;                    // degree-1 entries
using Quad = std::map<std::pair<int, int>, QTScalar>;   // degree-2 entries
using LinMat = std::vector<Lin>;                        // N x N flattened
using QuadMat = std::vector<Quad>;

// scalar_left: S * T, else T * S
inline LinMat scalar_times_lin(int N, const Mat<QTScalar>& S, const LinMat& T, bool scalar_left) {
    LinMat out(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Lin acc;
            for (int c = 0; c < N; ++c) {
                const QTScalar& s = scalar_left ? S(a, c) : S(c, b);
                const Lin& t = scalar_left ? T[static_cast<std::size_t>(c) * N + b]
                                           : T[static_cast<std::size_t>(a) * N + c];
                if (s.is_zero()) continue;
                for (const auto& [g, coef] : t) {
                    QTScalar v = s * coef;
                    auto [it, fresh] = acc.emplace(g, v);
                    if (!fresh) {
                        it->second = it->second + v;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
            }
            out[static_cast<std::size_t>(a) * N + b] = std::move(acc);
        }
    return out;
}

inline QuadMat lin_times_lin(int N, const LinMat& A, const LinMat& B) {
    QuadMat out(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Quad acc;
            for (int c = 0; c < N; ++c) {
                const Lin& x = A[static_cast<std::size_t>(a) * N + c];
                const Lin& y = B[static_cast<std::size_t>(c) * N + b];
                for (const auto& [g1, c1] : x)
                    for (const auto& [g2, c2] : y) {
                        QTScalar v = c1 * c2;
                        auto [it, fresh] = acc.emplace(std::make_pair(g1, g2), v);
                        if (!fresh) {
                            it->second = it->second + v;
                            if (it->second.is_zero()) acc.erase(it);
                        }
                    }
            }
            out[static_cast<std::size_t>(a) * N + b] = std::move(acc);
        }
    return out;
}

inline QuadMat quad_times_scalar(int N, const QuadMat& A, const Mat<QTScalar>& S) {
    QuadMat out(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Quad acc;
            for (int c = 0; c < N; ++c) {
                const Quad& x = A[static_cast<std::size_t>(a) * N + c];
                const QTScalar& s = S(c, b);
                if (s.is_zero()) continue;
                for (const auto& [w, coef] : x) {
                    QTScalar v = coef * s;
                    auto [it, fresh] = acc.emplace(w, v);
                    if (!fresh) {
                        it->second = it->second + v;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
            }
            out[static_cast<std::size_t>(a) * N + b] = std::move(acc);
        }
    return out;
}

// T-slot matrices: slot 0 gives T_13 (entries t_{row_1, col_1}), slot 1 gives
// T_23; gen_base shifts generator indices (the primed copy)
inline LinMat t_slot(int n, int slot, int gen_base) {
    const int N = n * n;
    LinMat T(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Lin& e = T[static_cast<std::size_t>(a * n + b) * N + (c * n + d)];
                    if (slot == 0 && b == d) e[gen_base + a * n + c] = QTScalar(1l);
                    if (slot == 1 && a == c) e[gen_base + b * n + d] = QTScalar(1l);
                }
    return T;
}

// relations of A T1 B T2a - T2b C T1b D = 0 with scalar matrices A, B, C, D
inline void exchange_relations(QuadraticAlgebra& alg, int n, const Mat<QTScalar>& A,
                               const LinMat& T1, const Mat<QTScalar>& B, const LinMat& T2a,
                               const LinMat& T2b, const Mat<QTScalar>& C, const LinMat& T1b,
                               const Mat<QTScalar>& D) {
    const int N = n * n;
    LinMat AT1 = scalar_times_lin(N, A, T1, true);
    LinMat AT1B = scalar_times_lin(N, B, AT1, false);
    QuadMat lhs = lin_times_lin(N, AT1B, T2a);
    LinMat CT1 = scalar_times_lin(N, C, T1b, true);
    QuadMat rhs0 = lin_times_lin(N, T2b, CT1);
    QuadMat rhs = quad_times_scalar(N, rhs0, D);
    for (int e = 0; e < N * N; ++e) {
        QuadraticAlgebra::Rel r = lhs[static_cast<std::size_t>(e)];
        for (const auto& [w, c] : rhs[static_cast<std::size_t>(e)]) {
            auto [it, fresh] = r.emplace(w, -c);
            if (!fresh) {
                it->second = it->second - c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
        if (!r.empty()) alg.relations.push_back(std::move(r));
    }
}

} // namespace rtt_detail

enum class AlgebraKind { ReflectionF, DoubleD };

// reflection_F: n^2 generators t_ij with R21 T13 R12 T23 = T23 R21 T13 R12;
// double_D: 2 n^2 generators l_ij, l'_ij with the three exchange families
inline QuadraticAlgebra build_algebra(AlgebraKind kind, int n) {
    using namespace rtt_detail;
    QuadraticAlgebra alg;
    alg.n = n;
    Mat<QTScalar> R = r_matrix(n);
    Mat<QTScalar> P = flip_matrix(n);
    Mat<QTScalar> R21 = P * R * P;
    LinMat T1 = t_slot(n, 0, 0), T2 = t_slot(n, 1, 0);
    if (kind == AlgebraKind::ReflectionF) {
        alg.kind = "reflection_F";
        alg.gens = n * n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                alg.names.push_back("t[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
        exchange_relations(alg, n, R21, T1, R, T2, T2, R21, T1, R);
    } else {
        alg.kind = "double_D";
        alg.gens = 2 * n * n;
        for (const char* base : {"l", "lp"})
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    alg.names.push_back(std::string(base) + "[" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + "]");
        LinMat L1p = t_slot(n, 0, n * n), L2p = t_slot(n, 1, n * n);
        Mat<QTScalar> R21inv = exact_inverse(R21, QTScalar(0l), QTScalar(1l));
        exchange_relations(alg, n, R21, T1, R, T2, T2, R21, T1, R);
        exchange_relations(alg, n, R21, L1p, R, L2p, L2p, R21, L1p, R);
        exchange_relations(alg, n, R21, T1, R, L2p, L2p, R21, T1, R21inv);
    }
    std::sort(alg.relations.begin(), alg.relations.end(),
              [](const QuadraticAlgebra::Rel& x, const QuadraticAlgebra::Rel& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  auto xi = x.begin();
                  auto yi = y.begin();
                  for (; xi != x.end(); ++xi, ++yi) {
                      if (xi->first != yi->first) return xi->first < yi->first;
                      int c = scalar_cmp(xi->second, yi->second);
                      if (c != 0) return c < 0;
                  }
                  return false;
              });
    alg.relations.erase(std::unique(alg.relations.begin(), alg.relations.end()),
                        alg.relations.end());
    return alg;
}

// ---------------------------------------------------------------------------
// Sparse exact row echelon over the generic field, incremental.

class SparseEchelon {
public:
    using Row = std::vector<std::pair<std::int64_t, QTScalar>>;  // sorted by column

    Row reduce(Row r) const {
        for (;;) {
            if (r.empty()) return r;
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) return r;
            r = axpy(r, rows_[it->second], -r.front().second);
        }
    }

    bool insert(Row r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        QTScalar inv = r.front().second.inverse();
        for (auto& [c, v] : r) v = v * inv;
        pivots_.emplace(r.front().first, rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    static Row axpy(const Row& x, const Row& y, const QTScalar& c) {
        Row out;
        out.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i].first < y[j].first) {
                out.push_back(x[i++]);
            } else if (x[i].first > y[j].first) {
                QTScalar v = c * y[j].second;
                if (!v.is_zero()) out.push_back({y[j].first, v});
                ++j;
            } else {
                QTScalar v = x[i].second + c * y[j].second;
                if (!v.is_zero()) out.push_back({x[i].first, v});
                ++i, ++j;
            }
        }
        for (; i < x.size(); ++i) out.push_back(x[i]);
        for (; j < y.size(); ++j) {
            QTScalar v = c * y[j].second;
            if (!v.is_zero()) out.push_back({y[j].first, v});
        }
        return out;
    }

    std::map<std::int64_t, std::size_t> pivots_;
    std::vector<Row> rows_;
};

inline void sort_row(SparseEchelon::Row& row) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
}

// echelonized span of prefix (x) relation (x) suffix inside degree-D words
inline SparseEchelon relation_span(const QuadraticAlgebra& alg, int D) {
    const std::int64_t N = alg.gens;
    SparseEchelon span;
    for (int k = 0; k + 2 <= D; ++k) {
        std::int64_t prefixes = 1, suffixes = 1;
        for (int i = 0; i < k; ++i) prefixes *= N;
        for (int i = 0; i < D - 2 - k; ++i) suffixes *= N;
        for (std::int64_t p = 0; p < prefixes; ++p)
            for (std::int64_t s = 0; s < suffixes; ++s)
                for (const auto& rel : alg.relations) {
                    SparseEchelon::Row row;
                    for (const auto& [w, c] : rel)
                        row.push_back({((p * N + w.first) * N + w.second) * suffixes + s, c});
                    sort_row(row);
                    span.insert(std::move(row));
                }
    }
    return span;
}

// dimension of the degree-d component of the quotient of the free algebra by
// the two-sided ideal generated in degree 2
inline std::int64_t graded_dim(const QuadraticAlgebra& alg, int d, std::int64_t budget = 2000000) {
    const std::int64_t N = alg.gens;
    if (d < 0) fail(Err::ConfigError, "negative degree");
    if (d == 0) return 1;
    if (d == 1) return N;
    std::int64_t dim = 1;
    for (int i = 0; i < d; ++i) {
        dim *= N;
        if (dim > budget) fail(Err::ResourceBound, "free degree-d space too large");
    }
    SparseEchelon ech = relation_span(alg, d);
    return dim - static_cast<std::int64_t>(ech.rank());
}

// ---------------------------------------------------------------------------
// Degree-d central elements: z with z g - g z in the relation span of degree
// d + 1 for every generator g.

struct CentralBasis {
    int degree = 0;
    std::vector<std::map<std::int64_t, QTScalar>> basis;  // word-index -> coeff
    std::vector<std::string> pretty;
};

inline std::string word_name(const QuadraticAlgebra& alg, std::int64_t w, int d) {
    std::vector<int> letters(static_cast<std::size_t>(d));
    for (int i = d - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<int>(w % alg.gens);
        w /= alg.gens;
    }
    std::string s;
    for (int i = 0; i < d; ++i) {
        if (i) s += "*";
        s += alg.names[static_cast<std::size_t>(letters[static_cast<std::size_t>(i)])];
    }
    return s;
}

inline CentralBasis central_elements(const QuadraticAlgebra& alg, int d,
                                     std::int64_t budget = 2000000) {
    const std::int64_t N = alg.gens;
    CentralBasis out;
    out.degree = d;
    std::int64_t words = 1;
    for (int i = 0; i < d; ++i) {
        words *= N;
        if (words * N > budget) fail(Err::ResourceBound, "degree too large for centrality solve");
    }
    if (d == 0) {
        out.basis.push_back({});
        out.pretty.push_back("1");
        return out;
    }
    SparseEchelon span = relation_span(alg, d + 1);
    // conditions per generator g: sum_w c_w * reduce([w g] - [g w]) = 0
    std::map<std::int64_t, std::map<std::int64_t, QTScalar>> cond;  // (g, col) -> (w -> coeff)
    std::int64_t shift_front = 1;
    for (int i = 0; i < d; ++i) shift_front *= N;
    for (std::int64_t w = 0; w < words; ++w) {
        for (std::int64_t g = 0; g < N; ++g) {
            std::int64_t wg = w * N + g;
            std::int64_t gw = g * shift_front + w;
            if (wg == gw) continue;
            SparseEchelon::Row row{{wg, QTScalar(1l)}, {gw, -QTScalar(1l)}};
            sort_row(row);
            SparseEchelon::Row red = span.reduce(std::move(row));
            for (const auto& [col, c] : red) cond[g * (words * N) + col][w] = c;
        }
    }
    // nullspace over the coefficients c_w
    std::vector<std::vector<QTScalar>> M;
    for (const auto& [key, row] : cond) {
        std::vector<QTScalar> dense(static_cast<std::size_t>(words), QTScalar(0l));
        for (const auto& [w, c] : row) dense[static_cast<std::size_t>(w)] = c;
        M.push_back(std::move(dense));
    }
    std::vector<std::int64_t> pivot_col;
    std::size_t rank = 0;
    for (std::int64_t col = 0; col < words && rank < M.size(); ++col) {
        std::size_t piv = rank;
        while (piv < M.size() && M[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[rank]);
        QTScalar inv = M[rank][static_cast<std::size_t>(col)].inverse();
        for (std::int64_t j = col; j < words; ++j)
            M[rank][static_cast<std::size_t>(j)] = M[rank][static_cast<std::size_t>(j)] * inv;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == rank || M[r][static_cast<std::size_t>(col)].is_zero()) continue;
            QTScalar f = M[r][static_cast<std::size_t>(col)];
            for (std::int64_t j = col; j < words; ++j)
                M[r][static_cast<std::size_t>(j)] =
                    M[r][static_cast<std::size_t>(j)] - f * M[rank][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(words), false);
    for (auto c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    SparseEchelon span_d = relation_span(alg, d);
    SparseEchelon reps;  // dedupe representatives modulo relations
    for (std::int64_t col = 0; col < words; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        std::map<std::int64_t, QTScalar> vec;
        vec[col] = QTScalar(1l);
        for (std::size_t r = 0; r < rank; ++r) {
            const QTScalar& c = M[r][static_cast<std::size_t>(col)];
            if (!c.is_zero()) vec[pivot_col[r]] = -c;
        }
        SparseEchelon::Row row;
        for (const auto& [w, c] : vec) row.push_back({w, c});
        sort_row(row);
        row = span_d.reduce(std::move(row));
        if (row.empty()) continue;
        if (!reps.insert(row)) continue;
        std::map<std::int64_t, QTScalar> cleaned;
        std::string pretty;
        for (const auto& [w, c] : row) {
            cleaned[w] = c;
            if (!pretty.empty()) pretty += " + ";
            pretty += "(" + c.str() + ")*" + word_name(alg, w, d);
        }
        out.basis.push_back(std::move(cleaned));
        out.pretty.push_back(std::move(pretty));
    }
    return out;
}

// re-verify a central element by commutation against all degree-2 words
inline bool central_reverify(const QuadraticAlgebra& alg,
                             const std::map<std::int64_t, QTScalar>& z, int d) {
    const std::int64_t N = alg.gens;
    SparseEchelon span = relation_span(alg, d + 2);
    std::int64_t shift_front = 1;
    for (int i = 0; i < d; ++i) shift_front *= N;
    for (std::int64_t g = 0; g < N; ++g) {
        for (std::int64_t h = 0; h < N; ++h) {
            std::map<std::int64_t, QTScalar> comm;
            std::int64_t gh = g * N + h;
            auto add = [&](std::int64_t col, const QTScalar& v) {
                auto [it, fresh] = comm.emplace(col, v);
                if (!fresh) {
                    it->second = it->second + v;
                    if (it->second.is_zero()) comm.erase(it);
                }
            };
            for (const auto& [w, c] : z) {
                add(w * N * N + gh, c);         // z g h
                add(gh * shift_front + w, -c);  // g h z
            }
            SparseEchelon::Row row;
            for (const auto& [w, c] : comm) row.push_back({w, c});
            sort_row(row);
            if (!span.reduce(std::move(row)).empty()) return false;
        }
    }
    return true;
}

// q-normality: twist exponents k_g with z g - q^{k_g} g z in the relation
// span, one per generator; nullopt if some generator admits no twist in range
inline std::optional<std::vector<int>> normal_twists(const QuadraticAlgebra& alg,
                                                     const std::map<std::int64_t, QTScalar>& z,
                                                     int d, int range = 8) {
    const std::int64_t N = alg.gens;
    SparseEchelon span = relation_span(alg, d + 1);
    std::int64_t shift_front = 1;
    for (int i = 0; i < d; ++i) shift_front *= N;
    std::vector<int> twists;
    for (std::int64_t g = 0; g < N; ++g) {
        bool found = false;
        for (int k = -range; k <= range && !found; ++k) {
            std::map<std::int64_t, QTScalar> diff;
            auto add = [&](std::int64_t col, const QTScalar& v) {
                auto [it, fresh] = diff.emplace(col, v);
                if (!fresh) {
                    it->second = it->second + v;
                    if (it->second.is_zero()) diff.erase(it);
                }
            };
            for (const auto& [w, c] : z) {
                add(w * N + g, c);
                add(g * shift_front + w, -(c * QTScalar::q(k)));
            }
            SparseEchelon::Row row;
            for (const auto& [w, c] : diff) row.push_back({w, c});
            sort_row(row);
            if (span.reduce(std::move(row)).empty()) {
                twists.push_back(k);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return twists;
}

} // namespace daha
