#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/affine_weyl.hpp"
#include "daha/torus_ops.hpp"

namespace daha {

// ---------------------------------------------------------------------------
// Tokens and formal words in the DAHA generators. Inverse Hecke tokens are
// expanded eagerly through the quadratic relation, so plain words only carry
// t_i, t_pi^{±1} and x_lam.

struct Token {
    enum Kind { T, Tinv, PiPow, X } kind;
    int i = 0;                // generator index for T/Tinv
    std::int64_t power = 0;   // for PiPow
    Weight lam;               // for X
    static Token t(int i) { return {T, i, 0, {}}; }
    static Token tinv(int i) { return {Tinv, i, 0, {}}; }
    static Token pi(std::int64_t p) { return {PiPow, 0, p, {}}; }
    static Token x(Weight l) { return {X, 0, 0, std::move(l)}; }
};

template <class K>
struct DahaWord {
    std::vector<std::pair<K, std::vector<Token>>> terms;
    void add(K c, std::vector<Token> w) { terms.push_back({std::move(c), std::move(w)}); }
};

// PBW triple x_lam t_w y_mu
struct PBWKey {
    Weight x;
    Perm w;
    Weight y;
    bool operator<(const PBWKey& o) const {
        if (x != o.x) return x < o.x;
        if (w.oneline() != o.w.oneline()) return w.oneline() < o.w.oneline();
        return y < o.y;
    }
    bool operator==(const PBWKey& o) const = default;
};

template <class K>
using DahaElement = std::map<PBWKey, K>;

// key order for extended affine Weyl elements
struct AwLess {
    bool operator()(const ExtAffineElt& a, const ExtAffineElt& b) const {
        if (a.w.oneline() != b.w.oneline()) return a.w.oneline() < b.w.oneline();
        return a.lam < b.lam;
    }
};

// ---------------------------------------------------------------------------
// DahaRep: the polynomial representation and the straightening engine for a
// fixed rank n over a field policy F. Parameters: t_i acts by the
// Demazure-Lusztig operator, x_lam by multiplication, t_pi by the zero-length
// rotation; the affine reflection comes from s_0 = s_theta tau_{-theta}.

template <class F>
class DahaRep {
public:
    using K = typename F::K;
    using LP = LaurentPoly<K>;
    using Hecke = std::map<ExtAffineElt, K, AwLess>;
    // x-graded Hecke normal form: sum of c * x_lam * t_{we}
    struct XHKey {
        Weight x;
        ExtAffineElt we;
        bool operator<(const XHKey& o) const {
            if (x != o.x) return x < o.x;
            return AwLess{}(we, o.we);
        }
    };
    using XHecke = std::map<XHKey, K>;

    DahaRep(const F& field, int n) : f_(field), n_(n) {
        for (int i = 0; i < n; ++i) gens_.push_back(DLGen<F>::make(f_, n, i));
    }

    const F& field() const { return f_; }
    int rank() const { return n_; }

    // --- polynomial representation --------------------------------------

    // t_i action: zeta s_i + (zeta - zeta^{-1}) (1 - x^{beta_i})^{-1} (1 - s_i)
    LP apply_t(int i, const LP& p) const {
        const DLGen<F>& g = gens_[static_cast<std::size_t>(i)];
        LP refl = apply_refl(g, p);
        LP dd = dd_apply_gen(f_, g, p);
        return refl.scale(f_.t(1)) + dd.scale(f_.t(1) - f_.t(-1));
    }
    LP apply_tinv(int i, const LP& p) const {
        return apply_t(i, p) - p.scale(f_.t(1) - f_.t(-1));
    }
    // t_pi: x^mu -> q^{-2 mu_n} x^{c mu); t_pi^{-1}: x^mu -> q^{2 mu_1} x^{c^{-1} mu}
    LP apply_pi(std::int64_t power, const LP& p) const {
        LP r = p;
        Perm c = Perm::cycle(n_);
        Perm cinv = c.inverse();
        for (std::int64_t s = 0; s < std::llabs(power); ++s) {
            LP next(n_);
            for (const auto& [mu, coef] : r.terms()) {
                if (power > 0)
                    next.add_term(c.act(mu), coef * f_.q(-2 * mu[static_cast<std::size_t>(n_ - 1)]));
                else
                    next.add_term(cinv.act(mu), coef * f_.q(2 * mu[0]));
            }
            r = std::move(next);
        }
        return r;
    }
    LP apply_x(const Weight& lam, const LP& p) const {
        return p.mul_mono(lam, f_.one());
    }

    LP apply_token(const Token& tok, const LP& p) const {
        switch (tok.kind) {
            case Token::T: return apply_t(tok.i, p);
            case Token::Tinv: return apply_tinv(tok.i, p);
            case Token::PiPow: return apply_pi(tok.power, p);
            case Token::X: return apply_x(tok.lam, p);
        }
        return p;
    }
    // word acts left-to-right as operator composition: word[0] is applied last
    LP apply_word(const std::vector<Token>& word, LP p) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it) p = apply_token(*it, p);
        return p;
    }
    LP apply_daha_word(const DahaWord<K>& w, const LP& p) const {
        LP acc(n_);
        for (const auto& [c, word] : w.terms) acc = acc + apply_word(word, p).scale(c);
        return acc;
    }
    LP apply_element(const DahaElement<K>& e, const LP& p) const {
        LP acc(n_);
        for (const auto& [key, c] : e)
            acc = acc + apply_word(element_tokens(key), p).scale(c);
        return acc;
    }

    // group element as operator (used for relation checks): product over the
    // reduced word of zeta-free reflection operators would lose the Hecke
    // normalization, so this is only the underlying w tau_lam action
    LP apply_group(const ExtAffineElt& e, const LP& p) const {
        AffineWord word = reduced_word(e);
        LP r = apply_pi(word.pi_power, p);
        for (auto it = word.refl.rbegin(); it != word.refl.rend(); ++it)
            r = apply_refl(gens_[static_cast<std::size_t>(*it)], r);
        return r;
    }

    LP apply_refl(const DLGen<F>& g, const LP& p) const {
        LP out(n_);
        for (const auto& [mu, coef] : p.terms()) {
            auto [scal, img] = g.refl_mono(f_, mu);
            out.add_term(img, coef * scal);
        }
        return out;
    }

    LP monomial(const Weight& mu) const { return LP::monomial(mu, f_.one()); }

    // --- tokens for PBW data ---------------------------------------------

    // canonical dominant decomposition lam = lam_plus - lam_minus
    static std::pair<Weight, Weight> dominant_pair(const Weight& lam) {
        const std::size_t n = lam.size();
        Weight minus(n, 0);
        for (std::size_t i = n - 1; i-- > 0;)
            minus[i] = minus[i + 1] + std::max<std::int64_t>(0, lam[i + 1] - lam[i]);
        return {wsum(lam, minus), minus};
    }

    std::vector<Token> y_tokens(const Weight& mu) const {
        auto [plus, minus] = dominant_pair(mu);
        std::vector<Token> out;
        AffineWord wp = reduced_word(ExtAffineElt::translation(plus));
        for (int i : wp.refl) out.push_back(Token::t(i));
        if (wp.pi_power) out.push_back(Token::pi(wp.pi_power));
        if (!std::all_of(minus.begin(), minus.end(), [](auto v) { return v == 0; })) {
            AffineWord wm = reduced_word(ExtAffineElt::translation(minus));
            if (wm.pi_power) out.push_back(Token::pi(-wm.pi_power));
            for (auto it = wm.refl.rbegin(); it != wm.refl.rend(); ++it)
                out.push_back(Token::tinv(*it));
        }
        return out;
    }

    std::vector<Token> element_tokens(const PBWKey& key) const {
        std::vector<Token> out;
        bool xz = std::all_of(key.x.begin(), key.x.end(), [](auto v) { return v == 0; });
        if (!xz) out.push_back(Token::x(key.x));
        for (int i : perm_reduced_word(key.w)) out.push_back(Token::t(i));
        bool yz = std::all_of(key.y.begin(), key.y.end(), [](auto v) { return v == 0; });
        if (!yz) {
            auto yt = y_tokens(key.y);
            out.insert(out.end(), yt.begin(), yt.end());
        }
        return out;
    }

    // --- straightening ----------------------------------------------------

    // right multiplication of the x-Hecke normal form by one token
    XHecke mul_token(const XHecke& h, const Token& tok) const {
        switch (tok.kind) {
            case Token::T: return mul_t(h, tok.i, false);
            case Token::Tinv: return mul_t(h, tok.i, true);
            case Token::PiPow: return mul_pi(h, tok.power);
            case Token::X: return mul_x(h, XToken{tok.lam, 0});
        }
        return h;
    }

    XHecke straighten_word(const DahaWord<K>& w) const {
        XHecke acc;
        for (const auto& [c, word] : w.terms) {
            XHecke cur;
            cur[XHKey{zero_weight(n_), ExtAffineElt::identity(n_)}] = c;
            for (const auto& tok : word) cur = mul_token(cur, tok);
            for (const auto& [k, v] : cur) xh_add(acc, k, v);
        }
        return acc;
    }

    DahaElement<K> pbw_straighten(const DahaWord<K>& w) const {
        return pbw_extract(straighten_word(w));
    }

    DahaElement<K> multiply(const DahaElement<K>& a, const DahaElement<K>& b) const {
        DahaWord<K> w;
        for (const auto& [ka, ca] : a) {
            for (const auto& [kb, cb] : b) {
                std::vector<Token> toks = element_tokens(ka);
                auto tb = element_tokens(kb);
                toks.insert(toks.end(), tb.begin(), tb.end());
                w.add(ca * cb, std::move(toks));
            }
        }
        return pbw_straighten(w);
    }

    // Hecke expansion of the PBW basis element t_w y_mu
    Hecke y_basis_expansion(const Perm& w, const Weight& mu) const {
        XHecke h;
        h[XHKey{zero_weight(n_), ExtAffineElt::finite(w)}] = f_.one();
        for (const auto& tok : y_tokens(mu)) h = mul_token(h, tok);
        Hecke out;
        for (const auto& [k, v] : h) {
            // no x tokens were introduced
            out[k.we] = v;
        }
        return out;
    }

    // convert x_lam t_we sums to the PBW basis x_lam t_w y_mu
    DahaElement<K> pbw_extract(const XHecke& h) const;

    // collapse an x token (lam, m): x_delta = q^{-2}
    std::pair<Weight, K> collapse(const XToken& v) const { return {v.lam, f_.q(-2 * v.dexp)}; }

    // token-level geometric sum (x_v - x_{s_i v}) / (1 - x_{beta_i});
    // beta_i = (alpha_i, 0) for i >= 1 and -(theta, 1) for i = 0
    std::vector<std::pair<XToken, K>> geom_tokens(int i, const XToken& v) const {
        Weight beta;
        std::int64_t betad;
        std::int64_t d;
        if (i >= 1) {
            beta = alpha(n_, i);
            betad = 0;
            d = dot(alpha(n_, i), v.lam);
        } else {
            beta = wneg(theta(n_));
            betad = -1;
            d = -dot(theta(n_), v.lam);
        }
        std::vector<std::pair<XToken, K>> out;
        if (d > 0) {
            for (std::int64_t j = 1; j <= d; ++j)
                out.push_back({XToken{wsum(v.lam, wscale(-j, beta)), v.dexp - j * betad}, -f_.one()});
        } else if (d < 0) {
            for (std::int64_t j = 0; j < -d; ++j)
                out.push_back({XToken{wsum(v.lam, wscale(j, beta)), v.dexp + j * betad}, f_.one()});
        }
        return out;
    }

private:
    void xh_add(XHecke& h, const XHKey& k, const K& v) const {
        if (v.is_zero()) return;
        auto [it, fresh] = h.emplace(k, v);
        if (!fresh) {
            it->second = it->second + v;
            if (it->second.is_zero()) h.erase(it);
        }
    }

    XHecke mul_t(const XHecke& h, int i, bool inv) const {
        XHecke out;
        const K corr = f_.t(1) - f_.t(-1);
        for (const auto& [k, c] : h) {
            ExtAffineElt ws = k.we * ExtAffineElt::simple(n_, i);
            if (aw_length(ws) > aw_length(k.we)) {
                xh_add(out, XHKey{k.x, ws}, c);
                if (inv) xh_add(out, k, -(c * corr));
            } else {
                // t_we t_i = t_{we s_i} + (zeta - zeta^{-1}) t_we
                xh_add(out, XHKey{k.x, ws}, c);
                if (!inv) xh_add(out, k, c * corr);
            }
        }
        return out;
    }

    XHecke mul_pi(const XHecke& h, std::int64_t p) const {
        XHecke out;
        ExtAffineElt pi = p >= 0 ? ExtAffineElt::pi_elt(n_) : ExtAffineElt::pi_elt(n_).inverse();
        for (const auto& [k, c] : h) {
            ExtAffineElt e = k.we;
            for (std::int64_t s = 0; s < std::llabs(p); ++s) e = e * pi;
            xh_add(out, XHKey{k.x, e}, c);
        }
        return out;
    }

    XHecke mul_x(const XHecke& h, const XToken& v) const {
        XHecke out;
        for (const auto& [k, c] : h) {
            Hxk hx = hecke_times_x(k.we, v);
            for (const auto& [kk, cc] : hx)
                xh_add(out, XHKey{wsum(k.x, kk.x), kk.we}, c * cc);
        }
        return out;
    }

    using Hxk = XHecke;  // result of t_we * x_v: sums of x * t

    // t_{we} x_v as sums c x_nu t_{ve}; recursion on right descents
    Hxk hecke_times_x(const ExtAffineElt& we, const XToken& v) const {
        auto memo = memo_.find(MemoKey{we, v.lam, v.dexp});
        if (memo != memo_.end()) return memo->second;
        Hxk out;
        int len = aw_length(we);
        if (len == 0) {
            XToken img = xact(we, v);
            auto [lam, scal] = collapse(img);
            out[XHKey{lam, we}] = scal;
        } else {
            int i = -1;
            for (int j = 0; j < n_; ++j) {
                if (aw_length(we * ExtAffineElt::simple(n_, j)) < len) {
                    i = j;
                    break;
                }
            }
            ExtAffineElt wp = we * ExtAffineElt::simple(n_, i);  // we = wp * s_i
            // t_i x_v = x_{s_i v} t_i + (zeta - zeta^{-1}) * geom_i(v)
            XToken sv = xact(ExtAffineElt::simple(n_, i), v);
            Hxk main = hecke_times_x(wp, sv);
            for (const auto& [k, c] : main) {
                // multiply t part by t_i on the right
                ExtAffineElt ws = k.we * ExtAffineElt::simple(n_, i);
                if (aw_length(ws) > aw_length(k.we)) {
                    xh_add(out, XHKey{k.x, ws}, c);
                } else {
                    xh_add(out, XHKey{k.x, ws}, c);
                    xh_add(out, k, c * (f_.t(1) - f_.t(-1)));
                }
            }
            const K corr = f_.t(1) - f_.t(-1);
            for (const auto& [tokn, sign] : geom_tokens(i, v)) {
                Hxk part = hecke_times_x(wp, tokn);
                for (const auto& [k, c] : part)
                    xh_add(out, k, c * corr * sign);
            }
        }
        memo_.emplace(MemoKey{we, v.lam, v.dexp}, out);
        return out;
    }

    struct MemoKey {
        ExtAffineElt we;
        Weight lam;
        std::int64_t dexp;
        bool operator<(const MemoKey& o) const {
            if (AwLess{}(we, o.we)) return true;
            if (AwLess{}(o.we, we)) return false;
            if (lam != o.lam) return lam < o.lam;
            return dexp < o.dexp;
        }
    };

    const F& f_;
    int n_;
    std::vector<DLGen<F>> gens_;
    mutable std::map<MemoKey, Hxk> memo_;
};

// ---------------------------------------------------------------------------
// PBW extraction: solve against expansions of the t_w y_mu basis.

template <class F>
DahaElement<typename F::K> DahaRep<F>::pbw_extract(const XHecke& h) const {
    DahaElement<K> out;
    // independent per x weight
    std::map<Weight, Hecke> blocks;
    for (const auto& [k, c] : h) blocks[k.x][k.we] = c;
    for (auto& [xw, block] : blocks) {
        // gather candidates (w, mu) and their expansions, closing the support
        std::map<PBWKey, Hecke> expansions;
        std::vector<ExtAffineElt> work;
        std::map<ExtAffineElt, bool, AwLess> seen;
        for (const auto& [we, c] : block) work.push_back(we);
        while (!work.empty()) {
            ExtAffineElt we = work.back();
            work.pop_back();
            if (seen.count(we)) continue;
            seen[we] = true;
            PBWKey cand{xw, we.w, we.lam};
            Hecke e = y_basis_expansion(we.w, we.lam);
            for (const auto& [w2, c2] : e)
                if (!seen.count(w2)) work.push_back(w2);
            expansions.emplace(cand, std::move(e));
        }
        // linear solve: sum_j a_j * E_j = block
        std::vector<PBWKey> cols;
        for (const auto& [k, e] : expansions) cols.push_back(k);
        std::map<ExtAffineElt, std::size_t, AwLess> rowidx;
        for (const auto& [k, e] : expansions)
            for (const auto& [we, c] : e) rowidx.emplace(we, rowidx.size());
        for (const auto& [we, c] : block) rowidx.emplace(we, rowidx.size());
        const std::size_t R = rowidx.size(), C = cols.size();
        std::vector<std::vector<K>> M(R, std::vector<K>(C + 1, f_.zero()));
        for (std::size_t j = 0; j < C; ++j)
            for (const auto& [we, c] : expansions[cols[j]]) M[rowidx[we]][j] = c;
        for (const auto& [we, c] : block) M[rowidx[we]][C] = c;
        // Gaussian elimination
        std::vector<std::ptrdiff_t> pivot_of_col(C, -1);
        std::size_t rank = 0;
        for (std::size_t j = 0; j < C && rank < R; ++j) {
            std::size_t p = rank;
            while (p < R && M[p][j].is_zero()) ++p;
            if (p == R) continue;
            std::swap(M[p], M[rank]);
            K inv = M[rank][j].inverse();
            for (std::size_t jj = j; jj <= C; ++jj) M[rank][jj] = M[rank][jj] * inv;
            for (std::size_t r = 0; r < R; ++r) {
                if (r == rank || M[r][j].is_zero()) continue;
                K f = M[r][j];
                for (std::size_t jj = j; jj <= C; ++jj)
                    M[r][jj] = M[r][jj] - f * M[rank][jj];
            }
            pivot_of_col[j] = static_cast<std::ptrdiff_t>(rank);
            ++rank;
        }
        for (std::size_t r = rank; r < R; ++r)
            if (!M[r][C].is_zero())
                fail(Err::ConfigError, "PBW extraction: inconsistent straightening system");
        for (std::size_t j = 0; j < C; ++j) {
            if (pivot_of_col[j] < 0) continue;
            const K& a = M[static_cast<std::size_t>(pivot_of_col[j])][C];
            if (a.is_zero()) continue;
            auto [it, fresh] = out.emplace(cols[j], a);
            if (!fresh) it->second = it->second + a;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

} // namespace daha
