// Polynomial reduction and Groebner bases under a pure lex order. The lex
// basis of a zero-dimensional ideal is obtained by running Buchberger under
// graded reverse lex, where coefficient growth stays tame, and converting
// with FGLM; positive-dimensional ideals fall back to a direct lex run.
// The working representation uses content-stripped integer coefficients and
// exponent vectors permuted so that position 0 is the greatest variable;
// rationals only reappear in the final monic basis.
#pragma once

#include <algorithm>
#include <list>
#include <map>
#include <utility>
#include <vector>

#include "tenrank/polynomial.hpp"
#include "tenrank/univariate.hpp"

namespace tenrank {
namespace gb_detail {

using Exps = std::vector<unsigned>;  // position 0 = greatest variable

inline bool lex_greater(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

inline unsigned total_degree(const Exps& a) {
    unsigned d = 0;
    for (unsigned e : a) d += e;
    return d;
}

inline bool grevlex_greater(const Exps& a, const Exps& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Active term order for the internal representation.
struct TermCmp {
    bool grevlex = false;
    bool gt(const Exps& a, const Exps& b) const {
        return grevlex ? grevlex_greater(a, b) : lex_greater(a, b);
    }
    bool operator()(const Exps& a, const Exps& b) const { return gt(a, b); }
};

inline bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exps lcm_exps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool coprime_exps(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

inline Exps sub_exps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// Terms sorted descending under the active order; coefficients integer,
// content-stripped, lead > 0 when normalized.
struct IntPoly {
    std::vector<std::pair<Exps, BigInt>> t;

    bool is_zero() const { return t.empty(); }
    const Exps& lm() const { return t.front().first; }
    const BigInt& lc() const { return t.front().second; }

    void strip_content() {
        if (t.empty()) return;
        BigInt g = 0;
        for (const auto& [m, c] : t) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        if (sgn(t.front().second) < 0) g = -g;
        if (g != 1 && g != 0)
            for (auto& [m, c] : t) c /= g;
    }
};

// Working accumulator for reductions.
using WorkMap = std::map<Exps, BigInt, TermCmp>;

inline WorkMap to_work(const IntPoly& p, const TermCmp& cmp) {
    WorkMap w(cmp);
    for (const auto& [m, c] : p.t) w.emplace(m, c);
    return w;
}

inline IntPoly from_work(const WorkMap& w) {
    IntPoly p;
    p.t.reserve(w.size());
    for (const auto& [m, c] : w) p.t.emplace_back(m, c);
    return p;
}

// result += k * x^shift * g
inline void add_multiple(WorkMap& w, const IntPoly& g, const BigInt& k, const Exps& shift) {
    for (const auto& [m, c] : g.t) {
        Exps e(m.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] + shift[i];
        auto [it, inserted] = w.emplace(std::move(e), c * k);
        if (!inserted) {
            it->second += c * k;
            if (it->second == 0) w.erase(it);
        }
    }
}

inline void scale(WorkMap& w, const BigInt& k) {
    if (k == 1) return;
    for (auto& [m, c] : w) c *= k;
}

// Full normal form of `p` modulo `basis` (head and tail reduction).
// On return the result is primitive. If `multiplier` is non-null it receives
// the positive rational alpha with alpha * p == result (mod ideal), so exact
// rational normal forms can be recovered.
inline IntPoly normal_form(const IntPoly& p, const std::vector<IntPoly>& basis, const TermCmp& cmp,
                           const std::vector<bool>* usable = nullptr,
                           Rational* multiplier = nullptr) {
    WorkMap work = to_work(p, cmp);
    WorkMap out(cmp);
    Rational alpha = 1;
    int steps = 0;
    while (!work.empty()) {
        auto it = work.begin();
        const Exps m = it->first;
        const BigInt c = it->second;
        const IntPoly* red = nullptr;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (usable && !(*usable)[i]) continue;
            if (basis[i].is_zero()) continue;
            if (divides(basis[i].lm(), m)) {
                if (!red || basis[i].t.size() < red->t.size()) red = &basis[i];
            }
        }
        if (!red) {
            out.emplace(m, c);
            work.erase(it);
            continue;
        }
        BigInt g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), red->lc().get_mpz_t());
        BigInt a = red->lc() / g;  // scale whole polynomial by this
        BigInt b = c / g;          // multiple of the reducer to subtract
        if (sgn(a) < 0) {
            a = -a;
            b = -b;
        }
        if (a != 1) {
            scale(work, a);
            scale(out, a);
            if (multiplier) alpha *= Rational(a);
        }
        add_multiple(work, *red, -b, sub_exps(m, red->lm()));
        if (++steps % 8 == 0 && !multiplier) {
            // periodic content stripping keeps coefficients in check
            BigInt cg = 0;
            for (const auto& [mm, cc] : work) {
                mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), cc.get_mpz_t());
                if (cg == 1) break;
            }
            if (cg != 1 && cg != 0)
                for (const auto& [mm, cc] : out) {
                    mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), cc.get_mpz_t());
                    if (cg == 1) break;
                }
            if (cg > 1) {
                for (auto& [mm, cc] : work) cc /= cg;
                for (auto& [mm, cc] : out) cc /= cg;
            }
        }
    }
    IntPoly r = from_work(out);
    if (multiplier) {
        *multiplier = alpha;
    } else {
        r.strip_content();
    }
    return r;
}

inline IntPoly s_polynomial(const IntPoly& f, const IntPoly& g, const TermCmp& cmp) {
    Exps l = lcm_exps(f.lm(), g.lm());
    BigInt d;
    mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    WorkMap w(cmp);
    add_multiple(w, f, g.lc() / d, sub_exps(l, f.lm()));
    add_multiple(w, g, -(f.lc() / d), sub_exps(l, g.lm()));
    IntPoly s = from_work(w);
    s.strip_content();
    return s;
}

struct Pair {
    std::size_t i, j;
    Exps l;  // lcm of leading monomials
    unsigned deg;
};

// Gebauer-Moeller update: prunes the new pairs (i, t) and stale old pairs.
inline void update_pairs(std::list<Pair>& pairs, const std::vector<IntPoly>& g, std::size_t t) {
    const Exps& lt = g[t].lm();
    struct Cand {
        std::size_t i;
        Exps l;
        bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < t; ++i) {
        if (g[i].is_zero()) continue;
        cands.push_back({i, lcm_exps(g[i].lm(), lt), coprime_exps(g[i].lm(), lt)});
    }
    // criterion M: drop (i,t) if another candidate's lcm properly divides its lcm
    std::vector<bool> keep(cands.size(), true);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        for (std::size_t b = 0; b < cands.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            if (cands[b].l != cands[a].l && divides(cands[b].l, cands[a].l)) keep[a] = false;
        }
    }
    // criterion F: among equal lcms keep one, preferring a coprime pair
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = a + 1; b < cands.size(); ++b) {
            if (!keep[b]) continue;
            if (cands[a].l == cands[b].l) {
                if (cands[b].coprime) keep[a] = false;
                else keep[b] = false;
            }
        }
    }
    // criterion B on old pairs
    pairs.remove_if([&](const Pair& p) {
        if (!divides(lt, p.l)) return false;
        if (lcm_exps(g[p.i].lm(), lt) == p.l) return false;
        if (lcm_exps(g[p.j].lm(), lt) == p.l) return false;
        return true;
    });
    // Buchberger's first criterion: coprime leading monomials reduce to zero
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (!keep[a] || cands[a].coprime) continue;
        pairs.push_back({cands[a].i, t, cands[a].l, total_degree(cands[a].l)});
    }
}

// Buchberger's algorithm under the active order. Returns the unique reduced
// basis with primitive integer coefficients, sorted descending by leading
// monomial.
inline std::vector<IntPoly> buchberger_core(std::vector<IntPoly> F, const TermCmp& cmp) {
    std::vector<IntPoly> g;
    std::list<Pair> pairs;
    for (auto& f : F) {
        if (f.is_zero()) continue;
        f.strip_content();
        // interreduce the input as it arrives
        IntPoly p = normal_form(f, g, cmp);
        if (p.is_zero()) continue;
        g.push_back(std::move(p));
        update_pairs(pairs, g, g.size() - 1);
    }
    while (!pairs.empty()) {
        // normal selection: smallest lcm by total degree, ties by the order
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->deg < best->deg || (it->deg == best->deg && cmp.gt(best->l, it->l))) best = it;
        }
        Pair p = *best;
        pairs.erase(best);
        IntPoly s = s_polynomial(g[p.i], g[p.j], cmp);
        if (s.is_zero()) continue;
        IntPoly r = normal_form(s, g, cmp);
        if (r.is_zero()) continue;
        g.push_back(std::move(r));
        update_pairs(pairs, g, g.size() - 1);
    }
    // minimalize: drop members whose leading monomial is divisible by another's
    std::vector<bool> minimal(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero()) {
            minimal[i] = false;
            continue;
        }
        for (std::size_t j = 0; j < g.size() && minimal[i]; ++j) {
            if (i == j || !minimal[j] || g[j].is_zero()) continue;
            if (g[j].lm() == g[i].lm()) {
                if (j < i) minimal[i] = false;
            } else if (divides(g[j].lm(), g[i].lm())) {
                minimal[i] = false;
            }
        }
    }
    std::vector<IntPoly> min_basis;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (minimal[i]) min_basis.push_back(g[i]);
    // full tail interreduction
    std::vector<IntPoly> reduced(min_basis.size());
    for (std::size_t i = 0; i < min_basis.size(); ++i) {
        std::vector<bool> usable(min_basis.size(), true);
        usable[i] = false;
        reduced[i] = normal_form(min_basis[i], min_basis, cmp, &usable);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&cmp](const IntPoly& a, const IntPoly& b) { return cmp.gt(a.lm(), b.lm()); });
    return reduced;
}

// A zero-dimensional ideal's basis contains a pure power of every variable
// among its leading monomials.
inline bool leading_terms_span_all_vars(const std::vector<IntPoly>& basis, std::size_t nvars) {
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : basis) {
            const Exps& m = g.lm();
            bool pure = m[v] > 0;
            for (std::size_t u = 0; u < nvars && pure; ++u)
                if (u != v && m[u]) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Rational-coefficient polynomial in the internal exponent representation,
// used by the order conversion below.
struct RatPoly {
    std::vector<std::pair<Exps, Rational>> t;  // descending lex
};

// FGLM order conversion: grevlex basis of a zero-dimensional ideal -> the
// reduced lex basis. Works by scanning monomials in increasing lex order and
// detecting linear dependencies of their normal forms over the quotient.
inline std::vector<RatPoly> fglm_to_lex(const std::vector<IntPoly>& grevlex_basis,
                                        std::size_t nvars) {
    const TermCmp grevlex{true};
    // quotient basis: monomials outside the leading-term ideal, BFS from 1
    std::map<Exps, std::size_t, TermCmp> quotient_index{TermCmp{true}};
    std::vector<Exps> pending;
    pending.push_back(Exps(nvars, 0));
    std::map<Exps, bool, TermCmp> seen{TermCmp{true}};
    std::vector<Exps> quotient;
    auto reducible = [&](const Exps& m) {
        for (const auto& g : grevlex_basis)
            if (divides(g.lm(), m)) return true;
        return false;
    };
    while (!pending.empty()) {
        Exps m = pending.back();
        pending.pop_back();
        if (seen.count(m)) continue;
        seen.emplace(m, true);
        if (reducible(m)) continue;
        quotient.push_back(m);
        if (quotient.size() > 100000) throw domain_error("quotient dimension too large for order conversion");
        for (std::size_t v = 0; v < nvars; ++v) {
            Exps e = m;
            ++e[v];
            pending.push_back(std::move(e));
        }
    }
    std::sort(quotient.begin(), quotient.end(),
              [&](const Exps& a, const Exps& b) { return grevlex.gt(b, a); });
    const std::size_t dim = quotient.size();
    for (std::size_t i = 0; i < dim; ++i) quotient_index.emplace(quotient[i], i);
    if (dim == 0) {
        // unit ideal
        RatPoly one;
        one.t.emplace_back(Exps(nvars, 0), Rational(1));
        return {one};
    }

    using Vec = std::vector<Rational>;
    // normal form of a single monomial as quotient coordinates
    auto nf_monomial = [&](const Exps& m) {
        auto it = quotient_index.find(m);
        Vec v(dim, Rational(0));
        if (it != quotient_index.end()) {
            v[it->second] = 1;
            return v;
        }
        IntPoly p;
        p.t.emplace_back(m, BigInt(1));
        Rational alpha = 1;
        IntPoly r = normal_form(p, grevlex_basis, grevlex, nullptr, &alpha);
        for (const auto& [mm, cc] : r.t) v[quotient_index.at(mm)] = Rational(cc) / alpha;
        return v;
    };
    // multiplication matrices, built lazily per variable
    std::vector<std::vector<Vec>> mult(nvars);
    auto mult_by_var = [&](std::size_t v, const Vec& x) {
        if (mult[v].empty()) {
            mult[v].resize(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                Exps m = quotient[j];
                ++m[v];
                mult[v][j] = nf_monomial(m);
            }
        }
        Vec r(dim, Rational(0));
        for (std::size_t j = 0; j < dim; ++j) {
            if (x[j] == 0) continue;
            const Vec& col = mult[v][j];
            for (std::size_t i = 0; i < dim; ++i)
                if (col[i] != 0) r[i] += x[j] * col[i];
        }
        return r;
    };

    // row echelon store for dependency detection; each row remembers how it
    // was formed from the stored monomials
    struct Row {
        Vec v;
        Vec combo;  // over stored monomials
        std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Exps> stored;      // independent monomials, increasing lex
    std::vector<Vec> stored_vecs;  // their quotient coordinates
    std::vector<Exps> lex_lms;
    std::vector<RatPoly> out;

    // candidates keyed ascending by lex; value = (stored parent, variable)
    struct LexLess {
        bool operator()(const Exps& a, const Exps& b) const { return lex_greater(b, a); }
    };
    std::map<Exps, std::pair<std::size_t, std::size_t>, LexLess> queue;

    auto process = [&](const Exps& m, const Vec& vec) {
        // dependency check against the echelon rows
        Vec w = vec;
        Vec combo(stored.size() + 1, Rational(0));
        for (const auto& row : rows) {
            if (w[row.pivot] == 0) continue;
            Rational f = w[row.pivot];
            for (std::size_t i = 0; i < dim; ++i)
                if (row.v[i] != 0) w[i] -= f * row.v[i];
            for (std::size_t i = 0; i < row.combo.size(); ++i)
                if (row.combo[i] != 0) combo[i] -= f * row.combo[i];
        }
        std::size_t pivot = dim;
        for (std::size_t i = 0; i < dim; ++i)
            if (w[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == dim) {
            // dependent: m + sum combo[i] * stored[i] is a lex basis member
            RatPoly p;
            p.t.emplace_back(m, Rational(1));
            for (std::size_t i = stored.size(); i-- > 0;)
                if (combo[i] != 0) p.t.emplace_back(stored[i], combo[i]);
            out.push_back(std::move(p));
            lex_lms.push_back(m);
            return;
        }
        // independent: normalize the row and remember the monomial
        Rational inv = Rational(1) / w[pivot];
        for (auto& x : w) x *= inv;
        combo[stored.size()] = 1;
        for (auto& x : combo) x *= inv;
        rows.push_back({std::move(w), std::move(combo), pivot});
        stored.push_back(m);
        stored_vecs.push_back(vec);
        std::size_t parent = stored.size() - 1;
        for (std::size_t v = 0; v < nvars; ++v) {
            Exps e = m;
            ++e[v];
            queue.emplace(std::move(e), std::make_pair(parent, v));
        }
    };

    Vec one(dim, Rational(0));
    one[quotient_index.at(Exps(nvars, 0))] = 1;
    process(Exps(nvars, 0), one);
    while (!queue.empty()) {
        auto it = queue.begin();
        Exps m = it->first;
        auto [parent, v] = it->second;
        queue.erase(it);
        bool skip = false;
        for (const auto& l : lex_lms)
            if (divides(l, m)) {
                skip = true;
                break;
            }
        if (skip) continue;
        process(m, mult_by_var(v, stored_vecs[parent]));
    }
    return out;
}

}  // namespace gb_detail

// ---------------------------------------------------------------------------
// Conversion between the public Polynomial and the internal representation.

namespace gb_detail {

inline IntPoly to_internal(const Polynomial& p, const VarOrder& order) {
    // clear denominators
    BigInt den = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    const auto& seq = order.sequence();
    std::vector<std::pair<Exps, BigInt>> ts;
    ts.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        Exps e(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i) e[i] = m.exp[seq[i]];
        Rational k = c * Rational(den);
        ts.emplace_back(std::move(e), BigInt(k.get_num()));
    }
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return lex_greater(a.first, b.first); });
    IntPoly r;
    r.t = std::move(ts);
    return r;
}

inline Polynomial to_public(const IntPoly& p, const VarOrder& order) {
    Polynomial r = Polynomial::zero(order.registry());
    const auto& seq = order.sequence();
    for (const auto& [e, c] : p.t) {
        Monomial m(order.registry()->size());
        for (std::size_t i = 0; i < seq.size(); ++i) m.exp[seq[i]] = e[i];
        r.add_term(m, Rational(c));
    }
    return r;
}

inline Polynomial to_public(const RatPoly& p, const VarOrder& order) {
    Polynomial r = Polynomial::zero(order.registry());
    const auto& seq = order.sequence();
    for (const auto& [e, c] : p.t) {
        Monomial m(order.registry()->size());
        for (std::size_t i = 0; i < seq.size(); ++i) m.exp[seq[i]] = e[i];
        r.add_term(m, c);
    }
    return r;
}

}  // namespace gb_detail

// Normal form of f modulo G: no term of the result is divisible by any
// leading monomial of G, and f - result lies in the ideal generated by G.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G, const VarOrder& order) {
    if (f.is_zero()) return f;
    std::vector<gb_detail::IntPoly> basis;
    for (const auto& g : G) {
        g.require_same(f);
        if (!g.is_zero()) basis.push_back(gb_detail::to_internal(g, order));
    }
    if (basis.empty()) return f;
    // alpha tracks the scaling applied so the rational normal form is exact
    gb_detail::IntPoly fi = gb_detail::to_internal(f, order);
    Rational alpha = 1;
    gb_detail::IntPoly r =
        gb_detail::normal_form(fi, basis, gb_detail::TermCmp{false}, nullptr, &alpha);
    // to_internal cleared f's denominators: recover that factor as well
    BigInt den = 1;
    for (const auto& [m, c] : f.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    return gb_detail::to_public(r, order) * (Rational(1) / (alpha * Rational(den)));
}

// The unique reduced lex Groebner basis, monic, sorted ascending by leading
// monomial (so a univariate eliminant comes first). Zero inputs are dropped;
// an empty input yields an empty basis.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, const VarOrder& order) {
    using namespace gb_detail;
    std::vector<IntPoly> in;
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        if (!same_registry(f.registry(), order.registry()))
            throw domain_error("polynomial registry does not match the order");
        in.push_back(to_internal(f, order));
    }
    if (in.empty()) return {};
    const std::size_t nvars = order.sequence().size();
    const TermCmp lex{false};

    std::vector<IntPoly> lex_basis;
    std::vector<IntPoly> grevlex_in = in;
    for (auto& p : grevlex_in)
        std::sort(p.t.begin(), p.t.end(),
                  [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
    std::vector<IntPoly> gb_grevlex = buchberger_core(std::move(grevlex_in), TermCmp{true});
    if (!gb_grevlex.empty() && gb_grevlex.front().lm() == Exps(nvars, 0)) {
        // unit ideal
        Polynomial one = Polynomial::constant(order.registry(), 1);
        return {one};
    }
    if (leading_terms_span_all_vars(gb_grevlex, nvars)) {
        auto rat = fglm_to_lex(gb_grevlex, nvars);
        std::vector<Polynomial> out;
        out.reserve(rat.size());
        for (const auto& p : rat) out.push_back(to_public(p, order).monic(order));
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return lex_compare(b.leading_term(order).first, a.leading_term(order).first,
                               order) == Cmp::greater;
        });
        return out;
    }
    lex_basis = buchberger_core(std::move(in), lex);
    std::vector<Polynomial> out;
    out.reserve(lex_basis.size());
    for (const auto& p : lex_basis) out.push_back(to_public(p, order).monic(order));
    std::reverse(out.begin(), out.end());  // core sorts descending
    return out;
}

// Integer-cleared primitive form of a basis, for comparison against integer
// listings.
inline std::vector<Polynomial> primitive_basis(const std::vector<Polynomial>& basis, const VarOrder& order) {
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& p : basis) out.push_back(p.primitive_part(order));
    return out;
}

// ---------------------------------------------------------------------------
// Shape-position report for a reduced lex basis: one generator univariate in
// the least variable, all others linear in their leading variable with tails
// in the least variable only.

struct ShapeReport {
    bool shape_position = false;
    int eliminant_index = -1;  // index of G1 within the basis
    int eliminant_degree = 0;
    std::string note;
};

inline ShapeReport shape_check(const std::vector<Polynomial>& GB, const VarOrder& order) {
    ShapeReport rep;
    if (GB.empty()) {
        rep.note = "empty basis";
        return rep;
    }
    const std::size_t least = order.least_variable();
    int univariate_idx = -1;
    for (std::size_t i = 0; i < GB.size(); ++i) {
        auto sup = GB[i].support();
        if (sup.size() == 1 && sup[0] == least) {
            if (univariate_idx >= 0) {
                rep.note = "more than one generator univariate in the least variable";
                return rep;
            }
            univariate_idx = static_cast<int>(i);
        } else if (sup.empty()) {
            rep.note = "basis contains a constant; ideal is trivial";
            return rep;
        }
    }
    if (univariate_idx < 0) {
        rep.note = "no generator univariate in the least variable";
        return rep;
    }
    for (std::size_t i = 0; i < GB.size(); ++i) {
        if (static_cast<int>(i) == univariate_idx) continue;
        auto [lm, lc] = GB[i].leading_term(order);
        std::size_t lead_var = 0;
        for (std::size_t v : order.sequence())
            if (lm.exp[v]) {
                lead_var = v;
                break;
            }
        // the generator must be linear in its leading variable...
        if (GB[i].degree_in(lead_var) != 1 || lm.exp[lead_var] != 1 || lm.total_degree() != 1) {
            rep.note = "generator not linear in its leading variable";
            return rep;
        }
        // ...with a tail depending on the least variable only
        for (const auto& [m, c] : GB[i].terms()) {
            if (m == lm) continue;
            for (std::size_t v = 0; v < m.exp.size(); ++v) {
                if (m.exp[v] && v != least) {
                    rep.note = "tail depends on a variable other than the least";
                    return rep;
                }
            }
        }
    }
    rep.shape_position = true;
    rep.eliminant_index = univariate_idx;
    rep.eliminant_degree = static_cast<int>(GB[static_cast<std::size_t>(univariate_idx)].degree_in(least));
    return rep;
}

}  // namespace tenrank
