// Univariate polynomials over Q: Sturm sequences, real-root counting,
// isolation and bisection refinement. All computations are exact.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tenrank/polynomial.hpp"
#include "tenrank/rational.hpp"

namespace tenrank {

class UnivariatePoly {
public:
    UnivariatePoly() : var_("x") {}
    explicit UnivariatePoly(std::string var) : var_(std::move(var)) {}
    UnivariatePoly(std::string var, std::vector<Rational> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static UnivariatePoly from_polynomial(const Polynomial& p, std::size_t var) {
        const auto& reg = p.registry();
        for (std::size_t v : p.support())
            if (v != var)
                throw domain_error("polynomial is not univariate in " + reg->name(var) +
                                   " (also contains " + reg->name(v) + ")");
        std::vector<Rational> c(p.degree_in(var) + 1, Rational(0));
        for (const auto& [m, k] : p.terms()) c[m.exp[var]] = k;
        return UnivariatePoly(reg->name(var), std::move(c));
    }

    const std::string& variable() const { return var_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    const Rational& coeff(std::size_t i) const {
        static const Rational kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    mpf_class evaluate(const mpf_class& x) const {
        mpf_class acc(0, x.get_prec());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += mpf_class(*it, x.get_prec());
        }
        return acc;
    }

    UnivariatePoly derivative() const {
        if (c_.size() <= 1) return UnivariatePoly(var_);
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UnivariatePoly(var_, std::move(d));
    }

    UnivariatePoly operator*(const Rational& k) const {
        if (k == 0) return UnivariatePoly(var_);
        std::vector<Rational> d(c_);
        for (auto& x : d) x *= k;
        return UnivariatePoly(var_, std::move(d));
    }

    UnivariatePoly operator*(const UnivariatePoly& o) const {
        if (is_zero() || o.is_zero()) return UnivariatePoly(var_);
        std::vector<Rational> d(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
        return UnivariatePoly(var_, std::move(d));
    }

    UnivariatePoly operator-(const UnivariatePoly& o) const {
        std::vector<Rational> d(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) d[i] -= o.c_[i];
        return UnivariatePoly(var_, std::move(d));
    }

    bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }

    UnivariatePoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

    // Least positive multiple with coprime integer coefficients, positive lead.
    UnivariatePoly primitive() const {
        if (is_zero()) return *this;
        BigInt den = 1, num = 0;
        for (const auto& q : c_) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
        }
        Rational scale(den, num);
        scale.canonicalize();
        if (leading() * scale < 0) scale = -scale;
        return *this * scale;
    }

    // Euclidean remainder over Q.
    UnivariatePoly rem(const UnivariatePoly& d) const {
        if (d.is_zero()) throw domain_error("division by zero polynomial");
        std::vector<Rational> r(c_);
        const int dd = d.degree();
        while (static_cast<int>(r.size()) - 1 >= dd) {
            if (r.back() == 0) {
                r.pop_back();
                continue;
            }
            Rational q = r.back() / d.leading();
            std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
            for (std::size_t i = 0; i < d.c_.size(); ++i) r[shift + i] -= q * d.c_[i];
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return UnivariatePoly(var_, std::move(r));
    }

    // Exact quotient; throws if the division leaves a remainder.
    UnivariatePoly divide_exact(const UnivariatePoly& d) const {
        if (d.is_zero()) throw domain_error("division by zero polynomial");
        if (is_zero()) return UnivariatePoly(var_);
        std::vector<Rational> r(c_);
        const int dd = d.degree();
        std::vector<Rational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0,
                                Rational(0));
        while (static_cast<int>(r.size()) - 1 >= dd) {
            if (r.back() == 0) {
                r.pop_back();
                continue;
            }
            Rational t = r.back() / d.leading();
            std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
            q[shift] = t;
            for (std::size_t i = 0; i < d.c_.size(); ++i) r[shift + i] -= t * d.c_[i];
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        if (!r.empty()) throw domain_error("inexact univariate division");
        return UnivariatePoly(var_, std::move(q));
    }

    std::string str() const {
        Polynomial p = to_polynomial();
        return tenrank::to_string(p);
    }

    Polynomial to_polynomial() const {
        auto reg = make_registry({var_});
        Polynomial p = Polynomial::zero(reg);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Monomial m(1);
            m.exp[0] = static_cast<unsigned>(i);
            p.add_term(m, c_[i]);
        }
        return p;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::string var_;
    std::vector<Rational> c_;
};

inline UnivariatePoly parse_univariate(const std::string& text) {
    Polynomial p = parse_polynomial(text);
    auto sup = p.support();
    if (sup.size() > 1) throw input_error("expected a univariate polynomial");
    std::size_t var = sup.empty() ? 0 : sup[0];
    if (p.registry()->size() == 0) return UnivariatePoly("x", {p.constant_value()});
    return UnivariatePoly::from_polynomial(p, var);
}

inline UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly f = a.primitive(), g = b.primitive();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UnivariatePoly r = f.rem(g).primitive();
        f = std::move(g);
        g = std::move(r);
    }
    return f.primitive();
}

// p / gcd(p, p'): same distinct roots, all simple; returned monic.
inline UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.is_zero()) throw domain_error("square-free part of zero polynomial");
    if (p.degree() == 0) return p.monic();
    UnivariatePoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return p.divide_exact(g).monic();
}

inline bool is_squarefree(const UnivariatePoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

// Signed-remainder (Sturm) chain, each member scaled to a primitive integer
// polynomial. Positive scaling preserves signs, hence sign variations.
inline std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& p) {
    std::vector<UnivariatePoly> chain;
    UnivariatePoly f = p.primitive();
    chain.push_back(f);
    UnivariatePoly d = f.derivative();
    if (d.is_zero()) return chain;
    UnivariatePoly g = d.primitive();
    // keep scaling positive: primitive() flips sign to positive lead, so
    // rescale manually to preserve the derivative's sign
    if (d.leading() < 0 && g.leading() > 0) g = g * Rational(-1);
    chain.push_back(g);
    for (;;) {
        UnivariatePoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero()) break;
        UnivariatePoly s = r.primitive();
        if (r.leading() < 0 && s.leading() > 0) s = s * Rational(-1);
        chain.push_back(s * Rational(-1));
    }
    return chain;
}

// Endpoint of a counting interval: a rational or +/- infinity.
struct Endpoint {
    enum Kind { neg_inf, finite, pos_inf } kind = finite;
    Rational value;

    static Endpoint minus_infinity() { return {neg_inf, 0}; }
    static Endpoint plus_infinity() { return {pos_inf, 0}; }
    static Endpoint at(Rational v) { return {finite, std::move(v)}; }
};

namespace detail {

inline int sign_at(const UnivariatePoly& p, const Endpoint& e) {
    if (p.is_zero()) return 0;
    switch (e.kind) {
        case Endpoint::finite:
            return sgn(p(e.value));
        case Endpoint::pos_inf:
            return sgn(p.leading());
        case Endpoint::neg_inf:
        default:
            return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
    }
}

inline int sign_variations(const std::vector<UnivariatePoly>& chain, const Endpoint& e) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, e);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

inline bool endpoint_less(const Endpoint& a, const Endpoint& b) {
    if (a.kind == Endpoint::neg_inf) return b.kind != Endpoint::neg_inf;
    if (a.kind == Endpoint::pos_inf) return false;
    if (b.kind == Endpoint::pos_inf) return true;
    if (b.kind == Endpoint::neg_inf) return false;
    return a.value < b.value;
}

}  // namespace detail

// Number of distinct real roots of squarefree p in the open interval (lo, hi).
inline int sturm_count(const UnivariatePoly& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.is_zero()) throw domain_error("sturm_count of zero polynomial");
    if (!detail::endpoint_less(lo, hi)) throw domain_error("sturm_count requires lo < hi");
    if (lo.kind == Endpoint::finite && p(lo.value) == 0)
        throw domain_error("sturm_count endpoint is a root; perturb the endpoint or divide the root out");
    if (hi.kind == Endpoint::finite && p(hi.value) == 0)
        throw domain_error("sturm_count endpoint is a root; perturb the endpoint or divide the root out");
    auto chain = sturm_chain(p);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

inline int sturm_count(const UnivariatePoly& p) {
    return sturm_count(p, Endpoint::minus_infinity(), Endpoint::plus_infinity());
}

// Cauchy bound: all real roots lie in (-B, B) with B = 1 + max|a_i|/|a_n|.
inline Rational cauchy_root_bound(const UnivariatePoly& p) {
    if (p.is_zero() || p.degree() == 0) return 1;
    Rational lead = abs(p.leading());
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(static_cast<std::size_t>(i)));
        if (a > m) m = a;
    }
    Rational b = 1 + m / lead;
    // round up to an integer for tidy interval endpoints
    BigInt n = b.get_num() / b.get_den() + 1;
    return Rational(n);
}

struct IsolatingInterval {
    Rational lo, hi;  // open interval, endpoints are not roots
};

struct RootIsolation {
    std::vector<IsolatingInterval> intervals;  // ascending, pairwise disjoint
    std::vector<Rational> exact_roots;         // ascending
    bool input_squarefree = true;

    int count() const { return static_cast<int>(intervals.size() + exact_roots.size()); }
};

// Deterministic sign-bisection refinement of a bracketed simple root.
inline Rational refine_root(const UnivariatePoly& p, Rational lo, Rational hi, const Rational& eps) {
    if (eps <= 0) throw domain_error("refine_root requires eps > 0");
    Rational flo = p(lo), fhi = p(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if (sgn(flo) == sgn(fhi)) throw domain_error("refine_root interval does not bracket a sign change");
    while (hi - lo >= eps) {
        Rational mid = (lo + hi) / 2;
        Rational fm = p(mid);
        if (fm == 0) return mid;
        if (sgn(fm) == sgn(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

namespace detail {

// Shrinks an interval isolating a root of q until x lies strictly outside.
// x may start on an endpoint when q is a deflation of the original input.
inline IsolatingInterval shrink_away(const UnivariatePoly& q, IsolatingInterval iv, const Rational& x) {
    Rational flo = q(iv.lo);
    while (iv.lo <= x && x <= iv.hi) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (mid == x) mid = (iv.lo + mid) / 2;  // dodge the excluded point
        Rational fm = q(mid);
        if (fm == 0) {
            // mid is the root itself; nudge the far endpoint toward it
            if (x < mid)
                iv.lo = (mid + x) / 2;
            else
                iv.hi = (mid + x) / 2;
            continue;
        }
        if (sgn(fm) == sgn(flo)) {
            iv.lo = mid;
            flo = fm;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

// Isolation of a squarefree polynomial's roots. When bisection lands on an
// exact rational root the root is divided out and isolation restarts on the
// deflated polynomial.
inline void isolate_squarefree(UnivariatePoly q, RootIsolation& out) {
    for (;;) {
        if (q.degree() <= 0) break;
        Rational bound = cauchy_root_bound(q);
        auto chain = sturm_chain(q);
        auto count = [&](const Rational& lo, const Rational& hi) {
            return detail::sign_variations(chain, Endpoint::at(lo)) -
                   detail::sign_variations(chain, Endpoint::at(hi));
        };
        std::vector<std::pair<Rational, Rational>> stack;
        stack.push_back({-bound, bound});  // Cauchy bound is strict, endpoints not roots
        std::vector<IsolatingInterval> ivs;
        std::optional<Rational> found;
        // a simple root forces a sign change, so once isolated we can keep
        // bisecting by sign alone; probing this deep catches rational roots
        // with small dyadic denominators exactly
        const Rational probe_width(1, 1 << 20);
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            int n = count(a, b);
            if (n == 0) continue;
            if (n == 1) {
                Rational fa = q(a);
                while (b - a > probe_width) {
                    Rational mid = (a + b) / 2;
                    Rational fm = q(mid);
                    if (fm == 0) {
                        found = mid;
                        break;
                    }
                    if (sgn(fm) == sgn(fa)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                if (found) break;
                ivs.push_back({a, b});
                continue;
            }
            Rational mid = (a + b) / 2;
            if (q(mid) == 0) {
                found = mid;
                break;
            }
            stack.push_back({a, mid});
            stack.push_back({mid, b});
        }
        if (found) {
            out.exact_roots.push_back(*found);
            q = q.divide_exact(UnivariatePoly(q.variable(), {-*found, 1}));
            continue;
        }
        for (auto iv : ivs) {
            for (const auto& e : out.exact_roots)
                if (iv.lo < e && e < iv.hi) iv = shrink_away(q, iv, e);
            out.intervals.push_back(iv);
        }
        break;
    }
}

}  // namespace detail

// Isolates all distinct real roots. Rational roots hit exactly during
// bisection are reported exactly.
inline RootIsolation isolate_real_roots(const UnivariatePoly& p) {
    if (p.is_zero()) throw domain_error("isolate_real_roots of zero polynomial");
    RootIsolation out;
    UnivariatePoly q = p.monic();
    if (!is_squarefree(p)) {
        out.input_squarefree = false;
        q = squarefree_part(p);
    }
    detail::isolate_squarefree(q, out);
    std::sort(out.exact_roots.begin(), out.exact_roots.end());
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

// Refined rational approximations of every distinct real root, ascending.
inline std::vector<Rational> approximate_real_roots(const UnivariatePoly& p, const Rational& eps) {
    UnivariatePoly q = is_squarefree(p) ? p.monic() : squarefree_part(p);
    RootIsolation iso = isolate_real_roots(q);
    std::vector<Rational> roots(iso.exact_roots);
    for (const auto& iv : iso.intervals) roots.push_back(refine_root(q, iv.lo, iv.hi, eps));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace tenrank
