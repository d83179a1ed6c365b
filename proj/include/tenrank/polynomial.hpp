// Multivariate polynomials over Q with a shared named-variable registry.
// Terms are stored canonically (no zero coefficients), so structurally equal
// polynomials compare equal term by term.
#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tenrank/rational.hpp"

namespace tenrank {

class VariableRegistry {
public:
    VariableRegistry() = default;
    explicit VariableRegistry(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
        if (index_.size() != names_.size()) throw domain_error("duplicate variable name in registry");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const std::string& name) const {
        auto i = find(name);
        if (!i) throw domain_error("unknown variable '" + name + "'");
        return *i;
    }

    bool operator==(const VariableRegistry& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

inline RegistryPtr make_registry(std::vector<std::string> names) {
    return std::make_shared<VariableRegistry>(std::move(names));
}

inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector indexed by the registry.
struct Monomial {
    std::vector<unsigned> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}

    std::size_t nvars() const { return exp.size(); }
    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exp) d += e;
        return d;
    }
    bool is_one() const {
        for (unsigned e : exp)
            if (e) return false;
        return true;
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
        return r;
    }
    // Exact quotient; caller guarantees m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= m.exp[i];
        return r;
    }
    bool operator==(const Monomial& m) const { return exp == m.exp; }
    bool operator<(const Monomial& m) const { return exp < m.exp; }  // storage order only
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] && b.exp[i]) return false;
    return true;
}

// Sequence of variable indices, greatest to least, for pure lex comparison.
class VarOrder {
public:
    VarOrder() = default;
    VarOrder(RegistryPtr reg, std::vector<std::size_t> seq) : reg_(std::move(reg)), seq_(std::move(seq)) {
        std::vector<bool> seen(reg_->size(), false);
        if (seq_.size() != reg_->size()) throw domain_error("variable order must cover the registry");
        for (std::size_t i : seq_) {
            if (i >= reg_->size() || seen[i]) throw domain_error("variable order is not a permutation");
            seen[i] = true;
        }
    }

    static VarOrder from_names(const RegistryPtr& reg, const std::vector<std::string>& names) {
        std::vector<std::size_t> seq;
        seq.reserve(names.size());
        for (const auto& n : names) seq.push_back(reg->index_of(n));
        return VarOrder(reg, std::move(seq));
    }

    // Registry order itself, first variable greatest.
    static VarOrder natural(const RegistryPtr& reg) {
        std::vector<std::size_t> seq(reg->size());
        for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i;
        return VarOrder(reg, std::move(seq));
    }

    const RegistryPtr& registry() const { return reg_; }
    const std::vector<std::size_t>& sequence() const { return seq_; }
    std::size_t least_variable() const { return seq_.back(); }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (std::size_t i : seq_) out.push_back(reg_->name(i));
        return out;
    }

private:
    RegistryPtr reg_;
    std::vector<std::size_t> seq_;
};

enum class Cmp { less, equal, greater };

// Pure lexicographic comparison: the first differing exponent along the
// order's sequence decides.
inline Cmp lex_compare(const Monomial& a, const Monomial& b, const VarOrder& order) {
    for (std::size_t v : order.sequence()) {
        if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? Cmp::less : Cmp::greater;
    }
    return Cmp::equal;
}

inline bool lex_less(const Monomial& a, const Monomial& b, const VarOrder& order) {
    return lex_compare(a, b, order) == Cmp::less;
}

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}

    static Polynomial zero(RegistryPtr reg) { return Polynomial(std::move(reg)); }

    static Polynomial constant(RegistryPtr reg, const Rational& c) {
        Polynomial p(std::move(reg));
        if (c != 0) p.terms_[Monomial(p.reg_->size())] = c;
        return p;
    }

    static Polynomial variable(RegistryPtr reg, std::size_t idx, unsigned power = 1) {
        Polynomial p(std::move(reg));
        Monomial m(p.reg_->size());
        if (idx >= p.reg_->size()) throw domain_error("variable index out of range");
        m.exp[idx] = power;
        p.terms_[m] = 1;
        return p;
    }

    static Polynomial term(RegistryPtr reg, Monomial m, const Rational& c) {
        Polynomial p(std::move(reg));
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const RegistryPtr& registry() const { return reg_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial(reg_->size()));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var]);
        return d;
    }

    // Variables that actually occur.
    std::vector<std::size_t> support() const {
        std::vector<bool> seen(reg_->size(), false);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.exp.size(); ++i)
                if (m.exp[i]) seen[i] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) out.push_back(i);
        return out;
    }

    std::pair<Monomial, Rational> leading_term(const VarOrder& order) const {
        if (terms_.empty()) throw domain_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (lex_less(best->first, it->first, order)) best = it;
        return {best->first, best->second};
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        require_same(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same(o);
        Polynomial r(reg_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial r(reg_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    bool operator==(const Polynomial& o) const { return same_registry(reg_, o.reg_) && terms_ == o.terms_; }

    // Partial evaluation var := value.
    Polynomial substitute(std::size_t var, const Rational& value) const {
        Polynomial r(reg_);
        for (const auto& [m, c] : terms_) {
            Monomial n(m);
            Rational k = c;
            for (unsigned e = 0; e < m.exp[var]; ++e) k *= value;
            n.exp[var] = 0;
            r.add_term(n, k);
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != reg_->size()) throw domain_error("evaluation point has wrong arity");
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.exp.size(); ++i)
                for (unsigned e = 0; e < m.exp[i]; ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Coefficient of var^k, as a polynomial in the remaining variables.
    Polynomial coefficient_in(std::size_t var, unsigned k) const {
        Polynomial r(reg_);
        for (const auto& [m, c] : terms_) {
            if (m.exp[var] != k) continue;
            Monomial n(m);
            n.exp[var] = 0;
            r.add_term(n, c);
        }
        return r;
    }

    // Multiplies by the least positive rational giving integer, gcd-1
    // coefficients with positive leading coefficient under `order`.
    Polynomial primitive_part(const VarOrder& order) const {
        if (terms_.empty()) return *this;
        BigInt den_lcm = 1, num_gcd = 0;
        for (const auto& [m, c] : terms_) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (leading_term(order).second * scale < 0) scale = -scale;
        return *this * scale;
    }

    Polynomial monic(const VarOrder& order) const {
        if (terms_.empty()) return *this;
        return *this * (Rational(1) / leading_term(order).second);
    }

    void require_same(const Polynomial& o) const {
        if (!same_registry(reg_, o.reg_)) throw domain_error("polynomial registry mismatch");
    }

private:
    RegistryPtr reg_;
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// ---------------------------------------------------------------------------
// Text form: integer/rational coefficients, '*' for products, '^' for powers,
// e.g. "3*c2^4*c3^4+1". Round-trips losslessly.

inline std::string to_string(const Polynomial& p, const VarOrder& order) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(),
              [&](const auto& a, const auto& b) { return lex_less(b.first, a.first, order); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.is_one()) {
            out << a.get_str();
            printed = true;
        }
        for (std::size_t v : order.sequence()) {
            if (!m.exp[v]) continue;
            if (printed) out << "*";
            out << order.registry()->name(v);
            if (m.exp[v] > 1) out << "^" << m.exp[v];
            printed = true;
        }
    }
    return out.str();
}

inline std::string to_string(const Polynomial& p) {
    return to_string(p, VarOrder::natural(p.registry()));
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string text, RegistryPtr reg) : text_(std::move(text)), reg_(std::move(reg)) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial parse_expr() {
        Polynomial acc = Polynomial::zero(reg_);
        int s = 1;
        skip_ws();
        if (peek() == '+' || peek() == '-') s = (get() == '-') ? -1 : 1;
        acc = acc + parse_term() * Rational(s);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial t = parse_term();
            acc = (c == '-') ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = parse_expr();
            skip_ws();
            if (get() != ')') fail("expected ')'");
            return maybe_power(p);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                std::string den = read_digits();
                return Polynomial::constant(reg_, parse_rational(num + "/" + den));
            }
            // an integer may still carry an exponent, e.g. 2^10
            if (peek() == '^') {
                get();
                unsigned e = read_exponent();
                Rational base = parse_rational(num);
                Rational v = 1;
                for (unsigned i = 0; i < e; ++i) v *= base;
                return Polynomial::constant(reg_, v);
            }
            return Polynomial::constant(reg_, parse_rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_name();
            unsigned e = 1;
            skip_ws();
            if (peek() == '^') {
                get();
                e = read_exponent();
            }
            auto idx = reg_->find(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return Polynomial::variable(reg_, *idx, e);
        }
        fail("expected coefficient or variable");
        return Polynomial::zero(reg_);  // unreachable
    }

    Polynomial maybe_power(Polynomial p) {
        skip_ws();
        if (peek() != '^') return p;
        get();
        unsigned e = read_exponent();
        Polynomial r = Polynomial::constant(reg_, 1);
        for (unsigned i = 0; i < e; ++i) r = r * p;
        return r;
    }

    unsigned read_exponent() {
        skip_ws();
        std::string d = read_digits();
        return static_cast<unsigned>(std::stoul(d));
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    std::string read_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::string text_;
    RegistryPtr reg_;
    std::size_t pos_ = 0;
};

// Scans the text for identifiers so callers can parse without a registry.
inline std::vector<std::string> scan_variables(const std::string& text) {
    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            std::string n = text.substr(start, i - start);
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        } else {
            ++i;
        }
    }
    return names;
}

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const RegistryPtr& reg) {
    return detail::PolyParser(text, reg).parse();
}

// Registry inferred from the identifiers appearing in the text.
inline Polynomial parse_polynomial(const std::string& text) {
    return parse_polynomial(text, make_registry(detail::scan_variables(text)));
}

}  // namespace tenrank
