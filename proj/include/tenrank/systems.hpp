// Polynomial systems attached to a tensor: the general slice system, the
// symmetric-slice (INDSCAL) system, the Gamma matrix, row embedding, and the
// closed-form degree and root-count formulas.
#pragma once

#include <string>
#include <vector>

#include "tenrank/poly_matrix.hpp"
#include "tenrank/polynomial.hpp"
#include "tenrank/tensor.hpp"

namespace tenrank {

struct PolySystem {
    std::vector<Polynomial> equations;
    VarOrder order;
    Shape shape;
    Mode mode = Mode::general;
    std::string normalization;  // which variables were fixed to 1
};

// General system: s'(X_k - c_k X_1) = 0 for k=2..K with s_I = 1 fixed.
// Variables s1..s_{I-1}, c2..cK; default elimination order puts the s-block
// greatest, then cK..c3, with c2 least.
inline PolySystem build_system(const Tensor3& X) {
    if (X.mode() != Mode::general) throw domain_error("build_system expects a general-mode tensor");
    const long I = X.I(), J = X.J(), K = X.K();
    if (K < 2) throw domain_error("build_system requires K >= 2");
    std::vector<std::string> names;
    for (long i = 1; i < I; ++i) names.push_back("s" + std::to_string(i));
    for (long k = 2; k <= K; ++k) names.push_back("c" + std::to_string(k));
    auto reg = make_registry(names);
    std::vector<std::string> seq;
    for (long i = 1; i < I; ++i) seq.push_back("s" + std::to_string(i));
    for (long k = K; k >= 2; --k) seq.push_back("c" + std::to_string(k));
    PolySystem sys{{}, VarOrder::from_names(reg, seq), X.shape(), Mode::general,
                   "c1=1, s" + std::to_string(I) + "=1"};
    for (long k = 2; k <= K; ++k) {
        Polynomial ck = Polynomial::variable(reg, reg->index_of("c" + std::to_string(k)));
        for (long j = 0; j < J; ++j) {
            Polynomial eq = Polynomial::zero(reg);
            for (long i = 0; i < I; ++i) {
                Polynomial si = (i + 1 < I)
                                    ? Polynomial::variable(reg, reg->index_of("s" + std::to_string(i + 1)))
                                    : Polynomial::constant(reg, 1);
                eq = eq + si * Rational(X.at(i, j, k - 1)) - si * ck * Rational(X.at(i, j, 0));
            }
            sys.equations.push_back(eq);
        }
    }
    return sys;
}

// Symmetric-slice system: sum_i s_i X_i = b b' entrywise, upper triangle
// only (the lower triangle repeats it). b_J = 1 fixed; variables s1..sI and
// b1..b_{J-1}. Default order puts the s-block greatest, then b1..b_{J-1},
// eliminating into b_{J-1}.
inline PolySystem build_indscal_system(const Tensor3& X) {
    if (X.mode() != Mode::indscal)
        throw domain_error("build_indscal_system expects a symmetric-slice tensor");
    X.validate_symmetry();
    const long I = X.I(), J = X.J();
    std::vector<std::string> names;
    for (long i = 1; i <= I; ++i) names.push_back("s" + std::to_string(i));
    for (long j = 1; j < J; ++j) names.push_back("b" + std::to_string(j));
    auto reg = make_registry(names);
    PolySystem sys{{}, VarOrder::from_names(reg, names), X.shape(), Mode::indscal,
                   "b" + std::to_string(J) + "=1"};
    auto bvar = [&](long j) {
        return (j + 1 < J) ? Polynomial::variable(reg, reg->index_of("b" + std::to_string(j + 1)))
                           : Polynomial::constant(reg, 1);
    };
    for (long j = 0; j < J; ++j)
        for (long k = j; k < J; ++k) {
            Polynomial eq = Polynomial::zero(reg);
            for (long i = 0; i < I; ++i)
                eq = eq + Polynomial::variable(reg, reg->index_of("s" + std::to_string(i + 1))) *
                              Rational(X.at(i, j, k));
            eq = eq - bvar(j) * bvar(k);
            sys.equations.push_back(eq);
        }
    return sys;
}

// Gamma = [(X2 - c2 X1), (X3 - c3 X1), ..., (XK - cK X1)], I x (K-1)J,
// entries linear in the c variables.
inline PolyMatrix gamma_matrix(const Tensor3& X) {
    if (X.mode() != Mode::general) throw domain_error("gamma_matrix expects a general-mode tensor");
    const long I = X.I(), J = X.J(), K = X.K();
    if (K < 2) throw domain_error("gamma_matrix requires K >= 2");
    std::vector<std::string> names;
    for (long k = 2; k <= K; ++k) names.push_back("c" + std::to_string(k));
    auto reg = make_registry(names);
    PolyMatrix g(static_cast<std::size_t>(I), static_cast<std::size_t>((K - 1) * J), reg);
    for (long k = 2; k <= K; ++k) {
        Polynomial ck = Polynomial::variable(reg, reg->index_of("c" + std::to_string(k)));
        for (long i = 0; i < I; ++i)
            for (long j = 0; j < J; ++j)
                g.at(static_cast<std::size_t>(i), static_cast<std::size_t>((k - 2) * J + j)) =
                    Polynomial::constant(reg, X.at(i, j, k - 1)) - ck * Rational(X.at(i, j, 0));
    }
    return g;
}

// Appends one row per slice, giving an (I+1) x J x K tensor.
inline Tensor3 embed(const Tensor3& X, const std::vector<std::vector<Rational>>& extra_rows) {
    if (extra_rows.size() != static_cast<std::size_t>(X.K()))
        throw input_error("embed needs one extra row per slice (" + std::to_string(X.K()) +
                          "), got " + std::to_string(extra_rows.size()));
    for (std::size_t k = 0; k < extra_rows.size(); ++k)
        if (extra_rows[k].size() != static_cast<std::size_t>(X.J()))
            throw input_error("embed row for slice " + std::to_string(k + 1) + " has length " +
                              std::to_string(extra_rows[k].size()) + ", expected " +
                              std::to_string(X.J()));
    Tensor3 r(Shape{X.I() + 1, X.J(), X.K()}, Mode::general);
    for (long i = 0; i < X.I(); ++i)
        for (long j = 0; j < X.J(); ++j)
            for (long k = 0; k < X.K(); ++k) r.at(i, j, k) = X.at(i, j, k);
    for (long k = 0; k < X.K(); ++k)
        for (long j = 0; j < X.J(); ++j)
            r.at(X.I(), j, k) =
                extra_rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return r;
}

// First standard basis vector on slice 1, zero rows on the others.
inline Tensor3 embed_default(const Tensor3& X) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(X.K()),
                                            std::vector<Rational>(static_cast<std::size_t>(X.J()),
                                                                  Rational(0)));
    rows[0][0] = 1;
    return embed(X, rows);
}

inline bool is_minimal_shape(const Shape& s) { return s.I == (s.K - 1) * (s.J - 1) + 1; }

inline BigInt binomial(long n, long k) {
    BigInt r;
    if (k < 0 || k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Solution count of the minimal general system: binom(K-1+J-1, K-1), the
// degree of the underlying Segre variety.
inline long expected_degree(const Shape& s) {
    classify(s);
    if (!is_minimal_shape(s))
        throw domain_error("expected_degree applies to minimal shapes only; " + s.str() +
                           " has I != (K-1)(J-1)+1");
    return static_cast<long>(binomial(s.K - 1 + s.J - 1, s.K - 1).get_si());
}

// Solution count of the minimal symmetric-slice system: 2^(J-1), the degree
// of the underlying Veronese variety.
inline long indscal_expected_degree(long J) {
    if (J < 2) throw domain_error("indscal_expected_degree requires J >= 2");
    if (J > 62) throw domain_error("indscal_expected_degree overflow for J > 62");
    return 1L << (J - 1);
}

inline bool is_indscal_minimal_shape(const Shape& s) {
    return s.J == s.K && s.I == 1 + s.J * (s.J - 1) / 2;
}

// Fewnomial upper bound on isolated roots in the positive orthant:
// 2^binom(m,2) * (n+1)^m with n = (K-1)J equations and m = K(I-1) monomials.
inline BigInt khovanskii_bound(const Shape& s) {
    const long n = (s.K - 1) * s.J;
    const long m = s.K * (s.I - 1);
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(),
                 static_cast<unsigned long>(m) * static_cast<unsigned long>(m - 1) / 2);
    BigInt base = n + 1, p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
    return r * p;
}

}  // namespace tenrank
