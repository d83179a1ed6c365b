// Matrices of multivariate polynomials: fraction-free (Bareiss) determinants
// and row reduction, plus Sylvester resultants built on them.
#pragma once

#include <utility>
#include <vector>

#include "tenrank/polynomial.hpp"

namespace tenrank {

// Exact quotient p / d under a fixed order; throws if division is inexact.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& d, const VarOrder& order) {
    p.require_same(d);
    if (d.is_zero()) throw domain_error("polynomial division by zero");
    if (p.is_zero()) return p;
    if (d.is_constant()) return p * (Rational(1) / d.constant_value());
    Polynomial rem = p;
    Polynomial quot = Polynomial::zero(p.registry());
    auto [dm, dc] = d.leading_term(order);
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term(order);
        if (!dm.divides(rm)) throw domain_error("inexact polynomial division");
        Monomial q = rm / dm;
        Rational k = rc / dc;
        Polynomial t = Polynomial::term(p.registry(), q, k);
        quot = quot + t;
        rem = rem - t * d;
    }
    return quot;
}

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, RegistryPtr reg)
        : rows_(rows), cols_(cols), reg_(std::move(reg)),
          cells_(rows * cols, Polynomial::zero(reg_)) {
        if (!rows || !cols) throw domain_error("PolyMatrix dimensions must be positive");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RegistryPtr& registry() const { return reg_; }

    Polynomial& at(std::size_t r, std::size_t c) { return cells_.at(r * cols_ + c); }
    const Polynomial& at(std::size_t r, std::size_t c) const { return cells_.at(r * cols_ + c); }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

private:
    std::size_t rows_, cols_;
    RegistryPtr reg_;
    std::vector<Polynomial> cells_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Polynomial bareiss_det(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw domain_error("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    const VarOrder order = VarOrder::natural(M.registry());
    PolyMatrix A = M;
    Polynomial prev = Polynomial::constant(M.registry(), 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && A.at(r, k).is_zero()) ++r;
            if (r == n) return Polynomial::zero(M.registry());
            A.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = A.at(k, k) * A.at(i, j) - A.at(i, k) * A.at(k, j);
                A.at(i, j) = divide_exact(num, prev, order);
            }
            A.at(i, k) = Polynomial::zero(M.registry());
        }
        prev = A.at(k, k);
    }
    Polynomial det = A.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Naive cofactor expansion, used as an independent oracle in tests.
inline Polynomial cofactor_det(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw domain_error("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 1) return M.at(0, 0);
    Polynomial det = Polynomial::zero(M.registry());
    for (std::size_t j = 0; j < n; ++j) {
        if (M.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, M.registry());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = M.at(r, c);
            }
        }
        Polynomial term = M.at(0, j) * cofactor_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Sylvester resultant of f and g with respect to `var`; the result does not
// involve var and vanishes exactly at parameter values where f and g share a
// root in var.
inline Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
    f.require_same(g);
    const unsigned df = f.degree_in(var), dg = g.degree_in(var);
    if (df == 0 || dg == 0)
        throw domain_error("resultant requires positive degree in the eliminated variable");
    const std::size_t n = df + dg;
    PolyMatrix S(n, n, f.registry());
    for (unsigned r = 0; r < dg; ++r)
        for (unsigned k = 0; k <= df; ++k) S.at(r, r + k) = f.coefficient_in(var, df - k);
    for (unsigned r = 0; r < df; ++r)
        for (unsigned k = 0; k <= dg; ++k) S.at(dg + r, r + k) = g.coefficient_in(var, dg - k);
    return bareiss_det(S);
}

// Fraction-free forward elimination pivoting on the first `npivot` columns.
// Returns the reduced matrix; rows npivot..rows-1 have zeros in the pivot
// columns. Throws if a pivot column is identically zero below the diagonal
// (structurally degenerate input).
inline PolyMatrix fraction_free_eliminate(PolyMatrix A, std::size_t npivot) {
    if (npivot >= A.cols() || npivot >= A.rows())
        throw domain_error("fraction_free_eliminate: too many pivot columns");
    const VarOrder order = VarOrder::natural(A.registry());
    Polynomial prev = Polynomial::constant(A.registry(), 1);
    for (std::size_t k = 0; k < npivot; ++k) {
        if (A.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < A.rows() && A.at(r, k).is_zero()) ++r;
            if (r == A.rows()) throw domain_error("fraction_free_eliminate: zero pivot column");
            A.swap_rows(k, r);
        }
        for (std::size_t i = k + 1; i < A.rows(); ++i) {
            for (std::size_t j = k + 1; j < A.cols(); ++j) {
                Polynomial num = A.at(k, k) * A.at(i, j) - A.at(i, k) * A.at(k, j);
                A.at(i, j) = divide_exact(num, prev, order);
            }
            A.at(i, k) = Polynomial::zero(A.registry());
        }
        prev = A.at(k, k);
    }
    return A;
}

}  // namespace tenrank
