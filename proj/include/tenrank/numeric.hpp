// High-precision floating point linear algebra on top of mpf_class: just
// enough for certificate extraction and verification.
#pragma once

#include <cstdint>
#include <vector>

#include "tenrank/rational.hpp"

namespace tenrank {

using MpfMatrix = std::vector<std::vector<mpf_class>>;

inline MpfMatrix mpf_zero_matrix(std::size_t r, std::size_t c, mp_bitcnt_t prec) {
    return MpfMatrix(r, std::vector<mpf_class>(c, mpf_class(0, prec)));
}

inline MpfMatrix mpf_transpose(const MpfMatrix& a) {
    if (a.empty()) return {};
    MpfMatrix r(a[0].size(), std::vector<mpf_class>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

inline MpfMatrix mpf_multiply(const MpfMatrix& a, const MpfMatrix& b, mp_bitcnt_t prec) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw domain_error("matrix product dimension mismatch");
    MpfMatrix r = mpf_zero_matrix(a.size(), b[0].size(), prec);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (sgn(a[i][k]) == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// Gauss-Jordan inverse with partial pivoting; returns false when a pivot
// underflows the given threshold (matrix numerically singular).
inline bool mpf_invert(const MpfMatrix& a, MpfMatrix& out, mp_bitcnt_t prec,
                       const mpf_class& pivot_tol) {
    const std::size_t n = a.size();
    MpfMatrix m = a;
    out = mpf_zero_matrix(n, n, prec);
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
        if (abs(m[piv][col]) <= pivot_tol) return false;
        std::swap(m[piv], m[col]);
        std::swap(out[piv], out[col]);
        mpf_class inv = 1 / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= inv;
            out[col][j] *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            mpf_class f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                out[r][j] -= f * out[col][j];
            }
        }
    }
    return true;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<mpf_class> jacobi_eigenvalues(MpfMatrix a, mp_bitcnt_t prec) {
    const std::size_t n = a.size();
    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec > 8 ? prec - 4 : 4);
    for (int sweep = 0; sweep < 100; ++sweep) {
        mpf_class off(0, prec);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off <= eps) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (sgn(a[p][q]) == 0) continue;
                mpf_class theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                // t = sign(theta) / (|theta| + sqrt(theta^2 + 1))
                mpf_class t = abs(theta) + sqrt(theta * theta + 1);
                t = 1 / t;
                if (sgn(theta) < 0) t = -t;
                mpf_class c = 1 / sqrt(t * t + 1);
                mpf_class s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    mpf_class akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    mpf_class apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<mpf_class> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

// sigma_min / sigma_max of a square matrix, via the eigenvalues of M'M.
inline mpf_class condition_ratio(const MpfMatrix& m, mp_bitcnt_t prec) {
    auto mt = mpf_transpose(m);
    auto g = mpf_multiply(mt, m, prec);
    auto ev = jacobi_eigenvalues(std::move(g), prec);
    mpf_class lo = ev[0], hi = ev[0];
    for (const auto& e : ev) {
        if (e < lo) lo = e;
        if (e > hi) hi = e;
    }
    if (sgn(hi) <= 0) return mpf_class(0, prec);
    if (sgn(lo) < 0) lo = 0;
    return sqrt(lo / hi);
}

// One vector from the numerical null space of m: Gauss-Jordan with partial
// pivoting, refusing pivots below 2^(-prec/2) of the matrix scale so the
// near-null direction is never eliminated with. The first pivot-free column
// becomes the free variable. Returns a vector of length n.
inline std::vector<mpf_class> mpf_null_vector(MpfMatrix m, mp_bitcnt_t prec) {
    if (m.empty()) throw domain_error("null vector of empty matrix");
    const std::size_t rows = m.size(), cols = m[0].size();
    mpf_class scale(0, prec);
    for (const auto& row : m)
        for (const auto& v : row)
            if (abs(v) > scale) scale = abs(v);
    std::vector<mpf_class> x(cols, mpf_class(0, prec));
    if (sgn(scale) == 0) {
        x[0] = 1;  // zero matrix: everything is null
        return x;
    }
    mpf_class thresh = scale;
    mpf_div_2exp(thresh.get_mpf_t(), thresh.get_mpf_t(), prec / 2);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (abs(m[i][c]) > abs(m[best][c])) best = i;
        if (abs(m[best][c]) <= thresh) continue;  // numerically rank-deficient column
        std::swap(m[best], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            mpf_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) {
        // numerically full rank: release the weakest pivot
        std::size_t weakest = 0;
        for (std::size_t i = 1; i < pivot_col.size(); ++i)
            if (abs(m[i][pivot_col[i]]) < abs(m[weakest][pivot_col[weakest]])) weakest = i;
        free_col = pivot_col[weakest];
        pivot_col.erase(pivot_col.begin() + static_cast<std::ptrdiff_t>(weakest));
        m.erase(m.begin() + static_cast<std::ptrdiff_t>(weakest));
    }
    x[free_col] = 1;
    for (std::size_t i = pivot_col.size(); i-- > 0;) {
        std::size_t c = pivot_col[i];
        mpf_class acc(0, prec);
        for (std::size_t j = 0; j < cols; ++j)
            if (j != c && sgn(x[j]) != 0) acc += m[i][j] * x[j];
        x[c] = -acc / m[i][c];
    }
    return x;
}

// ---------------------------------------------------------------------------
// Exact rational elimination.

// Basis of the null space of a rational matrix (solutions of m x = 0).
inline std::vector<std::vector<Rational>> rational_null_space(
    std::vector<std::vector<Rational>> m) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::size_t> pivot_of_col(cols, rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != rows) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[c] = 1;
        for (std::size_t d = 0; d < cols; ++d)
            if (pivot_of_col[d] != rows) x[d] = -m[pivot_of_col[d]][c];
        basis.push_back(std::move(x));
    }
    return basis;
}

inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Exact rational inverse; throws on singular input.
inline std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw domain_error("matrix is singular");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rational d = Rational(1) / m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] *= d;
            inv[c][j] *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Deterministic seeded random numbers.

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform over the integers [lo, hi] by rejection
    long uniform_int(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }
};

// Per-trial seed derivation: independent of execution order.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master ^ (0xA0761D6478BD642FULL * (index + 1)));
    return g.next();
}

}  // namespace tenrank
