#pragma once

// Dense matrix helpers for the strict matrix models.
//
// Tensor factors are flattened row-major: the basis index of X1 (x) ... (x) Xn
// at (i1, ..., in) is ((i1 * r2 + i2) * r3 + ...) with rj = rank(Xj). Every
// symmetry, distributivity and reindexing below follows that single convention.

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cassert>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

namespace mixcat {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;
using Dims = std::vector<std::size_t>;

inline std::size_t dims_product(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

/// Multi-index of a flat index under the row-major convention.
inline std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> dims) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        idx[i] = flat % dims[i];
        flat /= dims[i];
    }
    return idx;
}

inline std::size_t flatten(std::span<const std::size_t> idx, std::span<const std::size_t> dims) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) flat = flat * dims[i] + idx[i];
    return flat;
}

/// Index map of the tensor symmetry that lists old factor order[i] as new
/// factor i. Entry n is the old flat index feeding new flat index n.
inline std::vector<std::size_t> factor_permutation(std::span<const std::size_t> dims,
                                                   std::span<const std::size_t> order) {
    assert(order.size() == dims.size());
    Dims new_dims(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_dims[i] = dims[order[i]];
    const std::size_t total = dims_product(dims);
    std::vector<std::size_t> source(total);
    std::vector<std::size_t> old_idx(dims.size());
    for (std::size_t n = 0; n < total; ++n) {
        auto new_idx = unflatten(n, new_dims);
        for (std::size_t i = 0; i < order.size(); ++i) old_idx[order[i]] = new_idx[i];
        source[n] = flatten(old_idx, dims);
    }
    return source;
}

/// P with P(n, source[n]) = 1: the matrix of a reindexing.
template <class S>
Matrix<S> permutation_matrix(std::span<const std::size_t> source) {
    const auto n = static_cast<Index>(source.size());
    Matrix<S> p = Matrix<S>::Zero(n, n);
    for (Index i = 0; i < n; ++i) p(i, static_cast<Index>(source[i])) = S(1);
    return p;
}

/// Rows reindexed: result.row(n) = m.row(source[n]). Equals P * m.
template <class S>
Matrix<S> permute_rows(const Matrix<S>& m, std::span<const std::size_t> source) {
    assert(static_cast<Index>(source.size()) == m.rows());
    Matrix<S> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) out.row(i) = m.row(static_cast<Index>(source[i]));
    return out;
}

/// Columns gathered: result.col(n) = m.col(source[n]). Equals m * P^T, i.e.
/// precomposition with the inverse of the symmetry P.
template <class S>
Matrix<S> gather_cols(const Matrix<S>& m, std::span<const std::size_t> source) {
    assert(static_cast<Index>(source.size()) == m.cols());
    Matrix<S> out(m.rows(), m.cols());
    for (Index n = 0; n < m.cols(); ++n) out.col(n) = m.col(static_cast<Index>(source[n]));
    return out;
}

/// result = m * P for the symmetry P with the given source map.
template <class S>
Matrix<S> permute_cols(const Matrix<S>& m, std::span<const std::size_t> source) {
    assert(static_cast<Index>(source.size()) == m.cols());
    Matrix<S> out = Matrix<S>::Zero(m.rows(), m.cols());
    // (m P)(r, c) = sum_n m(r, n) P(n, c) = m(r, n) where source[n] = c.
    for (Index n = 0; n < m.cols(); ++n) out.col(static_cast<Index>(source[n])) = m.col(n);
    return out;
}

/// Product that skips zero entries of the left factor; the matrices built
/// from symmetries and distributivities are overwhelmingly sparse.
template <class S>
Matrix<S> product(const Matrix<S>& a, const Matrix<S>& b) {
    assert(a.cols() == b.rows());
    Matrix<S> out = Matrix<S>::Zero(a.rows(), b.cols());
    std::vector<std::vector<Index>> nonzero_cols(static_cast<std::size_t>(b.rows()));
    for (Index k = 0; k < b.rows(); ++k) {
        for (Index j = 0; j < b.cols(); ++j) {
            if (b(k, j) != 0) nonzero_cols[static_cast<std::size_t>(k)].push_back(j);
        }
    }
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            if (aik == 0) continue;
            for (Index j : nonzero_cols[static_cast<std::size_t>(k)]) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

/// Kronecker product under the row-major flattening.
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> out = Matrix<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Contracts the trailing factor of dimension `traced` on both sides:
/// rows (b, u), cols (a, u) -> T(b, a) = sum_u m((b, u), (a, u)).
/// Output shape is explicit so that traced = 0 still yields out_rows x out_cols.
template <class S>
Matrix<S> partial_trace(const Matrix<S>& m, Index out_rows, Index out_cols, std::size_t traced) {
    const auto t = static_cast<Index>(traced);
    assert(m.rows() == out_rows * t && m.cols() == out_cols * t);
    Matrix<S> out = Matrix<S>::Zero(out_rows, out_cols);
    for (Index b = 0; b < out_rows; ++b) {
        for (Index a = 0; a < out_cols; ++a) {
            for (Index u = 0; u < t; ++u) out(b, a) += m(b * t + u, a * t + u);
        }
    }
    return out;
}

}  // namespace mixcat
