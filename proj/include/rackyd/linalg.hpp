#pragma once

// Dense exact matrices and the single tensor-index convention used everywhere.
//
// Convention: for factors of dimensions m and n, the basis vector e_i (x) e_j
// (0-based) sits at flat index i + m*j, i.e. the FIRST factor varies fastest
// ("second-factor-major"). In 1-based terms e_i (x) e_j -> m*(j-1) + i. This is
// the ordering under which the Heisenberg-Voros R-matrix prints as in the
// literature; it must not vary between call sites.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rackyd/scalar.hpp"

namespace rackyd {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Flattening of multi-indices over a list of factor dimensions. 0-based.
class TensorIndex {
public:
  explicit TensorIndex(std::vector<Index> dims) : dims_(std::move(dims)) {
    for (Index d : dims_)
      if (d < 0) throw ShapeError("negative factor dimension");
  }

  const std::vector<Index>& dims() const { return dims_; }

  Index size() const {
    return std::accumulate(dims_.begin(), dims_.end(), Index{1}, std::multiplies<>());
  }

  Index flatten(const std::vector<Index>& multi) const {
    if (multi.size() != dims_.size()) throw ShapeError("multi-index has wrong arity");
    Index flat = 0, stride = 1;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (multi[k] < 0 || multi[k] >= dims_[k]) throw ShapeError("multi-index out of range");
      flat += stride * multi[k];
      stride *= dims_[k];
    }
    return flat;
  }

  std::vector<Index> unflatten(Index flat) const {
    if (flat < 0 || flat >= size()) throw ShapeError("flat index out of range");
    std::vector<Index> multi(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      multi[k] = flat % dims_[k];
      flat /= dims_[k];
    }
    return multi;
  }

private:
  std::vector<Index> dims_;
};

/// Flat index of e_i (x) e_j when the first factor has dimension m.
inline Index flat2(Index i, Index j, Index m) { return i + m * j; }
inline Index flat3(Index i, Index j, Index k, Index n) { return i + n * (j + n * k); }

/// Tensor product of linear maps under the global convention:
/// kron(A,B)(flat(i,i'), flat(j,j')) = A(i,j) * B(i',j').
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  const Index ar = a.rows(), ac = a.cols();
  Matrix<S> out = Matrix<S>::Zero(ar * b.rows(), ac * b.cols());
  for (Index jb = 0; jb < b.cols(); ++jb)
    for (Index ib = 0; ib < b.rows(); ++ib) {
      const S& beta = b(ib, jb);
      if (is_zero(beta)) continue;
      out.block(ar * ib, ac * jb, ar, ac) = a * beta;
    }
  return out;
}

template <class S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return a * b;
}

template <class S>
Matrix<S> identity(Index n) {
  return Matrix<S>::Identity(n, n);
}

/// The swap e_i (x) e_j -> e_j (x) e_i on an n-dimensional space.
template <class S>
Matrix<S> flip_matrix(Index n) {
  Matrix<S> out = Matrix<S>::Zero(n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(flat2(j, i, n), flat2(i, j, n)) = S(1);
  return out;
}

template <class S>
bool all_zero(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool all_zero(const Vector<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

/// Exact entrywise equality including shape.
template <class A, class B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

template <class S>
Vector<S> unit_vector(Index n, Index i) {
  Vector<S> v = Vector<S>::Zero(n);
  v(i) = S(1);
  return v;
}

/// Reduced row echelon form by Gaussian elimination over the exact field.
template <class S>
struct Echelon {
  Matrix<S> reduced;            // same shape as the input
  std::vector<Index> pivots;    // pivot column of each nonzero row, increasing
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
Echelon<S> rref(Matrix<S> m) {
  Echelon<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const S inv = S(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return rref(m).rank();
}

/// Basis of the null space {v : m v = 0}, one column per free variable, in
/// the standard form read off the reduced echelon matrix.
template <class S>
Matrix<S> nullspace(const Matrix<S>& m) {
  const Echelon<S> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Matrix<S> basis = Matrix<S>::Zero(m.cols(), static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(f, static_cast<Index>(k)) = S(1);
    for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[static_cast<std::size_t>(r)], static_cast<Index>(k)) = -e.reduced(r, f);
  }
  return basis;
}

/// Echelonized basis (as columns) of the column span of m.
template <class S>
Matrix<S> column_span(const Matrix<S>& m) {
  const Echelon<S> e = rref(Matrix<S>(m.transpose()));
  return e.reduced.topRows(e.rank()).transpose();
}

/// Coordinates c with basis * c == v, for a basis of full column rank. Throws
/// if v is outside the span.
template <class S>
Vector<S> coordinates(const Matrix<S>& basis, const Vector<S>& v) {
  Matrix<S> aug(basis.rows(), basis.cols() + 1);
  aug << basis, v;
  const Echelon<S> e = rref(aug);
  if (e.rank() > 0 && e.pivots.back() == basis.cols())
    throw std::domain_error("vector is not in the span of the basis");
  if (e.rank() != basis.cols()) throw std::domain_error("basis is not linearly independent");
  Vector<S> c(basis.cols());
  for (Index r = 0; r < basis.cols(); ++r) c(r) = e.reduced(r, basis.cols());
  return c;
}

/// Column-compressed copy of a matrix for repeated sparse application.
template <class S>
class SparseColumns {
public:
  struct Entry {
    Index row;
    S value;
  };

  explicit SparseColumns(const Matrix<S>& m) : rows_(m.rows()), cols_(static_cast<std::size_t>(m.cols())) {
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i)
        if (!is_zero(m(i, j))) cols_[static_cast<std::size_t>(j)].push_back({i, m(i, j)});
  }

  Index rows() const { return rows_; }
  Index cols() const { return static_cast<Index>(cols_.size()); }
  const std::vector<Entry>& col(Index j) const { return cols_[static_cast<std::size_t>(j)]; }

private:
  Index rows_;
  std::vector<std::vector<Entry>> cols_;
};

}  // namespace rackyd
