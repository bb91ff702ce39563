#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rackyd/linalg.hpp"
#include "rackyd/report.hpp"

namespace rackyd {

/// Finite-dimensional algebra with a bilinear bracket given by structure
/// constants: column i + n*j of `brackets` holds [e_i, e_j]. Used for Leibniz
/// algebras and (as the antisymmetric special case) Lie algebras.
template <class S>
class LeibnizAlgebra {
public:
  LeibnizAlgebra() = default;
  LeibnizAlgebra(std::vector<std::string> basis, Matrix<S> brackets)
      : basis_(std::move(basis)), brackets_(std::move(brackets)) {
    const Index n = dim();
    if (brackets_.rows() != n || brackets_.cols() != n * n)
      throw ShapeError("structure constants must be n x n^2 for n = " + std::to_string(n));
  }

  /// Zero bracket on the given basis.
  static LeibnizAlgebra abelian(std::vector<std::string> basis) {
    const auto n = static_cast<Index>(basis.size());
    return LeibnizAlgebra(std::move(basis), Matrix<S>::Zero(n, n * n));
  }

  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Matrix<S>& brackets() const { return brackets_; }

  /// [e_i, e_j]
  auto bracket(Index i, Index j) const { return brackets_.col(flat2(i, j, dim())); }

  Vector<S> bracket(const Vector<S>& u, const Vector<S>& v) const {
    Vector<S> out = Vector<S>::Zero(dim());
    for (Index j = 0; j < dim(); ++j) {
      if (is_zero(v(j))) continue;
      for (Index i = 0; i < dim(); ++i) {
        if (is_zero(u(i))) continue;
        out += (u(i) * v(j)) * brackets_.col(flat2(i, j, dim()));
      }
    }
    return out;
  }

  /// Sets [e_i, e_j] = value.
  void set_bracket(Index i, Index j, const Vector<S>& value) { brackets_.col(flat2(i, j, dim())) = value; }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.basis_ == b.basis_ && exactly_equal(a.brackets_, b.brackets_);
  }

private:
  std::vector<std::string> basis_;
  Matrix<S> brackets_;
};

struct LieReport {
  bool antisymmetric = false;
  bool jacobi = false;
  bool ok() const { return antisymmetric && jacobi; }
  std::vector<Witness> witnesses;
};

/// Antisymmetry on basis pairs and the Jacobi identity on basis triples.
template <class S>
LieReport check_lie(const LeibnizAlgebra<S>& g, const CheckOptions& opts = {}) {
  LieReport r;
  const Index n = g.dim();
  WitnessLog anti(opts);
  for (Index i = 0; i < n && !anti.full(); ++i)
    for (Index j = i; j < n && !anti.full(); ++j)
      if (!exactly_equal(g.bracket(i, j), -g.bracket(j, i))) anti.add("antisymmetry", {long(i), long(j)});
  r.antisymmetric = !anti.failed();
  r.witnesses = anti.take();
  WitnessLog jac(opts);
  for (Index i = 0; i < n && !jac.full(); ++i)
    for (Index j = 0; j < n && !jac.full(); ++j)
      for (Index k = 0; k < n && !jac.full(); ++k) {
        const Vector<S> ei = unit_vector<S>(n, i), ej = unit_vector<S>(n, j), ek = unit_vector<S>(n, k);
        Vector<S> sum = g.bracket(g.bracket(ei, ej), ek) + g.bracket(g.bracket(ej, ek), ei) +
                        g.bracket(g.bracket(ek, ei), ej);
        if (!all_zero(sum)) jac.add("jacobi", {long(i), long(j), long(k)});
      }
  r.jacobi = !jac.failed();
  for (auto& w : jac.take())
    if (r.witnesses.size() < opts.witness_limit) r.witnesses.push_back(std::move(w));
  return r;
}

/// Right action of a Lie algebra given by one matrix per basis element
/// (column m of actions[x] is e_m . e_x). Checks m.[x,y] = (m.x).y - (m.y).x.
template <class S>
std::vector<Witness> check_right_lie_action(const LeibnizAlgebra<S>& g, const std::vector<Matrix<S>>& actions,
                                            const CheckOptions& opts = {}) {
  if (static_cast<Index>(actions.size()) != g.dim()) throw ShapeError("one action matrix per Lie generator required");
  WitnessLog log(opts);
  const Index n = g.dim();
  for (Index x = 0; x < n && !log.full(); ++x)
    for (Index y = 0; y < n && !log.full(); ++y) {
      Matrix<S> lhs = Matrix<S>::Zero(actions[0].rows(), actions[0].cols());
      for (Index k = 0; k < n; ++k)
        if (!is_zero(g.bracket(x, y)(k))) lhs += g.bracket(x, y)(k) * actions[k];
      const Matrix<S> rhs = actions[y] * actions[x] - actions[x] * actions[y];
      for (Index m = 0; m < lhs.cols() && !log.full(); ++m)
        if (!exactly_equal(lhs.col(m), rhs.col(m))) log.add("right_lie_action", {long(m), long(x), long(y)});
    }
  return log.take();
}

}  // namespace rackyd
