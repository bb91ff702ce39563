#pragma once

// Right Leibniz algebras: the Leibniz identity, the ideal generated by
// squares and the Lie quotient, the unital shelf on k + g, and the first-order
// Yetter-Drinfel'd module on k + g.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rackyd/yd.hpp"

namespace rackyd {

struct LeibnizReport {
  bool ok = false;
  std::vector<Witness> witnesses;  // "leibniz" (i,j,k)
};

/// [[x,y],z] == [x,[y,z]] + [[x,z],y] on all basis triples.
template <class S>
LeibnizReport check_leibniz(const LeibnizAlgebra<S>& l, const CheckOptions& opts = {}) {
  const Index n = l.dim();
  WitnessLog log(opts);
  for (Index i = 0; i < n && !log.full(); ++i)
    for (Index j = 0; j < n && !log.full(); ++j)
      for (Index k = 0; k < n && !log.full(); ++k) {
        const Vector<S> ei = unit_vector<S>(n, i), ek = unit_vector<S>(n, k);
        const Vector<S> lhs = l.bracket(Vector<S>(l.bracket(i, j)), ek);
        const Vector<S> rhs = l.bracket(ei, Vector<S>(l.bracket(j, k))) + l.bracket(Vector<S>(l.bracket(i, k)), unit_vector<S>(n, j));
        if (!exactly_equal(lhs, rhs)) log.add("leibniz", {long(i), long(j), long(k)});
      }
  LeibnizReport r;
  r.ok = !log.failed();
  r.witnesses = log.take();
  return r;
}

/// Basis (x, y, z) with [x,x] = [y,y] = [x,y] = z, [y,x] = -z, all others zero.
template <class S>
LeibnizAlgebra<S> heisenberg_voros() {
  auto l = LeibnizAlgebra<S>::abelian({"x", "y", "z"});
  const Vector<S> z = unit_vector<S>(3, 2);
  l.set_bracket(0, 0, z);
  l.set_bracket(1, 1, z);
  l.set_bracket(0, 1, z);
  l.set_bracket(1, 0, -z);
  return l;
}

/// Smallest two-sided ideal containing every square [v,v], as an echelonized
/// column basis (n x r).
template <class S>
Matrix<S> squares_ideal(const LeibnizAlgebra<S>& l) {
  const Index n = l.dim();
  std::vector<Vector<S>> gens;
  for (Index i = 0; i < n; ++i) {
    gens.push_back(l.bracket(i, i));
    for (Index j = i + 1; j < n; ++j) gens.push_back(l.bracket(i, j) + l.bracket(j, i));
  }
  auto to_matrix = [n](const std::vector<Vector<S>>& cols) {
    Matrix<S> m = Matrix<S>::Zero(n, static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Index>(c)) = cols[c];
    return m;
  };
  Matrix<S> span = column_span(to_matrix(gens));
  while (true) {
    std::vector<Vector<S>> grown;
    for (Index c = 0; c < span.cols(); ++c) {
      grown.push_back(span.col(c));
      for (Index j = 0; j < n; ++j) {
        const Vector<S> ej = unit_vector<S>(n, j), v = span.col(c);
        grown.push_back(l.bracket(v, ej));
        grown.push_back(l.bracket(ej, v));
      }
    }
    Matrix<S> next = grown.empty() ? Matrix<S>(n, 0) : column_span(to_matrix(grown));
    if (next.cols() == span.cols()) return span;
    span = std::move(next);
  }
}

template <class S>
struct LieQuotientData {
  Matrix<S> ideal;       // n x r, echelonized
  Matrix<S> projection;  // q x n
  Matrix<S> section;     // n x q, standard basis vectors off the ideal's pivots
  LeibnizAlgebra<S> lie; // quotient structure constants
  std::vector<Matrix<S>> lifted_action;  // per quotient basis element w: v -> [v, section(w)]
  Index dim() const { return lie.dim(); }
};

/// Quotient by the squares ideal. Throws ValidationError for non-Leibniz
/// input and std::logic_error if the lifted right
/// action depends on the choice of lift.
template <class S>
LieQuotientData<S> lie_quotient(const LeibnizAlgebra<S>& l) {
  if (!check_leibniz(l).ok) throw ValidationError("lie_quotient: input is not a Leibniz algebra");
  const Index n = l.dim();
  LieQuotientData<S> d;
  d.ideal = squares_ideal(l);
  const Index r = d.ideal.cols(), q = n - r;
  // pivot rows of the ideal basis (first nonzero entry of each column)
  std::vector<bool> pivot(static_cast<std::size_t>(n), false);
  for (Index c = 0; c < r; ++c)
    for (Index i = 0; i < n; ++i)
      if (!is_zero(d.ideal(i, c))) {
        pivot[static_cast<std::size_t>(i)] = true;
        break;
      }
  d.section = Matrix<S>::Zero(n, q);
  std::vector<std::string> labels;
  for (Index i = 0, k = 0; i < n; ++i)
    if (!pivot[static_cast<std::size_t>(i)]) {
      d.section(i, k++) = S(1);
      labels.push_back(l.basis()[static_cast<std::size_t>(i)]);
    }
  Matrix<S> full(n, n);
  full << d.ideal, d.section;
  Matrix<S> aug(n, 2 * n);
  aug << full, identity<S>(n);
  const Matrix<S> inverse = rref(aug).reduced.rightCols(n);
  d.projection = inverse.bottomRows(q);

  for (Index c = 0; c < r; ++c)
    for (Index v = 0; v < n; ++v)
      if (!all_zero(l.bracket(unit_vector<S>(n, v), Vector<S>(d.ideal.col(c)))))
        throw std::logic_error("lifted action is not well defined: [" + l.basis()[static_cast<std::size_t>(v)] +
                               ", ideal] != 0");

  d.lie = LeibnizAlgebra<S>::abelian(labels);
  for (Index a = 0; a < q; ++a)
    for (Index b = 0; b < q; ++b)
      d.lie.set_bracket(a, b, d.projection * l.bracket(Vector<S>(d.section.col(a)), Vector<S>(d.section.col(b))));
  for (Index w = 0; w < q; ++w) {
    Matrix<S> a(n, n);
    for (Index v = 0; v < n; ++v) a.col(v) = l.bracket(unit_vector<S>(n, v), Vector<S>(d.section.col(w)));
    d.lifted_action.push_back(std::move(a));
  }
  return d;
}

/// (a + u) |> (a' + v) = a a' + a' u + [u, v] on k + g, basis (1, e_1, ..., e_n);
/// an (n+1) x (n+1)^2 matrix in the bracket layout.
template <class S>
Matrix<S> unital_shelf(const LeibnizAlgebra<S>& l) {
  const Index n = l.dim(), m = n + 1;
  Matrix<S> out = Matrix<S>::Zero(m, m * m);
  out(0, flat2(0, 0, m)) = S(1);
  for (Index i = 0; i < n; ++i) {
    out(1 + i, flat2(1 + i, 0, m)) = S(1);
    for (Index j = 0; j < n; ++j) out.col(flat2(1 + i, 1 + j, m)).tail(n) = l.bracket(i, j);
  }
  return out;
}

/// Coefficient of output basis vector k in u |> v as a bilinear form B with
/// B(i, j) the coefficient of u_i v_j.
template <class S>
Matrix<S> bilinear_component(const Matrix<S>& bracket, Index k) {
  const Index m = bracket.rows();
  Matrix<S> b(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) b(i, j) = bracket(k, flat2(i, j, m));
  return b;
}

/// Renders a bilinear form with the given coordinate names, the second
/// argument primed: "bb' + bc' - cb'".
template <class S>
std::string format_bilinear(const Matrix<S>& form, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (Index i = 0; i < form.rows(); ++i)
    for (Index j = 0; j < form.cols(); ++j) {
      S c = form(i, j);
      if (is_zero(c)) continue;
      const bool negative = c < S(0);
      if (negative) c = -c;
      out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      if (c != S(1)) out << ScalarTraits<S>::format(c);
      out << names[static_cast<std::size_t>(i)] << names[static_cast<std::size_t>(j)] << "'";
      first = false;
    }
  return first ? "0" : out.str();
}

/// Renders a full bilinear operation as "(<form>)<basis label> + ...", with the
/// label omitted for a basis vector named "1".
template <class S>
std::string format_operation(const Matrix<S>& bracket, const std::vector<std::string>& names,
                             const std::vector<std::string>& basis) {
  std::string out;
  for (Index k = 0; k < bracket.rows(); ++k) {
    const Matrix<S> form = bilinear_component(bracket, k);
    if (all_zero(form)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_bilinear(form, names) + ")";
    if (basis[static_cast<std::size_t>(k)] != "1") out += basis[static_cast<std::size_t>(k)];
  }
  return out.empty() ? "0" : out;
}

/// Coproduct of k + g with 1 grouplike and every v in g primitive:
/// column z holds Delta(z) keyed by z1 + m * z2.
template <class S>
Matrix<S> unital_coproduct(const LeibnizAlgebra<S>& l) {
  const Index m = l.dim() + 1;
  Matrix<S> out = Matrix<S>::Zero(m * m, m);
  out(flat2(0, 0, m), 0) = S(1);
  for (Index v = 1; v < m; ++v) {
    out(flat2(v, 0, m), v) = S(1);
    out(flat2(0, v, m), v) = S(1);
  }
  return out;
}

struct CoalgebraShelfReport {
  bool ok = false;
  std::vector<Witness> witnesses;  // "coalgebra_shelf" (x,y,z)
};

/// (x |> y) |> z == (x |> z_(1)) |> (y |> z_(2)) on all basis triples, for an
/// operation in the bracket layout and a coproduct as from unital_coproduct.
template <class S>
CoalgebraShelfReport check_coalgebra_shelf(const Matrix<S>& op, const Matrix<S>& coproduct,
                                           const CheckOptions& opts = {}) {
  const Index m = op.rows();
  auto apply = [&](const Vector<S>& a, const Vector<S>& b) {
    Vector<S> out = Vector<S>::Zero(m);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j)
        if (!is_zero(a(i)) && !is_zero(b(j))) out += a(i) * b(j) * op.col(flat2(i, j, m));
    return out;
  };
  WitnessLog log(opts);
  for (Index x = 0; x < m && !log.full(); ++x)
    for (Index y = 0; y < m && !log.full(); ++y)
      for (Index z = 0; z < m && !log.full(); ++z) {
        const Vector<S> ez = unit_vector<S>(m, z);
        const Vector<S> lhs = apply(Vector<S>(op.col(flat2(x, y, m))), ez);
        Vector<S> rhs = Vector<S>::Zero(m);
        for (Index z1 = 0; z1 < m; ++z1)
          for (Index z2 = 0; z2 < m; ++z2) {
            const S c = coproduct(flat2(z1, z2, m), z);
            if (!is_zero(c)) rhs += c * apply(Vector<S>(op.col(flat2(x, z1, m))), Vector<S>(op.col(flat2(y, z2, m))));
          }
        if (!exactly_equal(lhs, rhs)) log.add("coalgebra_shelf", {long(x), long(y), long(z)});
      }
  CoalgebraShelfReport r;
  r.ok = !log.failed();
  r.witnesses = log.take();
  return r;
}

/// Basis labels ("1", e_1, ..., e_n) of k + g.
template <class S>
std::vector<std::string> unital_basis(const LeibnizAlgebra<S>& l) {
  std::vector<std::string> b{"1"};
  b.insert(b.end(), l.basis().begin(), l.basis().end());
  return b;
}

/// k + g over the first-order enveloping algebra of g_Lie: coaction
/// 1 -> 1 (x) 1, v -> v (x) 1 + 1 (x) pi(v); action 1.w = 0, v.w = [v, w].
template <class S>
YDModule<S> first_order_yd(const LeibnizAlgebra<S>& l, const LieQuotientData<S>& quotient) {
  const Index n = l.dim(), m = n + 1;
  auto hopf = HopfDescriptor<S>::first_order_enveloping(quotient.lie, 2);
  const auto& pbw = *hopf->pbw();
  std::vector<Matrix<S>> action;
  for (const auto& lifted : quotient.lifted_action) {
    Matrix<S> a = Matrix<S>::Zero(m, m);
    a.bottomRightCorner(n, n) = lifted;
    action.push_back(std::move(a));
  }
  Matrix<S> coaction = Matrix<S>::Zero(m * hopf->dim(), m);
  coaction(flat2(0, hopf->unit(), m), 0) = S(1);
  for (Index v = 0; v < n; ++v) {
    coaction(flat2(1 + v, hopf->unit(), m), 1 + v) = S(1);
    const Vector<S> pv = quotient.projection.col(v);
    for (Index k = 0; k < quotient.dim(); ++k)
      if (!is_zero(pv(k))) coaction(flat2(0, pbw.generator(k), m), 1 + v) += pv(k);
  }
  return YDModule<S>(hopf, unital_basis(l), std::move(action), std::move(coaction));
}

/// q(1) = 0, q(v) = pi(v) as a dim(H) x (n+1) matrix over the first-order
/// module; x |> y = x q(y) restricts to the bracket on g and kills 1.
template <class S>
Matrix<S> first_order_q(const YDModule<S>& m, const LieQuotientData<S>& quotient) {
  const auto& hopf = *m.hopf();
  const Index n = quotient.projection.cols();
  if (m.dim() != n + 1) throw ShapeError("first_order_q: module is not k + g");
  Matrix<S> q = Matrix<S>::Zero(hopf.dim(), n + 1);
  for (Index v = 0; v < n; ++v)
    for (Index k = 0; k < quotient.dim(); ++k) q(hopf.pbw()->generator(k), v + 1) += quotient.projection(k, v);
  return q;
}

/// Throws ValidationError unless l satisfies the Leibniz identity.
template <class S>
YDModule<S> first_order_yd(const LeibnizAlgebra<S>& l) {
  if (!check_leibniz(l).ok) throw ValidationError("first_order_yd: input is not a Leibniz algebra");
  return first_order_yd(l, lie_quotient(l));
}

}  // namespace rackyd
