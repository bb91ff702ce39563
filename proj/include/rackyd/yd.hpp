#pragma once

// Yetter-Drinfel'd modules over a HopfDescriptor, the braiding
// tau(x (x) y) = y_(0) (x) x y_(1), Yang-Baxter checks and braided Leibniz
// algebras.
//
// Every identity checked here is multilinear in its module arguments (the
// braided Leibniz identity is trilinear because tau is applied to y (x) z
// before bracketing) and multiplicative in the Hopf argument, so checking all
// basis tuples against algebra generators is a complete verification.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rackyd/hopf.hpp"

namespace rackyd {

namespace detail {

template <class S>
using SparseVec = std::map<Index, S>;

template <class S>
void add_to(SparseVec<S>& v, Index i, const S& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = v.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

/// tau (x) id on M^(x)3
template <class S>
SparseVec<S> apply_12(const SparseColumns<S>& t, Index n, const SparseVec<S>& v) {
  SparseVec<S> out;
  const Index n2 = n * n;
  for (const auto& [idx, c] : v)
    for (const auto& e : t.col(idx % n2)) add_to(out, e.row + n2 * (idx / n2), c * e.value);
  return out;
}

/// id (x) tau on M^(x)3
template <class S>
SparseVec<S> apply_23(const SparseColumns<S>& t, Index n, const SparseVec<S>& v) {
  SparseVec<S> out;
  for (const auto& [idx, c] : v)
    for (const auto& e : t.col(idx / n)) add_to(out, idx % n + n * e.row, c * e.value);
  return out;
}

inline std::vector<long> L(std::initializer_list<Index> v) {
  std::vector<long> out;
  for (Index i : v) out.push_back(static_cast<long>(i));
  return out;
}

/// Image of a sparse vector under a column-compressed matrix.
template <class S>
SparseVec<S> apply(const SparseColumns<S>& a, const SparseVec<S>& v) {
  SparseVec<S> out;
  for (const auto& [j, c] : v)
    for (const auto& e : a.col(j)) add_to(out, e.row, c * e.value);
  return out;
}

}  // namespace detail

/// Elements of M (x) H are stored as dim(M) x dim(H) matrices X with
/// X(k, b) the coefficient of e_k (x) h_b; this is the column-major reshape of
/// the flat index k + dim(M) * b.
template <class S>
class YDModule {
public:
  using Hopf = HopfDescriptor<S>;

  /// `action[g]` is the matrix of the right action of generator g (column m is
  /// e_m . g); `coaction` has column m equal to the flattened coaction of e_m.
  /// Throws ValidationError on shape mismatch or on coaction entries above the
  /// descriptor's representable degree.
  YDModule(std::shared_ptr<const Hopf> hopf, std::vector<std::string> basis, std::vector<Matrix<S>> action,
           Matrix<S> coaction)
      : hopf_(std::move(hopf)), basis_(std::move(basis)), action_(std::move(action)), coaction_(std::move(coaction)) {
    const Index n = dim(), h = hopf_->dim();
    if (action_.size() != hopf_->generators().size())
      throw ValidationError("YD module: need one action matrix per Hopf generator");
    for (const auto& a : action_)
      if (a.rows() != n || a.cols() != n) throw ValidationError("YD module: action matrix has wrong shape");
    if (coaction_.rows() != n * h || coaction_.cols() != n)
      throw ValidationError("YD module: coaction matrix must be (dim M * dim H) x dim M");
    const int bound = hopf_->coaction_degree_bound();
    if (bound >= 0)
      for (Index m = 0; m < n; ++m)
        for (Index b = 0; b < h; ++b)
          if (hopf_->degree(b) > bound)
            for (Index k = 0; k < n; ++k)
              if (!is_zero(coaction_(flat2(k, b, n), m)))
                throw ValidationError("YD module: coaction of " + basis_[static_cast<std::size_t>(m)] +
                                      " uses " + hopf_->label(b) + ", above the representable degree " +
                                      std::to_string(bound));
    basis_action_.reserve(static_cast<std::size_t>(h));
    for (Index b = 0; b < h; ++b) {
      Matrix<S> a = identity<S>(n);
      for (Index g : hopf_->word(b)) a = action_[static_cast<std::size_t>(g)] * a;
      sparse_basis_action_.emplace_back(a);
      basis_action_.push_back(std::move(a));
    }
    for (const auto& a : action_) sparse_action_.emplace_back(a);
    coaction_terms_.resize(static_cast<std::size_t>(n));
    for (Index m = 0; m < n; ++m)
      for (Index b = 0; b < h; ++b)
        for (Index k = 0; k < n; ++k)
          if (!is_zero(coaction_(flat2(k, b, n), m))) coaction_terms_[static_cast<std::size_t>(m)].push_back({k, b, coaction_(flat2(k, b, n), m)});
  }

  struct CoactionTerm {
    Index k;  // module basis index
    Index b;  // Hopf basis index
    S coeff;
  };

  const std::shared_ptr<const Hopf>& hopf() const { return hopf_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<Matrix<S>>& action() const { return action_; }
  const Matrix<S>& coaction() const { return coaction_; }

  /// Matrix of the right action of the Hopf basis element b.
  const Matrix<S>& basis_action(Index b) const { return basis_action_[static_cast<std::size_t>(b)]; }

  const SparseColumns<S>& sparse_action(Index g) const { return sparse_action_[static_cast<std::size_t>(g)]; }
  const SparseColumns<S>& sparse_basis_action(Index b) const { return sparse_basis_action_[static_cast<std::size_t>(b)]; }
  /// Nonzero terms e_k (x) h_b of the coaction of basis vector m.
  const std::vector<CoactionTerm>& coaction_terms(Index m) const { return coaction_terms_[static_cast<std::size_t>(m)]; }

  Matrix<S> action_matrix(const Vector<S>& h) const {
    Matrix<S> out = Matrix<S>::Zero(dim(), dim());
    for (Index b = 0; b < hopf_->dim(); ++b)
      if (!is_zero(h(b))) out += h(b) * basis_action(b);
    return out;
  }

  Vector<S> act(const Vector<S>& m, const Vector<S>& h) const { return action_matrix(h) * m; }

  /// Coaction of m as a dim(M) x dim(H) matrix.
  Matrix<S> coact(const Vector<S>& m) const {
    const Vector<S> flat = coaction_ * m;
    return Eigen::Map<const Matrix<S>>(flat.data(), dim(), hopf_->dim());
  }

private:
  std::shared_ptr<const Hopf> hopf_;
  std::vector<std::string> basis_;
  std::vector<Matrix<S>> action_;
  Matrix<S> coaction_;
  std::vector<Matrix<S>> basis_action_;
  std::vector<SparseColumns<S>> sparse_action_;
  std::vector<SparseColumns<S>> sparse_basis_action_;
  std::vector<std::vector<CoactionTerm>> coaction_terms_;
};

/// Trivial coaction m -> m (x) 1.
template <class S>
Matrix<S> trivial_coaction(const HopfDescriptor<S>& hopf, Index n) {
  Matrix<S> c = Matrix<S>::Zero(n * hopf.dim(), n);
  for (Index m = 0; m < n; ++m) c(flat2(m, hopf.unit(), n), m) = S(1);
  return c;
}

struct YDReport {
  bool module_ok = false;
  bool comodule_ok = false;
  bool ok_eq2 = false;
  bool ok_eq3 = false;
  bool ok() const { return module_ok && comodule_ok && ok_eq2 && ok_eq3; }
  std::vector<Witness> witnesses;
};

/// Module axioms, comodule axioms, and the Yetter-Drinfel'd condition in the
/// forms
///   eq2:  (x h2)_(0) (x) h1 (x h2)_(1) = x_(0) h1 (x) x_(1) h2
///   eq3:  (x h)_(0) (x) (x h)_(1)      = x_(0) h2 (x) S(h1) x_(1) h3
/// on every basis vector x and every algebra generator h. Elements of
/// M (x) H are keyed by k + dim(M) * b.
template <class S>
YDReport check_yd(const YDModule<S>& m, const CheckOptions& opts = {}) {
  using V = detail::SparseVec<S>;
  YDReport r;
  const auto& hopf = *m.hopf();
  const Index n = m.dim(), nh = hopf.dim();
  std::vector<Witness> all;
  auto merge = [&](WitnessLog& log) {
    for (auto& w : log.take())
      if (all.size() < std::max<std::size_t>(1, opts.witness_limit)) all.push_back(std::move(w));
  };

  WitnessLog module(opts);
  const auto& rels = hopf.relations();
  for (std::size_t i = 0; i < rels.size() && !module.full(); ++i)
    for (Index x = 0; x < n; ++x) {
      V total;
      for (const auto& [coeff, word] : rels[i].terms) {
        V v{{x, coeff}};
        for (Index g : word) v = detail::apply(m.sparse_action(g), v);
        for (const auto& [k, c] : v) detail::add_to(total, k, c);
      }
      if (!total.empty()) {
        module.add("module_relation", {static_cast<long>(i)});
        break;
      }
    }
  r.module_ok = !module.failed();
  merge(module);

  WitnessLog comodule(opts);
  for (Index x = 0; x < n && !comodule.full(); ++x) {
    V counit;
    for (const auto& t : m.coaction_terms(x)) detail::add_to(counit, t.k, t.coeff * hopf.counit_basis(t.b));
    if (counit != V{{x, S(1)}}) {
      comodule.add("comodule_counit", {long(x)});
      continue;
    }
    // (delta (x) id) delta = (id (x) Delta) delta, keyed by k + n (b1 + nh b2)
    V lhs, rhs;
    for (const auto& t : m.coaction_terms(x)) {
      for (const auto& u : m.coaction_terms(t.k)) detail::add_to(lhs, u.k + n * (u.b + nh * t.b), t.coeff * u.coeff);
      for (const auto& c : hopf.coproduct_basis(t.b)) detail::add_to(rhs, t.k + n * (c.left + nh * c.right), t.coeff * c.coeff);
    }
    if (lhs != rhs) comodule.add("comodule_coassociativity", {long(x)});
  }
  r.comodule_ok = !comodule.failed();
  merge(comodule);

  WitnessLog eq2(opts), eq3(opts);
  for (Index x = 0; x < n; ++x) {
    const V ex{{x, S(1)}};
    for (const Index h : hopf.generators()) {
      if (!eq2.full()) {
        V lhs, rhs;
        for (const auto& t : hopf.coproduct_basis(h)) {
          for (const auto& [j, cy] : detail::apply(m.sparse_basis_action(t.right), ex))
            for (const auto& c : m.coaction_terms(j))
              for (const auto& [p, cp] : hopf.product_terms(t.left, c.b))
                detail::add_to(lhs, c.k + n * p, t.coeff * cy * c.coeff * cp);
          for (const auto& c : m.coaction_terms(x))
            for (const auto& e : m.sparse_basis_action(t.left).col(c.k))
              for (const auto& [p, cp] : hopf.product_terms(c.b, t.right))
                detail::add_to(rhs, e.row + n * p, t.coeff * c.coeff * e.value * cp);
        }
        if (lhs != rhs) eq2.add("yd_eq2", detail::L({x, h}));
      }
      if (!eq3.full()) {
        V lhs, rhs;
        for (const auto& [j, cy] : detail::apply(m.sparse_basis_action(h), ex))
          for (const auto& c : m.coaction_terms(j)) detail::add_to(lhs, c.k + n * c.b, cy * c.coeff);
        for (const auto& t : hopf.coproduct2_basis(h))
          for (const auto& [a, sa] : hopf.antipode_terms(t.first))
            for (const auto& c : m.coaction_terms(x))
              for (const auto& e : m.sparse_basis_action(t.second).col(c.k))
                for (const auto& [p1, c1] : hopf.product_terms(a, c.b))
                  for (const auto& [p2, c2] : hopf.product_terms(p1, t.third))
                    detail::add_to(rhs, e.row + n * p2, t.coeff * sa * c.coeff * e.value * c1 * c2);
        if (lhs != rhs) eq3.add("yd_eq3", detail::L({x, h}));
      }
    }
  }
  r.ok_eq2 = !eq2.failed();
  r.ok_eq3 = !eq3.failed();
  merge(eq2);
  merge(eq3);
  r.witnesses = std::move(all);
  if (r.module_ok && r.comodule_ok && r.ok_eq2 != r.ok_eq3)
    throw std::logic_error("the two YD condition forms disagree on a module-comodule over a Hopf algebra");
  return r;
}

/// Matrix of tau(e_a (x) e_b) = (e_b)_(0) (x) e_a (e_b)_(1), columns and rows in
/// the global second-factor-major order.
template <class S>
Matrix<S> braiding(const YDModule<S>& m) {
  const Index n = m.dim(), nh = m.hopf()->dim();
  Matrix<S> t = Matrix<S>::Zero(n * n, n * n);
  for (Index b = 0; b < n; ++b) {
    const Matrix<S> cb = m.coact(unit_vector<S>(n, b));
    for (Index hb = 0; hb < nh; ++hb)
      for (Index k = 0; k < n; ++k) {
        const S& c = cb(k, hb);
        if (is_zero(c)) continue;
        const Matrix<S>& act = m.basis_action(hb);
        for (Index a = 0; a < n; ++a)
          for (Index l = 0; l < n; ++l)
            if (!is_zero(act(l, a))) t(flat2(k, l, n), flat2(a, b, n)) += c * act(l, a);
      }
  }
  return t;
}

/// Side length n of an n^2 x n^2 braiding matrix.
template <class S>
Index braiding_factor_dim(const Matrix<S>& t) {
  if (t.rows() != t.cols()) throw ShapeError("braiding matrix must be square");
  Index n = 0;
  while (n * n < t.rows()) ++n;
  if (n * n != t.rows()) throw ShapeError("braiding matrix size is not a perfect square");
  return n;
}


template <class S>
struct YBEReport {
  bool ok = false;
  Matrix<S> defect;  // LHS - RHS on M^(x)3; empty when ok or when too large to materialize
  std::vector<Witness> witnesses;  // "ybe" (x,y,z): basis triple whose image differs
};

/// (tau (x) 1)(1 (x) tau)(tau (x) 1) == (1 (x) tau)(tau (x) 1)(1 (x) tau), evaluated
/// column by column on basis triples.
template <class S>
YBEReport<S> check_ybe(const Matrix<S>& t, const CheckOptions& opts = {}, Index max_defect_dim = 4096) {
  const Index n = braiding_factor_dim(t);
  const Index n3 = n * n * n;
  const SparseColumns<S> sparse(t);
  YBEReport<S> r;
  WitnessLog log(opts);
  std::vector<std::pair<Index, detail::SparseVec<S>>> bad;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        const Index col = flat3(x, y, z, n);
        detail::SparseVec<S> start{{col, S(1)}};
        auto lhs = detail::apply_12(sparse, n, detail::apply_23(sparse, n, detail::apply_12(sparse, n, start)));
        auto rhs = detail::apply_23(sparse, n, detail::apply_12(sparse, n, detail::apply_23(sparse, n, start)));
        if (lhs != rhs) {
          log.add("ybe", detail::L({x, y, z}));
          for (const auto& [i, c] : rhs) detail::add_to(lhs, i, -c);
          bad.emplace_back(col, std::move(lhs));
        }
      }
  r.ok = !log.failed();
  r.witnesses = log.take();
  if (!r.ok && n3 <= max_defect_dim) {
    r.defect = Matrix<S>::Zero(n3, n3);
    for (const auto& [col, v] : bad)
      for (const auto& [i, c] : v) r.defect(i, col) = c;
  }
  return r;
}

/// T * T == I
template <class S>
bool is_involutive(const Matrix<S>& t) {
  if (t.rows() != t.cols()) throw ShapeError("is_involutive: matrix must be square");
  const SparseColumns<S> sparse(t);
  for (Index j = 0; j < t.cols(); ++j) {
    detail::SparseVec<S> v;
    for (const auto& e : sparse.col(j))
      for (const auto& f : sparse.col(e.row)) detail::add_to(v, f.row, e.value * f.value);
    if (v != detail::SparseVec<S>{{j, S(1)}}) return false;
  }
  return true;
}

template <class S>
struct BraidedLeibnizData {
  Index dim = 0;
  Matrix<S> bracket;  // dim x dim^2, column a + dim*b holds a |> b
  Matrix<S> tau;      // dim^2 x dim^2
};

struct BraidedLeibnizReport {
  bool ok = false;
  std::vector<Witness> witnesses;  // "braided_leibniz" (x,y,z)
};

/// (x |> y) |> z == x |> (y |> z) + (x |> z<1>) |> y<2>, tau(y (x) z) = z<1> (x) y<2>,
/// on every basis triple.
template <class S>
BraidedLeibnizReport check_braided_leibniz(const BraidedLeibnizData<S>& d, const CheckOptions& opts = {}) {
  const Index n = d.dim;
  if (d.bracket.rows() != n || d.bracket.cols() != n * n) throw ShapeError("bracket must be n x n^2");
  if (d.tau.rows() != n * n || d.tau.cols() != n * n) throw ShapeError("tau must be n^2 x n^2");
  const SparseColumns<S> br(d.bracket), tau(d.tau);
  using V = detail::SparseVec<S>;
  auto bracket_vec_basis = [&](const V& u, Index z) {  // u |> e_z
    V out;
    for (const auto& [i, c] : u)
      for (const auto& e : br.col(flat2(i, z, n))) detail::add_to(out, e.row, c * e.value);
    return out;
  };
  auto bracket_basis_vec = [&](Index x, const V& w) {  // e_x |> w
    V out;
    for (const auto& [j, c] : w)
      for (const auto& e : br.col(flat2(x, j, n))) detail::add_to(out, e.row, c * e.value);
    return out;
  };
  auto column = [&](Index x, Index y) {
    V out;
    for (const auto& e : br.col(flat2(x, y, n))) out.emplace(e.row, e.value);
    return out;
  };
  BraidedLeibnizReport r;
  WitnessLog log(opts);
  for (Index x = 0; x < n && !log.full(); ++x)
    for (Index y = 0; y < n && !log.full(); ++y)
      for (Index z = 0; z < n && !log.full(); ++z) {
        V lhs = bracket_vec_basis(column(x, y), z);
        V rhs = bracket_basis_vec(x, column(y, z));
        for (const auto& e : tau.col(flat2(y, z, n))) {
          const Index k = e.row % n, l = e.row / n;
          for (const auto& [i, c] : bracket_vec_basis(column(x, k), l)) detail::add_to(rhs, i, e.value * c);
        }
        if (lhs != rhs) log.add("braided_leibniz", detail::L({x, y, z}));
      }
  r.ok = !log.failed();
  r.witnesses = log.take();
  return r;
}

struct QReport {
  bool equivariance = false;           // h1 q(x h2) = q(x) h
  bool coderivation_condition = false;  // Delta q(x) = 1 (x) q(x) + q(x_(0)) (x) x_(1)
  bool adjoint_linear = false;          // q(x h) = S(h1) q(x) h2
  bool colinear = false;                // Delta~ q(x) = (q (x) id) delta(x)
  bool ok() const { return equivariance && coderivation_condition; }
  std::vector<Witness> witnesses;
};

/// q is a dim(H) x dim(M) matrix: column m holds q(e_m). Throws
/// ValidationError unless every q(e_m) lies in the kernel of the counit.
template <class S>
QReport check_q_conditions(const YDModule<S>& m, const Matrix<S>& q, const CheckOptions& opts = {}) {
  const auto& hopf = *m.hopf();
  const Index n = m.dim(), nh = hopf.dim();
  if (q.rows() != nh || q.cols() != n) throw ShapeError("q must be dim(H) x dim(M)");
  for (Index x = 0; x < n; ++x)
    if (!is_zero(hopf.counit(q.col(x))))
      throw ValidationError("q(" + m.basis()[static_cast<std::size_t>(x)] + ") is not in the kernel of the counit");

  QReport r;
  WitnessLog equiv(opts), coder(opts), adj(opts), colin(opts);
  for (Index x = 0; x < n; ++x) {
    const Vector<S> ex = unit_vector<S>(n, x);
    const Vector<S> qx = q.col(x);
    for (Index h : hopf.generators()) {
      Vector<S> lhs = Vector<S>::Zero(nh);
      for (const auto& t : hopf.coproduct_basis(h))
        lhs += t.coeff * hopf.mul(hopf.basis(t.left), q * (m.basis_action(t.right) * ex));
      if (!exactly_equal(lhs, hopf.mul(qx, hopf.basis(h)))) equiv.add("equivariance", detail::L({x, h}));

      Vector<S> adjoint = Vector<S>::Zero(nh);
      for (const auto& t : hopf.coproduct_basis(h))
        adjoint += t.coeff * hopf.mul(hopf.mul(hopf.antipode_basis(t.left), qx), hopf.basis(t.right));
      if (!exactly_equal(Vector<S>(q * (m.basis_action(h) * ex)), adjoint)) adj.add("adjoint_linear", detail::L({x, h}));
    }
    // q(x_(0)) (x) x_(1) in H (x) H
    const Matrix<S> cx = m.coact(ex);
    Vector<S> q_delta = Vector<S>::Zero(nh * nh);
    for (Index b = 0; b < nh; ++b) {
      if (all_zero(Vector<S>(cx.col(b)))) continue;
      const Vector<S> qk = q * cx.col(b);
      for (Index a = 0; a < nh; ++a)
        if (!is_zero(qk(a))) q_delta(flat2(a, b, nh)) += qk(a);
    }
    const Vector<S> delta_q = hopf.coproduct(qx);
    Vector<S> one_q = Vector<S>::Zero(nh * nh);
    for (Index a = 0; a < nh; ++a) one_q(flat2(hopf.unit(), a, nh)) = qx(a);
    if (!exactly_equal(delta_q, Vector<S>(one_q + q_delta))) coder.add("coderivation_condition", detail::L({x}));
    if (!exactly_equal(Vector<S>(delta_q - one_q), q_delta)) colin.add("colinear", detail::L({x}));
  }
  r.equivariance = !equiv.failed();
  r.coderivation_condition = !coder.failed();
  r.adjoint_linear = !adj.failed();
  r.colinear = !colin.failed();
  for (WitnessLog* log : {&equiv, &coder, &adj, &colin})
    for (auto& w : log->take())
      if (r.witnesses.size() < std::max<std::size_t>(1, opts.witness_limit)) r.witnesses.push_back(std::move(w));
  return r;
}

/// x |> y := x q(y) with the YD braiding. Requires check_yd and
/// check_q_conditions to pass; throws ValidationError otherwise.
template <class S>
BraidedLeibnizData<S> braided_leibniz_from_q(const YDModule<S>& m, const Matrix<S>& q) {
  if (!check_yd(m).ok()) throw ValidationError("braided_leibniz_from_q: module is not Yetter-Drinfel'd");
  if (!check_q_conditions(m, q).ok()) throw ValidationError("braided_leibniz_from_q: q fails equivariance or the coderivation condition");
  const Index n = m.dim();
  BraidedLeibnizData<S> d{n, Matrix<S>::Zero(n, n * n), braiding(m)};
  for (Index b = 0; b < n; ++b) {
    const Matrix<S> act = m.action_matrix(q.col(b));
    for (Index a = 0; a < n; ++a) d.bracket.col(flat2(a, b, n)) = act.col(a);
  }
  return d;
}

}  // namespace rackyd
