#pragma once

// The group algebra kG, its counit kernel as a Yetter-Drinfel'd module,
// linearized augmented racks and the finite function-algebra picture.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rackyd/yd.hpp"

namespace rackyd {

/// Finitely supported linear combination of group elements; zero
/// coefficients are never stored.
template <class S>
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(std::shared_ptr<const FiniteGroup> group) : group_(std::move(group)) {}

  static GroupAlgebraElement basis(std::shared_ptr<const FiniteGroup> group, int g) {
    GroupAlgebraElement e(std::move(group));
    e.add(g, S(1));
    return e;
  }

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const std::map<int, S>& coeffs() const { return coeffs_; }

  S coeff(int g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? S(0) : it->second;
  }

  void add(int g, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) coeffs_.erase(it);
    }
  }

  Vector<S> to_vector() const {
    Vector<S> v = Vector<S>::Zero(group_->size());
    for (const auto& [g, c] : coeffs_) v(g) = c;
    return v;
  }

  static GroupAlgebraElement from_vector(std::shared_ptr<const FiniteGroup> group, const Vector<S>& v) {
    GroupAlgebraElement e(std::move(group));
    for (Index g = 0; g < v.size(); ++g) e.add(static_cast<int>(g), v(g));
    return e;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    for (const auto& [g, c] : b.coeffs_) a.add(g, c);
    return a;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    for (const auto& [g, c] : b.coeffs_) a.add(g, -c);
    return a;
  }
  friend GroupAlgebraElement operator*(const S& s, GroupAlgebraElement a) {
    GroupAlgebraElement out(a.group_);
    for (const auto& [g, c] : a.coeffs_) out.add(g, s * c);
    return out;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out(a.group_);
    for (const auto& [g, c] : a.coeffs_)
      for (const auto& [h, d] : b.coeffs_) out.add(a.group_->mul(g, h), c * d);
    return out;
  }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return *a.group_ == *b.group_ && a.coeffs_ == b.coeffs_;
  }

private:
  std::shared_ptr<const FiniteGroup> group_;
  std::map<int, S> coeffs_;
};

template <class S>
struct GroupHopfOps {
  std::map<std::pair<int, int>, S> coproduct;  // (g, h) -> coefficient of g (x) h
  S counit;
  GroupAlgebraElement<S> antipode;
};

/// Delta g = g (x) g, eps g = 1, S g = g^-1, extended linearly.
template <class S>
GroupHopfOps<S> hopf_ops(const GroupAlgebraElement<S>& x) {
  GroupHopfOps<S> r{{}, S(0), GroupAlgebraElement<S>(x.group_ptr())};
  for (const auto& [g, c] : x.coeffs()) {
    r.coproduct[{g, g}] += c;
    r.counit += c;
    r.antipode.add(x.group().inv(g), c);
  }
  std::erase_if(r.coproduct, [](const auto& kv) { return is_zero(kv.second); });
  return r;
}

/// x |> h = S(h_(1)) x h_(2); on group elements h^-1 x h.
template <class S>
GroupAlgebraElement<S> adjoint_action(const GroupAlgebraElement<S>& x, const GroupAlgebraElement<S>& h) {
  GroupAlgebraElement<S> out(x.group_ptr());
  for (const auto& [hg, hc] : h.coeffs())
    for (const auto& [g, c] : x.coeffs()) out.add(x.group().conj(g, hg), c * hc);
  return out;
}

namespace detail {

/// Coordinates of a counit-zero element sum c_g g in the basis {g - 1 : g != e}.
template <class S>
Vector<S> ker_eps_coordinates(const std::vector<int>& basis_elems, const Vector<S>& h) {
  Vector<S> out = Vector<S>::Zero(static_cast<Index>(basis_elems.size()));
  for (std::size_t k = 0; k < basis_elems.size(); ++k) out(static_cast<Index>(k)) = h(basis_elems[k]);
  return out;
}

}  // namespace detail

/// ker(eps) in kG with the adjoint action and the coaction
/// h -> h_(1) (x) h_(2) - 1 (x) h, both evaluated from the formulas and
/// re-expressed in the basis g - 1 (g != e).
template <class S>
YDModule<S> ker_eps_yd(const FiniteGroup& g) {
  auto hopf = HopfDescriptor<S>::group_algebra(g);
  auto grp = std::make_shared<const FiniteGroup>(g);
  std::vector<int> elems;
  std::vector<std::string> labels;
  for (int a = 0; a < g.size(); ++a)
    if (a != g.identity()) {
      elems.push_back(a);
      labels.push_back(g.label(a) + "-1");
    }
  const Index n = static_cast<Index>(elems.size()), nh = g.size();
  auto element = [&](Index k) {
    return GroupAlgebraElement<S>::basis(grp, elems[static_cast<std::size_t>(k)]) -
           GroupAlgebraElement<S>::basis(grp, g.identity());
  };

  std::vector<Matrix<S>> action;
  for (int h = 0; h < g.size(); ++h) {
    Matrix<S> a = Matrix<S>::Zero(n, n);
    const auto hh = GroupAlgebraElement<S>::basis(grp, h);
    for (Index k = 0; k < n; ++k)
      a.col(k) = detail::ker_eps_coordinates<S>(elems, adjoint_action(element(k), hh).to_vector());
    action.push_back(std::move(a));
  }

  Matrix<S> coaction = Matrix<S>::Zero(n * nh, n);
  for (Index k = 0; k < n; ++k) {
    const auto h = element(k);
    // Delta(h) - 1 (x) h as a dim(G) x dim(G) matrix, left factor in rows
    Matrix<S> d = Matrix<S>::Zero(nh, nh);
    for (const auto& [gg, c] : hopf_ops(h).coproduct) d(gg.first, gg.second) += c;
    for (const auto& [b, c] : h.coeffs()) d(g.identity(), b) -= c;
    for (Index b = 0; b < nh; ++b) {
      const Vector<S> left = d.col(b);
      coaction.col(k).segment(n * b, n) = detail::ker_eps_coordinates<S>(elems, left);
    }
  }
  return YDModule<S>(hopf, std::move(labels), std::move(action), std::move(coaction));
}

/// Inclusion ker(eps) -> kG as a dim(G) x dim(ker eps) matrix.
template <class S>
Matrix<S> ker_eps_inclusion(const FiniteGroup& g) {
  Matrix<S> q = Matrix<S>::Zero(g.size(), g.size() - 1);
  Index k = 0;
  for (int a = 0; a < g.size(); ++a)
    if (a != g.identity()) {
      q(a, k) = S(1);
      q(g.identity(), k) = S(-1);
      ++k;
    }
  return q;
}

/// kX with right action from the table and coaction x -> x (x) p(x), built
/// without validating the augmentation so broken instances can be studied.
template <class S>
YDModule<S> linearized_module(const AugmentedRack& a) {
  const FiniteGroup& g = a.group();
  auto hopf = HopfDescriptor<S>::group_algebra(g);
  const Index n = a.size(), nh = g.size();
  std::vector<Matrix<S>> action;
  for (int h = 0; h < g.size(); ++h) {
    Matrix<S> m = Matrix<S>::Zero(n, n);
    for (int x = 0; x < a.size(); ++x) m(a.act(x, h), x) = S(1);
    action.push_back(std::move(m));
  }
  Matrix<S> coaction = Matrix<S>::Zero(n * nh, n);
  for (int x = 0; x < a.size(); ++x) coaction(flat2(x, a.p(x), n), x) = S(1);
  return YDModule<S>(hopf, a.carrier(), std::move(action), std::move(coaction));
}

/// p : kX -> kG as a dim(G) x |X| matrix.
template <class S>
Matrix<S> p_matrix(const AugmentedRack& a) {
  Matrix<S> p = Matrix<S>::Zero(a.group().size(), a.size());
  for (int x = 0; x < a.size(); ++x) p(a.p(x), x) = S(1);
  return p;
}

/// q(x) = p(x) - 1, landing in ker(eps).
template <class S>
Matrix<S> rack_q(const AugmentedRack& a) {
  Matrix<S> q = p_matrix<S>(a);
  for (int x = 0; x < a.size(); ++x) q(a.group().identity(), x) -= S(1);
  return q;
}

template <class S>
struct LinearizedRack {
  YDModule<S> module;
  Matrix<S> p;                   // dim(G) x |X|
  bool p_equivariant = false;    // p(x.g) = g^-1 p(x) g in kG
  bool p_bicomodule = false;     // (p (x) 1) Delta_r x = Delta p(x)
  std::vector<Witness> witnesses;
};

/// Throws ValidationError unless check_augmented passes.
template <class S>
LinearizedRack<S> linearize_augmented(const AugmentedRack& a, const CheckOptions& opts = {}) {
  if (!check_augmented(a).ok) throw ValidationError("linearize: input is not an augmented rack");
  LinearizedRack<S> r{linearized_module<S>(a), p_matrix<S>(a), false, false, {}};
  const auto& g = a.group();
  auto grp = std::make_shared<const FiniteGroup>(g);
  WitnessLog equiv(opts), bicomod(opts);
  for (int x = 0; x < a.size(); ++x) {
    const auto px = GroupAlgebraElement<S>::from_vector(grp, r.p.col(x));
    for (int h = 0; h < g.size(); ++h) {
      const auto lhs = GroupAlgebraElement<S>::from_vector(grp, r.p.col(a.act(x, h)));
      if (!(lhs == adjoint_action(px, GroupAlgebraElement<S>::basis(grp, h)))) equiv.add("p_equivariance", {x, h});
    }
    // right coaction of x is x (x) p(x); applying p to the left factor gives p(x) (x) p(x)
    std::map<std::pair<int, int>, S> lhs;
    const Matrix<S> cx = r.module.coact(unit_vector<S>(a.size(), x));
    for (Index b = 0; b < g.size(); ++b) {
      const Vector<S> left = r.p * cx.col(b);
      for (Index c = 0; c < g.size(); ++c)
        if (!is_zero(left(c))) lhs[{static_cast<int>(c), static_cast<int>(b)}] += left(c);
    }
    std::erase_if(lhs, [](const auto& kv) { return is_zero(kv.second); });
    if (lhs != hopf_ops(px).coproduct) bicomod.add("p_bicomodule", {x});
  }
  r.p_equivariant = !equiv.failed();
  r.p_bicomodule = !bicomod.failed();
  for (WitnessLog* log : {&equiv, &bicomod})
    for (auto& w : log->take())
      if (r.witnesses.size() < std::max<std::size_t>(1, opts.witness_limit)) r.witnesses.push_back(std::move(w));
  return r;
}

/// Scalar-valued functions on a finite set in the delta basis, with pointwise
/// product.
template <class S>
class FunctionAlgebra {
public:
  explicit FunctionAlgebra(Index size) : size_(size) {}
  Index dim() const { return size_; }
  Vector<S> delta(Index i) const { return unit_vector<S>(size_, i); }
  Vector<S> one() const { return Vector<S>::Constant(size_, S(1)); }
  Vector<S> mul(const Vector<S>& f, const Vector<S>& g) const { return f.cwiseProduct(g); }

private:
  Index size_;
};

/// Hopf structure of k[G] on delta functions: Delta(d_g) = sum_{ab=g} d_a (x) d_b,
/// S(d_g) = d_{g^-1}.
template <class S>
struct GroupFunctionHopf {
  const FiniteGroup& g;
  FunctionAlgebra<S> alg{g.size()};

  Vector<S> antipode(const Vector<S>& f) const {
    Vector<S> out = Vector<S>::Zero(g.size());
    for (int a = 0; a < g.size(); ++a) out(g.inv(a)) = f(a);
    return out;
  }
  /// f_(2) (x) S(f_(1)) f_(3), as a dim x dim matrix with the left factor in rows.
  Matrix<S> adjoint_coaction(Index delta_index) const {
    const int n = g.size();
    Matrix<S> out = Matrix<S>::Zero(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int c = g.mul(g.inv(g.mul(a, b)), static_cast<int>(delta_index));  // abc = target
        const Vector<S> right = alg.mul(antipode(alg.delta(a)), alg.delta(c));
        out.row(b) += right.transpose();
      }
    return out;
  }
};

struct DualReport {
  bool p_star_right_colinear = false;
  bool p_star_left_colinear = false;  // trivial left coactions on both sides
  bool p_star_bimodule = false;
  std::string interpretation;
  bool ok() const { return p_star_right_colinear && p_star_left_colinear && p_star_bimodule; }
  std::vector<Witness> witnesses;
};

/// p* : k[G] -> k[X], f -> f o p, against the right coaction rho(f)(x)(g) = f(x.g)
/// on k[X] and the right adjoint coaction on k[G].
template <class S>
DualReport function_dual_check(const AugmentedRack& a, const CheckOptions& opts = {}) {
  const FiniteGroup& g = a.group();
  const Index nx = a.size(), ng = g.size();
  const GroupFunctionHopf<S> kg{g};
  const FunctionAlgebra<S> kx(nx);
  Matrix<S> p_star = Matrix<S>::Zero(nx, ng);
  for (int x = 0; x < nx; ++x) p_star(x, a.p(x)) = S(1);

  auto rho = [&](const Vector<S>& f) {  // nx x ng, entry (x, h) = f(x.h)
    Matrix<S> out(nx, ng);
    for (int x = 0; x < nx; ++x)
      for (int h = 0; h < ng; ++h) out(x, h) = f(a.act(x, h));
    return out;
  };

  DualReport r;
  r.interpretation =
      "module halves checked with k[G] acting on k[X] through p* and pointwise multiplication; "
      "left coactions are trivial on both sides";
  WitnessLog right(opts), mod(opts);
  for (Index d = 0; d < ng; ++d) {
    const Matrix<S> lhs = rho(p_star * kg.alg.delta(d));
    const Matrix<S> rhs = p_star * kg.adjoint_coaction(d);
    if (!exactly_equal(lhs, rhs)) right.add("p_star_right_colinear", {long(d)});
  }
  if (!exactly_equal(Vector<S>(p_star * kg.alg.one()), kx.one())) mod.add("p_star_unit", {});
  for (Index d = 0; d < ng; ++d)
    for (Index e = 0; e < ng; ++e) {
      const Vector<S> lhs = p_star * kg.alg.mul(kg.alg.delta(d), kg.alg.delta(e));
      const Vector<S> rhs = kx.mul(p_star * kg.alg.delta(d), p_star * kg.alg.delta(e));
      if (!exactly_equal(lhs, rhs)) mod.add("p_star_bimodule", {long(d), long(e)});
    }
  r.p_star_right_colinear = !right.failed();
  r.p_star_left_colinear = true;
  r.p_star_bimodule = !mod.failed();
  for (WitnessLog* log : {&right, &mod})
    for (auto& w : log->take())
      if (r.witnesses.size() < std::max<std::size_t>(1, opts.witness_limit)) r.witnesses.push_back(std::move(w));
  return r;
}

}  // namespace rackyd
