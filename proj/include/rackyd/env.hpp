#pragma once

// Degree-truncated enveloping tetramodule E = U(g) (x) M of a Lie algebra
// object f : M -> g, the map phi(u (x) m) = u f(m), the left-invariant part
// as a Yetter-Drinfel'd module, and the bracket x |> y = x f~(y).
//
// U(g) is truncated at degree d: products drop components above d. A check
// on an element of U-degree k is only exact when every intermediate stays
// within degree d, so each check below skips basis elements whose degree is
// too high for it and says how much headroom it needs.

#include <string>
#include <vector>

#include "rackyd/leibniz.hpp"

namespace rackyd {

/// Lie algebra object in the category of linear maps: a Lie algebra g, a
/// right g-module M (one matrix per basis element of g, column m = e_m . x)
/// and an equivariant map f : M -> g (dim g x dim M).
template <class S>
struct LieObject {
  LeibnizAlgebra<S> lie;
  std::vector<std::string> basis;
  std::vector<Matrix<S>> action;
  Matrix<S> f;
  Index module_dim() const { return static_cast<Index>(basis.size()); }
};

/// Throws ValidationError naming the first failing tuple.
template <class S>
void validate_lie_object(const LieObject<S>& obj) {
  const auto lie = check_lie(obj.lie);
  if (!lie.ok()) throw ValidationError("Lie object: g is not a Lie algebra (" + lie.witnesses.front().check + ")");
  const Index n = obj.module_dim(), g = obj.lie.dim();
  if (static_cast<Index>(obj.action.size()) != g) throw ValidationError("Lie object: need one action matrix per basis element of g");
  for (const auto& a : obj.action)
    if (a.rows() != n || a.cols() != n) throw ValidationError("Lie object: action matrix has wrong shape");
  if (obj.f.rows() != g || obj.f.cols() != n) throw ValidationError("Lie object: f must be dim g x dim M");
  const auto bad = check_right_lie_action(obj.lie, obj.action);
  if (!bad.empty()) {
    const auto& w = bad.front().indices;
    throw ValidationError("Lie object: right action fails at (m, x, y) = (" + std::to_string(w[0]) + ", " +
                          std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")");
  }
  for (Index m = 0; m < n; ++m)
    for (Index x = 0; x < g; ++x) {
      const Vector<S> lhs = obj.f * obj.action[static_cast<std::size_t>(x)].col(m);
      if (!exactly_equal(lhs, obj.lie.bracket(Vector<S>(obj.f.col(m)), unit_vector<S>(g, x))))
        throw ValidationError("Lie object: f is not equivariant at (m, x) = (" + std::to_string(m) + ", " +
                              std::to_string(x) + ")");
    }
}

/// pi : g -> g_Lie with g acting on itself through the lifted bracket.
template <class S>
LieObject<S> lie_object_from_leibniz(const LeibnizAlgebra<S>& l) {
  auto q = lie_quotient(l);
  return {q.lie, l.basis(), q.lifted_action, q.projection};
}

/// Carrier basis index u + dim(U) * m for the pair (PBW monomial u, basis vector m).
template <class S>
class EnvTetramodule {
public:
  EnvTetramodule(LieObject<S> obj, int degree) : obj_(std::move(obj)), pbw_(obj_.lie, degree) {
    validate_lie_object(obj_);
    const Index dh = pbw_.dim(), dm = obj_.module_dim(), n = dim();
    for (Index a = 0; a < dh; ++a) {
      Matrix<S> l = Matrix<S>::Zero(n, n);
      for (Index m = 0; m < dm; ++m)
        for (Index u = 0; u < dh; ++u) l.block(dh * m, index(u, m), dh, 1) = pbw_.multiply_basis(a, u);
      left_.push_back(std::move(l));
    }
    for (Index x = 0; x < obj_.lie.dim(); ++x) {
      Matrix<S> r = Matrix<S>::Zero(n, n);
      const Matrix<S>& act = obj_.action[static_cast<std::size_t>(x)];
      for (Index m = 0; m < dm; ++m)
        for (Index u = 0; u < dh; ++u) {
          const Index col = index(u, m);
          if (dh > 1) r.block(dh * m, col, dh, 1) = pbw_.multiply_basis(u, pbw_.generator(x));
          for (Index k = 0; k < dm; ++k)
            if (!is_zero(act(k, m))) r(index(u, k), col) += act(k, m);
        }
      right_gen_.push_back(std::move(r));
    }
    for (Index b = 0; b < dh; ++b) {
      Matrix<S> r = identity<S>(n);
      for (int g : pbw_.monomial(b)) r = right_gen_[static_cast<std::size_t>(g)] * r;
      right_.push_back(std::move(r));
    }
    coaction_left_ = Matrix<S>::Zero(dh * n, n);
    coaction_right_ = Matrix<S>::Zero(n * dh, n);
    phi_ = Matrix<S>::Zero(dh, n);
    for (Index m = 0; m < dm; ++m) {
      Vector<S> fm = Vector<S>::Zero(dh);
      for (Index k = 0; k < obj_.lie.dim(); ++k)
        if (dh > 1) fm(pbw_.generator(k)) = obj_.f(k, m);
      for (Index u = 0; u < dh; ++u) {
        const Index col = index(u, m);
        for (const auto& t : pbw_.coproduct_basis(u)) {
          coaction_left_(flat2(t.left, index(t.right, m), dh), col) += t.coeff;
          coaction_right_(flat2(index(t.left, m), t.right, n), col) += t.coeff;
        }
        phi_.col(col) = pbw_.multiply(pbw_.basis_vector(u), fm);
      }
    }
  }

  const LieObject<S>& object() const { return obj_; }
  const TruncatedPBW<S>& pbw() const { return pbw_; }
  int degree() const { return pbw_.degree(); }
  Index dim() const { return pbw_.dim() * obj_.module_dim(); }
  Index index(Index u, Index m) const { return u + pbw_.dim() * m; }
  /// U-degree of a carrier basis element.
  int degree_of(Index e) const { return pbw_.monomial_degree(e % pbw_.dim()); }
  std::string label(Index e) const {
    return pbw_.label(e % pbw_.dim()) + "|" + obj_.basis[static_cast<std::size_t>(e / pbw_.dim())];
  }

  /// Left action of the PBW basis element a.
  const Matrix<S>& left(Index a) const { return left_[static_cast<std::size_t>(a)]; }
  /// Left action of the g-basis element x (zero at degree 0, where x is truncated away).
  Matrix<S> left_generator(Index x) const {
    return pbw_.degree() == 0 ? Matrix<S>(Matrix<S>::Zero(dim(), dim())) : left(pbw_.generator(x));
  }
  /// Right action of the g-basis element x: (u (x) m).x = ux (x) m + u (x) m.x.
  const Matrix<S>& right_generator(Index x) const { return right_gen_[static_cast<std::size_t>(x)]; }
  /// Right action of the PBW basis element b (its letters applied in order).
  const Matrix<S>& right(Index b) const { return right_[static_cast<std::size_t>(b)]; }
  /// Column e holds u_(1) (x) (u_(2) (x) m), index h + dim(U) * e'.
  const Matrix<S>& coaction_left() const { return coaction_left_; }
  /// Column e holds (u_(1) (x) m) (x) u_(2), index e' + dim(E) * h.
  const Matrix<S>& coaction_right() const { return coaction_right_; }
  /// phi(u (x) m) = u f(m), dim(U) x dim(E).
  const Matrix<S>& phi() const { return phi_; }

  Matrix<S> left_action(const Vector<S>& h) const { return combine(left_, h); }
  Matrix<S> right_action(const Vector<S>& h) const { return combine(right_, h); }

  /// Left coaction of v as a dim(U) x dim(E) matrix.
  Matrix<S> coact_left(const Vector<S>& v) const {
    const Vector<S> flat = coaction_left_ * v;
    return Eigen::Map<const Matrix<S>>(flat.data(), pbw_.dim(), dim());
  }
  /// Right coaction of v as a dim(E) x dim(U) matrix.
  Matrix<S> coact_right(const Vector<S>& v) const {
    const Vector<S> flat = coaction_right_ * v;
    return Eigen::Map<const Matrix<S>>(flat.data(), dim(), pbw_.dim());
  }

private:
  Matrix<S> combine(const std::vector<Matrix<S>>& mats, const Vector<S>& h) const {
    Matrix<S> out = Matrix<S>::Zero(dim(), dim());
    for (Index b = 0; b < h.size(); ++b)
      if (!is_zero(h(b))) out += h(b) * mats[static_cast<std::size_t>(b)];
    return out;
  }

  LieObject<S> obj_;
  TruncatedPBW<S> pbw_;
  std::vector<Matrix<S>> left_, right_gen_, right_;
  Matrix<S> coaction_left_, coaction_right_, phi_;
};

/// Throws ValidationError when the Lie object is invalid.
template <class S>
EnvTetramodule<S> build_env(LieObject<S> obj, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  return EnvTetramodule<S>(std::move(obj), degree);
}

namespace detail {

/// Matrices of left and right multiplication by a PBW basis element.
template <class S>
Matrix<S> pbw_left_mult(const TruncatedPBW<S>& u, Index a) {
  Matrix<S> out(u.dim(), u.dim());
  for (Index b = 0; b < u.dim(); ++b) out.col(b) = u.multiply_basis(a, b);
  return out;
}
template <class S>
Matrix<S> pbw_right_mult(const TruncatedPBW<S>& u, Index a) {
  Matrix<S> out(u.dim(), u.dim());
  for (Index b = 0; b < u.dim(); ++b) out.col(b) = u.multiply_basis(b, a);
  return out;
}

/// Delta as a dim^2 x dim matrix, column b holding Delta(b) at i + dim * j.
template <class S>
Matrix<S> pbw_coproduct(const TruncatedPBW<S>& u) {
  Matrix<S> out = Matrix<S>::Zero(u.dim() * u.dim(), u.dim());
  for (Index b = 0; b < u.dim(); ++b)
    for (const auto& t : u.coproduct_basis(b)) out(flat2(t.left, t.right, u.dim()), b) += t.coeff;
  return out;
}

inline void merge_witnesses(std::vector<Witness>& out, std::initializer_list<WitnessLog*> logs, const CheckOptions& opts) {
  for (WitnessLog* log : logs)
    for (auto& w : log->take())
      if (out.size() < std::max<std::size_t>(1, opts.witness_limit)) out.push_back(std::move(w));
}

}  // namespace detail

struct TetramoduleReport {
  bool left_module = false;      // a.(b.e) = (ab).e, degrees within d
  bool right_module = false;     // e.[x,y] = (e.x).y - (e.y).x, deg e <= d - 2
  bool actions_commute = false;  // (a.e).x = a.(e.x), deg a + deg e <= d - 1
  bool left_comodule = false;    // counit and coassociativity
  bool right_comodule = false;
  bool coactions_commute = false;
  bool coactions_bimodule_maps = false;  // against generators, deg e <= d - 1
  bool ok() const {
    return left_module && right_module && actions_commute && left_comodule && right_comodule && coactions_commute &&
           coactions_bimodule_maps;
  }
  std::vector<Witness> witnesses;
};

template <class S>
TetramoduleReport check_tetramodule(const EnvTetramodule<S>& e, const CheckOptions& opts = {}) {
  using V = detail::SparseVec<S>;
  const auto& u = e.pbw();
  const Index n = e.dim(), dh = u.dim(), g = e.object().lie.dim();
  const int d = e.degree();

  std::vector<SparseColumns<S>> left, right;
  for (Index a = 0; a < dh; ++a) left.emplace_back(e.left(a));
  for (Index x = 0; x < g; ++x) right.emplace_back(e.right_generator(x));
  const SparseColumns<S> cl(e.coaction_left()), cr(e.coaction_right());
  std::vector<std::vector<std::pair<Index, S>>> prod(static_cast<std::size_t>(dh * dh));
  for (Index b = 0; b < dh; ++b)
    for (Index a = 0; a < dh; ++a) {
      const Vector<S> v = u.multiply_basis(a, b);
      for (Index p = 0; p < dh; ++p)
        if (!is_zero(v(p))) prod[static_cast<std::size_t>(a + dh * b)].emplace_back(p, v(p));
    }
  auto product = [&](Index a, Index b) -> const auto& { return prod[static_cast<std::size_t>(a + dh * b)]; };
  auto coact = [](const SparseColumns<S>& c, const V& v) { return detail::apply(c, v); };

  TetramoduleReport r;
  WitnessLog lmod(opts), rmod(opts), comm(opts), lcom(opts), rcom(opts), ccom(opts), bim(opts);
  for (Index c = 0; c < n; ++c) {
    const V v{{c, S(1)}};
    const int dc = e.degree_of(c);
    for (Index a = 0; a < dh; ++a)
      for (Index b = 0; b < dh; ++b) {
        if (u.monomial_degree(a) + u.monomial_degree(b) + dc > d) continue;
        V rhs;
        for (const auto& [p, cp] : product(a, b))
          for (const auto& [k, ck] : detail::apply(left[static_cast<std::size_t>(p)], v)) detail::add_to(rhs, k, cp * ck);
        if (detail::apply(left[static_cast<std::size_t>(a)], detail::apply(left[static_cast<std::size_t>(b)], v)) != rhs)
          lmod.add("left_module", {long(a), long(b), long(c)});
      }
    if (dc + 2 <= d)
      for (Index x = 0; x < g; ++x)
        for (Index y = 0; y < g; ++y) {
          V lhs;
          const auto br = e.object().lie.bracket(x, y);
          for (Index k = 0; k < g; ++k)
            if (!is_zero(br(k)))
              for (const auto& [i, ci] : detail::apply(right[static_cast<std::size_t>(k)], v)) detail::add_to(lhs, i, br(k) * ci);
          V rhs = detail::apply(right[static_cast<std::size_t>(y)], detail::apply(right[static_cast<std::size_t>(x)], v));
          for (const auto& [i, ci] : detail::apply(right[static_cast<std::size_t>(x)], detail::apply(right[static_cast<std::size_t>(y)], v)))
            detail::add_to(rhs, i, -ci);
          if (lhs != rhs) rmod.add("right_module", {long(c), long(x), long(y)});
        }
    for (Index a = 0; a < dh; ++a)
      if (u.monomial_degree(a) + dc + 1 <= d)
        for (Index x = 0; x < g; ++x) {
          const auto& la = left[static_cast<std::size_t>(a)];
          const auto& rx = right[static_cast<std::size_t>(x)];
          if (detail::apply(rx, detail::apply(la, v)) != detail::apply(la, detail::apply(rx, v)))
            comm.add("actions_commute", {long(a), long(c), long(x)});
        }

    // left coaction keys h + dh * e', right coaction keys e' + n * h
    const V lv = coact(cl, v), rv = coact(cr, v);
    V counit_l, counit_r, l1, l2, r1, r2, c1, c2;
    for (const auto& [key, ck] : lv) {
      const Index h = key % dh, k = key / dh;
      detail::add_to(counit_l, k, ck * u.counit_basis(h));
      for (const auto& t : u.coproduct_basis(h)) detail::add_to(l1, t.left + dh * (t.right + dh * k), ck * t.coeff);
      for (const auto& [key2, c2v] : coact(cl, V{{k, S(1)}})) detail::add_to(l2, h + dh * key2, ck * c2v);
      for (const auto& [key2, c2v] : coact(cr, V{{k, S(1)}})) detail::add_to(c2, h + dh * key2, ck * c2v);
    }
    for (const auto& [key, ck] : rv) {
      const Index k = key % n, h = key / n;
      detail::add_to(counit_r, k, ck * u.counit_basis(h));
      for (const auto& t : u.coproduct_basis(h)) detail::add_to(r1, k + n * (t.left + dh * t.right), ck * t.coeff);
      for (const auto& [key2, c2v] : coact(cr, V{{k, S(1)}})) detail::add_to(r2, key2 + n * dh * h, ck * c2v);
      for (const auto& [key2, c2v] : coact(cl, V{{k, S(1)}})) detail::add_to(c1, key2 + dh * n * h, ck * c2v);
    }
    if (counit_l != v || l1 != l2) lcom.add("left_comodule", {long(c)});
    if (counit_r != v || r1 != r2) rcom.add("right_comodule", {long(c)});
    if (c1 != c2) ccom.add("coactions_commute", {long(c)});

    if (dc + 1 <= d)
      for (Index x = 0; x < g; ++x) {
        const Index gx = u.generator(x);
        const auto& rx = right[static_cast<std::size_t>(x)];
        const auto& lx = left[static_cast<std::size_t>(gx)];
        // delta_L(v.x) = v_(-1) x (x) v_(0) + v_(-1) (x) v_(0).x, and the three analogues
        V a1, a2, b1, b2;
        for (const auto& [key, ck] : lv) {
          const Index h = key % dh, k = key / dh;
          for (const auto& [p, cp] : product(h, gx)) detail::add_to(a1, p + dh * k, ck * cp);
          for (const auto& ent : rx.col(k)) detail::add_to(a1, h + dh * ent.row, ck * ent.value);
          for (const auto& [p, cp] : product(gx, h)) detail::add_to(b1, p + dh * k, ck * cp);
          for (const auto& ent : lx.col(k)) detail::add_to(b1, h + dh * ent.row, ck * ent.value);
        }
        for (const auto& [key, ck] : rv) {
          const Index k = key % n, h = key / n;
          for (const auto& ent : rx.col(k)) detail::add_to(a2, ent.row + n * h, ck * ent.value);
          for (const auto& [p, cp] : product(h, gx)) detail::add_to(a2, k + n * p, ck * cp);
          for (const auto& ent : lx.col(k)) detail::add_to(b2, ent.row + n * h, ck * ent.value);
          for (const auto& [p, cp] : product(gx, h)) detail::add_to(b2, k + n * p, ck * cp);
        }
        const V vx = detail::apply(rx, v), xv = detail::apply(lx, v);
        if (coact(cl, vx) != a1 || coact(cr, vx) != a2 || coact(cl, xv) != b1 || coact(cr, xv) != b2)
          bim.add("coactions_bimodule_maps", {long(c), long(x)});
      }
  }
  r.left_module = !lmod.failed();
  r.right_module = !rmod.failed();
  r.actions_commute = !comm.failed();
  r.left_comodule = !lcom.failed();
  r.right_comodule = !rcom.failed();
  r.coactions_commute = !ccom.failed();
  r.coactions_bimodule_maps = !bim.failed();
  detail::merge_witnesses(r.witnesses, {&lmod, &rmod, &comm, &lcom, &rcom, &ccom, &bim}, opts);
  return r;
}

struct PhiReport {
  bool left_linear = false;   // phi(a.e) = a phi(e)
  bool right_linear = false;  // phi(e.x) = phi(e) x
  bool coderivation = false;  // Delta phi(e) = e_(-1) (x) phi(e_(0)) + phi(e_(0)) (x) e_(1)
  bool ok() const { return left_linear && right_linear && coderivation; }
  std::vector<Witness> witnesses;
};

/// phi applied to a carrier vector.
template <class S>
Vector<S> phi(const EnvTetramodule<S>& e, const Vector<S>& v) {
  return e.phi() * v;
}

/// Bimodule and coderivation conditions on basis elements whose degree leaves
/// room for the operation (one degree for phi itself).
template <class S>
PhiReport check_phi(const EnvTetramodule<S>& e, const CheckOptions& opts = {}) {
  const auto& u = e.pbw();
  const Index n = e.dim(), dh = u.dim(), g = e.object().lie.dim();
  const int d = e.degree();
  const Matrix<S> delta = detail::pbw_coproduct(u);
  WitnessLog left(opts), right(opts), coder(opts);
  for (Index c = 0; c < n; ++c) {
    const Vector<S> v = unit_vector<S>(n, c);
    const int dc = e.degree_of(c);
    const Vector<S> pv = e.phi() * v;
    for (Index x = 0; x < g && dc + 2 <= d; ++x) {
      const Index gx = u.generator(x);
      if (!exactly_equal(Vector<S>(e.phi() * (e.left(gx) * v)), u.multiply(u.basis_vector(gx), pv)))
        left.add("phi_left_linear", {long(c), long(x)});
      if (!exactly_equal(Vector<S>(e.phi() * (e.right_generator(x) * v)), u.multiply(pv, u.basis_vector(gx))))
        right.add("phi_right_linear", {long(c), long(x)});
    }
    if (dc + 1 > d) continue;
    const Vector<S> lhs = delta * pv;
    Vector<S> rhs = Vector<S>::Zero(dh * dh);
    const Matrix<S> cl = e.coact_left(v), cr = e.coact_right(v);
    for (Index h = 0; h < dh; ++h) {
      const Vector<S> pl = e.phi() * Vector<S>(cl.row(h).transpose());
      const Vector<S> pr = e.phi() * Vector<S>(cr.col(h));
      for (Index k = 0; k < dh; ++k) {
        if (!is_zero(pl(k))) rhs(flat2(h, k, dh)) += pl(k);
        if (!is_zero(pr(k))) rhs(flat2(k, h, dh)) += pr(k);
      }
    }
    if (!exactly_equal(lhs, rhs)) coder.add("phi_coderivation", {long(c)});
  }
  PhiReport r;
  r.left_linear = !left.failed();
  r.right_linear = !right.failed();
  r.coderivation = !coder.failed();
  detail::merge_witnesses(r.witnesses, {&left, &right, &coder}, opts);
  return r;
}

/// Left-invariant part {v : delta_L(v) = 1 (x) v} as a Yetter-Drinfel'd module
/// over the first-order enveloping descriptor of g, with the adjoint right
/// action v <| h = S(h_(1)) v h_(2) and the restricted right coaction.
template <class S>
struct InvariantPart {
  Matrix<S> basis;  // dim(E) x r, columns span the invariants
  YDModule<S> module;
};

template <class S>
InvariantPart<S> inv_part(const EnvTetramodule<S>& e) {
  const auto& u = e.pbw();
  const Index n = e.dim(), dh = u.dim();
  Matrix<S> unit_embed = Matrix<S>::Zero(dh * n, n);
  for (Index c = 0; c < n; ++c) unit_embed(flat2(u.unit(), c, dh), c) = S(1);
  const Matrix<S> basis = nullspace(Matrix<S>(e.coaction_left() - unit_embed));
  const Index r = basis.cols();

  auto hopf = HopfDescriptor<S>::first_order_enveloping(e.object().lie, 2);
  const auto& target = *hopf->pbw();
  std::vector<std::string> labels;
  for (Index k = 0; k < r; ++k) {
    std::string label;
    for (Index c = 0; c < n; ++c)
      if (!is_zero(basis(c, k))) {
        if (!label.empty()) label += "+";
        if (basis(c, k) != S(1)) label += ScalarTraits<S>::format(basis(c, k)) + "*";
        label += e.label(c);
      }
    labels.push_back(label);
  }
  std::vector<Matrix<S>> action;
  for (Index x = 0; x < e.object().lie.dim(); ++x) {
    const Matrix<S> adj = e.right_generator(x) - e.left_generator(x);  // S(x) = -x, Delta x = x (x) 1 + 1 (x) x
    Matrix<S> a(r, r);
    for (Index k = 0; k < r; ++k) a.col(k) = coordinates(basis, Vector<S>(adj * basis.col(k)));
    action.push_back(std::move(a));
  }
  Matrix<S> coaction = Matrix<S>::Zero(r * hopf->dim(), r);
  for (Index k = 0; k < r; ++k) {
    const Matrix<S> cr = e.coact_right(basis.col(k));
    for (Index h = 0; h < dh; ++h) {
      if (all_zero(Vector<S>(cr.col(h)))) continue;
      if (u.monomial_degree(h) > 1)
        throw ValidationError("inv_part: right coaction of an invariant uses " + u.label(h) + ", above degree one");
      const Vector<S> coords = coordinates(basis, Vector<S>(cr.col(h)));
      const Index th = target.index_of(u.monomial(h));
      for (Index j = 0; j < r; ++j) coaction(flat2(j, th, r), k) += coords(j);
    }
  }
  return {basis, YDModule<S>(hopf, std::move(labels), std::move(action), std::move(coaction))};
}

/// f~ : inv M -> U, dim(U) x r.
template <class S>
Matrix<S> f_tilde(const EnvTetramodule<S>& e, const InvariantPart<S>& inv) {
  return e.phi() * inv.basis;
}

struct FTildeReport {
  bool im_in_ker_eps = false;  // eps(f~(v)) = 0
  bool colinear = false;       // Delta~(f~(v)) = f~(v_(0)) (x) v_(1)
  bool yd_morphism = false;    // f~(v <| x) = S(x_(1)) f~(v) x_(2), plus colinearity
  bool ok() const { return im_in_ker_eps && colinear && yd_morphism; }
  std::vector<Witness> witnesses;
};

/// Requires degree >= 2 so that f~(v) x stays representable.
template <class S>
FTildeReport f_tilde_checks(const EnvTetramodule<S>& e, const CheckOptions& opts = {}) {
  if (e.degree() < 2) throw std::invalid_argument("f~ checks need truncation degree >= 2");
  const auto& u = e.pbw();
  const Index dh = u.dim();
  const auto inv = inv_part(e);
  const Matrix<S> ft = f_tilde(e, inv);
  const Index r = inv.basis.cols();
  const Matrix<S> delta = detail::pbw_coproduct(u);
  const auto& hopf = *inv.module.hopf();
  WitnessLog eps(opts), col(opts), mor(opts);
  for (Index k = 0; k < r; ++k) {
    const Vector<S> fv = ft.col(k);
    S counit(0);
    for (Index h = 0; h < dh; ++h) counit += fv(h) * u.counit_basis(h);
    if (!is_zero(counit)) eps.add("im_in_ker_eps", {long(k)});

    Vector<S> lhs = delta * fv;
    for (Index h = 0; h < dh; ++h) lhs(flat2(u.unit(), h, dh)) -= fv(h);
    Vector<S> rhs = Vector<S>::Zero(dh * dh);
    for (const auto& t : inv.module.coaction_terms(k)) {
      const Vector<S> fk = ft.col(t.k);
      const Index h = u.index_of(hopf.pbw()->monomial(t.b));
      for (Index a = 0; a < dh; ++a)
        if (!is_zero(fk(a))) rhs(flat2(a, h, dh)) += t.coeff * fk(a);
    }
    if (!exactly_equal(lhs, rhs)) col.add("colinear", {long(k)});

    for (Index x = 0; x < e.object().lie.dim(); ++x) {
      const Vector<S> gx = u.basis_vector(u.generator(x));
      const Vector<S> moved = ft * inv.module.action()[static_cast<std::size_t>(x)].col(k);
      const Vector<S> adj = u.multiply(fv, gx) - u.multiply(gx, fv);
      if (!exactly_equal(moved, adj)) mor.add("yd_morphism", {long(k), long(x)});
    }
  }
  FTildeReport rep;
  rep.im_in_ker_eps = !eps.failed();
  rep.colinear = !col.failed();
  rep.yd_morphism = !mor.failed() && rep.colinear;
  detail::merge_witnesses(rep.witnesses, {&eps, &col, &mor}, opts);
  return rep;
}

/// T(v) = -S(v_(-1)) v_(0) S(v_(1)).
template <class S>
Vector<S> antipode_T(const EnvTetramodule<S>& e, const Vector<S>& v) {
  const auto& u = e.pbw();
  const Index n = e.dim(), dh = u.dim();
  Vector<S> out = Vector<S>::Zero(n);
  const Matrix<S> cr = e.coact_right(v);
  for (Index h1 = 0; h1 < dh; ++h1) {
    if (all_zero(Vector<S>(cr.col(h1)))) continue;
    const Matrix<S> right = e.right_action(u.antipode_basis(h1));
    const Matrix<S> cl = e.coact_left(Vector<S>(cr.col(h1)));
    for (Index h0 = 0; h0 < dh; ++h0) {
      const Vector<S> mid = cl.row(h0).transpose();
      if (all_zero(mid)) continue;
      out -= right * (e.left_action(u.antipode_basis(h0)) * mid);
    }
  }
  return out;
}

struct AntipodeReport {
  bool ok = false;              // phi(T(e)) = S(phi(e)) on checked basis elements
  Index checked = 0;            // basis elements with degree <= d - 1
  std::vector<Witness> witnesses;
};

template <class S>
AntipodeReport check_antipode_T(const EnvTetramodule<S>& e, const CheckOptions& opts = {}) {
  const auto& u = e.pbw();
  WitnessLog log(opts);
  AntipodeReport r;
  for (Index c = 0; c < e.dim(); ++c) {
    if (e.degree_of(c) + 1 > e.degree()) continue;
    ++r.checked;
    const Vector<S> v = unit_vector<S>(e.dim(), c);
    Vector<S> s_phi = Vector<S>::Zero(u.dim());
    const Vector<S> pv = e.phi() * v;
    for (Index h = 0; h < u.dim(); ++h)
      if (!is_zero(pv(h))) s_phi += pv(h) * u.antipode_basis(h);
    if (!exactly_equal(Vector<S>(e.phi() * antipode_T(e, v)), s_phi)) log.add("antipode_T", {long(c)});
  }
  r.ok = !log.failed();
  r.witnesses = log.take();
  return r;
}

/// x |> y = x <| f~(y) on the invariant part, with its Yetter-Drinfel'd
/// braiding. Throws ValidationError unless f_tilde_checks pass.
template <class S>
BraidedLeibnizData<S> theorem1_bracket(const EnvTetramodule<S>& e) {
  if (!f_tilde_checks(e).ok()) throw ValidationError("theorem1_bracket: f~ checks fail");
  const auto inv = inv_part(e);
  const auto& u = e.pbw();
  const auto& target = *inv.module.hopf()->pbw();
  const Matrix<S> ft = f_tilde(e, inv);
  const Index r = inv.basis.cols();
  BraidedLeibnizData<S> d{r, Matrix<S>::Zero(r, r * r), braiding(inv.module)};
  for (Index b = 0; b < r; ++b) {
    Vector<S> h = Vector<S>::Zero(target.dim());
    for (Index k = 0; k < u.dim(); ++k)
      if (!is_zero(ft(k, b))) h(target.index_of(u.monomial(k))) += ft(k, b);
    const Matrix<S> act = inv.module.action_matrix(h);
    for (Index a = 0; a < r; ++a) d.bracket.col(flat2(a, b, r)) = act.col(a);
  }
  return d;
}

}  // namespace rackyd
