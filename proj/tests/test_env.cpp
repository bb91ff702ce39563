#include <gtest/gtest.h>

#include "rackyd/env.hpp"

using namespace rackyd;
using Q = Rational;
using L = LeibnizAlgebra<Q>;

namespace {

Vector<Q> e(Index n, Index i) { return unit_vector<Q>(n, i); }

L sl2() {
  auto l = L::abelian({"e", "f", "h"});
  l.set_bracket(0, 1, e(3, 2));
  l.set_bracket(1, 0, -e(3, 2));
  l.set_bracket(2, 0, Q(2) * e(3, 0));
  l.set_bracket(0, 2, Q(-2) * e(3, 0));
  l.set_bracket(2, 1, Q(-2) * e(3, 1));
  l.set_bracket(1, 2, Q(2) * e(3, 1));
  return l;
}

L nonabelian2() {
  auto l = L::abelian({"e1", "e2"});
  l.set_bracket(0, 1, e(2, 0));
  l.set_bracket(1, 0, -e(2, 0));
  return l;
}

std::vector<L> corpus() { return {heisenberg_voros<Q>(), sl2(), L::abelian({"e1", "e2"}), nonabelian2()}; }

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Pbw, DimensionIsBinomial) {
  for (Index n = 0; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) {
      std::vector<std::string> names;
      for (Index i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
      EXPECT_EQ(TruncatedPBW<Q>(L::abelian(names), d).dim(), binomial(n + d, d));
    }
  EXPECT_THROW(TruncatedPBW<Q>(heisenberg_voros<Q>(), 2), ValidationError);
  EXPECT_THROW(TruncatedPBW<Q>(sl2(), -1), std::invalid_argument);
}

TEST(Pbw, Straightening) {
  const TruncatedPBW<Q> u(sl2(), 2);
  const Index ge = u.generator(0), gf = u.generator(1), gh = u.generator(2);
  // fe = ef - h
  Vector<Q> expected = u.basis_vector(u.index_of({0, 1}));
  expected(gh) -= Q(1);
  EXPECT_TRUE(exactly_equal(u.multiply_basis(gf, ge), expected));
  EXPECT_TRUE(exactly_equal(u.multiply_basis(ge, gf), u.basis_vector(u.index_of({0, 1}))));
  // he = eh + 2e
  Vector<Q> he = u.basis_vector(u.index_of({0, 2}));
  he(ge) += Q(2);
  EXPECT_TRUE(exactly_equal(u.multiply_basis(gh, ge), he));
  EXPECT_EQ(u.label(u.index_of({0, 1})), "e*f");
}

TEST(Pbw, AssociativeWithinDegree) {
  const TruncatedPBW<Q> u(sl2(), 3);
  for (Index a = 0; a < u.dim(); ++a)
    for (Index b = 0; b < u.dim(); ++b)
      for (Index c = 0; c < u.dim(); ++c) {
        if (u.monomial_degree(a) + u.monomial_degree(b) + u.monomial_degree(c) > 3) continue;
        const Vector<Q> lhs = u.multiply(u.multiply_basis(a, b), u.basis_vector(c));
        const Vector<Q> rhs = u.multiply(u.basis_vector(a), u.multiply_basis(b, c));
        EXPECT_TRUE(exactly_equal(lhs, rhs));
      }
}

TEST(Pbw, OverflowIsReported) {
  const TruncatedPBW<Q> u(sl2(), 1);
  EXPECT_TRUE(u.overflows(u.generator(0), u.generator(1)));
  EXPECT_THROW(u.multiply_exact(u.basis_vector(u.generator(0)), u.basis_vector(u.generator(1))), DegreeOverflow);
}

TEST(Pbw, AntipodeAndCoproduct) {
  const TruncatedPBW<Q> u(sl2(), 2);
  EXPECT_TRUE(exactly_equal(u.antipode_basis(u.generator(0)), Vector<Q>(-u.basis_vector(u.generator(0)))));
  // S(ef) = fe = ef - h
  EXPECT_TRUE(exactly_equal(u.antipode_basis(u.index_of({0, 1})), u.multiply_basis(u.generator(1), u.generator(0))));
  // Delta(ef) = ef (x) 1 + e (x) f + f (x) e + 1 (x) ef
  EXPECT_EQ(u.coproduct_basis(u.index_of({0, 1})).size(), 4u);
  for (const auto& l : {sl2(), nonabelian2()})
    for (int d = 1; d <= 3; ++d) EXPECT_TRUE(HopfDescriptor<Q>::first_order_enveloping(l, d)->check_axioms().ok());
}

TEST(Env, TetramoduleChecksAcrossDegrees) {
  for (const auto& l : corpus())
    for (int d = 0; d <= 3; ++d) {
      const auto env = build_env(lie_object_from_leibniz(l), d);
      EXPECT_EQ(env.dim(), binomial(lie_quotient(l).dim() + d, d) * l.dim());
      EXPECT_TRUE(check_tetramodule(env).ok()) << d;
      EXPECT_TRUE(check_phi(env).ok()) << d;
      EXPECT_TRUE(check_antipode_T(env).ok) << d;
      if (d >= 2) EXPECT_TRUE(f_tilde_checks(env).ok()) << d;
      else EXPECT_THROW(f_tilde_checks(env), std::invalid_argument);
    }
}

TEST(Env, PhiOnGenerators) {
  // phi(u (x) m) = u f(m)
  const auto l = heisenberg_voros<Q>();
  const auto env = build_env(lie_object_from_leibniz(l), 2);
  const auto& u = env.pbw();
  const Vector<Q> px = phi(env, e(env.dim(), env.index(u.unit(), 0)));
  EXPECT_TRUE(exactly_equal(px, u.basis_vector(u.generator(0))));
  EXPECT_TRUE(all_zero(phi(env, e(env.dim(), env.index(u.unit(), 2)))));  // pi(z) = 0
  const Vector<Q> pxy = phi(env, e(env.dim(), env.index(u.generator(0), 1)));
  EXPECT_TRUE(exactly_equal(pxy, u.basis_vector(u.index_of({0, 1}))));
}

TEST(Env, InvariantPartIsUnitTimesM) {
  for (const auto& l : corpus()) {
    const auto env = build_env(lie_object_from_leibniz(l), 2);
    const auto inv = inv_part(env);
    ASSERT_EQ(inv.basis.cols(), l.dim());
    for (Index m = 0; m < l.dim(); ++m)
      EXPECT_TRUE(exactly_equal(Vector<Q>(inv.basis.col(m)), e(env.dim(), env.index(env.pbw().unit(), m))));
    EXPECT_TRUE(check_yd(inv.module).ok());
    // eps o phi = 0 on inv M
    const Matrix<Q> ft = f_tilde(env, inv);
    for (Index k = 0; k < ft.cols(); ++k) EXPECT_TRUE(is_zero(ft(env.pbw().unit(), k)));
  }
}

TEST(Env, InvariantBracketRecoversInput) {
  for (const auto& l : corpus()) {
    const auto env = build_env(lie_object_from_leibniz(l), 2);
    const auto d = theorem1_bracket(env);
    EXPECT_EQ(d.dim, l.dim());
    EXPECT_TRUE(exactly_equal(d.bracket, l.brackets()));
    EXPECT_TRUE(exactly_equal(d.tau, flip_matrix<Q>(l.dim())));
    EXPECT_TRUE(check_braided_leibniz(d).ok);
  }
}

TEST(Env, Theorem1OnNontrivialModule) {
  // sl2 acting on its 2-dim representation would need f : V -> sl2 equivariant;
  // the only such f is zero, which makes the bracket vanish.
  LieObject<Q> obj{sl2(), {"v1", "v2"}, {}, Matrix<Q>::Zero(3, 2)};
  Matrix<Q> ae = Matrix<Q>::Zero(2, 2), af = ae, ah = ae;
  ae(0, 1) = Q(1);
  af(1, 0) = Q(1);
  ah(0, 0) = Q(1);
  ah(1, 1) = Q(-1);
  // right action v.x = -x v from the defining representation
  obj.action = {Matrix<Q>(-ae), Matrix<Q>(-af), Matrix<Q>(-ah)};
  ASSERT_NO_THROW(validate_lie_object(obj));
  const auto env = build_env(obj, 2);
  EXPECT_TRUE(check_tetramodule(env).ok());
  const auto d = theorem1_bracket(env);
  EXPECT_TRUE(all_zero(d.bracket));
  EXPECT_TRUE(check_braided_leibniz(d).ok);
}

TEST(Env, Validation) {
  auto bad = L::abelian({"x"});
  bad.set_bracket(0, 0, e(1, 0));
  EXPECT_THROW(lie_object_from_leibniz(bad), ValidationError);
  LieObject<Q> obj = lie_object_from_leibniz(sl2());
  obj.f(0, 0) = Q(5);
  EXPECT_THROW(validate_lie_object(obj), ValidationError);
  obj = lie_object_from_leibniz(sl2());
  obj.action.pop_back();
  EXPECT_THROW(build_env(obj, 1), ValidationError);
  EXPECT_THROW(build_env(lie_object_from_leibniz(sl2()), -1), std::invalid_argument);
}
