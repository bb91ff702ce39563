#include <random>

#include <gtest/gtest.h>

#include "rackyd/io.hpp"
#include "rackyd/leibniz.hpp"

using namespace rackyd;
using Q = Rational;

namespace {

YDModule<Q> fixture(const std::string& name) {
  return io::yd_from_json<Q>(io::read_file(std::string(RACKYD_FIXTURES) + "/" + name + ".json"));
}

/// tau(e_x (x) e_y) = sum_b e_k (x) e_x . h_b over the coaction terms e_k (x) h_b of e_y.
Matrix<Q> oracle_braiding(const YDModule<Q>& m) {
  const Index n = m.dim();
  Matrix<Q> t = Matrix<Q>::Zero(n * n, n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (const auto& term : m.coaction_terms(y)) {
        const Matrix<Q>& a = m.basis_action(term.b);
        for (Index xp = 0; xp < n; ++xp)
          if (!is_zero(a(xp, x))) t(flat2(term.k, xp, n), flat2(x, y, n)) += term.coeff * a(xp, x);
      }
  return t;
}

/// Dense braid relation with kron(A, B) = A on the first factor.
bool oracle_ybe(const Matrix<Q>& t) {
  const Index n = braiding_factor_dim(t);
  const Matrix<Q> t12 = kron(t, identity<Q>(n)), t23 = kron(identity<Q>(n), t);
  return exactly_equal(Matrix<Q>(t12 * t23 * t12), Matrix<Q>(t23 * t12 * t23));
}

std::vector<YDModule<Q>> good_modules() {
  std::vector<YDModule<Q>> out;
  for (const char* name : {"hv_yd", "abelian2_yd", "nonabelian2_yd", "s3_linearized", "z2_trivial_linearized"})
    out.push_back(fixture(name));
  for (const char* g : {"Z2", "Z3", "S3"}) out.push_back(ker_eps_yd<Q>(FiniteGroup::by_name(g)));
  for (int n = 3; n <= 5; ++n) out.push_back(linearize_augmented<Q>(inner_augmentation(dihedral_quandle(n))).module);
  return out;
}

Matrix<Q> random_matrix(std::mt19937& rng, Index r, Index c) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix<Q> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Q(d(rng));
  return m;
}

}  // namespace

TEST(CheckYd, CorpusModulesPass) {
  for (const auto& m : good_modules()) {
    const auto r = check_yd(m);
    EXPECT_TRUE(r.module_ok && r.comodule_ok && r.ok_eq2 && r.ok_eq3);
    EXPECT_TRUE(r.witnesses.empty());
  }
}

TEST(CheckYd, BrokenModulesFailWithWitness) {
  const auto broken = fixture("broken");
  const auto r = check_yd(broken);
  EXPECT_TRUE(r.module_ok);
  EXPECT_TRUE(r.comodule_ok);
  EXPECT_FALSE(r.ok_eq2);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].check, "yd_eq2");
  EXPECT_EQ(r.witnesses[0].indices, (std::vector<long>{0, 1}));
  EXPECT_FALSE(check_yd(fixture("broken_enveloping")).ok());
}

TEST(CheckYd, BothFormsAgree) {
  auto modules = good_modules();
  modules.push_back(fixture("broken"));
  modules.push_back(fixture("broken_enveloping"));
  for (const auto& m : modules) {
    const auto r = check_yd(m);
    EXPECT_EQ(r.ok_eq2, r.ok_eq3);
  }
}

TEST(CheckYd, ModuleAxiomFailure) {
  // An idempotent that is not invertible cannot represent the Z2 generator.
  auto hopf = HopfDescriptor<Q>::group_algebra(FiniteGroup::cyclic(2));
  Matrix<Q> g = Matrix<Q>::Zero(2, 2);
  g(0, 0) = Q(1);
  const YDModule<Q> m(hopf, {"a", "b"}, {identity<Q>(2), g}, trivial_coaction(*hopf, 2));
  const auto r = check_yd(m);
  EXPECT_FALSE(r.module_ok);
  EXPECT_FALSE(r.ok());
}

TEST(CheckYd, ComoduleAxiomFailure) {
  auto hopf = HopfDescriptor<Q>::group_algebra(FiniteGroup::cyclic(2));
  Matrix<Q> c = Matrix<Q>::Zero(4, 2);
  c(flat2(0, 0, 2), 0) = Q(2);  // a -> 2 a (x) 1 breaks counitality
  c(flat2(1, 0, 2), 1) = Q(1);
  const YDModule<Q> m(hopf, {"a", "b"}, {identity<Q>(2), identity<Q>(2)}, c);
  EXPECT_FALSE(check_yd(m).comodule_ok);
}

TEST(CheckYd, ShapeValidation) {
  auto hopf = HopfDescriptor<Q>::group_algebra(FiniteGroup::cyclic(2));
  EXPECT_THROW(YDModule<Q>(hopf, {"a"}, {identity<Q>(1)}, trivial_coaction(*hopf, 1)), ValidationError);
  EXPECT_THROW(YDModule<Q>(hopf, {"a"}, {identity<Q>(1), identity<Q>(2)}, trivial_coaction(*hopf, 1)), ValidationError);
  EXPECT_THROW(YDModule<Q>(hopf, {"a"}, {identity<Q>(1), identity<Q>(1)}, Matrix<Q>(Matrix<Q>::Zero(3, 1))), ValidationError);
}

TEST(Braiding, MatchesOracle) {
  auto modules = good_modules();
  modules.push_back(fixture("broken"));
  for (const auto& m : modules) EXPECT_TRUE(exactly_equal(braiding(m), oracle_braiding(m)));
}

TEST(Braiding, TrivialCoactionGivesFlip) {
  auto hopf = HopfDescriptor<Q>::group_algebra(FiniteGroup::cyclic(3));
  Matrix<Q> rot = Matrix<Q>::Zero(3, 3);
  for (Index i = 0; i < 3; ++i) rot((i + 1) % 3, i) = Q(1);
  const YDModule<Q> m(hopf, {"a", "b", "c"}, {identity<Q>(3), rot, Matrix<Q>(rot * rot)}, trivial_coaction(*hopf, 3));
  EXPECT_TRUE(check_yd(m).ok());
  EXPECT_TRUE(exactly_equal(braiding(m), flip_matrix<Q>(3)));
  EXPECT_TRUE(is_involutive(braiding(m)));
}

TEST(Ybe, CheckerMatchesDenseOracle) {
  EXPECT_TRUE(check_ybe(flip_matrix<Q>(3)).ok);
  EXPECT_TRUE(check_ybe(identity<Q>(4)).ok);
  std::mt19937 rng(17);
  int failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix<Q> t = random_matrix(rng, 4, 4);
    const auto r = check_ybe(t);
    EXPECT_EQ(r.ok, oracle_ybe(t));
    if (!r.ok) {
      ++failures;
      const Index n = 2;
      const Matrix<Q> t12 = kron(t, identity<Q>(n)), t23 = kron(identity<Q>(n), t);
      EXPECT_TRUE(exactly_equal(r.defect, Matrix<Q>(t12 * t23 * t12 - t23 * t12 * t23)));
    }
  }
  EXPECT_GT(failures, 0);
  EXPECT_THROW(check_ybe(identity<Q>(3)), ShapeError);
}

TEST(Ybe, YdModulesGiveBraidings) {
  for (const auto& m : good_modules()) {
    const Matrix<Q> t = braiding(m);
    EXPECT_TRUE(check_ybe(t).ok);
    EXPECT_TRUE(oracle_ybe(t));
  }
  EXPECT_FALSE(check_ybe(braiding(fixture("broken"))).ok);
  EXPECT_FALSE(check_ybe(braiding(fixture("broken_enveloping"))).ok);
}

TEST(Involutive, Examples) {
  EXPECT_TRUE(is_involutive(flip_matrix<Q>(4)));
  EXPECT_FALSE(is_involutive(braiding(first_order_yd(heisenberg_voros<Q>()))));
  const auto s3 = braiding(linearize_augmented<Q>(conjugation_augmented(FiniteGroup::symmetric(3))).module);
  EXPECT_FALSE(is_involutive(s3));
}

TEST(QConditions, RackQ) {
  std::vector<AugmentedRack> racks{conjugation_augmented(FiniteGroup::symmetric(3))};
  for (int n = 3; n <= 7; ++n) racks.push_back(inner_augmentation(dihedral_quandle(n)));
  for (const auto& a : racks) {
    const auto lin = linearize_augmented<Q>(a);
    const auto r = check_q_conditions(lin.module, rack_q<Q>(a));
    EXPECT_TRUE(r.equivariance && r.coderivation_condition && r.adjoint_linear);
    const auto d = braided_leibniz_from_q(lin.module, rack_q<Q>(a));
    EXPECT_TRUE(check_braided_leibniz(d).ok);
    // x |> y = x.p(y) - x
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        Vector<Q> expected = -unit_vector<Q>(a.size(), x);
        expected(a.act(x, a.p(y))) += Q(1);
        EXPECT_TRUE(exactly_equal(Vector<Q>(d.bracket.col(flat2(x, y, a.size()))), expected));
      }
  }
}

TEST(QConditions, RejectsQOutsideKernel) {
  const auto a = conjugation_augmented(FiniteGroup::symmetric(3));
  const auto lin = linearize_augmented<Q>(a);
  EXPECT_THROW(check_q_conditions(lin.module, p_matrix<Q>(a)), ValidationError);
  EXPECT_THROW(check_q_conditions(lin.module, Matrix<Q>(Matrix<Q>::Zero(6, 5))), ShapeError);
}

TEST(QConditions, FailingCoderivation) {
  // q(x) = g - 1 for a fixed g other than p(x) violates the coderivation condition.
  const auto a = conjugation_augmented(FiniteGroup::cyclic(3));
  const auto lin = linearize_augmented<Q>(a);
  Matrix<Q> q = Matrix<Q>::Zero(3, 3);
  for (Index x = 0; x < 3; ++x) {
    q((x + 1) % 3, x) = Q(1);
    q(0, x) -= Q(1);
  }
  const auto r = check_q_conditions(lin.module, q);
  EXPECT_FALSE(r.coderivation_condition);
  EXPECT_FALSE(r.witnesses.empty());
  EXPECT_THROW(braided_leibniz_from_q(lin.module, q), ValidationError);
}

TEST(QConditions, BrokenModuleRejected) {
  const auto m = fixture("broken");
  EXPECT_THROW(braided_leibniz_from_q(m, Matrix<Q>(Matrix<Q>::Zero(2, 2))), ValidationError);
}

TEST(BraidedLeibniz, FlipRecoversLeibnizIdentity) {
  for (const auto& l : {heisenberg_voros<Q>(), LeibnizAlgebra<Q>::abelian({"a", "b"})}) {
    const BraidedLeibnizData<Q> d{l.dim(), l.brackets(), flip_matrix<Q>(l.dim())};
    EXPECT_EQ(check_braided_leibniz(d).ok, check_leibniz(l).ok);
  }
  auto bad = LeibnizAlgebra<Q>::abelian({"x"});
  bad.set_bracket(0, 0, unit_vector<Q>(1, 0));
  const BraidedLeibnizData<Q> d{1, bad.brackets(), flip_matrix<Q>(1)};
  const auto r = check_braided_leibniz(d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witnesses[0].indices, (std::vector<long>{0, 0, 0}));
  EXPECT_THROW(check_braided_leibniz(BraidedLeibnizData<Q>{2, bad.brackets(), flip_matrix<Q>(2)}), ShapeError);
}
