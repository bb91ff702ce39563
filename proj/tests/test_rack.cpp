#include <set>

#include <gtest/gtest.h>

#include "rackyd/io.hpp"
#include "rackyd/rack.hpp"

using namespace rackyd;

namespace {

// Independent oracles: plain loops over the defining identities.
bool oracle_shelf(const FiniteShelf& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.op(s.op(x, y), z) != s.op(s.op(x, z), s.op(y, z))) return false;
  return true;
}

bool oracle_columns_bijective(const FiniteShelf& s) {
  for (int y = 0; y < s.size(); ++y) {
    std::set<int> image;
    for (int x = 0; x < s.size(); ++x) image.insert(s.op(x, y));
    if (static_cast<int>(image.size()) != s.size()) return false;
  }
  return true;
}

/// Size of the permutation group generated by the column maps, by closure
/// under composition in both orders.
std::size_t oracle_inner_order(const FiniteShelf& s) {
  const int n = s.size();
  std::set<std::vector<int>> group;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  group.insert(id);
  bool grown = true;
  while (grown) {
    grown = false;
    const auto snapshot = group;
    for (const auto& g : snapshot)
      for (int y = 0; y < n; ++y) {
        std::vector<int> h(n);
        for (int x = 0; x < n; ++x) h[x] = s.op(g[x], y);
        grown |= group.insert(h).second;
      }
  }
  return group.size();
}

int label(const FiniteGroup& g, const std::string& l) { return *g.find(l); }

}  // namespace

TEST(CheckShelf, TrivialShelfIsQuandle) {
  const auto r = check_shelf(trivial_quandle(3));
  EXPECT_TRUE(r.is_shelf && r.is_rack && r.is_quandle);
}

TEST(CheckShelf, DihedralThreeIsQuandle) {
  const auto s = dihedral_quandle(3);
  EXPECT_TRUE(oracle_shelf(s));
  EXPECT_TRUE(check_shelf(s).is_quandle);
  EXPECT_EQ(s.op(0, 1), 2);
}

TEST(CheckShelf, TwoElementTableWithFlippedCorner) {
  // 0 |> 0 = 1, every other product is the first argument.
  const FiniteShelf s({"0", "1"}, {{1, 0}, {1, 1}});
  const auto r = check_shelf(s);
  EXPECT_EQ(r.is_shelf, oracle_shelf(s));
  EXPECT_EQ(r.is_rack, r.is_shelf && oracle_columns_bijective(s));
  EXPECT_FALSE(r.is_quandle);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(CheckShelf, NonShelfWitnessIsLexicographicallyFirst) {
  const FiniteShelf s({"0", "1", "2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});  // x + y mod 3
  ASSERT_FALSE(oracle_shelf(s));
  const auto r = check_shelf(s);
  EXPECT_FALSE(r.is_shelf);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].check, "self_distributivity");
  EXPECT_EQ(r.witnesses[0].indices, (std::vector<long>{0, 0, 1}));
}

TEST(CheckShelf, WitnessLimit) {
  const FiniteShelf s({"0", "1", "2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_GT(check_shelf(s, {5}).witnesses.size(), 1u);
}

TEST(CheckShelf, MalformedTable) {
  EXPECT_THROW(FiniteShelf({"0", "1"}, {{0, 2}, {1, 1}}), ValidationError);
  EXPECT_THROW(FiniteShelf({"0", "1"}, {{0}, {1, 1}}), ValidationError);
}

TEST(Dihedral, Examples) {
  EXPECT_TRUE(check_shelf(dihedral_quandle(1)).is_quandle);
  const auto d4 = dihedral_quandle(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) EXPECT_EQ(d4.op(d4.op(x, y), y), x);
  EXPECT_THROW(dihedral_quandle(0), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(check_shelf(dihedral_quandle(n)).is_quandle);
}

TEST(Conjugation, Examples) {
  const auto z2 = conjugation_rack(FiniteGroup::cyclic(2));
  EXPECT_EQ(z2.table(), trivial_quandle(2).table());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) EXPECT_EQ(z2.op(x, y), x);
  const auto s3 = FiniteGroup::symmetric(3);
  const auto r = conjugation_rack(s3);
  EXPECT_EQ(r.op(label(s3, "(1 2)"), label(s3, "(1 3)")), label(s3, "(2 3)"));
  for (const char* name : {"Z1", "Z4", "S3", "S4"}) EXPECT_TRUE(check_shelf(conjugation_rack(FiniteGroup::by_name(name))).is_quandle);
}

TEST(Groups, CayleyTablesAreGroups) {
  EXPECT_EQ(FiniteGroup::symmetric(4).size(), 24);
  EXPECT_FALSE(FiniteGroup::symmetric(3).is_abelian());
  EXPECT_TRUE(FiniteGroup::cyclic(5).is_abelian());
  const auto s3 = FiniteGroup::symmetric(3);
  for (int a = 0; a < s3.size(); ++a) EXPECT_EQ(s3.mul(a, s3.inv(a)), s3.identity());
  EXPECT_THROW(FiniteGroup({"a", "b"}, {{0, 0}, {1, 1}}), ValidationError);
  EXPECT_THROW(FiniteGroup::by_name("Q8"), std::invalid_argument);
}

TEST(Augmented, Examples) {
  const auto s3 = FiniteGroup::symmetric(3);
  EXPECT_TRUE(check_augmented(conjugation_augmented(s3)).ok);
  const auto z2 = FiniteGroup::cyclic(2);
  EXPECT_TRUE(check_augmented(AugmentedRack(z2.labels(), z2, {{0, 0}, {1, 1}}, {0, 1})).ok);

  Table trivial(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int g = 0; g < 6; ++g) trivial[x][g] = x;
  const AugmentedRack bad(s3.labels(), s3, trivial, {0, 1, 2, 3, 4, 5});
  const auto r = check_augmented(bad);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.witnesses.empty());
  const int x = static_cast<int>(r.witnesses[0].indices[0]), g = static_cast<int>(r.witnesses[0].indices[1]);
  EXPECT_NE(s3.mul(x, g), s3.mul(g, x));
}

TEST(Augmented, InducedRack) {
  for (const char* name : {"Z3", "S3", "S4"}) {
    const auto g = FiniteGroup::by_name(name);
    EXPECT_EQ(induced_rack(conjugation_augmented(g)), conjugation_rack(g));
  }
  const auto z2 = FiniteGroup::cyclic(2);
  const AugmentedRack trivial({"a", "b", "c"}, z2, {{0, 0}, {1, 1}, {2, 2}}, {1, 0, 1});
  EXPECT_EQ(induced_rack(trivial).table(), trivial_quandle(3).table());
  const auto s3 = FiniteGroup::symmetric(3);
  const AugmentedRack broken(s3.labels(), s3, conjugation_augmented(s3).action(), std::vector<int>(6, 2));
  EXPECT_THROW(induced_rack(broken), ValidationError);
}

TEST(InnerAugmentation, Examples) {
  EXPECT_EQ(inner_augmentation(trivial_quandle(4)).group().size(), 1);
  const auto r3 = dihedral_quandle(3);
  const auto a3 = inner_augmentation(r3);
  // The column maps of R3 are the three reflections, which generate all of Sym(3).
  EXPECT_EQ(static_cast<std::size_t>(a3.group().size()), oracle_inner_order(r3));
  EXPECT_EQ(a3.group().size(), 6);
  EXPECT_EQ(inner_augmentation(conjugation_rack(FiniteGroup::symmetric(3))).group().size(), 6);
  EXPECT_THROW(inner_augmentation(FiniteShelf({"0", "1"}, {{0, 0}, {0, 0}})), ValidationError);
}

TEST(InnerAugmentation, RecoversRackAndBraids) {
  std::vector<FiniteShelf> racks{trivial_quandle(3), conjugation_rack(FiniteGroup::symmetric(3))};
  for (int n = 1; n <= 7; ++n) racks.push_back(dihedral_quandle(n));
  for (const auto& s : racks) {
    const auto a = inner_augmentation(s);
    EXPECT_TRUE(check_augmented(a).ok);
    EXPECT_EQ(induced_rack(a), s);
    EXPECT_EQ(static_cast<std::size_t>(a.group().size()), oracle_inner_order(s));
    const auto b = rack_tensor_and_braiding(a, a);
    EXPECT_TRUE(b.bijective);
    EXPECT_TRUE(b.ybe_checked && b.ybe_ok);
    EXPECT_TRUE(check_augmented(b.tensor).ok);
  }
}

TEST(RackBraiding, Examples) {
  const auto z2 = FiniteGroup::cyclic(2);
  const AugmentedRack trivial({"a", "b"}, z2, {{0, 0}, {1, 1}}, {1, 1});
  const auto t = rack_tensor_and_braiding(trivial, trivial);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) EXPECT_EQ(t.c[x + 2 * y], y + 2 * x);

  const auto s3 = FiniteGroup::symmetric(3);
  const auto a = conjugation_augmented(s3);
  const auto b = rack_tensor_and_braiding(a, a);
  const int x = label(s3, "(1 2)"), y = label(s3, "(1 3)");
  EXPECT_EQ(b.c[x + 6 * y], y + 6 * label(s3, "(2 3)"));
  EXPECT_TRUE(b.ybe_ok);
  EXPECT_THROW(rack_tensor_and_braiding(a, trivial), std::invalid_argument);
}

TEST(RackIO, RoundTrip) {
  const auto s = dihedral_quandle(5);
  EXPECT_EQ(io::shelf_from_json(io::to_json(s)), s);
  const auto g = FiniteGroup::symmetric(4);
  EXPECT_EQ(io::group_from_json(io::to_json(g)), g);
  EXPECT_EQ(io::group_from_json(io::json("S4")), g);
  const auto a = inner_augmentation(dihedral_quandle(4));
  EXPECT_EQ(io::augmented_from_json(io::to_json(a)), a);
}
