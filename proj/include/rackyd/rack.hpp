#pragma once

// Finite groups, shelves, racks, quandles and augmented racks.
//
// All structures are stored as 0-based operation tables. Groups act on the
// right and permutation products compose left to right: (g*h)(i) = h(g(i)).

#include <optional>
#include <string>
#include <vector>

#include "rackyd/report.hpp"

namespace rackyd {

using Table = std::vector<std::vector<int>>;

class FiniteGroup {
public:
  /// Validates closure, associativity, identity and inverses; throws ValidationError.
  FiniteGroup(std::vector<std::string> labels, Table mul);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);
  /// Subgroup of Sym(degree) generated by the given image vectors. Elements are
  /// sorted by image vector (identity first) and labelled in 1-based cycle notation.
  static FiniteGroup generated_by(const std::vector<std::vector<int>>& generators, int degree);
  /// "Z<n>", "S<n>" or "trivial".
  static FiniteGroup by_name(const std::string& name);

  int size() const { return static_cast<int>(labels_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  /// g^-1 x g
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  bool is_abelian() const;

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Table& table() const { return mul_; }
  std::optional<int> find(const std::string& label) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.mul_ == b.mul_;
  }

private:
  std::vector<std::string> labels_;
  Table mul_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

class FiniteShelf {
public:
  /// op[i][j] is the index of element_i |> element_j. Throws ValidationError on a malformed table.
  FiniteShelf(std::vector<std::string> labels, Table op);

  int size() const { return static_cast<int>(labels_.size()); }
  int op(int x, int y) const { return op_[x][y]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Table& table() const { return op_; }
  std::optional<int> find(const std::string& label) const;

  friend bool operator==(const FiniteShelf&, const FiniteShelf&) = default;

private:
  std::vector<std::string> labels_;
  Table op_;
};

struct ShelfReport {
  bool is_shelf = false;
  bool is_rack = false;
  bool is_quandle = false;
  std::vector<Witness> witnesses;
};

/// Witness kinds: "self_distributivity" (x,y,z), "column_bijection" (y,x1,x2)
/// with x1 < x2 and x1|>y == x2|>y, "idempotence" (x).
ShelfReport check_shelf(const FiniteShelf& s, const CheckOptions& opts = {});

FiniteShelf conjugation_rack(const FiniteGroup& g);
FiniteShelf dihedral_quandle(int n);
FiniteShelf trivial_quandle(int n);

class AugmentedRack {
public:
  /// action[x][g] = index of x.g; p[x] = group index. Checks shapes and ranges
  /// only; the action laws and the augmentation identity are checked by
  /// check_augmented so that broken instances stay representable.
  AugmentedRack(std::vector<std::string> carrier, FiniteGroup group, Table action, std::vector<int> p);

  int size() const { return static_cast<int>(carrier_.size()); }
  const FiniteGroup& group() const { return group_; }
  int act(int x, int g) const { return action_[x][g]; }
  int p(int x) const { return p_[x]; }
  const std::string& label(int x) const { return carrier_[x]; }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const Table& action() const { return action_; }
  const std::vector<int>& p_map() const { return p_; }

  friend bool operator==(const AugmentedRack&, const AugmentedRack&) = default;

private:
  std::vector<std::string> carrier_;
  FiniteGroup group_;
  Table action_;
  std::vector<int> p_;
};

/// X = G, p = id, x.g = g^-1 x g.
AugmentedRack conjugation_augmented(const FiniteGroup& g);

struct AugmentedReport {
  bool ok = false;
  bool action_ok = false;
  bool augmentation_ok = false;
  std::vector<Witness> witnesses;
};

/// Witness kinds: "action_identity" (x), "action_compatibility" (x,g,h),
/// "augmentation" (x,g) with p(x.g) != g^-1 p(x) g.
AugmentedReport check_augmented(const AugmentedRack& a, const CheckOptions& opts = {});

/// x |> y := x . p(y). Requires a valid augmented rack.
FiniteShelf induced_rack(const AugmentedRack& a);

/// Augmentation over the inner group Inn(S) <= Sym(S) generated by the column
/// maps x -> x |> y, with p(y) the column map of y. Requires S to be a rack.
AugmentedRack inner_augmentation(const FiniteShelf& s);

struct RackBraiding {
  AugmentedRack tensor;   // carrier X x Y, index x + |X| * y
  std::vector<int> c;     // c[x + |X| y] = index of (y, x.p2(y)) in Y x X, i.e. y + |Y| * (x.p2(y))
  bool bijective = false;
  bool ybe_checked = false;  // only when both factors are the same augmented rack
  bool ybe_ok = false;
  std::vector<Witness> witnesses;  // "set_ybe" (x,y,z)
};

/// Tensor product and braiding c(x,y) = (y, x.p(y)) of two augmented racks
/// over the same group. Throws std::invalid_argument for mismatched groups.
RackBraiding rack_tensor_and_braiding(const AugmentedRack& a1, const AugmentedRack& a2,
                                      const CheckOptions& opts = {});

}  // namespace rackyd
