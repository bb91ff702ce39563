#include "rackyd/rack.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rackyd {

namespace {

void check_square_table(const Table& t, std::size_t n, const char* what) {
  if (t.size() != n) throw ValidationError(std::string(what) + ": table has wrong number of rows");
  for (const auto& row : t) {
    if (row.size() != n) throw ValidationError(std::string(what) + ": table row has wrong length");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ValidationError(std::string(what) + ": entry " + std::to_string(v) + " out of range");
  }
}

std::optional<int> find_label(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

std::string cycle_notation(const std::vector<int>& image) {
  std::string out;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start] || image[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += " ";
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(image[i]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// First g, then h.
std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h) {
  std::vector<int> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = h[static_cast<std::size_t>(g[i])];
  return out;
}

/// All products of the generators, sorted by image vector (identity first).
std::vector<std::vector<int>> permutation_closure(const std::vector<std::vector<int>>& generators, int degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw ValidationError("generator has wrong degree");
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) throw ValidationError("generator is not a permutation");
  }
  std::set<std::vector<int>> elements{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier)
      for (const auto& g : generators) {
        auto prod = compose(e, g);
        if (elements.insert(prod).second) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, Table mul)
    : labels_(std::move(labels)), mul_(std::move(mul)) {
  const auto n = labels_.size();
  if (n == 0) throw ValidationError("group must be nonempty");
  check_square_table(mul_, n, "group");
  const int size = static_cast<int>(n);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw ValidationError("group: multiplication is not associative at (" + labels_[a] + ", " +
                                labels_[b] + ", " + labels_[c] + ")");
  identity_ = -1;
  for (int e = 0; e < size && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < size && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw ValidationError("group: no identity element");
  inverse_.assign(n, -1);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b)
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] < 0) throw ValidationError("group: element " + labels_[a] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"e"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> labels;
  Table mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(labels), std::move(mul));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric group degree must be positive");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return generated_by(all, n);
}

FiniteGroup FiniteGroup::generated_by(const std::vector<std::vector<int>>& generators, int degree) {
  const auto list = permutation_closure(generators, degree);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  const int n = static_cast<int>(list.size());
  Table mul(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(cycle_notation(list[a]));
    for (int b = 0; b < n; ++b) mul[a][b] = index.at(compose(list[a], list[b]));
  }
  return FiniteGroup(std::move(labels), std::move(mul));
}

FiniteGroup FiniteGroup::by_name(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'S')) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1 && n <= 6) return name[0] == 'Z' ? cyclic(n) : symmetric(n);
    if (n >= 1 && name[0] == 'Z' && n <= 512) return cyclic(n);
  }
  throw std::invalid_argument("unknown group name '" + name + "' (expected Z<n>, S<n> with n <= 6, or trivial)");
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::find(const std::string& label) const { return find_label(labels_, label); }

FiniteShelf::FiniteShelf(std::vector<std::string> labels, Table op) : labels_(std::move(labels)), op_(std::move(op)) {
  check_square_table(op_, labels_.size(), "shelf");
}

std::optional<int> FiniteShelf::find(const std::string& label) const { return find_label(labels_, label); }

ShelfReport check_shelf(const FiniteShelf& s, const CheckOptions& opts) {
  ShelfReport r;
  const int n = s.size();
  WitnessLog distributivity(opts);
  for (int x = 0; x < n && !distributivity.full(); ++x)
    for (int y = 0; y < n && !distributivity.full(); ++y)
      for (int z = 0; z < n && !distributivity.full(); ++z)
        if (s.op(s.op(x, y), z) != s.op(s.op(x, z), s.op(y, z)))
          distributivity.add("self_distributivity", {x, y, z});
  r.is_shelf = !distributivity.failed();
  r.witnesses = distributivity.take();
  if (!r.is_shelf) return r;

  WitnessLog bijection(opts);
  for (int y = 0; y < n && !bijection.full(); ++y) {
    std::vector<int> preimage(n, -1);
    for (int x = 0; x < n && !bijection.full(); ++x) {
      int& slot = preimage[s.op(x, y)];
      if (slot >= 0)
        bijection.add("column_bijection", {y, slot, x});
      else
        slot = x;
    }
  }
  r.is_rack = !bijection.failed();
  r.witnesses = bijection.take();
  if (!r.is_rack) return r;

  WitnessLog idempotence(opts);
  for (int x = 0; x < n && !idempotence.full(); ++x)
    if (s.op(x, x) != x) idempotence.add("idempotence", {x});
  r.is_quandle = !idempotence.failed();
  r.witnesses = idempotence.take();
  return r;
}

FiniteShelf conjugation_rack(const FiniteGroup& g) {
  const int n = g.size();
  Table op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op[x][y] = g.conj(x, y);
  return FiniteShelf(g.labels(), std::move(op));
}

FiniteShelf dihedral_quandle(int n) {
  if (n < 1) throw std::invalid_argument("dihedral quandle order must be positive");
  std::vector<std::string> labels;
  Table op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) op[x][y] = (((2 * y - x) % n) + n) % n;
  }
  return FiniteShelf(std::move(labels), std::move(op));
}

FiniteShelf trivial_quandle(int n) {
  if (n < 1) throw std::invalid_argument("quandle order must be positive");
  std::vector<std::string> labels;
  Table op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) op[x][y] = x;
  }
  return FiniteShelf(std::move(labels), std::move(op));
}

AugmentedRack::AugmentedRack(std::vector<std::string> carrier, FiniteGroup group, Table action, std::vector<int> p)
    : carrier_(std::move(carrier)), group_(std::move(group)), action_(std::move(action)), p_(std::move(p)) {
  const auto nx = carrier_.size();
  const auto ng = static_cast<std::size_t>(group_.size());
  if (action_.size() != nx) throw ValidationError("augmented rack: action has wrong number of rows");
  for (const auto& row : action_) {
    if (row.size() != ng) throw ValidationError("augmented rack: action row has wrong length");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= nx)
        throw ValidationError("augmented rack: action entry out of range");
  }
  if (p_.size() != nx) throw ValidationError("augmented rack: p has wrong length");
  for (int v : p_)
    if (v < 0 || static_cast<std::size_t>(v) >= ng) throw ValidationError("augmented rack: p entry out of range");
}

AugmentedRack conjugation_augmented(const FiniteGroup& g) {
  const int n = g.size();
  Table action(n, std::vector<int>(n));
  std::vector<int> p(n);
  for (int x = 0; x < n; ++x) {
    p[x] = x;
    for (int h = 0; h < n; ++h) action[x][h] = g.conj(x, h);
  }
  return AugmentedRack(g.labels(), g, std::move(action), std::move(p));
}

AugmentedReport check_augmented(const AugmentedRack& a, const CheckOptions& opts) {
  AugmentedReport r;
  const FiniteGroup& g = a.group();
  const int nx = a.size(), ng = g.size();
  WitnessLog action(opts);
  for (int x = 0; x < nx && !action.full(); ++x)
    if (a.act(x, g.identity()) != x) action.add("action_identity", {x});
  for (int x = 0; x < nx && !action.full(); ++x)
    for (int h1 = 0; h1 < ng && !action.full(); ++h1)
      for (int h2 = 0; h2 < ng && !action.full(); ++h2)
        if (a.act(a.act(x, h1), h2) != a.act(x, g.mul(h1, h2))) action.add("action_compatibility", {x, h1, h2});
  r.action_ok = !action.failed();
  r.witnesses = action.take();

  WitnessLog augmentation(opts);
  for (int x = 0; x < nx && !augmentation.full(); ++x)
    for (int h = 0; h < ng && !augmentation.full(); ++h)
      if (a.p(a.act(x, h)) != g.conj(a.p(x), h)) augmentation.add("augmentation", {x, h});
  r.augmentation_ok = !augmentation.failed();
  for (auto& w : augmentation.take())
    if (r.witnesses.size() < opts.witness_limit) r.witnesses.push_back(std::move(w));
  r.ok = r.action_ok && r.augmentation_ok;
  return r;
}

FiniteShelf induced_rack(const AugmentedRack& a) {
  const auto report = check_augmented(a);
  if (!report.ok) throw ValidationError("induced_rack: input is not an augmented rack");
  const int n = a.size();
  Table op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op[x][y] = a.act(x, a.p(y));
  return FiniteShelf(a.carrier(), std::move(op));
}

AugmentedRack inner_augmentation(const FiniteShelf& s) {
  if (!check_shelf(s).is_rack) throw ValidationError("inner_augmentation: input is not a rack");
  const int n = s.size();
  std::vector<std::vector<int>> columns(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) columns[y][x] = s.op(x, y);
  FiniteGroup inner = FiniteGroup::generated_by(columns, n);
  // generated_by orders elements exactly as permutation_closure does.
  const auto images = permutation_closure(columns, n);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < images.size(); ++i) index[images[i]] = static_cast<int>(i);

  Table action(n, std::vector<int>(inner.size()));
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < inner.size(); ++g) action[x][g] = images[g][x];
  std::vector<int> p(n);
  for (int y = 0; y < n; ++y) p[y] = index.at(columns[y]);
  return AugmentedRack(s.labels(), std::move(inner), std::move(action), std::move(p));
}

RackBraiding rack_tensor_and_braiding(const AugmentedRack& a1, const AugmentedRack& a2, const CheckOptions& opts) {
  if (!(a1.group() == a2.group()))
    throw std::invalid_argument("rack_tensor_and_braiding: augmented racks are over different groups");
  const FiniteGroup& g = a1.group();
  const int nx = a1.size(), ny = a2.size(), ng = g.size();

  std::vector<std::string> carrier;
  Table action(nx * ny, std::vector<int>(ng));
  std::vector<int> p(nx * ny);
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x) {
      const int xy = x + nx * y;
      carrier.push_back("(" + a1.label(x) + "," + a2.label(y) + ")");
      p[xy] = g.mul(a1.p(x), a2.p(y));
      for (int h = 0; h < ng; ++h) action[xy][h] = a1.act(x, h) + nx * a2.act(y, h);
    }

  RackBraiding out{AugmentedRack(std::move(carrier), g, std::move(action), std::move(p)), {}, false, false, false, {}};
  out.c.resize(static_cast<std::size_t>(nx * ny));
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x) out.c[x + nx * y] = y + ny * a1.act(x, a2.p(y));
  std::vector<int> sorted = out.c;
  std::sort(sorted.begin(), sorted.end());
  out.bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  if (a1 == a2) {
    out.ybe_checked = true;
    const int n = nx;
    auto c = [&](int x, int y) { return std::pair<int, int>{y, a1.act(x, a1.p(y))}; };
    WitnessLog log(opts);
    for (int x = 0; x < n && !log.full(); ++x)
      for (int y = 0; y < n && !log.full(); ++y)
        for (int z = 0; z < n && !log.full(); ++z) {
          // (c x id)(id x c)(c x id)
          auto [l1, l2] = c(x, y);
          auto [l3, l4] = c(l2, z);
          auto [l5, l6] = c(l1, l3);
          // (id x c)(c x id)(id x c)
          auto [r2, r3] = c(y, z);
          auto [r4, r5] = c(x, r2);
          auto [r6, r7] = c(r5, r3);
          if (l5 != r4 || l6 != r6 || l4 != r7) log.add("set_ybe", {x, y, z});
        }
    out.ybe_ok = !log.failed();
    out.witnesses = log.take();
  }
  return out;
}

}  // namespace rackyd
