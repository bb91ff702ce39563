#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "rackyd/env.hpp"
#include "rackyd/io.hpp"

using namespace rackyd;
using Q = Rational;
using L = LeibnizAlgebra<Q>;

namespace {

const std::string fixtures = RACKYD_FIXTURES;

// Reference 16 x 16 R-matrix of the Heisenberg-Voros example, row by row.
const int kReference[16][16] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 1, 0, 1, -1, 0, 0, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}};

Matrix<Q> reference() {
  Matrix<Q> m(16, 16);
  for (Index i = 0; i < 16; ++i)
    for (Index j = 0; j < 16; ++j) m(i, j) = Q(kReference[i][j]);
  return m;
}

Matrix<Q> hv_rmatrix() { return braiding(first_order_yd(heisenberg_voros<Q>())); }

io::json fixture(const std::string& name) { return io::read_file(fixtures + "/" + name + ".json"); }

L leibniz(const std::string& name) { return io::leibniz_from_json<Q>(fixture(name)); }

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_ms <= 0 || ms < limit_ms;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::ostringstream line;
  line << id << ' ' << (ok ? "PASS" : "FAIL") << ' ' << title;
  if (!o.detail.empty()) line << " - " << o.detail;
  if (!in_time) line << " - over the " << limit_ms << " ms limit";
  std::cout << line.str() << '\n';
  std::cerr << id << " time: " << ms << " ms\n";
}

Outcome ac1() {
  const Matrix<Q> t = hv_rmatrix();
  if (!exactly_equal(t, reference())) return {false, "library braiding differs from the reference"};
  std::ostringstream out, err;
  if (cli::run({"hv-rmatrix", "--paper-layout", "--integers"}, out, err) != 0) return {false, "hv-rmatrix exited nonzero"};
  std::istringstream rows(out.str());
  Index i = 0;
  for (std::string line; std::getline(rows, line); ++i) {
    std::istringstream cells(line);
    for (Index j = 0; j < 16; ++j) {
      int v = 0;
      if (!(cells >> v) || i >= 16 || v != kReference[i][j]) return {false, "CLI row " + std::to_string(i + 1) + " differs"};
    }
  }
  if (i != 16) return {false, "CLI printed " + std::to_string(i) + " rows"};
  return {true, "16x16 exact, row 13 = " + [] {
            std::string s;
            for (int v : kReference[12]) s += (s.empty() ? "" : " ") + std::to_string(v);
            return s;
          }()};
}

Outcome ac2() {
  const Matrix<Q> t = reference();
  const bool inv = is_involutive(t);
  const bool dense = exactly_equal(Matrix<Q>(t * t), identity<Q>(16));
  return {!inv && !dense && !is_involutive(hv_rmatrix()), "T*T != I"};
}

Outcome ac3() {
  const Matrix<Q> t = reference();
  const auto r = check_ybe(t);
  const Matrix<Q> t12 = kron(t, identity<Q>(4)), t23 = kron(identity<Q>(4), t);
  const bool dense = exactly_equal(Matrix<Q>(t12 * t23 * t12), Matrix<Q>(t23 * t12 * t23));
  return {r.ok && dense, "64x64 braid relation holds (basis-triple and dense kron checks)"};
}

Outcome ac4() {
  const Matrix<Q> op = unital_shelf(heisenberg_voros<Q>());
  // B(i, j): coefficient of u_i v'_j on the basis (1, x, y, z), coordinates (a, b, c, d).
  Matrix<Q> one = Matrix<Q>::Zero(4, 4), x = one, y = one, z = one;
  one(0, 0) = 1;
  x(1, 0) = 1;
  y(2, 0) = 1;
  z(3, 0) = 1;
  z(1, 1) = 1;
  z(1, 2) = 1;
  z(2, 1) = -1;
  z(2, 2) = 1;
  const bool ok = exactly_equal(bilinear_component(op, 0), one) && exactly_equal(bilinear_component(op, 1), x) &&
                  exactly_equal(bilinear_component(op, 2), y) && exactly_equal(bilinear_component(op, 3), z);
  return {ok, format_operation(op, {"a", "b", "c", "d"}, {"1", "x", "y", "z"})};
}

Outcome ac5() {
  std::string detail;
  for (const char* name : {"heisenberg_voros", "abelian2", "nonabelian2", "sl2"}) {
    const auto l = leibniz(name);
    const auto d = theorem1_bracket(build_env(lie_object_from_leibniz(l), 2));
    if (d.dim != l.dim() || !exactly_equal(d.bracket, l.brackets())) return {false, std::string(name) + ": bracket differs"};
    if (!exactly_equal(d.tau, flip_matrix<Q>(l.dim()))) return {false, std::string(name) + ": tau is not the flip"};
    if (!check_braided_leibniz(d).ok) return {false, std::string(name) + ": braided Leibniz identity fails"};
  }
  return {true, "heisenberg_voros, abelian2, nonabelian2, sl2 recovered with tau = flip"};
}

Outcome ac6() {
  std::vector<std::pair<std::string, AugmentedRack>> racks{
      {"S3 conjugation", io::augmented_from_json(fixture("s3_conjugation_aug"))}};
  for (int n = 3; n <= 7; ++n) racks.emplace_back("R" + std::to_string(n), inner_augmentation(dihedral_quandle(n)));
  for (const auto& [name, a] : racks) {
    const auto lin = linearize_augmented<Q>(a);
    if (!check_yd(lin.module).ok()) return {false, name + ": YD fails"};
    if (!check_q_conditions(lin.module, rack_q<Q>(a)).ok()) return {false, name + ": q conditions fail"};
    const auto d = braided_leibniz_from_q(lin.module, rack_q<Q>(a));
    if (!check_braided_leibniz(d).ok) return {false, name + ": braided Leibniz fails"};
  }
  return {true, "S3 conjugation and R3..R7 over Inn"};
}

Outcome ac7() {
  std::vector<std::pair<std::string, YDModule<Q>>> corpus;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    if (path.extension() != ".json") continue;
    const auto j = io::read_file(path.string());
    const std::string name = path.stem().string();
    if (j.contains("hopf")) corpus.emplace_back(name, io::yd_from_json<Q>(j));
    else if (j.contains("rack_elements")) corpus.emplace_back(name, linearized_module<Q>(io::augmented_from_json(j)));
    else if (j.contains("brackets")) {
      const auto l = io::leibniz_from_json<Q>(j);
      if (check_leibniz(l).ok) corpus.emplace_back(name + " (k+g)", first_order_yd(l));
    }
  }
  for (const char* g : {"Z2", "Z3", "S3", "S4"}) corpus.emplace_back(std::string("ker eps ") + g, ker_eps_yd<Q>(FiniteGroup::by_name(g)));

  int broken = 0;
  std::vector<std::string> disagree;
  for (const auto& [name, m] : corpus) {
    const bool yd = check_yd(m).ok(), ybe = check_ybe(braiding(m)).ok;
    if (!yd) ++broken;
    if (yd != ybe) disagree.push_back(name + " (yd=" + (yd ? "pass" : "fail") + ", ybe=" + (ybe ? "pass" : "fail") + ")");
  }
  std::string detail = std::to_string(corpus.size()) + " instances, " + std::to_string(broken) + " not YD";
  if (corpus.size() < 10 || broken < 2) return {false, detail + ": corpus too small"};
  if (!disagree.empty()) {
    detail += "; disagreement on";
    for (const auto& d : disagree) detail += " " + d;
    return {false, detail};
  }
  return {true, detail + "; check_yd and check_ybe agree everywhere"};
}

Outcome ac8() {
  std::string names;
  for (const char* name : {"heisenberg_voros", "sl2", "abelian2", "nonabelian2", "square_central"}) {
    const auto env = build_env(lie_object_from_leibniz(leibniz(name)), 2);
    if (!check_tetramodule(env).ok()) return {false, std::string(name) + ": tetramodule"};
    if (!check_phi(env).ok()) return {false, std::string(name) + ": phi"};
    if (!check_antipode_T(env).ok) return {false, std::string(name) + ": antipode T"};
    const auto ft = f_tilde_checks(env);
    if (!ft.ok()) return {false, std::string(name) + ": f~"};
    const auto inv = inv_part(env);
    const Matrix<Q> f = f_tilde(env, inv);
    for (Index k = 0; k < f.cols(); ++k)
      if (!is_zero(f(env.pbw().unit(), k))) return {false, std::string(name) + ": eps(phi) != 0 on inv M"};
    names += (names.empty() ? "" : ", ") + std::string(name);
  }
  return {true, "degree 2: " + names};
}

Outcome ac9() {
  for (const char* g : {"Z2", "Z3", "S3", "S4"})
    if (!check_yd(ker_eps_yd<Q>(FiniteGroup::by_name(g))).ok()) return {false, std::string(g) + " fails"};
  return {true, "Z2, Z3, S3, S4"};
}

Outcome ac10() {
  for (const char* name : {"z2_conjugation_aug", "s3_conjugation_aug"})
    if (!function_dual_check<Q>(io::augmented_from_json(fixture(name))).ok()) return {false, std::string(name) + " fails"};
  return {true, "Z2 and S3 conjugation fixtures"};
}

}  // namespace

int main() {
  report("AC1", "R-matrix reproduction", 1000, ac1);
  report("AC2", "non-involutivity", 1000, ac2);
  report("AC3", "Yang-Baxter equation for the R-matrix", 5000, ac3);
  report("AC4", "shelf formula on k + g", 0, ac4);
  report("AC5", "classical recovery", 0, ac5);
  report("AC6", "augmented-rack bracket", 5000, ac6);
  report("AC7", "YD <=> YBE on the corpus", 0, ac7);
  report("AC8", "enveloping tetramodule checks", 0, ac8);
  report("AC9", "ker eps Yetter-Drinfel'd module", 5000, ac9);
  report("AC10", "function-algebra dual check", 0, ac10);
  return failures == 0 ? 0 : 1;
}
