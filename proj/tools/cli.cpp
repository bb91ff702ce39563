#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rackyd/io.hpp"

namespace rackyd::cli {

namespace {

using io::json;

struct Options {
  std::vector<std::string> inputs;
  std::string q_path;
  std::string ker_eps;
  std::string require = "rack";
  bool augmented = false;
  int degree = 2;
  std::string field = "rational";
  bool paper_layout = false;
  std::string json_path;
  std::string out_path;
  std::size_t witness_limit = 1;
  bool integers = false;
};

/// Everything a subcommand reports. Only `checks` decide the exit code.
struct Result {
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, json>> info;
  std::vector<Witness> witnesses;
  std::optional<json> artifact;
  std::vector<std::string> layout;  // rows printed under --paper-layout

  void check(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
  void note(std::string name, json value) { info.emplace_back(std::move(name), std::move(value)); }
  void add(const std::vector<Witness>& ws) { witnesses.insert(witnesses.end(), ws.begin(), ws.end()); }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.second) return false;
    return true;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::string& input(const Options& o, std::size_t i, const char* what) {
  if (o.inputs.size() <= i) throw UsageError(std::string("missing argument: ") + what);
  return o.inputs[i];
}

json read(const Options& o, std::size_t i, const char* what) { return io::read_file(input(o, i, what)); }

/// A group argument is either a JSON file or a name such as "S3".
FiniteGroup group_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::group_from_json(io::read_file(arg));
  return io::group_from_json(json(arg));
}

template <class S>
std::vector<std::string> rows_of(const Matrix<S>& m) {
  std::vector<std::string> out;
  for (Index i = 0; i < m.rows(); ++i) {
    std::string row;
    for (Index k = 0; k < m.cols(); ++k) row += (k ? " " : "") + ScalarTraits<S>::format(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

void yd_checks(Result& r, const YDReport& rep) {
  r.check("module", rep.module_ok);
  r.check("comodule", rep.comodule_ok);
  r.check("yd_eq2", rep.ok_eq2);
  r.check("yd_eq3", rep.ok_eq3);
  r.add(rep.witnesses);
}

// Rack-level commands (field independent).

Result check_rack(const Options& o, const CheckOptions& co) {
  const auto s = io::shelf_from_json(read(o, 0, "rack file"));
  const auto rep = check_shelf(s, co);
  Result r;
  r.note("is_shelf", rep.is_shelf);
  r.note("is_rack", rep.is_rack);
  r.note("is_quandle", rep.is_quandle);
  if (o.require == "shelf") r.check("shelf", rep.is_shelf);
  else if (o.require == "rack") r.check("rack", rep.is_rack);
  else if (o.require == "quandle") r.check("quandle", rep.is_quandle);
  else throw UsageError("--require must be shelf, rack or quandle");
  r.add(rep.witnesses);
  return r;
}

Result make_dihedral(const Options& o, const CheckOptions&) {
  int n = 0;
  try {
    n = std::stoi(input(o, 0, "order n"));
  } catch (const std::logic_error&) {
    throw UsageError("order must be an integer");
  }
  Result r;
  r.artifact = io::to_json(dihedral_quandle(n));
  return r;
}

Result make_conjugation(const Options& o, const CheckOptions&) {
  const auto g = group_arg(input(o, 0, "group name or file"));
  Result r;
  r.artifact = o.augmented ? io::to_json(conjugation_augmented(g)) : io::to_json(conjugation_rack(g));
  return r;
}

Result inner_aug(const Options& o, const CheckOptions& co) {
  const auto s = io::shelf_from_json(read(o, 0, "rack file"));
  const auto rep = check_shelf(s, co);
  Result r;
  r.check("rack", rep.is_rack);
  r.add(rep.witnesses);
  if (!rep.is_rack) return r;
  const auto a = inner_augmentation(s);
  r.note("inner_group_order", a.group().size());
  r.check("induced_rack_matches", induced_rack(a) == s);
  r.artifact = io::to_json(a);
  return r;
}

Result check_aug(const Options& o, const CheckOptions& co) {
  const auto a = io::augmented_from_json(read(o, 0, "augmented rack file"));
  const auto rep = check_augmented(a, co);
  Result r;
  r.check("action", rep.action_ok);
  r.check("augmentation", rep.augmentation_ok);
  r.add(rep.witnesses);
  if (rep.ok) {
    const auto s = check_shelf(induced_rack(a), co);
    r.note("induced_is_rack", s.is_rack);
    r.note("induced_is_quandle", s.is_quandle);
  }
  return r;
}

Result rack_braid(const Options& o, const CheckOptions& co) {
  const auto a1 = io::augmented_from_json(read(o, 0, "augmented rack file"));
  const auto a2 = o.inputs.size() > 1 ? io::augmented_from_json(read(o, 1, "second augmented rack file")) : a1;
  Result r;
  for (const auto* a : {&a1, &a2}) {
    const auto rep = check_augmented(*a, co);
    if (!rep.ok) throw ValidationError("rack-braiding: input is not an augmented rack");
  }
  const auto b = rack_tensor_and_braiding(a1, a2, co);
  r.check("bijective", b.bijective);
  if (b.ybe_checked) r.check("set_ybe", b.ybe_ok);
  r.add(b.witnesses);
  r.artifact = json{{"tensor", io::to_json(b.tensor)}, {"c", b.c}};
  return r;
}

Result dual(const Options& o, const CheckOptions& co) {
  const auto a = io::augmented_from_json(read(o, 0, "augmented rack file"));
  const auto rep = function_dual_check<Rational>(a, co);
  Result r;
  r.check("p_star_right_colinear", rep.p_star_right_colinear);
  r.check("p_star_left_colinear", rep.p_star_left_colinear);
  r.check("p_star_bimodule", rep.p_star_bimodule);
  r.note("interpretation", rep.interpretation);
  r.add(rep.witnesses);
  return r;
}

// Scalar-dependent commands.

template <class S>
struct Scalar {
  static LieQuotientData<S> quotient(const LeibnizAlgebra<S>& l) { return lie_quotient(l); }

  static json quotient_json(const LieQuotientData<S>& q) {
    json lifted = json::array();
    for (const auto& a : q.lifted_action) lifted.push_back(io::to_json(a));
    return {{"ideal", io::to_json(q.ideal)},     {"projection", io::to_json(q.projection)},
            {"section", io::to_json(q.section)}, {"lie", io::to_json(q.lie)},
            {"lifted_action", std::move(lifted)}};
  }

  /// Leibniz JSON or a Lie object {"lie", "basis", "action": [...], "f"}.
  static LieObject<S> lie_object(const json& j) {
    if (!j.contains("f")) return lie_object_from_leibniz(io::leibniz_from_json<S>(j));
    LieObject<S> obj{io::leibniz_from_json<S>(j.at("lie")), j.at("basis").get<std::vector<std::string>>(), {},
                     io::matrix_from_json<S>(j.at("f"))};
    for (const json& a : j.at("action")) obj.action.push_back(io::matrix_from_json<S>(a));
    return obj;
  }

  static Result linearize(const Options& o, const CheckOptions& co) {
    const auto a = io::augmented_from_json(read(o, 0, "augmented rack file"));
    const auto lin = linearize_augmented<S>(a, co);
    Result r;
    yd_checks(r, check_yd(lin.module, co));
    r.check("p_equivariant", lin.p_equivariant);
    r.check("p_bicomodule", lin.p_bicomodule);
    r.add(lin.witnesses);
    r.artifact = io::to_json(lin.module);
    return r;
  }

  static YDModule<S> module_arg(const Options& o) {
    if (!o.ker_eps.empty()) return ker_eps_yd<S>(group_arg(o.ker_eps));
    const json j = read(o, 0, "YD module file");
    if (j.contains("rack_elements")) return linearized_module<S>(io::augmented_from_json(j));
    return io::yd_from_json<S>(j);
  }

  static Result check_yd_cmd(const Options& o, const CheckOptions& co) {
    const auto m = module_arg(o);
    Result r;
    r.note("dim", m.dim());
    yd_checks(r, check_yd(m, co));
    return r;
  }

  static void emit_braiding(Result& r, const YDModule<S>& m, const CheckOptions& co) {
    const Matrix<S> t = braiding(m);
    const auto ybe = check_ybe(t, co);
    r.check("ybe", ybe.ok);
    r.add(ybe.witnesses);
    r.note("involutive", is_involutive(t));
    r.artifact = io::braiding_to_json(t, m.basis());
    r.layout = rows_of(t);
  }

  static Result braiding_matrix(const Options& o, const CheckOptions& co) {
    Result r;
    emit_braiding(r, module_arg(o), co);
    return r;
  }

  static Result check_ybe_cmd(const Options& o, const CheckOptions& co) {
    const json j = read(o, 0, "braiding matrix file");
    if (j.contains("basis_order") && j.at("basis_order") != "second-factor-major")
      throw ParseError("braiding matrix: unsupported basis_order");
    const Matrix<S> t = io::matrix_from_json<S>(j);
    const auto rep = check_ybe(t, co);
    Result r;
    r.check("ybe", rep.ok);
    r.note("involutive", is_involutive(t));
    r.add(rep.witnesses);
    return r;
  }

  static Result check_leibniz_cmd(const Options& o, const CheckOptions& co) {
    const auto l = io::leibniz_from_json<S>(read(o, 0, "Leibniz file"));
    const auto rep = check_leibniz(l, co);
    Result r;
    r.check("leibniz", rep.ok);
    r.note("is_lie", check_lie(l).ok());
    r.add(rep.witnesses);
    return r;
  }

  static Result lie_quotient_cmd(const Options& o, const CheckOptions&) {
    const auto l = io::leibniz_from_json<S>(read(o, 0, "Leibniz file"));
    const auto q = quotient(l);
    Result r;
    r.note("ideal_dim", q.ideal.cols());
    r.note("quotient_dim", q.dim());
    r.check("quotient_is_lie", check_lie(q.lie).ok());
    r.artifact = quotient_json(q);
    return r;
  }

  static std::vector<std::string> coordinate_names(Index m) {
    std::vector<std::string> names;
    for (Index i = 0; i < m; ++i) names.push_back(i < 26 ? std::string(1, char('a' + i)) : "c" + std::to_string(i));
    return names;
  }

  static Result unital_shelf_cmd(const Options& o, const CheckOptions& co) {
    const auto l = io::leibniz_from_json<S>(read(o, 0, "Leibniz file"));
    if (!check_leibniz(l).ok) throw ValidationError("unital-shelf: input is not a Leibniz algebra");
    const Matrix<S> op = unital_shelf(l);
    Result r;
    r.note("formula", format_operation(op, coordinate_names(op.rows()), unital_basis(l)));
    const auto cs = check_coalgebra_shelf(op, unital_coproduct(l), co);
    r.check("coalgebra_shelf", cs.ok);
    r.add(cs.witnesses);
    r.artifact = io::to_json(op);
    r.layout = rows_of(op);
    return r;
  }

  static Result first_order_yd_cmd(const Options& o, const CheckOptions& co) {
    const auto l = io::leibniz_from_json<S>(read(o, 0, "Leibniz file"));
    const auto m = first_order_yd(l);
    Result r;
    yd_checks(r, check_yd(m, co));
    r.artifact = io::to_json(m);
    return r;
  }

  static Result hv_rmatrix(const Options&, const CheckOptions& co) {
    const auto m = first_order_yd(heisenberg_voros<S>());
    Result r;
    yd_checks(r, check_yd(m, co));
    emit_braiding(r, m, co);
    return r;
  }

  static json env_json(const EnvTetramodule<S>& e) {
    std::vector<std::string> labels;
    for (Index k = 0; k < e.dim(); ++k) labels.push_back(e.label(k));
    json left = json::array(), right = json::array();
    for (Index x = 0; x < e.object().lie.dim(); ++x) {
      left.push_back(io::to_json(e.left_generator(x)));
      right.push_back(io::to_json(e.right_generator(x)));
    }
    std::vector<std::string> hopf;
    for (Index b = 0; b < e.pbw().dim(); ++b) hopf.push_back(e.pbw().label(b));
    return {{"degree", e.degree()},
            {"basis", labels},
            {"hopf_basis", hopf},
            {"left_generator_action", std::move(left)},
            {"right_generator_action", std::move(right)},
            {"coaction_left", io::to_json(e.coaction_left())},
            {"coaction_right", io::to_json(e.coaction_right())},
            {"phi", io::to_json(e.phi())}};
  }

  static EnvTetramodule<S> env_arg(const Options& o) {
    return build_env(lie_object(read(o, 0, "Leibniz or Lie object file")), o.degree);
  }

  static Result env_build(const Options& o, const CheckOptions&) {
    const auto e = env_arg(o);
    Result r;
    r.note("dim", e.dim());
    r.artifact = env_json(e);
    return r;
  }

  static Result env_checks(const Options& o, const CheckOptions& co) {
    const auto e = env_arg(o);
    Result r;
    r.note("dim", e.dim());
    r.note("degree", e.degree());
    const auto t = check_tetramodule(e, co);
    r.check("left_module", t.left_module);
    r.check("right_module", t.right_module);
    r.check("actions_commute", t.actions_commute);
    r.check("left_comodule", t.left_comodule);
    r.check("right_comodule", t.right_comodule);
    r.check("coactions_commute", t.coactions_commute);
    r.check("coactions_bimodule_maps", t.coactions_bimodule_maps);
    r.add(t.witnesses);
    const auto p = check_phi(e, co);
    r.check("phi_left_linear", p.left_linear);
    r.check("phi_right_linear", p.right_linear);
    r.check("phi_coderivation", p.coderivation);
    r.add(p.witnesses);
    if (e.degree() >= 2) {
      const auto f = f_tilde_checks(e, co);
      r.check("f_tilde_im_in_ker_eps", f.im_in_ker_eps);
      r.check("f_tilde_colinear", f.colinear);
      r.check("f_tilde_yd_morphism", f.yd_morphism);
      r.add(f.witnesses);
    } else {
      r.note("f_tilde", "skipped: needs degree >= 2");
    }
    const auto a = check_antipode_T(e, co);
    r.check("antipode_T", a.ok);
    r.note("antipode_T_checked", a.checked);
    r.add(a.witnesses);
    r.note("exactness", "checks involving products are restricted to degrees within the truncation");
    return r;
  }

  static Result theorem1(const Options& o, const CheckOptions& co) {
    const auto e = env_arg(o);
    const auto d = theorem1_bracket(e);
    Result r;
    r.note("dim", d.dim);
    const auto bl = check_braided_leibniz(d, co);
    r.check("braided_leibniz", bl.ok);
    r.add(bl.witnesses);
    const auto ybe = check_ybe(d.tau, co);
    r.check("ybe", ybe.ok);
    r.add(ybe.witnesses);
    r.note("tau_is_flip", exactly_equal(d.tau, flip_matrix<S>(d.dim)));
    r.artifact = io::to_json(d);
    return r;
  }

  /// Module and q from an augmented rack (q = p - 1), --ker-eps G (q the
  /// inclusion), or a YD module file with --q.
  static std::pair<YDModule<S>, Matrix<S>> module_and_q(const Options& o, std::size_t arg) {
    if (!o.ker_eps.empty()) {
      const auto g = group_arg(o.ker_eps);
      return {ker_eps_yd<S>(g), ker_eps_inclusion<S>(g)};
    }
    const json j = read(o, arg, "augmented rack or YD module file");
    if (j.contains("rack_elements")) {
      const auto a = io::augmented_from_json(j);
      if (!check_augmented(a).ok) throw ValidationError("input is not an augmented rack");
      return {linearized_module<S>(a), rack_q<S>(a)};
    }
    auto m = io::yd_from_json<S>(j);
    if (o.q_path.empty()) throw UsageError("a YD module input needs --q <file>");
    const json qj = io::read_file(o.q_path);
    Matrix<S> q = qj.contains("entries") ? io::matrix_from_json<S>(qj) : io::q_from_json<S>(qj, m);
    if (q.rows() != m.hopf()->dim() || q.cols() != m.dim()) throw ParseError("q has the wrong shape");
    return {std::move(m), std::move(q)};
  }

  static Result q_conditions(const Options& o, const CheckOptions& co) {
    const auto [m, q] = module_and_q(o, 0);
    const auto rep = check_q_conditions(m, q, co);
    Result r;
    r.check("equivariance", rep.equivariance);
    r.check("coderivation_condition", rep.coderivation_condition);
    r.note("adjoint_linear", rep.adjoint_linear);
    r.note("colinear", rep.colinear);
    r.add(rep.witnesses);
    return r;
  }

  static Result braided_leibniz(const Options& o, const CheckOptions& co) {
    BraidedLeibnizData<S> d;
    Result r;
    json j;
    if (o.ker_eps.empty()) j = read(o, 0, "input file");
    if (!o.ker_eps.empty() || j.contains("rack_elements") || j.contains("hopf")) {
      const auto [m, q] = module_and_q(o, 0);
      const auto yd = check_yd(m, co);
      yd_checks(r, yd);
      const auto qr = check_q_conditions(m, q, co);
      r.check("equivariance", qr.equivariance);
      r.check("coderivation_condition", qr.coderivation_condition);
      r.add(qr.witnesses);
      if (!yd.ok() || !qr.ok()) return r;
      d = braided_leibniz_from_q(m, q);
    } else if (j.contains("tau")) {
      d = io::braided_leibniz_from_json<S>(j);
    } else {
      // Leibniz input: x |> y = x pi(y) on the first-order module k + g. The
      // unital shelf with the same braiding is reported alongside.
      const auto l = io::leibniz_from_json<S>(j);
      if (!check_leibniz(l).ok) throw ValidationError("input is not a Leibniz algebra");
      const auto quotient = lie_quotient(l);
      const auto m = first_order_yd(l, quotient);
      d = braided_leibniz_from_q(m, first_order_q(m, quotient));
      const auto unital = check_braided_leibniz(BraidedLeibnizData<S>{m.dim(), unital_shelf(l), braiding(m)});
      r.note("unital_shelf_identity", unital.ok ? "pass" : "fail");
    }
    r.note("dim", d.dim);
    const auto bl = check_braided_leibniz(d, co);
    r.check("braided_leibniz", bl.ok);
    r.add(bl.witnesses);
    r.artifact = io::to_json(d);
    return r;
  }
};

using Handler = std::function<Result(const Options&, const CheckOptions&)>;

struct Command {
  const char* name;
  const char* help;
  Handler rational;
  Handler gfp;  // empty when the command does not depend on the field
};

template <class S>
std::vector<Handler> scalar_handlers() {
  using C = Scalar<S>;
  return {C::linearize,          C::check_yd_cmd,   C::braiding_matrix, C::check_ybe_cmd, C::check_leibniz_cmd,
          C::lie_quotient_cmd,   C::unital_shelf_cmd, C::first_order_yd_cmd, C::hv_rmatrix, C::env_build,
          C::env_checks,         C::theorem1,       C::q_conditions,    C::braided_leibniz};
}

std::vector<Command> commands() {
  const auto q = scalar_handlers<Rational>();
  const auto p = scalar_handlers<ModP>();
  return {
      {"check-rack", "Classify a finite operation table as shelf, rack, quandle", check_rack, {}},
      {"make-dihedral", "Emit the dihedral quandle of order n", make_dihedral, {}},
      {"make-conjugation", "Emit the conjugation rack of a group (augmented with --augmented)", make_conjugation, {}},
      {"inner-augmentation", "Augment a rack over its inner group Inn(X)", inner_aug, {}},
      {"check-augmented", "Check the action laws and the augmentation identity", check_aug, {}},
      {"rack-braiding", "Tensor product and braiding of augmented racks", rack_braid, {}},
      {"linearize", "Linearized augmented rack as a YD module over kG", q[0], p[0]},
      {"check-yd", "Check module, comodule and Yetter-Drinfel'd conditions", q[1], p[1]},
      {"braiding-matrix", "Emit the YD braiding matrix", q[2], p[2]},
      {"check-ybe", "Check the Yang-Baxter equation for a braiding matrix", q[3], p[3]},
      {"check-leibniz", "Check the right Leibniz identity", q[4], p[4]},
      {"lie-quotient", "Quotient by the squares ideal", q[5], p[5]},
      {"unital-shelf", "Unital shelf on k + g", q[6], p[6]},
      {"first-order-yd", "First-order YD module on k + g", q[7], p[7]},
      {"hv-rmatrix", "R-matrix of the Heisenberg-Voros algebra", q[8], p[8]},
      {"env-build", "Enveloping tetramodule U(g) (x) M, truncated at --degree", q[9], p[9]},
      {"env-checks", "Tetramodule, phi, f~ and antipode checks", q[10], p[10]},
      {"theorem1-bracket", "Braided Leibniz bracket on the invariant part", q[11], p[11]},
      {"q-conditions", "Equivariance and coderivation conditions for q", q[12], p[12]},
      {"braided-leibniz", "Check the braided Leibniz identity", q[13], p[13]},
      {"dual-check", "Bimodule and bicomodule checks on the function algebra", dual, {}},
  };
}

/// Rejects fractional matrix entries anywhere in the artifact.
bool all_integral(const json& j) {
  if (j.is_object()) {
    if (j.contains("entries"))
      for (const auto& row : j.at("entries"))
        for (const auto& v : row)
          if (v.is_string() && v.get<std::string>().find('/') != std::string::npos) return false;
    for (const auto& [k, v] : j.items())
      if (k != "entries" && !all_integral(v)) return false;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (!all_integral(v)) return false;
  }
  return true;
}

std::string format_witness(const Witness& w) {
  std::string s = "witness " + w.check + " (";
  for (std::size_t i = 0; i < w.indices.size(); ++i) s += (i ? ", " : "") + std::to_string(w.indices[i]);
  return s + ")";
}

std::string info_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Racks, Yetter-Drinfel'd modules and braided Leibniz algebras in exact arithmetic", "rackyd"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--degree", o.degree, "Truncation degree of the enveloping algebra")->capture_default_str();
  app.add_option("--field", o.field, "rational or gfp:<p>")->capture_default_str();
  app.add_flag("--paper-layout", o.paper_layout, "Print the matrix as rows of space-separated entries");
  app.add_option("--json", o.json_path, "Write the full run report as JSON");
  app.add_option("--out", o.out_path, "Write the emitted artifact to this path");
  app.add_option("--witness-limit", o.witness_limit, "Witnesses reported per check")->capture_default_str();
  app.add_flag("--integers", o.integers, "Fail unless every emitted matrix entry is an integer");

  const auto table = commands();
  std::map<CLI::App*, const Command*> by_sub;
  for (const auto& c : table) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("inputs", o.inputs, "Input files or values");
    const std::string name = c.name;
    if (name == "check-rack") sub->add_option("--require", o.require, "shelf, rack or quandle")->capture_default_str();
    if (name == "make-conjugation") sub->add_flag("--augmented", o.augmented, "Emit the augmented rack (X = G, p = id)");
    if (name == "check-yd" || name == "braiding-matrix" || name == "q-conditions" || name == "braided-leibniz")
      sub->add_option("--ker-eps", o.ker_eps, "Use the augmentation ideal of this group instead of a file");
    if (name == "q-conditions" || name == "braided-leibniz") sub->add_option("--q", o.q_path, "q : M -> H for a YD module input");
    by_sub[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const Command* cmd = nullptr;
  for (auto* sub : app.get_subcommands()) cmd = by_sub.at(sub);
  std::string command_line;
  for (const auto& a : args) command_line += (command_line.empty() ? "" : " ") + a;

  Result r;
  try {
    if (o.witness_limit == 0) throw UsageError("--witness-limit must be positive");
    const CheckOptions co{o.witness_limit};
    const auto start = std::chrono::steady_clock::now();
    if (o.field == "rational") {
      r = cmd->rational(o, co);
    } else if (o.field.rfind("gfp:", 0) == 0) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(o.field.substr(4));
      } catch (const std::logic_error&) {
        throw UsageError("--field gfp:<p> needs an integer modulus");
      }
      ModP::Scope scope(p);
      r = cmd->gfp ? cmd->gfp(o, co) : cmd->rational(o, co);
    } else {
      throw UsageError("--field must be rational or gfp:<p>");
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "time: " << ms << " ms\n";
    if (o.integers && r.artifact && !all_integral(*r.artifact))
      throw ValidationError("--integers: the emitted matrix has non-integral entries");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeOverflow& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  // Artifacts go to stdout unless --out is given; report lines then move to stderr.
  const bool artifact_on_stdout = (r.artifact && o.out_path.empty()) || (o.paper_layout && !r.layout.empty());
  std::ostream& report = artifact_on_stdout ? err : out;
  for (const auto& [name, ok] : r.checks) report << name << ": " << (ok ? "pass" : "fail") << "\n";
  for (const auto& [name, value] : r.info) report << name << ": " << info_value(value) << "\n";
  for (const auto& w : r.witnesses) report << format_witness(w) << "\n";
  try {
    if (r.artifact && !o.out_path.empty()) {
      io::write_file(o.out_path, *r.artifact);
      report << "wrote " << o.out_path << "\n";
    }
    if (o.paper_layout && !r.layout.empty()) {
      for (const auto& row : r.layout) out << row << "\n";
    } else if (r.artifact && o.out_path.empty()) {
      out << r.artifact->dump(2) << "\n";
    }
    if (!o.json_path.empty()) {
      json checks = json::object(), info = json::object();
      for (const auto& [name, ok] : r.checks) checks[name] = ok;
      for (const auto& [name, value] : r.info) info[name] = value;
      json report_json{{"command", command_line},
                       {"checks", checks},
                       {"info", info},
                       {"witnesses", io::to_json(r.witnesses)},
                       {"ok", r.ok()}};
      if (r.artifact) report_json["artifact"] = o.out_path.empty() ? json("stdout") : json(o.out_path);
      io::write_file(o.json_path, report_json);
    }
  } catch (const ParseError& e) {
    err << "output error: " << e.what() << "\n";
    return 2;
  }
  if (!r.ok()) err << "FAILED\n";
  return r.ok() ? 0 : 1;
}

}  // namespace rackyd::cli
