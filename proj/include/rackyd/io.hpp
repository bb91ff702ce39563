#pragma once

// JSON encodings. Scalars are strings in lowest terms ("3", "-1/2"); all
// indices in files are 0-based.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rackyd/env.hpp"
#include "rackyd/group_hopf.hpp"
#include "rackyd/leibniz.hpp"

namespace rackyd::io {

using nlohmann::json;

// Rack-level formats, defined in io.cpp.
json to_json(const FiniteGroup& g);
/// Accepts {"elements", "mul"} or a name string ("S3", "Z4", "trivial").
FiniteGroup group_from_json(const json& j);
json to_json(const FiniteShelf& s);
FiniteShelf shelf_from_json(const json& j);
json to_json(const AugmentedRack& a);
AugmentedRack augmented_from_json(const json& j);
json to_json(const Witness& w);
json to_json(const std::vector<Witness>& ws);

/// Reads a whole file; throws ParseError with the path on failure.
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

template <class S>
std::string format(const S& s) {
  return ScalarTraits<S>::format(s);
}

template <class S>
S parse_scalar(const json& j) {
  if (j.is_number_integer()) return S(j.get<long long>());
  if (!j.is_string()) throw ParseError("scalar must be a string or integer, got " + j.dump());
  return ScalarTraits<S>::parse(j.get<std::string>());
}

template <class S>
json to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(format(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class S>
Matrix<S> matrix_from_json(const json& j) {
  const Index r = j.at("rows").get<Index>(), c = j.at("cols").get<Index>();
  const json& e = j.at("entries");
  if (r < 0 || c < 0 || !e.is_array() || static_cast<Index>(e.size()) != r)
    throw ParseError("matrix: entries must have 'rows' rows");
  Matrix<S> m(r, c);
  for (Index i = 0; i < r; ++i) {
    const json& row = e[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) throw ParseError("matrix: row " + std::to_string(i) + " must have 'cols' entries");
    for (Index k = 0; k < c; ++k) m(i, k) = parse_scalar<S>(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

/// Braiding matrices carry the basis-order header.
template <class S>
json braiding_to_json(const Matrix<S>& t, const std::vector<std::string>& factor_basis) {
  json j = to_json(t);
  j["basis_order"] = "second-factor-major";
  j["factor_basis"] = factor_basis;
  return j;
}

template <class S>
json to_json(const LeibnizAlgebra<S>& l) {
  json brackets = json::array();
  const Index n = l.dim();
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      const auto b = l.bracket(i, k);
      json out = json::object();
      for (Index r = 0; r < n; ++r)
        if (!is_zero(b(r))) out[std::to_string(r)] = format(b(r));
      if (!out.empty()) brackets.push_back({{"i", i}, {"j", k}, {"out", std::move(out)}});
    }
  return {{"dim", n}, {"basis", l.basis()}, {"brackets", std::move(brackets)}};
}

template <class S>
LeibnizAlgebra<S> leibniz_from_json(const json& j) {
  const Index n = j.at("dim").get<Index>();
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = j.at("basis").get<std::vector<std::string>>();
  else
    for (Index i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
  if (static_cast<Index>(basis.size()) != n) throw ParseError("leibniz: basis length differs from dim");
  auto l = LeibnizAlgebra<S>::abelian(basis);
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  for (const json& b : j.at("brackets")) {
    const Index i = b.at("i").get<Index>(), k = b.at("j").get<Index>();
    if (i < 0 || i >= n || k < 0 || k >= n) throw ParseError("leibniz: bracket index out of range");
    if (seen[static_cast<std::size_t>(flat2(i, k, n))]) throw ParseError("leibniz: bracket (" + std::to_string(i) + "," + std::to_string(k) + ") given twice");
    seen[static_cast<std::size_t>(flat2(i, k, n))] = true;
    Vector<S> v = Vector<S>::Zero(n);
    for (const auto& [key, value] : b.at("out").items()) {
      Index r = -1;
      if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos && key.size() < 10) r = std::stol(key);
      if (r < 0 || r >= n) throw ParseError("leibniz: output index '" + key + "' out of range");
      v(r) = parse_scalar<S>(value);
    }
    l.set_bracket(i, k, v);
  }
  return l;
}

template <class S>
json to_json(const GroupAlgebraElement<S>& x) {
  json coeffs = json::object();
  for (const auto& [g, c] : x.coeffs()) coeffs[x.group().label(g)] = format(c);
  return {{"group", to_json(x.group())}, {"coeffs", std::move(coeffs)}};
}

template <class S>
GroupAlgebraElement<S> group_element_from_json(const json& j) {
  auto g = std::make_shared<const FiniteGroup>(group_from_json(j.at("group")));
  GroupAlgebraElement<S> x(g);
  for (const auto& [label, value] : j.at("coeffs").items()) {
    auto idx = g->find(label);
    if (!idx) throw ParseError("group element: unknown label '" + label + "'");
    x.add(*idx, parse_scalar<S>(value));
  }
  return x;
}

/// Hopf descriptor: {"kind": "group", "group": ...} or
/// {"kind": "enveloping", "lie": <leibniz>, "degree": 2}.
template <class S>
json to_json(const HopfDescriptor<S>& h) {
  if (h.group()) return {{"kind", "group"}, {"group", to_json(*h.group())}};
  return {{"kind", "enveloping"}, {"lie", to_json(h.pbw()->lie())}, {"degree", h.pbw()->degree()}};
}

template <class S>
std::shared_ptr<const HopfDescriptor<S>> hopf_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "group") return HopfDescriptor<S>::group_algebra(group_from_json(j.at("group")));
  if (kind == "enveloping")
    return HopfDescriptor<S>::first_order_enveloping(leibniz_from_json<S>(j.at("lie")), j.value("degree", 2));
  throw ParseError("hopf: kind must be 'group' or 'enveloping'");
}

/// YD module: {"hopf": ..., "basis": [...],
///   "action": {"<generator label>": {"<m>": {"<k>": "c", ...}}},
///   "coaction": {"<m>": [{"m": "<k>", "h": "<hopf basis label>", "c": "1"}]}}
/// Action maps list e_m . g = sum c e_k; omitted basis vectors act as zero.
template <class S>
json to_json(const YDModule<S>& m) {
  const auto& h = *m.hopf();
  const auto& basis = m.basis();
  json action = json::object();
  for (std::size_t g = 0; g < h.generators().size(); ++g) {
    json table = json::object();
    const Matrix<S>& a = m.action()[g];
    for (Index col = 0; col < m.dim(); ++col) {
      json image = json::object();
      for (Index row = 0; row < m.dim(); ++row)
        if (!is_zero(a(row, col))) image[basis[static_cast<std::size_t>(row)]] = format(a(row, col));
      table[basis[static_cast<std::size_t>(col)]] = std::move(image);
    }
    action[h.label(h.generators()[g])] = std::move(table);
  }
  json coaction = json::object();
  for (Index col = 0; col < m.dim(); ++col) {
    json terms = json::array();
    for (const auto& t : m.coaction_terms(col))
      terms.push_back({{"m", basis[static_cast<std::size_t>(t.k)]}, {"h", h.label(t.b)}, {"c", format(t.coeff)}});
    coaction[basis[static_cast<std::size_t>(col)]] = std::move(terms);
  }
  return {{"hopf", to_json(h)}, {"basis", basis}, {"action", std::move(action)}, {"coaction", std::move(coaction)}};
}

template <class S>
YDModule<S> yd_from_json(const json& j) {
  auto hopf = hopf_from_json<S>(j.at("hopf"));
  const auto basis = j.at("basis").get<std::vector<std::string>>();
  const Index n = static_cast<Index>(basis.size());
  std::map<std::string, Index> index;
  for (Index i = 0; i < n; ++i)
    if (!index.emplace(basis[static_cast<std::size_t>(i)], i).second) throw ParseError("YD module: duplicate basis label");
  auto find = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw ParseError("YD module: unknown basis label '" + label + "'");
    return it->second;
  };
  std::map<std::string, Index> hopf_index;
  for (Index b = 0; b < hopf->dim(); ++b) hopf_index[hopf->label(b)] = b;

  std::vector<Matrix<S>> action;
  const json& acts = j.at("action");
  for (Index g : hopf->generators()) {
    const std::string label = hopf->label(g);
    if (!acts.contains(label)) throw ParseError("YD module: no action given for generator '" + label + "'");
    Matrix<S> a = Matrix<S>::Zero(n, n);
    for (const auto& [src, image] : acts.at(label).items())
      for (const auto& [dst, c] : image.items()) a(find(dst), find(src)) += parse_scalar<S>(c);
    action.push_back(std::move(a));
  }
  Matrix<S> coaction = Matrix<S>::Zero(n * hopf->dim(), n);
  for (const auto& [src, terms] : j.at("coaction").items())
    for (const json& t : terms) {
      auto it = hopf_index.find(t.at("h").get<std::string>());
      if (it == hopf_index.end())
        throw ValidationError("YD module: coaction uses '" + t.at("h").get<std::string>() +
                              "', which is outside the representable part of the Hopf algebra");
      coaction(flat2(find(t.at("m").get<std::string>()), it->second, n), find(src)) += parse_scalar<S>(t.at("c"));
    }
  return YDModule<S>(hopf, basis, std::move(action), std::move(coaction));
}

/// q : M -> H as {"<m>": {"<hopf basis label>": "c"}}; omitted vectors map to 0.
template <class S>
Matrix<S> q_from_json(const json& j, const YDModule<S>& m) {
  const auto& h = *m.hopf();
  Matrix<S> q = Matrix<S>::Zero(h.dim(), m.dim());
  for (const auto& [src, image] : j.items()) {
    const auto& b = m.basis();
    auto it = std::find(b.begin(), b.end(), src);
    if (it == b.end()) throw ParseError("q: unknown basis label '" + src + "'");
    for (const auto& [label, c] : image.items()) {
      Index target = -1;
      for (Index k = 0; k < h.dim(); ++k)
        if (h.label(k) == label) target = k;
      if (target < 0) throw ParseError("q: unknown Hopf basis label '" + label + "'");
      q(target, it - b.begin()) += parse_scalar<S>(c);
    }
  }
  return q;
}

template <class S>
json q_to_json(const Matrix<S>& q, const YDModule<S>& m) {
  json out = json::object();
  for (Index x = 0; x < m.dim(); ++x) {
    json image = json::object();
    for (Index k = 0; k < q.rows(); ++k)
      if (!is_zero(q(k, x))) image[m.hopf()->label(k)] = format(q(k, x));
    out[m.basis()[static_cast<std::size_t>(x)]] = std::move(image);
  }
  return out;
}

template <class S>
json to_json(const BraidedLeibnizData<S>& d) {
  return {{"dim", d.dim}, {"bracket", to_json(d.bracket)}, {"tau", to_json(d.tau)}};
}

template <class S>
BraidedLeibnizData<S> braided_leibniz_from_json(const json& j) {
  BraidedLeibnizData<S> d{j.at("dim").get<Index>(), matrix_from_json<S>(j.at("bracket")), matrix_from_json<S>(j.at("tau"))};
  if (d.bracket.rows() != d.dim || d.bracket.cols() != d.dim * d.dim) throw ParseError("braided Leibniz: bracket must be dim x dim^2");
  if (d.tau.rows() != d.dim * d.dim || d.tau.cols() != d.dim * d.dim) throw ParseError("braided Leibniz: tau must be dim^2 x dim^2");
  return d;
}

}  // namespace rackyd::io
