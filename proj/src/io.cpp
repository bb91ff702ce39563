#include "rackyd/io.hpp"

#include <fstream>
#include <sstream>

namespace rackyd::io {

namespace {

Table table_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  return j.get<Table>();
}

}  // namespace

json to_json(const FiniteGroup& g) { return {{"elements", g.labels()}, {"mul", g.table()}}; }

FiniteGroup group_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return FiniteGroup::by_name(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return FiniteGroup(j.at("elements").get<std::vector<std::string>>(), table_from_json(j.at("mul"), "group 'mul'"));
}

json to_json(const FiniteShelf& s) { return {{"elements", s.labels()}, {"op", s.table()}}; }

FiniteShelf shelf_from_json(const json& j) {
  return FiniteShelf(j.at("elements").get<std::vector<std::string>>(), table_from_json(j.at("op"), "rack 'op'"));
}

json to_json(const AugmentedRack& a) {
  return {{"rack_elements", a.carrier()}, {"group", to_json(a.group())}, {"action", a.action()}, {"p", a.p_map()}};
}

AugmentedRack augmented_from_json(const json& j) {
  return AugmentedRack(j.at("rack_elements").get<std::vector<std::string>>(), group_from_json(j.at("group")),
                       table_from_json(j.at("action"), "augmented rack 'action'"), j.at("p").get<std::vector<int>>());
}

json to_json(const Witness& w) { return {{"check", w.check}, {"indices", w.indices}}; }

json to_json(const std::vector<Witness>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace rackyd::io
