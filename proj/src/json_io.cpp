#include "skewbrace/json_io.hpp"

#include <fstream>

#include "skewbrace/error.hpp"

namespace skewbrace {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::BadInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Permutation> maps_from_json(const Json& j) {
  try {
    return j.get<std::vector<Permutation>>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadInput, e.what());
  }
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::BadInput, std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

void check_order(const Table& t, int n, const char* key) {
  if (t.order() != n) throw Error(ErrorCode::BadInput, std::string("\"") + key + "\" does not match the declared size");
}

}  // namespace

Json table_to_json(const Table& t) { return t.rows(); }

Table table_from_json(const Json& j) {
  try {
    return Table::from_rows(j.get<std::vector<std::vector<Elem>>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadInput, e.what());
  }
}

Json group_to_json(const FiniteGroup& g) { return Json{{"order", g.order()}, {"table", table_to_json(g.table())}}; }

FiniteGroup group_from_json(const Json& j) {
  const int n = int_field(j, "order");
  Table t = table_from_json(field(j, "table"));
  check_order(t, n, "table");
  return validate_group(std::move(t));
}

Json brace_to_json(const SkewBrace& a) {
  return Json{{"order", a.order()},
              {"add", table_to_json(a.additive().table())},
              {"circle", table_to_json(a.multiplicative().table())}};
}

SkewBrace brace_from_json(const Json& j) {
  const int n = int_field(j, "order");
  const Table add = table_from_json(field(j, "add"));
  const Table circle = table_from_json(field(j, "circle"));
  check_order(add, n, "add");
  check_order(circle, n, "circle");
  return validate_skew_brace(add, circle);
}

Json solution_to_json(const Solution& s) {
  return Json{{"size", s.size()}, {"lambda", table_to_json(s.lambda_table())}, {"rho", table_to_json(s.rho_table())}};
}

Solution solution_from_json(const Json& j) {
  const int n = int_field(j, "size");
  Table lambda = table_from_json(field(j, "lambda"));
  Table rho = table_from_json(field(j, "rho"));
  check_order(lambda, n, "lambda");
  check_order(rho, n, "rho");
  return validate_solution(std::move(lambda), std::move(rho));
}

Json spec_to_json(const ConstructionSpec& s) {
  Json j{{"B", group_to_json(s.b)}, {"C", group_to_json(s.c)}, {"phi", s.phi.maps}, {"psi", s.psi.maps}};
  if (s.gamma) j["gamma"] = s.gamma->maps;
  return j;
}

ConstructionSpec spec_from_json(const Json& j) {
  FiniteGroup b = group_from_json(field(j, "B"));
  FiniteGroup c = group_from_json(field(j, "C"));
  HomIntoAut phi = validate_hom(c, b, maps_from_json(field(j, "phi")));
  HomIntoAut psi = validate_hom(c, b, maps_from_json(field(j, "psi")));
  std::optional<HomIntoAut> gamma;
  if (j.contains("gamma") && !j.at("gamma").is_null()) gamma = validate_hom(c, b, maps_from_json(j.at("gamma")));
  return ConstructionSpec{std::move(b), std::move(c), std::move(phi), std::move(psi), std::move(gamma)};
}

Json properties_to_json(const PropertyVector& v) {
  Json out = Json::object();
  const auto& kinds = all_properties();
  for (std::size_t i = 0; i < kinds.size(); ++i) out[std::string(to_string(kinds[i]))] = v[i];
  return out;
}

Json enumeration_to_json(const EnumerationResult& e) {
  Json braces = Json::array();
  for (const EnumeratedBrace& b : e.braces) {
    Json entry = brace_to_json(b.brace);
    entry["additive_group"] = b.additive_name;
    entry["properties"] = properties_to_json(b.properties);
    braces.push_back(std::move(entry));
  }
  return Json{{"order", e.order},
              {"total", e.total},
              {"brace_count", e.brace_count},
              {"non_brace_count", e.non_brace_count},
              {"braces", std::move(braces)}};
}

Json witness_to_json(const SupersolubleWitness& w) {
  Json stages = Json::array();
  for (const WitnessStage& s : w.stages) stages.push_back(Json{{"target", solution_to_json(s.target)}, {"map", s.map}});
  return Json{{"base_point", w.base_point}, {"chain", w.chain}, {"stages", std::move(stages)}};
}

Json report_to_json(const VerificationReport& r) {
  Json rows = Json::array();
  for (const VerificationRow& row : r.rows) {
    Json entry{{"n", row.n},
               {"arithmetic", row.arithmetic},
               {"enumeration", row.enumeration},
               {"flagged", row.flagged},
               {"seconds", row.seconds}};
    if (row.counterexample) {
      entry["counterexample"] = *row.counterexample;
      entry["counterexample_property"] = row.counterexample_property;
      if (row.counterexample_brace) entry["counterexample_brace"] = brace_to_json(*row.counterexample_brace);
    }
    rows.push_back(std::move(entry));
  }
  return Json{{"theorem", std::string(to_string(r.kind))}, {"rows", std::move(rows)}, {"flagged", r.flagged_orders()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::BadInput, path + ": " + e.what());
  }
}

}  // namespace skewbrace
