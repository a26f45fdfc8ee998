#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "skewbrace/arithmetic.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/solution.hpp"
#include "skewbrace/verify.hpp"

using namespace skewbrace;

namespace {

constexpr const char* kStdout = "-";

// Writes to stdout for "-", otherwise to the named file.
void emit(const Json& j, const std::string& path) {
  if (path == kStdout) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string set_text(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string yes_no(std::optional<bool> b) {
  if (!b) return "inapplicable";
  return *b ? "true" : "false";
}

// A solution file, or a brace file whose r_A is taken.
Solution load_solution(const Json& j) {
  if (j.contains("circle")) return from_skew_brace(brace_from_json(j));
  return solution_from_json(j);
}

void print_properties(const SkewBrace& a) {
  const PropertyVector v = property_vector(a);
  const auto& kinds = all_properties();
  for (std::size_t i = 0; i < kinds.size(); ++i) std::cout << "  " << std::left << std::setw(22) << to_string(kinds[i]) << (v[i] ? "yes" : "no") << "\n";
}

int run_enumerate(int order, int bound, const std::string& json_path) {
  const EnumerationResult e = enumerate_order(order, bound);
  if (!json_path.empty()) {
    emit(enumeration_to_json(e), json_path);
    if (json_path == kStdout) return 0;
  }
  std::cout << "order " << e.order << ": " << e.total << " skew braces, " << e.brace_count << " braces, "
            << e.non_brace_count << " not braces\n";
  for (std::size_t i = 0; i < e.braces.size(); ++i) {
    const EnumeratedBrace& b = e.braces[i];
    std::cout << "  #" << i << " additive " << b.additive_name << ", properties:";
    const auto& kinds = all_properties();
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      if (b.properties[k]) std::cout << " " << to_string(kinds[k]);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_check_criterion(long long n, const std::string& name) {
  const auto kind = criterion_from_string(name);
  if (!kind) throw Error(ErrorCode::BadInput, "unknown criterion " + name);
  const CriterionVerdict v = evaluate_criterion(n, *kind);
  std::cout << (v.holds ? "true" : "false") << "\n";
  if (!v.holds) {
    std::cout << "violated: " << v.reason;
    if (v.p_i) std::cout << " p_i=" << *v.p_i;
    if (v.p_j) std::cout << " p_j=" << *v.p_j;
    if (v.k) std::cout << " k=" << *v.k;
    std::cout << "\n";
  }
  return 0;
}

int run_check_file(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.contains("circle")) {
    const SkewBrace a = brace_from_json(j);
    std::cout << "valid skew brace of order " << a.order() << "\n";
  } else if (j.contains("lambda")) {
    const Solution s = solution_from_json(j);
    std::cout << "valid solution of size " << s.size() << "\n";
  } else if (j.contains("B")) {
    const ConstructionSpec s = spec_from_json(j);
    std::cout << "valid construction input, |B x C| = " << s.b.order() * s.c.order() << "\n";
  } else {
    const FiniteGroup g = group_from_json(j);
    std::cout << "valid group of order " << g.order() << "\n";
  }
  return 0;
}

int run_construct(const std::string& path, const std::string& json_path) {
  const ConstructionSpec spec = spec_from_json(read_json_file(path));
  const bool second = spec.gamma.has_value();
  const SkewBrace a = second ? second_method(spec) : first_method(spec);
  const CriteriaReport c = second ? second_method_criteria(spec) : first_method_criteria(spec);
  if (!json_path.empty()) {
    Json out = brace_to_json(a);
    out["criteria"] = Json{{"two_sided", yes_no(c.two_sided)},
                           {"bi_skew", yes_no(c.bi_skew)},
                           {"lambda_homomorphic", yes_no(c.lambda_homomorphic)}};
    emit(out, json_path);
    if (json_path == kStdout) return 0;
  }
  std::cout << (second ? "second" : "first") << " method: skew brace of order " << a.order() << "\n";
  std::cout << "  two_sided " << yes_no(c.two_sided) << "\n  bi_skew " << yes_no(c.bi_skew)
            << "\n  lambda_homomorphic " << yes_no(c.lambda_homomorphic) << "\n";
  if (second) std::cout << "  Ker(lambda) " << set_text(second_method_kernel(spec)) << "\n";
  return 0;
}

int run_example(const std::string& family_name, const ExampleParams& params, const std::string& json_path) {
  const auto family = family_from_string(family_name);
  if (!family) throw Error(ErrorCode::BadInput, "unknown family " + family_name);
  const SkewBrace a = example_generator(*family, params);
  if (!json_path.empty()) {
    emit(brace_to_json(a), json_path);
    if (json_path == kStdout) return 0;
  }
  std::cout << family_name << ": skew brace of order " << a.order() << "\n";
  print_properties(a);
  return 0;
}

int run_retract(const std::string& path, bool iterate, const std::string& json_path) {
  const Solution s = load_solution(read_json_file(path));
  if (!iterate) {
    const Retraction r = retraction(s);
    if (!json_path.empty()) {
      emit(Json{{"solution", solution_to_json(r.solution)}, {"projection", r.projection}}, json_path);
      if (json_path == kStdout) return 0;
    }
    std::cout << "retraction size " << r.solution.size() << " (from " << s.size() << ")\n";
    return 0;
  }
  const std::vector<int> sizes = retraction_sizes(s);
  const std::optional<int> level = mp_level(s);
  if (!json_path.empty()) {
    emit(Json{{"sizes", sizes}, {"level", level ? Json(*level) : Json(nullptr)}}, json_path);
    if (json_path == kStdout) return 0;
  }
  std::cout << "retraction sizes";
  for (int k : sizes) std::cout << " " << k;
  std::cout << "\n";
  if (level) {
    std::cout << "multipermutation level " << *level << "\n";
  } else {
    std::cout << "not multipermutation\n";
  }
  return 0;
}

int run_verify(const std::string& name, int n_max, const std::string& reading, const std::string& json_path) {
  auto kind = criterion_from_string(name);
  if (name == "theorem_c") kind = reading == "literal" ? CriterionKind::theorem_c_literal : CriterionKind::theorem_c_odd;
  if (!kind) throw Error(ErrorCode::BadInput, "unknown theorem " + name);
  const VerificationReport r = verify_theorem(*kind, n_max);
  if (!json_path.empty()) {
    emit(report_to_json(r), json_path);
    if (json_path == kStdout) return 0;
  }
  std::cout << to_string(r.kind) << "\n";
  for (const VerificationRow& row : r.rows) {
    std::cout << "  n=" << std::setw(2) << row.n << "  arithmetic " << (row.arithmetic ? "true " : "false")
              << "  enumeration " << (row.enumeration ? "true " : "false");
    if (row.counterexample) std::cout << "  counterexample #" << *row.counterexample << " (" << row.counterexample_property << ")";
    if (row.flagged) std::cout << "  FLAGGED: literal reading disagrees";
    std::cout << "  " << std::fixed << std::setprecision(2) << row.seconds << "s\n";
  }
  return 0;
}

int run_props(const std::string& path) {
  const SkewBrace a = brace_from_json(read_json_file(path));
  std::cout << "skew brace of order " << a.order() << "\n";
  print_properties(a);
  std::cout << "  Ker(lambda) " << set_text(lambda_kernel(a)) << "\n";
  std::cout << "  Soc " << set_text(socle(a)) << "\n";
  std::cout << "  Ann " << set_text(annihilator(a)) << "\n";
  std::cout << "  ideals " << ideals(a).size() << "\n";
  const auto level = multipermutation_level(a);
  std::cout << "  multipermutation level " << (level ? std::to_string(*level) : "none") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite skew braces, their Yang-Baxter solutions and small-order enumeration"};
  app.require_subcommand(1);

  auto json_option = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--json", target, "write JSON to PATH (stdout when PATH is omitted)")
        ->expected(0, 1)
        ->default_str(kStdout);
  };

  int order = 0;
  int bound = kDeskBound;
  std::string json_path;
  auto* enumerate = app.add_subcommand("enumerate", "all skew braces of a given order up to isomorphism");
  enumerate->add_option("--order", order, "order n")->required();
  enumerate->add_option("--bound", bound, "largest order allowed (at most 15)");
  json_option(enumerate, json_path);

  long long n = 0;
  std::string criterion_name;
  std::string in_path;
  auto* check = app.add_subcommand("check", "evaluate an arithmetic criterion, or validate a JSON file");
  auto* check_n = check->add_option("--n", n, "natural number");
  check->add_option("--criterion", criterion_name, "theorem_a, theorem_b, left_nilpotent, theorem_c_literal, theorem_c_odd")
      ->needs(check_n);
  auto* check_in = check->add_option("--in", in_path, "group, skew brace, solution or construction JSON");
  check_n->excludes(check_in);

  auto* construct = app.add_subcommand("construct", "build a skew brace from construction JSON");
  construct->add_option("--in", in_path, "construction JSON (gamma selects the second method)")->required();
  json_option(construct, json_path);

  std::string family;
  ExampleParams params;
  int g = 0;
  auto* example = app.add_subcommand("example", "one of the example families");
  example->add_option("family", family, "pq1_i, pq1_ii, pq2, p3, p2_cyclic, p2_elementary")->required();
  example->add_option("--p", params.p, "prime p")->required();
  example->add_option("--q", params.q, "prime q");
  auto* g_option = example->add_option("--g", g, "generator of multiplicative order q mod p (pq2)");
  json_option(example, json_path);

  bool iterate = false;
  auto* retract = app.add_subcommand("retract", "retraction of a solution (or of r_A for a brace file)");
  retract->add_option("--in", in_path, "solution or skew brace JSON")->required();
  retract->add_flag("--iterate", iterate, "retract until the size stabilises and report the level");
  json_option(retract, json_path);

  std::string theorem;
  int n_max = 0;
  std::string reading = "odd";
  auto* verify = app.add_subcommand("verify-theorem", "compare an arithmetic criterion with enumeration");
  verify->add_option("theorem", theorem, "theorem_a, theorem_b, left_nilpotent, theorem_c, theorem_c_literal, theorem_c_odd")
      ->required();
  verify->add_option("--max", n_max, "largest order (at most 12)");
  verify->add_option("--reading", reading, "reading of theorem_c")->check(CLI::IsMember({"literal", "odd"}));
  json_option(verify, json_path);

  auto* props = app.add_subcommand("props", "property vector and distinguished ideals of a skew brace");
  props->add_option("--in", in_path, "skew brace JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*enumerate) return run_enumerate(order, bound, json_path);
    if (*check) {
      if (!in_path.empty()) return run_check_file(in_path);
      if (criterion_name.empty()) throw Error(ErrorCode::BadInput, "check needs --n with --criterion, or --in");
      return run_check_criterion(n, criterion_name);
    }
    if (*construct) return run_construct(in_path, json_path);
    if (*example) {
      if (*g_option) params.g = g;
      return run_example(family, params, json_path);
    }
    if (*retract) return run_retract(in_path, iterate, json_path);
    if (*verify) {
      if (n_max == 0) n_max = theorem == "theorem_a" || theorem == "left_nilpotent" ? 12 : 10;
      return run_verify(theorem, n_max, reading, json_path);
    }
    if (*props) return run_props(in_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::MismatchFound ? 2 : 1;
  }
  return 0;
}
