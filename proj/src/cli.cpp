#include "polycat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "polycat/bilimits.hpp"
#include "polycat/comonad.hpp"
#include "polycat/json_io.hpp"
#include "polycat/monoidal.hpp"
#include "polycat/nerve.hpp"
#include "polycat/simplex.hpp"

namespace polycat::cli {

namespace {

using json_io::Json;

struct Options {
  std::string input;
  std::vector<std::string> polys;
  std::string set;
  std::string map;
  std::string check = "segal,cosimplicial,oracle";
  std::size_t levels = 2;
  std::size_t n = 1;
  int m_dim = 0;
  int n_dim = 0;
  int bound = 3;
  std::optional<std::size_t> budget;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("io_error", "cannot read '" + path + "'", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) { return json_io::parse(slurp(path), path); }

Budget resolve_budget(const Options& o) {
  Budget b;
  if (o.budget) {
    b.max_elements = *o.budget;
  } else if (const char* env = std::getenv("POLYCAT_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw ValidationError("invalid_budget", "POLYCAT_BUDGET is not a non-negative integer", "POLYCAT_BUDGET");
    b.max_elements = static_cast<std::size_t>(v);
  }
  return b;
}

std::vector<Polynomial> read_polys(const Options& o, std::size_t min, std::size_t max) {
  if (o.polys.size() < min || o.polys.size() > max) {
    const std::string want = min == max ? std::to_string(min) : std::to_string(min) + " or more";
    throw ValidationError("missing_input", "expected " + want + " --poly arguments", "--poly");
  }
  std::vector<Polynomial> out;
  for (const auto& path : o.polys) out.push_back(json_io::read_poly(load(path), path));
  return out;
}

const std::string& require_input(const Options& o) {
  if (o.input.empty()) throw ValidationError("missing_input", "--input is required", "--input");
  return o.input;
}

Json report(const simplex::VerifyReport& r) {
  Json out{{"passed", r.passed}, {"checked", r.checked}};
  if (!r.passed) out["failure"] = r.failure;
  return out;
}

Json report(const IdentityReport& r) {
  Json out{{"holds", r.holds}, {"checked", r.checked}};
  if (!r.holds) out["failure"] = r.failure;
  return out;
}

std::vector<int> parse_int_array(const std::string& text) {
  Json j = json_io::parse(text, "--map");
  if (!j.is_array()) throw ValidationError("malformed_input", "expected a JSON array of integers", "--map");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError("malformed_input", "expected a JSON array of integers", "--map");
    out.push_back(v.get<int>());
  }
  return out;
}

std::set<std::string> parse_checks(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (item != "segal" && item != "cosimplicial" && item != "oracle")
      throw ValidationError("invalid_check", "unknown check '" + item + "'", "--check");
    out.insert(item);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

Json cmd_eval(const Options& o) {
  Polynomial p = read_polys(o, 1, 1)[0];
  if (o.set.empty()) throw ValidationError("missing_input", "--set is required", "--set");
  FinSet x = json_io::read_finset(load(o.set), o.set);
  FinSet px = evaluate(p, x, resolve_budget(o));
  return Json{{"size", px.size()}, {"elements", json_io::write(px)}};
}

Json cmd_hom(const Options& o) {
  auto ps = read_polys(o, 2, 2);
  auto maps = hom_set(ps[0], ps[1], resolve_budget(o));
  Json list = Json::array();
  for (const auto& f : maps) list.push_back(json_io::write(f, false));
  return Json{{"count", maps.size()}, {"maps", list}};
}

Json cmd_compose(const Options& o) {
  auto ps = read_polys(o, 2, 2);
  return json_io::write(compose(ps[0], ps[1], resolve_budget(o)));
}

Json cmd_iterate(const Options& o) {
  Polynomial p = read_polys(o, 1, 1)[0];
  Iterated it = iterate(p, o.n, resolve_budget(o));
  Json levels = Json::array();
  for (std::size_t k = 0; k <= o.n; ++k)
    levels.push_back(Json{{"k", k}, {"positions", it.powers[k].position_count()}, {"directions", it.powers[k].total_size()}});
  return Json{{"levels", levels}, {"result", json_io::write(it.powers[o.n])}};
}

Json cmd_coclosure(const Options& o) {
  auto ps = read_polys(o, 2, 2);
  const Budget budget = resolve_budget(o);
  return Json{{"coclosure", json_io::write(coclosure(ps[0], ps[1], budget))},
              {"unit", json_io::write(adjunction_unit(ps[0], ps[1], budget), false)}};
}

Json cmd_product(const Options& o) {
  auto ps = read_polys(o, 2, 2);
  return json_io::write(product(ps[0], ps[1], resolve_budget(o)));
}

Json cmd_coproduct(const Options& o) {
  auto ps = read_polys(o, 1, static_cast<std::size_t>(-1));
  return json_io::write(coproduct(ps));
}

Json cmd_coequalizer(const Options& o) {
  const std::string& path = require_input(o);
  Json j = load(path);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("f") || !j.contains("g"))
    throw ValidationError("malformed_input", "expected fields 'source', 'target', 'f' and 'g'", path);
  Polynomial src = json_io::read_poly(j["source"], "source");
  Polynomial dst = json_io::read_poly(j["target"], "target");
  PolyMap f = json_io::read_polymap(j["f"], src, dst, "f");
  PolyMap g = json_io::read_polymap(j["g"], src, dst, "g");
  return json_io::write(coequalizer(f, g, resolve_budget(o)));
}

Json cmd_limit(const Options& o, bool is_limit) {
  Json j = load(require_input(o));
  const Budget budget = resolve_budget(o);
  if (j.is_object() && j.contains("polys")) {
    PolyDiagram d = json_io::read_poly_diagram(j);
    return json_io::write(is_limit ? general_limit(d, budget) : general_colimit(d, budget));
  }
  FinDiagram d = json_io::read_set_diagram(j);
  return json_io::write(is_limit ? limit(d, budget) : colimit(d));
}

Json cmd_comonad_check(const Options& o) {
  Comonoid c = json_io::read_comonoid(load(require_input(o)), resolve_budget(o));
  LawReport r = check_laws(c);
  Json out{{"unit_left", r.unit_left}, {"unit_right", r.unit_right}, {"assoc", r.assoc}};
  if (r.failure) {
    Json f{{"law", r.failure->law}, {"position", r.failure->position}, {"component", r.failure->component}};
    if (r.failure->component == "direction") f["direction"] = r.failure->direction;
    out["failure"] = f;
  }
  return out;
}

Json cmd_comonad_to_category(const Options& o) {
  return json_io::write(to_category(json_io::read_comonoid(load(require_input(o)), resolve_budget(o))));
}

Json cmd_category_to_comonad(const Options& o) {
  return json_io::write(from_category(json_io::read_category(load(require_input(o))), resolve_budget(o)));
}

Json cmd_retrofunctor_check(const Options& o) {
  const std::string& path = require_input(o);
  Json j = load(path);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("map"))
    throw ValidationError("malformed_input", "expected fields 'source', 'target' and 'map'", path);
  const Budget budget = resolve_budget(o);
  Comonoid c = json_io::read_comonoid(j["source"], budget, "source");
  Comonoid d = json_io::read_comonoid(j["target"], budget, "target");
  PolyMap r = json_io::read_polymap(j["map"], c.carrier(), d.carrier(), "map");
  return Json{{"retrofunctor", retrofunctor_check(c, d, r, budget)}};
}

Json cmd_simplex_e(const Options& o) {
  simplex::DeltaOpMap f = simplex::make_delta_op(o.n_dim, o.m_dim, parse_int_array(o.map));
  simplex::MonotoneMap g = simplex::e_on_map(f);
  return Json{{"m", g.m}, {"n", g.n}, {"values", g.values}};
}

Json cmd_simplex_verify(const Options& o) {
  if (o.bound < 0) throw ValidationError("out_of_range", "--bound must be non-negative", "--bound");
  return Json{{"bound", o.bound},
              {"functoriality", report(simplex::verify_functoriality(o.bound))},
              {"faithfulness", report(simplex::verify_faithfulness(o.bound))},
              {"image", report(simplex::verify_image(o.bound))},
              {"generators", report(simplex::verify_generators(o.bound))},
              {"identity_transport", report(simplex::verify_identity_transport(o.bound))}};
}

Json cmd_nerve_build(const Options& o) {
  auto checks = parse_checks(o.check);
  const Budget budget = resolve_budget(o);
  Comonoid c = json_io::read_comonoid(load(require_input(o)), budget);
  CosimplicialLevels levels = cosimplicial_assembly(c, o.levels, budget);
  Json lv = Json::array();
  for (std::size_t k = 0; k < levels.x.size(); ++k)
    lv.push_back(Json{{"n", static_cast<int>(k) - 1}, {"size", levels.x[k].set.size()}});
  Json out{{"levels", lv}, {"checks", Json::object()}};
  if (checks.count("segal")) {
    bool holds = true;
    for (std::size_t n = 1; n <= o.levels; ++n) holds = holds && segal_check(c, n, budget).holds;
    out["checks"]["segal"] = holds;
  }
  if (checks.count("cosimplicial")) out["checks"]["cosimplicial"] = report(check_cosimplicial_identities(levels));
  if (checks.count("oracle")) out["checks"]["oracle"] = report(oracle_check(c, levels, budget));
  return out;
}

Json error_object(const std::string& code, const std::string& message, const std::string& location) {
  return Json{{"error", Json{{"code", code}, {"message", message}, {"location", location}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite polynomial functors, comonads and their nerves", "polycat"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_budget = [&](CLI::App* sub) { sub->add_option("--budget", o.budget, "Cap on intermediate set sizes"); };
  auto add_polys = [&](CLI::App* sub) { sub->add_option("--poly", o.polys, "Polynomial JSON file")->required(); };
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Input JSON file ('-' for stdin)")->required(); };

  std::vector<std::pair<CLI::App*, std::function<Json()>>> commands;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Json()> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_budget(sub);
    commands.emplace_back(sub, std::move(body));
    return sub;
  };

  add_polys(command(&app, "eval", "Evaluate a polynomial at a finite set", [&] { return cmd_eval(o); }));
  app.get_subcommand("eval")->add_option("--set", o.set, "FinSet JSON file")->required();
  add_polys(command(&app, "hom", "Enumerate maps between two polynomials", [&] { return cmd_hom(o); }));
  add_polys(command(&app, "compose", "Composition product p1 ∘ p2", [&] { return cmd_compose(o); }));
  {
    CLI::App* sub = command(&app, "iterate", "Iterated self-composition", [&] { return cmd_iterate(o); });
    add_polys(sub);
    sub->add_option("--n", o.n, "Number of factors")->required();
  }
  add_polys(command(&app, "coclosure", "Coclosure [p ⟦ p1] and its unit", [&] { return cmd_coclosure(o); }));
  add_polys(command(&app, "product", "Product of two polynomials", [&] { return cmd_product(o); }));
  add_polys(command(&app, "coproduct", "Coproduct of polynomials", [&] { return cmd_coproduct(o); }));
  add_input(command(&app, "coequalizer", "Coequalizer of two polynomial maps", [&] { return cmd_coequalizer(o); }));
  add_input(command(&app, "limit", "Limit of a finite diagram", [&] { return cmd_limit(o, true); }));
  add_input(command(&app, "colimit", "Colimit of a finite diagram", [&] { return cmd_limit(o, false); }));

  CLI::App* comonad = app.add_subcommand("comonad", "Polynomial comonads");
  comonad->require_subcommand(1, 1);
  add_input(command(comonad, "check", "Check the comonoid laws", [&] { return cmd_comonad_check(o); }));
  add_input(command(comonad, "to-category", "The category of a comonoid", [&] { return cmd_comonad_to_category(o); }));

  CLI::App* category = app.add_subcommand("category", "Small categories");
  category->require_subcommand(1, 1);
  add_input(command(category, "to-comonad", "The comonoid of a category", [&] { return cmd_category_to_comonad(o); }));

  CLI::App* retro = app.add_subcommand("retrofunctor", "Maps of comonoids");
  retro->require_subcommand(1, 1);
  add_input(command(retro, "check", "Check that a map is a retrofunctor", [&] { return cmd_retrofunctor_check(o); }));

  CLI::App* simplex_cmd = app.add_subcommand("simplex", "The simplex category and the functor e");
  simplex_cmd->require_subcommand(1, 1);
  {
    CLI::App* sub = command(simplex_cmd, "e", "Apply e to a map {1..n} -> {1..m}", [&] { return cmd_simplex_e(o); });
    sub->add_option("--map", o.map, "JSON integer array of values f(1..n)")->required();
    sub->add_option("--m", o.m_dim, "Size of the codomain {1..m}")->required();
    sub->add_option("--n", o.n_dim, "Size of the domain {1..n}")->required();
    CLI::App* verify = command(simplex_cmd, "verify", "Exhaustive checks of e", [&] { return cmd_simplex_verify(o); });
    verify->add_option("--bound", o.bound, "Largest dimension checked")->required();
  }

  CLI::App* nerve = app.add_subcommand("nerve", "The nerve construction of a comonoid");
  nerve->require_subcommand(1, 1);
  {
    CLI::App* sub = command(nerve, "build", "Build X_{-1}..X_N and run checks", [&] { return cmd_nerve_build(o); });
    add_input(sub);
    sub->add_option("--levels", o.levels, "Depth N");
    sub->add_option("--check", o.check, "Comma-separated: segal, cosimplicial, oracle");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "polycat: " << e.what() << "\n";
    return kUsage;
  }

  for (auto& [sub, body] : commands) {
    if (!sub->parsed()) continue;
    try {
      out << body().dump(2) << "\n";
      return kOk;
    } catch (const ValidationError& e) {
      out << error_object(e.code(), e.what(), e.location()).dump(2) << "\n";
      return kValidation;
    } catch (const BudgetExceeded& e) {
      out << error_object("budget_exceeded", e.what(), "--budget").dump(2) << "\n";
      return kBudget;
    } catch (const std::exception& e) {
      out << error_object("internal", e.what(), "").dump(2) << "\n";
      return kInternal;
    }
  }
  err << "polycat: no command given\n";
  return kUsage;
}

}  // namespace polycat::cli
