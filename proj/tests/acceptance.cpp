// Acceptance suite: one PASS/FAIL line per criterion. All criteria are exact
// (zero failures tolerated); there are no numeric tolerances.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polycat/bilimits.hpp"
#include "polycat/cli.hpp"
#include "polycat/comonad.hpp"
#include "polycat/json_io.hpp"
#include "polycat/label.hpp"
#include "polycat/monoidal.hpp"
#include "polycat/nerve.hpp"
#include "polycat/simplex.hpp"
#include "support.hpp"

namespace polycat {
namespace {

using testing::all_functions;
using testing::ipow;
using testing::set_of;

struct Outcome {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

std::string describe(const Polynomial& p) {
  std::string s = "[";
  for (std::size_t b = 0; b < p.position_count(); ++b) s += (b ? "," : "") + std::to_string(p.directions(b).size());
  return s + "]";
}

// 1. (p1∘p2)(X) ≅ p1(p2(X)).
Outcome composition() {
  Outcome o;
  const Budget big{2'000'000};
  auto polys = small_polynomials(3, 3);
  for (const auto& p1 : polys)
    for (const auto& p2 : polys)
      for (std::size_t x = 0; x <= 3; ++x) {
        // Cardinalities from the closed formulas.
        std::size_t px = 0;
        for (std::size_t b = 0; b < p2.position_count(); ++b) px += ipow(x, p2.directions(b).size());
        std::size_t nested = 0;
        for (std::size_t b = 0; b < p1.position_count(); ++b) nested += ipow(px, p1.directions(b).size());
        std::size_t composite = 0;
        for (std::size_t b1 = 0; b1 < p1.position_count(); ++b1)
          for (const auto& f : all_functions(p1.directions(b1).size(), p2.position_count())) {
            std::size_t dirs = 0;
            for (auto b2 : f) dirs += p2.directions(b2).size();
            composite += ipow(x, dirs);
          }
        const std::string what = describe(p1) + "∘" + describe(p2) + " at |X|=" + std::to_string(x);
        CompositionCount c = composition_bijection_check(p1, p2, x, big);
        o.expect(c.bijective && c.composite_size == composite && c.nested_size == nested, what);
        // The label-level comparison map on the smaller instances.
        if (composite <= 5000) {
          SetMap cmp = evaluation_comparison(p1, p2, set_of(x), big);
          o.expect(cmp.is_bijective() && cmp.src() == evaluate(compose(p1, p2, big), set_of(x), big) &&
                       cmp.dst() == evaluate(p1, evaluate(p2, set_of(x), big), big),
                   what + " (labels)");
        }
      }
  o.detail = std::to_string(polys.size()) + " polynomial classes squared, |X| ≤ 3";
  return o;
}

// 2. Products and coproducts satisfy their universal properties.
Outcome products() {
  Outcome o;
  auto probes = small_polynomials(2, 2);
  for (const auto& p1 : probes)
    for (const auto& p2 : probes) {
      const std::string what = describe(p1) + "," + describe(p2);
      std::vector<Polynomial> ps{p1, p2};
      PolyDiagram d(Shape::discrete({"0", "1"}), ps, {});
      PolyCone prod = product(p1, p2);
      bool shape = prod.apex.position_count() == p1.position_count() * p2.position_count();
      for (std::size_t i = 0; i < p1.position_count(); ++i)
        for (std::size_t j = 0; j < p2.position_count(); ++j) {
          const std::size_t k = prod.apex.positions().index_of(label::pair(p1.positions()[i], p2.positions()[j]));
          shape = shape && prod.apex.directions(k).size() == p1.directions(i).size() + p2.directions(j).size();
        }
      o.expect(shape, "product formula " + what);
      o.expect(limit_universal_check(d, prod, probes), "product universal " + what);
      PolyCone sum = coproduct(ps);
      bool sum_shape = sum.apex.position_count() == p1.position_count() + p2.position_count();
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t b = 0; b < ps[k].position_count(); ++b)
          sum_shape = sum_shape && sum.apex.directions(sum.legs[k].position(b)) == ps[k].directions(b);
      o.expect(sum_shape, "coproduct formula " + what);
      o.expect(colimit_universal_check(d, sum, probes), "coproduct universal " + what);
    }
  o.detail = std::to_string(probes.size()) + " probes, all pairs";
  return o;
}

// 3. coeq(y^X ⇉ y^A + y^B) ≅ y^{A ×_X B}.
Outcome coequalizers() {
  Outcome o;
  auto probes = small_polynomials(2, 2);
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t a = 0; a <= 3; ++a)
      for (std::size_t b = 0; b <= 3; ++b) {
        Polynomial yx = representable(set_of(x));
        Polynomial target(FinSet{"A", "B"}, {set_of(a, "a"), set_of(b, "b")});
        for (const auto& ft : all_functions(a, x))
          for (const auto& gt : all_functions(b, x)) {
            std::size_t pairs = 0;
            for (auto i : ft)
              for (auto j : gt) pairs += i == j;
            PolyMap f(yx, target, {0}, {ft}), g(yx, target, {1}, {gt});
            PolyCone c = coequalizer(f, g);
            const std::string what = "|X|=" + std::to_string(x) + " |A|=" + std::to_string(a) + " |B|=" + std::to_string(b);
            o.expect(iso_check(c.apex, representable(set_of(pairs, "p"))).has_value(), what);
            if (x <= 2 && a <= 2 && b <= 2)
              o.expect(universal_property_check(c.apex, c.legs[0], f, g, probes), what + " (universal)");
          }
      }
  return o;
}

// 4. Hom([p⟦p1], p2) ≅ Hom(p1, p2∘p) through the unit.
Outcome adjunction() {
  Outcome o;
  auto polys = small_polynomials(2, 2);
  for (const auto& p : polys)
    for (const auto& p1 : polys)
      for (const auto& p2 : polys) {
        AdjunctionReport r = adjunction_check(p, p1, p2);
        const std::size_t left = hom_count(coclosure(p, p1), p2), right = hom_count(p1, compose(p2, p));
        o.expect(r.bijective && r.left_count == left && r.right_count == right && left == right,
                 describe(p) + "," + describe(p1) + "," + describe(p2));
      }
  o.detail = std::to_string(polys.size()) + "^3 triples";
  return o;
}

// 5. Categories and comonoids correspond.
Outcome roundtrip() {
  Outcome o;
  for (const auto& name : testing::corpus_names()) {
    Category cat = testing::load_category(name);
    Comonoid c = from_category(cat);
    o.expect(check_laws(c).lawful(), name + " laws");
    o.expect(to_category(c) == cat, name + " to_category∘from_category");
    o.expect(from_category(to_category(c)) == canonical_relabel(c), name + " from_category∘to_category");
  }
  // A comonoid whose direction names repeat across positions.
  Polynomial p(FinSet{"a", "b"}, {FinSet{"i", "j"}, FinSet{"i"}});
  Polynomial pp = compose(p, p);
  PolyMap eps = PolyMap::from_labels(p, identity_y(), {{"a", "*"}, {"b", "*"}}, {{"a", {{"*", "i"}}}, {"b", {{"*", "i"}}}});
  PolyMap delta = PolyMap::from_labels(p, pp, {{"a", "(a,{i:a,j:b})"}, {"b", "(b,{i:b})"}},
                                       {{"a", {{"(i,i)", "i"}, {"(i,j)", "j"}, {"(j,i)", "j"}}}, {"b", {{"(i,i)", "i"}}}});
  Comonoid shared(p, eps, delta);
  o.expect(from_category(to_category(shared)) == canonical_relabel(shared), "shared direction names");
  o.expect(to_category(from_category(to_category(shared))) == to_category(shared), "shared direction names, category side");
  o.detail = std::to_string(testing::corpus_names().size()) + " categories + 1 relabelled comonoid";
  return o;
}

// 6. The functor e.
Outcome functor_e() {
  Outcome o;
  constexpr int kBound = 5;
  for (auto [name, r] : std::vector<std::pair<std::string, simplex::VerifyReport>>{
           {"functoriality", simplex::verify_functoriality(kBound)},
           {"faithfulness", simplex::verify_faithfulness(kBound)},
           {"image", simplex::verify_image(kBound)},
           {"generators", simplex::verify_generators(kBound)},
           {"identity transport", simplex::verify_identity_transport(kBound)}}) {
    o.expect(r.passed, name + ": " + r.failure);
    o.detail += (o.detail.empty() ? "" : ", ") + name + " " + std::to_string(r.checked);
  }
  return o;
}

// 7. X_n ≅ E ×_B X_{n-1}, chain counts, cosimplicial identities.
Outcome nerve() {
  Outcome o;
  for (const auto& name : testing::corpus_names()) {
    Comonoid c = testing::corpus_comonoid(name);
    Category cat = to_category(c);
    CosimplicialLevels levels = cosimplicial_assembly(c, 3);
    for (std::size_t n = 1; n <= 3; ++n) o.expect(segal_check(c, n).holds, name + " Segal n=" + std::to_string(n));
    for (int k = -1; k <= 3; ++k)
      o.expect(levels.level(k).size() == nerve_chains(cat, k + 1).size(), name + " |X_" + std::to_string(k) + "|");
    IdentityReport ids = check_cosimplicial_identities(levels);
    o.expect(ids.holds, name + " cosimplicial: " + ids.failure);
    IdentityReport oracle = oracle_check(c, levels);
    o.expect(oracle.holds, name + " oracle: " + oracle.failure);
  }
  Comonoid wa = testing::corpus_comonoid("walking_arrow");
  o.expect(x_level(wa, 1).size() == 3 && x_level(wa, 2).size() == 4 && x_level(wa, 3).size() == 5,
           "walking arrow |X_0|,|X_1|,|X_2| = 3,4,5");
  o.detail = std::to_string(testing::corpus_names().size()) + " comonoids, depth 3";
  return o;
}

// 8. Π_b Σ_b' m ≅ Σ_f Π_b m(b, f(b)).
Outcome distributivity() {
  Outcome o;
  std::vector<FinSet> fibers;
  for (std::size_t k = 0; k <= 3; ++k) fibers.push_back(set_of(k, "m"));
  for (std::size_t nb = 0; nb <= 3; ++nb)
    for (std::size_t nbp = 0; nbp <= 3; ++nbp) {
      FinSet b = set_of(nb, "b"), bp = set_of(nbp, "c");
      for (const auto& sizes : all_functions(nb * nbp, 4)) {
        std::vector<std::vector<FinSet>> m(nb, std::vector<FinSet>(nbp));
        std::size_t lhs = 1;
        for (std::size_t i = 0; i < nb; ++i) {
          std::size_t row = 0;
          for (std::size_t j = 0; j < nbp; ++j) {
            m[i][j] = fibers[sizes[i * nbp + j]];
            row += sizes[i * nbp + j];
          }
          lhs *= row;
        }
        std::size_t rhs = 0;
        for (const auto& f : all_functions(nb, nbp)) {
          std::size_t prod = 1;
          for (std::size_t i = 0; i < nb; ++i) prod *= sizes[i * nbp + f[i]];
          rhs += prod;
        }
        DistributivityReport r = distributivity_check(b, bp, m);
        o.expect(r.holds && r.product_of_sums == lhs && r.sum_of_products == rhs,
                 "|B|=" + std::to_string(nb) + " |B'|=" + std::to_string(nbp));
      }
    }
  return o;
}

// 9. Repeated CLI runs give byte-identical output matching the golden files.
struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  json_io::Json manifest = testing::load_json("golden/manifest.json");
  for (const auto& entry : manifest) out.push_back({entry["name"], entry["args"].get<std::vector<std::string>>(), entry["exit"]});
  return out;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::filesystem::path golden_path(const std::string& name) { return testing::data_dir() / "golden" / (name + ".out"); }

Outcome determinism() {
  Outcome o;
  const auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(testing::data_dir());
  for (const auto& c : golden_cases()) {
    int code1 = 0, code2 = 0;
    const std::string first = run_cli(c.args, code1);
    const std::string second = run_cli(c.args, code2);
    std::ifstream in(golden_path(c.name), std::ios::binary);
    std::stringstream golden;
    golden << in.rdbuf();
    o.expect(!golden.str().empty(), c.name + " golden file");
    o.expect(first == second && code1 == code2, c.name + " repeat");
    o.expect(code1 == c.exit_code, c.name + " exit code");
    o.expect(first == golden.str(), c.name + " golden");
  }
  std::filesystem::current_path(cwd);
  o.detail = std::to_string(golden_cases().size()) + " commands";
  return o;
}

int update_golden() {
  std::filesystem::current_path(testing::data_dir());
  for (const auto& c : golden_cases()) {
    int code = 0;
    std::ofstream(golden_path(c.name), std::ios::binary) << run_cli(c.args, code);
    std::cout << c.name << " exit " << code << "\n";
  }
  return 0;
}

}  // namespace
}  // namespace polycat

int main(int argc, char** argv) {
  using namespace polycat;
  if (argc > 1 && std::string(argv[1]) == "--update-golden") return update_golden();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 composition formula", composition},
      {"2 product and coproduct", products},
      {"3 coequalizer of representables", coequalizers},
      {"4 coclosure adjunction", adjunction},
      {"5 category/comonoid roundtrip", roundtrip},
      {"6 functor e", functor_e},
      {"7 nerve construction", nerve},
      {"8 finite distributivity", distributivity},
      {"9 CLI determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.failures = 1;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failures == 0 && o.checked > 0;
    failed += !pass;
    std::printf("[%s] criterion %s: %zu checks, %zu failures (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                o.checked, o.failures, secs, o.detail.empty() ? "" : "; ", o.detail.c_str());
    if (!pass) std::printf("       first failure: %s\n", o.first_failure.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
