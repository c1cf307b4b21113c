#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polycat/comonad.hpp"
#include "polycat/json_io.hpp"

namespace polycat::testing {

inline std::filesystem::path data_dir() { return POLYCAT_TEST_DATA; }

inline json_io::Json load_json(const std::string& relative) {
  std::ifstream in(data_dir() / relative);
  std::stringstream ss;
  ss << in.rdbuf();
  return json_io::parse(ss.str(), relative);
}

inline std::vector<std::string> corpus_names() {
  return {"chain_3",   "discrete_2",    "discrete_3",  "idempotent", "left_zero", "parallel_composite",
          "terminal",  "v_poset",       "walking_arrow", "walking_iso", "z2",      "z3"};
}

inline Category load_category(const std::string& name) {
  return json_io::read_category(load_json("categories/" + name + ".json"));
}

inline Comonoid corpus_comonoid(const std::string& name) { return from_category(load_category(name)); }

/// Σ_b y^{sizes[b]} with positions "p0", "p1", ... and directions "e0", "e1", ...
inline Polynomial poly_of(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> names;
  std::vector<FinSet> dirs;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    names.push_back("p" + std::to_string(b));
    std::vector<std::string> ds;
    for (std::size_t e = 0; e < sizes[b]; ++e) ds.push_back("e" + std::to_string(e));
    dirs.emplace_back(std::move(ds));
  }
  return Polynomial(FinSet(std::move(names)), std::move(dirs));
}

inline FinSet set_of(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(prefix + std::to_string(i));
  return FinSet(std::move(xs));
}

/// n^k without saturation, for small test-side counts.
inline std::size_t ipow(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= n;
  return r;
}

}  // namespace polycat::testing

namespace polycat::testing {

/// Every function {0..a-1} -> {0..b-1}, as index tables in odometer order.
inline std::vector<std::vector<std::size_t>> all_functions(std::size_t a, std::size_t b) {
  std::vector<std::vector<std::size_t>> out;
  if (a > 0 && b == 0) return out;
  std::vector<std::size_t> t(a, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = a;
    while (k > 0 && t[k - 1] + 1 == b) t[--k] = 0;
    if (k == 0) break;
    ++t[k - 1];
  }
  return out;
}

}  // namespace polycat::testing
