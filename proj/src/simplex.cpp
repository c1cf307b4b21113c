#include "polycat/simplex.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "polycat/error.hpp"

namespace polycat::simplex {

namespace {

std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::string show(const Word& w) {
  if (w.gens.empty()) return "id[" + std::to_string(w.dim) + "]";
  std::string s;
  for (const auto& g : w.gens)
    s += (s.empty() ? "" : " ") + std::string(g.is_face ? "d" : "s") + "^" + std::to_string(g.n) + "_" +
         std::to_string(g.i);
  return s;
}

}  // namespace

MonotoneMap make_monotone(int m, int n, std::vector<int> values) {
  if (m < -1 || n < -1 || (n == -1 && m != -1))
    throw ValidationError("invalid_map", "no monotone map [" + std::to_string(m) + "] -> [" + std::to_string(n) + "]");
  if (static_cast<int>(values.size()) != m + 1)
    throw ValidationError("invalid_map", "a map out of [m] needs m+1 values");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0 || values[k] > n) throw ValidationError("invalid_map", "value out of range", std::to_string(k));
    if (k > 0 && values[k] < values[k - 1])
      throw ValidationError("invalid_map", "values must be non-decreasing", std::to_string(k));
  }
  return MonotoneMap{m, n, std::move(values)};
}

DeltaOpMap make_delta_op(int n, int m, std::vector<int> values) {
  if (n < 0 || m < 0) throw ValidationError("invalid_map", "sizes must be non-negative");
  if (static_cast<int>(values.size()) != n) throw ValidationError("invalid_map", "a map out of {1..n} needs n values");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 1 || values[k] > m)
      throw ValidationError("invalid_map", "value out of range 1..m", std::to_string(k + 1));
    if (k > 0 && values[k] < values[k - 1])
      throw ValidationError("invalid_map", "values must be non-decreasing", std::to_string(k + 1));
  }
  return DeltaOpMap{n, m, std::move(values)};
}

MonotoneMap identity(int n) {
  std::vector<int> v(n + 1);
  for (int k = 0; k <= n; ++k) v[k] = k;
  return MonotoneMap{n, n, std::move(v)};
}

MonotoneMap face(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw ValidationError("out_of_range", "face index out of range");
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k < i ? k : k + 1;
  return MonotoneMap{n - 1, n, std::move(v)};
}

MonotoneMap degeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw ValidationError("out_of_range", "degeneracy index out of range");
  std::vector<int> v(n + 2);
  for (int k = 0; k <= n + 1; ++k) v[k] = k <= i ? k : k - 1;
  return MonotoneMap{n + 1, n, std::move(v)};
}

MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.n != g.m) throw ValidationError("shape_mismatch", "maps are not composable");
  std::vector<int> v(f.values.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = g.values[f.values[k]];
  return MonotoneMap{f.m, g.n, std::move(v)};
}

DeltaOpMap opposite(const MonotoneMap& g) {
  std::vector<int> v(g.values.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = g.values[k] + 1;
  return DeltaOpMap{g.m + 1, g.n + 1, std::move(v)};
}

DeltaOpMap compose_op(const DeltaOpMap& g, const DeltaOpMap& f) {
  if (f.m != g.n) throw ValidationError("shape_mismatch", "maps are not composable");
  std::vector<int> v(f.values.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = g.values[f.values[k] - 1];
  return DeltaOpMap{f.n, g.m, std::move(v)};
}

DeltaOpMap identity_op(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k + 1;
  return DeltaOpMap{n, n, std::move(v)};
}

MonotoneMap e_on_map(const DeltaOpMap& f) {
  // f extended by f(0) = 0; values are non-decreasing, so the preimage of
  // (≤ i) is an initial segment and its maximum is found by scanning.
  std::vector<int> v(f.m + 1);
  int k = 0;
  for (int i = 0; i <= f.m; ++i) {
    while (k < f.n && f.values[k] <= i) ++k;
    v[i] = k;
  }
  return MonotoneMap{f.m, f.n, std::move(v)};
}

bool image_membership(const MonotoneMap& f) {
  return f.m >= 1 && f.n >= 1 && f.values.front() == 0 && f.values.back() == f.n;
}

DeltaOpMap e_inverse(const MonotoneMap& f) {
  if (!image_membership(f)) throw ValidationError("not_in_image", "map does not fix both endpoints");
  std::vector<int> v(f.n);
  for (int i = 1; i <= f.m; ++i)
    for (int j = f.values[i - 1] + 1; j <= f.values[i]; ++j) v[j - 1] = i;
  return DeltaOpMap{f.n, f.m, std::move(v)};
}

MonotoneMap e_plus(const MonotoneMap& g) {
  if (g.m == -1) return MonotoneMap{g.n + 1, 0, std::vector<int>(g.n + 2, 0)};
  return e_on_map(opposite(g));
}

std::vector<MonotoneMap> all_monotone(int m, int n) {
  std::vector<MonotoneMap> out;
  if (m == -1) return {MonotoneMap{-1, n, {}}};
  if (n < 0) return out;
  std::vector<int> v(m + 1, 0);
  while (true) {
    out.push_back(MonotoneMap{m, n, v});
    int k = m;
    while (k >= 0 && v[k] == n) --k;
    if (k < 0) break;
    ++v[k];
    for (int j = k + 1; j <= m; ++j) v[j] = v[k];
  }
  return out;
}

std::vector<DeltaOpMap> all_delta_op(int n, int m) {
  std::vector<DeltaOpMap> out;
  for (auto& f : all_monotone(n - 1, m - 1)) out.push_back(opposite(f));
  return out;
}

Factorization factor(const MonotoneMap& f) {
  Factorization w{f.m, f.n, {}, {}};
  std::vector<bool> hit(f.n + 1, false);
  for (int v : f.values) hit[v] = true;
  for (int i = f.n; i >= 0; --i)
    if (!hit[i]) w.faces.push_back(i);
  for (int j = 0; j + 1 <= f.m; ++j)
    if (f.values[j] == f.values[j + 1]) w.degeneracies.push_back(j);
  return w;
}

MonotoneMap evaluate(const Factorization& w) {
  // Degeneracies first (rightmost applied first), then faces.
  MonotoneMap acc = identity(w.m);
  int dim = w.m;
  for (auto it = w.degeneracies.rbegin(); it != w.degeneracies.rend(); ++it) {
    acc = compose_monotone(degeneracy(dim - 1, *it), acc);
    --dim;
  }
  for (auto it = w.faces.rbegin(); it != w.faces.rend(); ++it) {
    acc = compose_monotone(face(dim + 1, *it), acc);
    ++dim;
  }
  return acc;
}

MonotoneMap evaluate(const Word& w) {
  MonotoneMap acc = identity(w.dim);
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
    acc = compose_monotone(it->is_face ? face(it->n, it->i) : degeneracy(it->n, it->i), acc);
  return acc;
}

Word transport(const Word& w) {
  Word out;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    if (it->is_face) out.gens.push_back({false, it->n, it->i});
    else out.gens.push_back({true, it->n + 2, it->i + 1});
  }
  if (out.gens.empty()) {
    out.dim = w.dim + 1;
  } else {
    const Generator& last = out.gens.back();
    out.dim = last.is_face ? last.n - 1 : last.n + 1;
  }
  return out;
}

namespace {

Generator d(int n, int i) { return {true, n, i}; }
Generator s(int n, int i) { return {false, n, i}; }
Word word(std::vector<Generator> gens) {
  const Generator& last = gens.back();
  return Word{last.is_face ? last.n - 1 : last.n + 1, std::move(gens)};
}

}  // namespace

std::vector<Relation> identity_family(int family, int bound) {
  std::vector<Relation> out;
  switch (family) {
    case 1:  // d^n_j d^{n-1}_i = d^n_i d^{n-1}_{j-1}, i < j
      for (int n = 2; n <= bound; ++n)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i) out.push_back({word({d(n, j), d(n - 1, i)}), word({d(n, i), d(n - 1, j - 1)})});
      break;
    case 2:  // s^n_j d^{n+1}_i = d^n_i s^{n-1}_{j-1}, i < j
      for (int n = 1; n + 1 <= bound; ++n)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            out.push_back({word({s(n, j), d(n + 1, i)}), word({d(n, i), s(n - 1, j - 1)})});
      break;
    case 3:  // s^n_j d^{n+1}_i = id, i = j, j+1
      for (int n = 0; n + 1 <= bound; ++n)
        for (int j = 0; j <= n; ++j)
          for (int i = j; i <= j + 1; ++i) out.push_back({word({s(n, j), d(n + 1, i)}), Word{n, {}}});
      break;
    case 4:  // s^n_j d^{n+1}_i = d^n_{i-1} s^{n-1}_j, i > j+1
      for (int n = 1; n + 1 <= bound; ++n)
        for (int j = 0; j <= n; ++j)
          for (int i = j + 2; i <= n + 1; ++i)
            out.push_back({word({s(n, j), d(n + 1, i)}), word({d(n, i - 1), s(n - 1, j)})});
      break;
    case 5:  // s^{n-1}_j s^n_i = s^{n-1}_i s^n_{j+1}, i ≤ j
      for (int n = 1; n + 1 <= bound; ++n)
        for (int j = 0; j <= n - 1; ++j)
          for (int i = 0; i <= j; ++i)
            out.push_back({word({s(n - 1, j), s(n, i)}), word({s(n - 1, i), s(n, j + 1)})});
      break;
    default:
      throw ValidationError("out_of_range", "identity families are numbered 1..5");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verifiers

VerifyReport verify_functoriality(int bound) {
  VerifyReport r;
  auto fail = [&](std::string what) {
    if (r.passed) r.failure = std::move(what);
    r.passed = false;
  };
  for (int n = 1; n <= bound; ++n) {
    ++r.checked;
    if (!(e_on_map(identity_op(n)) == identity(n))) fail("identity at " + std::to_string(n));
  }
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; m <= bound; ++m) {
      auto fs = all_delta_op(n, m);
      for (int rr = 1; rr <= bound; ++rr) {
        auto gs = all_delta_op(m, rr);
        for (const auto& f : fs) {
          const MonotoneMap ef = e_on_map(f);
          for (const auto& g : gs) {
            ++r.checked;
            if (!(e_on_map(compose_op(g, f)) == compose_monotone(ef, e_on_map(g))))
              fail("f=" + show(f.values) + " g=" + show(g.values));
          }
        }
      }
    }
  return r;
}

VerifyReport verify_faithfulness(int bound) {
  VerifyReport r;
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; m <= bound; ++m) {
      std::set<std::vector<int>> images;
      auto fs = all_delta_op(n, m);
      for (const auto& f : fs) images.insert(e_on_map(f).values);
      ++r.checked;
      if (images.size() != fs.size() && r.passed) {
        r.passed = false;
        r.failure = "hom-set " + std::to_string(m - 1) + " -> " + std::to_string(n - 1);
      }
    }
  return r;
}

VerifyReport verify_image(int bound) {
  VerifyReport r;
  auto fail = [&](std::string what) {
    if (r.passed) r.failure = std::move(what);
    r.passed = false;
  };
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      std::set<std::vector<int>> images;
      if (m >= 1 && n >= 1)
        for (const auto& f : all_delta_op(n, m)) {
          images.insert(e_on_map(f).values);
          ++r.checked;
          if (!(e_inverse(e_on_map(f)) == f)) fail("e_inverse(e(" + show(f.values) + "))");
        }
      for (const auto& f : all_monotone(m, n)) {
        ++r.checked;
        const bool preimage = images.count(f.values) > 0;
        if (preimage != image_membership(f)) fail("membership of " + show(f.values));
        if (preimage && !(e_on_map(e_inverse(f)) == f)) fail("e(e_inverse(" + show(f.values) + "))");
      }
    }
  return r;
}

VerifyReport verify_generators(int bound) {
  VerifyReport r;
  auto fail = [&](std::string what) {
    if (r.passed) r.failure = std::move(what);
    r.passed = false;
  };
  for (int n = 1; n <= bound; ++n)
    for (int i = 0; i <= n; ++i) {
      ++r.checked;
      if (!(e_on_map(opposite(face(n, i))) == degeneracy(n, i)))
        fail("d^" + std::to_string(n) + "_" + std::to_string(i));
    }
  for (int n = 1; n + 1 <= bound; ++n)
    for (int i = 1; i <= n; ++i) {
      ++r.checked;
      if (!(e_on_map(opposite(degeneracy(n - 1, i - 1))) == face(n + 1, i)))
        fail("s^" + std::to_string(n - 1) + "_" + std::to_string(i - 1));
    }
  return r;
}

VerifyReport verify_identity_transport(int bound) {
  VerifyReport r;
  auto fail = [&](std::string what) {
    if (r.passed) r.failure = std::move(what);
    r.passed = false;
  };
  for (int family = 1; family <= 5; ++family) {
    std::set<std::pair<Word, Word>> mirror;
    for (auto& rel : identity_family(6 - family, bound + 2)) {
      mirror.emplace(rel.lhs, rel.rhs);
      mirror.emplace(rel.rhs, rel.lhs);
    }
    for (const auto& rel : identity_family(family, bound)) {
      ++r.checked;
      const std::string name = "family " + std::to_string(family) + ": " + show(rel.lhs) + " = " + show(rel.rhs);
      if (!(evaluate(rel.lhs) == evaluate(rel.rhs))) fail(name + " does not hold");
      Word lhs = transport(rel.lhs), rhs = transport(rel.rhs);
      if (!(evaluate(lhs) == evaluate(rhs))) fail(name + " is not preserved");
      if (!mirror.count({lhs, rhs})) fail(name + " is not sent to family " + std::to_string(6 - family));
    }
  }
  return r;
}

}  // namespace polycat::simplex
