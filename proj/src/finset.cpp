#include "polycat/finset.hpp"

#include <algorithm>

#include "polycat/label.hpp"
#include "polycat/union_find.hpp"

namespace polycat {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_storage() {
  static const auto storage = std::make_shared<const std::vector<std::string>>();
  return storage;
}

}  // namespace

// ---------------------------------------------------------------------------
// FinSet

FinSet::FinSet() : elems_(empty_storage()) {}

FinSet::FinSet(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw ValidationError("duplicate_label", "duplicate label '" + *dup + "'", *dup);
  elems_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FinSet::FinSet(std::initializer_list<std::string> labels) : FinSet(std::vector<std::string>(labels)) {}

FinSet FinSet::singleton(std::string label) { return FinSet(std::vector<std::string>{std::move(label)}); }

std::optional<std::size_t> FinSet::find(std::string_view label) const {
  auto it = std::lower_bound(elems_->begin(), elems_->end(), label,
                             [](const std::string& a, std::string_view b) { return std::string_view(a) < b; });
  if (it == elems_->end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - elems_->begin());
}

std::size_t FinSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ValidationError("unknown_label", "label '" + std::string(label) + "' is not an element", std::string(label));
}

bool operator==(const FinSet& a, const FinSet& b) { return a.elems_ == b.elems_ || *a.elems_ == *b.elems_; }

// ---------------------------------------------------------------------------
// SetMap

SetMap::SetMap(FinSet src, FinSet dst, std::vector<std::size_t> image)
    : src_(std::move(src)), dst_(std::move(dst)), image_(std::move(image)) {
  if (image_.size() != src_.size())
    throw ValidationError("invalid_map", "map table has " + std::to_string(image_.size()) +
                                             " entries for a source of size " + std::to_string(src_.size()));
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] >= dst_.size())
      throw ValidationError("invalid_map", "image of '" + src_[i] + "' lies outside the codomain", src_[i]);
}

SetMap SetMap::identity(const FinSet& s) {
  std::vector<std::size_t> image(s.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return SetMap(s, s, std::move(image));
}

SetMap SetMap::from_labels(FinSet src, FinSet dst, const std::map<std::string, std::string>& table) {
  std::vector<std::size_t> image(src.size());
  if (table.size() != src.size())
    throw ValidationError("invalid_map", "map table must assign every source element exactly once");
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = table.find(src[i]);
    if (it == table.end()) throw ValidationError("invalid_map", "no image for '" + src[i] + "'", src[i]);
    auto j = dst.find(it->second);
    if (!j) throw ValidationError("invalid_map", "image '" + it->second + "' is not in the codomain", src[i]);
    image[i] = *j;
  }
  return SetMap(std::move(src), std::move(dst), std::move(image));
}

SetMap SetMap::constant(FinSet src, FinSet dst, std::size_t value) {
  std::vector<std::size_t> image(src.size(), value);
  return SetMap(std::move(src), std::move(dst), std::move(image));
}

bool SetMap::is_injective() const {
  std::vector<bool> hit(dst_.size(), false);
  for (auto j : image_) {
    if (hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

bool SetMap::is_surjective() const {
  std::vector<bool> hit(dst_.size(), false);
  std::size_t count = 0;
  for (auto j : image_)
    if (!hit[j]) {
      hit[j] = true;
      ++count;
    }
  return count == dst_.size();
}

SetMap compose(const SetMap& g, const SetMap& f) {
  if (!(f.dst() == g.src())) throw ValidationError("shape_mismatch", "cannot compose: codomain and domain differ");
  std::vector<std::size_t> image(f.src().size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = g(f(i));
  return SetMap(f.src(), g.dst(), std::move(image));
}

std::vector<std::vector<std::size_t>> enumerate_tables(std::size_t a, std::size_t b, const Budget& budget) {
  std::size_t count = saturating_pow(b, a);
  budget.check("map enumeration", count);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  if (count == 0) return out;
  std::vector<std::size_t> table(a, 0);
  while (true) {
    out.push_back(table);
    std::size_t k = a;
    while (k > 0) {
      --k;
      if (++table[k] < b) break;
      table[k] = 0;
      if (k == 0) return out;
    }
    if (a == 0) return out;
  }
}

std::string map_label(const FinSet& a, const FinSet& b, std::span<const std::size_t> table) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += a[i];
    out += ':';
    out += b[table[i]];
  }
  out += '}';
  return out;
}

FinSet map_set(const FinSet& a, const FinSet& b, const Budget& budget) {
  auto tables = enumerate_tables(a.size(), b.size(), budget);
  std::vector<std::string> labels;
  labels.reserve(tables.size());
  for (const auto& t : tables) labels.push_back(map_label(a, b, t));
  return FinSet(std::move(labels));
}

// ---------------------------------------------------------------------------
// Shape

Shape::Shape(std::vector<std::string> objects, std::vector<Arrow> arrows,
             const std::map<std::pair<std::string, std::string>, std::string>& composites)
    : objects_(std::move(objects)), arrows_(std::move(arrows)) {
  {
    std::vector<std::string> sorted = objects_;
    std::sort(sorted.begin(), sorted.end());
    if (auto d = std::adjacent_find(sorted.begin(), sorted.end()); d != sorted.end())
      throw ValidationError("duplicate_object", "duplicate object '" + *d + "'", *d);
  }
  std::map<std::string, std::size_t> arrow_ix;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& arr = arrows_[a];
    if (arr.name == kIdentityName)
      throw ValidationError("invalid_shape", "arrow name 'id' is reserved", "arrows/" + arr.name);
    if (!arrow_ix.emplace(arr.name, a).second)
      throw ValidationError("duplicate_arrow", "duplicate arrow '" + arr.name + "'", "arrows/" + arr.name);
    src_.push_back(object_index(arr.src));
    tgt_.push_back(object_index(arr.tgt));
  }

  const std::size_t n = arrows_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-2);
  comp_.assign(n * n, kUnset);
  for (const auto& [key, value] : composites) {
    const std::string where = "compose/" + key.first + "∘" + key.second;
    auto gi = arrow_ix.find(key.first);
    auto fi = arrow_ix.find(key.second);
    if (gi == arrow_ix.end() || fi == arrow_ix.end())
      throw ValidationError("invalid_shape", "composite refers to an unknown arrow", where);
    std::size_t g = gi->second, f = fi->second;
    if (!composable(g, f)) throw ValidationError("invalid_shape", "composite of non-composable arrows", where);
    std::size_t h;
    if (value == kIdentityName) {
      if (src_[f] != tgt_[g]) throw ValidationError("invalid_shape", "identity composite must be an endo-arrow", where);
      h = kIdentity;
    } else {
      auto hi = arrow_ix.find(value);
      if (hi == arrow_ix.end()) throw ValidationError("invalid_shape", "composite is an unknown arrow", where);
      h = hi->second;
      if (src_[h] != src_[f] || tgt_[h] != tgt_[g])
        throw ValidationError("invalid_shape", "composite has the wrong source or target", where);
    }
    comp_[g * n + f] = h;
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (composable(g, f) && comp_[g * n + f] == kUnset)
        throw ValidationError("invalid_shape", "composition table is missing a composable pair",
                              "compose/" + arrows_[g].name + "∘" + arrows_[f].name);

  // Associativity, treating kIdentity as a unit.
  auto mul = [&](std::size_t g, std::size_t f) -> std::size_t {
    if (g == kIdentity) return f;
    if (f == kIdentity) return g;
    return comp_[g * n + f];
  };
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      if (!composable(h, g)) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (!composable(g, f)) continue;
        if (mul(mul(h, g), f) != mul(h, mul(g, f)))
          throw ValidationError("invalid_shape", "composition table is not associative",
                                "compose/" + arrows_[h].name + "∘" + arrows_[g].name + "∘" + arrows_[f].name);
      }
    }
}

Shape Shape::discrete(std::vector<std::string> objects) { return Shape(std::move(objects), {}); }

Shape Shape::parallel_pair(std::string src, std::string tgt) {
  std::vector<Arrow> arrows{{"f", src, tgt}, {"g", src, tgt}};
  return Shape({std::move(src), std::move(tgt)}, std::move(arrows));
}

Shape Shape::cospan(std::string left, std::string apex, std::string right) {
  std::vector<Arrow> arrows{{"l", left, apex}, {"r", right, apex}};
  return Shape({std::move(left), std::move(apex), std::move(right)}, std::move(arrows));
}

std::size_t Shape::object_index(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  throw ValidationError("unknown_object", "unknown object '" + std::string(name) + "'", std::string(name));
}

std::size_t Shape::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  throw ValidationError("unknown_arrow", "unknown arrow '" + std::string(name) + "'", std::string(name));
}

Shape Shape::opposite() const {
  std::vector<Arrow> arrows;
  for (const auto& a : arrows_) arrows.push_back({a.name, a.tgt, a.src});
  std::map<std::pair<std::string, std::string>, std::string> composites;
  const std::size_t n = arrows_.size();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (composable(g, f)) {
        std::size_t h = comp_[g * n + f];
        composites[{arrows_[f].name, arrows_[g].name}] =
            h == kIdentity ? std::string(kIdentityName) : arrows_[h].name;
      }
  return Shape(objects_, std::move(arrows), composites);
}

// ---------------------------------------------------------------------------
// FinDiagram

FinDiagram::FinDiagram(Shape shape, std::vector<FinSet> sets, std::vector<SetMap> maps)
    : shape_(std::move(shape)), sets_(std::move(sets)), maps_(std::move(maps)) {
  if (sets_.size() != shape_.object_count())
    throw ValidationError("shape_mismatch", "diagram must assign a set to every object");
  if (maps_.size() != shape_.arrow_count())
    throw ValidationError("shape_mismatch", "diagram must assign a map to every arrow");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    if (!(maps_[a].src() == sets_[shape_.src(a)]) || !(maps_[a].dst() == sets_[shape_.tgt(a)]))
      throw ValidationError("shape_mismatch", "map does not connect the sets of its arrow's endpoints",
                            "maps/" + shape_.arrows()[a].name);
  }
  const std::size_t n = shape_.arrow_count();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (!shape_.composable(g, f)) continue;
      std::size_t h = shape_.composite(g, f);
      SetMap gf = compose(maps_[g], maps_[f]);
      bool ok = h == Shape::kIdentity ? gf == SetMap::identity(sets_[shape_.src(f)]) : gf == maps_[h];
      if (!ok)
        throw ValidationError("not_functorial", "assigned maps do not respect the composition table",
                              "compose/" + shape_.arrows()[g].name + "∘" + shape_.arrows()[f].name);
    }
}

// ---------------------------------------------------------------------------
// Limits and colimits

Cone limit(const FinDiagram& d, const Budget& budget) {
  const Shape& shape = d.shape();
  const std::size_t k = shape.object_count();

  // For each object, the arrows whose endpoints are both assigned once it is.
  std::vector<std::vector<std::size_t>> checks(k);
  for (std::size_t a = 0; a < shape.arrow_count(); ++a)
    checks[std::max(shape.src(a), shape.tgt(a))].push_back(a);

  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> current(k, 0);
  auto search = [&](auto&& self, std::size_t obj) -> void {
    if (obj == k) {
      families.push_back(current);
      budget.check("limit", families.size());
      return;
    }
    for (std::size_t x = 0; x < d.set(obj).size(); ++x) {
      current[obj] = x;
      bool ok = true;
      for (auto a : checks[obj])
        if (d.map(a)(current[shape.src(a)]) != current[shape.tgt(a)]) {
          ok = false;
          break;
        }
      if (ok) self(self, obj + 1);
    }
  };
  search(search, 0);

  std::vector<std::string> labels;
  labels.reserve(families.size());
  std::vector<std::string> parts(k);
  for (const auto& fam : families) {
    for (std::size_t i = 0; i < k; ++i) parts[i] = d.set(i)[fam[i]];
    labels.push_back(label::tuple(parts));
  }
  std::vector<std::string> unsorted = labels;
  FinSet apex(std::move(labels));

  std::vector<std::vector<std::size_t>> leg_tables(k, std::vector<std::size_t>(apex.size()));
  for (std::size_t r = 0; r < families.size(); ++r) {
    std::size_t idx = apex.index_of(unsorted[r]);
    for (std::size_t i = 0; i < k; ++i) leg_tables[i][idx] = families[r][i];
  }
  Cone out{apex, {}};
  for (std::size_t i = 0; i < k; ++i) out.legs.emplace_back(apex, d.set(i), std::move(leg_tables[i]));
  return out;
}

Cone colimit(const FinDiagram& d) {
  const Shape& shape = d.shape();
  const std::size_t k = shape.object_count();
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) offset[i + 1] = offset[i] + d.set(i).size();

  DisjointSet uf(offset[k]);
  for (std::size_t a = 0; a < shape.arrow_count(); ++a) {
    const SetMap& m = d.map(a);
    for (std::size_t x = 0; x < m.src().size(); ++x) uf.unite(offset[shape.src(a)] + x, offset[shape.tgt(a)] + m(x));
  }

  std::vector<std::string> tagged(offset[k]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < d.set(i).size(); ++x)
      tagged[offset[i] + x] = k == 1 ? d.set(i)[x] : label::pair(shape.objects()[i], d.set(i)[x]);

  std::vector<std::size_t> least(offset[k], static_cast<std::size_t>(-1));
  for (std::size_t e = 0; e < offset[k]; ++e) {
    std::size_t r = uf.find(e);
    if (least[r] == static_cast<std::size_t>(-1) || tagged[e] < tagged[least[r]]) least[r] = e;
  }
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < offset[k]; ++e)
    if (uf.find(e) == e) labels.push_back(tagged[least[e]]);
  FinSet apex(std::move(labels));

  Cone out{apex, {}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> table(d.set(i).size());
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = apex.index_of(tagged[least[uf.find(offset[i] + x)]]);
    out.legs.emplace_back(d.set(i), apex, std::move(table));
  }
  return out;
}

bool is_cone(const FinDiagram& d, const Cone& c) {
  if (c.legs.size() != d.shape().object_count()) return false;
  for (std::size_t i = 0; i < c.legs.size(); ++i)
    if (!(c.legs[i].src() == c.apex) || !(c.legs[i].dst() == d.set(i))) return false;
  for (std::size_t a = 0; a < d.shape().arrow_count(); ++a)
    if (!(compose(d.map(a), c.legs[d.shape().src(a)]) == c.legs[d.shape().tgt(a)])) return false;
  return true;
}

bool is_cocone(const FinDiagram& d, const Cone& c) {
  if (c.legs.size() != d.shape().object_count()) return false;
  for (std::size_t i = 0; i < c.legs.size(); ++i)
    if (!(c.legs[i].dst() == c.apex) || !(c.legs[i].src() == d.set(i))) return false;
  for (std::size_t a = 0; a < d.shape().arrow_count(); ++a)
    if (!(compose(c.legs[d.shape().tgt(a)], d.map(a)) == c.legs[d.shape().src(a)])) return false;
  return true;
}

std::size_t count_cone_factorizations(const Cone& lim, const Cone& cone) {
  // A factorization is chosen independently at each apex element.
  std::size_t total = 1;
  for (std::size_t x = 0; x < cone.apex.size(); ++x) {
    std::size_t choices = 0;
    for (std::size_t l = 0; l < lim.apex.size(); ++l) {
      bool ok = true;
      for (std::size_t i = 0; i < lim.legs.size() && ok; ++i) ok = lim.legs[i](l) == cone.legs[i](x);
      if (ok) ++choices;
    }
    total = saturating_mul(total, choices);
  }
  return total;
}

std::size_t count_cocone_factorizations(const Cone& colim, const Cone& cocone) {
  std::size_t total = 1;
  for (std::size_t c = 0; c < colim.apex.size(); ++c) {
    std::size_t choices = 0;
    for (std::size_t y = 0; y < cocone.apex.size(); ++y) {
      bool ok = true;
      for (std::size_t i = 0; i < colim.legs.size() && ok; ++i)
        for (std::size_t x = 0; x < colim.legs[i].src().size() && ok; ++x)
          if (colim.legs[i](x) == c && cocone.legs[i](x) != y) ok = false;
      if (ok) ++choices;
    }
    total = saturating_mul(total, choices);
  }
  return total;
}

Pullback pullback(const SetMap& f, const SetMap& g, const Budget& budget) {
  if (!(f.dst() == g.dst())) throw ValidationError("shape_mismatch", "pullback of maps with different codomains");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < f.src().size(); ++a)
    for (std::size_t b = 0; b < g.src().size(); ++b)
      if (f(a) == g(b)) {
        pairs.emplace_back(a, b);
        budget.check("pullback", pairs.size());
      }
  std::vector<std::string> labels;
  for (auto [a, b] : pairs) labels.push_back(label::pair(f.src()[a], g.src()[b]));
  std::vector<std::string> unsorted = labels;
  FinSet apex(std::move(labels));
  std::vector<std::size_t> left(apex.size()), right(apex.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    std::size_t idx = apex.index_of(unsorted[r]);
    left[idx] = pairs[r].first;
    right[idx] = pairs[r].second;
  }
  return Pullback{apex, SetMap(apex, f.src(), std::move(left)), SetMap(apex, g.src(), std::move(right))};
}

Quotient coequalizer(const SetMap& f, const SetMap& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
    throw ValidationError("shape_mismatch", "coequalizer of non-parallel maps");
  const FinSet& b = f.dst();
  DisjointSet uf(b.size());
  for (std::size_t a = 0; a < f.src().size(); ++a) uf.unite(f(a), g(a));
  // Elements are sorted, so the first member seen is the least.
  std::vector<std::size_t> least(b.size(), static_cast<std::size_t>(-1));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < b.size(); ++x) {
    std::size_t r = uf.find(x);
    if (least[r] == static_cast<std::size_t>(-1)) {
      least[r] = x;
      labels.push_back(b[x]);
    }
  }
  FinSet apex(std::move(labels));
  std::vector<std::size_t> table(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) table[x] = apex.index_of(b[least[uf.find(x)]]);
  return Quotient{apex, SetMap(b, apex, std::move(table))};
}

DistributivityReport distributivity_check(const FinSet& b, const FinSet& b_prime,
                                          const std::vector<std::vector<FinSet>>& m, const Budget& budget) {
  if (m.size() != b.size()) throw ValidationError("shape_mismatch", "table must have one row per element of B");
  for (const auto& row : m)
    if (row.size() != b_prime.size())
      throw ValidationError("shape_mismatch", "table must have one column per element of B'");

  std::vector<std::string> bp_names(b_prime.begin(), b_prime.end());
  std::vector<std::string> b_names(b.begin(), b.end());

  // Left side: the product over B of the coproducts over B'.
  std::vector<Cone> sums;
  std::vector<FinSet> sum_sets;
  for (std::size_t i = 0; i < b.size(); ++i) {
    sums.push_back(colimit(FinDiagram(Shape::discrete(bp_names), m[i], {})));
    sum_sets.push_back(sums.back().apex);
  }
  Cone product = limit(FinDiagram(Shape::discrete(b_names), sum_sets, {}), budget);

  // Inverse of each coproduct injection: class -> (b', x).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> decode(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    decode[i].resize(sums[i].apex.size());
    for (std::size_t j = 0; j < b_prime.size(); ++j)
      for (std::size_t x = 0; x < m[i][j].size(); ++x) decode[i][sums[i].legs[j](x)] = {j, x};
  }

  auto rhs_label = [&](std::span<const std::size_t> f, std::span<const std::size_t> xs) {
    std::vector<std::string> comps(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) comps[i] = m[i][f[i]][xs[i]];
    return label::pair(map_label(b, b_prime, f), label::tuple(comps));
  };

  // Right side: the coproduct over f: B -> B' of the products.
  std::vector<std::string> rhs_labels;
  for (const auto& f : enumerate_tables(b.size(), b_prime.size(), budget)) {
    std::vector<std::size_t> xs(b.size(), 0);
    bool any = true;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (m[i][f[i]].empty()) any = false;
    while (any) {
      rhs_labels.push_back(rhs_label(f, xs));
      budget.check("distributivity", rhs_labels.size());
      std::size_t k = b.size();
      bool carry = true;
      while (carry && k > 0) {
        --k;
        if (++xs[k] < m[k][f[k]].size()) carry = false;
        else xs[k] = 0;
      }
      if (carry) break;
    }
  }
  FinSet rhs(std::move(rhs_labels));

  std::vector<std::size_t> table(product.apex.size());
  std::vector<std::size_t> f(b.size()), xs(b.size());
  for (std::size_t e = 0; e < product.apex.size(); ++e) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto [j, x] = decode[i][product.legs[i](e)];
      f[i] = j;
      xs[i] = x;
    }
    table[e] = rhs.index_of(rhs_label(f, xs));
  }
  DistributivityReport report;
  report.product_of_sums = product.apex.size();
  report.sum_of_products = rhs.size();
  report.witness = SetMap(product.apex, rhs, std::move(table));
  report.holds = report.witness.is_bijective();
  return report;
}

}  // namespace polycat
