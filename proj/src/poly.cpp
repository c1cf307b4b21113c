#include "polycat/poly.hpp"

#include <algorithm>

#include "polycat/label.hpp"

namespace polycat {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial() : data_(std::make_shared<const Data>()) {}

Polynomial::Polynomial(FinSet positions, std::vector<FinSet> directions) {
  if (directions.size() != positions.size())
    throw ValidationError("shape_mismatch", "a polynomial needs exactly one direction set per position");
  data_ = std::make_shared<const Data>(Data{std::move(positions), std::move(directions)});
}

Polynomial Polynomial::from_table(FinSet positions, const std::map<std::string, FinSet>& directions) {
  std::vector<FinSet> dirs;
  dirs.reserve(positions.size());
  for (const auto& b : positions) {
    auto it = directions.find(b);
    if (it == directions.end())
      throw ValidationError("missing_directions", "no direction set for position '" + b + "'", "directions/" + b);
    dirs.push_back(it->second);
  }
  if (directions.size() != positions.size()) {
    for (const auto& [b, _] : directions)
      if (!positions.contains(b))
        throw ValidationError("unknown_label", "directions given for unknown position '" + b + "'", "directions/" + b);
  }
  return Polynomial(std::move(positions), std::move(dirs));
}

FinSet Polynomial::total_space() const {
  std::vector<std::string> labels;
  labels.reserve(total_size());
  for (std::size_t b = 0; b < position_count(); ++b)
    for (const auto& e : directions(b)) labels.push_back(label::pair(positions()[b], e));
  return FinSet(std::move(labels));
}

std::size_t Polynomial::total_size() const {
  std::size_t n = 0;
  for (const auto& d : data_->directions) n += d.size();
  return n;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.data_ == b.data_ ||
         (a.data_->positions == b.data_->positions && a.data_->directions == b.data_->directions);
}

Polynomial representable(const FinSet& a) { return Polynomial(FinSet::singleton(), {a}); }

Polynomial constant(const FinSet& c) { return Polynomial(c, std::vector<FinSet>(c.size())); }

Polynomial identity_y() {
  static const Polynomial y = representable(FinSet::singleton());
  return y;
}

// ---------------------------------------------------------------------------
// PolyMap

PolyMap::PolyMap(Polynomial src, Polynomial dst, std::vector<std::size_t> on_positions,
                 std::vector<std::vector<std::size_t>> on_directions)
    : src_(std::move(src)), dst_(std::move(dst)), positions_(std::move(on_positions)), sharp_(std::move(on_directions)) {
  const std::size_t n = src_.position_count();
  if (positions_.size() != n || sharp_.size() != n)
    throw ValidationError("invalid_polymap", "map must be given at every source position");
  for (std::size_t b = 0; b < n; ++b) {
    const std::string& where = src_.positions()[b];
    if (positions_[b] >= dst_.position_count())
      throw ValidationError("invalid_polymap", "position image outside the target", "phi1/" + where);
    const FinSet& from = dst_.directions(positions_[b]);
    const FinSet& to = src_.directions(b);
    if (sharp_[b].size() != from.size())
      throw ValidationError("invalid_polymap", "direction map must be total on the target's directions",
                            "sharp/" + where);
    for (auto e : sharp_[b])
      if (e >= to.size())
        throw ValidationError("invalid_polymap", "direction map lands outside the source's directions",
                              "sharp/" + where);
  }
}

PolyMap PolyMap::identity(const Polynomial& p) {
  std::vector<std::size_t> pos(p.position_count());
  std::vector<std::vector<std::size_t>> sharp(p.position_count());
  for (std::size_t b = 0; b < pos.size(); ++b) {
    pos[b] = b;
    sharp[b].resize(p.directions(b).size());
    for (std::size_t e = 0; e < sharp[b].size(); ++e) sharp[b][e] = e;
  }
  return PolyMap(p, p, std::move(pos), std::move(sharp));
}

PolyMap PolyMap::from_labels(Polynomial src, Polynomial dst, const std::map<std::string, std::string>& phi1,
                             const std::map<std::string, std::map<std::string, std::string>>& sharp) {
  const std::size_t n = src.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sh(n);
  for (std::size_t b = 0; b < n; ++b) {
    const std::string& bl = src.positions()[b];
    auto it = phi1.find(bl);
    if (it == phi1.end()) throw ValidationError("invalid_polymap", "no position image for '" + bl + "'", "phi1/" + bl);
    auto j = dst.positions().find(it->second);
    if (!j) throw ValidationError("invalid_polymap", "position image '" + it->second + "' not in target", "phi1/" + bl);
    pos[b] = *j;
    const FinSet& from = dst.directions(*j);
    const FinSet& to = src.directions(b);
    auto st = sharp.find(bl);
    if (st == sharp.end()) {
      if (!from.empty()) throw ValidationError("invalid_polymap", "no direction map for '" + bl + "'", "sharp/" + bl);
      continue;
    }
    try {
      SetMap m = SetMap::from_labels(from, to, st->second);
      sh[b].assign(m.image().begin(), m.image().end());
    } catch (const ValidationError& e) {
      throw ValidationError("invalid_polymap", e.what(), "sharp/" + bl + (e.location().empty() ? "" : "/" + e.location()));
    }
  }
  if (phi1.size() != n) throw ValidationError("invalid_polymap", "phi1 mentions positions outside the source", "phi1");
  return PolyMap(std::move(src), std::move(dst), std::move(pos), std::move(sh));
}

SetMap PolyMap::on_positions() const { return SetMap(src_.positions(), dst_.positions(), positions_); }

SetMap PolyMap::on_directions(std::size_t b) const {
  return SetMap(dst_.directions(positions_[b]), src_.directions(b), sharp_[b]);
}

bool operator==(const PolyMap& a, const PolyMap& b) {
  return a.positions_ == b.positions_ && a.sharp_ == b.sharp_ && a.src_ == b.src_ && a.dst_ == b.dst_;
}

std::optional<MapDifference> first_difference(const PolyMap& a, const PolyMap& b) {
  for (std::size_t x = 0; x < a.src().position_count(); ++x) {
    if (a.position(x) != b.position(x)) return MapDifference{x, std::nullopt};
    auto sa = a.sharp(x), sb = b.sharp(x);
    for (std::size_t d = 0; d < sa.size(); ++d)
      if (sa[d] != sb[d]) return MapDifference{x, d};
  }
  return std::nullopt;
}

PolyMap compose_maps(const PolyMap& psi, const PolyMap& phi) {
  if (!(phi.dst() == psi.src())) throw ValidationError("shape_mismatch", "cannot compose: target and source differ");
  const std::size_t n = phi.src().position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  for (std::size_t b = 0; b < n; ++b) {
    std::size_t mid = phi.position(b);
    pos[b] = psi.position(mid);
    auto outer = psi.sharp(mid);
    auto inner = phi.sharp(b);
    sharp[b].resize(outer.size());
    for (std::size_t d = 0; d < outer.size(); ++d) sharp[b][d] = inner[outer[d]];
  }
  return PolyMap(phi.src(), psi.dst(), std::move(pos), std::move(sharp));
}

// ---------------------------------------------------------------------------
// Evaluation

std::string evaluation_label(const Polynomial& p, const FinSet& x, std::size_t b, std::span<const std::size_t> g) {
  return label::pair(p.positions()[b], map_label(p.directions(b), x, g));
}

std::size_t Evaluation::index(const Polynomial& p, const FinSet& x, std::size_t b,
                              std::span<const std::size_t> g) const {
  return set.index_of(evaluation_label(p, x, b, g));
}

Evaluation evaluate_structured(const Polynomial& p, const FinSet& x, const Budget& budget) {
  std::size_t count = 0;
  for (std::size_t b = 0; b < p.position_count(); ++b)
    count = saturating_add(count, saturating_pow(x.size(), p.directions(b).size()));
  budget.check("evaluation", count);

  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> raw;
  labels.reserve(count);
  raw.reserve(count);
  for (std::size_t b = 0; b < p.position_count(); ++b)
    for (auto& g : enumerate_tables(p.directions(b).size(), x.size(), budget)) {
      labels.push_back(evaluation_label(p, x, b, g));
      raw.emplace_back(b, std::move(g));
    }
  std::vector<std::string> unsorted = labels;
  Evaluation out{FinSet(std::move(labels)), std::vector<std::size_t>(count), std::vector<std::vector<std::size_t>>(count)};
  for (std::size_t r = 0; r < raw.size(); ++r) {
    std::size_t idx = out.set.index_of(unsorted[r]);
    out.position[idx] = raw[r].first;
    out.table[idx] = std::move(raw[r].second);
  }
  return out;
}

FinSet evaluate(const Polynomial& p, const FinSet& x, const Budget& budget) {
  return evaluate_structured(p, x, budget).set;
}

SetMap apply_map(const PolyMap& phi, const FinSet& x, const Budget& budget) {
  Evaluation from = evaluate_structured(phi.src(), x, budget);
  FinSet to = evaluate(phi.dst(), x, budget);
  std::vector<std::size_t> image(from.set.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    std::size_t b = from.position[i];
    auto sharp = phi.sharp(b);
    std::vector<std::size_t> g(sharp.size());
    for (std::size_t d = 0; d < sharp.size(); ++d) g[d] = from.table[i][sharp[d]];
    image[i] = to.index_of(evaluation_label(phi.dst(), x, phi.position(b), g));
  }
  return SetMap(from.set, to, std::move(image));
}

// ---------------------------------------------------------------------------
// Hom-sets

std::size_t hom_count(const Polynomial& p, const Polynomial& q) {
  std::size_t total = 1;
  for (std::size_t b = 0; b < p.position_count(); ++b) {
    std::size_t choices = 0;
    for (std::size_t c = 0; c < q.position_count(); ++c)
      choices = saturating_add(choices, saturating_pow(p.directions(b).size(), q.directions(c).size()));
    total = saturating_mul(total, choices);
  }
  return total;
}

std::vector<PolyMap> hom_set(const Polynomial& p, const Polynomial& q, const Budget& budget) {
  budget.check("hom-set", hom_count(p, q));
  const std::size_t n = p.position_count();
  std::vector<PolyMap> out;

  // Direction-map tables for every (b, b') pair, computed once.
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> tables(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < q.position_count(); ++c)
      tables[b].push_back(enumerate_tables(q.directions(c).size(), p.directions(b).size(), budget));

  for (const auto& phi1 : enumerate_tables(n, q.position_count(), budget)) {
    std::vector<std::size_t> choice(n, 0);
    bool any = true;
    for (std::size_t b = 0; b < n; ++b)
      if (tables[b][phi1[b]].empty()) any = false;
    while (any) {
      std::vector<std::vector<std::size_t>> sharp(n);
      for (std::size_t b = 0; b < n; ++b) sharp[b] = tables[b][phi1[b]][choice[b]];
      out.emplace_back(p, q, phi1, std::move(sharp));
      std::size_t k = n;
      bool carry = true;
      while (carry && k > 0) {
        --k;
        if (++choice[k] < tables[k][phi1[k]].size()) carry = false;
        else choice[k] = 0;
      }
      if (carry) break;
    }
  }
  return out;
}

bool is_isomorphism(const PolyMap& phi) {
  if (!phi.on_positions().is_bijective()) return false;
  for (std::size_t b = 0; b < phi.src().position_count(); ++b)
    if (!phi.on_directions(b).is_bijective()) return false;
  return true;
}

std::optional<PolyMap> iso_check(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = p.position_count();
  if (n != q.position_count()) return std::nullopt;
  std::vector<std::size_t> assign(n);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t b) -> bool {
    if (b == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || q.directions(c).size() != p.directions(b).size()) continue;
      used[c] = true;
      assign[b] = c;
      if (self(self, b + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<std::vector<std::size_t>> sharp(n);
  for (std::size_t b = 0; b < n; ++b) {
    sharp[b].resize(p.directions(b).size());
    for (std::size_t e = 0; e < sharp[b].size(); ++e) sharp[b][e] = e;
  }
  return PolyMap(p, q, std::move(assign), std::move(sharp));
}

}  // namespace polycat

namespace polycat {

std::vector<std::size_t> map_key(const PolyMap& phi) {
  std::vector<std::size_t> key(phi.positions().begin(), phi.positions().end());
  for (std::size_t b = 0; b < phi.src().position_count(); ++b) {
    auto s = phi.sharp(b);
    key.insert(key.end(), s.begin(), s.end());
  }
  return key;
}

}  // namespace polycat
