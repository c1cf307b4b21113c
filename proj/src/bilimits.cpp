#include "polycat/bilimits.hpp"

#include <functional>
#include <set>
#include <string>

#include "polycat/label.hpp"

namespace polycat {

PolyDiagram::PolyDiagram(Shape shape, std::vector<Polynomial> polys, std::vector<PolyMap> maps)
    : shape_(std::move(shape)), polys_(std::move(polys)), maps_(std::move(maps)) {
  if (polys_.size() != shape_.object_count())
    throw ValidationError("shape_mismatch", "a diagram needs one polynomial per object");
  if (maps_.size() != shape_.arrow_count())
    throw ValidationError("shape_mismatch", "a diagram needs one map per arrow");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const std::string& name = shape_.arrows()[a].name;
    if (!(maps_[a].src() == polys_[shape_.src(a)]) || !(maps_[a].dst() == polys_[shape_.tgt(a)]))
      throw ValidationError("shape_mismatch", "map does not connect the assigned polynomials", "maps/" + name);
  }
  for (std::size_t g = 0; g < maps_.size(); ++g)
    for (std::size_t f = 0; f < maps_.size(); ++f) {
      if (!shape_.composable(g, f)) continue;
      std::size_t h = shape_.composite(g, f);
      PolyMap expected = h == Shape::kIdentity ? PolyMap::identity(polys_[shape_.src(f)]) : maps_[h];
      if (!(compose_maps(maps_[g], maps_[f]) == expected))
        throw ValidationError("not_functorial", "composite of assigned maps differs from the assigned composite",
                              "compose/" + shape_.arrows()[g].name + "∘" + shape_.arrows()[f].name);
    }
}

// ---------------------------------------------------------------------------
// Limits

PolyCone general_limit(const PolyDiagram& d, const Budget& budget) {
  const Shape& shape = d.shape();
  const std::size_t n = shape.object_count();
  std::vector<FinSet> position_sets;
  std::vector<SetMap> position_maps;
  for (std::size_t i = 0; i < n; ++i) position_sets.push_back(d.poly(i).positions());
  for (std::size_t a = 0; a < shape.arrow_count(); ++a) position_maps.push_back(d.map(a).on_positions());
  Cone positions = limit(FinDiagram(shape, position_sets, position_maps), budget);

  const Shape op = shape.opposite();
  const std::size_t m = positions.apex.size();
  std::vector<FinSet> directions(m);
  std::vector<std::vector<std::vector<std::size_t>>> leg_sharp(n, std::vector<std::vector<std::size_t>>(m));
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<FinSet> sets;
    std::vector<SetMap> maps;
    for (std::size_t i = 0; i < n; ++i) sets.push_back(d.poly(i).directions(positions.legs[i](l)));
    for (std::size_t a = 0; a < shape.arrow_count(); ++a)
      maps.push_back(d.map(a).on_directions(positions.legs[shape.src(a)](l)));
    Cone dirs = colimit(FinDiagram(op, std::move(sets), std::move(maps)));
    directions[l] = dirs.apex;
    for (std::size_t i = 0; i < n; ++i)
      leg_sharp[i][l].assign(dirs.legs[i].image().begin(), dirs.legs[i].image().end());
  }
  Polynomial apex(positions.apex, std::move(directions));
  PolyCone out{apex, {}};
  for (std::size_t i = 0; i < n; ++i)
    out.legs.emplace_back(apex, d.poly(i),
                          std::vector<std::size_t>(positions.legs[i].image().begin(), positions.legs[i].image().end()),
                          std::move(leg_sharp[i]));
  return out;
}

PolyCone product(const Polynomial& p1, const Polynomial& p2, const Budget& budget) {
  return general_limit(PolyDiagram(Shape::discrete({"0", "1"}), {p1, p2}, {}), budget);
}

// ---------------------------------------------------------------------------
// Colimits

PolyCone coproduct(std::span<const Polynomial> ps) {
  std::vector<std::string> names;
  std::vector<FinSet> sets;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    names.push_back(std::to_string(k));
    sets.push_back(ps[k].positions());
  }
  Cone positions = colimit(FinDiagram(Shape::discrete(names), sets, {}));
  std::vector<FinSet> directions(positions.apex.size());
  for (std::size_t k = 0; k < ps.size(); ++k)
    for (std::size_t b = 0; b < ps[k].position_count(); ++b) directions[positions.legs[k](b)] = ps[k].directions(b);
  Polynomial apex(positions.apex, std::move(directions));
  PolyCone out{apex, {}};
  for (std::size_t k = 0; k < ps.size(); ++k) {
    std::vector<std::vector<std::size_t>> sharp;
    for (std::size_t b = 0; b < ps[k].position_count(); ++b) {
      sharp.emplace_back(ps[k].directions(b).size());
      for (std::size_t e = 0; e < sharp.back().size(); ++e) sharp.back()[e] = e;
    }
    out.legs.emplace_back(ps[k], apex,
                          std::vector<std::size_t>(positions.legs[k].image().begin(), positions.legs[k].image().end()),
                          std::move(sharp));
  }
  return out;
}

PolyCone coequalizer(const PolyMap& f, const PolyMap& g, const Budget& budget) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
    throw ValidationError("shape_mismatch", "coequalizer needs two parallel maps");
  const Polynomial& p1 = f.src();
  const Polynomial& p2 = f.dst();
  Quotient q = coequalizer(f.on_positions(), g.on_positions());
  const std::size_t classes = q.apex.size();

  std::vector<std::vector<std::size_t>> members(classes), sources(classes);
  for (std::size_t b = 0; b < p2.position_count(); ++b) members[q.projection(b)].push_back(b);
  for (std::size_t b1 = 0; b1 < p1.position_count(); ++b1) sources[q.projection(f.position(b1))].push_back(b1);

  std::vector<FinSet> directions(classes);
  std::vector<std::vector<std::size_t>> sharp(p2.position_count());
  for (std::size_t c = 0; c < classes; ++c) {
    // Zigzag: one node per member of the class, then one per source position.
    std::vector<std::string> objects;
    std::vector<FinSet> sets;
    std::vector<std::size_t> node_of(p2.position_count());
    for (auto b : members[c]) {
      node_of[b] = objects.size();
      objects.push_back("t" + std::to_string(b));
      sets.push_back(p2.directions(b));
    }
    std::vector<Arrow> arrows;
    std::vector<SetMap> maps;
    for (auto b1 : sources[c]) {
      const std::string node = "s" + std::to_string(b1);
      objects.push_back(node);
      sets.push_back(p1.directions(b1));
      arrows.push_back({"f" + std::to_string(b1), objects[node_of[f.position(b1)]], node});
      maps.push_back(f.on_directions(b1));
      arrows.push_back({"g" + std::to_string(b1), objects[node_of[g.position(b1)]], node});
      maps.push_back(g.on_directions(b1));
    }
    Cone lim = limit(FinDiagram(Shape(std::move(objects), std::move(arrows)), std::move(sets), std::move(maps)), budget);
    const SetMap& first = lim.legs[node_of[members[c].front()]];
    std::vector<std::size_t> order(lim.apex.size());
    if (first.is_injective()) {
      // Name each direction by its component at the least member.
      std::vector<std::string> names;
      for (std::size_t k = 0; k < lim.apex.size(); ++k) names.push_back(first.dst()[first(k)]);
      directions[c] = FinSet(names);
      for (std::size_t k = 0; k < names.size(); ++k) order[k] = directions[c].index_of(names[k]);
    } else {
      directions[c] = lim.apex;
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    }
    for (auto b : members[c]) {
      const SetMap& leg = lim.legs[node_of[b]];
      sharp[b].assign(order.size(), 0);
      for (std::size_t k = 0; k < order.size(); ++k) sharp[b][order[k]] = leg(k);
    }
  }
  Polynomial apex(q.apex, std::move(directions));
  return PolyCone{apex, {PolyMap(p2, apex, std::vector<std::size_t>(q.projection.image().begin(), q.projection.image().end()),
                                 std::move(sharp))}};
}

namespace {

// The map Σ_k p_k -> target restricting to maps[k] on the k-th summand.
PolyMap copair(const PolyCone& sum, std::span<const PolyMap> maps, const Polynomial& target) {
  const std::size_t n = sum.apex.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (std::size_t b = 0; b < maps[k].src().position_count(); ++b) {
      std::size_t at = sum.legs[k].position(b);
      pos[at] = maps[k].position(b);
      auto s = maps[k].sharp(b);
      sharp[at].assign(s.begin(), s.end());
    }
  return PolyMap(sum.apex, target, std::move(pos), std::move(sharp));
}

}  // namespace

PolyCone general_colimit(const PolyDiagram& d, const Budget& budget) {
  const Shape& shape = d.shape();
  std::vector<Polynomial> objects, arrow_sources;
  for (std::size_t i = 0; i < shape.object_count(); ++i) objects.push_back(d.poly(i));
  for (std::size_t a = 0; a < shape.arrow_count(); ++a) arrow_sources.push_back(d.poly(shape.src(a)));
  PolyCone all = coproduct(objects);
  PolyCone by_arrow = coproduct(arrow_sources);

  std::vector<PolyMap> via_src, via_tgt;
  for (std::size_t a = 0; a < shape.arrow_count(); ++a) {
    via_src.push_back(all.legs[shape.src(a)]);
    via_tgt.push_back(compose_maps(all.legs[shape.tgt(a)], d.map(a)));
  }
  PolyCone q = coequalizer(copair(by_arrow, via_src, all.apex), copair(by_arrow, via_tgt, all.apex), budget);
  PolyCone out{q.apex, {}};
  for (std::size_t i = 0; i < shape.object_count(); ++i) out.legs.push_back(compose_maps(q.legs[0], all.legs[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Universal properties

bool universal_property_check(const Polynomial& candidate, const PolyMap& projection, const PolyMap& f,
                              const PolyMap& g, std::span<const Polynomial> probes, const Budget& budget) {
  if (!(projection.src() == f.dst()) || !(projection.dst() == candidate)) return false;
  if (!(compose_maps(projection, f) == compose_maps(projection, g))) return false;
  for (const auto& probe : probes) {
    std::size_t equalizing = 0;
    for (const auto& psi : hom_set(f.dst(), probe, budget))
      if (compose_maps(psi, f) == compose_maps(psi, g)) ++equalizing;
    std::set<std::vector<std::size_t>> images;
    auto homs = hom_set(candidate, probe, budget);
    for (const auto& phi : homs) images.insert(map_key(compose_maps(phi, projection)));
    if (images.size() != homs.size() || homs.size() != equalizing) return false;
  }
  return true;
}

namespace {

// Counts families (ψ_i) with ψ_i ∈ homs[i] satisfying natural(arrow, family)
// for every arrow whose endpoints are both assigned.
std::size_t count_families(const Shape& shape, const std::vector<std::vector<PolyMap>>& homs,
                           const std::function<bool(std::size_t, const std::vector<const PolyMap*>&)>& natural) {
  const std::size_t n = shape.object_count();
  std::vector<std::vector<std::size_t>> closing(n);  // arrows checked once object i is assigned
  for (std::size_t a = 0; a < shape.arrow_count(); ++a)
    closing[std::max(shape.src(a), shape.tgt(a))].push_back(a);
  std::vector<const PolyMap*> family(n, nullptr);
  std::size_t count = 0;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (const auto& m : homs[i]) {
      family[i] = &m;
      bool ok = true;
      for (auto a : closing[i])
        if (!natural(a, family)) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
  };
  search(search, 0);
  return count;
}

}  // namespace

bool limit_universal_check(const PolyDiagram& d, const PolyCone& cone, std::span<const Polynomial> probes,
                           const Budget& budget) {
  const Shape& shape = d.shape();
  for (std::size_t a = 0; a < shape.arrow_count(); ++a)
    if (!(compose_maps(d.map(a), cone.legs[shape.src(a)]) == cone.legs[shape.tgt(a)])) return false;
  for (const auto& q : probes) {
    std::vector<std::vector<PolyMap>> homs;
    for (std::size_t i = 0; i < shape.object_count(); ++i) homs.push_back(hom_set(q, d.poly(i), budget));
    std::size_t cones = count_families(shape, homs, [&](std::size_t a, const std::vector<const PolyMap*>& fam) {
      return compose_maps(d.map(a), *fam[shape.src(a)]) == *fam[shape.tgt(a)];
    });
    auto maps = hom_set(q, cone.apex, budget);
    std::set<std::vector<std::size_t>> images;
    for (const auto& phi : maps) {
      std::vector<std::size_t> key;
      for (const auto& leg : cone.legs) {
        auto k = map_key(compose_maps(leg, phi));
        key.push_back(k.size());
        key.insert(key.end(), k.begin(), k.end());
      }
      images.insert(std::move(key));
    }
    if (images.size() != maps.size() || maps.size() != cones) return false;
  }
  return true;
}

bool colimit_universal_check(const PolyDiagram& d, const PolyCone& cocone, std::span<const Polynomial> probes,
                             const Budget& budget) {
  const Shape& shape = d.shape();
  for (std::size_t a = 0; a < shape.arrow_count(); ++a)
    if (!(compose_maps(cocone.legs[shape.tgt(a)], d.map(a)) == cocone.legs[shape.src(a)])) return false;
  for (const auto& q : probes) {
    std::vector<std::vector<PolyMap>> homs;
    for (std::size_t i = 0; i < shape.object_count(); ++i) homs.push_back(hom_set(d.poly(i), q, budget));
    std::size_t cocones = count_families(shape, homs, [&](std::size_t a, const std::vector<const PolyMap*>& fam) {
      return compose_maps(*fam[shape.tgt(a)], d.map(a)) == *fam[shape.src(a)];
    });
    auto maps = hom_set(cocone.apex, q, budget);
    std::set<std::vector<std::size_t>> images;
    for (const auto& phi : maps) {
      std::vector<std::size_t> key;
      for (const auto& leg : cocone.legs) {
        auto k = map_key(compose_maps(phi, leg));
        key.push_back(k.size());
        key.insert(key.end(), k.begin(), k.end());
      }
      images.insert(std::move(key));
    }
    if (images.size() != maps.size() || maps.size() != cocones) return false;
  }
  return true;
}

std::vector<Polynomial> small_polynomials(std::size_t max_positions, std::size_t max_fiber) {
  if (max_positions > 10 || max_fiber > 10)
    throw ValidationError("out_of_range", "small_polynomials supports at most 10 positions and fibers of size 10");
  std::vector<Polynomial> out;
  std::vector<std::size_t> exps;
  auto emit = [&] {
    std::vector<std::string> names;
    std::vector<FinSet> dirs;
    for (std::size_t b = 0; b < exps.size(); ++b) names.push_back("b" + std::to_string(b));
    for (std::size_t b = 0; b < exps.size(); ++b) {
      std::vector<std::string> ds;
      for (std::size_t e = 0; e < exps[b]; ++e) ds.push_back("d" + std::to_string(e));
      dirs.emplace_back(std::move(ds));
    }
    out.emplace_back(FinSet(std::move(names)), std::move(dirs));
  };
  auto rec = [&](auto&& self, std::size_t lo) -> void {
    emit();
    if (exps.size() == max_positions) return;
    for (std::size_t e = lo; e <= max_fiber; ++e) {
      exps.push_back(e);
      self(self, e);
      exps.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace polycat
