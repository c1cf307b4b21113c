#include "polycat/comonad.hpp"

#include <set>

#include "polycat/label.hpp"
#include "polycat/tower.hpp"

namespace polycat {

// ---------------------------------------------------------------------------
// Comonoid

Comonoid::Comonoid(Polynomial carrier, PolyMap counit, PolyMap comultiplication, const Budget& budget)
    : carrier_(std::move(carrier)), counit_(std::move(counit)), delta_(std::move(comultiplication)) {
  square_ = std::make_shared<const Composite>(compose_structured(carrier_, carrier_, budget));
  if (!(counit_.src() == carrier_) || !(counit_.dst() == identity_y()))
    throw ValidationError("shape_mismatch", "counit must be a map from the carrier to y", "counit");
  if (!(delta_.src() == carrier_) || !(delta_.dst() == square_->result))
    throw ValidationError("shape_mismatch", "comultiplication must be a map from the carrier to its self-composite",
                          "comultiplication");
}

Comonoid trivial_comonoid() {
  const Polynomial& y = identity_y();
  return Comonoid(y, PolyMap::identity(y), left_unitor(compose_structured(y, y)));
}

// ---------------------------------------------------------------------------
// Laws

namespace {

void record(LawReport& r, LawFailure f) {
  if (!r.failure) r.failure = std::move(f);
}

}  // namespace

LawReport check_laws(const Comonoid& c) {
  const Polynomial& p = c.carrier();
  Tower tower(c);
  LawReport report{true, true, true, std::nullopt};

  auto unit_law = [&](std::size_t slot, const char* name, bool& ok) {
    for (std::size_t b = 0; b < p.position_count() && ok; ++b) {
      const Tree leaf = Tower::leaf(b);
      const Tree split = tower.degeneracy(0, leaf, 1);
      if (!(tower.face(slot, split, 2) == leaf)) {
        ok = false;
        record(report, {name, p.positions()[b], "position", ""});
        break;
      }
      for (std::size_t e = 0; e < p.directions(b).size(); ++e) {
        Path back = tower.degeneracy_sharp(0, leaf, 1, tower.face_sharp(slot, split, 2, {e}));
        if (back != Path{e}) {
          ok = false;
          record(report, {name, p.positions()[b], "direction", p.directions(b)[e]});
          break;
        }
      }
    }
  };
  unit_law(0, "unit_left", report.unit_left);
  unit_law(1, "unit_right", report.unit_right);

  for (std::size_t b = 0; b < p.position_count() && report.assoc; ++b) {
    const Tree leaf = Tower::leaf(b);
    const Tree split = tower.degeneracy(0, leaf, 1);
    const Tree outer = tower.degeneracy(0, split, 2);
    const Tree inner = tower.degeneracy(1, split, 2);
    if (!(outer == inner)) {
      report.assoc = false;
      record(report, {"assoc", p.positions()[b], "position", ""});
      break;
    }
    for (const auto& path : tower.paths(outer, 3)) {
      Path a = tower.degeneracy_sharp(0, leaf, 1, tower.degeneracy_sharp(0, split, 2, path));
      Path z = tower.degeneracy_sharp(0, leaf, 1, tower.degeneracy_sharp(1, split, 2, path));
      if (a != z) {
        report.assoc = false;
        record(report, {"assoc", p.positions()[b], "direction", tower.path_label(outer, 3, path)});
        break;
      }
    }
  }
  return report;
}

LawReport check_laws_materialized(const Comonoid& c, const Budget& budget) {
  const Polynomial& p = c.carrier();
  const PolyMap& eps = c.counit();
  const PolyMap& delta = c.comultiplication();
  const Composite& pp = c.square();
  Composite yp = compose_structured(identity_y(), p, budget);
  Composite py = compose_structured(p, identity_y(), budget);
  Composite pp_p = compose_structured(pp.result, p, budget);
  Composite p_pp = compose_structured(p, pp.result, budget);

  LawReport report{true, true, true, std::nullopt};
  auto compare = [&](const PolyMap& lhs, const PolyMap& rhs, const char* name, bool& ok) {
    auto diff = first_difference(lhs, rhs);
    if (!diff) return;
    ok = false;
    LawFailure f{name, p.positions()[diff->position], diff->direction ? "direction" : "position", ""};
    if (diff->direction) f.direction = lhs.dst().directions(lhs.position(diff->position))[*diff->direction];
    record(report, std::move(f));
  };
  compare(compose_maps(whisker_right(pp, yp, eps), delta), left_unitor(yp), "unit_left", report.unit_left);
  compare(compose_maps(whisker_left(pp, py, eps), delta), right_unitor(py), "unit_right", report.unit_right);
  PolyMap alpha = associator(pp, pp_p, pp, p_pp);
  compare(compose_maps(alpha, compose_maps(whisker_right(pp, pp_p, delta), delta)),
          compose_maps(whisker_left(pp, p_pp, delta), delta), "assoc", report.assoc);
  return report;
}

// ---------------------------------------------------------------------------
// Category

Category::Category(FinSet objects, FinSet morphisms, SetMap src, SetMap tgt, SetMap identity,
                   std::vector<std::size_t> composition)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      identity_(std::move(identity)),
      comp_(std::move(composition)) {
  auto fail = [](const std::string& msg, const std::string& where) {
    throw ValidationError("invalid_category", msg, where);
  };
  const std::size_t n = morphisms_.size();
  if (!(src_.src() == morphisms_) || !(src_.dst() == objects_) || !(tgt_.src() == morphisms_) ||
      !(tgt_.dst() == objects_))
    fail("source and target must map morphisms to objects", "morphisms");
  if (!(identity_.src() == objects_) || !(identity_.dst() == morphisms_))
    fail("identities must map objects to morphisms", "identities");
  if (comp_.size() != n * n) fail("composition table has the wrong size", "compose");
  for (std::size_t o = 0; o < objects_.size(); ++o)
    if (src_(identity_(o)) != o || tgt_(identity_(o)) != o)
      fail("identity of '" + objects_[o] + "' is not an endomorphism of it", "identities/" + objects_[o]);

  auto where = [&](std::size_t g, std::size_t f) { return "compose/" + morphisms_[g] + "∘" + morphisms_[f]; };
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t h = comp_[g * n + f];
      if (src_(g) != tgt_(f)) {
        if (h != kNone) fail("composite given for a non-composable pair", where(g, f));
        continue;
      }
      if (h >= n) fail("composite missing", where(g, f));
      if (src_(h) != src_(f) || tgt_(h) != tgt_(g)) fail("composite has the wrong source or target", where(g, f));
    }
  for (std::size_t f = 0; f < n; ++f) {
    if (compose(f, identity_(src_(f))) != f) fail("right unit law fails", "compose/" + morphisms_[f]);
    if (compose(identity_(tgt_(f)), f) != f) fail("left unit law fails", "compose/" + morphisms_[f]);
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      if (src_(h) != tgt_(g)) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (src_(g) != tgt_(f)) continue;
        if (compose(compose(h, g), f) != compose(h, compose(g, f)))
          fail("composition is not associative", where(h, g) + "∘" + morphisms_[f]);
      }
    }
}

Category Category::from_tables(const std::vector<std::string>& objects, const std::vector<Arrow>& morphisms,
                               const std::map<std::string, std::string>& identities,
                               const std::map<std::pair<std::string, std::string>, std::string>& compose) {
  FinSet obj(objects);
  std::vector<std::string> names;
  for (const auto& m : morphisms) names.push_back(m.name);
  FinSet mor(names);
  const std::size_t n = mor.size();
  std::vector<std::size_t> src(n), tgt(n);
  for (const auto& m : morphisms) {
    const std::size_t i = mor.index_of(m.name);
    auto s = obj.find(m.src), t = obj.find(m.tgt);
    if (!s || !t) throw ValidationError("invalid_category", "morphism endpoint is not an object", "morphisms/" + m.name);
    src[i] = *s;
    tgt[i] = *t;
  }
  std::vector<std::size_t> ident(obj.size());
  for (std::size_t o = 0; o < obj.size(); ++o) {
    auto it = identities.find(obj[o]);
    if (it == identities.end())
      throw ValidationError("invalid_category", "no identity for object '" + obj[o] + "'", "identities/" + obj[o]);
    auto m = mor.find(it->second);
    if (!m) throw ValidationError("invalid_category", "identity is not a morphism", "identities/" + obj[o]);
    ident[o] = *m;
  }
  if (identities.size() != obj.size())
    throw ValidationError("invalid_category", "identity given for an unknown object", "identities");

  std::vector<std::size_t> comp(n * n, kNone);
  for (const auto& [key, value] : compose) {
    const std::string at = "compose/" + key.first + "∘" + key.second;
    auto g = mor.find(key.first), f = mor.find(key.second), h = mor.find(value);
    if (!g || !f || !h) throw ValidationError("invalid_category", "composition table names an unknown morphism", at);
    if (src[*g] != tgt[*f]) throw ValidationError("invalid_category", "composite given for a non-composable pair", at);
    comp[*g * n + *f] = *h;
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (src[g] != tgt[f] || comp[g * n + f] != kNone) continue;
      if (g == ident[tgt[f]]) comp[g * n + f] = f;
      else if (f == ident[src[g]]) comp[g * n + f] = g;
    }
  return Category(obj, mor, SetMap(mor, obj, src), SetMap(mor, obj, tgt), SetMap(obj, mor, ident), std::move(comp));
}

// ---------------------------------------------------------------------------
// Translation

std::vector<std::vector<std::string>> morphism_labels(const Polynomial& p) {
  std::set<std::string> seen;
  for (std::size_t b = 0; b < p.position_count(); ++b) seen.insert(p.directions(b).begin(), p.directions(b).end());
  const bool bare = seen.size() == p.total_size();
  std::vector<std::vector<std::string>> out(p.position_count());
  for (std::size_t b = 0; b < p.position_count(); ++b)
    for (const auto& e : p.directions(b)) out[b].push_back(bare ? e : label::pair(p.positions()[b], e));
  return out;
}

Category to_category(const Comonoid& c) {
  LawReport laws = check_laws(c);
  if (!laws.lawful())
    throw ValidationError("unlawful_comonoid", "the " + laws.failure->law + " law fails",
                          laws.failure->law + "/" + laws.failure->position);
  const Polynomial& p = c.carrier();
  for (std::size_t b = 0; b < p.position_count(); ++b)
    if (c.delta_root(b) != b)
      throw ValidationError("not_a_section", "comultiplication does not return position '" + p.positions()[b] + "'",
                            "comultiplication/" + p.positions()[b]);

  auto labels = morphism_labels(p);
  std::vector<std::string> all;
  for (const auto& fiber : labels) all.insert(all.end(), fiber.begin(), fiber.end());
  FinSet mor(all);
  const std::size_t n = mor.size();
  std::vector<std::vector<std::size_t>> index(p.position_count());
  std::vector<std::size_t> src(n), tgt(n), ident(p.position_count());
  for (std::size_t b = 0; b < p.position_count(); ++b)
    for (std::size_t e = 0; e < labels[b].size(); ++e) {
      const std::size_t m = mor.index_of(labels[b][e]);
      index[b].push_back(m);
      src[m] = b;
      tgt[m] = c.delta_child(b, e);
    }
  for (std::size_t b = 0; b < p.position_count(); ++b) ident[b] = index[b][c.counit_direction(b)];

  std::vector<std::size_t> comp(n * n, Category::kNone);
  for (std::size_t b = 0; b < p.position_count(); ++b)
    for (std::size_t e1 = 0; e1 < index[b].size(); ++e1) {
      const std::size_t b1 = c.delta_child(b, e1);
      for (std::size_t e2 = 0; e2 < index[b1].size(); ++e2)
        comp[index[b1][e2] * n + index[b][e1]] = index[b][c.delta_sharp(b, e1, e2)];
    }
  const FinSet& obj = p.positions();
  return Category(obj, mor, SetMap(mor, obj, src), SetMap(mor, obj, tgt), SetMap(obj, mor, ident), std::move(comp));
}

Comonoid from_category(const Category& cat, const Budget& budget) {
  const FinSet& obj = cat.objects();
  const FinSet& mor = cat.morphisms();
  std::vector<std::vector<std::string>> fibers(obj.size());
  for (std::size_t m = 0; m < mor.size(); ++m) fibers[cat.src()(m)].push_back(mor[m]);
  std::vector<FinSet> dirs;
  for (auto& f : fibers) dirs.emplace_back(std::move(f));
  Polynomial p(obj, dirs);

  // Position of each morphism inside its source's fiber.
  std::vector<std::size_t> slot(mor.size());
  std::vector<std::vector<std::size_t>> member(obj.size());
  for (std::size_t o = 0; o < obj.size(); ++o)
    for (std::size_t e = 0; e < dirs[o].size(); ++e) {
      const std::size_t m = mor.index_of(dirs[o][e]);
      slot[m] = e;
      member[o].push_back(m);
    }

  std::vector<std::vector<std::size_t>> eps_sharp(obj.size());
  for (std::size_t o = 0; o < obj.size(); ++o) eps_sharp[o] = {slot[cat.identity()(o)]};
  PolyMap eps(p, identity_y(), std::vector<std::size_t>(obj.size(), 0), std::move(eps_sharp));

  Composite pp = compose_structured(p, p, budget);
  std::vector<std::size_t> pos(obj.size());
  std::vector<std::vector<std::size_t>> sharp(obj.size());
  for (std::size_t o = 0; o < obj.size(); ++o) {
    std::vector<std::size_t> targets;
    for (auto m : member[o]) targets.push_back(cat.tgt()(m));
    pos[o] = pp.position_index(o, targets);
    for (auto [i, d] : pp.direction[pos[o]]) {
      const std::size_t m1 = member[o][i];
      const std::size_t m2 = member[cat.tgt()(m1)][d];
      sharp[o].push_back(slot[cat.compose(m2, m1)]);
    }
  }
  return Comonoid(p, std::move(eps), PolyMap(p, pp.result, std::move(pos), std::move(sharp)), budget);
}

Comonoid canonical_relabel(const Comonoid& c) {
  const Polynomial& p = c.carrier();
  auto labels = morphism_labels(p);
  std::vector<FinSet> dirs;
  std::vector<std::vector<std::size_t>> perm(p.position_count());  // old index -> new index
  for (std::size_t b = 0; b < p.position_count(); ++b) {
    dirs.emplace_back(labels[b]);
    for (const auto& l : labels[b]) perm[b].push_back(dirs.back().index_of(l));
  }
  Polynomial q(p.positions(), dirs);
  if (q == p) return c;

  std::vector<std::vector<std::size_t>> eps_sharp(p.position_count());
  for (std::size_t b = 0; b < p.position_count(); ++b) eps_sharp[b] = {perm[b][c.counit_direction(b)]};
  PolyMap eps(q, identity_y(), std::vector<std::size_t>(p.position_count(), 0), std::move(eps_sharp));

  Composite qq = compose_structured(q, q);
  std::vector<std::size_t> pos(p.position_count());
  std::vector<std::vector<std::size_t>> sharp(p.position_count());
  for (std::size_t b = 0; b < p.position_count(); ++b) {
    const std::size_t root = c.delta_root(b);
    std::vector<std::size_t> f(q.directions(root).size());
    for (std::size_t e = 0; e < f.size(); ++e) f[perm[root][e]] = c.delta_child(b, e);
    pos[b] = qq.position_index(root, f);
    sharp[b].resize(qq.direction[pos[b]].size());
    for (std::size_t e1 = 0; e1 < f.size(); ++e1) {
      const std::size_t b1 = c.delta_child(b, e1);
      for (std::size_t e2 = 0; e2 < p.directions(b1).size(); ++e2)
        sharp[b][qq.direction_index(pos[b], perm[root][e1], perm[b1][e2])] = perm[b][c.delta_sharp(b, e1, e2)];
    }
  }
  return Comonoid(q, std::move(eps), PolyMap(q, qq.result, std::move(pos), std::move(sharp)));
}

bool roundtrip_check(const Category& cat) { return to_category(from_category(cat)) == cat; }

bool roundtrip_check_comonoid(const Comonoid& c) { return from_category(to_category(c)) == canonical_relabel(c); }

bool retrofunctor_check(const Comonoid& c, const Comonoid& c_prime, const PolyMap& r, const Budget& budget) {
  if (!(r.src() == c.carrier()) || !(r.dst() == c_prime.carrier())) return false;
  if (!(compose_maps(c_prime.counit(), r) == c.counit())) return false;
  Composite mixed = compose_structured(c_prime.carrier(), c.carrier(), budget);
  PolyMap pair = compose_maps(whisker_left(mixed, c_prime.square(), r), whisker_right(c.square(), mixed, r));
  return compose_maps(c_prime.comultiplication(), r) == compose_maps(pair, c.comultiplication());
}

}  // namespace polycat
