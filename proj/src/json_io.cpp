#include "polycat/json_io.hpp"

#include "polycat/label.hpp"
#include "polycat/monoidal.hpp"

namespace polycat::json_io {

namespace {

constexpr std::string_view kCompose = "∘";

std::string join(const std::string& at, const std::string& key) {
  if (key.empty()) return at;
  return at.empty() ? key : at + "/" + key;
}

[[noreturn]] void malformed(const std::string& message, const std::string& at) {
  throw ValidationError("malformed_input", message, at);
}

const Json& field(const Json& j, const char* key, const std::string& at) {
  if (!j.is_object()) malformed("expected an object", at);
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'", at);
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string read_label(const Json& j, const std::string& at) {
  if (!j.is_string()) malformed("expected a string label", at);
  std::string s = j.get<std::string>();
  if (!label::is_well_formed(s)) throw ValidationError("malformed_label", "label '" + s + "' is not well formed", at);
  return s;
}

std::string read_name(const Json& j, const std::string& at) {
  if (!j.is_string() || j.get<std::string>().empty()) malformed("expected a non-empty name", at);
  return j.get<std::string>();
}

std::map<std::string, std::string> read_table(const Json& j, const std::string& at) {
  if (!j.is_object()) malformed("expected an object of labels", at);
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = read_label(it.value(), join(at, it.key()));
  return out;
}

std::pair<std::string, std::string> split_composite(const std::string& key, const std::string& at) {
  const auto pos = key.find(kCompose);
  if (pos == std::string::npos || pos == 0 || pos + kCompose.size() >= key.size())
    malformed("composite key '" + key + "' is not of the form g∘f", at);
  return {key.substr(0, pos), key.substr(pos + kCompose.size())};
}

std::map<std::pair<std::string, std::string>, std::string> read_composites(const Json* j, const std::string& at) {
  std::map<std::pair<std::string, std::string>, std::string> out;
  if (!j) return out;
  if (!j->is_object()) malformed("expected an object", at);
  for (auto it = j->begin(); it != j->end(); ++it)
    out[split_composite(it.key(), join(at, it.key()))] = read_name(it.value(), join(at, it.key()));
  return out;
}

std::vector<Arrow> read_arrows(const Json& j, const std::string& at) {
  if (!j.is_array()) malformed("expected an array of arrows", at);
  std::vector<Arrow> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string here = join(at, std::to_string(k));
    out.push_back(Arrow{read_name(field(j[k], "name", here), here), read_label(field(j[k], "src", here), here),
                        read_label(field(j[k], "tgt", here), here)});
  }
  return out;
}

template <class F>
auto relocate(const std::string& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    if (at.empty()) throw;
    throw ValidationError(e.code(), e.what(), join(at, e.location()));
  }
}

}  // namespace

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed_json", e.what(), source);
  }
}

FinSet read_finset(const Json& j, const std::string& at) {
  if (!j.is_array()) malformed("expected an array of labels", at);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < j.size(); ++k) labels.push_back(read_label(j[k], join(at, std::to_string(k))));
  return relocate(at, [&] { return FinSet(std::move(labels)); });
}

Json write(const FinSet& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(x);
  return out;
}

SetMap read_setmap(const Json& j, const std::string& at) {
  FinSet src = read_finset(field(j, "src", at), join(at, "src"));
  FinSet dst = read_finset(field(j, "dst", at), join(at, "dst"));
  auto table = read_table(field(j, "map", at), join(at, "map"));
  return relocate(join(at, "map"), [&] { return SetMap::from_labels(src, dst, table); });
}

Json write(const SetMap& f) {
  Json map = Json::object();
  for (std::size_t i = 0; i < f.src().size(); ++i) map[f.src()[i]] = f.dst()[f(i)];
  return Json{{"src", write(f.src())}, {"dst", write(f.dst())}, {"map", map}};
}

Polynomial read_poly(const Json& j, const std::string& at) {
  FinSet positions = read_finset(field(j, "positions", at), join(at, "positions"));
  const Json& dirs = field(j, "directions", at);
  if (!dirs.is_object()) malformed("expected an object of direction sets", join(at, "directions"));
  std::map<std::string, FinSet> table;
  for (auto it = dirs.begin(); it != dirs.end(); ++it)
    table.emplace(it.key(), read_finset(it.value(), join(join(at, "directions"), it.key())));
  return relocate(at, [&] { return Polynomial::from_table(positions, table); });
}

Json write(const Polynomial& p) {
  Json dirs = Json::object();
  for (std::size_t b = 0; b < p.position_count(); ++b) dirs[p.positions()[b]] = write(p.directions(b));
  return Json{{"positions", write(p.positions())}, {"directions", dirs}};
}

PolyMap read_polymap(const Json& j, const Polynomial& src, const Polynomial& dst, const std::string& at) {
  if (const Json* s = optional_field(j, "src"); s && !(read_poly(*s, join(at, "src")) == src))
    throw ValidationError("shape_mismatch", "declared source differs from the expected polynomial", join(at, "src"));
  if (const Json* d = optional_field(j, "dst"); d && !(read_poly(*d, join(at, "dst")) == dst))
    throw ValidationError("shape_mismatch", "declared target differs from the expected polynomial", join(at, "dst"));
  auto phi1 = read_table(field(j, "phi1", at), join(at, "phi1"));
  std::map<std::string, std::map<std::string, std::string>> sharp;
  if (const Json* s = optional_field(j, "sharp")) {
    if (!s->is_object()) malformed("expected an object", join(at, "sharp"));
    for (auto it = s->begin(); it != s->end(); ++it)
      sharp[it.key()] = read_table(it.value(), join(join(at, "sharp"), it.key()));
  }
  return relocate(at, [&] { return PolyMap::from_labels(src, dst, phi1, sharp); });
}

PolyMap read_polymap(const Json& j, const std::string& at) {
  Polynomial src = read_poly(field(j, "src", at), join(at, "src"));
  Polynomial dst = read_poly(field(j, "dst", at), join(at, "dst"));
  return read_polymap(j, src, dst, at);
}

Json write(const PolyMap& f, bool with_ends) {
  Json phi1 = Json::object(), sharp = Json::object();
  const Polynomial& p = f.src();
  const Polynomial& q = f.dst();
  for (std::size_t b = 0; b < p.position_count(); ++b) {
    const std::size_t c = f.position(b);
    phi1[p.positions()[b]] = q.positions()[c];
    Json s = Json::object();
    for (std::size_t d = 0; d < q.directions(c).size(); ++d) s[q.directions(c)[d]] = p.directions(b)[f.sharp(b)[d]];
    sharp[p.positions()[b]] = s;
  }
  Json out = Json::object();
  if (with_ends) {
    out["src"] = write(p);
    out["dst"] = write(q);
  }
  out["phi1"] = phi1;
  out["sharp"] = sharp;
  return out;
}

Shape read_shape(const Json& j, const std::string& at) {
  const Json& objs = field(j, "objects", at);
  if (!objs.is_array()) malformed("expected an array of objects", join(at, "objects"));
  std::vector<std::string> objects;
  for (std::size_t k = 0; k < objs.size(); ++k) objects.push_back(read_name(objs[k], join(join(at, "objects"), std::to_string(k))));
  std::vector<Arrow> arrows;
  if (const Json* a = optional_field(j, "arrows")) arrows = read_arrows(*a, join(at, "arrows"));
  auto composites = read_composites(optional_field(j, "compose"), join(at, "compose"));
  return relocate(at, [&] { return Shape(objects, arrows, composites); });
}

Json write(const Shape& s) {
  Json objects = Json::array(), arrows = Json::array(), compose = Json::object();
  for (const auto& o : s.objects()) objects.push_back(o);
  for (const auto& a : s.arrows()) arrows.push_back(Json{{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
  for (std::size_t g = 0; g < s.arrow_count(); ++g)
    for (std::size_t f = 0; f < s.arrow_count(); ++f) {
      if (!s.composable(g, f)) continue;
      const std::size_t h = s.composite(g, f);
      compose[s.arrows()[g].name + std::string(kCompose) + s.arrows()[f].name] =
          h == Shape::kIdentity ? std::string(Shape::kIdentityName) : s.arrows()[h].name;
    }
  return Json{{"objects", objects}, {"arrows", arrows}, {"compose", compose}};
}

FinDiagram read_set_diagram(const Json& j) {
  Shape shape = read_shape(j);
  const Json& sets = field(j, "sets", "");
  std::vector<FinSet> objs;
  for (const auto& o : shape.objects()) objs.push_back(read_finset(field(sets, o.c_str(), "sets"), join("sets", o)));
  std::vector<SetMap> maps;
  const Json* mj = optional_field(j, "maps");
  for (const auto& a : shape.arrows()) {
    if (!mj) malformed("missing field 'maps'", "");
    const std::string at = join("maps", a.name);
    auto table = read_table(field(*mj, a.name.c_str(), "maps"), at);
    maps.push_back(relocate(at, [&] {
      return SetMap::from_labels(objs[shape.object_index(a.src)], objs[shape.object_index(a.tgt)], table);
    }));
  }
  return FinDiagram(std::move(shape), std::move(objs), std::move(maps));
}

PolyDiagram read_poly_diagram(const Json& j) {
  Shape shape = read_shape(j);
  const Json& polys = field(j, "polys", "");
  std::vector<Polynomial> objs;
  for (const auto& o : shape.objects()) objs.push_back(read_poly(field(polys, o.c_str(), "polys"), join("polys", o)));
  std::vector<PolyMap> maps;
  const Json* mj = optional_field(j, "maps");
  for (const auto& a : shape.arrows()) {
    if (!mj) malformed("missing field 'maps'", "");
    maps.push_back(read_polymap(field(*mj, a.name.c_str(), "maps"), objs[shape.object_index(a.src)],
                                objs[shape.object_index(a.tgt)], join("maps", a.name)));
  }
  return PolyDiagram(std::move(shape), std::move(objs), std::move(maps));
}

Comonoid read_comonoid(const Json& j, const Budget& budget, const std::string& at) {
  Polynomial p = read_poly(field(j, "carrier", at), join(at, "carrier"));
  PolyMap eps = read_polymap(field(j, "counit", at), p, identity_y(), join(at, "counit"));
  Polynomial pp = compose(p, p, budget);
  PolyMap delta = read_polymap(field(j, "comultiplication", at), p, pp, join(at, "comultiplication"));
  return Comonoid(p, eps, delta, budget);
}

Json write(const Comonoid& c) {
  return Json{{"carrier", write(c.carrier())},
              {"counit", write(c.counit(), false)},
              {"comultiplication", write(c.comultiplication(), false)}};
}

Category read_category(const Json& j, const std::string& at) {
  FinSet objects = read_finset(field(j, "objects", at), join(at, "objects"));
  std::vector<Arrow> morphisms = read_arrows(field(j, "morphisms", at), join(at, "morphisms"));
  for (std::size_t k = 0; k < morphisms.size(); ++k)
    if (!label::is_well_formed(morphisms[k].name))
      throw ValidationError("malformed_label", "morphism name '" + morphisms[k].name + "' is not well formed",
                            join(join(at, "morphisms"), std::to_string(k)));
  auto identities = read_table(field(j, "identities", at), join(at, "identities"));
  auto composites = read_composites(optional_field(j, "compose"), join(at, "compose"));
  std::vector<std::string> objs(objects.begin(), objects.end());
  return relocate(at, [&] { return Category::from_tables(objs, morphisms, identities, composites); });
}

Json write(const Category& c) {
  Json morphisms = Json::array(), identities = Json::object(), compose = Json::object();
  const FinSet& mor = c.morphisms();
  for (std::size_t m = 0; m < mor.size(); ++m)
    morphisms.push_back(Json{{"name", mor[m]}, {"src", c.objects()[c.src()(m)]}, {"tgt", c.objects()[c.tgt()(m)]}});
  for (std::size_t o = 0; o < c.objects().size(); ++o) identities[c.objects()[o]] = mor[c.identity()(o)];
  for (std::size_t g = 0; g < mor.size(); ++g)
    for (std::size_t f = 0; f < mor.size(); ++f)
      if (const std::size_t h = c.compose(g, f); h != Category::kNone)
        compose[mor[g] + std::string(kCompose) + mor[f]] = mor[h];
  return Json{{"objects", write(c.objects())}, {"morphisms", morphisms}, {"identities", identities}, {"compose", compose}};
}

Json write(const Cone& c) {
  Json legs = Json::array();
  for (const auto& l : c.legs) legs.push_back(write(l));
  return Json{{"apex", write(c.apex)}, {"legs", legs}};
}

Json write(const PolyCone& c) {
  Json legs = Json::array();
  for (const auto& l : c.legs) legs.push_back(write(l, false));
  return Json{{"apex", write(c.apex)}, {"legs", legs}};
}

}  // namespace polycat::json_io
