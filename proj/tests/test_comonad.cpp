#include <gtest/gtest.h>

#include "polycat/comonad.hpp"
#include "support.hpp"

namespace polycat {
namespace {

using testing::corpus_comonoid;
using testing::corpus_names;
using testing::load_category;

// Unit and associativity of a category, checked directly on its tables.
void expect_category_axioms(const Category& c) {
  const std::size_t n = c.morphisms().size();
  for (std::size_t f = 0; f < n; ++f) {
    EXPECT_EQ(c.compose(c.identity()(c.tgt()(f)), f), f);
    EXPECT_EQ(c.compose(f, c.identity()(c.src()(f))), f);
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t gf = c.compose(g, f);
      EXPECT_EQ(gf != Category::kNone, c.src()(g) == c.tgt()(f));
      if (gf == Category::kNone) continue;
      EXPECT_EQ(c.src()(gf), c.src()(f));
      EXPECT_EQ(c.tgt()(gf), c.tgt()(g));
      for (std::size_t h = 0; h < n; ++h)
        if (c.src()(h) == c.tgt()(g)) EXPECT_EQ(c.compose(h, gf), c.compose(c.compose(h, g), f));
    }
  }
}

Comonoid with_delta_sharp(const Comonoid& c, std::size_t b, std::size_t slot, std::size_t value) {
  const PolyMap& d = c.comultiplication();
  std::vector<std::size_t> pos(d.positions().begin(), d.positions().end());
  std::vector<std::vector<std::size_t>> sharp;
  for (std::size_t k = 0; k < pos.size(); ++k) sharp.emplace_back(d.sharp(k).begin(), d.sharp(k).end());
  sharp[b][slot] = value;
  return Comonoid(c.carrier(), c.counit(), PolyMap(d.src(), d.dst(), pos, sharp));
}

TEST(Laws, TrivialAndWalkingArrow) {
  EXPECT_TRUE(check_laws(trivial_comonoid()).lawful());
  EXPECT_TRUE(check_laws_materialized(trivial_comonoid()).lawful());
  Comonoid c = corpus_comonoid("walking_arrow");
  LawReport r = check_laws(c);
  EXPECT_TRUE(r.unit_left && r.unit_right && r.assoc);
  EXPECT_FALSE(r.failure);
}

TEST(Laws, PerturbedComultiplicationIsLocalized) {
  Comonoid c = corpus_comonoid("walking_arrow");
  const Polynomial& p = c.carrier();
  const std::size_t x = p.positions().index_of("x");
  const std::size_t id = p.directions(x).index_of("1x"), f = p.directions(x).index_of("f");
  // δ♯_x(1x, f) should be f.
  const std::size_t slot = c.square().direction_index(c.comultiplication().position(x), id, 1);
  ASSERT_EQ(c.comultiplication().sharp(x)[slot], f);
  Comonoid bad = with_delta_sharp(c, x, slot, id);
  LawReport r = check_laws(bad);
  EXPECT_FALSE(r.lawful());
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->law, "unit_left");
  EXPECT_EQ(r.failure->position, "x");
  EXPECT_EQ(r.failure->component, "direction");
  LawReport m = check_laws_materialized(bad);
  EXPECT_EQ(m.unit_left, r.unit_left);
  EXPECT_EQ(m.unit_right, r.unit_right);
  EXPECT_EQ(m.assoc, r.assoc);
  EXPECT_THROW(to_category(bad), ValidationError);
}

TEST(Laws, TreeAndMaterializedRoutesAgree) {
  // The materialized route builds p∘(p∘p); it is run on the corpus members
  // where that fits the default budget.
  std::size_t compared = 0;
  for (const auto& name : corpus_names()) {
    Comonoid c = corpus_comonoid(name);
    LawReport a = check_laws(c);
    LawReport b;
    try {
      b = check_laws_materialized(c);
    } catch (const BudgetExceeded&) {
      EXPECT_TRUE(a.lawful()) << name;
      continue;
    }
    ++compared;
    EXPECT_TRUE(a.lawful()) << name;
    EXPECT_TRUE(b.lawful()) << name;
    // Every single-entry mutation of δ♯ is judged the same way by both routes.
    const PolyMap& d = c.comultiplication();
    for (std::size_t pos = 0; pos < c.carrier().position_count(); ++pos)
      for (std::size_t slot = 0; slot < d.sharp(pos).size(); ++slot)
        for (std::size_t v = 0; v < c.carrier().directions(pos).size(); ++v) {
          Comonoid m = with_delta_sharp(c, pos, slot, v);
          LawReport x = check_laws(m), y = check_laws_materialized(m);
          EXPECT_EQ(x.unit_left, y.unit_left) << name;
          EXPECT_EQ(x.unit_right, y.unit_right) << name;
          EXPECT_EQ(x.assoc, y.assoc) << name;
        }
  }
  EXPECT_GE(compared, 8u);
}

TEST(ToCategory, Examples) {
  Category t = to_category(trivial_comonoid());
  EXPECT_EQ(t.objects().size(), 1u);
  EXPECT_EQ(t.morphisms().size(), 1u);

  Comonoid wa = corpus_comonoid("walking_arrow");
  Category c = to_category(wa);
  EXPECT_EQ(c.objects().size(), 2u);
  EXPECT_EQ(c.morphisms().size(), 3u);
  std::size_t non_identity = 0;
  for (std::size_t m = 0; m < 3; ++m) non_identity += c.src()(m) != c.tgt()(m);
  EXPECT_EQ(non_identity, 1u);
}

TEST(ToCategory, MonoidOnRepresentable) {
  // Z/2 as a comonoid on y^{e,g}: δ₁ sends * to (*, const *), δ♯(a, b) = ab.
  Polynomial p = representable(FinSet{"e", "g"});
  Polynomial pp = compose(p, p);
  PolyMap eps = PolyMap::from_labels(p, identity_y(), {{"*", "*"}}, {{"*", {{"*", "e"}}}});
  PolyMap delta = PolyMap::from_labels(
      p, pp, {{"*", "(*,{e:*,g:*})"}},
      {{"*", {{"(e,e)", "e"}, {"(e,g)", "g"}, {"(g,e)", "g"}, {"(g,g)", "e"}}}});
  Comonoid c(p, eps, delta);
  ASSERT_TRUE(check_laws(c).lawful());
  Category cat = to_category(c);
  EXPECT_EQ(cat.objects().size(), 1u);
  const std::size_t e = cat.morphisms().index_of("e"), g = cat.morphisms().index_of("g");
  EXPECT_EQ(cat.identity()(0), e);
  EXPECT_EQ(cat.compose(g, g), e);
  EXPECT_EQ(cat.compose(g, e), g);
}

TEST(FromCategory, Examples) {
  Comonoid t = from_category(load_category("terminal"));
  EXPECT_TRUE(iso_check(t.carrier(), identity_y()));
  for (std::size_t n : {2, 3}) {
    Comonoid d = from_category(load_category("discrete_" + std::to_string(n)));
    EXPECT_EQ(d.carrier().position_count(), n);
    for (std::size_t b = 0; b < n; ++b) EXPECT_EQ(d.carrier().directions(b).size(), 1u);
  }
  Comonoid wa = from_category(load_category("walking_arrow"));
  EXPECT_EQ(wa.carrier().directions("x"), (FinSet{"1x", "f"}));
  EXPECT_EQ(wa.carrier().directions("y"), (FinSet{"1y"}));
}

TEST(Roundtrip, Corpus) {
  ASSERT_GE(corpus_names().size(), 10u);
  for (const auto& name : corpus_names()) {
    Category cat = load_category(name);
    expect_category_axioms(cat);
    Comonoid c = from_category(cat);
    EXPECT_TRUE(check_laws(c).lawful()) << name;
    Category back = to_category(c);
    expect_category_axioms(back);
    EXPECT_EQ(back, cat) << name;
    EXPECT_EQ(from_category(back), c) << name;
    EXPECT_TRUE(roundtrip_check(cat)) << name;
    EXPECT_TRUE(roundtrip_check_comonoid(c)) << name;
  }
}

TEST(Roundtrip, RelabelsSharedDirectionNames) {
  // Directions named alike at different positions become "(b,e)" morphisms.
  Polynomial p = Polynomial(FinSet{"a", "b"}, {FinSet{"i"}, FinSet{"i"}});
  Polynomial pp = compose(p, p);
  PolyMap eps = PolyMap::from_labels(p, identity_y(), {{"a", "*"}, {"b", "*"}}, {{"a", {{"*", "i"}}}, {"b", {{"*", "i"}}}});
  PolyMap delta = PolyMap::from_labels(p, pp, {{"a", "(a,{i:a})"}, {"b", "(b,{i:b})"}},
                                       {{"a", {{"(i,i)", "i"}}}, {"b", {{"(i,i)", "i"}}}});
  Comonoid c(p, eps, delta);
  Category cat = to_category(c);
  EXPECT_TRUE(cat.morphisms().contains("(a,i)"));
  Comonoid relabeled = canonical_relabel(c);
  EXPECT_EQ(relabeled.carrier().directions("a"), (FinSet{"(a,i)"}));
  EXPECT_EQ(from_category(cat), relabeled);
  EXPECT_TRUE(roundtrip_check_comonoid(c));
}

TEST(ToCategory, RejectsNonSection) {
  Polynomial p = Polynomial(FinSet{"a", "b"}, {FinSet{"i"}, FinSet{"j"}});
  Polynomial pp = compose(p, p);
  PolyMap eps = PolyMap::from_labels(p, identity_y(), {{"a", "*"}, {"b", "*"}}, {{"a", {{"*", "i"}}}, {"b", {{"*", "j"}}}});
  PolyMap delta = PolyMap::from_labels(p, pp, {{"a", "(b,{j:a})"}, {"b", "(b,{j:b})"}},
                                       {{"a", {{"(j,i)", "i"}}}, {"b", {{"(j,j)", "j"}}}});
  Comonoid c(p, eps, delta);
  EXPECT_FALSE(check_laws(c).lawful());
  try {
    to_category(c);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.code() == "unlawful_comonoid" || e.code() == "not_a_section");
  }
}

TEST(Category, ValidatesTables) {
  EXPECT_THROW(Category::from_tables({"o"}, {{"1o", "o", "o"}, {"a", "o", "o"}}, {{"o", "1o"}}, {}), ValidationError);
  EXPECT_THROW(Category::from_tables({"o"}, {{"1o", "o", "o"}, {"a", "o", "o"}, {"b", "o", "o"}}, {{"o", "1o"}},
                                     {{{"a", "a"}, "a"}, {{"a", "b"}, "b"}, {{"b", "a"}, "a"}, {{"b", "b"}, "a"}}),
               ValidationError);
}

Comonoid corpus(const char* n) { return corpus_comonoid(n); }

PolyMap map_between(const Comonoid& c, const Comonoid& d, const std::map<std::string, std::string>& phi1,
                    const std::map<std::string, std::map<std::string, std::string>>& sharp) {
  return PolyMap::from_labels(c.carrier(), d.carrier(), phi1, sharp);
}

TEST(Retrofunctor, Examples) {
  for (const auto& name : corpus_names()) {
    Comonoid c = corpus_comonoid(name);
    EXPECT_TRUE(retrofunctor_check(c, c, PolyMap::identity(c.carrier()))) << name;
    EXPECT_TRUE(retrofunctor_check(c, trivial_comonoid(), c.counit())) << name;
  }
  Comonoid wa = corpus("walking_arrow"), d2 = corpus("discrete_2");
  PolyMap collapse = map_between(wa, d2, {{"x", "a"}, {"y", "b"}}, {{"x", {{"1a", "1x"}}}, {"y", {{"1b", "1y"}}}});
  EXPECT_TRUE(retrofunctor_check(wa, d2, collapse));
  PolyMap bad = map_between(d2, wa, {{"a", "x"}, {"b", "y"}}, {{"a", {{"1x", "1a"}, {"f", "1a"}}}, {"b", {{"1y", "1b"}}}});
  EXPECT_FALSE(retrofunctor_check(d2, wa, bad));
}

TEST(Retrofunctor, CompositesOfRetrofunctors) {
  Comonoid wa = corpus("walking_arrow"), d2 = corpus("discrete_2"), t = trivial_comonoid();
  PolyMap r1 = map_between(wa, d2, {{"x", "a"}, {"y", "b"}}, {{"x", {{"1a", "1x"}}}, {"y", {{"1b", "1y"}}}});
  PolyMap r2 = d2.counit();
  ASSERT_TRUE(retrofunctor_check(d2, t, r2));
  EXPECT_TRUE(retrofunctor_check(wa, t, compose_maps(r2, r1)));

  Comonoid z2 = corpus("z2"), z3 = corpus("z3");
  // The only retrofunctors Z/3 -> Z/2 would need a lift of g of order dividing 3.
  PolyMap lift = map_between(z3, z2, {{"o", "o"}}, {{"o", {{"1o", "1o"}, {"g", "g"}}}});
  EXPECT_FALSE(retrofunctor_check(z3, z2, lift));
}

}  // namespace
}  // namespace polycat
