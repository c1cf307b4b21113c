#include <gtest/gtest.h>

#include "polycat/poly.hpp"
#include "support.hpp"

namespace polycat {
namespace {

using testing::all_functions;
using testing::ipow;
using testing::poly_of;
using testing::set_of;

// Counts pairs (φ₁, φ♯) by enumerating every candidate table independently.
std::size_t brute_force_hom_count(const Polynomial& p, const Polynomial& q) {
  std::size_t total = 0;
  for (const auto& phi1 : all_functions(p.position_count(), q.position_count())) {
    std::size_t ways = 1;
    for (std::size_t b = 0; b < phi1.size(); ++b)
      ways *= all_functions(q.directions(phi1[b]).size(), p.directions(b).size()).size();
    total += ways;
  }
  return total;
}

std::vector<Polynomial> some_polys() {
  return {poly_of({}), poly_of({0}), poly_of({1}), poly_of({2}), poly_of({0, 1}), poly_of({1, 2}), poly_of({2, 2}),
          poly_of({0, 0, 3})};
}

TEST(Polynomial, Constructors) {
  Polynomial one = representable(FinSet{});
  EXPECT_EQ(one.position_count(), 1u);
  EXPECT_EQ(one.directions(0).size(), 0u);
  EXPECT_EQ(constant(FinSet{}).position_count(), 0u);
  EXPECT_EQ(Polynomial().position_count(), 0u);
  Polynomial y = identity_y();
  EXPECT_EQ(y.position_count(), 1u);
  EXPECT_EQ(y.directions(0).size(), 1u);
  EXPECT_THROW(Polynomial::from_table(FinSet{"a", "b"}, {{"a", FinSet{}}}), ValidationError);
}

TEST(Polynomial, TotalSpace) {
  Polynomial p = poly_of({2, 0, 1});
  EXPECT_EQ(p.total_size(), 3u);
  FinSet e = p.total_space();
  EXPECT_TRUE(e.contains("(p0,e1)"));
  EXPECT_TRUE(e.contains("(p2,e0)"));
}

TEST(Evaluate, Examples) {
  FinSet x{"a", "b", "c"};
  EXPECT_EQ(evaluate(identity_y(), x).size(), 3u);
  EXPECT_EQ(evaluate(representable(FinSet{"d1", "d2"}), x).size(), 9u);
  FinSet c{"u", "v"};
  FinSet cx = evaluate(constant(c), x);
  EXPECT_EQ(cx.size(), 2u);
  EXPECT_TRUE(cx.contains("(u,{})"));
  FinSet yx = evaluate(identity_y(), x);
  EXPECT_TRUE(yx.contains("(*,{*:b})"));
}

TEST(Evaluate, CardinalityFormula) {
  for (const auto& p : some_polys())
    for (std::size_t n = 0; n <= 3; ++n) {
      std::size_t expected = 0;
      for (std::size_t b = 0; b < p.position_count(); ++b) expected += ipow(n, p.directions(b).size());
      EXPECT_EQ(evaluate(p, set_of(n)).size(), expected);
    }
}

TEST(PolyMap, ValidatesShapes) {
  Polynomial p = poly_of({2}), q = poly_of({1});
  EXPECT_THROW(PolyMap(p, q, {0}, {{5}}), ValidationError);
  EXPECT_THROW(PolyMap(p, q, {1}, {{0}}), ValidationError);
  EXPECT_NO_THROW(PolyMap(p, q, {0}, {{1}}));
}

TEST(ApplyMap, Examples) {
  FinSet x = set_of(2);
  Polynomial p = poly_of({1, 2});
  EXPECT_EQ(apply_map(PolyMap::identity(p), x), SetMap::identity(evaluate(p, x)));

  Polynomial b = constant(FinSet{"b0", "b1"});
  PolyMap pick(identity_y(), b, {1}, {{}});
  SetMap m = apply_map(pick, x);
  for (std::size_t i = 0; i < m.src().size(); ++i) EXPECT_EQ(m.dst()[m(i)], "(b1,{})");

  Polynomial ya = representable(FinSet{"a0", "a1", "a2"});
  PolyMap at(ya, identity_y(), {0}, {{2}});
  FinSet x3 = set_of(3);
  SetMap ev = apply_map(at, x3);
  EXPECT_EQ(ev("(*,{a0:x0,a1:x1,a2:x2})"), "(*,{*:x2})");
  EXPECT_EQ(ev("(*,{a0:x1,a1:x1,a2:x0})"), "(*,{*:x0})");
}

TEST(ComposeMaps, RepresentablesComposeDirectionMaps) {
  Polynomial ya = representable(FinSet{"a0", "a1"});
  Polynomial yb = representable(FinSet{"b0", "b1", "b2"});
  Polynomial yc = representable(FinSet{"c0", "c1"});
  PolyMap f(ya, yb, {0}, {{1, 0, 1}});  // B -> A
  PolyMap g(yb, yc, {0}, {{2, 0}});     // C -> B
  PolyMap gf = compose_maps(g, f);
  std::vector<std::size_t> expected{f.sharp(0)[2], f.sharp(0)[0]};
  EXPECT_EQ(std::vector<std::size_t>(gf.sharp(0).begin(), gf.sharp(0).end()), expected);
  EXPECT_EQ(compose_maps(PolyMap::identity(yb), f), f);
  EXPECT_EQ(compose_maps(f, PolyMap::identity(ya)), f);
  EXPECT_THROW(compose_maps(f, g), ValidationError);
}

TEST(ComposeMaps, AssociativeUnitalAndFunctorialOnEvaluations) {
  Polynomial p = poly_of({1, 2}), q = poly_of({2}), r = poly_of({0, 1});
  auto pq = hom_set(p, q), qr = hom_set(q, r), rp = hom_set(r, p);
  for (const auto& f : pq)
    for (const auto& g : qr) {
      PolyMap gf = compose_maps(g, f);
      for (std::size_t n = 0; n <= 3; ++n) {
        FinSet x = set_of(n);
        EXPECT_EQ(apply_map(gf, x), compose(apply_map(g, x), apply_map(f, x)));
      }
      for (const auto& h : rp) EXPECT_EQ(compose_maps(h, gf), compose_maps(compose_maps(h, g), f));
    }
  for (const auto& f : pq) {
    EXPECT_EQ(compose_maps(f, PolyMap::identity(p)), f);
    EXPECT_EQ(compose_maps(PolyMap::identity(q), f), f);
  }
}

// p(h): p(X) -> p(Y), (b, g) ↦ (b, h∘g), built from the evaluation tables.
SetMap on_functions(const Polynomial& p, const SetMap& h) {
  Evaluation ex = evaluate_structured(p, h.src());
  Evaluation ey = evaluate_structured(p, h.dst());
  std::vector<std::size_t> image(ex.set.size());
  for (std::size_t k = 0; k < ex.set.size(); ++k) {
    std::vector<std::size_t> hg;
    for (auto v : ex.table[k]) hg.push_back(h(v));
    image[k] = ey.index(p, h.dst(), ex.position[k], hg);
  }
  return SetMap(ex.set, ey.set, std::move(image));
}

TEST(ApplyMap, Natural) {
  Polynomial p = poly_of({1, 2}), q = poly_of({0, 2});
  for (const auto& phi : hom_set(p, q))
    for (std::size_t nx = 0; nx <= 3; ++nx)
      for (std::size_t ny = 0; ny <= 3; ++ny)
        for (const auto& t : all_functions(nx, ny)) {
          SetMap h(set_of(nx), set_of(ny, "y"), t);
          EXPECT_EQ(compose(apply_map(phi, h.dst()), on_functions(p, h)),
                    compose(on_functions(q, h), apply_map(phi, h.src())));
        }
}

TEST(HomSet, MatchesBruteForce) {
  for (const auto& p : some_polys())
    for (const auto& q : some_polys()) {
      const std::size_t expected = brute_force_hom_count(p, q);
      EXPECT_EQ(hom_count(p, q), expected);
      auto maps = hom_set(p, q);
      ASSERT_EQ(maps.size(), expected);
      for (std::size_t k = 1; k < maps.size(); ++k) EXPECT_LT(map_key(maps[k - 1]), map_key(maps[k]));
    }
}

TEST(HomSet, OutOfAndIntoY) {
  for (const auto& p : some_polys()) {
    EXPECT_EQ(hom_set(identity_y(), p).size(), p.position_count());
    std::size_t sections = 1;
    for (std::size_t b = 0; b < p.position_count(); ++b) sections *= p.directions(b).size();
    EXPECT_EQ(hom_set(p, identity_y()).size(), sections);
  }
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      EXPECT_EQ(hom_set(representable(set_of(a, "a")), representable(set_of(b, "b"))).size(), ipow(a, b));
}

TEST(HomSet, RespectsBudget) {
  EXPECT_THROW(hom_set(poly_of({3, 3, 3}), poly_of({3, 3, 3}), Budget{100}), BudgetExceeded);
}

TEST(IsoCheck, Examples) {
  Polynomial p = poly_of({2, 3});
  auto self = iso_check(p, p);
  ASSERT_TRUE(self);
  EXPECT_TRUE(is_isomorphism(*self));
  Polynomial q = Polynomial::from_table(FinSet{"a", "b"}, {{"a", set_of(3)}, {"b", set_of(2)}});
  auto swapped = iso_check(p, q);
  ASSERT_TRUE(swapped);
  EXPECT_EQ(swapped->position(0), 1u);
  EXPECT_FALSE(iso_check(poly_of({2}), poly_of({3})));
  EXPECT_FALSE(iso_check(poly_of({1}), poly_of({1, 1})));
}

TEST(FirstDifference, LocatesDirection) {
  Polynomial p = poly_of({2}), q = poly_of({2});
  PolyMap a(p, q, {0}, {{0, 1}}), b(p, q, {0}, {{0, 0}});
  auto d = first_difference(a, b);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->position, 0u);
  EXPECT_EQ(d->direction, std::optional<std::size_t>(1));
  EXPECT_FALSE(first_difference(a, a));
}

}  // namespace
}  // namespace polycat
