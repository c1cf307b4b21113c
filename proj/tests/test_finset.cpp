#include <gtest/gtest.h>

#include "polycat/finset.hpp"
#include "polycat/label.hpp"
#include "support.hpp"

namespace polycat {
namespace {

using testing::all_functions;
using testing::set_of;

TEST(Label, RendersTuplesAndTables) {
  EXPECT_EQ(label::pair("a", "b"), "(a,b)");
  EXPECT_EQ(label::tuple({"a"}), "a");
  EXPECT_EQ(label::tuple({"a", "(b,c)", "d"}), "(a,(b,c),d)");
  std::vector<std::string> keys{"k1", "k2"}, values{"v", "(x,y)"};
  EXPECT_EQ(label::table(keys, values), "{k1:v,k2:(x,y)}");
  EXPECT_EQ(label::table(std::span<const std::string>{}, std::span<const std::string>{}), "{}");
}

TEST(Label, WellFormedness) {
  EXPECT_TRUE(label::is_well_formed("a"));
  EXPECT_TRUE(label::is_well_formed("(a,{x:b,y:(c,d)})"));
  EXPECT_TRUE(label::is_well_formed("{}"));
  EXPECT_FALSE(label::is_well_formed(""));
  EXPECT_FALSE(label::is_well_formed("a,b"));
  EXPECT_FALSE(label::is_well_formed("(a"));
  EXPECT_FALSE(label::is_well_formed("{a}"));
  EXPECT_FALSE(label::is_well_formed("x:y"));
}

TEST(FinSet, SortedAndDistinct) {
  FinSet s{"c", "a", "b"};
  EXPECT_EQ(s[0], "a");
  EXPECT_EQ(s.index_of("c"), 2u);
  EXPECT_FALSE(s.contains("d"));
  EXPECT_THROW(FinSet({"a", "a"}), ValidationError);
  EXPECT_THROW(s.index_of("d"), ValidationError);
}

TEST(SetMap, ComposeAndProperties) {
  FinSet a{"1", "2"}, b{"x", "y", "z"};
  SetMap f = SetMap::from_labels(a, b, {{"1", "x"}, {"2", "z"}});
  SetMap g = SetMap::from_labels(b, a, {{"x", "2"}, {"y", "2"}, {"z", "1"}});
  EXPECT_TRUE(f.is_injective());
  EXPECT_FALSE(f.is_surjective());
  SetMap gf = compose(g, f);
  EXPECT_EQ(gf("1"), "2");
  EXPECT_EQ(gf("2"), "1");
  EXPECT_THROW(compose(f, f), ValidationError);
  EXPECT_THROW(SetMap::from_labels(a, b, {{"1", "x"}}), ValidationError);
}

TEST(MapSet, Sizes) {
  EXPECT_EQ(map_set(FinSet{}, set_of(3)).size(), 1u);
  EXPECT_EQ(map_set(set_of(2), set_of(3)).size(), 9u);
  EXPECT_EQ(map_set(set_of(2), FinSet{}).size(), 0u);
  FinSet m = map_set(FinSet{"i", "j"}, FinSet{"a", "b"});
  EXPECT_TRUE(m.contains("{i:a,j:b}"));
}

TEST(Limits, Examples) {
  EXPECT_EQ(limit(FinDiagram(Shape::discrete({}), {}, {})).apex.size(), 1u);
  EXPECT_EQ(colimit(FinDiagram(Shape::discrete({}), {}, {})).apex.size(), 0u);

  FinSet a = set_of(2, "a"), b = set_of(3, "b"), pt = FinSet::singleton();
  Pullback over_point = pullback(SetMap::constant(a, pt, 0), SetMap::constant(b, pt, 0));
  EXPECT_EQ(over_point.apex.size(), 6u);

  FinSet two{"a", "b"}, xy{"x", "y"};
  Shape pair = Shape::parallel_pair();
  FinDiagram eq(pair, {two, xy}, {SetMap::constant(two, xy, 0), SetMap::constant(two, xy, 1)});
  EXPECT_EQ(limit(eq).apex.size(), 0u);

  Cone sum = colimit(FinDiagram(Shape::discrete({"0", "1"}), {set_of(2), set_of(3)}, {}));
  EXPECT_EQ(sum.apex.size(), 5u);

  Quotient q = coequalizer(SetMap::identity(two), SetMap::from_labels(two, two, {{"a", "b"}, {"b", "a"}}));
  EXPECT_EQ(q.apex.size(), 1u);
}

TEST(Pullback, Examples) {
  FinSet x = set_of(3);
  EXPECT_EQ(pullback(SetMap::identity(x), SetMap::identity(x)).apex.size(), 3u);
  FinSet a = set_of(2, "a"), b = set_of(3, "b"), c{"p", "q"};
  EXPECT_EQ(pullback(SetMap::constant(a, c, 1), SetMap::constant(b, c, 1)).apex.size(), 6u);
  FinSet xy{"x", "y"};
  SetMap f = SetMap::from_labels(FinSet{"1", "2"}, xy, {{"1", "x"}, {"2", "y"}});
  SetMap g = SetMap::from_labels(FinSet{"3"}, xy, {{"3", "x"}});
  Pullback pb = pullback(f, g);
  ASSERT_EQ(pb.apex.size(), 1u);
  EXPECT_EQ(pb.apex[0], "(1,3)");
}

TEST(Pullback, AgreesWithCospanLimit) {
  for (std::size_t na = 0; na <= 2; ++na)
    for (std::size_t nb = 0; nb <= 2; ++nb)
      for (std::size_t nc = 1; nc <= 2; ++nc) {
        FinSet a = set_of(na, "a"), b = set_of(nb, "b"), c = set_of(nc, "c");
        for (const auto& ft : all_functions(na, nc))
          for (const auto& gt : all_functions(nb, nc)) {
            SetMap f(a, c, ft), g(b, c, gt);
            Pullback pb = pullback(f, g);
            Cone lim = limit(FinDiagram(Shape::cospan(), {a, c, b}, {f, g}));
            ASSERT_EQ(pb.apex.size(), lim.apex.size());
            // Shape::cospan lists objects l, c, r; limit labels are (a,c,b).
            for (std::size_t k = 0; k < lim.apex.size(); ++k) {
              const std::string ai = a[lim.legs[0](k)], bi = b[lim.legs[2](k)];
              EXPECT_TRUE(pb.apex.contains(label::pair(ai, bi)));
            }
          }
      }
}

// Cones over d with apex T are enumerated directly; each must factor through
// the limit in exactly one way (and dually for cocones).
std::size_t factorizations(const Cone& universal, const Cone& other, bool is_limit) {
  const FinSet& from = is_limit ? other.apex : universal.apex;
  const FinSet& to = is_limit ? universal.apex : other.apex;
  std::size_t count = 0;
  for (const auto& t : all_functions(from.size(), to.size())) {
    SetMap u(from, to, t);
    bool ok = true;
    for (std::size_t i = 0; i < universal.legs.size() && ok; ++i)
      ok = is_limit ? compose(universal.legs[i], u) == other.legs[i] : compose(u, universal.legs[i]) == other.legs[i];
    count += ok;
  }
  return count;
}

void all_families(const FinDiagram& d, const FinSet& t, bool outgoing, std::vector<SetMap>& legs,
                  std::vector<Cone>& found) {
  const std::size_t i = legs.size();
  if (i == d.shape().object_count()) {
    Cone c{t, legs};
    if (outgoing ? is_cone(d, c) : is_cocone(d, c)) found.push_back(c);
    return;
  }
  const FinSet& s = d.set(i);
  for (const auto& tab : all_functions(outgoing ? t.size() : s.size(), outgoing ? s.size() : t.size())) {
    legs.push_back(outgoing ? SetMap(t, s, tab) : SetMap(s, t, tab));
    all_families(d, t, outgoing, legs, found);
    legs.pop_back();
  }
}

void expect_universal(const FinDiagram& d) {
  Cone lim = limit(d);
  Cone colim = colimit(d);
  ASSERT_TRUE(is_cone(d, lim));
  ASSERT_TRUE(is_cocone(d, colim));
  for (std::size_t n = 0; n <= 2; ++n) {
    FinSet t = set_of(n, "t");
    std::vector<SetMap> legs;
    std::vector<Cone> cones, cocones;
    all_families(d, t, true, legs, cones);
    all_families(d, t, false, legs, cocones);
    for (const auto& c : cones) {
      EXPECT_EQ(factorizations(lim, c, true), 1u);
      EXPECT_EQ(count_cone_factorizations(lim, c), 1u);
    }
    for (const auto& c : cocones) {
      EXPECT_EQ(factorizations(colim, c, false), 1u);
      EXPECT_EQ(count_cocone_factorizations(colim, c), 1u);
    }
  }
}

TEST(Limits, UniversalOnSmallDiagrams) {
  for (std::size_t na = 0; na <= 2; ++na)
    for (std::size_t nb = 0; nb <= 2; ++nb) {
      FinSet a = set_of(na, "a"), b = set_of(nb, "b");
      expect_universal(FinDiagram(Shape::discrete({"0", "1"}), {a, b}, {}));
      for (const auto& ft : all_functions(na, nb))
        for (const auto& gt : all_functions(na, nb))
          expect_universal(FinDiagram(Shape::parallel_pair(), {a, b}, {SetMap(a, b, ft), SetMap(a, b, gt)}));
    }
}

TEST(Limits, UniversalOnFourNodeDiagram) {
  // A commuting square s -> l, s -> r, l -> c, r -> c with the diagonal.
  Shape square({"s", "l", "r", "c"},
               {{"u", "s", "l"}, {"v", "s", "r"}, {"f", "l", "c"}, {"g", "r", "c"}, {"h", "s", "c"}},
               {{{"f", "u"}, "h"}, {{"g", "v"}, "h"}});
  FinSet s = set_of(2, "s"), l = set_of(2, "l"), r = set_of(1, "r"), c = set_of(2, "c");
  for (const auto& ut : all_functions(2, 2))
    for (const auto& ft : all_functions(2, 2)) {
      SetMap u(s, l, ut), f(l, c, ft);
      SetMap h = compose(f, u);
      for (const auto& gt : all_functions(1, 2)) {
        SetMap g(r, c, gt), v = SetMap::constant(s, r, 0);
        if (!(compose(g, v) == h)) continue;
        expect_universal(FinDiagram(square, {s, l, r, c}, {u, v, f, g, h}));
      }
    }
}

TEST(Limits, OneNodeDiagramIsItself) {
  FinSet x = set_of(3);
  FinDiagram d(Shape::discrete({"only"}), {x}, {});
  Cone lim = limit(d), colim = colimit(d);
  EXPECT_EQ(lim.apex, x);
  EXPECT_EQ(lim.legs[0], SetMap::identity(x));
  EXPECT_EQ(colim.apex, x);
  EXPECT_EQ(colim.legs[0], SetMap::identity(x));
}

TEST(Limits, FunctorialityIsChecked) {
  Shape square({"s", "l", "c"}, {{"u", "s", "l"}, {"f", "l", "c"}, {"h", "s", "c"}}, {{{"f", "u"}, "h"}});
  FinSet s{"a"}, l{"b"}, c{"x", "y"};
  EXPECT_THROW(FinDiagram(square, {s, l, c},
                          {SetMap::constant(s, l, 0), SetMap::constant(l, c, 0), SetMap::constant(s, c, 1)}),
               ValidationError);
}

TEST(Distributivity, Examples) {
  FinSet one{"b"}, two{"b0", "b1"}, bp{"u", "v"};
  FinSet s1{"*"}, s2{"m0", "m1"};
  DistributivityReport single = distributivity_check(one, bp, {{s2, s1}});
  EXPECT_TRUE(single.holds);
  EXPECT_EQ(single.product_of_sums, 3u);
  DistributivityReport flat = distributivity_check(two, bp, {{s1, s1}, {s1, s1}});
  EXPECT_TRUE(flat.holds);
  EXPECT_EQ(flat.product_of_sums, 4u);
  EXPECT_EQ(flat.sum_of_products, 4u);
  DistributivityReport point = distributivity_check(two, FinSet{"u"}, {{s2}, {s1}});
  EXPECT_TRUE(point.holds);
  EXPECT_EQ(point.sum_of_products, 2u);
}

}  // namespace
}  // namespace polycat
