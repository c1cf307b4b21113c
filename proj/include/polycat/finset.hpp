#pragma once

// Finite sets of labels, total maps between them, and limits/colimits of
// finite diagrams of finite sets.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycat/error.hpp"

namespace polycat {

/// An immutable finite set of distinct labels, kept in sorted order so that
/// equality is list equality. Copies share storage.
class FinSet {
 public:
  FinSet();
  /// Sorts the labels; throws ValidationError on duplicates.
  explicit FinSet(std::vector<std::string> labels);
  FinSet(std::initializer_list<std::string> labels);

  static FinSet singleton(std::string label = "*");

  std::size_t size() const { return elems_->size(); }
  bool empty() const { return elems_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*elems_)[i]; }
  std::span<const std::string> elements() const { return *elems_; }
  auto begin() const { return elems_->begin(); }
  auto end() const { return elems_->end(); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws ValidationError("unknown_label") when absent.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> elems_;
};

/// A total map between finite sets, stored as an index table.
class SetMap {
 public:
  SetMap() = default;
  SetMap(FinSet src, FinSet dst, std::vector<std::size_t> image);

  static SetMap identity(const FinSet& s);
  static SetMap from_labels(FinSet src, FinSet dst, const std::map<std::string, std::string>& table);
  /// The unique map out of the empty set, or the constant map to `value`.
  static SetMap constant(FinSet src, FinSet dst, std::size_t value);

  const FinSet& src() const { return src_; }
  const FinSet& dst() const { return dst_; }
  std::span<const std::size_t> image() const { return image_; }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::string& operator()(std::string_view label) const { return dst_[image_[src_.index_of(label)]]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return src_.size() == dst_.size() && is_injective(); }

  friend bool operator==(const SetMap& a, const SetMap& b) {
    return a.image_ == b.image_ && a.src_ == b.src_ && a.dst_ == b.dst_;
  }

 private:
  FinSet src_;
  FinSet dst_;
  std::vector<std::size_t> image_;
};

/// g ∘ f. Throws ValidationError("shape_mismatch") unless f.dst == g.src.
SetMap compose(const SetMap& g, const SetMap& f);

/// All maps {0..a-1} -> {0..b-1} as index tables, lexicographic in the table.
std::vector<std::vector<std::size_t>> enumerate_tables(std::size_t a, std::size_t b,
                                                       const Budget& budget = {});

/// Canonical label of the map A -> B with the given index table.
std::string map_label(const FinSet& a, const FinSet& b, std::span<const std::size_t> table);

/// The set of all total maps A -> B, each labeled by its assignment table.
FinSet map_set(const FinSet& a, const FinSet& b, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Shapes and diagrams

struct Arrow {
  std::string name;
  std::string src;
  std::string tgt;
};

/// A finite category presented by objects, non-identity arrows and a complete
/// composition table. Composites are keyed (g, f) for g∘f; the value is an
/// arrow name or "id" when the composite is an identity.
class Shape {
 public:
  static constexpr std::size_t kIdentity = static_cast<std::size_t>(-1);
  static constexpr std::string_view kIdentityName = "id";

  Shape() = default;
  Shape(std::vector<std::string> objects, std::vector<Arrow> arrows,
        const std::map<std::pair<std::string, std::string>, std::string>& composites = {});

  static Shape discrete(std::vector<std::string> objects);
  /// src ⇉ tgt with arrows named "f" and "g".
  static Shape parallel_pair(std::string src = "s", std::string tgt = "t");
  /// left -> apex <- right with arrows named "l" and "r".
  static Shape cospan(std::string left = "l", std::string apex = "c", std::string right = "r");

  std::span<const std::string> objects() const { return objects_; }
  std::span<const Arrow> arrows() const { return arrows_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t object_index(std::string_view name) const;
  std::size_t arrow_index(std::string_view name) const;
  std::size_t src(std::size_t arrow) const { return src_[arrow]; }
  std::size_t tgt(std::size_t arrow) const { return tgt_[arrow]; }

  bool composable(std::size_t g, std::size_t f) const { return src_[g] == tgt_[f]; }
  /// Index of g∘f, or kIdentity. Precondition: composable(g, f).
  std::size_t composite(std::size_t g, std::size_t f) const { return comp_[g * arrows_.size() + f]; }

  Shape opposite() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> tgt_;
  std::vector<std::size_t> comp_;
};

/// A functor from a Shape to finite sets. Functoriality is checked on
/// construction against the shape's composition table.
class FinDiagram {
 public:
  FinDiagram(Shape shape, std::vector<FinSet> sets, std::vector<SetMap> maps);

  const Shape& shape() const { return shape_; }
  const FinSet& set(std::size_t object) const { return sets_[object]; }
  const SetMap& map(std::size_t arrow) const { return maps_[arrow]; }
  std::span<const FinSet> sets() const { return sets_; }
  std::span<const SetMap> maps() const { return maps_; }

 private:
  Shape shape_;
  std::vector<FinSet> sets_;
  std::vector<SetMap> maps_;
};

/// An apex with one leg per object of the shape: projections for a cone,
/// injections for a cocone.
struct Cone {
  FinSet apex;
  std::vector<SetMap> legs;
};

/// Families natural with respect to every arrow. Labels are tuples of
/// components in object order.
Cone limit(const FinDiagram& d, const Budget& budget = {});
/// Disjoint union modulo x ~ map(x); classes are labeled by their least
/// representative, with representatives tagged "(object,x)" unless the shape
/// has a single object.
Cone colimit(const FinDiagram& d);

bool is_cone(const FinDiagram& d, const Cone& c);
bool is_cocone(const FinDiagram& d, const Cone& c);
/// Number of maps u: cone.apex -> lim.apex with lim.legs[i] ∘ u = cone.legs[i].
std::size_t count_cone_factorizations(const Cone& lim, const Cone& cone);
/// Number of maps u: colim.apex -> cocone.apex with u ∘ colim.legs[i] = cocone.legs[i].
std::size_t count_cocone_factorizations(const Cone& colim, const Cone& cocone);

struct Pullback {
  FinSet apex;
  SetMap left;   // apex -> f.src
  SetMap right;  // apex -> g.src
};

/// Pairs (a, b) with f(a) = g(b), labeled "(a,b)".
Pullback pullback(const SetMap& f, const SetMap& g, const Budget& budget = {});

struct Quotient {
  FinSet apex;
  SetMap projection;  // from the codomain of the pair
};

/// Coequalizer of f, g: A ⇉ B as a quotient of B; classes are labeled by
/// their least element.
Quotient coequalizer(const SetMap& f, const SetMap& g);

struct DistributivityReport {
  bool holds = false;
  std::size_t product_of_sums = 0;  // |Π_b Σ_b' m(b,b')|
  std::size_t sum_of_products = 0;  // |Σ_{f:B->B'} Π_b m(b,f(b))|
  SetMap witness;
};

/// Builds the canonical map Π_b Σ_b' m(b,b') -> Σ_{f:B->B'} Π_b m(b,f(b)) and
/// checks that it is a bijection. m is indexed [b][b'].
DistributivityReport distributivity_check(const FinSet& b, const FinSet& b_prime,
                                          const std::vector<std::vector<FinSet>>& m,
                                          const Budget& budget = {});

}  // namespace polycat
