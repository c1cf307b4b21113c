#pragma once

// Polynomials Σ_{b∈B} y^{p[b]} over finite sets and the maps between them.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycat/finset.hpp"

namespace polycat {

/// A position set B together with a direction set p[b] for every b ∈ B.
/// Immutable; copies share storage.
class Polynomial {
 public:
  /// The initial polynomial 0 (no positions).
  Polynomial();
  Polynomial(FinSet positions, std::vector<FinSet> directions);

  static Polynomial from_table(FinSet positions, const std::map<std::string, FinSet>& directions);

  const FinSet& positions() const { return data_->positions; }
  const FinSet& directions(std::size_t b) const { return data_->directions[b]; }
  const FinSet& directions(std::string_view b) const { return data_->directions[positions().index_of(b)]; }
  std::size_t position_count() const { return data_->positions.size(); }

  /// Σ_b p[b] with elements labeled "(b,e)".
  FinSet total_space() const;
  std::size_t total_size() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  struct Data {
    FinSet positions;
    std::vector<FinSet> directions;
  };
  std::shared_ptr<const Data> data_;
};

/// y^A: one position "*" with direction set A.
Polynomial representable(const FinSet& a);
/// The constant polynomial on C: positions C, every direction set empty.
Polynomial constant(const FinSet& c);
/// y = y^{*}.
Polynomial identity_y();

/// A map φ: p -> p' given by φ₁: B -> B' and, for each b, φ♯_b: p'[φ₁(b)] -> p[b].
class PolyMap {
 public:
  PolyMap(Polynomial src, Polynomial dst, std::vector<std::size_t> on_positions,
          std::vector<std::vector<std::size_t>> on_directions);

  static PolyMap identity(const Polynomial& p);
  static PolyMap from_labels(Polynomial src, Polynomial dst, const std::map<std::string, std::string>& phi1,
                             const std::map<std::string, std::map<std::string, std::string>>& sharp);

  const Polynomial& src() const { return src_; }
  const Polynomial& dst() const { return dst_; }

  std::size_t position(std::size_t b) const { return positions_[b]; }
  std::span<const std::size_t> positions() const { return positions_; }
  std::span<const std::size_t> sharp(std::size_t b) const { return sharp_[b]; }

  SetMap on_positions() const;
  SetMap on_directions(std::size_t b) const;

  friend bool operator==(const PolyMap& a, const PolyMap& b);

 private:
  Polynomial src_;
  Polynomial dst_;
  std::vector<std::size_t> positions_;
  std::vector<std::vector<std::size_t>> sharp_;
};

/// Where two parallel maps first disagree: a position, and a direction of the
/// common target position when the positions agree.
struct MapDifference {
  std::size_t position;
  std::optional<std::size_t> direction;
};
std::optional<MapDifference> first_difference(const PolyMap& a, const PolyMap& b);

/// ψ ∘ φ. Throws ValidationError("shape_mismatch") unless φ.dst == ψ.src.
PolyMap compose_maps(const PolyMap& psi, const PolyMap& phi);

/// p(X) = Σ_b X^{p[b]} with elements (b, g) labeled "(b,{d:x,...})".
struct Evaluation {
  FinSet set;
  std::vector<std::size_t> position;              // per element
  std::vector<std::vector<std::size_t>> table;    // per element, p[b] -> X

  std::size_t index(const Polynomial& p, const FinSet& x, std::size_t b, std::span<const std::size_t> g) const;
};
Evaluation evaluate_structured(const Polynomial& p, const FinSet& x, const Budget& budget = {});
FinSet evaluate(const Polynomial& p, const FinSet& x, const Budget& budget = {});
std::string evaluation_label(const Polynomial& p, const FinSet& x, std::size_t b, std::span<const std::size_t> g);

/// The component at X of the natural transformation φ: (b, g) ↦ (φ₁(b), g ∘ φ♯_b).
SetMap apply_map(const PolyMap& phi, const FinSet& x, const Budget& budget = {});

/// |Hom(p, q)| = Π_b Σ_{b'} |p[b]|^{|q[b']|}, saturating.
std::size_t hom_count(const Polynomial& p, const Polynomial& q);
/// Every map p -> q, lexicographic in φ₁ and then in each φ♯_b by position order.
std::vector<PolyMap> hom_set(const Polynomial& p, const Polynomial& q, const Budget& budget = {});

/// An isomorphism p -> q if one exists; exhaustive over position bijections.
std::optional<PolyMap> iso_check(const Polynomial& p, const Polynomial& q);
bool is_isomorphism(const PolyMap& phi);

}  // namespace polycat

namespace polycat {

/// φ₁ followed by every φ♯_b, flattened. Injective among maps with a common
/// source and target, so it serves as a set key.
std::vector<std::size_t> map_key(const PolyMap& phi);

}  // namespace polycat
