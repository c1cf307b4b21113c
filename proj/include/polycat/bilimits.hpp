#pragma once

// Limits and colimits of polynomials.

#include <span>
#include <vector>

#include "polycat/finset.hpp"
#include "polycat/poly.hpp"

namespace polycat {

/// An apex with one leg per diagram object: projections out of a limit,
/// injections into a colimit.
struct PolyCone {
  Polynomial apex;
  std::vector<PolyMap> legs;
};

/// A functor from a Shape to polynomials.
class PolyDiagram {
 public:
  PolyDiagram(Shape shape, std::vector<Polynomial> polys, std::vector<PolyMap> maps);

  const Shape& shape() const { return shape_; }
  const Polynomial& poly(std::size_t object) const { return polys_[object]; }
  const PolyMap& map(std::size_t arrow) const { return maps_[arrow]; }

 private:
  Shape shape_;
  std::vector<Polynomial> polys_;
  std::vector<PolyMap> maps_;
};

/// Positions: the limit of the position sets. Directions at a limit position
/// (b_i): the colimit over the opposite shape of the p_i[b_i] along the φ♯.
PolyCone general_limit(const PolyDiagram& d, const Budget& budget = {});

/// Positions B1×B2, directions p1[b1] ⊔ p2[b2]; legs are the projections.
PolyCone product(const Polynomial& p1, const Polynomial& p2, const Budget& budget = {});

/// Disjoint union of positions, labeled "(k,b)" for the k-th summand (bare
/// labels when there is a single summand).
PolyCone coproduct(std::span<const Polynomial> ps);

/// Coequalizer of f, g: p1 ⇉ p2. Positions: the quotient of B2 by f₁ ~ g₁.
/// Directions at a class c: the limit of the zigzag with a node p2[b] for each
/// b ∈ c, a node p1[b1] for each b1 with f₁(b1) ∈ c, and legs f♯_{b1}, g♯_{b1}.
/// Directions keep the labels of the least member when they project to it
/// injectively.
/// The single leg is the quotient map p2 -> coequalizer.
PolyCone coequalizer(const PolyMap& f, const PolyMap& g, const Budget& budget = {});

/// Coproduct of all objects followed by the coequalizer of the arrows.
PolyCone general_colimit(const PolyDiagram& d, const Budget& budget = {});

/// For every probe p', checks that φ ↦ φ∘projection is a bijection from
/// Hom(candidate, p') onto {ψ: p2 -> p' | ψ∘f = ψ∘g}.
bool universal_property_check(const Polynomial& candidate, const PolyMap& projection, const PolyMap& f,
                              const PolyMap& g, std::span<const Polynomial> probes, const Budget& budget = {});

/// For every probe q, checks that φ ↦ (leg_i ∘ φ)_i is a bijection from
/// Hom(q, apex) onto the cones over d with vertex q.
bool limit_universal_check(const PolyDiagram& d, const PolyCone& cone, std::span<const Polynomial> probes,
                           const Budget& budget = {});
/// For every probe q, checks that φ ↦ (φ ∘ leg_i)_i is a bijection from
/// Hom(apex, q) onto the cocones under d with vertex q.
bool colimit_universal_check(const PolyDiagram& d, const PolyCone& cocone, std::span<const Polynomial> probes,
                             const Budget& budget = {});

/// Every polynomial with at most `max_positions` positions and direction sets
/// of size at most `max_fiber`, one per isomorphism class.
std::vector<Polynomial> small_polynomials(std::size_t max_positions, std::size_t max_fiber);

}  // namespace polycat
