#pragma once

// The composition product p1 ∘ p2, its functoriality on maps, iterated
// self-composition, and the coclosure [p ⟦ p1] with its adjunction unit.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polycat/poly.hpp"

namespace polycat {

/// p1 ∘ p2 together with the decoding of its positions and directions.
///
/// A position is (b1, f) with f: p1[b1] -> B2, labeled "(b1,{i:b2,...})".
/// A direction at (b1, f) is (i, d) with d ∈ p2[f(i)], labeled "(i,d)".
struct Composite {
  Polynomial outer;
  Polynomial inner;
  Polynomial result;

  std::vector<std::size_t> outer_position;              // P -> b1
  std::vector<std::vector<std::size_t>> inner_position; // P -> f
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> direction;  // (P, dir) -> (i, d)

  std::size_t position_index(std::size_t b1, std::span<const std::size_t> f) const;
  std::size_t direction_index(std::size_t position, std::size_t i, std::size_t d) const;

  // Lookup tables behind position_index/direction_index.
  std::vector<std::size_t> position_offset;             // per b1
  std::vector<std::size_t> position_lookup;             // offset + rank(f) -> P
  std::vector<std::vector<std::size_t>> direction_base; // (P, i) -> first slot of block i
  std::vector<std::vector<std::size_t>> direction_lookup;
};

Composite compose_structured(const Polynomial& p1, const Polynomial& p2, const Budget& budget = {});
Polynomial compose(const Polynomial& p1, const Polynomial& p2, const Budget& budget = {});

/// r∘φ: r∘p -> r∘p'. (b, g) ↦ (b, φ₁∘g); (i, d') ↦ (i, φ♯_{g(i)}(d')).
PolyMap whisker_left(const Composite& from, const Composite& to, const PolyMap& phi);
PolyMap whisker_left(const Polynomial& r, const PolyMap& phi, const Budget& budget = {});
/// φ∘r: p∘r -> p'∘r. (b, g) ↦ (φ₁(b), g∘φ♯_b); (i', d) ↦ (φ♯_b(i'), d).
PolyMap whisker_right(const Composite& from, const Composite& to, const PolyMap& phi);
PolyMap whisker_right(const PolyMap& phi, const Polynomial& r, const Budget& budget = {});

/// p -> y∘p and its inverse.
PolyMap left_unitor(const Composite& y_p);
PolyMap left_unitor_inverse(const Composite& y_p);
/// p -> p∘y and its inverse.
PolyMap right_unitor(const Composite& p_y);
PolyMap right_unitor_inverse(const Composite& p_y);
PolyMap left_unitor(const Polynomial& p);
PolyMap right_unitor(const Polynomial& p);

/// (p∘q)∘r -> p∘(q∘r): ((b,g),h) ↦ (b, i ↦ (g(i), j ↦ h(i,j))).
PolyMap associator(const Composite& pq, const Composite& pq_r, const Composite& qr, const Composite& p_qr);
PolyMap associator(const Polynomial& p, const Polynomial& q, const Polynomial& r, const Budget& budget = {});

/// p^{∘0} = y, p^{∘1} = p, p^{∘(k+1)} = p ∘ p^{∘k}.
struct Iterated {
  std::vector<Polynomial> powers;      // k = 0..n
  std::vector<Composite> steps;        // steps[k] = p ∘ p^{∘(k-1)} for k ≥ 2; empty slots below
  const FinSet& positions(std::size_t k) const { return powers[k].positions(); }  // B_k
  FinSet total_space(std::size_t k) const { return powers[k].total_space(); }     // E_k
};
Iterated iterate(const Polynomial& p, std::size_t n, const Budget& budget = {});

/// [p ⟦ p1]: positions B1, direction set at b1 is p(p1[b1]).
Polynomial coclosure(const Polynomial& p, const Polynomial& p1, const Budget& budget = {});

/// p1 -> [p ⟦ p1] ∘ p. b1 ↦ (b1, (b, g) ↦ b); ((b, g), i) ↦ g(i).
PolyMap adjunction_unit(const Polynomial& p, const Polynomial& p1, const Budget& budget = {});

struct AdjunctionReport {
  std::size_t left_count = 0;   // |Hom([p⟦p1], p2)|
  std::size_t right_count = 0;  // |Hom(p1, p2∘p)|
  bool bijective = false;
};
/// Checks that φ ↦ whisker_right(φ, p) ∘ unit is a bijection
/// Hom([p⟦p1], p2) -> Hom(p1, p2∘p).
AdjunctionReport adjunction_check(const Polynomial& p, const Polynomial& p1, const Polynomial& p2,
                                  const Budget& budget = {});

/// The canonical map (p1∘p2)(X) -> p1(p2(X)),
/// ((b1, f), k) ↦ (b1, i ↦ (f(i), d ↦ k(i, d))), built on labels.
SetMap evaluation_comparison(const Polynomial& p1, const Polynomial& p2, const FinSet& x, const Budget& budget = {});

struct CompositionCount {
  std::size_t composite_size = 0;  // |(p1∘p2)(X)|
  std::size_t nested_size = 0;     // |p1(p2(X))|
  bool bijective = false;
};
/// The same comparison map computed on mixed-radix indices, without
/// materializing labels; for the exhaustive sweep.
CompositionCount composition_bijection_check(const Polynomial& p1, const Polynomial& p2, std::size_t x_size,
                                             const Budget& budget = {});

}  // namespace polycat
