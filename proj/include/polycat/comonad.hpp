#pragma once

// Polynomial comonoids (p, ε, δ), their laws, retrofunctors, and the
// translation between comonoids and small categories.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycat/monoidal.hpp"

namespace polycat {

/// A carrier p with counit ε: p -> y and comultiplication δ: p -> p∘p.
/// Construction checks only the sources and targets; see check_laws.
class Comonoid {
 public:
  Comonoid(Polynomial carrier, PolyMap counit, PolyMap comultiplication, const Budget& budget = {});
  const Polynomial& carrier() const { return carrier_; }
  const PolyMap& counit() const { return counit_; }
  const PolyMap& comultiplication() const { return delta_; }
  /// p∘p with its decoding.
  const Composite& square() const { return *square_; }

  /// ε♯_b(*) ∈ p[b].
  std::size_t counit_direction(std::size_t b) const { return counit_.sharp(b)[0]; }
  /// δ₁(b) = (b', f): b' and f(e).
  std::size_t delta_root(std::size_t b) const { return square_->outer_position[delta_.position(b)]; }
  std::size_t delta_child(std::size_t b, std::size_t e) const {
    return square_->inner_position[delta_.position(b)][e];
  }
  /// δ♯_b(e1, e2) ∈ p[b] for e1 ∈ p[b'] and e2 ∈ p[f(e1)].
  std::size_t delta_sharp(std::size_t b, std::size_t e1, std::size_t e2) const {
    const std::size_t P = delta_.position(b);
    return delta_.sharp(b)[square_->direction_index(P, e1, e2)];
  }

  friend bool operator==(const Comonoid& a, const Comonoid& b) {
    return a.carrier_ == b.carrier_ && a.counit_ == b.counit_ && a.delta_ == b.delta_;
  }

 private:
  Polynomial carrier_;
  PolyMap counit_;
  PolyMap delta_;
  std::shared_ptr<const Composite> square_;
};

/// The comonoid on y with identity counit and δ the unitor y -> y∘y.
Comonoid trivial_comonoid();

struct LawFailure {
  std::string law;        // "unit_left", "unit_right" or "assoc"
  std::string position;   // label of the carrier position
  std::string component;  // "position" or "direction"
  std::string direction;  // label of the offending direction when component == "direction"
};

struct LawReport {
  bool unit_left = false;
  bool unit_right = false;
  bool assoc = false;
  std::optional<LawFailure> failure;  // the first failure found

  bool lawful() const { return unit_left && unit_right && assoc; }
};

/// Checks λ = (ε∘p)∘δ, ρ = (p∘ε)∘δ and α∘(δ∘p)∘δ = (p∘δ)∘δ position by
/// position, without materializing p∘p∘p.
LawReport check_laws(const Comonoid& c);
/// The same laws as literal equalities of maps into y∘p, p∘y and p∘(p∘p).
LawReport check_laws_materialized(const Comonoid& c, const Budget& budget = {});

/// A finite category: morphisms carry source and target, every object an
/// identity, and composition is a total table on composable pairs.
class Category {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  /// Validates the unit and associativity laws; throws
  /// ValidationError("invalid_category") with a location on failure.
  Category(FinSet objects, FinSet morphisms, SetMap src, SetMap tgt, SetMap identity,
           std::vector<std::size_t> composition);

  /// Morphisms given as arrows; identity composites are filled in.
  /// `compose` is keyed (g, f) for g∘f.
  static Category from_tables(const std::vector<std::string>& objects, const std::vector<Arrow>& morphisms,
                              const std::map<std::string, std::string>& identities,
                              const std::map<std::pair<std::string, std::string>, std::string>& compose);

  const FinSet& objects() const { return objects_; }
  const FinSet& morphisms() const { return morphisms_; }
  const SetMap& src() const { return src_; }
  const SetMap& tgt() const { return tgt_; }
  const SetMap& identity() const { return identity_; }
  /// g∘f, or kNone when src(g) ≠ tgt(f).
  std::size_t compose(std::size_t g, std::size_t f) const { return comp_[g * morphisms_.size() + f]; }

  friend bool operator==(const Category& a, const Category& b) {
    return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ &&
           a.identity_ == b.identity_ && a.comp_ == b.comp_;
  }

 private:
  FinSet objects_;
  FinSet morphisms_;
  SetMap src_;
  SetMap tgt_;
  SetMap identity_;
  std::vector<std::size_t> comp_;
};

/// Label of the morphism for direction e at position b: the direction label
/// itself when direction labels are distinct across all positions, "(b,e)"
/// otherwise.
std::vector<std::vector<std::string>> morphism_labels(const Polynomial& p);

/// Objects = positions, morphisms = directions, tgt read off δ₁, identities
/// from ε♯, e2∘e1 = δ♯(e1, e2). Throws ValidationError("unlawful_comonoid")
/// or ("not_a_section").
Category to_category(const Comonoid& c);
/// Direction set at o = morphisms out of o; ε picks identities; δ₁ records
/// targets and δ♯ composition.
Comonoid from_category(const Category& cat, const Budget& budget = {});

/// c with directions relabeled as the morphisms of to_category(c) would be.
Comonoid canonical_relabel(const Comonoid& c);

bool roundtrip_check(const Category& cat);
bool roundtrip_check_comonoid(const Comonoid& c);

/// r: c -> c' commutes with counits and comultiplications:
/// ε'∘r = ε and δ'∘r = (r∘r)∘δ with r∘r = (p'∘r)∘(r∘p).
bool retrofunctor_check(const Comonoid& c, const Comonoid& c_prime, const PolyMap& r, const Budget& budget = {});

}  // namespace polycat
