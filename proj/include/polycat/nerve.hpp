#pragma once

// The augmented simplicial object n ↦ p^{∘(n+1)} of a comonoid, the
// augmented cosimplicial set X it induces (X_{n-1} = B ×_{B_n} E_n), the
// Segal decomposition X_n ≅ E ×_B X_{n-1}, and the comparison with the
// nerve of the associated category.

#include <cstddef>
#include <string>
#include <vector>

#include "polycat/comonad.hpp"
#include "polycat/tower.hpp"

namespace polycat {

/// q: E -> B, q(b, e) = f_b(e) where δ₁(b) = (b, f_b). E is labeled as
/// carrier().total_space(). Throws ValidationError("not_a_section").
SetMap target_map(const Comonoid& c);

/// f_n(b) as a tree: f_1(b) = b, f_{n+1}(b) = (b, e ↦ f_n(q(b, e))).
Tree section_tree(const Comonoid& c, std::size_t n, std::size_t b);
/// f_n: B -> B_n against the materialized iterate(p, n), n ≥ 1.
SetMap f_section(const Comonoid& c, std::size_t n, const Budget& budget = {});

/// X_{n-1}: pairs (b, π) with π a direction of p^{∘n} at f_n(b), labeled
/// "(b,π)"; X_{-1} = B with the position labels.
struct XLevel {
  std::size_t n = 0;  // the number of composed factors
  FinSet set;
  std::vector<std::size_t> base;  // per element: b
  std::vector<Path> path;         // per element: π
};
XLevel x_level_structured(const Comonoid& c, std::size_t n, const Budget& budget = {});
FinSet x_level(const Comonoid& c, std::size_t n, const Budget& budget = {});
/// The same set as the pullback of f_n against the bundle E_n -> B_n of the
/// materialized iterate, relabeled by dropping the redundant position.
FinSet x_level_materialized(const Comonoid& c, std::size_t n, const Budget& budget = {});

struct SegalReport {
  bool holds = false;
  Pullback fiber_product;  // E ×_B X_{n-1} over q and the base projection
  SetMap witness;          // X_n -> E ×_B X_{n-1}, (b, e·π) ↦ ((b, e), (q(b, e), π))
};
SegalReport segal_check(const Comonoid& c, std::size_t n, const Budget& budget = {});

struct IdentityReport {
  bool holds = true;
  std::size_t checked = 0;
  std::string failure;  // first failing identity, empty when all hold
};

/// p^{∘k} for k = 0..N+1 with faces d_i: p^{∘k} -> p^{∘(k-1)} (ε in slot i)
/// and degeneracies s_j: p^{∘k} -> p^{∘(k+1)} (δ in slot j); slot 0 is the
/// outermost factor.
struct AugmentedSimplicial {
  Iterated levels;
  std::vector<std::vector<PolyMap>> faces;         // faces[k][i], k ≥ 1, i < k
  std::vector<std::vector<PolyMap>> degeneracies;  // degeneracies[k][j], 1 ≤ k ≤ N, j < k
};
AugmentedSimplicial aug_simplicial_poly(const Comonoid& c, std::size_t depth, const Budget& budget = {});
IdentityReport check_simplicial_identities(const AugmentedSimplicial& s);

/// X_{-1}..X_N with cofaces d^i: X_{k-1} -> X_k (i = 0..k) read off the
/// counit faces and codegeneracies s^j: X_{k+1} -> X_k (j = 0..k) read off the
/// comultiplication degeneracies.
struct CosimplicialLevels {
  std::size_t depth = 0;
  std::vector<XLevel> x;                            // x[k+1] = X_k
  std::vector<std::vector<SetMap>> cofaces;         // cofaces[k][i]: X_{k-1} -> X_k, k = 0..N
  std::vector<std::vector<SetMap>> codegeneracies;  // codegeneracies[k][j]: X_{k+1} -> X_k, k = 0..N-1

  const FinSet& level(int k) const { return x[k + 1].set; }
};
CosimplicialLevels cosimplicial_assembly(const Comonoid& c, std::size_t depth, const Budget& budget = {});
IdentityReport check_cosimplicial_identities(const CosimplicialLevels& levels);

/// Composable chains x_0 -g_1-> x_1 -> ... -g_n-> x_n of a category, labeled
/// "(g_1,...,g_n)"; 0-chains are the objects.
FinSet nerve_chains(const Category& cat, std::size_t n, const Budget& budget = {});

struct NerveLevel {
  FinSet chains;
  std::vector<SetMap> faces;         // d_i: N_n -> N_{n-1}, i = 0..n (n ≥ 1)
  std::vector<SetMap> degeneracies;  // s_i: N_n -> N_{n+1}, i = 0..n
};
NerveLevel nerve_oracle(const Category& cat, std::size_t n, const Budget& budget = {});

/// Matches X_k with the (k+1)-chains of to_category(c) and checks that each
/// coface d^i is the nerve degeneracy s_i and each codegeneracy s^j is the
/// inner nerve face d_{j+1}.
IdentityReport oracle_check(const Comonoid& c, const CosimplicialLevels& levels, const Budget& budget = {});

}  // namespace polycat
