#pragma once

// The simplex category Δ (and augmented Δ₊), and the shift functor
// e: Δ^op -> Δ with e([n-1]) = [n] and e(f)(i) = max f⁻¹(≤ i).

#include <cstddef>
#include <string>
#include <vector>

namespace polycat::simplex {

/// A monotone map [m] -> [n]. m = -1 is the empty ordinal of Δ₊.
struct MonotoneMap {
  int m = 0;
  int n = 0;
  std::vector<int> values;  // length m+1, non-decreasing, in 0..n

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

/// A morphism [m-1] -> [n-1] of Δ^op written as a non-decreasing map
/// f: {1..n} -> {1..m}; values[k-1] = f(k).
struct DeltaOpMap {
  int n = 0;
  int m = 0;
  std::vector<int> values;

  friend bool operator==(const DeltaOpMap&, const DeltaOpMap&) = default;
};

/// Throws ValidationError("invalid_map") unless the data is well formed.
MonotoneMap make_monotone(int m, int n, std::vector<int> values);
DeltaOpMap make_delta_op(int n, int m, std::vector<int> values);

MonotoneMap identity(int n);
/// d^n_i: [n-1] -> [n], omitting i.
MonotoneMap face(int n, int i);
/// s^n_i: [n+1] -> [n], hitting i twice.
MonotoneMap degeneracy(int n, int i);
/// g ∘ f.
MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f);

/// The morphism of Δ^op opposite to g: [a] -> [b], as the map
/// {1..a+1} -> {1..b+1}, k ↦ g(k-1)+1.
DeltaOpMap opposite(const MonotoneMap& g);
/// Composition in Δ^op of f: [m-1] -> [n-1] after g: [r-1] -> [m-1], i.e.
/// the composite of the underlying maps {1..n} -> {1..m} -> {1..r}.
DeltaOpMap compose_op(const DeltaOpMap& g, const DeltaOpMap& f);
DeltaOpMap identity_op(int n);

/// e(f): [m] -> [n], i ↦ max{k ∈ 0..n : f(k) ≤ i} with f(0) = 0.
MonotoneMap e_on_map(const DeltaOpMap& f);
inline int e_on_object(int n_minus_1) { return n_minus_1 + 1; }

/// f(0) = 0, f(m) = n, and m, n ≥ 1.
bool image_membership(const MonotoneMap& f);
/// The unique g with e(g) = f: f(i-1)+1, ..., f(i) ↦ i. Throws
/// ValidationError("not_in_image") otherwise.
DeltaOpMap e_inverse(const MonotoneMap& f);

/// e₊ on objects: [-1] ↦ [0], [k] ↦ [k+1].
inline int e_plus_object(int k) { return k + 1; }
/// e₊ on g: [a] -> [b] in Δ₊: the map [b+1] -> [a+1] of Δ (a morphism
/// [a+1] -> [b+1] of Δ^op). The empty map goes to the constant map to 0.
MonotoneMap e_plus(const MonotoneMap& g);

/// All monotone maps [m] -> [n], lexicographic.
std::vector<MonotoneMap> all_monotone(int m, int n);
/// All non-decreasing maps {1..n} -> {1..m}, lexicographic.
std::vector<DeltaOpMap> all_delta_op(int n, int m);

/// f = d_{faces[0]} ∘ ... ∘ d_{faces.back()} ∘ s_{degeneracies[0]} ∘ ... with
/// faces strictly decreasing and degeneracies strictly increasing.
struct Factorization {
  int m = 0;
  int n = 0;
  std::vector<int> faces;
  std::vector<int> degeneracies;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};
Factorization factor(const MonotoneMap& f);
MonotoneMap evaluate(const Factorization& w);

struct VerifyReport {
  bool passed = true;
  std::size_t checked = 0;
  std::string failure;  // first failing instance, empty when passed
};

/// e(g ∘ f) = e(f) ∘ e(g) on every composable pair with n, m, r in 1..bound,
/// plus e(id) = id.
VerifyReport verify_functoriality(int bound);
/// e on hom-sets [m-1] -> [n-1] for m, n in 1..bound is injective.
VerifyReport verify_faithfulness(int bound);
/// For m, n in 0..bound: f has an e-preimage exactly when image_membership(f),
/// and e_inverse inverts e.
VerifyReport verify_image(int bound);
/// e(d^n_i) = s^n_i and e(s^{n-1}_{i-1}) = d^{n+1}_i.
VerifyReport verify_generators(int bound);

/// A word of generators of Δ; a composite g_0 ∘ g_1 ∘ ... with dimension
/// bookkeeping. An empty word is the identity of [dim].
struct Generator {
  bool is_face = true;
  int n = 0;
  int i = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};
struct Word {
  int dim = 0;  // the domain, used when the word is empty
  std::vector<Generator> gens;
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};
MonotoneMap evaluate(const Word& w);
/// The word e applied to the opposite of w: order reversed, d^n_i ↦ s^n_i,
/// s^{n-1}_{i-1} ↦ d^{n+1}_i.
Word transport(const Word& w);

struct Relation {
  Word lhs;
  Word rhs;
};
/// Instances of simplicial-identity family 1..5 (faces-faces,
/// degeneracy-face below, degeneracy-face cancelling, degeneracy-face above,
/// degeneracies-degeneracies) whose ordinals all have dimension ≤ bound.
std::vector<Relation> identity_family(int family, int bound);
/// Every instance of every family holds, and e carries each instance of
/// family k to an instance of family 6-k.
VerifyReport verify_identity_transport(int bound);

}  // namespace polycat::simplex
