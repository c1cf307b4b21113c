#pragma once

// Positions and directions of p^{∘n} for a comonoid carrier p, as trees,
// together with the face maps (counit in one slot) and degeneracy maps
// (comultiplication in one slot) acting on them. This is the lazy
// counterpart of materializing iterate(p, n).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polycat/comonad.hpp"

namespace polycat {

/// A position of p^{∘n}. Depth 0 is the unique position of y; depth 1 is a
/// leaf carrying a position of p; depth n ≥ 2 has one child of depth n-1 per
/// direction of p[root].
struct Tree {
  std::size_t root = 0;
  std::vector<Tree> children;

  friend bool operator==(const Tree&, const Tree&) = default;
};

/// A direction of a depth-n tree: a direction of p at each level, from the
/// root downwards.
using Path = std::vector<std::size_t>;

class Tower {
 public:
  explicit Tower(Comonoid c) : c_(std::move(c)) {}

  const Comonoid& comonoid() const { return c_; }

  static Tree leaf(std::size_t b) { return Tree{b, {}}; }

  /// d_i: p^{∘n} -> p^{∘(n-1)} on positions, 0 ≤ i < n.
  Tree face(std::size_t i, const Tree& t, std::size_t depth) const;
  /// d_i♯: a direction of face(i, t) to a direction of t.
  Path face_sharp(std::size_t i, const Tree& t, std::size_t depth, const Path& path) const;
  /// s_i: p^{∘n} -> p^{∘(n+1)} on positions, 0 ≤ i < n.
  Tree degeneracy(std::size_t i, const Tree& t, std::size_t depth) const;
  /// s_i♯: a direction of degeneracy(i, t) to a direction of t.
  Path degeneracy_sharp(std::size_t i, const Tree& t, std::size_t depth, const Path& path) const;

  /// All directions of t in the order of their labels' construction.
  std::vector<Path> paths(const Tree& t, std::size_t depth) const;

  /// The label the position has in iterate(p, depth).
  std::string tree_label(const Tree& t, std::size_t depth) const;
  /// The label the direction has in iterate(p, depth).
  std::string path_label(const Tree& t, std::size_t depth, const Path& path) const;

  /// Decodes position P of the materialized p^{∘depth}.
  Tree tree_of(const Iterated& it, std::size_t depth, std::size_t P) const;

 private:
  Comonoid c_;
};

}  // namespace polycat
