#include "polycat/tower.hpp"

#include "polycat/label.hpp"

namespace polycat {

Tree Tower::face(std::size_t i, const Tree& t, std::size_t depth) const {
  if (i == 0) return depth == 1 ? Tree{} : t.children[c_.counit_direction(t.root)];
  if (depth == 2) return leaf(t.root);
  Tree out{t.root, {}};
  out.children.reserve(t.children.size());
  for (const auto& child : t.children) out.children.push_back(face(i - 1, child, depth - 1));
  return out;
}

Path Tower::face_sharp(std::size_t i, const Tree& t, std::size_t depth, const Path& path) const {
  if (i == 0) {
    Path out{c_.counit_direction(t.root)};
    out.insert(out.end(), path.begin(), path.end());
    return out;
  }
  Path rest(path.begin() + 1, path.end());
  Path out{path[0]};
  Path below = face_sharp(i - 1, t.children[path[0]], depth - 1, rest);
  out.insert(out.end(), below.begin(), below.end());
  return out;
}

Tree Tower::degeneracy(std::size_t i, const Tree& t, std::size_t depth) const {
  const Polynomial& p = c_.carrier();
  if (i == 0) {
    const std::size_t b = t.root;
    Tree out{c_.delta_root(b), {}};
    const std::size_t n1 = p.directions(out.root).size();
    out.children.reserve(n1);
    for (std::size_t e1 = 0; e1 < n1; ++e1) {
      Tree child{c_.delta_child(b, e1), {}};
      if (depth > 1) {
        const std::size_t n2 = p.directions(child.root).size();
        child.children.reserve(n2);
        for (std::size_t e2 = 0; e2 < n2; ++e2) child.children.push_back(t.children[c_.delta_sharp(b, e1, e2)]);
      }
      out.children.push_back(std::move(child));
    }
    return out;
  }
  Tree out{t.root, {}};
  out.children.reserve(t.children.size());
  for (const auto& child : t.children) out.children.push_back(degeneracy(i - 1, child, depth - 1));
  return out;
}

Path Tower::degeneracy_sharp(std::size_t i, const Tree& t, std::size_t depth, const Path& path) const {
  if (i == 0) {
    Path out{c_.delta_sharp(t.root, path[0], path[1])};
    out.insert(out.end(), path.begin() + 2, path.end());
    return out;
  }
  Path rest(path.begin() + 1, path.end());
  Path out{path[0]};
  Path below = degeneracy_sharp(i - 1, t.children[path[0]], depth - 1, rest);
  out.insert(out.end(), below.begin(), below.end());
  return out;
}

std::vector<Path> Tower::paths(const Tree& t, std::size_t depth) const {
  if (depth == 0) return {Path{}};
  const std::size_t n = c_.carrier().directions(t.root).size();
  std::vector<Path> out;
  for (std::size_t e = 0; e < n; ++e) {
    if (depth == 1) {
      out.push_back({e});
      continue;
    }
    for (auto& rest : paths(t.children[e], depth - 1)) {
      Path path{e};
      path.insert(path.end(), rest.begin(), rest.end());
      out.push_back(std::move(path));
    }
  }
  return out;
}

std::string Tower::tree_label(const Tree& t, std::size_t depth) const {
  const Polynomial& p = c_.carrier();
  if (depth == 0) return std::string(label::kPoint);
  if (depth == 1) return p.positions()[t.root];
  const FinSet& dirs = p.directions(t.root);
  std::vector<std::string> values;
  values.reserve(t.children.size());
  for (const auto& child : t.children) values.push_back(tree_label(child, depth - 1));
  return label::pair(p.positions()[t.root], label::table(dirs.elements(), values));
}

std::string Tower::path_label(const Tree& t, std::size_t depth, const Path& path) const {
  const Polynomial& p = c_.carrier();
  if (depth == 0) return std::string(label::kPoint);
  const std::string& first = p.directions(t.root)[path[0]];
  if (depth == 1) return first;
  Path rest(path.begin() + 1, path.end());
  return label::pair(first, path_label(t.children[path[0]], depth - 1, rest));
}

Tree Tower::tree_of(const Iterated& it, std::size_t depth, std::size_t P) const {
  if (depth == 0) return Tree{};
  if (depth == 1) return leaf(P);
  const Composite& step = it.steps[depth];
  Tree out{step.outer_position[P], {}};
  for (auto child : step.inner_position[P]) out.children.push_back(tree_of(it, depth - 1, child));
  return out;
}

}  // namespace polycat
