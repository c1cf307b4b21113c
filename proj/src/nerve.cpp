#include "polycat/nerve.hpp"

#include <functional>

#include "polycat/label.hpp"

namespace polycat {

namespace {

void require_section(const Comonoid& c) {
  const Polynomial& p = c.carrier();
  for (std::size_t b = 0; b < p.position_count(); ++b)
    if (c.delta_root(b) != b)
      throw ValidationError("not_a_section", "comultiplication does not return position '" + p.positions()[b] + "'",
                            "comultiplication/" + p.positions()[b]);
}

void require_lawful(const Comonoid& c) {
  LawReport laws = check_laws(c);
  if (!laws.lawful())
    throw ValidationError("unlawful_comonoid", "the " + laws.failure->law + " law fails",
                          laws.failure->law + "/" + laws.failure->position);
  require_section(c);
}

std::string x_label(const Tower& t, const Tree& tree, std::size_t n, std::size_t b, const Path& path) {
  const Polynomial& p = t.comonoid().carrier();
  if (n == 0) return p.positions()[b];
  return label::pair(p.positions()[b], t.path_label(tree, n, path));
}

}  // namespace

SetMap target_map(const Comonoid& c) {
  require_section(c);
  const Polynomial& p = c.carrier();
  FinSet e = p.total_space();
  std::vector<std::size_t> image(e.size());
  for (std::size_t b = 0; b < p.position_count(); ++b)
    for (std::size_t d = 0; d < p.directions(b).size(); ++d)
      image[e.index_of(label::pair(p.positions()[b], p.directions(b)[d]))] = c.delta_child(b, d);
  return SetMap(e, p.positions(), std::move(image));
}

Tree section_tree(const Comonoid& c, std::size_t n, std::size_t b) {
  if (n == 0) return Tree{};
  if (n == 1) return Tower::leaf(b);
  Tree out{b, {}};
  for (std::size_t e = 0; e < c.carrier().directions(b).size(); ++e)
    out.children.push_back(section_tree(c, n - 1, c.delta_child(b, e)));
  return out;
}

SetMap f_section(const Comonoid& c, std::size_t n, const Budget& budget) {
  require_section(c);
  Iterated it = iterate(c.carrier(), n, budget);
  Tower t(c);
  const FinSet& b = c.carrier().positions();
  const FinSet& bn = it.positions(n);
  std::vector<std::size_t> image(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) image[x] = bn.index_of(t.tree_label(section_tree(c, n, x), n));
  return SetMap(b, bn, std::move(image));
}

// ---------------------------------------------------------------------------
// Levels of X

XLevel x_level_structured(const Comonoid& c, std::size_t n, const Budget& budget) {
  require_section(c);
  const Polynomial& p = c.carrier();
  Tower t(c);
  XLevel out;
  out.n = n;
  std::vector<std::string> labels;
  std::vector<std::size_t> base;
  std::vector<Path> paths;
  for (std::size_t b = 0; b < p.position_count(); ++b) {
    Tree tree = section_tree(c, n, b);
    for (auto& path : t.paths(tree, n)) {
      labels.push_back(x_label(t, tree, n, b, path));
      base.push_back(b);
      paths.push_back(std::move(path));
    }
    budget.check("cosimplicial level", labels.size());
  }
  std::vector<std::string> unsorted = labels;
  out.set = FinSet(std::move(labels));
  out.base.resize(base.size());
  out.path.resize(base.size());
  for (std::size_t r = 0; r < base.size(); ++r) {
    const std::size_t idx = out.set.index_of(unsorted[r]);
    out.base[idx] = base[r];
    out.path[idx] = std::move(paths[r]);
  }
  return out;
}

FinSet x_level(const Comonoid& c, std::size_t n, const Budget& budget) {
  return x_level_structured(c, n, budget).set;
}

FinSet x_level_materialized(const Comonoid& c, std::size_t n, const Budget& budget) {
  const Polynomial& p = c.carrier();
  if (n == 0) return p.positions();
  Iterated it = iterate(p, n, budget);
  const Polynomial& pn = it.powers[n];
  SetMap fn = f_section(c, n, budget);

  // The bundle E_n -> B_n, remembering each element's (P, d).
  FinSet en = pn.total_space();
  std::vector<std::size_t> bundle(en.size());
  std::vector<std::pair<std::size_t, std::size_t>> decode(en.size());
  for (std::size_t P = 0; P < pn.position_count(); ++P)
    for (std::size_t d = 0; d < pn.directions(P).size(); ++d) {
      const std::size_t idx = en.index_of(label::pair(pn.positions()[P], pn.directions(P)[d]));
      bundle[idx] = P;
      decode[idx] = {P, d};
    }
  Pullback pb = pullback(fn, SetMap(en, pn.positions(), std::move(bundle)), budget);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < pb.apex.size(); ++k) {
    auto [P, d] = decode[pb.right(k)];
    labels.push_back(label::pair(p.positions()[pb.left(k)], pn.directions(P)[d]));
  }
  return FinSet(std::move(labels));
}

// ---------------------------------------------------------------------------
// Segal decomposition

SegalReport segal_check(const Comonoid& c, std::size_t n, const Budget& budget) {
  if (n < 1) throw ValidationError("out_of_range", "the Segal map is defined for n ≥ 1");
  const Polynomial& p = c.carrier();
  Tower t(c);
  SetMap q = target_map(c);
  XLevel top = x_level_structured(c, n + 1, budget);   // X_n
  XLevel below = x_level_structured(c, n, budget);     // X_{n-1}
  SetMap start(below.set, p.positions(), below.base);
  Pullback pb = pullback(q, start, budget);

  std::vector<std::size_t> image(top.set.size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    const std::size_t b = top.base[k];
    const Path& path = top.path[k];
    const std::string edge = label::pair(p.positions()[b], p.directions(b)[path[0]]);
    const std::size_t next = c.delta_child(b, path[0]);
    Path rest(path.begin() + 1, path.end());
    const std::string tail = x_label(t, section_tree(c, n, next), n, next, rest);
    image[k] = pb.apex.index_of(label::pair(edge, tail));
  }
  SetMap witness(top.set, pb.apex, std::move(image));
  const bool holds = witness.is_bijective();
  return SegalReport{holds, std::move(pb), std::move(witness)};
}

// ---------------------------------------------------------------------------
// The augmented simplicial object of iterated composites

AugmentedSimplicial aug_simplicial_poly(const Comonoid& c, std::size_t depth, const Budget& budget) {
  const Polynomial& p = c.carrier();
  AugmentedSimplicial s;
  s.levels = iterate(p, depth + 1, budget);
  const auto& powers = s.levels.powers;
  const auto& steps = s.levels.steps;
  const std::size_t top = depth + 1;
  s.faces.resize(top + 1);
  s.degeneracies.resize(top + 1);

  const Polynomial& y = identity_y();
  s.faces[1].push_back(c.counit());
  Composite py = compose_structured(p, y, budget);
  for (std::size_t k = 2; k <= top; ++k) {
    Composite y_rest = compose_structured(y, powers[k - 1], budget);
    s.faces[k].push_back(compose_maps(left_unitor_inverse(y_rest), whisker_right(steps[k], y_rest, c.counit())));
    for (std::size_t i = 1; i < k; ++i) {
      if (k == 2) {
        s.faces[k].push_back(compose_maps(right_unitor_inverse(py), whisker_left(steps[k], py, s.faces[1][0])));
      } else {
        s.faces[k].push_back(whisker_left(steps[k], steps[k - 1], s.faces[k - 1][i - 1]));
      }
    }
  }

  if (top >= 2) s.degeneracies[1].push_back(c.comultiplication());
  for (std::size_t k = 2; k + 1 <= top; ++k) {
    const Composite& pp = c.square();
    Composite pp_rest = compose_structured(pp.result, powers[k - 1], budget);
    PolyMap alpha = associator(pp, pp_rest, steps[k], steps[k + 1]);
    s.degeneracies[k].push_back(compose_maps(alpha, whisker_right(steps[k], pp_rest, c.comultiplication())));
    for (std::size_t j = 1; j < k; ++j)
      s.degeneracies[k].push_back(whisker_left(steps[k], steps[k + 1], s.degeneracies[k - 1][j - 1]));
  }
  return s;
}

IdentityReport check_simplicial_identities(const AugmentedSimplicial& s) {
  IdentityReport r;
  const std::size_t top = s.levels.powers.size() - 1;
  auto expect = [&](const PolyMap& a, const PolyMap& b, const std::string& what) {
    ++r.checked;
    if (!(a == b) && r.holds) {
      r.holds = false;
      r.failure = what;
    }
  };
  auto at = [](std::size_t k, std::size_t i, std::size_t j) {
    return " at p^" + std::to_string(k) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
  };
  const auto& F = s.faces;
  const auto& G = s.degeneracies;
  for (std::size_t k = 2; k <= top; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        expect(compose_maps(F[k - 1][i], F[k][j]), compose_maps(F[k - 1][j - 1], F[k][i]), "d_i d_j" + at(k, i, j));
  for (std::size_t k = 1; k + 1 <= top; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i <= k; ++i) {
        PolyMap lhs = compose_maps(F[k + 1][i], G[k][j]);
        if (i == j || i == j + 1) expect(lhs, PolyMap::identity(s.levels.powers[k]), "d_i s_j = id" + at(k, i, j));
        else if (i < j) expect(lhs, compose_maps(G[k - 1][j - 1], F[k][i]), "d_i s_j" + at(k, i, j));
        else if (k >= 2) expect(lhs, compose_maps(G[k - 1][j], F[k][i - 1]), "d_i s_j" + at(k, i, j));
      }
  for (std::size_t k = 1; k + 2 <= top; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        expect(compose_maps(G[k + 1][i], G[k][j]), compose_maps(G[k + 1][j + 1], G[k][i]), "s_i s_j" + at(k, i, j));
  return r;
}

// ---------------------------------------------------------------------------
// The augmented cosimplicial set

CosimplicialLevels cosimplicial_assembly(const Comonoid& c, std::size_t depth, const Budget& budget) {
  require_lawful(c);
  const Polynomial& p = c.carrier();
  Tower t(c);
  CosimplicialLevels out;
  out.depth = depth;
  for (std::size_t n = 0; n <= depth + 1; ++n) out.x.push_back(x_level_structured(c, n, budget));

  // trees[n][b] = f_n(b)
  std::vector<std::vector<Tree>> trees(depth + 3);
  for (std::size_t n = 0; n < trees.size(); ++n)
    for (std::size_t b = 0; b < p.position_count(); ++b) trees[n].push_back(section_tree(c, n, b));

  auto broken = [&](const std::string& what, std::size_t b) {
    throw ValidationError("unlawful_comonoid", what + " does not fix the section at '" + p.positions()[b] + "'",
                          "comultiplication/" + p.positions()[b]);
  };

  out.cofaces.resize(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) {
    const XLevel& from = out.x[k];     // X_{k-1}, k factors
    const XLevel& to = out.x[k + 1];   // X_k, k+1 factors
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<std::size_t> image(from.set.size());
      for (std::size_t e = 0; e < image.size(); ++e) {
        const std::size_t b = from.base[e];
        const Tree& big = trees[k + 1][b];
        if (!(t.face(i, big, k + 1) == trees[k][b])) broken("face " + std::to_string(i), b);
        Path path = t.face_sharp(i, big, k + 1, from.path[e]);
        image[e] = to.set.index_of(x_label(t, big, k + 1, b, path));
      }
      out.cofaces[k].emplace_back(from.set, to.set, std::move(image));
    }
  }

  out.codegeneracies.resize(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    const XLevel& from = out.x[k + 2];  // X_{k+1}, k+2 factors
    const XLevel& to = out.x[k + 1];    // X_k, k+1 factors
    for (std::size_t j = 0; j <= k; ++j) {
      std::vector<std::size_t> image(from.set.size());
      for (std::size_t e = 0; e < image.size(); ++e) {
        const std::size_t b = from.base[e];
        const Tree& small = trees[k + 1][b];
        if (!(t.degeneracy(j, small, k + 1) == trees[k + 2][b])) broken("degeneracy " + std::to_string(j), b);
        Path path = t.degeneracy_sharp(j, small, k + 1, from.path[e]);
        image[e] = to.set.index_of(x_label(t, small, k + 1, b, path));
      }
      out.codegeneracies[k].emplace_back(from.set, to.set, std::move(image));
    }
  }
  return out;
}

IdentityReport check_cosimplicial_identities(const CosimplicialLevels& levels) {
  IdentityReport r;
  const std::size_t N = levels.depth;
  const auto& D = levels.cofaces;         // D[k][i]: X_{k-1} -> X_k
  const auto& S = levels.codegeneracies;  // S[k][j]: X_{k+1} -> X_k
  auto expect = [&](const SetMap& a, const SetMap& b, const std::string& what) {
    ++r.checked;
    if (!(a == b) && r.holds) {
      r.holds = false;
      r.failure = what;
    }
  };
  auto at = [](std::size_t k, std::size_t i, std::size_t j) {
    return " into X_" + std::to_string(k) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
  };
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t j = 1; j <= k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        expect(compose(D[k][j], D[k - 1][i]), compose(D[k][i], D[k - 1][j - 1]), "d^j d^i" + at(k, i, j));
  for (std::size_t k = 0; k + 1 <= N; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i <= k + 1; ++i) {
        SetMap lhs = compose(S[k][j], D[k + 1][i]);
        if (i == j || i == j + 1) expect(lhs, SetMap::identity(levels.level(static_cast<int>(k))), "s^j d^i = id" + at(k, i, j));
        else if (i < j) expect(lhs, compose(D[k][i], S[k - 1][j - 1]), "s^j d^i" + at(k, i, j));
        else if (k >= 1) expect(lhs, compose(D[k][i - 1], S[k - 1][j]), "s^j d^i" + at(k, i, j));
      }
  for (std::size_t k = 0; k + 2 <= N; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        expect(compose(S[k][j], S[k + 1][i]), compose(S[k][i], S[k + 1][j + 1]), "s^j s^i" + at(k, i, j));
  return r;
}

// ---------------------------------------------------------------------------
// The nerve oracle

namespace {

std::string chain_label(const Category& cat, const std::vector<std::size_t>& chain) {
  std::vector<std::string> names;
  for (auto m : chain) names.push_back(cat.morphisms()[m]);
  return label::tuple(names);
}

std::vector<std::vector<std::size_t>> chains_of(const Category& cat, std::size_t n, const Budget& budget) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void()> extend = [&] {
    if (cur.size() == n) {
      out.push_back(cur);
      budget.check("nerve chains", out.size());
      return;
    }
    for (std::size_t m = 0; m < cat.morphisms().size(); ++m) {
      if (!cur.empty() && cat.src()(m) != cat.tgt()(cur.back())) continue;
      cur.push_back(m);
      extend();
      cur.pop_back();
    }
  };
  extend();
  return out;
}

}  // namespace

FinSet nerve_chains(const Category& cat, std::size_t n, const Budget& budget) {
  if (n == 0) return cat.objects();
  std::vector<std::string> labels;
  for (const auto& chain : chains_of(cat, n, budget)) labels.push_back(chain_label(cat, chain));
  return FinSet(std::move(labels));
}

NerveLevel nerve_oracle(const Category& cat, std::size_t n, const Budget& budget) {
  NerveLevel out;
  out.chains = nerve_chains(cat, n, budget);
  auto chains = n == 0 ? std::vector<std::vector<std::size_t>>{} : chains_of(cat, n, budget);

  if (n >= 1) {
    FinSet lower = nerve_chains(cat, n - 1, budget);
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> image(out.chains.size());
      for (const auto& chain : chains) {
        std::string target;
        if (n == 1) {
          target = cat.objects()[i == 0 ? cat.tgt()(chain[0]) : cat.src()(chain[0])];
        } else {
          std::vector<std::size_t> face;
          for (std::size_t k = 0; k < n; ++k) {
            if ((i == 0 && k == 0) || (i == n && k == n - 1)) continue;
            if (i > 0 && i < n && k == i - 1) {
              face.push_back(cat.compose(chain[i], chain[i - 1]));
              ++k;
              continue;
            }
            face.push_back(chain[k]);
          }
          target = chain_label(cat, face);
        }
        image[out.chains.index_of(chain_label(cat, chain))] = lower.index_of(target);
      }
      out.faces.emplace_back(out.chains, lower, std::move(image));
    }
  }

  FinSet upper = nerve_chains(cat, n + 1, budget);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::size_t> image(out.chains.size());
    if (n == 0) {
      for (std::size_t o = 0; o < cat.objects().size(); ++o)
        image[o] = upper.index_of(cat.morphisms()[cat.identity()(o)]);
    } else {
      for (const auto& chain : chains) {
        const std::size_t vertex = i == 0 ? cat.src()(chain[0]) : cat.tgt()(chain[i - 1]);
        std::vector<std::size_t> longer(chain.begin(), chain.begin() + i);
        longer.push_back(cat.identity()(vertex));
        longer.insert(longer.end(), chain.begin() + i, chain.end());
        image[out.chains.index_of(chain_label(cat, chain))] = upper.index_of(chain_label(cat, longer));
      }
    }
    out.degeneracies.emplace_back(out.chains, upper, std::move(image));
  }
  return out;
}

IdentityReport oracle_check(const Comonoid& c, const CosimplicialLevels& levels, const Budget& budget) {
  IdentityReport r;
  auto fail = [&](const std::string& what) {
    if (r.holds) r.failure = what;
    r.holds = false;
  };
  const Category cat = to_category(c);
  const auto labels = morphism_labels(c.carrier());
  const std::size_t N = levels.depth;

  std::vector<NerveLevel> nerve;
  for (std::size_t n = 0; n <= N + 1; ++n) nerve.push_back(nerve_oracle(cat, n, budget));

  // phi[k+1]: X_k -> N_{k+1}
  std::vector<SetMap> phi;
  for (std::size_t n = 0; n <= N + 1; ++n) {
    const XLevel& x = levels.x[n];
    std::vector<std::size_t> image(x.set.size());
    for (std::size_t e = 0; e < image.size(); ++e) {
      std::size_t cur = x.base[e];
      if (n == 0) {
        image[e] = nerve[0].chains.index_of(cat.objects()[cur]);
        continue;
      }
      std::vector<std::string> names;
      for (auto d : x.path[e]) {
        names.push_back(labels[cur][d]);
        cur = c.delta_child(cur, d);
      }
      image[e] = nerve[n].chains.index_of(label::tuple(names));
    }
    phi.emplace_back(x.set, nerve[n].chains, std::move(image));
    ++r.checked;
    if (!phi.back().is_bijective()) fail("X_" + std::to_string(static_cast<int>(n) - 1) + " is not matched with chains");
  }
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      ++r.checked;
      if (!(compose(phi[k + 1], levels.cofaces[k][i]) == compose(nerve[k].degeneracies[i], phi[k])))
        fail("coface d^" + std::to_string(i) + " into X_" + std::to_string(k));
    }
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      ++r.checked;
      if (!(compose(phi[k + 1], levels.codegeneracies[k][j]) == compose(nerve[k + 2].faces[j + 1], phi[k + 2])))
        fail("codegeneracy s^" + std::to_string(j) + " onto X_" + std::to_string(k));
    }
  return r;
}

}  // namespace polycat
