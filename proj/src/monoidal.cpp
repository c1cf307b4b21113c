#include "polycat/monoidal.hpp"

#include <set>

#include "polycat/label.hpp"

namespace polycat {

namespace {

// Rank of a table in the lexicographic order produced by enumerate_tables.
std::size_t table_rank(std::span<const std::size_t> f, std::size_t base) {
  std::size_t r = 0;
  for (auto v : f) r = r * base + v;
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError("shape_mismatch", what);
}

}  // namespace

std::size_t Composite::position_index(std::size_t b1, std::span<const std::size_t> f) const {
  return position_lookup[position_offset[b1] + table_rank(f, inner.position_count())];
}

std::size_t Composite::direction_index(std::size_t position, std::size_t i, std::size_t d) const {
  return direction_lookup[position][direction_base[position][i] + d];
}

Composite compose_structured(const Polynomial& p1, const Polynomial& p2, const Budget& budget) {
  const std::size_t n2 = p2.position_count();
  const std::size_t e2 = p2.total_size();
  std::size_t count = 0, dir_count = 0;
  for (std::size_t b1 = 0; b1 < p1.position_count(); ++b1) {
    const std::size_t a = p1.directions(b1).size();
    count = saturating_add(count, saturating_pow(n2, a));
    if (a > 0) dir_count = saturating_add(dir_count, saturating_mul(a, saturating_mul(saturating_pow(n2, a - 1), e2)));
  }
  budget.check("composite positions", count);
  budget.check("composite directions", dir_count);

  Composite c{p1, p2, Polynomial(), {}, {}, {}, {}, {}, {}, {}};
  std::vector<std::string> labels;
  std::vector<std::size_t> raw_b1;
  std::vector<std::vector<std::size_t>> raw_f;
  labels.reserve(count);
  c.position_offset.resize(p1.position_count());
  for (std::size_t b1 = 0; b1 < p1.position_count(); ++b1) {
    c.position_offset[b1] = labels.size();
    for (auto& f : enumerate_tables(p1.directions(b1).size(), n2, budget)) {
      labels.push_back(label::pair(p1.positions()[b1], map_label(p1.directions(b1), p2.positions(), f)));
      raw_b1.push_back(b1);
      raw_f.push_back(std::move(f));
    }
  }
  std::vector<std::string> unsorted = labels;
  FinSet positions(std::move(labels));
  c.outer_position.resize(count);
  c.inner_position.resize(count);
  c.position_lookup.resize(count);
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t idx = positions.index_of(unsorted[r]);
    c.position_lookup[r] = idx;
    c.outer_position[idx] = raw_b1[r];
    c.inner_position[idx] = std::move(raw_f[r]);
  }

  std::vector<FinSet> directions(count);
  c.direction.resize(count);
  c.direction_base.resize(count);
  c.direction_lookup.resize(count);
  for (std::size_t P = 0; P < count; ++P) {
    const std::size_t b1 = c.outer_position[P];
    const auto& f = c.inner_position[P];
    const FinSet& outer_dirs = p1.directions(b1);
    std::vector<std::string> dl;
    std::vector<std::pair<std::size_t, std::size_t>> raw;
    auto& base = c.direction_base[P];
    base.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      base[i] = raw.size();
      const FinSet& inner_dirs = p2.directions(f[i]);
      for (std::size_t d = 0; d < inner_dirs.size(); ++d) {
        dl.push_back(label::pair(outer_dirs[i], inner_dirs[d]));
        raw.emplace_back(i, d);
      }
    }
    std::vector<std::string> dl_unsorted = dl;
    directions[P] = FinSet(std::move(dl));
    c.direction[P].resize(raw.size());
    c.direction_lookup[P].resize(raw.size());
    for (std::size_t r = 0; r < raw.size(); ++r) {
      std::size_t idx = directions[P].index_of(dl_unsorted[r]);
      c.direction_lookup[P][r] = idx;
      c.direction[P][idx] = raw[r];
    }
  }
  c.result = Polynomial(std::move(positions), std::move(directions));
  return c;
}

Polynomial compose(const Polynomial& p1, const Polynomial& p2, const Budget& budget) {
  return compose_structured(p1, p2, budget).result;
}

// ---------------------------------------------------------------------------
// Whiskering

PolyMap whisker_left(const Composite& from, const Composite& to, const PolyMap& phi) {
  require(from.outer == to.outer, "whisker_left: outer factors differ");
  require(from.inner == phi.src() && to.inner == phi.dst(), "whisker_left: map does not match the inner factors");
  const std::size_t n = from.result.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  std::vector<std::size_t> g2;
  for (std::size_t P = 0; P < n; ++P) {
    const std::size_t b = from.outer_position[P];
    const auto& g = from.inner_position[P];
    g2.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) g2[i] = phi.position(g[i]);
    const std::size_t Q = to.position_index(b, g2);
    pos[P] = Q;
    const auto& dirs = to.direction[Q];
    sharp[P].resize(dirs.size());
    for (std::size_t t = 0; t < dirs.size(); ++t) {
      auto [i, d2] = dirs[t];
      sharp[P][t] = from.direction_index(P, i, phi.sharp(g[i])[d2]);
    }
  }
  return PolyMap(from.result, to.result, std::move(pos), std::move(sharp));
}

PolyMap whisker_left(const Polynomial& r, const PolyMap& phi, const Budget& budget) {
  return whisker_left(compose_structured(r, phi.src(), budget), compose_structured(r, phi.dst(), budget), phi);
}

PolyMap whisker_right(const Composite& from, const Composite& to, const PolyMap& phi) {
  require(from.inner == to.inner, "whisker_right: inner factors differ");
  require(from.outer == phi.src() && to.outer == phi.dst(), "whisker_right: map does not match the outer factors");
  const std::size_t n = from.result.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  std::vector<std::size_t> g2;
  for (std::size_t P = 0; P < n; ++P) {
    const std::size_t b = from.outer_position[P];
    const auto& g = from.inner_position[P];
    auto s = phi.sharp(b);
    g2.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) g2[i] = g[s[i]];
    const std::size_t Q = to.position_index(phi.position(b), g2);
    pos[P] = Q;
    const auto& dirs = to.direction[Q];
    sharp[P].resize(dirs.size());
    for (std::size_t t = 0; t < dirs.size(); ++t) {
      auto [i2, d] = dirs[t];
      sharp[P][t] = from.direction_index(P, s[i2], d);
    }
  }
  return PolyMap(from.result, to.result, std::move(pos), std::move(sharp));
}

PolyMap whisker_right(const PolyMap& phi, const Polynomial& r, const Budget& budget) {
  return whisker_right(compose_structured(phi.src(), r, budget), compose_structured(phi.dst(), r, budget), phi);
}

// ---------------------------------------------------------------------------
// Unitors and associator

PolyMap left_unitor(const Composite& y_p) {
  require(y_p.outer == identity_y(), "left_unitor: outer factor must be y");
  const Polynomial& p = y_p.inner;
  std::vector<std::size_t> pos(p.position_count());
  std::vector<std::vector<std::size_t>> sharp(pos.size());
  for (std::size_t b = 0; b < pos.size(); ++b) {
    const std::size_t f[1] = {b};
    pos[b] = y_p.position_index(0, f);
    for (auto [i, d] : y_p.direction[pos[b]]) sharp[b].push_back(d);
  }
  return PolyMap(p, y_p.result, std::move(pos), std::move(sharp));
}

PolyMap left_unitor_inverse(const Composite& y_p) {
  require(y_p.outer == identity_y(), "left_unitor_inverse: outer factor must be y");
  const Polynomial& p = y_p.inner;
  const std::size_t n = y_p.result.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  for (std::size_t P = 0; P < n; ++P) {
    pos[P] = y_p.inner_position[P][0];
    for (std::size_t d = 0; d < p.directions(pos[P]).size(); ++d) sharp[P].push_back(y_p.direction_index(P, 0, d));
  }
  return PolyMap(y_p.result, p, std::move(pos), std::move(sharp));
}

PolyMap right_unitor(const Composite& p_y) {
  require(p_y.inner == identity_y(), "right_unitor: inner factor must be y");
  const Polynomial& p = p_y.outer;
  std::vector<std::size_t> pos(p.position_count());
  std::vector<std::vector<std::size_t>> sharp(pos.size());
  for (std::size_t b = 0; b < pos.size(); ++b) {
    std::vector<std::size_t> f(p.directions(b).size(), 0);
    pos[b] = p_y.position_index(b, f);
    for (auto [i, d] : p_y.direction[pos[b]]) sharp[b].push_back(i);
  }
  return PolyMap(p, p_y.result, std::move(pos), std::move(sharp));
}

PolyMap right_unitor_inverse(const Composite& p_y) {
  require(p_y.inner == identity_y(), "right_unitor_inverse: inner factor must be y");
  const Polynomial& p = p_y.outer;
  const std::size_t n = p_y.result.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  for (std::size_t P = 0; P < n; ++P) {
    pos[P] = p_y.outer_position[P];
    for (std::size_t i = 0; i < p.directions(pos[P]).size(); ++i) sharp[P].push_back(p_y.direction_index(P, i, 0));
  }
  return PolyMap(p_y.result, p, std::move(pos), std::move(sharp));
}

PolyMap left_unitor(const Polynomial& p) { return left_unitor(compose_structured(identity_y(), p)); }
PolyMap right_unitor(const Polynomial& p) { return right_unitor(compose_structured(p, identity_y())); }

PolyMap associator(const Composite& pq, const Composite& pq_r, const Composite& qr, const Composite& p_qr) {
  require(pq_r.outer == pq.result && p_qr.inner == qr.result, "associator: composites do not fit together");
  require(p_qr.outer == pq.outer && qr.outer == pq.inner && qr.inner == pq_r.inner,
          "associator: factors differ");
  const std::size_t n = pq_r.result.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  std::vector<std::size_t> k, hi;
  for (std::size_t P = 0; P < n; ++P) {
    const std::size_t X = pq_r.outer_position[P];
    const auto& h = pq_r.inner_position[P];
    const std::size_t b = pq.outer_position[X];
    const auto& g = pq.inner_position[X];
    k.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::size_t nj = pq.inner.directions(g[i]).size();
      hi.resize(nj);
      for (std::size_t j = 0; j < nj; ++j) hi[j] = h[pq.direction_index(X, i, j)];
      k[i] = qr.position_index(g[i], hi);
    }
    const std::size_t Q = p_qr.position_index(b, k);
    pos[P] = Q;
    const auto& dirs = p_qr.direction[Q];
    sharp[P].resize(dirs.size());
    for (std::size_t t = 0; t < dirs.size(); ++t) {
      auto [i, e] = dirs[t];
      auto [j, d] = qr.direction[k[i]][e];
      sharp[P][t] = pq_r.direction_index(P, pq.direction_index(X, i, j), d);
    }
  }
  return PolyMap(pq_r.result, p_qr.result, std::move(pos), std::move(sharp));
}

PolyMap associator(const Polynomial& p, const Polynomial& q, const Polynomial& r, const Budget& budget) {
  Composite pq = compose_structured(p, q, budget);
  Composite qr = compose_structured(q, r, budget);
  Composite pq_r = compose_structured(pq.result, r, budget);
  Composite p_qr = compose_structured(p, qr.result, budget);
  return associator(pq, pq_r, qr, p_qr);
}

// ---------------------------------------------------------------------------
// Iteration

Iterated iterate(const Polynomial& p, std::size_t n, const Budget& budget) {
  Iterated it;
  it.powers.push_back(identity_y());
  it.steps.resize(n + 1);
  if (n >= 1) it.powers.push_back(p);
  for (std::size_t k = 2; k <= n; ++k) {
    it.steps[k] = compose_structured(p, it.powers[k - 1], budget);
    it.powers.push_back(it.steps[k].result);
  }
  return it;
}

// ---------------------------------------------------------------------------
// Coclosure

Polynomial coclosure(const Polynomial& p, const Polynomial& p1, const Budget& budget) {
  std::vector<FinSet> dirs;
  dirs.reserve(p1.position_count());
  for (std::size_t b1 = 0; b1 < p1.position_count(); ++b1) dirs.push_back(evaluate(p, p1.directions(b1), budget));
  return Polynomial(p1.positions(), std::move(dirs));
}

PolyMap adjunction_unit(const Polynomial& p, const Polynomial& p1, const Budget& budget) {
  Polynomial c = coclosure(p, p1, budget);
  Composite cp = compose_structured(c, p, budget);
  const std::size_t n = p1.position_count();
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<std::size_t>> sharp(n);
  for (std::size_t b1 = 0; b1 < n; ++b1) {
    Evaluation ev = evaluate_structured(p, p1.directions(b1), budget);
    const std::size_t Q = cp.position_index(b1, ev.position);
    pos[b1] = Q;
    for (auto [e, i] : cp.direction[Q]) sharp[b1].push_back(ev.table[e][i]);
  }
  return PolyMap(p1, cp.result, std::move(pos), std::move(sharp));
}

AdjunctionReport adjunction_check(const Polynomial& p, const Polynomial& p1, const Polynomial& p2,
                                  const Budget& budget) {
  AdjunctionReport report;
  Polynomial c = coclosure(p, p1, budget);
  Composite cp = compose_structured(c, p, budget);
  Composite p2p = compose_structured(p2, p, budget);
  PolyMap unit = adjunction_unit(p, p1, budget);
  auto left = hom_set(c, p2, budget);
  report.left_count = left.size();
  report.right_count = hom_count(p1, p2p.result);

  std::set<std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>>> images;
  for (const auto& phi : left) {
    PolyMap image = compose_maps(whisker_right(cp, p2p, phi), unit);
    std::vector<std::vector<std::size_t>> sharp;
    for (std::size_t b = 0; b < p1.position_count(); ++b) sharp.emplace_back(image.sharp(b).begin(), image.sharp(b).end());
    images.emplace(std::vector<std::size_t>(image.positions().begin(), image.positions().end()), std::move(sharp));
  }
  report.bijective = images.size() == report.left_count && report.left_count == report.right_count;
  return report;
}

// ---------------------------------------------------------------------------
// Evaluation comparison

SetMap evaluation_comparison(const Polynomial& p1, const Polynomial& p2, const FinSet& x, const Budget& budget) {
  Composite c = compose_structured(p1, p2, budget);
  Evaluation left = evaluate_structured(c.result, x, budget);
  FinSet inner = evaluate(p2, x, budget);
  FinSet nested = evaluate(p1, inner, budget);
  std::vector<std::size_t> image(left.set.size());
  std::vector<std::size_t> block, outer_table;
  for (std::size_t e = 0; e < image.size(); ++e) {
    const std::size_t P = left.position[e];
    const auto& k = left.table[e];
    const std::size_t b1 = c.outer_position[P];
    const auto& f = c.inner_position[P];
    outer_table.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      block.resize(p2.directions(f[i]).size());
      for (std::size_t d = 0; d < block.size(); ++d) block[d] = k[c.direction_index(P, i, d)];
      outer_table[i] = inner.index_of(evaluation_label(p2, x, f[i], block));
    }
    image[e] = nested.index_of(evaluation_label(p1, inner, b1, outer_table));
  }
  return SetMap(left.set, nested, std::move(image));
}

CompositionCount composition_bijection_check(const Polynomial& p1, const Polynomial& p2, std::size_t x_size,
                                             const Budget& budget) {
  CompositionCount out;
  const std::size_t n2 = p2.position_count();
  std::vector<std::size_t> off2(n2);
  std::size_t inner_size = 0;
  for (std::size_t b2 = 0; b2 < n2; ++b2) {
    off2[b2] = inner_size;
    inner_size = saturating_add(inner_size, saturating_pow(x_size, p2.directions(b2).size()));
  }
  std::vector<std::size_t> off1(p1.position_count());
  for (std::size_t b1 = 0; b1 < p1.position_count(); ++b1) {
    off1[b1] = out.nested_size;
    out.nested_size = saturating_add(out.nested_size, saturating_pow(inner_size, p1.directions(b1).size()));
  }
  budget.check("nested evaluation", out.nested_size);
  std::vector<unsigned char> hit(out.nested_size, 0);
  bool injective = true;

  for (std::size_t b1 = 0; b1 < p1.position_count(); ++b1) {
    const std::size_t a = p1.directions(b1).size();
    for (const auto& f : enumerate_tables(a, n2, budget)) {
      std::size_t digits = 0;
      for (auto b2 : f) digits += p2.directions(b2).size();
      const std::size_t combos = saturating_pow(x_size, digits);
      budget.check("composite evaluation", saturating_add(out.composite_size, combos));
      std::vector<std::size_t> k(digits, 0);
      for (std::size_t c = 0; c < combos; ++c) {
        std::size_t idx = 0, pos = 0;
        for (std::size_t i = 0; i < a; ++i) {
          const std::size_t w = p2.directions(f[i]).size();
          std::size_t r = 0;
          for (std::size_t d = 0; d < w; ++d) r = r * x_size + k[pos + d];
          pos += w;
          idx = idx * inner_size + off2[f[i]] + r;
        }
        idx += off1[b1];
        if (hit[idx]) injective = false;
        hit[idx] = 1;
        for (std::size_t t = digits; t-- > 0;) {
          if (++k[t] < x_size) break;
          k[t] = 0;
        }
      }
      out.composite_size += combos;
    }
  }
  out.bijective = injective && out.composite_size == out.nested_size;
  return out;
}

}  // namespace polycat
