#pragma once

// Reidemeister moves on PD diagrams and a greedy simplifier.

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linkbound/diagram.hpp"

namespace linkbound {

/// Removes one kink (an edge joining adjacent slots of one crossing), if any.
inline std::optional<LinkDiagram> reduce_r1(const LinkDiagram& d) {
  for (int c = 0; c < d.num_crossings(); ++c)
    for (int p = 0; p < 4; ++p) {
      const End o = d.other_end(End{c, p});
      if (o.c == c && (o.p == (p + 1) % 4 || o.p == (p + 3) % 4)) return d.remove({c}, {});
    }
  return std::nullopt;
}

/// Removes one clasp (a bigon whose edges are both over or both under), if any.
inline std::optional<LinkDiagram> reduce_r2(const LinkDiagram& d) {
  for (const auto& face : d.face_corners()) {
    if (face.size() != 2 || face[0].c == face[1].c) continue;
    bool ok = true;
    for (const End& corner : face) {
      const End x{corner.c, (corner.p + 1) % 4};
      const End y = d.other_end(x);
      if (x.p % 2 != y.p % 2) ok = false;
    }
    if (ok) return d.remove({face[0].c, face[1].c}, {});
  }
  return std::nullopt;
}

/// Every diagram reachable by one triangle move.
inline std::vector<LinkDiagram> r3_moves(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  for (const auto& face : d.face_corners()) {
    if (face.size() != 3) continue;
    if (face[0].c == face[1].c || face[1].c == face[2].c || face[0].c == face[2].c) continue;
    // Triangle edge i runs from face[i] (slot q+1) to face[i+1] (slot q').
    bool top = false;
    for (std::size_t i = 0; i < 3; ++i) {
      const End a{face[i].c, (face[i].p + 1) % 4};
      const End b = d.other_end(a);
      if (a.p % 2 == 1 && b.p % 2 == 1) top = true;
    }
    if (!top) continue;
    std::vector<RawCrossing> raw;
    for (const auto& x : d.crossings())
      raw.push_back(RawCrossing{{x.e[0], x.e[1], x.e[2], x.e[3]}, x.over_from_one});
    std::vector<RawCrossing> next = raw;
    for (std::size_t i = 0; i < 3; ++i) {
      const int c = face[i].c, q = face[i].p;
      const int c2 = face[(i + 1) % 3].c, q2 = face[(i + 1) % 3].p;
      const auto t = raw[static_cast<std::size_t>(c)].e[static_cast<std::size_t>((q + 1) % 4)];
      auto& at_c = next[static_cast<std::size_t>(c)].e;
      auto& at_c2 = next[static_cast<std::size_t>(c2)].e;
      at_c[static_cast<std::size_t>((q + 1) % 4)] = raw[static_cast<std::size_t>(c2)].e[static_cast<std::size_t>((q2 + 2) % 4)];
      at_c[static_cast<std::size_t>((q + 3) % 4)] = t;
      at_c2[static_cast<std::size_t>(q2)] = raw[static_cast<std::size_t>(c)].e[static_cast<std::size_t>((q + 3) % 4)];
      at_c2[static_cast<std::size_t>((q2 + 2) % 4)] = t;
    }
    std::vector<std::optional<long long>> seeds;
    for (int i = 0; i < d.num_components(); ++i) {
      const auto& es = d.component_edges(i);
      if (es.empty())
        seeds.emplace_back(std::nullopt);
      else
        seeds.emplace_back(es.front());
    }
    try {
      auto moved = detail::build_diagram(next, seeds, d.orientation(), d.name());
      check_planarity(moved);
      out.push_back(std::move(moved));
    } catch (const DiagramError&) {
    }
  }
  return out;
}

/// Pushes a finger of boundary edge `i` of face `f` across boundary edge `j`,
/// creating a clasp with two new crossings.  Edge `i` passes over when
/// `i_over` is set.
inline LinkDiagram insert_r2(const LinkDiagram& d, int f, int i, int j, bool i_over) {
  const auto& face = d.face_corners().at(static_cast<std::size_t>(f));
  const int n = static_cast<int>(face.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw DiagramError("insert_r2: bad face edges");
  // Boundary edge i runs from (c_i, q_i + 1) to (c_{i+1}, q_{i+1}) with the face on its right.
  auto ends_of = [&](int k) {
    const End from{face[static_cast<std::size_t>(k)].c, (face[static_cast<std::size_t>(k)].p + 1) % 4};
    const End to = face[static_cast<std::size_t>((k + 1) % n)];
    return std::pair<End, End>{to, from};  // walking with the face on the left
  };
  const auto [a0, a1] = ends_of(i);
  const auto [b0, b1] = ends_of(j);
  if (d.edge_at(a0) == d.edge_at(b0)) throw DiagramError("insert_r2: edges coincide");
  std::vector<RawCrossing> raw;
  for (const auto& x : d.crossings()) raw.push_back(RawCrossing{{x.e[0], x.e[1], x.e[2], x.e[3]}, x.over_from_one});
  long long next = d.num_edges();
  const long long a_mid = next++, a_post = next++, b_mid = next++, b_post = next++;
  const long long a_pre = d.edge_at(a0), b_pre = d.edge_at(b0);
  // Whether each strand actually runs in the walking direction.
  const bool fa = d.head(static_cast<int>(a_pre)) == a1, fb = d.head(static_cast<int>(b_pre)) == b1;
  raw[static_cast<std::size_t>(a1.c)].e[static_cast<std::size_t>(a1.p)] = a_post;
  raw[static_cast<std::size_t>(b1.c)].e[static_cast<std::size_t>(b1.p)] = b_post;
  auto place = [&](std::array<long long, 4> t, int a_in, int b_in) {
    const int r = i_over ? b_in : a_in, over_in = i_over ? a_in : b_in;
    RawCrossing x;
    for (int k = 0; k < 4; ++k) x.e[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>((k + r) % 4)];
    x.over_from_one = (over_in - r + 4) % 4 == 1;
    return x;
  };
  raw.push_back(place({b_mid, a_mid, b_post, a_pre}, fa ? 3 : 1, fb ? 0 : 2));
  raw.push_back(place({b_pre, a_mid, b_mid, a_post}, fa ? 1 : 3, fb ? 0 : 2));
  // Keep component order and direction: seed each component at an old edge.
  std::vector<std::optional<long long>> seeds;
  for (int c = 0; c < d.num_components(); ++c) {
    const auto& es = d.component_edges(c);
    if (es.empty())
      seeds.emplace_back(std::nullopt);
    else
      seeds.emplace_back(es.front());
  }
  auto out = detail::build_diagram(raw, seeds, d.orientation(), d.name());
  check_planarity(out);
  return out;
}

struct SimplifyOptions {
  int r3_depth = 8;
  std::size_t max_visited = 2000;
};

/// Applies kink and clasp removals greedily, then searches short sequences of
/// triangle moves for a diagram that admits a further reduction.
inline LinkDiagram simplify(LinkDiagram d, const SimplifyOptions& opt = {}) {
  auto greedy = [](LinkDiagram x) {
    for (;;) {
      if (auto r = reduce_r1(x)) {
        x = std::move(*r);
        continue;
      }
      if (auto r = reduce_r2(x)) {
        x = std::move(*r);
        continue;
      }
      return x;
    }
  };
  d = greedy(std::move(d));
  for (;;) {
    const int n0 = d.num_crossings();
    if (n0 == 0 || opt.r3_depth <= 0) return d;
    std::set<std::string> seen{d.to_pd()};
    std::deque<std::pair<LinkDiagram, int>> queue{{d, 0}};
    std::optional<LinkDiagram> better;
    while (!queue.empty() && !better && seen.size() < opt.max_visited) {
      auto [cur, depth] = std::move(queue.front());
      queue.pop_front();
      if (depth >= opt.r3_depth) continue;
      for (auto& m : r3_moves(cur)) {
        if (!seen.insert(m.to_pd()).second) continue;
        auto g = greedy(m);
        if (g.num_crossings() < n0) {
          better = std::move(g);
          break;
        }
        queue.emplace_back(std::move(m), depth + 1);
      }
    }
    if (!better) return d;
    d = std::move(*better);
  }
}

}  // namespace linkbound
