#pragma once

// Goeritz matrix, signature, determinant, nullity, linking numbers and the
// Jones polynomial of a link diagram.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "linkbound/diagram.hpp"
#include "linkbound/exactla.hpp"

namespace linkbound {

struct Shading {
  int pick = 0;
  /// Per face: true when unshaded.
  std::vector<bool> white;
  /// Unshaded faces in increasing face order; the default labelling R_0..R_n.
  std::vector<int> white_regions;
};

/// Chessboard colouring.  Colour 0 is the class of the face at corner 0 of
/// crossing 0; `pick` chooses which class is unshaded.
inline Shading checkerboard(const LinkDiagram& d, int pick) {
  if (!d.is_connected()) throw DisconnectedDiagram();
  Shading s;
  s.pick = pick & 1;
  const int nf = d.num_faces();
  std::vector<int> color(static_cast<std::size_t>(nf), -1);
  if (d.num_crossings() == 0) {
    color = {0, 1};
  } else {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nf));
    for (int c = 0; c < d.num_crossings(); ++c)
      for (int q = 0; q < 4; ++q) {
        const int a = d.face_of_corner(c, q), b = d.face_of_corner(c, q + 1);
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
      }
    const int root = d.face_of_corner(0, 0);
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      const int f = bfs.front();
      bfs.pop();
      for (int g : adj[static_cast<std::size_t>(f)]) {
        if (color[static_cast<std::size_t>(g)] < 0) {
          color[static_cast<std::size_t>(g)] = 1 - color[static_cast<std::size_t>(f)];
          bfs.push(g);
        } else if (color[static_cast<std::size_t>(g)] == color[static_cast<std::size_t>(f)]) {
          throw DiagramError("faces do not admit a chessboard colouring");
        }
      }
    }
  }
  s.white.resize(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) {
    s.white[static_cast<std::size_t>(f)] = color[static_cast<std::size_t>(f)] == s.pick;
    if (s.white[static_cast<std::size_t>(f)]) s.white_regions.push_back(f);
  }
  return s;
}

namespace detail {

inline bool slot_incoming(const LinkDiagram& d, int c, int p, const Orientation& o) {
  const int comp = (p % 2 == 0) ? d.under_component(c) : d.over_component(c);
  const bool in = d.is_incoming(c, p);
  return o[static_cast<std::size_t>(comp)] > 0 ? in : !in;
}

}  // namespace detail

/// Incidence number of a crossing with respect to a shading.
inline int incidence(const LinkDiagram& d, const Shading& s, int c) {
  const bool w02 = s.white[static_cast<std::size_t>(d.face_of_corner(c, 0))];
  return w02 ? 1 : -1;
}

/// Type II crossings are those whose unshaded corners sit between one
/// incoming and one outgoing strand.
inline bool is_type_two(const LinkDiagram& d, const Shading& s, int c, const Orientation& o) {
  const bool w02 = s.white[static_cast<std::size_t>(d.face_of_corner(c, 0))];
  const bool corner0_mixed = detail::slot_incoming(d, c, 0, o) != detail::slot_incoming(d, c, 1, o);
  const bool white_mixed = w02 ? corner0_mixed : !corner0_mixed;
  return white_mixed;
}

struct GoeritzData {
  IntMatrix g_prime;
  IntMatrix g;
  Shading shading;
  /// Face ids of R_0..R_n.
  std::vector<int> region_order;
  std::vector<int> iota;
  std::vector<bool> type_two;
  int mu = 0;
};

inline GoeritzData goeritz(const LinkDiagram& d, const Shading& s, const Orientation& o,
                           std::optional<std::vector<int>> region_order = std::nullopt) {
  if (!d.is_connected()) throw DisconnectedDiagram();
  d.check_orientation(o);
  GoeritzData out;
  out.shading = s;
  out.region_order = region_order.value_or(s.white_regions);
  if (out.region_order.size() != s.white_regions.size()) throw DiagramError("region labelling has the wrong size");
  std::map<int, int> index;
  for (std::size_t i = 0; i < out.region_order.size(); ++i) {
    const int f = out.region_order[i];
    if (f < 0 || f >= d.num_faces() || !s.white[static_cast<std::size_t>(f)] || index.count(f))
      throw DiagramError("region labelling is not a permutation of the unshaded faces");
    index[f] = static_cast<int>(i);
  }
  const std::size_t n1 = out.region_order.size();
  out.g_prime = IntMatrix(n1, n1);
  for (int c = 0; c < d.num_crossings(); ++c) {
    const int io = incidence(d, s, c);
    const bool t2 = is_type_two(d, s, c, o);
    out.iota.push_back(io);
    out.type_two.push_back(t2);
    if (t2) out.mu += io;
    const int q = s.white[static_cast<std::size_t>(d.face_of_corner(c, 0))] ? 0 : 1;
    const int a = index.at(d.face_of_corner(c, q)), b = index.at(d.face_of_corner(c, q + 2));
    if (a == b) continue;
    out.g_prime(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) -= io;
    out.g_prime(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) -= io;
  }
  for (std::size_t i = 0; i < n1; ++i) {
    Integer off = 0;
    for (std::size_t j = 0; j < n1; ++j)
      if (j != i) off += out.g_prime(i, j);
    out.g_prime(i, i) = -off;
  }
  out.g = n1 == 0 ? IntMatrix() : out.g_prime.minor_matrix(0, 0);
  return out;
}

inline GoeritzData goeritz(const LinkDiagram& d, int pick = 0) {
  return goeritz(d, checkerboard(d, pick), d.orientation());
}

inline int signature(const LinkDiagram& d, const Orientation& o, int pick = 0) {
  const auto gd = goeritz(d, checkerboard(d, pick), o);
  return inertia(gd.g).signature - gd.mu;
}
inline int signature(const LinkDiagram& d) { return signature(d, d.orientation()); }

inline Integer determinant(const LinkDiagram& d) { return abs(det_exact(goeritz(d, 0).g)); }

inline int nullity(const LinkDiagram& d) { return inertia(goeritz(d, 0).g).nullity; }

/// All orientations with component 0 kept, i.e. one representative per
/// class modulo global reversal.
inline std::vector<Orientation> orientation_classes(int k) {
  std::vector<Orientation> out;
  if (k < 1) return out;
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    Orientation o(static_cast<std::size_t>(k), 1);
    for (int i = 1; i < k; ++i)
      if (mask & (1u << (i - 1))) o[static_cast<std::size_t>(i)] = -1;
    out.push_back(o);
  }
  return out;
}

/// Pairwise linking numbers.
inline Matrix<int> linking_matrix(const LinkDiagram& d, const Orientation& o) {
  d.check_orientation(o);
  const std::size_t k = static_cast<std::size_t>(d.num_components());
  Matrix<int> twice(k, k);
  for (int c = 0; c < d.num_crossings(); ++c) {
    const auto a = static_cast<std::size_t>(d.under_component(c)), b = static_cast<std::size_t>(d.over_component(c));
    if (a == b) continue;
    const int e = d.crossing_sign(c, o);
    twice(a, b) += e;
    twice(b, a) += e;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (twice(i, j) % 2 != 0) throw DiagramError("odd mixed-crossing count between two components");
      twice(i, j) /= 2;
    }
  return twice;
}
inline Matrix<int> linking_matrix(const LinkDiagram& d) { return linking_matrix(d, d.orientation()); }

/// lk between the sublinks `part` and its complement.
inline int linking_number(const LinkDiagram& d, const std::vector<int>& part, const Orientation& o) {
  std::vector<bool> in(static_cast<std::size_t>(d.num_components()), false);
  for (int i : part) {
    if (i < 0 || i >= d.num_components()) throw DiagramError("unknown component " + std::to_string(i));
    in[static_cast<std::size_t>(i)] = true;
  }
  const auto cnt = std::count(in.begin(), in.end(), true);
  if (cnt == 0 || cnt == d.num_components()) throw DiagramError("linking number needs a nontrivial bipartition");
  const auto lk = linking_matrix(d, o);
  int total = 0;
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = 0; j < in.size(); ++j)
      if (in[i] && !in[j]) total += lk(i, j);
  return total;
}

struct LinkInvariants {
  int k = 0;
  int sigma = 0;
  int eta = 0;
  Integer det;
  Matrix<int> lk;
};

inline LinkInvariants compute_invariants(const LinkDiagram& d, const Orientation& o) {
  LinkInvariants inv;
  inv.k = d.num_components();
  const auto gd = goeritz(d, checkerboard(d, 0), o);
  const auto in = inertia(gd.g);
  inv.sigma = in.signature - gd.mu;
  inv.eta = in.nullity;
  inv.det = abs(det_exact(gd.g));
  inv.lk = linking_matrix(d, o);
  return inv;
}
inline LinkInvariants compute_invariants(const LinkDiagram& d) { return compute_invariants(d, d.orientation()); }

// Jones polynomial ----------------------------------------------------------

/// Laurent polynomial in x = t^{1/2}: exponent -> coefficient.
using Laurent = std::map<int, long long>;

inline Laurent trim(Laurent p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  return trim(out);
}

/// Jones polynomial of the k-component unlink, (-x - 1/x)^{k-1}.
inline Laurent unlink_jones(int k) {
  Laurent out{{0, 1}};
  for (int i = 1; i < k; ++i) out = multiply(out, Laurent{{1, -1}, {-1, -1}});
  return out;
}

inline std::string to_string(const Laurent& p, const std::string& var = "t") {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto [e, c] = *it;
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || e == 0) os << mag;
    if (e == 0) continue;
    os << var;
    if (e == 2) continue;
    if (e % 2 == 0)
      os << '^' << e / 2;
    else
      os << "^(" << e << "/2)";
  }
  return os.str();
}

class CrossingCapExceeded : public std::runtime_error {
 public:
  explicit CrossingCapExceeded(int n, int cap)
      : std::runtime_error("diagram has " + std::to_string(n) + " crossings; the Jones cap is " +
                           std::to_string(cap)) {}
};

/// Jones polynomial via the Kauffman bracket state sum, V = (-A^3)^{-w} <D>
/// with <unknot> = 1 and A = t^{-1/4}.  The result is in powers of t^{1/2}.
inline Laurent kauffman_jones(const LinkDiagram& d, const Orientation& o, int cap = 16) {
  const int n = d.num_crossings();
  if (n > cap) throw CrossingCapExceeded(n, cap);
  int free_loops = 0;
  for (int i = 0; i < d.num_components(); ++i)
    if (d.component_edges(i).empty()) ++free_loops;
  const int ne = d.num_edges();
  // count[a - b + n][loops]
  std::vector<std::vector<long long>> count(static_cast<std::size_t>(2 * n + 1),
                                            std::vector<long long>(static_cast<std::size_t>(ne + free_loops + 2), 0));
  std::vector<int> uf(static_cast<std::size_t>(ne));
  auto find = [&](int x) {
    while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    std::iota(uf.begin(), uf.end(), 0);
    int loops = ne;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        uf[static_cast<std::size_t>(a)] = b;
        --loops;
      }
    };
    int ab = 0;
    for (int c = 0; c < n; ++c) {
      const auto& e = d.crossing(c).e;
      if (state & (1u << c)) {
        unite(e[0], e[3]);
        unite(e[1], e[2]);
        --ab;
      } else {
        unite(e[0], e[1]);
        unite(e[2], e[3]);
        ++ab;
      }
    }
    ++count[static_cast<std::size_t>(ab + n)][static_cast<std::size_t>(loops + free_loops)];
  }
  // Bracket in powers of A.
  const Laurent delta{{2, -1}, {-2, -1}};
  std::vector<Laurent> dpow{Laurent{{0, 1}}};
  for (int i = 1; i <= ne + free_loops; ++i) dpow.push_back(multiply(dpow.back(), delta));
  Laurent bracket;
  for (int ab = -n; ab <= n; ++ab)
    for (std::size_t loops = 1; loops < count[static_cast<std::size_t>(ab + n)].size(); ++loops) {
      const long long m = count[static_cast<std::size_t>(ab + n)][loops];
      if (!m) continue;
      for (const auto& [e, c] : dpow[loops - 1]) bracket[e + ab] += m * c;
    }
  const int w = d.writhe(o);
  // (-A^3)^{-w} = (-1)^w A^{-3w}
  Laurent va;
  for (const auto& [e, c] : trim(bracket)) va[e - 3 * w] += (w % 2 ? -c : c);
  Laurent out;
  for (const auto& [e, c] : trim(va)) {
    if (e % 2 != 0) throw DiagramError("bracket exponent parity violated");
    out[-e / 2] += c;
  }
  return trim(out);
}
inline Laurent kauffman_jones(const LinkDiagram& d, int cap = 16) { return kauffman_jones(d, d.orientation(), cap); }

}  // namespace linkbound
