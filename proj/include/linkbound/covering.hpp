#pragma once

// Annular tangles: a component B cut open along a half-plane fence bounded by
// an unknotted axis A, its closure, the double cover branched over A, and the
// resulting obstruction to unlinking A u B with one crossing change in B.
//
// Tangle file:
//   name <label>
//   left  l1 ... lw     fence endpoints on the left side, inner to outer
//   right r1 ... rw     fence endpoints on the right side, inner to outer
//   X a b c d           crossings, PD convention
// Every label occurs exactly twice over the crossings and the two lists.
// Closing glues right endpoint i to left endpoint i.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "linkbound/bounds.hpp"
#include "linkbound/diagram.hpp"
#include "linkbound/invariants.hpp"

namespace linkbound {

struct AnnularTangle {
  std::string name;
  std::vector<long long> left;
  std::vector<long long> right;
  std::vector<std::array<long long, 4>> crossings;

  int width() const noexcept { return static_cast<int>(left.size()); }

  std::string to_text() const {
    std::ostringstream os;
    if (!name.empty()) os << "name " << name << '\n';
    os << "left";
    for (auto v : left) os << ' ' << v;
    os << "\nright";
    for (auto v : right) os << ' ' << v;
    os << '\n';
    for (const auto& x : crossings) os << "X " << x[0] << ' ' << x[1] << ' ' << x[2] << ' ' << x[3] << '\n';
    return os.str();
  }
};

class TangleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_tangle(const AnnularTangle& t) {
  if (t.left.size() != t.right.size())
    throw TangleError("endpoint mismatch: " + std::to_string(t.left.size()) + " left and " +
                      std::to_string(t.right.size()) + " right endpoints");
  std::map<long long, int> count;
  for (const auto& x : t.crossings)
    for (auto v : x) ++count[v];
  for (auto v : t.left) ++count[v];
  for (auto v : t.right) ++count[v];
  for (const auto& [label, n] : count)
    if (n != 2) throw TangleError("label " + std::to_string(label) + " occurs " + std::to_string(n) + " times");
}

/// Glues labels pairwise, then builds the diagram.  Label classes that meet
/// no crossing become crossingless circles.  Crossings flagged free may be
/// turned by two slots to start at the incoming under-strand.
inline LinkDiagram glue(const std::vector<std::array<long long, 4>>& xs, const std::vector<bool>& fixed,
                        const std::vector<std::pair<long long, long long>>& pairs, const std::set<long long>& labels,
                        std::string name) {
  std::map<long long, long long> parent;
  for (auto v : labels) parent[v] = v;
  auto find = [&](long long v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : pairs) {
    const long long x = find(a), y = find(b);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::array<long long, 4>> glued = xs;
  std::set<long long> touched;
  for (auto& x : glued)
    for (auto& v : x) touched.insert(v = find(v));
  std::set<long long> loops;
  for (auto v : labels)
    if (!touched.count(find(v))) loops.insert(find(v));
  auto [raw, mins] = orient_strands(glued, fixed);
  std::vector<std::optional<long long>> seeds(mins.begin(), mins.end());
  for (std::size_t i = 0; i < loops.size(); ++i) seeds.emplace_back(std::nullopt);
  if (seeds.empty()) throw TangleError("empty tangle");
  auto d = build_diagram(raw, seeds, Orientation(seeds.size(), 1), std::move(name));
  check_planarity(d);
  return d;
}

inline std::set<long long> labels_of(const AnnularTangle& t, long long offset = 0) {
  std::set<long long> out;
  for (const auto& x : t.crossings)
    for (auto v : x) out.insert(v + offset);
  for (auto v : t.left) out.insert(v + offset);
  for (auto v : t.right) out.insert(v + offset);
  return out;
}

}  // namespace detail

inline AnnularTangle parse_tangle(const std::string& text) {
  AnnularTangle t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_left = false, have_right = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto tok = detail::tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] == "name") {
      if (tok.size() < 2) throw ParseError(lineno, "name needs a label");
      t.name = tok[1];
    } else if (tok[0] == "left" || tok[0] == "right") {
      auto& dst = tok[0] == "left" ? t.left : t.right;
      (tok[0] == "left" ? have_left : have_right) = true;
      for (std::size_t i = 1; i < tok.size(); ++i) dst.push_back(detail::to_label(tok[i], lineno));
    } else if (tok[0] == "X" || tok[0] == "x") {
      if (tok.size() != 5) throw ParseError(lineno, "crossing needs four edge labels");
      t.crossings.push_back({detail::to_label(tok[1], lineno), detail::to_label(tok[2], lineno),
                             detail::to_label(tok[3], lineno), detail::to_label(tok[4], lineno)});
    } else {
      throw ParseError(lineno, "unrecognised line '" + tok[0] + "'");
    }
  }
  if (!have_left || !have_right) throw ParseError(0, "tangle needs left and right endpoint lines");
  detail::check_tangle(t);
  return t;
}

/// The component B: right endpoint i glued to left endpoint i.
inline LinkDiagram annular_closure(const AnnularTangle& t) {
  detail::check_tangle(t);
  std::vector<std::pair<long long, long long>> pairs;
  for (int i = 0; i < t.width(); ++i) pairs.emplace_back(t.right[static_cast<std::size_t>(i)], t.left[static_cast<std::size_t>(i)]);
  return detail::glue(t.crossings, std::vector<bool>(t.crossings.size(), true), pairs, detail::labels_of(t),
                      t.name.empty() ? std::string() : t.name + "-B");
}

/// Preimage of B under (z, t) -> (z^2, t): two copies with right endpoints of
/// each copy glued to the left endpoints of the other.
inline LinkDiagram double_cover(const AnnularTangle& t) {
  detail::check_tangle(t);
  const auto labels = detail::labels_of(t);
  const long long offset = labels.empty() ? 1 : *labels.rbegin() - *labels.begin() + 1;
  std::vector<std::array<long long, 4>> xs = t.crossings;
  for (const auto& x : t.crossings) xs.push_back({x[0] + offset, x[1] + offset, x[2] + offset, x[3] + offset});
  std::vector<std::pair<long long, long long>> pairs;
  for (int i = 0; i < t.width(); ++i) {
    const auto l = t.left[static_cast<std::size_t>(i)], r = t.right[static_cast<std::size_t>(i)];
    pairs.emplace_back(r, l + offset);
    pairs.emplace_back(r + offset, l);
  }
  auto all = labels;
  for (auto v : labels) all.insert(v + offset);
  return detail::glue(xs, std::vector<bool>(xs.size(), true), pairs, all,
                      t.name.empty() ? std::string() : t.name + "-cover");
}

/// Diagram of A u B: the axis runs along the fence, over every strand on the
/// right side and under every strand on the left side.  A is the last component.
inline LinkDiagram axis_link(const AnnularTangle& t) {
  detail::check_tangle(t);
  const int w = t.width();
  auto labels = detail::labels_of(t);
  long long next = labels.empty() ? 1 : *labels.rbegin() + 1;
  std::vector<std::array<long long, 4>> xs = t.crossings;
  std::vector<bool> fixed(xs.size(), true);
  if (w == 0) throw TangleError("axis link of a tangle that never meets the fence is split");
  std::vector<long long> m(static_cast<std::size_t>(w)), a(static_cast<std::size_t>(w + 1)), b(static_cast<std::size_t>(w + 1));
  for (auto& v : m) v = next++;
  for (auto& v : a) v = next++;
  b[0] = a[0];
  b[static_cast<std::size_t>(w)] = a[static_cast<std::size_t>(w)];
  for (int i = 1; i < w; ++i) b[static_cast<std::size_t>(i)] = next++;
  for (int i = 1; i <= w; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const long long rho = t.right[k - 1], ell = t.left[k - 1];
    xs.push_back({rho, a[k], m[k - 1], a[k - 1]});
    xs.push_back({b[k], ell, b[k - 1], m[k - 1]});
    fixed.push_back(false);
    fixed.push_back(false);
  }
  std::vector<std::pair<long long, long long>> none;
  std::set<long long> all;
  for (const auto& x : xs)
    for (auto v : x) all.insert(v);
  return detail::glue(xs, fixed, none, all, t.name);
}

/// Signed number of times B crosses the fence, read off as lk(A, B) in the
/// axis link.  Components of B that meet no crossing are oriented arbitrarily.
inline int winding_number(const AnnularTangle& t) {
  detail::check_tangle(t);
  if (t.width() == 0) return 0;
  const LinkDiagram d = axis_link(t);
  return linking_number(d, {d.num_components() - 1}, d.orientation());
}

/// Cuts a diagram open along a path of faces f_0 (holding the axis), ..., f_w
/// (holding the point at infinity).  Consecutive faces must share the edge
/// crossed; the faces must be distinct.
inline AnnularTangle cut_along_faces(const LinkDiagram& d, const std::vector<int>& faces,
                                     const std::vector<int>& edges) {
  if (faces.size() != edges.size() + 1) throw TangleError("cut: need one edge between consecutive faces");
  AnnularTangle t;
  t.name = d.name();
  std::vector<std::array<long long, 4>> xs;
  for (const auto& x : d.crossings()) xs.push_back({x.e[0] + 1, x.e[1] + 1, x.e[2] + 1, x.e[3] + 1});
  long long next = d.num_edges() + 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int e = edges[i];
    const End tl = d.tail(e), hd = d.head(e);
    const int left_face = d.face_of_corner(tl.c, tl.p), right_face = d.face_of_corner(tl.c, (tl.p + 3) % 4);
    if (left_face == right_face) throw TangleError("cut: edge has the same face on both sides");
    const int inner = faces[i], outer = faces[i + 1];
    if (!((inner == left_face && outer == right_face) || (inner == right_face && outer == left_face)))
      throw TangleError("cut: edge does not separate the given faces");
    // Crossing from the edge's right to its left means the edge points to the
    // right of the path, so its head lies on the right side of the fence.
    const bool head_right = inner == right_face;
    const long long fresh = next++;
    const long long old = e + 1;
    const End moved = head_right ? tl : hd;  // the end on the left side
    xs[static_cast<std::size_t>(moved.c)][static_cast<std::size_t>(moved.p)] = fresh;
    t.right.push_back(old);
    t.left.push_back(fresh);
  }
  t.crossings = std::move(xs);
  detail::check_tangle(t);
  return t;
}

/// Lower bound for u(B~) from the bounds module and the resulting verdict:
/// a bound above 2 rules out unlinking A u B by one crossing change in B.
struct CoveringResult {
  LinkDiagram cover;
  BoundReport cover_bounds;
  bool obstructed = false;
  /// B has nontrivial Jones polynomial, so a change of a self-crossing of A
  /// cannot unlink A u B.
  bool b_knotted = false;
};

inline CoveringResult covering_obstruction(const AnnularTangle& t, const BoundContext& ctx = {}) {
  if (const int wn = winding_number(t); wn != 0)
    throw TangleError("winding number " + std::to_string(wn) + " is not zero");
  CoveringResult r;
  r.cover = double_cover(t);
  r.cover_bounds = combine(r.cover, ctx);
  r.obstructed = r.cover_bounds.best_lower > 2;
  try {
    r.b_knotted = kauffman_jones(annular_closure(t), ctx.jones_cap) != Laurent{{0, 1}};
  } catch (const CrossingCapExceeded&) {
  }
  return r;
}

/// Method entry for the report of A u B.
inline MethodResult covering_method(const CoveringResult& c) {
  MethodResult m{"covering"};
  m.value = c.obstructed && c.b_knotted ? 2 : 0;
  m.certificate.push_back("cover has " + std::to_string(c.cover.num_components()) + " components, u >= " +
                          std::to_string(c.cover_bounds.best_lower) + " via " + c.cover_bounds.method);
  return m;
}

}  // namespace linkbound
