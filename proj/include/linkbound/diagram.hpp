#pragma once

// Oriented link diagrams given by PD codes.
//
// A crossing lists four edge labels counterclockwise, starting at the
// incoming under-strand.  Slots 0 and 2 carry the under-strand, slots 1 and 3
// the over-strand.  Internally edges are relabelled 0..E-1 so that each
// component's edges are consecutive in traversal order.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace linkbound {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedDiagram : public DiagramError {
 public:
  DisconnectedDiagram() : DiagramError("diagram is disconnected (split diagrams are not supported here)") {}
};

/// +1 keeps a component's traversal direction, -1 reverses it.
using Orientation = std::vector<int>;

struct Crossing {
  std::array<int, 4> e{};
  /// The over-strand enters at slot 1 (otherwise at slot 3).
  bool over_from_one = false;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Slot position (crossing, slot).
struct End {
  int c = -1;
  int p = -1;
  friend bool operator==(const End&, const End&) = default;
  friend auto operator<=>(const End&, const End&) = default;
};

/// Raw crossing as read or spliced: arbitrary labels plus the over bit.
struct RawCrossing {
  std::array<long long, 4> e{};
  bool over_from_one = false;
};

class LinkDiagram;

namespace detail {
LinkDiagram build_diagram(const std::vector<RawCrossing>& raw, const std::vector<std::optional<long long>>& seeds,
                          Orientation orient, std::string name);
}

class LinkDiagram {
 public:
  LinkDiagram() : comps_(1), orientation_{1} { compute_faces(); }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int num_crossings() const noexcept { return static_cast<int>(crossings_.size()); }
  int num_edges() const noexcept { return static_cast<int>(comp_of_edge_.size()); }
  int num_components() const noexcept { return static_cast<int>(comps_.size()); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
  /// Edges of component i in traversal order; empty for a crossingless circle.
  const std::vector<int>& component_edges(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
  int component_of_edge(int e) const { return comp_of_edge_.at(static_cast<std::size_t>(e)); }
  const Orientation& orientation() const noexcept { return orientation_; }

  LinkDiagram with_orientation(Orientation o) const {
    if (o.size() != comps_.size()) throw DiagramError("orientation length does not match component count");
    for (int v : o)
      if (v != 1 && v != -1) throw DiagramError("orientation entries must be +1 or -1");
    LinkDiagram d = *this;
    d.orientation_ = std::move(o);
    return d;
  }

  End head(int e) const { return head_.at(static_cast<std::size_t>(e)); }
  End tail(int e) const { return tail_.at(static_cast<std::size_t>(e)); }
  int edge_at(End x) const { return crossings_[static_cast<std::size_t>(x.c)].e[static_cast<std::size_t>(x.p)]; }

  /// The other slot position of the edge at `x`.
  End other_end(End x) const {
    const int e = edge_at(x);
    return head(e) == x ? tail(e) : head(e);
  }

  /// True iff the edge at slot `p` of crossing `c` points into the crossing (PD direction).
  bool is_incoming(int c, int p) const {
    const bool bit = crossings_[static_cast<std::size_t>(c)].over_from_one;
    switch (p) {
      case 0: return true;
      case 2: return false;
      case 1: return bit;
      default: return !bit;
    }
  }

  int under_component(int c) const { return component_of_edge(crossing(c).e[0]); }
  int over_component(int c) const { return component_of_edge(crossing(c).e[1]); }

  /// Crossing sign for the PD direction of every component.
  int base_sign(int c) const { return crossing(c).over_from_one ? -1 : 1; }

  int crossing_sign(int c, const Orientation& o) const {
    check_orientation(o);
    return base_sign(c) * o[static_cast<std::size_t>(under_component(c))] *
           o[static_cast<std::size_t>(over_component(c))];
  }
  int crossing_sign(int c) const { return crossing_sign(c, orientation_); }

  int writhe(const Orientation& o) const {
    int w = 0;
    for (int c = 0; c < num_crossings(); ++c) w += crossing_sign(c, o);
    return w;
  }
  int writhe() const { return writhe(orientation_); }

  // Faces ------------------------------------------------------------------

  int num_faces() const noexcept { return num_faces_; }
  /// Face containing corner q of crossing c (between slots q and q+1).
  int face_of_corner(int c, int q) const { return corner_face_[static_cast<std::size_t>(4 * c + ((q % 4) + 4) % 4)]; }
  /// Corners (crossing, corner index) bounding each face.
  const std::vector<std::vector<End>>& face_corners() const noexcept { return faces_; }

  bool is_connected() const noexcept { return connected_; }

  /// Connected components of the diagram as component-index groups.
  std::vector<std::vector<int>> piece_components() const {
    std::vector<int> parent(comps_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (int c = 0; c < num_crossings(); ++c) {
      int a = find(under_component(c)), b = find(over_component(c));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < num_components(); ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    return out;
  }

  // Edits -------------------------------------------------------------------

  LinkDiagram change_crossing(int c) const {
    if (c < 0 || c >= num_crossings()) throw DiagramError("unknown crossing " + std::to_string(c));
    LinkDiagram d = *this;
    auto& x = d.crossings_[static_cast<std::size_t>(c)];
    const auto t = x.e;
    // The old over-strand becomes the under-strand; rotate so it starts at slot 0.
    if (!x.over_from_one) {
      x.e = {t[3], t[0], t[1], t[2]};
      x.over_from_one = true;
    } else {
      x.e = {t[1], t[2], t[3], t[0]};
      x.over_from_one = false;
    }
    d.rebuild_cache();
    return d;
  }

  LinkDiagram change_crossings(const std::vector<int>& cs) const {
    LinkDiagram d = *this;
    for (int c : cs) d = d.change_crossing(c);
    return d;
  }

  LinkDiagram mirror() const {
    LinkDiagram d = *this;
    for (int c = 0; c < num_crossings(); ++c) d = d.change_crossing(c);
    return d;
  }

  /// Deletes crossings (and whole components) and splices the surviving
  /// strands straight through.  Component order and orientation of the
  /// survivors are kept.
  LinkDiagram remove(const std::set<int>& drop_crossings, const std::set<int>& drop_components) const {
    std::vector<int> uf(static_cast<std::size_t>(num_edges()));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    std::vector<RawCrossing> raw;
    for (int c = 0; c < num_crossings(); ++c) {
      const auto& x = crossings_[static_cast<std::size_t>(c)];
      const bool under_gone = drop_components.count(under_component(c)) > 0;
      const bool over_gone = drop_components.count(over_component(c)) > 0;
      if (drop_crossings.count(c) || under_gone || over_gone) {
        if (!under_gone) unite(x.e[0], x.e[2]);
        if (!over_gone) unite(x.e[1], x.e[3]);
        continue;
      }
      raw.push_back(RawCrossing{{x.e[0], x.e[1], x.e[2], x.e[3]}, x.over_from_one});
    }
    for (auto& r : raw)
      for (auto& l : r.e) l = find(static_cast<int>(l));
    std::set<long long> present;
    for (const auto& r : raw)
      for (auto l : r.e) present.insert(l);
    std::vector<std::optional<long long>> seeds;
    Orientation o;
    for (int i = 0; i < num_components(); ++i) {
      if (drop_components.count(i)) continue;
      o.push_back(orientation_[static_cast<std::size_t>(i)]);
      const auto& es = comps_[static_cast<std::size_t>(i)];
      if (es.empty()) {
        seeds.emplace_back(std::nullopt);
        continue;
      }
      std::optional<long long> seed;
      for (int e : es)
        if (present.count(find(e))) {
          seed = find(e);
          break;
        }
      seeds.push_back(seed);
    }
    if (seeds.empty()) throw DiagramError("cannot remove every component");
    return detail::build_diagram(raw, seeds, std::move(o), name_);
  }

  LinkDiagram sublink(const std::set<int>& keep) const {
    if (keep.empty()) throw DiagramError("sublink: empty component set");
    std::set<int> drop;
    for (int i = 0; i < num_components(); ++i)
      if (!keep.count(i)) drop.insert(i);
    for (int i : keep)
      if (i < 0 || i >= num_components()) throw DiagramError("sublink: unknown component " + std::to_string(i));
    return remove({}, drop);
  }

  /// Splits a disconnected diagram into its connected pieces.
  std::vector<LinkDiagram> split_pieces() const {
    std::vector<LinkDiagram> out;
    for (const auto& g : piece_components()) out.push_back(sublink(std::set<int>(g.begin(), g.end())));
    return out;
  }

  std::string to_pd() const {
    std::ostringstream os;
    if (!name_.empty()) os << "name " << name_ << '\n';
    os << "components " << num_components() << '\n';
    if (std::any_of(orientation_.begin(), orientation_.end(), [](int v) { return v != 1; })) {
      os << "orient";
      for (int v : orientation_) os << ' ' << (v > 0 ? "+1" : "-1");
      os << '\n';
    }
    for (const auto& x : crossings_)
      os << "X " << x.e[0] + 1 << ' ' << x.e[1] + 1 << ' ' << x.e[2] + 1 << ' ' << x.e[3] + 1 << '\n';
    return os.str();
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.comps_ == b.comps_ && a.orientation_ == b.orientation_;
  }

  void check_orientation(const Orientation& o) const {
    if (o.size() != comps_.size()) throw DiagramError("orientation length does not match component count");
  }

 private:
  friend LinkDiagram detail::build_diagram(const std::vector<RawCrossing>&,
                                           const std::vector<std::optional<long long>>&, Orientation, std::string);

  void rebuild_cache() {
    const std::size_t ne = comp_of_edge_.size();
    head_.assign(ne, End{});
    tail_.assign(ne, End{});
    for (int c = 0; c < num_crossings(); ++c)
      for (int p = 0; p < 4; ++p) {
        const int e = crossings_[static_cast<std::size_t>(c)].e[static_cast<std::size_t>(p)];
        (is_incoming(c, p) ? head_ : tail_)[static_cast<std::size_t>(e)] = End{c, p};
      }
    compute_faces();
  }

  void compute_faces() {
    const int n = num_crossings();
    corner_face_.assign(static_cast<std::size_t>(4 * n), -1);
    faces_.clear();
    // Darts (c,p) advance along their edge and turn to the next slot; the
    // dart (c,p) sees corner (c,p-1).
    for (int start = 0; start < 4 * n; ++start) {
      const int sc = start / 4, sq = (start % 4 + 3) % 4;
      if (corner_face_[static_cast<std::size_t>(4 * sc + sq)] >= 0) continue;
      const int f = static_cast<int>(faces_.size());
      faces_.emplace_back();
      End d{start / 4, start % 4};
      do {
        const int q = (d.p + 3) % 4;
        corner_face_[static_cast<std::size_t>(4 * d.c + q)] = f;
        faces_.back().push_back(End{d.c, q});
        const End o = other_end(d);
        d = End{o.c, (o.p + 1) % 4};
      } while (!(d.c == start / 4 && d.p == start % 4));
    }
    num_faces_ = static_cast<int>(faces_.size());
    std::size_t free_loops = 0;
    for (const auto& c : comps_)
      if (c.empty()) ++free_loops;
    if (n == 0) {
      num_faces_ = static_cast<int>(free_loops) + 1;
      connected_ = free_loops == 1;
      return;
    }
    connected_ = piece_components().size() == 1;
  }

  std::string name_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> comps_;
  std::vector<int> comp_of_edge_;
  Orientation orientation_;
  std::vector<End> head_, tail_;
  std::vector<int> corner_face_;
  std::vector<std::vector<End>> faces_;
  int num_faces_ = 2;
  bool connected_ = true;
};

namespace detail {

inline LinkDiagram build_diagram(const std::vector<RawCrossing>& raw,
                                 const std::vector<std::optional<long long>>& seeds, Orientation orient,
                                 std::string name) {
  if (orient.size() != seeds.size()) throw DiagramError("orientation length does not match component count");
  std::map<long long, std::vector<End>> ends;
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int p = 0; p < 4; ++p) ends[raw[c].e[static_cast<std::size_t>(p)]].push_back(End{static_cast<int>(c), p});
  for (const auto& [label, v] : ends)
    if (v.size() != 2)
      throw DiagramError("edge label " + std::to_string(label) + " appears " + std::to_string(v.size()) + " times");
  auto incoming = [&](End x) {
    const bool bit = raw[static_cast<std::size_t>(x.c)].over_from_one;
    return x.p == 0 || (x.p == 1 && bit) || (x.p == 3 && !bit);
  };
  for (const auto& [label, v] : ends)
    if (incoming(v[0]) == incoming(v[1]))
      throw DiagramError("edge label " + std::to_string(label) + " has inconsistent direction");

  LinkDiagram d;
  d.name_ = std::move(name);
  d.crossings_.assign(raw.size(), Crossing{});
  for (std::size_t c = 0; c < raw.size(); ++c) d.crossings_[c].over_from_one = raw[c].over_from_one;
  d.comps_.clear();
  d.comp_of_edge_.clear();
  std::map<long long, int> relabel;
  for (const auto& seed : seeds) {
    d.comps_.emplace_back();
    if (!seed) continue;
    if (!ends.count(*seed)) throw DiagramError("component seed does not name an edge");
    if (relabel.count(*seed)) throw DiagramError("two seeds name the same component");
    long long label = *seed;
    do {
      const int id = static_cast<int>(d.comp_of_edge_.size());
      relabel[label] = id;
      d.comps_.back().push_back(id);
      d.comp_of_edge_.push_back(static_cast<int>(d.comps_.size()) - 1);
      const auto& v = ends[label];
      const End h = incoming(v[0]) ? v[0] : v[1];
      label = raw[static_cast<std::size_t>(h.c)].e[static_cast<std::size_t>((h.p + 2) % 4)];
    } while (label != *seed);
  }
  if (relabel.size() != ends.size()) throw DiagramError("some edges belong to no listed component");
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int p = 0; p < 4; ++p)
      d.crossings_[c].e[static_cast<std::size_t>(p)] = relabel.at(raw[c].e[static_cast<std::size_t>(p)]);
  d.orientation_ = std::move(orient);
  d.rebuild_cache();
  return d;
}

}  // namespace detail

/// Euler check: every connected piece with C crossings must bound C + 2 faces.
inline void check_planarity(const LinkDiagram& d) {
  std::vector<int> piece_of_comp(static_cast<std::size_t>(d.num_components()), -1);
  const auto pieces = d.piece_components();
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (int c : pieces[i]) piece_of_comp[static_cast<std::size_t>(c)] = static_cast<int>(i);
  std::vector<int> crossings(pieces.size(), 0), faces(pieces.size(), 0);
  for (int c = 0; c < d.num_crossings(); ++c) ++crossings[static_cast<std::size_t>(piece_of_comp[static_cast<std::size_t>(d.under_component(c))])];
  for (const auto& f : d.face_corners())
    ++faces[static_cast<std::size_t>(piece_of_comp[static_cast<std::size_t>(d.under_component(f.front().c))])];
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (crossings[i] == 0) continue;
    if (faces[i] != crossings[i] + 2)
      throw DiagramError("non-planar PD code: " + std::to_string(crossings[i]) + " crossings but " +
                         std::to_string(faces[i]) + " faces");
  }
}

namespace detail {

inline std::vector<std::string> tokens_of(std::string line) {
  for (char& ch : line)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == '\t' || ch == '\r') ch = ' ';
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

inline long long to_label(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace detail

namespace detail {

struct StrandConflict : DiagramError {
  StrandConflict(int c, const std::string& what) : DiagramError(what), crossing(c) {}
  int crossing;
};

/// Orients every strand of a labelled crossing list.  Under-passages at
/// `fixed` crossings must enter at slot 0 and decide the direction; free
/// crossings are rotated by two slots where needed.  Components without a
/// deciding passage run from their smallest label toward its smaller
/// neighbour.  Returns the oriented crossings and each component's smallest
/// label, in increasing order.
inline std::pair<std::vector<RawCrossing>, std::vector<long long>> orient_strands(
    const std::vector<std::array<long long, 4>>& xs, const std::vector<bool>& fixed) {
  std::map<long long, std::vector<End>> ends;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int p = 0; p < 4; ++p) ends[xs[c][static_cast<std::size_t>(p)]].push_back(End{static_cast<int>(c), p});
  for (const auto& [label, v] : ends)
    if (v.size() != 2)
      throw DiagramError("edge label " + std::to_string(label) + " appears " + std::to_string(v.size()) + " times");
  std::vector<int> over_entry(xs.size(), -1);
  std::vector<bool> rotate(xs.size(), false);
  std::set<long long> seen;
  std::vector<long long> comp_min;
  for (const auto& [start, v0] : ends) {
    if (seen.count(start)) continue;
    std::vector<End> steps;  // slot through which each step enters a crossing
    long long label = start;
    End into = v0[1];
    for (;;) {
      seen.insert(label);
      steps.push_back(into);
      const End exit_end{into.c, (into.p + 2) % 4};
      const long long next = xs[static_cast<std::size_t>(into.c)][static_cast<std::size_t>(exit_end.p)];
      const auto& nv = ends[next];
      label = next;
      into = nv[0] == exit_end ? nv[1] : nv[0];
      if (label == start && into == steps.front()) break;
      if (steps.size() > 4 * xs.size() + 4) throw DiagramError("could not trace a component");
    }
    int forward = 0, backward = 0, conflict_at = -1;
    for (const End& x : steps) {
      if (!fixed[static_cast<std::size_t>(x.c)]) continue;
      if (x.p == 0) ++forward;
      if (x.p == 2) ++backward, conflict_at = x.c;
    }
    if (forward && backward)
      throw StrandConflict(conflict_at, "inconsistent strand direction along the component through edge " +
                                            std::to_string(start));
    bool reversed = backward > 0;
    if (!forward && !backward) {
      const auto& ve = ends[start];
      const long long n0 = xs[static_cast<std::size_t>(ve[0].c)][static_cast<std::size_t>((ve[0].p + 2) % 4)];
      const long long n1 = xs[static_cast<std::size_t>(ve[1].c)][static_cast<std::size_t>((ve[1].p + 2) % 4)];
      const End want = n1 < n0 ? ve[1] : ve[0];
      reversed = !(steps.front() == want);
    }
    for (End x : steps) {
      // Walking backwards we enter through the slot we previously left by.
      if (reversed) x = End{x.c, (x.p + 2) % 4};
      if (x.p % 2 == 1)
        over_entry[static_cast<std::size_t>(x.c)] = x.p;
      else if (x.p == 2)
        rotate[static_cast<std::size_t>(x.c)] = true;
    }
    comp_min.push_back(start);
  }
  std::vector<RawCrossing> raw(xs.size());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const auto& t = xs[c];
    int entry = over_entry[c];
    if (rotate[c]) {
      raw[c].e = {t[2], t[3], t[0], t[1]};
      entry = (entry + 2) % 4;
    } else {
      raw[c].e = t;
    }
    raw[c].over_from_one = entry == 1;
  }
  return {raw, comp_min};
}

}  // namespace detail

/// Parses a PD file: `name`, `components`, `orient` headers and `X a b c d` lines.
inline LinkDiagram parse_pd(const std::string& text) {
  std::istringstream in(text);
  std::string line, name;
  std::optional<int> declared;
  std::optional<Orientation> orient;
  int orient_line = 0;
  std::vector<std::array<long long, 4>> xs;
  std::vector<int> x_line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto t = detail::tokens_of(line);
    if (t.empty()) continue;
    if (t[0] == "name") {
      if (t.size() < 2) throw ParseError(lineno, "name needs a label");
      name = t[1];
    } else if (t[0] == "components") {
      if (t.size() != 2) throw ParseError(lineno, "components needs one count");
      const long long k = detail::to_label(t[1], lineno);
      if (k < 1) throw ParseError(lineno, "component count must be at least 1");
      declared = static_cast<int>(k);
    } else if (t[0] == "orient") {
      Orientation o;
      for (std::size_t i = 1; i < t.size(); ++i) {
        const long long v = detail::to_label(t[i], lineno);
        if (v != 1 && v != -1) throw ParseError(lineno, "orientation entries must be +1 or -1");
        o.push_back(static_cast<int>(v));
      }
      orient = o;
      orient_line = lineno;
    } else if (t[0] == "X" || t[0] == "x" || t[0] == "PD") {
      if (t[0] == "PD") continue;
      if (t.size() != 5) throw ParseError(lineno, "crossing needs four edge labels");
      xs.push_back({detail::to_label(t[1], lineno), detail::to_label(t[2], lineno), detail::to_label(t[3], lineno),
                    detail::to_label(t[4], lineno)});
      x_line.push_back(lineno);
    } else {
      throw ParseError(lineno, "unrecognised line '" + t[0] + "'");
    }
  }
  if (xs.empty() && !declared) throw ParseError(0, "no crossings");

  std::map<long long, std::vector<End>> ends;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int p = 0; p < 4; ++p) ends[xs[c][static_cast<std::size_t>(p)]].push_back(End{static_cast<int>(c), p});
  for (const auto& [label, v] : ends) {
    if (v.size() == 1)
      throw ParseError(x_line[static_cast<std::size_t>(v[0].c)], "dangling edge label " + std::to_string(label));
    if (v.size() > 2)
      throw ParseError(x_line[static_cast<std::size_t>(v[2].c)],
                       "duplicate edge label " + std::to_string(label) + " (appears " + std::to_string(v.size()) +
                           " times)");
  }

  std::vector<RawCrossing> raw;
  std::vector<long long> comp_min;
  try {
    std::tie(raw, comp_min) = detail::orient_strands(xs, std::vector<bool>(xs.size(), true));
  } catch (const detail::StrandConflict& e) {
    throw ParseError(x_line[static_cast<std::size_t>(e.crossing)], e.what());
  }
  std::vector<std::optional<long long>> seeds(comp_min.begin(), comp_min.end());
  const int k_cross = static_cast<int>(seeds.size());
  const int k = declared.value_or(k_cross);
  if (k < k_cross)
    throw ParseError(0, "declared " + std::to_string(k) + " components but the crossings form " +
                            std::to_string(k_cross));
  while (static_cast<int>(seeds.size()) < k) seeds.emplace_back(std::nullopt);
  Orientation o(static_cast<std::size_t>(k), 1);
  if (orient) {
    if (static_cast<int>(orient->size()) != k)
      throw ParseError(orient_line, "orient lists " + std::to_string(orient->size()) + " entries for " +
                                        std::to_string(k) + " components");
    o = *orient;
  }
  LinkDiagram d;
  try {
    d = detail::build_diagram(raw, seeds, o, name);
    check_planarity(d);
  } catch (const DiagramError& e) {
    throw ParseError(0, e.what());
  }
  return d;
}

/// Builds a diagram from labelled crossings whose over bits are already known.
inline LinkDiagram make_diagram(const std::vector<RawCrossing>& raw, int free_loops = 0, std::string name = {}) {
  std::vector<std::optional<long long>> seeds;
  std::set<long long> covered;
  std::map<long long, std::vector<End>> ends;
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int p = 0; p < 4; ++p) ends[raw[c].e[static_cast<std::size_t>(p)]].push_back(End{static_cast<int>(c), p});
  for (const auto& [start, v] : ends) {
    if (covered.count(start)) continue;
    seeds.emplace_back(start);
    long long label = start;
    for (std::size_t guard = 0; guard <= 4 * raw.size(); ++guard) {
      covered.insert(label);
      const auto& ve = ends[label];
      if (ve.size() != 2) throw DiagramError("edge label " + std::to_string(label) + " does not appear twice");
      const End a = ve[0], b = ve[1];
      auto incoming = [&](End x) {
        const bool bit = raw[static_cast<std::size_t>(x.c)].over_from_one;
        return x.p == 0 || (x.p == 1 && bit) || (x.p == 3 && !bit);
      };
      const End h = incoming(a) ? a : b;
      label = raw[static_cast<std::size_t>(h.c)].e[static_cast<std::size_t>((h.p + 2) % 4)];
      if (label == start) break;
    }
  }
  for (int i = 0; i < free_loops; ++i) seeds.emplace_back(std::nullopt);
  Orientation o(seeds.size(), 1);
  auto d = detail::build_diagram(raw, seeds, o, std::move(name));
  check_planarity(d);
  return d;
}

/// k-component unknot chain drawn so that each circle passes over the next
/// one twice with opposite signs.  Its Goeritz matrix vanishes.
inline LinkDiagram standard_unlink(int k) {
  if (k < 1) throw DiagramError("unlink needs at least one component");
  if (k == 1) {
    LinkDiagram d;
    d.set_name("unknot");
    return d;
  }
  const int m = k - 1;  // T_j = j, B_j = m + j
  std::vector<RawCrossing> raw(static_cast<std::size_t>(2 * m));
  for (int j = 0; j < m; ++j) {
    raw[static_cast<std::size_t>(j)].over_from_one = false;
    raw[static_cast<std::size_t>(m + j)].over_from_one = true;
  }
  struct Visit {
    int c, arrive, leave;
  };
  long long next_label = 1;
  for (int i = 0; i < k; ++i) {
    std::vector<Visit> vs;
    if (i < m) vs.push_back({i, 3, 1});
    if (i > 0) {
      vs.push_back({i - 1, 0, 2});
      vs.push_back({m + i - 1, 0, 2});
    }
    if (i < m) vs.push_back({m + i, 1, 3});
    for (std::size_t s = 0; s < vs.size(); ++s) {
      const Visit& from = vs[s];
      const Visit& to = vs[(s + 1) % vs.size()];
      raw[static_cast<std::size_t>(from.c)].e[static_cast<std::size_t>(from.leave)] = next_label;
      raw[static_cast<std::size_t>(to.c)].e[static_cast<std::size_t>(to.arrive)] = next_label;
      ++next_label;
    }
  }
  auto d = make_diagram(raw, 0, std::to_string(k) + "-unlink");
  return d;
}

}  // namespace linkbound
