#pragma once

// Lower bounds on the unlinking number and their combination into a report.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "linkbound/diagram.hpp"
#include "linkbound/embeddings.hpp"
#include "linkbound/exactla.hpp"
#include "linkbound/invariants.hpp"
#include "linkbound/knot_table.hpp"

namespace linkbound {

/// Attribution order for ties; "nontrivial" is the fallback shown as "-".
inline const std::vector<std::string>& method_priority() {
  static const std::vector<std::string> order{"linking", "signature", "nullity",  "det_square",
                                              "cyclic_form", "lattice", "covering", "nontrivial"};
  return order;
}

struct MethodResult {
  std::string method;
  int value = 0;
  bool applicable = true;
  /// Ranked after every other method when breaking ties.
  bool secondary = false;
  std::vector<std::string> certificate;
  friend bool operator==(const MethodResult&, const MethodResult&) = default;
};

struct BoundReport {
  std::string name;
  int components = 0;
  std::vector<MethodResult> methods;
  int best_lower = 0;
  /// Attributed method, "-" when only the nontriviality bound applies.
  std::string method = "-";
  std::optional<int> upper;
  std::vector<int> witness;
  std::string upper_verdict;
  /// "determined" or "bracketed".
  std::string status = "bracketed";
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct BoundContext {
  const KnotUnknottingTable* knots = nullptr;
  const KnotJonesTable* jones = nullptr;
  int jones_cap = 16;
  /// Further diagrams of the same link, component order preserved, searched
  /// for definite Goeritz matrices.
  std::vector<LinkDiagram> definite_diagrams;
  /// Largest candidate tried by the lattice method.
  int lattice_max = 12;
};

namespace detail {

inline int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

inline std::string orientation_text(const Orientation& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + std::string(o[i] > 0 ? "+1" : "-1");
  return s + ")";
}

}  // namespace detail

// Individual methods --------------------------------------------------------

/// max over orientation classes of ceil(|sigma| / 2).
inline MethodResult bound_signature(const LinkDiagram& d) {
  MethodResult r{"signature"};
  if (!d.is_connected()) {
    r.applicable = false;
    return r;
  }
  for (const auto& o : orientation_classes(d.num_components())) {
    const int s = signature(d, o);
    r.certificate.push_back("sigma" + detail::orientation_text(o) + " = " + std::to_string(s));
    r.value = std::max(r.value, (std::abs(s) + 1) / 2);
  }
  return r;
}

inline MethodResult bound_nullity(const LinkDiagram& d) {
  MethodResult r{"nullity"};
  if (!d.is_connected()) {
    r.applicable = false;
    return r;
  }
  const int eta = nullity(d), k = d.num_components();
  r.value = std::max(0, k - 1 - eta);
  r.certificate.push_back("k = " + std::to_string(k) + ", eta = " + std::to_string(eta));
  return r;
}

/// True iff n = 2^e c^2 for some integer c.
inline bool is_power_of_two_times_square(const Integer& n, int e) {
  if (n == 0) return true;
  const Integer p = Integer(1) << e;
  return n % p == 0 && is_perfect_square(n / p);
}

inline MethodResult bound_det_square(const LinkDiagram& d) {
  MethodResult r{"det_square"};
  if (!d.is_connected()) {
    r.applicable = false;
    return r;
  }
  const int k = d.num_components();
  const Integer det = determinant(d);
  const bool form = is_power_of_two_times_square(det, k - 1);
  r.value = form ? 0 : k;
  r.certificate.push_back("det = " + det.str() + (form ? " has" : " lacks") + " the form 2^" + std::to_string(k - 1) +
                          " c^2");
  return r;
}

/// The "signatures of L" are read as the values over all orientation classes.
inline bool cyclic_form_escape(const Integer& det, const std::vector<int>& signatures) {
  const bool unit_sig = std::any_of(signatures.begin(), signatures.end(), [](int s) { return std::abs(s) == 1; });
  if (det % 4 == 0 && unit_sig) return true;
  if (det % 16 == 0) return true;
  return det % 2 == 0 && is_perfect_square(det / 2);
}

inline MethodResult bound_cyclic_form(const LinkDiagram& d) {
  MethodResult r{"cyclic_form"};
  if (d.num_components() != 2 || !d.is_connected()) {
    r.applicable = false;
    return r;
  }
  const auto g = goeritz(d, 0).g;
  const Integer det = abs(det_exact(g));
  std::vector<int> sigs;
  for (const auto& o : orientation_classes(2)) sigs.push_back(signature(d, o));
  const bool cyclic = presents_cyclic(g);
  const bool escape = cyclic_form_escape(det, sigs);
  r.value = cyclic && !escape ? 3 : 0;
  std::ostringstream os;
  os << "SNF";
  for (const auto& f : snf(g).invariant_factors) os << ' ' << f;
  os << (cyclic ? " (cyclic)" : " (not cyclic)") << ", det = " << det << (escape ? ", escape clause holds" : "");
  r.certificate.push_back(os.str());
  return r;
}

/// Lower bounds on the number of positive and negative crossing changes:
/// p >= (-sigma - eta + k - 1)/2 and n >= (sigma - eta + k - 1)/2, rounded up
/// and floored at 0.
struct CrossingSplitBound {
  int p = 0;
  int n = 0;
};

inline CrossingSplitBound min_positive_crossings(int sigma, int eta, int k) {
  return {std::max(0, detail::ceil_half(-sigma - eta + k - 1)), std::max(0, detail::ceil_half(sigma - eta + k - 1))};
}

inline CrossingSplitBound min_positive_crossings(const LinkDiagram& d, const Orientation& o) {
  return min_positive_crossings(signature(d, o), nullity(d), d.num_components());
}

inline MethodResult bound_nontrivial(const LinkDiagram& d, int jones_cap = 16) {
  MethodResult r{"nontrivial"};
  try {
    const bool differs = kauffman_jones(d, d.orientation(), jones_cap) != unlink_jones(d.num_components());
    r.value = differs ? 1 : 0;
    r.certificate.push_back(differs ? "Jones polynomial differs from the unlink" : "Jones polynomial of the unlink");
  } catch (const CrossingCapExceeded&) {
    r.applicable = false;
  }
  return r;
}

// Lattice obstruction -------------------------------------------------------

/// Positive-definite Goeritz matrices available for the obstruction: `pos`
/// for the link itself and `neg` (negated) for its mirror image.
struct DefiniteForms {
  std::vector<IntMatrix> pos;
  std::vector<IntMatrix> neg;
};

inline DefiniteForms definite_goeritz_forms(const LinkDiagram& d, const std::vector<LinkDiagram>& extra = {}) {
  DefiniteForms out;
  std::vector<const LinkDiagram*> all{&d};
  for (const auto& e : extra) all.push_back(&e);
  auto has = [](const std::vector<IntMatrix>& v, const IntMatrix& m) { return std::find(v.begin(), v.end(), m) != v.end(); };
  for (const auto* x : all) {
    if (!x->is_connected()) continue;
    for (int pick = 0; pick < 2; ++pick) {
      auto g = goeritz(*x, pick).g;
      if (g.rows() == 0) continue;
      const auto in = inertia(g);
      if (in.positive == static_cast<int>(g.rows()) && !has(out.pos, g)) out.pos.push_back(g);
      if (in.negative == static_cast<int>(g.rows())) {
        for (std::size_t i = 0; i < g.rows(); ++i)
          for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
        if (!has(out.neg, g)) out.neg.push_back(g);
      }
    }
  }
  auto by_size = [](const IntMatrix& a, const IntMatrix& b) { return a.rows() < b.rows(); };
  std::stable_sort(out.pos.begin(), out.pos.end(), by_size);
  std::stable_sort(out.neg.begin(), out.neg.end(), by_size);
  return out;
}

struct LatticeTest {
  bool obstructed = false;
  int l = 0;
  std::size_t embeddings = 0;
};

/// True (obstructed) iff no factorisation G = A^T A with A of size l x m has
/// q pairwise orthogonal norm-2 vectors in (Col A)^perp spanning a primitive
/// sublattice.
inline LatticeTest lattice_test(const IntMatrix& g, int l, int q) {
  LatticeTest t;
  t.l = l;
  bool found = false;
  for_each_embedding(g, l, [&](const IntMatrix& a) {
    ++t.embeddings;
    if (!norm2_complement_systems(a, q, true).empty()) {
      found = true;
      return false;
    }
    return true;
  });
  t.obstructed = !found;
  return t;
}

/// Raises a candidate unlinking number while every (p, n) split in some
/// orientation class is obstructed, by the crossing-split lemma or by the
/// lattice test at p = (-sigma + k - 1)/2 (or its mirror at
/// n = (sigma + k - 1)/2).  Needs a definite Goeritz matrix from some diagram.
inline MethodResult bound_lattice(const LinkDiagram& d, const BoundContext& ctx = {}) {
  MethodResult r{"lattice"};
  if (!d.is_connected()) {
    r.applicable = false;
    return r;
  }
  const DefiniteForms forms = definite_goeritz_forms(d, ctx.definite_diagrams);
  if (forms.pos.empty() && forms.neg.empty()) {
    r.applicable = false;
    r.certificate.push_back("no definite Goeritz matrix available");
    return r;
  }
  const int k = d.num_components(), eta = nullity(d);
  struct Cls {
    Orientation o;
    int sigma;
  };
  std::vector<Cls> classes;
  for (const auto& o : orientation_classes(k)) classes.push_back({o, signature(d, o)});
  std::map<std::tuple<bool, std::size_t, int>, LatticeTest> cache;
  auto run = [&](bool mirror, int u, std::string& note) {
    const auto& list = mirror ? forms.neg : forms.pos;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int m = static_cast<int>(list[i].rows());
      const int l = m + 2 * u - k + 1;
      auto key = std::make_tuple(mirror, i, u);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, lattice_test(list[i], l, u)).first;
      note = std::string(mirror ? "mirror " : "") + "lattice m=" + std::to_string(m) + " l=" + std::to_string(l) +
             " q=" + std::to_string(u) + " embeddings=" + std::to_string(it->second.embeddings);
      if (it->second.obstructed) return true;
    }
    return false;
  };
  // Logs every split of u in class c; stops at the first open split when `early`.
  auto analyse = [&](const Cls& c, int u, bool early, std::vector<std::string>& lines) {
    const auto lo = min_positive_crossings(c.sigma, eta, k);
    bool all = true;
    for (int p = 0; p <= u && (all || !early); ++p) {
      const int n = u - p;
      std::string head = "u=" + std::to_string(u) + " o=" + detail::orientation_text(c.o) +
                         " sigma=" + std::to_string(c.sigma) + " p=" + std::to_string(p) + " n=" + std::to_string(n) + ": ";
      if (p < lo.p) {
        lines.push_back(head + "obstructed by lemma (p >= " + std::to_string(lo.p) + ")");
        continue;
      }
      if (n < lo.n) {
        lines.push_back(head + "obstructed by lemma (n >= " + std::to_string(lo.n) + ")");
        continue;
      }
      const bool pos_case = !forms.pos.empty() && p == detail::ceil_half(-c.sigma + k - 1);
      const bool neg_case = !forms.neg.empty() && n == detail::ceil_half(c.sigma + k - 1);
      std::string note = "no lattice test applies";
      bool ob = false;
      if (pos_case) ob = run(false, u, note);
      if (!ob && neg_case) ob = run(true, u, note);
      lines.push_back(head + (ob ? "obstructed by " : "open, ") + note);
      if (!ob) all = false;
    }
    return all;
  };
  int u = 0;
  for (; u <= ctx.lattice_max; ++u) {
    // Classes with a split no test can reach are skipped; the rest are tried
    // cheapest first.
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      const auto& c = classes[ci];
      const auto lo = min_positive_crossings(c.sigma, eta, k);
      int needs = 0;
      bool hopeless = false;
      for (int p = 0; p <= u; ++p) {
        const int n = u - p;
        if (p < lo.p || n < lo.n) continue;
        const bool pos_case = !forms.pos.empty() && p == detail::ceil_half(-c.sigma + k - 1);
        const bool neg_case = !forms.neg.empty() && n == detail::ceil_half(c.sigma + k - 1);
        if (pos_case || neg_case)
          ++needs;
        else
          hopeless = true;
      }
      if (!hopeless) order.emplace_back(needs, ci);
    }
    std::stable_sort(order.begin(), order.end());
    bool obstructed = false;
    for (const auto& [needs, ci] : order) {
      std::vector<std::string> lines;
      const bool all = analyse(classes[ci], u, true, lines);
      for (auto& line : lines) r.certificate.push_back(std::move(line));
      if (all) {
        obstructed = true;
        break;
      }
    }
    if (!obstructed) break;
  }
  // Full split analysis at the first candidate left open.
  if (u <= ctx.lattice_max)
    for (const auto& c : classes) {
      std::vector<std::string> lines;
      analyse(c, u, false, lines);
      for (auto& line : lines) r.certificate.push_back("final " + line);
    }
  r.value = u;
  return r;
}

// Linking bound -------------------------------------------------------------

/// Recursive sublink bound of Kohn's inequality
/// u(L) >= u(L1) + u(L2) + |lk(L1, L2)|, memoised over component sets.
class LinkingBound {
 public:
  LinkingBound(const LinkDiagram& d, const BoundContext& ctx) : d_(d), ctx_(ctx) {
    if (d.num_components() > 16) throw DiagramError("too many components for the linking bound");
    const int k = d.num_components();
    for (const auto& o : orientation_classes(k)) lks_.push_back(linking_matrix(d, o));
  }

  /// Best bound for the sublink on `mask`, using every method except the lattice.
  int bound(unsigned mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    int best = own(mask);
    const auto [split, value] = best_split(mask);
    if (split) best = std::max(best, value);
    memo_[mask] = best;
    return best;
  }

  /// Best value of bound(S1) + bound(S2) + |lk(S1, S2)| over bipartitions of `mask`.
  std::pair<unsigned, int> best_split(unsigned mask) {
    unsigned best_part = 0;
    int best = -1;
    const unsigned low = mask & (~mask + 1);
    for (unsigned s = (mask - 1) & mask; s; s = (s - 1) & mask) {
      if (!(s & low)) continue;
      const unsigned t = mask & ~s;
      const int v = bound(s) + bound(t) + max_lk(s, t);
      if (v > best) best = v, best_part = s;
    }
    return {best_part, best};
  }

  int max_lk(unsigned s, unsigned t) const {
    int best = 0;
    const int k = d_.num_components();
    for (const auto& lk : lks_) {
      int v = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if ((s >> i & 1u) && (t >> j & 1u)) v += lk(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      best = std::max(best, std::abs(v));
    }
    return best;
  }

  std::set<int> components_of(unsigned mask) const {
    std::set<int> out;
    for (int i = 0; i < d_.num_components(); ++i)
      if (mask >> i & 1u) out.insert(i);
    return out;
  }

  std::string describe(unsigned mask) const {
    std::string s = "{";
    bool first = true;
    for (int i : components_of(mask)) s += (first ? "" : ",") + std::to_string(i), first = false;
    return s + "}";
  }

 private:
  int own(unsigned mask) {
    const LinkDiagram sub = d_.sublink(components_of(mask));
    if (sub.num_components() == 1) {
      static const KnotUnknottingTable empty;
      return knot_lower_bound(sub, ctx_.knots ? *ctx_.knots : empty, ctx_.jones, ctx_.jones_cap).value;
    }
    if (!sub.is_connected()) return 0;
    int v = 0;
    v = std::max(v, bound_signature(sub).value);
    v = std::max(v, bound_nullity(sub).value);
    v = std::max(v, bound_det_square(sub).value);
    v = std::max(v, bound_cyclic_form(sub).value);
    const auto nt = bound_nontrivial(sub, ctx_.jones_cap);
    if (nt.applicable) v = std::max(v, nt.value);
    return v;
  }

  const LinkDiagram& d_;
  const BoundContext& ctx_;
  std::vector<Matrix<int>> lks_;
  std::map<unsigned, int> memo_;
};

inline MethodResult bound_linking(const LinkDiagram& d, const BoundContext& ctx = {}) {
  MethodResult r{"linking"};
  const int k = d.num_components();
  if (k < 2) {
    r.applicable = false;
    return r;
  }
  LinkingBound lb(d, ctx);
  const unsigned all = (1u << k) - 1;
  const auto [s, v] = lb.best_split(all);
  r.value = std::max(0, v);
  const unsigned t = all & ~s;
  // Without a linking-number term the value only restates the sublink bounds.
  r.secondary = lb.max_lk(s, t) == 0;
  r.certificate.push_back(lb.describe(s) + " | " + lb.describe(t) + ": " + std::to_string(lb.bound(s)) + " + " +
                          std::to_string(lb.bound(t)) + " + |lk| " + std::to_string(lb.max_lk(s, t)));
  return r;
}

// Combination ---------------------------------------------------------------

inline int priority_of(const std::string& method) {
  const auto& p = method_priority();
  auto it = std::find(p.begin(), p.end(), method);
  return it == p.end() ? static_cast<int>(p.size()) : static_cast<int>(it - p.begin());
}

/// Recomputes best_lower, attribution and status from the method entries and
/// the upper bound.
inline void finalize(BoundReport& rep) {
  rep.best_lower = 0;
  rep.method = "-";
  int best_rank = 1000;
  for (const auto& m : rep.methods) {
    if (!m.applicable) continue;
    const int rank = priority_of(m.method) + (m.secondary ? 100 : 0);
    if (m.value > rep.best_lower || (m.value == rep.best_lower && m.value > 0 && rank < best_rank)) {
      rep.best_lower = m.value;
      rep.method = m.method;
      best_rank = rank;
    }
  }
  if (rep.method == "nontrivial") rep.method = "-";
  rep.status = rep.upper && *rep.upper == rep.best_lower ? "determined" : "bracketed";
}

/// Runs every lower-bound method and appends `extra` results (for instance
/// the covering obstruction, which needs separate input).
inline BoundReport combine(const LinkDiagram& d, const BoundContext& ctx = {}, std::vector<MethodResult> extra = {}) {
  BoundReport rep;
  rep.name = d.name();
  rep.components = d.num_components();
  rep.methods.push_back(bound_linking(d, ctx));
  rep.methods.push_back(bound_signature(d));
  rep.methods.push_back(bound_nullity(d));
  rep.methods.push_back(bound_det_square(d));
  rep.methods.push_back(bound_cyclic_form(d));
  rep.methods.push_back(bound_lattice(d, ctx));
  for (auto& m : extra) rep.methods.push_back(std::move(m));
  rep.methods.push_back(bound_nontrivial(d, ctx.jones_cap));
  finalize(rep);
  return rep;
}

inline void set_upper(BoundReport& rep, int upper, std::vector<int> witness, std::string verdict) {
  rep.upper = upper;
  rep.witness = std::move(witness);
  rep.upper_verdict = std::move(verdict);
  finalize(rep);
}

}  // namespace linkbound
