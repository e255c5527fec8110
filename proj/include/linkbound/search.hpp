#pragma once

// Upper bounds: crossing-change subsets of one diagram, each tested with a
// layered unlink filter.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linkbound/diagram.hpp"
#include "linkbound/invariants.hpp"
#include "linkbound/moves.hpp"

namespace linkbound {

enum class UnlinkTier { NotUnlink, ProbablyUnlink, CertifiedUnlink };

inline std::string to_string(UnlinkTier t) {
  switch (t) {
    case UnlinkTier::NotUnlink:
      return "not_unlink";
    case UnlinkTier::ProbablyUnlink:
      return "probably_unlink";
    case UnlinkTier::CertifiedUnlink:
      return "certified_unlink";
  }
  return "?";
}

struct UnlinkVerdict {
  UnlinkTier tier = UnlinkTier::NotUnlink;
  /// The layer that fired, or the layers passed.
  std::vector<std::string> evidence;
  /// The Jones layer was skipped because of the crossing cap.
  bool jones_skipped = false;
};

struct FilterOptions {
  int jones_cap = 16;
  SimplifyOptions simplify;
};

namespace detail {

/// Layers 2 and 3 on one connected piece with k components.
inline std::optional<std::string> piece_rejects(const LinkDiagram& piece, const FilterOptions& opt, bool& skipped) {
  const int k = piece.num_components();
  if (piece.num_crossings() == 0) return std::nullopt;
  if (nullity(piece) != k - 1) return "nullity " + std::to_string(nullity(piece)) + " != " + std::to_string(k - 1);
  for (const auto& o : orientation_classes(k))
    if (const int s = signature(piece, o); s != 0) return "signature " + std::to_string(s) + " != 0";
  try {
    if (kauffman_jones(piece, piece.orientation(), opt.jones_cap) != unlink_jones(k))
      return std::string("Jones polynomial differs from the unlink");
  } catch (const CrossingCapExceeded&) {
    skipped = true;
  }
  return std::nullopt;
}

}  // namespace detail

/// Cheapest tests first: linking numbers, nullity and signature, Jones
/// polynomial, then simplification.  A rejection is always sound.
inline UnlinkVerdict unlink_filter(const LinkDiagram& d, const FilterOptions& opt = {}) {
  UnlinkVerdict v;
  const int k = d.num_components();
  const auto lk = linking_matrix(d);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (lk(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0) {
        v.evidence.push_back("lk(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                             std::to_string(lk(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
        return v;
      }
  v.evidence.push_back("linking numbers vanish");
  for (const auto& group : d.piece_components()) {
    const LinkDiagram piece = d.sublink(std::set<int>(group.begin(), group.end()));
    if (auto why = detail::piece_rejects(piece, opt, v.jones_skipped)) {
      v.evidence.push_back(*why);
      return v;
    }
  }
  v.evidence.push_back("nullity k-1 and signature 0");
  v.evidence.push_back(v.jones_skipped ? "warning: Jones layer skipped (crossing cap)" : "Jones polynomial of the unlink");
  const LinkDiagram s = simplify(d, opt.simplify);
  bool empty = s.num_crossings() == 0;
  if (!empty) {
    // Split pieces may simplify separately.
    empty = true;
    for (const auto& group : s.piece_components())
      if (simplify(s.sublink(std::set<int>(group.begin(), group.end())), opt.simplify).num_crossings() != 0) empty = false;
  }
  if (empty) {
    v.tier = UnlinkTier::CertifiedUnlink;
    v.evidence.push_back("Reidemeister moves reach a crossingless diagram");
  } else {
    v.tier = UnlinkTier::ProbablyUnlink;
    v.evidence.push_back("simplification stopped at " + std::to_string(s.num_crossings()) + " crossings");
  }
  return v;
}

struct SearchOptions {
  int max_changes = 6;
  /// Accept only certified unlinks.
  bool certify_only = false;
  FilterOptions filter;
};

struct SearchResult {
  int changes = 0;
  std::vector<int> witness;
  UnlinkVerdict verdict;
};

/// Smallest c <= max_changes such that changing some c crossings passes the
/// filter; subsets are tried by size, then lexicographically.
inline std::optional<SearchResult> upper_bound_search(const LinkDiagram& d, const SearchOptions& opt = {}) {
  const int n = d.num_crossings();
  const UnlinkTier need = opt.certify_only ? UnlinkTier::CertifiedUnlink : UnlinkTier::ProbablyUnlink;
  for (int c = 0; c <= std::min(opt.max_changes, n); ++c) {
    std::vector<int> pick(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      auto v = unlink_filter(d.change_crossings(pick), opt.filter);
      if (v.tier >= need) return SearchResult{c, pick, std::move(v)};
      int i = c - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - c + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < c; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace linkbound
