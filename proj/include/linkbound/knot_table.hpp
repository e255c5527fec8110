#pragma once

// Unknotting numbers of small prime knots, and knot recognition by Jones
// polynomial for single link components.

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linkbound/diagram.hpp"
#include "linkbound/invariants.hpp"
#include "linkbound/moves.hpp"

namespace linkbound {

/// `knot value` pairs; absent knots read as 0.
class KnotUnknottingTable {
 public:
  KnotUnknottingTable() = default;

  static KnotUnknottingTable parse(std::istream& in) {
    KnotUnknottingTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::string name;
      if (!(ls >> name)) continue;
      int v = 0;
      if (!(ls >> v) || v < 0) throw ParseError(lineno, "expected 'knot value' with value >= 0");
      t.values_[name] = v;
    }
    return t;
  }
  static KnotUnknottingTable parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
  }

  int get(const std::string& knot) const {
    auto it = values_.find(strip_mirror(knot));
    return it == values_.end() ? 0 : it->second;
  }
  void set(const std::string& knot, int value) { values_[strip_mirror(knot)] = value; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::map<std::string, int>& values() const noexcept { return values_; }

  static std::string strip_mirror(std::string name) {
    if (!name.empty() && name.back() == '*') name.pop_back();
    return name;
  }

 private:
  std::map<std::string, int> values_;
};

/// Jones polynomials (in t^{1/2}) of tabulated knots and their mirrors.
class KnotJonesTable {
 public:
  static KnotJonesTable parse(std::istream& in) {
    KnotJonesTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::string name, term;
      if (!(ls >> name)) continue;
      Laurent p;
      while (ls >> term) {
        const auto colon = term.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected exponent:coefficient");
        try {
          p[std::stoi(term.substr(0, colon))] += std::stoll(term.substr(colon + 1));
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad term '" + term + "'");
        }
      }
      t.entries_.emplace_back(name, trim(p));
    }
    return t;
  }
  static KnotJonesTable parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
  }

  /// Names (with '*' for mirrors) whose Jones polynomial equals `p`.
  std::vector<std::string> lookup(const Laurent& p) const {
    std::vector<std::string> out;
    for (const auto& [name, q] : entries_)
      if (q == p) out.push_back(name);
    return out;
  }
  std::optional<Laurent> jones_of(const std::string& name) const {
    for (const auto& [n, q] : entries_)
      if (n == name) return q;
    return std::nullopt;
  }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, Laurent>> entries_;
};

struct KnotBound {
  int value = 0;
  /// "unknot", "table <name>", "jones", "signature" or "unknown".
  std::string reason;
};

/// Lower bound on the unknotting number of a one-component diagram:
/// the table value of a knot with matching Jones polynomial when there is
/// one, else 1 when the Jones polynomial is nontrivial; never below |sigma|/2.
inline KnotBound knot_lower_bound(const LinkDiagram& knot, const KnotUnknottingTable& u, const KnotJonesTable* jones,
                                  int jones_cap = 16) {
  if (knot.num_components() != 1) throw DiagramError("knot_lower_bound needs a one-component diagram");
  const LinkDiagram d = simplify(knot);
  if (d.num_crossings() == 0) return {0, "unknot"};
  KnotBound b{0, "unknown"};
  const int sig = signature(d, {1});
  if ((std::abs(sig) + 1) / 2 > b.value) b = {(std::abs(sig) + 1) / 2, "signature"};
  try {
    const Laurent p = kauffman_jones(d, {1}, jones_cap);
    if (p != Laurent{{0, 1}} && b.value < 1) b = {1, "jones"};
    if (jones) {
      int best = -1;
      std::string who;
      for (const auto& name : jones->lookup(p)) {
        const int v = u.get(name);
        if (best < 0 || v < best) best = v, who = name;
      }
      if (best > b.value) b = {best, "table " + who};
      else if (best >= 0 && best == b.value) b.reason = "table " + who;
    }
  } catch (const CrossingCapExceeded&) {
  }
  return b;
}

}  // namespace linkbound
