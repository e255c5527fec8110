#pragma once

// Bundled example dataset: manifest, per-link evaluation and the table.
//
// Layout of a dataset directory:
//   manifest.json        optional; frozen orientations, shading picks, extra
//                        diagrams, tangles and expected rows
//   links/*.pd           one PD file per link (or *.pd at the top level when
//                        there is no links/ directory)
//   knots/unknotting.txt knot table, `knot value` per line
//   knots/jones.txt      Jones polynomials for recognising components

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "linkbound/bounds.hpp"
#include "linkbound/covering.hpp"
#include "linkbound/diagram.hpp"
#include "linkbound/invariants.hpp"
#include "linkbound/knot_table.hpp"
#include "linkbound/report_json.hpp"
#include "linkbound/search.hpp"

namespace linkbound {

namespace fs = std::filesystem;

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw DatasetError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Orders digit runs by value: L10a7 < L10a54 < L10a138.
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
      x.erase(0, std::min(x.find_first_not_of('0'), x.size()));
      y.erase(0, std::min(y.find_first_not_of('0'), y.size()));
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = i2, j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i, ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

struct ExpectedRow {
  int lower = 0;
  std::optional<int> upper;
  std::string method = "-";
  std::string status;
};

struct ManifestEntry {
  std::string name;
  std::string file;
  std::optional<Orientation> orientation;
  int pick = 0;
  /// Permutation of the unshaded faces, as indices into the default order.
  std::optional<std::vector<int>> region_order;
  std::optional<IntMatrix> goeritz;
  std::vector<std::string> definite_diagrams;
  std::optional<std::string> tangle;
  std::optional<ExpectedRow> expected;
  std::string note;
};

struct Manifest {
  std::string knot_table = "knots/unknotting.txt";
  std::string knot_jones = "knots/jones.txt";
  std::vector<ManifestEntry> entries;

  const ManifestEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

inline Manifest parse_manifest(const std::string& text) {
  Manifest m;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DatasetError(std::string("manifest: ") + e.what());
  }
  try {
    m.knot_table = j.value("knot_table", m.knot_table);
    m.knot_jones = j.value("knot_jones", m.knot_jones);
    for (const auto& x : j.value("links", nlohmann::json::array())) {
      ManifestEntry e;
      x.at("name").get_to(e.name);
      e.file = x.value("file", "links/" + e.name + ".pd");
      if (x.contains("orientation")) e.orientation = x.at("orientation").get<Orientation>();
      e.pick = x.value("pick", 0);
      if (x.contains("region_order")) e.region_order = x.at("region_order").get<std::vector<int>>();
      if (x.contains("goeritz")) e.goeritz = matrix_from_json(x.at("goeritz"));
      e.definite_diagrams = x.value("definite_diagrams", std::vector<std::string>{});
      if (x.contains("tangle")) e.tangle = x.at("tangle").get<std::string>();
      if (x.contains("expected")) {
        const auto& y = x.at("expected");
        ExpectedRow r;
        y.at("lower").get_to(r.lower);
        if (y.contains("upper") && !y.at("upper").is_null()) r.upper = y.at("upper").get<int>();
        r.method = y.value("method", std::string("-"));
        r.status = y.value("status", std::string());
        e.expected = r;
      }
      e.note = x.value("note", std::string());
      m.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DatasetError(std::string("manifest: ") + e.what());
  }
  return m;
}

struct Dataset {
  fs::path root;
  Manifest manifest;
  KnotUnknottingTable knots;
  KnotJonesTable jones;
  /// Link name -> PD file, in natural name order.
  std::vector<std::pair<std::string, fs::path>> files;
  /// Manifest entries whose file is missing.
  std::vector<std::string> missing;
};

inline Dataset load_dataset(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DatasetError("not a directory: " + dir.string());
  Dataset ds;
  ds.root = dir;
  if (fs::exists(dir / "manifest.json")) ds.manifest = parse_manifest(read_file(dir / "manifest.json"));
  if (fs::exists(dir / ds.manifest.knot_table)) ds.knots = KnotUnknottingTable::parse(read_file(dir / ds.manifest.knot_table));
  if (fs::exists(dir / ds.manifest.knot_jones)) ds.jones = KnotJonesTable::parse(read_file(dir / ds.manifest.knot_jones));
  std::map<std::string, fs::path> found;
  const fs::path links = fs::is_directory(dir / "links") ? dir / "links" : dir;
  for (const auto& f : fs::directory_iterator(links))
    if (f.is_regular_file() && f.path().extension() == ".pd") found[f.path().stem().string()] = f.path();
  for (const auto& e : ds.manifest.entries) {
    if (fs::exists(dir / e.file))
      found[e.name] = dir / e.file;
    else
      ds.missing.push_back(e.name + ": " + e.file);
  }
  for (auto& kv : found) ds.files.emplace_back(kv.first, kv.second);
  std::sort(ds.files.begin(), ds.files.end(), [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
  return ds;
}

/// Diagram with the manifest orientation applied.
inline LinkDiagram load_link(const Dataset& ds, const std::string& name, const fs::path& file) {
  LinkDiagram d = parse_pd(read_file(file));
  if (const auto* e = ds.manifest.find(name); e && e->orientation) d = d.with_orientation(*e->orientation);
  return d;
}

/// Goeritz data under the manifest's shading pick and region order.
inline GoeritzData manifest_goeritz(const LinkDiagram& d, const ManifestEntry* e) {
  const Shading s = checkerboard(d, e ? e->pick : 0);
  std::optional<std::vector<int>> order;
  if (e && e->region_order) {
    std::vector<int> faces;
    for (int i : *e->region_order) {
      if (i < 0 || static_cast<std::size_t>(i) >= s.white_regions.size()) throw DatasetError("region order out of range");
      faces.push_back(s.white_regions[static_cast<std::size_t>(i)]);
    }
    order = faces;
  }
  return goeritz(d, s, d.orientation(), order);
}

struct EvalOptions {
  bool search = true;
  SearchOptions search_options;
  int lattice_max = 12;
};

/// Full report for one dataset link: every lower bound (plus the covering
/// method when a tangle is listed) and the crossing-change search.
inline BoundReport evaluate_link(const Dataset& ds, const std::string& name, const fs::path& file,
                                 const EvalOptions& opt = {}) {
  const LinkDiagram d = load_link(ds, name, file);
  BoundContext ctx;
  ctx.knots = &ds.knots;
  ctx.jones = &ds.jones;
  ctx.jones_cap = opt.search_options.filter.jones_cap;
  ctx.lattice_max = opt.lattice_max;
  std::vector<MethodResult> extra;
  if (const auto* e = ds.manifest.find(name)) {
    for (const auto& f : e->definite_diagrams) ctx.definite_diagrams.push_back(parse_pd(read_file(ds.root / f)));
    if (e->tangle) extra.push_back(covering_method(covering_obstruction(parse_tangle(read_file(ds.root / *e->tangle)), ctx)));
  }
  BoundReport rep = combine(d, ctx, std::move(extra));
  rep.name = name;
  if (opt.search) {
    if (auto r = upper_bound_search(d, opt.search_options))
      set_upper(rep, r->changes, r->witness, to_string(r->verdict.tier));
  }
  return rep;
}

struct TableRow {
  std::string name;
  std::optional<BoundReport> report;
  std::string error;
  /// Differences from the manifest's expected row.
  std::vector<std::string> mismatches;
  bool has_expected = false;
};

inline std::vector<std::string> compare_expected(const BoundReport& r, const ExpectedRow& x) {
  std::vector<std::string> out;
  if (r.best_lower != x.lower)
    out.push_back("lower " + std::to_string(r.best_lower) + " != " + std::to_string(x.lower));
  if (x.upper && r.upper != x.upper)
    out.push_back("upper " + (r.upper ? std::to_string(*r.upper) : std::string("none")) + " != " +
                  std::to_string(*x.upper));
  if (r.method != x.method) out.push_back("method " + r.method + " != " + x.method);
  if (!x.status.empty() && r.status != x.status) out.push_back("status " + r.status + " != " + x.status);
  return out;
}

/// Evaluates every link on `workers` threads; rows come back in name order.
inline std::vector<TableRow> build_table(const Dataset& ds, const EvalOptions& opt = {}, unsigned workers = 0) {
  std::vector<TableRow> rows(ds.files.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, rows.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < rows.size();) {
      const auto& [name, file] = ds.files[i];
      TableRow& row = rows[i];
      row.name = name;
      try {
        row.report = evaluate_link(ds, name, file, opt);
        if (const auto* e = ds.manifest.find(name); e && e->expected) {
          row.has_expected = true;
          row.mismatches = compare_expected(*row.report, *e->expected);
        }
      } catch (const std::exception& ex) {
        row.error = ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::string format_range(const BoundReport& r) {
  if (r.upper && *r.upper == r.best_lower) return std::to_string(r.best_lower);
  return "[" + std::to_string(r.best_lower) + "," + (r.upper ? std::to_string(*r.upper) : std::string("?")) + "]";
}

inline nlohmann::json row_json(const TableRow& row) {
  nlohmann::json j{{"name", row.name}};
  if (!row.report) {
    j["error"] = row.error;
    return j;
  }
  const auto& r = *row.report;
  j["lower"] = r.best_lower;
  j["upper"] = r.upper ? nlohmann::json(*r.upper) : nlohmann::json(nullptr);
  j["status"] = r.status;
  j["method"] = r.method;
  j["u"] = format_range(r);
  if (row.has_expected) j["golden"] = row.mismatches.empty() ? "match" : "mismatch";
  if (!row.mismatches.empty()) j["mismatches"] = row.mismatches;
  return j;
}

}  // namespace linkbound
