// linkbound: invariants, unlinking-number bounds and the example table.
//
// Exit codes: 0 success, 1 golden mismatch, 2 input error.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkbound/bounds.hpp"
#include "linkbound/covering.hpp"
#include "linkbound/dataset.hpp"
#include "linkbound/embeddings.hpp"
#include "linkbound/invariants.hpp"
#include "linkbound/report_json.hpp"
#include "linkbound/search.hpp"

using namespace linkbound;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kMismatch = 1, kInputError = 2;

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& c : line)
      if (c == '[' || c == ']' || c == ',' || c == ';') c = ' ';
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad matrix entry '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ParseError(0, "matrix rows differ in length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent = "  ") {
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w = std::max(w, m(i, j).str().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << std::setw(static_cast<int>(w)) << m(i, j).str();
    os << " ]\n";
  }
}

Orientation parse_orientation(const std::string& s, int k) {
  Orientation o;
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    if (tok == "+1" || tok == "1" || tok == "+")
      o.push_back(1);
    else if (tok == "-1" || tok == "-")
      o.push_back(-1);
    else
      throw ParseError(0, "bad orientation entry '" + tok + "'");
  }
  if (static_cast<int>(o.size()) != k) throw ParseError(0, "orientation needs " + std::to_string(k) + " entries");
  return o;
}

/// Knot tables and dataset extras shared by several commands.
struct Context {
  std::string dataset;
  std::string knots_file;
  std::string jones_file;
  KnotUnknottingTable knots;
  KnotJonesTable jones;

  void load() {
    namespace fs = std::filesystem;
    std::string kf = knots_file, jf = jones_file;
    if (!dataset.empty()) {
      if (kf.empty() && fs::exists(fs::path(dataset) / "knots/unknotting.txt")) kf = (fs::path(dataset) / "knots/unknotting.txt").string();
      if (jf.empty() && fs::exists(fs::path(dataset) / "knots/jones.txt")) jf = (fs::path(dataset) / "knots/jones.txt").string();
    }
    if (!kf.empty()) knots = KnotUnknottingTable::parse(read_file(kf));
    if (!jf.empty()) jones = KnotJonesTable::parse(read_file(jf));
  }
};

int cmd_invariants(const std::string& file, int pick, const std::string& orient, bool as_json) {
  LinkDiagram d = parse_pd(read_file(file));
  if (!orient.empty()) d = d.with_orientation(parse_orientation(orient, d.num_components()));
  const int k = d.num_components();
  if (!d.is_connected()) {
    std::cerr << "notice: diagram is split; Goeritz invariants need a connected diagram\n";
    if (as_json) {
      std::cout << json{{"name", d.name()}, {"components", k}, {"connected", false}}.dump(2) << '\n';
    } else {
      std::cout << "name " << d.name() << "\ncomponents " << k << "\nconnected no\n";
    }
    return kOk;
  }
  const auto gd = goeritz(d, checkerboard(d, pick), d.orientation());
  const auto inv = compute_invariants(d);
  const auto sn = snf(gd.g);
  std::vector<std::pair<Orientation, int>> sigs;
  for (const auto& o : orientation_classes(k)) sigs.emplace_back(o, signature(d, o, pick));
  if (as_json) {
    json j = invariants_json(d, inv);
    j["goeritz"] = matrix_json(gd.g);
    j["pick"] = pick;
    j["mu"] = gd.mu;
    json f = json::array();
    for (const auto& x : sn.invariant_factors) f.push_back(x.str());
    j["snf"] = f;
    json s = json::array();
    for (const auto& [o, v] : sigs) s.push_back(json{{"orientation", o}, {"signature", v}});
    j["signatures"] = s;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "name " << d.name() << "\ncomponents " << k << "\ncrossings " << d.num_crossings() << "\ndet "
            << inv.det << "\nnullity " << inv.eta << "\nsignature " << inv.sigma << "\n";
  for (const auto& [o, v] : sigs) std::cout << "signature" << detail::orientation_text(o) << " " << v << "\n";
  std::cout << "lk\n";
  for (std::size_t i = 0; i < inv.lk.rows(); ++i) {
    std::cout << "  [";
    for (std::size_t j = 0; j < inv.lk.cols(); ++j) std::cout << ' ' << std::setw(2) << inv.lk(i, j);
    std::cout << " ]\n";
  }
  std::cout << "goeritz (pick " << pick << ", mu " << gd.mu << ")\n";
  print_matrix(std::cout, gd.g);
  std::cout << "snf";
  for (const auto& x : sn.invariant_factors) std::cout << ' ' << x;
  std::cout << '\n';
  return kOk;
}

void print_report(const BoundReport& r) {
  std::cout << "name " << r.name << "\ncomponents " << r.components << "\n";
  for (const auto& m : r.methods) {
    std::cout << "  " << std::left << std::setw(12) << m.method << std::right
              << (m.applicable ? std::to_string(m.value) : std::string("n/a")) << (m.secondary ? " (secondary)" : "")
              << '\n';
    for (const auto& c : m.certificate) std::cout << "      " << c << '\n';
  }
  std::cout << "lower " << r.best_lower << " via " << r.method << '\n';
  if (r.upper) {
    std::cout << "upper " << *r.upper << " (" << r.upper_verdict << ") changing crossings {";
    for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << (i ? " " : "") << r.witness[i];
    std::cout << "}\n";
  }
  std::cout << "u " << format_range(r) << "\nstatus " << r.status << '\n';
}

int cmd_bounds(Context& ctx, const std::string& file, const std::string& orient, const std::vector<std::string>& definite,
               const std::string& tangle, bool search, const SearchOptions& sopt, bool as_json) {
  ctx.load();
  LinkDiagram d = parse_pd(read_file(file));
  if (!orient.empty()) d = d.with_orientation(parse_orientation(orient, d.num_components()));
  BoundContext bc;
  bc.knots = &ctx.knots;
  bc.jones = &ctx.jones;
  bc.jones_cap = sopt.filter.jones_cap;
  for (const auto& f : definite) bc.definite_diagrams.push_back(parse_pd(read_file(f)));
  std::vector<MethodResult> extra;
  if (!tangle.empty()) extra.push_back(covering_method(covering_obstruction(parse_tangle(read_file(tangle)), bc)));
  BoundReport r = combine(d, bc, std::move(extra));
  if (search)
    if (auto s = upper_bound_search(d, sopt)) set_upper(r, s->changes, s->witness, to_string(s->verdict.tier));
  if (as_json)
    std::cout << json(r).dump(2) << '\n';
  else
    print_report(r);
  return kOk;
}

int cmd_table(const std::string& dir, unsigned workers, bool search, const SearchOptions& sopt, bool as_json) {
  const Dataset ds = load_dataset(dir);
  EvalOptions opt;
  opt.search = search;
  opt.search_options = sopt;
  const auto rows = build_table(ds, opt, workers);
  bool mismatch = false, errors = !ds.missing.empty();
  for (const auto& m : ds.missing) std::cerr << "missing: " << m << '\n';
  if (!as_json) std::cout << std::left << std::setw(10) << "link" << std::setw(8) << "u(L)" << std::setw(12) << "method" << "status\n";
  for (const auto& row : rows) {
    if (!row.report) {
      errors = true;
      std::cerr << "error: " << row.name << ": " << row.error << '\n';
      if (as_json) std::cout << row_json(row).dump() << '\n';
      continue;
    }
    if (!row.mismatches.empty()) mismatch = true;
    if (as_json) {
      std::cout << row_json(row).dump() << '\n';
    } else {
      std::cout << std::left << std::setw(10) << row.name << std::setw(8) << format_range(*row.report) << std::setw(12)
                << row.report->method << row.report->status;
      if (!row.mismatches.empty()) {
        std::cout << "  MISMATCH:";
        for (const auto& m : row.mismatches) std::cout << ' ' << m << ';';
      }
      std::cout << '\n';
    }
  }
  if (mismatch) return kMismatch;
  return errors ? kInputError : kOk;
}

int cmd_embed(const std::string& file, int l, int q, bool as_json) {
  const IntMatrix g = parse_matrix(read_file(file));
  const auto sols = orthogonal_embeddings(g, l);
  if (as_json) {
    json out = json::array();
    for (const auto& s : sols) {
      json j{{"a", matrix_json(s.canonical_form)}};
      if (q > 0) j["systems"] = norm2_complement_systems(s.canonical_form, q).size();
      out.push_back(j);
    }
    std::cout << json{{"l", l}, {"solutions", out}}.dump(2) << '\n';
    return kOk;
  }
  std::cout << sols.size() << " solution" << (sols.size() == 1 ? "" : "s") << " with l = " << l << '\n';
  for (std::size_t i = 0; i < sols.size(); ++i) {
    std::cout << "\n#" << i + 1 << '\n';
    print_matrix(std::cout, sols[i].canonical_form);
    if (q > 0) {
      const auto sys = norm2_complement_systems(sols[i].canonical_form, q);
      std::cout << "  norm-2 systems of size " << q << ": " << sys.size() << '\n';
    }
  }
  return kOk;
}

int cmd_cover(Context& ctx, const std::string& file, bool obstruction, bool as_json) {
  const AnnularTangle t = parse_tangle(read_file(file));
  const LinkDiagram cover = double_cover(t);
  const auto lk = linking_matrix(cover);
  json j{{"name", t.name}, {"width", t.width()}, {"winding", winding_number(t)}, {"components", cover.num_components()},
         {"pd", cover.to_pd()}};
  if (cover.num_components() == 2) j["lk"] = lk(0, 1);
  std::optional<CoveringResult> res;
  if (obstruction) {
    ctx.load();
    BoundContext bc;
    bc.knots = &ctx.knots;
    bc.jones = &ctx.jones;
    res = covering_obstruction(t, bc);
    j["cover_lower"] = res->cover_bounds.best_lower;
    j["cover_method"] = res->cover_bounds.method;
    j["obstructed"] = res->obstructed;
  }
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << cover.to_pd();
  std::cout << "# components " << cover.num_components();
  if (cover.num_components() == 2) std::cout << ", lk " << lk(0, 1);
  std::cout << '\n';
  if (res)
    std::cout << "# cover lower bound " << res->cover_bounds.best_lower << " via " << res->cover_bounds.method
              << (res->obstructed ? "; one crossing change in B cannot unlink" : "; no obstruction") << '\n';
  return kOk;
}

int cmd_search(const std::string& file, const SearchOptions& sopt, bool as_json) {
  const LinkDiagram d = parse_pd(read_file(file));
  const auto r = upper_bound_search(d, sopt);
  if (as_json) {
    json j{{"name", d.name()}};
    if (r) {
      j["changes"] = r->changes;
      j["witness"] = r->witness;
      j["verdict"] = to_string(r->verdict.tier);
      j["evidence"] = r->verdict.evidence;
    } else {
      j["changes"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (!r) {
    std::cout << "no unlinking set with at most " << sopt.max_changes << " changes\n";
    return kOk;
  }
  std::cout << "changes " << r->changes << "\nwitness {";
  for (std::size_t i = 0; i < r->witness.size(); ++i) std::cout << (i ? " " : "") << r->witness[i];
  std::cout << "}\nverdict " << to_string(r->verdict.tier) << '\n';
  for (const auto& e : r->verdict.evidence) std::cout << "  " << e << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link invariants and unlinking-number bounds from PD codes"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  SearchOptions sopt;
  auto add_search_flags = [&](CLI::App* c) {
    c->add_option("--max-changes", sopt.max_changes, "largest crossing-change set tried")->capture_default_str();
    c->add_flag("--certify-only", sopt.certify_only, "accept only certified unlinks");
    c->add_option("--jones-cap", sopt.filter.jones_cap, "crossing cap for the Jones polynomial")->capture_default_str();
  };
  Context ctx;
  auto add_table_flags = [&](CLI::App* c) {
    c->add_option("--dataset", ctx.dataset, "dataset directory holding knots/");
    c->add_option("--knots", ctx.knots_file, "knot unknotting table");
    c->add_option("--knot-jones", ctx.jones_file, "Jones polynomials of tabulated knots");
  };

  std::string file, orient, tangle, dir;
  int pick = 0, l = 0, q = 0;
  unsigned workers = 0;
  bool no_search = false, obstruction = false;
  std::vector<std::string> definite;

  auto* inv = app.add_subcommand("invariants", "k, det, nullity, signatures, lk, Goeritz matrix and SNF");
  inv->add_option("file", file, "PD file")->required();
  inv->add_option("--pick", pick, "shading pick (0 or 1)")->check(CLI::Range(0, 1));
  inv->add_option("--orient", orient, "orientation, e.g. +1,-1");

  auto* bnd = app.add_subcommand("bounds", "every lower bound, the upper-bound search and the status");
  bnd->add_option("file", file, "PD file")->required();
  bnd->add_option("--orient", orient, "orientation, e.g. +1,-1");
  bnd->add_option("--definite", definite, "further diagrams of the same link for the lattice method");
  bnd->add_option("--tangle", tangle, "annular presentation for the covering method");
  bnd->add_flag("--no-search", no_search, "skip the upper-bound search");
  add_search_flags(bnd);
  add_table_flags(bnd);

  auto* tab = app.add_subcommand("table", "one row per dataset link, checked against the manifest");
  tab->add_option("dir", dir, "dataset directory")->required();
  tab->add_option("--workers", workers, "worker threads (0: hardware concurrency)");
  tab->add_flag("--no-search", no_search, "skip the upper-bound search");
  add_search_flags(tab);

  auto* emb = app.add_subcommand("embed", "factorisations G = A^T A with A of size l x m");
  emb->add_option("file", file, "matrix file, one row per line")->required();
  emb->add_option("-l,--l", l, "row count of A")->required();
  emb->add_option("-q,--systems", q, "also count norm-2 systems of this size in (Col A)^perp");

  auto* cov = app.add_subcommand("cover", "PD code of the double cover of an annular tangle");
  cov->add_option("file", file, "tangle file")->required();
  cov->add_flag("--obstruction", obstruction, "bound the cover and test the single-change obstruction");
  add_table_flags(cov);

  auto* sea = app.add_subcommand("search", "smallest crossing-change set that unlinks the diagram");
  sea->add_option("file", file, "PD file")->required();
  add_search_flags(sea);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*inv) return cmd_invariants(file, pick, orient, as_json);
    if (*bnd) return cmd_bounds(ctx, file, orient, definite, tangle, !no_search, sopt, as_json);
    if (*tab) return cmd_table(dir, workers, !no_search, sopt, as_json);
    if (*emb) return cmd_embed(file, l, q, as_json);
    if (*cov) return cmd_cover(ctx, file, obstruction, as_json);
    if (*sea) return cmd_search(file, sopt, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
