#pragma once

// JSON encoding of reports (nlohmann::json, vendored as json.hpp).

#include <string>
#include <vector>

#include "json.hpp"
#include "linkbound/bounds.hpp"
#include "linkbound/invariants.hpp"

namespace linkbound {

inline constexpr int kReportSchemaVersion = 1;

inline void to_json(nlohmann::json& j, const MethodResult& m) {
  j = nlohmann::json{{"method", m.method},
                     {"value", m.value},
                     {"applicable", m.applicable},
                     {"secondary", m.secondary},
                     {"certificate", m.certificate}};
}

inline void from_json(const nlohmann::json& j, MethodResult& m) {
  j.at("method").get_to(m.method);
  j.at("value").get_to(m.value);
  m.applicable = j.value("applicable", true);
  m.secondary = j.value("secondary", false);
  m.certificate = j.value("certificate", std::vector<std::string>{});
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{{"schema", kReportSchemaVersion},
                     {"name", r.name},
                     {"components", r.components},
                     {"methods", r.methods},
                     {"best_lower", r.best_lower},
                     {"method", r.method},
                     {"upper", r.upper ? nlohmann::json(*r.upper) : nlohmann::json(nullptr)},
                     {"witness", r.witness},
                     {"upper_verdict", r.upper_verdict},
                     {"status", r.status}};
}

inline void from_json(const nlohmann::json& j, BoundReport& r) {
  j.at("name").get_to(r.name);
  j.at("components").get_to(r.components);
  j.at("methods").get_to(r.methods);
  j.at("best_lower").get_to(r.best_lower);
  j.at("method").get_to(r.method);
  if (j.contains("upper") && !j.at("upper").is_null())
    r.upper = j.at("upper").get<int>();
  else
    r.upper.reset();
  r.witness = j.value("witness", std::vector<int>{});
  r.upper_verdict = j.value("upper_verdict", std::string());
  j.at("status").get_to(r.status);
}

/// Integer matrix as nested arrays; entries must fit in 64 bits.
inline nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t n = j.size(), m = n ? j.at(0).size() : 0;
  IntMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (j.at(i).size() != m) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < m; ++k) out(i, k) = Integer(j.at(i).at(k).get<long long>());
  }
  return out;
}

inline nlohmann::json invariants_json(const LinkDiagram& d, const LinkInvariants& inv) {
  nlohmann::json j{{"name", d.name()},
                   {"components", inv.k},
                   {"crossings", d.num_crossings()},
                   {"det", inv.det.str()},
                   {"nullity", inv.eta},
                   {"signature", inv.sigma}};
  nlohmann::json lk = nlohmann::json::array();
  for (std::size_t i = 0; i < inv.lk.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < inv.lk.cols(); ++k) row.push_back(inv.lk(i, k));
    lk.push_back(std::move(row));
  }
  j["lk"] = std::move(lk);
  return j;
}

}  // namespace linkbound
