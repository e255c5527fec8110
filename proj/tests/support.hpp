#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "linkbound/dataset.hpp"

namespace lbtest {

namespace fs = std::filesystem;

inline fs::path data_dir() { return fs::path(LINKBOUND_DATA_DIR); }
inline fs::path test_data_dir() { return data_dir().parent_path() / "tests" / "data"; }

inline const linkbound::Dataset& bundled() {
  static const linkbound::Dataset ds = linkbound::load_dataset(data_dir());
  return ds;
}

/// Bundled link with its manifest orientation.
inline linkbound::LinkDiagram link(const std::string& name) {
  return linkbound::load_link(bundled(), name, data_dir() / "links" / (name + ".pd"));
}

inline linkbound::LinkDiagram misc(const std::string& file) {
  return linkbound::parse_pd(linkbound::read_file(data_dir() / "misc" / file));
}

inline linkbound::LinkDiagram hopf() { return misc("L2a1.pd"); }

/// Every PD file shipped with the library data.
inline std::vector<fs::path> all_pd_files() {
  std::vector<fs::path> out;
  for (const char* sub : {"links", "misc", "definite"})
    for (const auto& f : fs::directory_iterator(data_dir() / sub))
      if (f.path().extension() == ".pd") out.push_back(f.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lbtest
