#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace linkbound;

TEST_CASE("natural name order", "[dataset]") {
  CHECK(natural_less("L10a7", "L10a54"));
  CHECK(natural_less("L10a54", "L10a138"));
  CHECK(natural_less("L10a169", "L10n32"));
  CHECK(natural_less("L2a1", "L10a7"));
  CHECK_FALSE(natural_less("L10a7", "L10a7"));
  CHECK(natural_less("a", "ab"));
  CHECK(natural_less("x007", "x8"));
}

TEST_CASE("bundled dataset", "[dataset]") {
  const auto& ds = lbtest::bundled();
  std::vector<std::string> names;
  for (const auto& [name, file] : ds.files) names.push_back(name);
  CHECK(names == std::vector<std::string>{"L10a7", "L10a54", "L10a99", "L10a138", "L10a169", "L10n32", "L10n33",
                                          "L10n34", "L10n96"});
  CHECK(ds.missing.empty());
  CHECK(ds.knots.size() > 0);
  CHECK(ds.jones.size() > 0);
  const auto* e = ds.manifest.find("L10a138");
  REQUIRE(e);
  CHECK(e->pick == 0);
  REQUIRE(e->goeritz);
  CHECK(manifest_goeritz(lbtest::link("L10a138"), e).g == *e->goeritz);
  CHECK(ds.manifest.find("nothing") == nullptr);
}

TEST_CASE("manifest errors", "[dataset]") {
  CHECK_THROWS_AS(parse_manifest("{"), DatasetError);
  CHECK_THROWS_AS(parse_manifest(R"({"links": [{"file": "x.pd"}]})"), DatasetError);
  const auto m = parse_manifest(R"({"links": [{"name": "A", "region_order": [7]}]})");
  CHECK(m.entries.at(0).file == "links/A.pd");
  CHECK_THROWS_AS(manifest_goeritz(lbtest::hopf(), &m.entries[0]), DatasetError);
  CHECK_THROWS_AS(load_dataset(lbtest::data_dir() / "no-such-dir"), DatasetError);
}

TEST_CASE("report JSON round trip", "[dataset]") {
  const auto& ds = lbtest::bundled();
  const auto& [name, file] = ds.files.front();
  const auto rep = evaluate_link(ds, name, file);
  const nlohmann::json j = rep;
  CHECK(j.at("schema") == kReportSchemaVersion);
  const auto back = j.get<BoundReport>();
  CHECK(back == rep);
  const nlohmann::json again = back;
  CHECK(again.dump() == j.dump());
  CHECK(nlohmann::json::parse(j.dump()) == j);

  BoundReport open;
  open.name = "x";
  const nlohmann::json k = open;
  CHECK(k.at("upper").is_null());
  CHECK_FALSE(k.get<BoundReport>().upper);

  const IntMatrix g{{7, -1, -1}, {-1, 3, -1}, {-1, -1, 3}};
  CHECK(matrix_from_json(matrix_json(g)) == g);
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse("[[1, 2], [3]]")));
}

TEST_CASE("table is deterministic across worker counts", "[dataset]") {
  const auto& ds = lbtest::bundled();
  const auto one = build_table(ds, {}, 1), many = build_table(ds, {}, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    INFO(one[i].name);
    CHECK(one[i].name == many[i].name);
    CHECK(row_json(one[i]) == row_json(many[i]));
    CHECK(one[i].error.empty());
    CHECK(one[i].has_expected);
    CHECK(one[i].mismatches.empty());
    REQUIRE(one[i].report);
    CHECK(one[i].report->upper);
    CHECK(*one[i].report->upper >= one[i].report->best_lower);
  }
}

TEST_CASE("empty and corrupt datasets", "[dataset]") {
  const auto empty = load_dataset(lbtest::test_data_dir() / "empty");
  CHECK(empty.files.empty());
  CHECK(build_table(empty).empty());

  const auto corrupt = load_dataset(lbtest::test_data_dir() / "corrupt");
  const auto rows = build_table(corrupt, {}, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].name == "L2a1");
  REQUIRE(rows[0].report);
  CHECK(format_range(*rows[0].report) == "1");
  CHECK(rows[1].name == "bad");
  CHECK_FALSE(rows[1].report);
  CHECK_THAT(rows[1].error, Catch::Matchers::ContainsSubstring("four edge labels"));
  CHECK(row_json(rows[1]).contains("error"));
}
