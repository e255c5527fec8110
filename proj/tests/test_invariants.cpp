#include <catch_amalgamated.hpp>
#include <numeric>

#include "oracles.hpp"
#include "support.hpp"

using namespace linkbound;
using oracle::state_sum_jones;

namespace {

const IntMatrix kL10a138{{7, -1, -1}, {-1, 3, -1}, {-1, -1, 3}};

std::vector<LinkDiagram> connected_bundled() {
  std::vector<LinkDiagram> out;
  for (const auto& p : lbtest::all_pd_files()) {
    auto d = parse_pd(read_file(p));
    if (d.is_connected()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

TEST_CASE("goeritz matrix of L10a138 under the manifest shading", "[invariants]") {
  const auto& ds = lbtest::bundled();
  const auto d = lbtest::link("L10a138");
  const auto gd = manifest_goeritz(d, ds.manifest.find("L10a138"));
  CHECK(gd.g == kL10a138);
  CHECK(det_exact(gd.g) == 48);
}

TEST_CASE("goeritz matrix of the standard unlink is zero", "[invariants]") {
  for (int k = 2; k <= 5; ++k) {
    const auto u = standard_unlink(k);
    const auto g = goeritz(u, 0).g;
    CHECK(g == IntMatrix(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)));
    CHECK(nullity(u) == k - 1);
    CHECK(signature(u) == 0);
  }
}

TEST_CASE("one-kink unknot", "[invariants]") {
  const auto d = parse_pd("X 1 2 2 1\n");
  const auto g0 = goeritz(d, 0).g, g1 = goeritz(d, 1).g;
  // one shading has a single unshaded face, the other two faces meeting at the kink
  CHECK(std::min(g0.rows(), g1.rows()) == 0);
  const auto& big = g0.rows() ? g0 : g1;
  REQUIRE(big.rows() == 1);
  CHECK(abs(big(0, 0)) == 1);
  CHECK(signature(d, {1}, 0) == 0);
  CHECK(signature(d, {1}, 1) == 0);
  CHECK(determinant(d) == 1);
}

TEST_CASE("signatures", "[invariants]") {
  CHECK(signature(lbtest::link("L10a99")) == -5);
  CHECK(signature(lbtest::link("L10a138")) == -4);
  for (int k = 1; k <= 4; ++k) CHECK(signature(standard_unlink(k)) == 0);
}

TEST_CASE("determinants and nullities", "[invariants]") {
  CHECK(determinant(lbtest::link("L10n33")) == 48);
  CHECK(determinant(lbtest::link("L10a54")) == 78);
  CHECK(determinant(lbtest::link("L10a138")) == 48);
  CHECK(determinant(lbtest::hopf()) == 2);
  CHECK(nullity(lbtest::link("L10a169")) == 0);
  CHECK(nullity(lbtest::link("L10a138")) == 0);
  CHECK(nullity(lbtest::link("L10a169").change_crossing(0)) <= 1);
}

TEST_CASE("linking numbers", "[invariants]") {
  const auto d = lbtest::link("L10n96");
  CHECK(linking_number(d, {0, 2}, d.orientation()) == 3);
  CHECK(std::abs(linking_matrix(lbtest::hopf())(0, 1)) == 1);
  CHECK_THROWS_AS(linking_number(d, {}, d.orientation()), DiagramError);
  CHECK_THROWS_AS(linking_number(d, {0, 1, 2, 3}, d.orientation()), DiagramError);
  const auto lk = linking_matrix(d);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(lk(i, i) == 0);
    for (std::size_t j = 0; j < 4; ++j) CHECK(lk(i, j) == lk(j, i));
  }
}

TEST_CASE("linking number does not depend on the diagram", "[invariants]") {
  const auto a = lbtest::hopf(), b = lbtest::misc("hopf_kinked.pd");
  CHECK(linking_matrix(a)(0, 1) == linking_matrix(b)(0, 1));
  CHECK(determinant(a) == determinant(b));
  CHECK(signature(a) == signature(b));
  CHECK(kauffman_jones(a) == kauffman_jones(b));
}

TEST_CASE("jones polynomial anchors", "[invariants]") {
  CHECK(kauffman_jones(standard_unlink(1)) == Laurent{{0, 1}});
  CHECK(kauffman_jones(parse_pd("X 1 2 2 1\n")) == Laurent{{0, 1}});
  CHECK(unlink_jones(2) == Laurent{{1, -1}, {-1, -1}});
  CHECK(kauffman_jones(standard_unlink(2)) == unlink_jones(2));
  const auto h = lbtest::hopf();
  const auto v = kauffman_jones(h);
  CHECK(v != unlink_jones(2));
  CHECK(v == state_sum_jones(h));
  // lk = -1 Hopf link: -t^{-1/2} - t^{-5/2}
  REQUIRE(linking_matrix(h)(0, 1) == -1);
  CHECK(v == Laurent{{-1, -1}, {-5, -1}});
  CHECK_THROWS_AS(kauffman_jones(lbtest::link("L10a7"), 4), CrossingCapExceeded);
}

TEST_CASE("jones polynomial matches the state sum on bundled diagrams", "[invariants][property]") {
  for (const auto& d : connected_bundled()) {
    INFO(d.name());
    CHECK(kauffman_jones(d) == state_sum_jones(d));
    CHECK(kauffman_jones(d.mirror()) == state_sum_jones(d.mirror()));
  }
}

TEST_CASE("signature does not depend on shading or region labels", "[invariants][property]") {
  std::mt19937 rng(Catch::rngSeed() + 10);
  for (const auto& d : connected_bundled()) {
    INFO(d.name());
    for (const auto& o : orientation_classes(d.num_components())) {
      const int ref = signature(d, o, 0);
      for (int pick = 0; pick < 2; ++pick) {
        const Shading s = checkerboard(d, pick);
        for (int trial = 0; trial < 4; ++trial) {
          auto order = s.white_regions;
          std::shuffle(order.begin(), order.end(), rng);
          const auto gd = goeritz(d, s, o, order);
          CHECK(inertia(gd.g).signature - gd.mu == ref);
          CHECK(gd.mu == goeritz(d, s, o).mu);
        }
      }
    }
  }
}

TEST_CASE("signature is invariant under total reversal", "[invariants][property]") {
  for (const auto& d : connected_bundled())
    for (const auto& o : orientation_classes(d.num_components())) {
      Orientation r = o;
      for (auto& v : r) v = -v;
      CHECK(signature(d, o) == signature(d, r));
    }
}

TEST_CASE("determinant and nullity ignore orientation and shading", "[invariants][property]") {
  for (const auto& d : connected_bundled()) {
    INFO(d.name());
    const Integer det = determinant(d);
    const int eta = nullity(d);
    for (const auto& o : orientation_classes(d.num_components()))
      for (int pick = 0; pick < 2; ++pick) {
        const auto g = goeritz(d, checkerboard(d, pick), o).g;
        CHECK(abs(det_exact(g)) == det);
        CHECK(inertia(g).nullity == eta);
      }
  }
}

TEST_CASE("effect of one crossing change", "[invariants][property]") {
  for (const auto& d : connected_bundled()) {
    INFO(d.name());
    const auto lk = linking_matrix(d);
    const int s = signature(d), eta = nullity(d);
    for (int c = 0; c < d.num_crossings(); ++c) {
      const auto e = d.change_crossing(c);
      const auto lk2 = linking_matrix(e);
      int changed = 0;
      for (std::size_t i = 0; i < lk.rows(); ++i)
        for (std::size_t j = i + 1; j < lk.cols(); ++j) {
          const int delta = lk2(i, j) - lk(i, j);
          CHECK(std::abs(delta) <= 1);
          changed += delta != 0;
        }
      CHECK(changed == (d.under_component(c) != d.over_component(c) ? 1 : 0));
      CHECK(std::abs(signature(e) - s) <= 2);
      CHECK(std::abs(nullity(e) - eta) <= 1);
    }
  }
}

TEST_CASE("crossing type conformance table", "[invariants]") {
  // (crossing sign, incidence) -> type II
  const std::map<std::pair<int, int>, bool> golden{
      {{1, 1}, true}, {{1, -1}, false}, {{-1, 1}, false}, {{-1, -1}, true}};
  for (const auto& d : connected_bundled())
    for (const auto& o : orientation_classes(d.num_components())) {
      Orientation r = o;
      for (auto& v : r) v = -v;
      for (const auto& orient : {o, r})
        for (int pick = 0; pick < 2; ++pick) {
          const Shading s = checkerboard(d, pick);
          for (int c = 0; c < d.num_crossings(); ++c) {
            const int io = incidence(d, s, c);
            CHECK(io == (s.white[static_cast<std::size_t>(d.face_of_corner(c, 0))] ? 1 : -1));
            CHECK(is_type_two(d, s, c, orient) == golden.at({d.crossing_sign(c, orient), io}));
          }
        }
    }
}

TEST_CASE("goeritz rows sum to zero", "[invariants][property]") {
  for (const auto& d : connected_bundled())
    for (int pick = 0; pick < 2; ++pick) {
      const auto gd = goeritz(d, pick);
      CHECK(gd.g.is_symmetric());
      for (std::size_t i = 0; i < gd.g_prime.rows(); ++i) {
        Integer row = 0, col = 0;
        for (std::size_t j = 0; j < gd.g_prime.cols(); ++j) row += gd.g_prime(i, j), col += gd.g_prime(j, i);
        CHECK(row == 0);
        CHECK(col == 0);
      }
    }
}

TEST_CASE("invariant bundle", "[invariants]") {
  const auto inv = compute_invariants(lbtest::link("L10a138"));
  CHECK(inv.k == 3);
  CHECK(inv.sigma == -4);
  CHECK(inv.eta == 0);
  CHECK(inv.det == 48);
  CHECK(inv.lk.rows() == 3);
  CHECK(orientation_classes(3).size() == 4);
  for (const auto& o : orientation_classes(3)) CHECK(o[0] == 1);
}
