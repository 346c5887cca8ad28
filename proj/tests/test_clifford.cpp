#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/clifford.hpp"

using namespace weitz;

namespace {
DominantWeight w(const std::string& s, int n) { return parse_weight(s, n); }
}

TEST_CASE("block shapes and completeness for the natural module of so(5)") {
  RepRealization rep = natural_rep(5);
  CliffordSystem sys = clifford_blocks(rep);
  REQUIRE(sys.blocks.size() == 3);
  CHECK(sys.blocks[0].maps[0].rows() == 14);
  CHECK(sys.blocks[1].maps[0].rows() == 10);
  CHECK(sys.blocks[2].maps[0].rows() == 1);
  for (const CliffordBlock& b : sys.blocks) CHECK(b.maps[0].cols() == 5);
}

TEST_CASE("exceptional pair splits through the tensor Pfaffian") {
  RepRealization rep = natural_rep(4);
  CliffordSystem sys = clifford_blocks(rep);
  REQUIRE(sys.blocks.size() == 4);
  CHECK(sys.blocks[1].lambda == w("1,1", 4));
  CHECK(sys.blocks[2].lambda == w("1,-1", 4));
  CHECK(sys.blocks[1].maps[0].rows() == 3);
  CHECK(sys.blocks[2].maps[0].rows() == 3);
}

TEST_CASE("full identity sweep passes on small modules") {
  for (int n : {3, 4, 5}) {
    IdentityReport r = verify_identities(natural_rep(n), 3);
    for (const auto& item : r.items) {
      INFO("natural n=", n, " check ", item.name, " ", item.detail);
      CHECK(item.pass);
    }
  }
  {
    IdentityReport r = verify_identities(spinor_rep(3), 4);
    for (const auto& item : r.items) {
      INFO("spinor n=3 check ", item.name);
      CHECK(item.pass);
    }
  }
  {
    auto [plus, minus] = half_spin_reps(4);
    for (const RepRealization* rep : {&plus, &minus}) {
      IdentityReport r = verify_identities(*rep, 3);
      for (const auto& item : r.items) {
        INFO("half-spin n=4 check ", item.name);
        CHECK(item.pass);
      }
    }
  }
}

TEST_CASE("identity sweep passes on a Gram-carrying spectral block") {
  RepRealization rep = build_rep(w("2", 4));
  REQUIRE_FALSE(rep.unitary);
  IdentityReport r = verify_identities(rep, 3);
  for (const auto& item : r.items) {
    INFO("block (2,0) n=4 check ", item.name, " ", item.detail);
    CHECK(item.pass);
  }
}

TEST_CASE("trivial module reduces every identity to scalars") {
  RepRealization rep = build_rep(w("0", 3));
  CHECK(rep.dim == 1);
  IdentityReport r = verify_identities(rep, 4);
  for (const auto& item : r.items) CHECK(item.pass);
}
