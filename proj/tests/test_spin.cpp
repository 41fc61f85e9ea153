#include <catch2/catch.hpp>

#include "ctc/spin.hpp"
#include "oracles.hpp"

using namespace ctc;

TEST_CASE("sector enumeration basics") {
  SECTION("N=10 symmetric sector") {
    const auto sectors = enumerate_sectors(10);
    REQUIRE(sectors.front().two_j == 10);
    REQUIRE(sectors.front().dim() == 11);
    REQUIRE(*sectors.front().multiplicity == 1);
  }
  SECTION("N=4 multiplicities") {
    const auto sectors = enumerate_sectors(4);
    REQUIRE(sectors.size() == 3);
    CHECK(sectors[0].two_j == 4);
    CHECK(*sectors[0].multiplicity == 1);
    CHECK(sectors[1].two_j == 2);
    CHECK(*sectors[1].multiplicity == 3);
    CHECK(sectors[2].two_j == 0);
    CHECK(*sectors[2].multiplicity == 2);
  }
  SECTION("N=3 ends at J=1/2 and satisfies the sum rule") {
    const auto sectors = enumerate_sectors(3);
    REQUIRE(sectors.size() == 2);
    CHECK(sectors[0].two_j == 3);
    CHECK(*sectors[0].multiplicity == 1);
    CHECK(sectors[1].two_j == 1);
    CHECK(*sectors[1].multiplicity == 2);
    CHECK(1 * 4 + 2 * 2 == 8);
  }
  SECTION("rejects bad N") {
    CHECK_THROWS_AS(enumerate_sectors(0), ValidationError);
    CHECK_THROWS_AS(enumerate_sectors(-3), ValidationError);
    CHECK_THROWS_AS(enumerate_sectors(65), ValidationError);
  }
}

TEST_CASE("sum rule over all sectors for N <= 20") {
  for (int n = 1; n <= 20; ++n) {
    std::uint64_t total = 0;
    for (const auto& s : enumerate_sectors(n))
      total += *s.multiplicity * static_cast<std::uint64_t>(s.dim());
    REQUIRE(total == (std::uint64_t{1} << n));
  }
}

TEST_CASE("multiplicities match the factorial formula up to N = 20") {
  // N!(2J+1)/((N/2+J+1)!(N/2-J)!) in 128-bit integers, no cancellation tricks.
  auto factorial = [](int k) {
    unsigned __int128 f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned>(i);
    return f;
  };
  for (int n = 1; n <= 20; ++n)
    for (const auto& s : enumerate_sectors(n)) {
      const int a = (n + s.two_j) / 2 + 1;  // N/2 + J + 1
      const int b = (n - s.two_j) / 2;      // N/2 - J
      const unsigned __int128 expect =
          factorial(n) * static_cast<unsigned>(s.two_j + 1) / (factorial(a) * factorial(b));
      REQUIRE(static_cast<unsigned __int128>(*s.multiplicity) == expect);
    }
}

TEST_CASE("sector enumeration agrees with product-basis diagonalization for N <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto counts = oracle::sector_counts_bruteforce(n);
    const auto sectors = enumerate_sectors(n);
    REQUIRE(counts.size() == sectors.size());
    for (const auto& s : sectors) {
      REQUIRE(counts.count(s.two_j) == 1);
      CHECK(counts.at(s.two_j) == *s.multiplicity);
    }
  }
}

TEST_CASE("spin operators: matrix elements and algebra") {
  SECTION("J=1/2 gives Pauli-z over two") {
    const auto ops = build_operators(1);
    CHECK(ops.sz(0, 0) == cxd(0.5, 0.0));
    CHECK(ops.sz(1, 1) == cxd(-0.5, 0.0));
  }
  SECTION("J=1 raising operator has sqrt(2) on the superdiagonal") {
    const auto ops = build_operators(2);
    CHECK(std::abs(ops.sp(0, 1) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(ops.sp(1, 2) - std::sqrt(2.0)) < 1e-15);
    CHECK(ops.sp(1, 0) == cxd(0.0, 0.0));
  }
  SECTION("ladder identities, commutator, and Casimir for 2J <= 40") {
    for (int two_j : {0, 1, 2, 3, 5, 8, 13, 21, 40}) {
      const auto ops = build_operators(two_j);
      const double j = 0.5 * two_j;
      const int d = two_j + 1;
      // S_pm = S_x pm i S_y exactly
      CHECK((ops.sp - (ops.sx + cxd(0, 1) * ops.sy)).cwiseAbs().maxCoeff() == 0.0);
      CHECK((ops.sm - (ops.sx - cxd(0, 1) * ops.sy)).cwiseAbs().maxCoeff() == 0.0);
      // S_+ is the conjugate transpose of S_-
      CHECK((ops.sp - ops.sm.adjoint()).cwiseAbs().maxCoeff() == 0.0);
      const MatrixXcd comm = ops.sx * ops.sy - ops.sy * ops.sx - cxd(0, 1) * ops.sz;
      CHECK(comm.cwiseAbs().maxCoeff() < 1e-12);
      const MatrixXcd casimir = ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz -
                                j * (j + 1.0) * MatrixXcd::Identity(d, d);
      CHECK(casimir.cwiseAbs().maxCoeff() < 1e-11);
    }
  }
  SECTION("rejects bad J") {
    CHECK_THROWS_AS(build_operators(-1), ValidationError);
    CHECK_THROWS_AS(build_operators_j(-0.5), ValidationError);
    CHECK_THROWS_AS(build_operators_j(0.7), ValidationError);
    CHECK(build_operators_j(1.5).dim() == 4);
  }
}

TEST_CASE("representative sectors for fixed-m scaling studies") {
  // 2J = 5 is not Clebsch-Gordan compatible with N = 50 but is still a valid
  // dynamical block at S = 25.
  const auto s = representative_sector(50, 5);
  CHECK(!s.compatible());
  CHECK(!s.multiplicity.has_value());
  CHECK(s.m() == Approx(0.1));
  CHECK_THROWS_AS(make_sector(50, 5), ValidationError);
  CHECK(representative_sector(100, 10).m() == Approx(0.1));
}
