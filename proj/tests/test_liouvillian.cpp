#include <catch2/catch.hpp>

#include "ctc/liouvillian.hpp"
#include "oracles.hpp"

using namespace ctc;

TEST_CASE("single-spin pure decay block has the textbook spectrum") {
  // N=1, Omega=0: decay at rate kappa/S = 2*kappa. Populations relax at the
  // full rate, coherences at half of it.
  const auto block = build_block(make_sector(1, 1), ModelParams{0.0, 1.0});
  const auto result = spectrum(block);
  const std::vector<cxd> expected{{0, 0}, {-2, 0}, {-1, 0}, {-1, 0}};
  CHECK(oracle::multiset_match_distance(expected, oracle::to_vector(result.eigenvalues)) <
        1e-12);
}

TEST_CASE("trace covector, stationarity, and dissipativity per block") {
  for (int n : {2, 3, 6, 10}) {
    for (const auto& sector : enumerate_sectors(n)) {
      const auto block = build_block(sector, ModelParams{0.9, 1.0});
      CHECK(trace_covector_residual(block) < 1e-10);
      const auto result = spectrum(block);
      CHECK(result.n_stationary >= 1);
      CHECK(result.max_re <= 1e-9);
    }
  }
}

TEST_CASE("dense and sparse assemblies are entry-identical") {
  const auto block = build_block(make_sector(6, 4), ModelParams{0.7, 1.3});
  const Eigen::SparseMatrix<cxd> sparse = block.sparse();
  const MatrixXcd roundtrip = MatrixXcd(sparse);
  REQUIRE((roundtrip - block.superop).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("memory cap rejects oversized blocks") {
  CHECK_THROWS_AS(build_block(make_sector(40, 40), ModelParams{0.9, 1.0}, 100),
                  ValidationError);
  CHECK_THROWS_AS(spectrum(build_block(make_sector(10, 10), ModelParams{0.9, 1.0}), 16),
                  ValidationError);
}

TEST_CASE("real-basis and complex eigensolvers agree") {
  const auto block = build_block(make_sector(8, 4), ModelParams{0.9, 1.0});
  const auto fast = spectrum(block, 4096, false);
  const auto slow = spectrum(block, 4096, true);
  CHECK(oracle::multiset_match_distance(oracle::to_vector(slow.eigenvalues),
                                        oracle::to_vector(fast.eigenvalues)) < 1e-8);
}

TEST_CASE("pure decay spectrum is real and non-positive") {
  // Degenerate real clusters split into spurious conjugate pairs at the
  // eigensolver's defective-matrix accuracy (~1e-7); genuine oscillation
  // frequencies are orders of magnitude larger.
  for (int n : {5, 6}) {
    for (const auto& sector : enumerate_sectors(n)) {
      const auto result = spectrum(build_block(sector, ModelParams{0.0, 1.0}));
      for (long i = 0; i < result.eigenvalues.size(); ++i) {
        CHECK(std::abs(result.eigenvalues(i).imag()) < 5e-6);
        CHECK(result.eigenvalues(i).real() <= 1e-9);
      }
      if (result.lambda1) CHECK(std::abs(result.lambda1->imag()) < 5e-6);
    }
  }
}

TEST_CASE("block spectra match the projected product-basis Liouvillian") {
  // Strong-symmetry oracle: compress the full 2^N Liouvillian onto operators
  // supported on one spin-J eigenspace; its spectrum must be n_J^2 copies of
  // the block spectrum.
  const ModelParams params{0.9, 1.0};
  for (int n : {3, 4, 5}) {
    const auto full = oracle::product_basis_liouvillian(n, params);
    const auto ops = oracle::product_basis_operators(n);
    for (const auto& sector : enumerate_sectors(n)) {
      const MatrixXcd basis = oracle::sector_eigenbasis(ops, sector.two_j);
      const MatrixXcd compressed = oracle::projected_liouvillian(full, basis);
      const VectorXcd actual = hermiticity_preserving_eigenvalues(compressed);

      const auto block_spec = spectrum(build_block(sector, params));
      std::vector<cxd> expected;
      const auto copies = *sector.multiplicity * *sector.multiplicity;
      for (std::uint64_t c = 0; c < copies; ++c)
        for (long i = 0; i < block_spec.eigenvalues.size(); ++i)
          expected.push_back(block_spec.eigenvalues(i));
      REQUIRE(expected.size() == static_cast<std::size_t>(actual.size()));
      CHECK(oracle::multiset_match_distance(expected, oracle::to_vector(actual)) < 1e-7);
    }
  }
}

TEST_CASE("projected product-basis oracle at N=6", "[.][slow]") {
  const ModelParams params{0.9, 1.0};
  const int n = 6;
  const auto full = oracle::product_basis_liouvillian(n, params);
  const auto ops = oracle::product_basis_operators(n);
  for (const auto& sector : enumerate_sectors(n)) {
    const MatrixXcd basis = oracle::sector_eigenbasis(ops, sector.two_j);
    const MatrixXcd compressed = oracle::projected_liouvillian(full, basis);
    const VectorXcd actual = hermiticity_preserving_eigenvalues(compressed);
    const auto block_spec = spectrum(build_block(sector, params));
    std::vector<cxd> expected;
    const auto copies = *sector.multiplicity * *sector.multiplicity;
    for (std::uint64_t c = 0; c < copies; ++c)
      for (long i = 0; i < block_spec.eigenvalues.size(); ++i)
        expected.push_back(block_spec.eigenvalues(i));
    REQUIRE(expected.size() == static_cast<std::size_t>(actual.size()));
    CHECK(oracle::multiset_match_distance(expected, oracle::to_vector(actual)) < 1e-6);
  }
}

TEST_CASE("dominant eigenvalue selection across sectors") {
  SECTION("above the symmetric transition every sector oscillates") {
    // All m <= 1 < Omega/kappa, so every non-scalar block carries an
    // oscillatory branch; the per-block gap shrinks with J (small-J blocks
    // are subradiant), so the slowest oscillatory mode sits at minimal J and
    // its frequency approaches Omega.
    const auto space = dominant_over_space(10, ModelParams{1.5, 1.0});
    for (const auto& res : space.per_sector) {
      if (res.sector.two_j == 0) continue;
      REQUIRE(res.lambda1.has_value());
      CHECK(std::abs(res.lambda1->imag()) > 0.5);
      const double m = res.sector.m();
      CHECK(std::abs(res.lambda1->imag()) ==
            Approx(std::sqrt(1.5 * 1.5 - m * m)).epsilon(0.05));
    }
    CHECK(space.dominant().sector.two_j == 2);
    for (std::size_t i = 1; i + 1 < space.per_sector.size(); ++i)
      CHECK(space.per_sector[i].gap() <= space.per_sector[i - 1].gap());
  }
  SECTION("below it an asymmetric sector hosts the dominant oscillatory mode") {
    const auto space = dominant_over_space(10, ModelParams{0.9, 1.0});
    CHECK(space.dominant().sector.two_j < 10);
    CHECK(space.dominant().sector.m() < 0.9);
    CHECK(std::abs(space.dominant().lambda1->imag()) > 0.0);
  }
  SECTION("N=2 has two sectors and a scalar J=0 block") {
    const auto space = dominant_over_space(2, ModelParams{0.9, 1.0});
    REQUIRE(space.per_sector.size() == 2);
    const auto& scalar = space.per_sector.back();
    REQUIRE(scalar.eigenvalues.size() == 1);
    CHECK(std::abs(scalar.eigenvalues(0)) < 1e-12);
    CHECK(!scalar.lambda1.has_value());
  }
}

TEST_CASE("exact evolution matches a matrix-exponential oracle") {
  const auto sector = make_sector(4, 2);  // J=1 block, dim 3
  const auto block = build_block(sector, ModelParams{0.9, 1.0});
  MatrixXcd rho0 = MatrixXcd::Zero(3, 3);
  rho0(0, 0) = 0.6;
  rho0(1, 1) = 0.4;
  rho0(0, 1) = rho0(1, 0) = 0.2;

  const auto grid = uniform_grid(0.0, 5.0, 26);
  EvolveOptions opts;
  opts.keep_states = true;
  const auto traj = evolve_exact(block, rho0, grid, opts);
  REQUIRE(traj.states.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); i += 5) {
    const MatrixXcd expected = oracle::expm_propagate(block.superop, rho0, grid[i]);
    CHECK((traj.states[i] - expected).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("exact evolution conserves trace and Hermiticity") {
  const auto sector = make_sector(10, 10);
  const auto block = build_block(sector, ModelParams{0.9, 1.0});
  const auto grid = uniform_grid(0.0, 30.0, 301);
  const auto traj = evolve_exact(block, highest_weight_density(sector.dim()), grid);
  CHECK(traj.max_trace_drift < 1e-8);
  CHECK(traj.max_herm_drift < 1e-8);
}

TEST_CASE("pure collective decay from the highest-weight state is monotone in mz") {
  const auto sector = make_sector(8, 8);
  const auto block = build_block(sector, ModelParams{0.0, 1.0});
  const auto grid = uniform_grid(0.0, 10.0, 101);
  const auto traj = evolve_exact(block, highest_weight_density(sector.dim()), grid);
  for (long i = 1; i < traj.mz.size(); ++i) CHECK(traj.mz(i) <= traj.mz(i - 1) + 1e-9);
  CHECK(traj.mz(0) == Approx(1.0));
}

TEST_CASE("evolve_exact validates the initial state") {
  const auto block = build_block(make_sector(2, 2), ModelParams{0.9, 1.0});
  const auto grid = uniform_grid(0.0, 1.0, 11);
  MatrixXcd bad_dim = MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(evolve_exact(block, bad_dim, grid), ValidationError);
  MatrixXcd bad_trace = 2.0 * highest_weight_density(3);
  CHECK_THROWS_AS(evolve_exact(block, bad_trace, grid), ValidationError);
  MatrixXcd not_hermitian = highest_weight_density(3);
  not_hermitian(0, 1) = cxd(0.3, 0.1);
  CHECK_THROWS_AS(evolve_exact(block, not_hermitian, grid), ValidationError);
  MatrixXcd not_psd = MatrixXcd::Zero(3, 3);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(evolve_exact(block, not_psd, grid), ValidationError);
}

TEST_CASE("dissipator rate uses S = N/2, not J") {
  // Same J block, different N: the N=100 block must decay slower per unit
  // kappa because kappa/S shrinks.
  const auto grid = uniform_grid(0.0, 3.0, 31);
  const auto fast = evolve_exact(build_block(representative_sector(10, 2), {0.0, 1.0}),
                                 highest_weight_density(3), grid);
  const auto slow = evolve_exact(build_block(representative_sector(100, 2), {0.0, 1.0}),
                                 highest_weight_density(3), grid);
  CHECK(fast.mz(30) < slow.mz(30));
}
