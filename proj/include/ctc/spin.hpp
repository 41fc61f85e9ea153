// spin.hpp — spin-J symmetry sectors of N spins-1/2 and collective spin
// operators within one irreducible block.
//
// Half-integer quantum numbers are stored as the integer 2J, so sector
// bookkeeping never touches floating point. Basis ordering inside a block is
// m_J = J, J-1, ..., -J (highest-weight state first).

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ctc/common.hpp"

namespace ctc {

// One spin-J block of the Clebsch-Gordan decomposition of (C^2)^{⊗N}.
// `multiplicity` is the number n_J of identical copies; it is only defined
// when (N, 2J) is a compatible pair (N - 2J even). Representative blocks with
// incompatible (N, 2J) are allowed for fixed-m scaling studies and carry no
// multiplicity.
struct SpinSector {
  int n_particles = 0;                       // N
  int two_j = 0;                             // 2J
  std::optional<std::uint64_t> multiplicity; // n_J

  double j() const { return 0.5 * two_j; }
  int dim() const { return two_j + 1; }
  double m() const { return static_cast<double>(two_j) / n_particles; }  // J / S
  bool compatible() const {
    return two_j >= 0 && two_j <= n_particles && (n_particles - two_j) % 2 == 0;
  }

  std::string label() const {
    return "N=" + std::to_string(n_particles) + ",2J=" + std::to_string(two_j);
  }
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw ValidationError("sector multiplicity overflows 64-bit range");
  return a + b;
}

// Row N of Pascal's triangle, exact in uint64 (fits for N <= 64, well beyond
// the supported range below).
inline std::vector<std::uint64_t> binomial_row(int n) {
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i)
    for (int k = i - 1; k >= 1; --k) row[k] = checked_add(row[k], row[k - 1]);
  return row;
}

}  // namespace detail

inline constexpr int kMaxParticles = 64;

// Multiplicity n_J = C(N, N/2 - J) - C(N, N/2 - J - 1), evaluated without
// factorials. Equivalent to N!(2J+1)/((N/2+J+1)!(N/2-J)!).
inline std::uint64_t sector_multiplicity(int n_particles, int two_j) {
  if (n_particles < 1 || n_particles > kMaxParticles)
    throw ValidationError("sector_multiplicity: N must be in [1, " +
                          std::to_string(kMaxParticles) + "]");
  if (two_j < 0 || two_j > n_particles || (n_particles - two_j) % 2 != 0)
    throw ValidationError("sector_multiplicity: (N, 2J) = (" +
                          std::to_string(n_particles) + ", " + std::to_string(two_j) +
                          ") is not a valid sector");
  const auto row = detail::binomial_row(n_particles);
  const int k = (n_particles - two_j) / 2;
  const std::uint64_t c0 = row[static_cast<std::size_t>(k)];
  const std::uint64_t c1 = k >= 1 ? row[static_cast<std::size_t>(k) - 1] : 0;
  return c0 - c1;
}

// Constructs one sector, validating (N, 2J) compatibility.
inline SpinSector make_sector(int n_particles, int two_j) {
  SpinSector s{n_particles, two_j, sector_multiplicity(n_particles, two_j)};
  return s;
}

// Representative block for a fixed rescaled magnetization m = 2J/N; (N, 2J)
// need not be Clebsch-Gordan compatible (multiplicity left unset if not).
inline SpinSector representative_sector(int n_particles, int two_j) {
  if (n_particles < 1) throw ValidationError("representative_sector: N must be >= 1");
  if (two_j < 0 || two_j > n_particles)
    throw ValidationError("representative_sector: need 0 <= 2J <= N");
  SpinSector s{n_particles, two_j, std::nullopt};
  if (s.compatible() && n_particles <= kMaxParticles)
    s.multiplicity = sector_multiplicity(n_particles, two_j);
  return s;
}

// All sectors of N spins-1/2, ordered by descending J: J = N/2, N/2-1, ...,
// down to 0 (even N) or 1/2 (odd N).
inline std::vector<SpinSector> enumerate_sectors(int n_particles) {
  if (n_particles < 1 || n_particles > kMaxParticles)
    throw ValidationError("enumerate_sectors: N must be in [1, " +
                          std::to_string(kMaxParticles) + "]");
  std::vector<SpinSector> sectors;
  for (int two_j = n_particles; two_j >= 0; two_j -= 2)
    sectors.push_back(make_sector(n_particles, two_j));
  return sectors;
}

// Collective spin operators in the |J, m_J> basis of one block, m_J
// descending from J to -J.
struct SpinOperatorSet {
  int two_j = 0;
  MatrixXcd sx, sy, sz, sp, sm;

  int dim() const { return two_j + 1; }
};

inline SpinOperatorSet build_operators(int two_j) {
  if (two_j < 0) throw ValidationError("build_operators: 2J must be >= 0");
  const int d = two_j + 1;
  SpinOperatorSet ops;
  ops.two_j = two_j;
  ops.sp = MatrixXcd::Zero(d, d);
  ops.sz = MatrixXcd::Zero(d, d);

  // m_i = J - i; <J,m+1|S_+|J,m> = sqrt(J(J+1) - m(m+1)). The argument is
  // assembled from integers so the matrix elements are as exact as sqrt.
  for (int i = 0; i < d; ++i) {
    const int two_m = two_j - 2 * i;
    ops.sz(i, i) = 0.5 * two_m;
    if (i > 0) {
      const double arg = 0.25 * (static_cast<double>(two_j) * (two_j + 2) -
                                 static_cast<double>(two_m) * (two_m + 2));
      ops.sp(i - 1, i) = std::sqrt(arg);
    }
  }
  ops.sm = ops.sp.adjoint();
  ops.sx = 0.5 * (ops.sp + ops.sm);
  ops.sy = cxd(0.0, -0.5) * (ops.sp - ops.sm);
  return ops;
}

// Convenience overload accepting J as a double; rejects anything that is not
// a non-negative half-integer.
inline SpinOperatorSet build_operators_j(double j) {
  const double two_j = 2.0 * j;
  const double rounded = std::round(two_j);
  if (j < 0.0 || std::abs(two_j - rounded) > 1e-12)
    throw ValidationError("build_operators: J must be a non-negative half-integer");
  return build_operators(static_cast<int>(rounded));
}

}  // namespace ctc
