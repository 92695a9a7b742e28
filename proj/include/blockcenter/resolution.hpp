#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcenter/fdalgebra.hpp"

namespace blockcenter::res {

inline constexpr std::size_t kDefaultSteps = 16;
inline constexpr std::size_t kMaxModuleDim = 2'000'000;

/// Right submodule of the free module A^m, stored as a row span of
/// GF(p)^(m * dim A); block c of a vector is its c-th coordinate in A.
struct ModuleOverLocal {
  std::size_t free_rank = 0;
  gf::Subspace span;
};

struct ResolutionTrace {
  std::vector<std::size_t> n;            // n_0, n_1, ...
  std::vector<std::size_t> kernel_dims;  // dim K_0, dim K_1, ...
  bool terminated = false;               // some K_i = 0
  bool aborted = false;                  // memory guard hit

  /// f_0, f_1, ... with f_-1 = f_0 = 1, as many terms as n.
  std::vector<unsigned long long> fib() const;
};

/// Right action of an algebra element on a vector of A^m.
gf::Vec act_right(const fd::FinDimAlgebra& a, const gf::Vec& v, const gf::Vec& x);

/// M J for a right submodule M.
gf::Subspace times_radical(const fd::FinDimAlgebra& a, const ModuleOverLocal& m, const gf::Subspace& j);

/// Minimal projective resolution of the simple module A/J, computing
/// n_0 .. n_steps. Verifies exactness and minimality at every step.
ResolutionTrace minimal_resolution_dims(const fd::FinDimAlgebra& a, std::size_t steps = kDefaultSteps);

struct Certificate {
  bool pass = false;
  std::optional<std::size_t> first_violation;
  bool terminated = false;
  std::string describe() const;
};

/// n_i >= f_i for every computed i. A growth certificate at desk scale, not a
/// proof of infinite complexity.
Certificate fibonacci_certificate(const ResolutionTrace& trace);

struct HypothesisResult {
  bool pass = false;
  std::vector<std::string> failures;
};

/// x, z in J independent modulo J^2 with xz = zx = z^2 = 0; with y given,
/// x, y, z independent modulo J^2 with xz = zx = yz = zy = 0.
/// Throws NotInRadical.
HypothesisResult hypothesis_check(const fd::FinDimAlgebra& a, const gf::Vec& x, const gf::Vec& z,
                                  const std::optional<gf::Vec>& y = std::nullopt);

}  // namespace blockcenter::res
