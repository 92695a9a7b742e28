#pragma once

#include <optional>
#include <vector>

#include "blockcenter/fdalgebra.hpp"
#include "blockcenter/matrix.hpp"

namespace blockcenter::center {

/// Integral matrices A with Q^-1 A Q diagonal, recorded through their
/// diagonals. Column j of `basis_diagonals` is the diagonal of Q^-1 beta_j Q;
/// column 0 is the all-ones diagonal (beta_0 = identity).
struct CenterLattice {
  RatMatrix q;
  IntMatrix basis_diagonals;
  std::vector<IntMatrix> basis_matrices;

  std::size_t rank() const { return basis_matrices.size(); }
};

struct ModularCenter {
  gf::Elem p = 2;
  std::size_t dim = 0;
  std::vector<gf::Elem> structure_constants;  // (i * dim + j) * dim + m
  std::size_t unit_index = 0;

  fd::FinDimAlgebra algebra() const;
};

/// Coefficients of (Q^-1 A Q)_rs = 0 for r != s in the unknowns a_ij (column
/// i*k + j), one row per (r, s), each row scaled to a primitive integer vector.
IntMatrix center_equations(const RatMatrix& q);

/// Saturated lattice basis. Throws NonIntegralDiagonal when some lattice
/// element has a non-integral diagonal, UnitNotInLattice when the identity
/// is not primitive in it.
CenterLattice center_basis(const RatMatrix& q);

/// Lattice from an explicit diagonal table (columns = basis diagonals),
/// rebased so the all-ones diagonal comes first.
CenterLattice lattice_from_diagonals(const RatMatrix& q, const IntMatrix& diagonals);

/// Structure constants of Z / pZ. Throws UnitNotInLattice or NotIntegral if
/// products of basis diagonals leave the lattice.
ModularCenter reduce_mod_p(const CenterLattice& lat, gf::Elem p);

/// Integral T with `to` = `from` * T (columns as basis vectors), if any.
std::optional<IntMatrix> diagonal_transition(const IntMatrix& from, const IntMatrix& to);

/// True when both tables span the same lattice: the transition matrices in
/// both directions exist and are unimodular.
bool same_diagonal_lattice(const IntMatrix& a, const IntMatrix& b);

/// Every A = Q diag(d) Q^-1 for the given diagonal d, or nullopt if not integral.
std::optional<IntMatrix> conjugate_back(const RatMatrix& q, const std::vector<Int>& diagonal);

}  // namespace blockcenter::center
