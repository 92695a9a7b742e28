#pragma once

#include <optional>
#include <vector>

#include "blockcenter/matrix.hpp"

namespace blockcenter::linalg {

/// u * a * v == d with u, v unimodular and d in Smith normal form.
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Nonzero invariant factors d1 | d2 | ... of `a`.
std::vector<Int> elementary_divisors(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Rows form a lattice basis of {x integral : a * x^T = 0}, in Hermite normal
/// form. The result has cols(a) - rank(a) rows (possibly zero).
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`:
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Throws SingularMatrix when det(a) == 0.
RatMatrix rat_inverse(const RatMatrix& a);
inline RatMatrix rat_inverse(const IntMatrix& a) { return rat_inverse(to_rat(a)); }

Rat determinant(const RatMatrix& a);
Int determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

/// Exact symmetric definiteness tests.
bool is_positive_definite(const IntMatrix& a);
bool is_positive_semidefinite(const IntMatrix& a);

/// Solves basis^T * x = target for x when `basis` rows are a lattice basis,
/// i.e. expresses `target` as a combination of the rows. nullopt when the
/// combination is not integral or does not exist.
std::optional<std::vector<Int>> lattice_coordinates(const IntMatrix& basis,
                                                    const std::vector<Int>& target);

/// True when the row lattices coincide.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// Unimodular matrix whose first row is the primitive vector `x`.
IntMatrix complete_to_unimodular(const std::vector<Int>& x);

/// Gcd of all entries (0 for the zero matrix).
Int content(std::span<const Int> v);

}  // namespace blockcenter::linalg
