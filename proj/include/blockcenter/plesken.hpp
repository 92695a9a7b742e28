#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcenter/matrix.hpp"

namespace blockcenter::plesken {

using IntVector = std::vector<Int>;

/// A possible row r of a solution X of X^T X = C, with its contribution
/// r C^-1 r^T. `contribution_num` is that contribution times the scale of C
/// (its largest elementary divisor), which is always an integer.
struct RowCandidate {
  IntVector r;
  Rat contribution;
  Int contribution_num;
};

struct GramSolutionClass {
  IntMatrix canonical;
  std::vector<Int> eldiv;
  std::vector<Rat> contributions;  // row contributions, ascending
  std::string label;
};

struct GramAutGroup {
  std::vector<IntMatrix> elements;  // S with S^T C S = C, sorted
  std::size_t order() const noexcept { return elements.size(); }
};

/// Largest elementary divisor of a nonsingular Gram matrix; scale * C^-1 is integral.
Int gram_scale(const IntMatrix& c);

/// All r with r C^-1 r^T <= 1, one per sign pair (first nonzero entry
/// positive), in lexicographic order. With `parity_required` only rows whose
/// scaled contribution is odd are kept (and the zero row is dropped).
std::vector<RowCandidate> enumerate_rows(const IntMatrix& c, bool parity_required);

GramAutGroup gram_automorphisms(const IntMatrix& c);

/// First nonzero entry positive.
IntVector sign_normalized(IntVector r);

/// Canonical representative of X under signed row permutations and right
/// multiplication by Aut(C): the lexicographically least row-major matrix
/// among those with sign-normalized rows.
IntMatrix canonicalize(const IntMatrix& x, const GramAutGroup& aut);

/// Every X in Z^{k x l} with X^T X = C (and matching row contributions if
/// given), up to signed row permutations, as matrices with sign-normalized
/// rows sorted ascending. No Aut(C) reduction.
std::vector<IntMatrix> enumerate_row_multisets(const IntMatrix& c, std::size_t k,
                                               const std::optional<std::vector<Rat>>& row_constraints);

/// Orbit classes of solutions of X^T X = C with k rows, sorted by
/// (eldiv, canonical). Throws NoSolution if the contribution multiset is
/// infeasible (wrong size or total different from cols(C)).
std::vector<GramSolutionClass> enumerate_solutions(
    const IntMatrix& c, std::size_t k, const std::optional<std::vector<Rat>>& row_constraints);

/// The unique class of `rows` x l solutions whose rows all contribute
/// l / scale (scale = largest elementary divisor of C). Rows default to the
/// scale, which makes the contributions sum to l.
GramSolutionClass enumerate_ordinary(const IntMatrix& c, std::size_t rows = 0);

/// Groups rows into classes under coordinate permutation and global sign,
/// returning one representative per class (entries sorted descending, sign
/// chosen to maximize lexicographically), sorted.
std::vector<IntVector> permutation_sign_classes(const std::vector<IntVector>& rows);
IntVector permutation_sign_representative(const IntVector& r);

/// Row contributions r C^-1 r^T for each row of X.
std::vector<Rat> row_contributions(const IntMatrix& x, const IntMatrix& c);

}  // namespace blockcenter::plesken
