#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "blockcenter/gfp.hpp"

namespace blockcenter::fd {

using gf::Elem;
using gf::Subspace;
using gf::Vec;

/// Unital associative algebra over GF(p) given by structure constants
/// e_i * e_j = sum_m c_ij^m e_m.
class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  /// `sc` is indexed as (i * dim + j) * dim + m. Throws InvalidArgument if p
  /// is not prime, the sizes disagree, or e_unit is not a two-sided unit.
  FinDimAlgebra(Elem p, std::size_t dim, std::vector<std::string> labels, std::vector<Elem> sc,
                std::size_t unit_index);

  /// Builds the table from a product rule on basis indices.
  static FinDimAlgebra from_products(Elem p, std::vector<std::string> labels, std::size_t unit_index,
                                     const std::function<Vec(std::size_t, std::size_t)>& product);

  Elem p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t unit_index() const noexcept { return unit_; }
  Elem sc(std::size_t i, std::size_t j, std::size_t m) const { return sc_[(i * dim_ + j) * dim_ + m]; }
  gf::Field field() const noexcept { return {p_}; }

  Vec basis_vector(std::size_t i) const;
  Vec unit() const { return basis_vector(unit_); }
  Vec zero() const { return Vec(dim_, 0); }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, unsigned long n) const;

  bool is_associative() const;
  bool is_commutative() const;

 private:
  Elem p_ = 2;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Elem> sc_;
  std::size_t unit_ = 0;
};

struct LinearForm {
  Vec coeffs;
  Elem eval(const Vec& v, Elem p) const;
};

enum class Side { Left, Right, TwoSided };

/// J(A) for an algebra presented as {unit} + basis of a nilpotent ideal.
/// Verifies that the span of the non-unit basis elements is an ideal and is
/// nilpotent; throws NotPresentedLocal otherwise.
Subspace radical(const FinDimAlgebra& a);

/// Nilradical of a commutative algebra, as the kernel of a -> a^(p^m) with
/// p^m >= dim. Throws InvalidArgument for non-commutative input.
Subspace commutative_radical(const FinDimAlgebra& a);

/// span{u * w : u in U, w in W}.
Subspace product_space(const FinDimAlgebra& a, const Subspace& u, const Subspace& w);

/// J^0 = A, J^1 = j, ..., ending with the zero subspace.
std::vector<Subspace> radical_series(const FinDimAlgebra& a, const Subspace& j);
std::vector<Subspace> radical_series(const FinDimAlgebra& a);
std::vector<std::size_t> series_dims(const std::vector<Subspace>& series);
/// Dimensions of the layers J^n / J^(n+1).
std::vector<std::size_t> loewy_vector(const std::vector<Subspace>& series);

/// Side::Left gives {v : v U = 0}, Side::Right {v : U v = 0}.
Subspace annihilator(const FinDimAlgebra& a, const Subspace& u, Side side);

/// Left: {v : v J = 0}; Right: {v : J v = 0}; TwoSided: both.
Subspace socle(const FinDimAlgebra& a, Side side);
Subspace socle(const FinDimAlgebra& a, Side side, const Subspace& j);

Subspace center(const FinDimAlgebra& a);
Subspace commutator_space(const FinDimAlgebra& a);

/// T_n(A) = {a : a^(2^n) in [A,A]}; characteristic 2 only.
Subspace kulshammer_T(const FinDimAlgebra& a, unsigned n);

bool is_symmetric_form(const FinDimAlgebra& a, const LinearForm& s);
bool is_nondegenerate_form(const FinDimAlgebra& a, const LinearForm& s);

struct SymmetrizingSearch {
  std::optional<LinearForm> form;
  bool exhaustive = true;  // false: random sampling, a miss is low confidence
};

/// Exhaustive over the annihilator of [A,A] up to 2^16 candidates, otherwise
/// 1000 random samples drawn with `seed`.
SymmetrizingSearch search_symmetrizing_form(const FinDimAlgebra& a, std::uint64_t seed = 0x5eed);
/// Throws NotSymmetric; the message says whether the search was exhaustive.
LinearForm find_symmetrizing_form(const FinDimAlgebra& a, std::uint64_t seed = 0x5eed);

/// U^perp = {a : s(a U) = 0}. Throws FormNotSymmetrizing.
Subspace perp_space(const FinDimAlgebra& a, const LinearForm& s, const Subspace& u);

/// Re-expresses the algebra in the basis given by the rows of `basis`.
FinDimAlgebra change_basis(const FinDimAlgebra& a, const std::vector<Vec>& basis,
                           std::vector<std::string> labels, std::size_t unit_index);

/// Commutative local algebra rewritten on {1} + a basis of its radical.
FinDimAlgebra present_local(const FinDimAlgebra& a);

/// Commutative monomial quotient GF(p)[vars] / (monomials). Each relation is
/// an exponent vector; the standard monomials must be finite in number.
FinDimAlgebra monomial_algebra(Elem p, const std::vector<std::string>& vars,
                               const std::vector<std::vector<unsigned>>& relations);

/// Group algebra GF(p)G on the basis {1} + {g - 1 : g != 1}; `table[g][h]` is
/// the index of gh and element 0 is the identity.
FinDimAlgebra group_algebra(Elem p, const std::vector<std::vector<std::size_t>>& table);

/// The subalgebra of n x n matrices over GF(p) generated by the identity and
/// `generators`, on a basis starting with the identity.
FinDimAlgebra generated_matrix_algebra(Elem p, const std::vector<std::vector<Vec>>& generators);

FinDimAlgebra read_algebra(std::istream& in, const std::string& source = "<algebra>");
FinDimAlgebra load_algebra(const std::string& path);
std::string format_algebra(const FinDimAlgebra& a);

/// Human-readable element: "W1 + W5".
std::string format_element(const FinDimAlgebra& a, const Vec& v);

}  // namespace blockcenter::fd

namespace blockcenter::fd {

/// Radical of a local algebra: the presented-local check first, then, for a
/// commutative algebra, its nilradical if that has codimension 1. Throws
/// NotPresentedLocal otherwise.
Subspace local_radical(const FinDimAlgebra& a);

}  // namespace blockcenter::fd
