#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcenter/fdalgebra.hpp"

namespace blockcenter::pres {

/// Product of generators (indices, repetition allowed); empty means 1.
using Monomial = std::vector<std::size_t>;
/// Sum of monomials over GF(2).
using Polynomial = std::vector<Monomial>;

enum class PresentationId { CaseI_II, CaseIII };

/// Commutative GF(2)-algebra given by generators and relations, together
/// with a monomial basis of the quotient.
struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Polynomial> relations;
  std::vector<Monomial> basis;
  /// Generators searched freely, in this order; the rest are defined.
  std::vector<std::size_t> search_order;
  /// definitions[g]: polynomial in earlier searched generators fixing g.
  std::vector<std::optional<Polynomial>> definitions;
  /// Pairs (a, b) of interchangeable searched generators: image(a) < image(b).
  std::vector<std::pair<std::size_t, std::size_t>> chains;

  std::size_t dim() const { return basis.size(); }
};

const Presentation& presentation(PresentationId id);
std::optional<PresentationId> parse_presentation_id(const std::string& s);
std::string presentation_name(PresentationId id);

struct Witness {
  std::vector<fd::Vec> images;  // one per generator
};

/// Checks every relation and that the basis monomials form a basis.
bool verify_witness(const fd::FinDimAlgebra& a, const Presentation& pres, const Witness& w);

/// Lexicographically least witness in search order, or nullopt (no match).
/// Throws WrongDimension when dim(a) differs from the presentation's, and
/// InvalidArgument unless a is a commutative GF(2)-algebra of dimension <= 12.
std::optional<Witness> match_presentation(const fd::FinDimAlgebra& a, const Presentation& pres);

std::string format_witness(const fd::FinDimAlgebra& a, const Presentation& pres, const Witness& w);

/// GF(2)[x, y, z1..z4] / (x^2, y^2, x z_i, y z_i, z_i z_j) on monomials.
fd::FinDimAlgebra case12_local_model();
/// CASE_I_II on the basis {1, X, Y, XY, Z1..Z4}.
fd::FinDimAlgebra case12_model();
/// CASE_III on the basis {1, X, Z1..Z6}.
fd::FinDimAlgebra case3_model();

/// The basis-generator assignment of a model built from its own basis.
Witness identity_witness(const fd::FinDimAlgebra& model, const Presentation& pres);

/// Isomorphism invariants of a commutative local algebra.
struct LocalInvariants {
  std::vector<std::size_t> radical_dims;  // dim J^n for n = 0, 1, ... until 0
  std::vector<std::size_t> loewy;         // layer dimensions
  std::size_t loewy_length = 0;
  std::size_t socle_dim = 0;
  std::size_t square_zero_count = 0;  // #{w in J : w^2 = 0}

  friend bool operator==(const LocalInvariants&, const LocalInvariants&) = default;
};

LocalInvariants local_invariants(const fd::FinDimAlgebra& a);

}  // namespace blockcenter::pres
