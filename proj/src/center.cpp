#include "blockcenter/center.hpp"

#include "blockcenter/errors.hpp"
#include "blockcenter/exact_linalg.hpp"

namespace blockcenter::center {

namespace {

std::vector<Int> column_of(const IntMatrix& m, std::size_t j) {
  std::vector<Int> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

/// Rebases the lattice spanned by the rows of `rows` so that all-ones is the
/// first basis vector; returns the new basis as rows.
IntMatrix rebase_with_unit(const IntMatrix& rows) {
  const IntMatrix h = linalg::hermite_normal_form(rows);
  const std::vector<Int> ones(h.cols(), Int(1));
  auto x = linalg::lattice_coordinates(h, ones);
  if (!x) throw Error(ErrorKind::UnitNotInLattice, "identity is not an integral element of the lattice");
  if (linalg::content(*x) != 1) throw Error(ErrorKind::UnitNotInLattice, "identity is not primitive in the lattice");
  return linalg::complete_to_unimodular(*x) * h;
}

CenterLattice build(const RatMatrix& q, const IntMatrix& diagonal_rows) {
  const IntMatrix basis = rebase_with_unit(diagonal_rows);
  CenterLattice lat;
  lat.q = q;
  lat.basis_diagonals = basis.transpose();
  for (std::size_t j = 0; j < basis.rows(); ++j) {
    auto beta = conjugate_back(q, basis.row_vector(j));
    if (!beta) throw Error(ErrorKind::NotIntegral, "basis diagonal does not come from an integral matrix");
    lat.basis_matrices.push_back(std::move(*beta));
  }
  return lat;
}

}  // namespace

fd::FinDimAlgebra ModularCenter::algebra() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  return fd::FinDimAlgebra(p, dim, labels, structure_constants, unit_index);
}

IntMatrix center_equations(const RatMatrix& q) {
  if (q.rows() != q.cols()) throw Error(ErrorKind::DimensionMismatch, "Q must be square");
  const std::size_t k = q.rows();
  const RatMatrix qinv = linalg::rat_inverse(q);
  IntMatrix eq(k * k - k, k * k);
  std::size_t row = 0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s) {
      if (r == s) continue;
      std::vector<Rat> coeff(k * k);
      Int denom = 1;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          coeff[i * k + j] = qinv(r, i) * q(j, s);
          mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), coeff[i * k + j].get_den_mpz_t());
        }
      std::vector<Int> ints(k * k);
      for (std::size_t c = 0; c < k * k; ++c) {
        Rat scaled = coeff[c] * Rat(denom);
        ints[c] = scaled.get_num();
      }
      const Int g = linalg::content(ints);
      for (std::size_t c = 0; c < k * k; ++c) eq(row, c) = g == 0 ? Int(0) : Int(ints[c] / g);
      ++row;
    }
  return eq;
}

CenterLattice center_basis(const RatMatrix& q) {
  const std::size_t k = q.rows();
  const IntMatrix eq = center_equations(q);
  const IntMatrix kernel = linalg::integer_kernel_basis(eq);
  const RatMatrix qinv = linalg::rat_inverse(q);
  IntMatrix diags(kernel.rows(), k);
  for (std::size_t b = 0; b < kernel.rows(); ++b) {
    RatMatrix a(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = Rat(kernel(b, i * k + j));
    const RatMatrix d = qinv * a * q;
    for (std::size_t i = 0; i < k; ++i) {
      if (d(i, i).get_den() != 1)
        throw Error(ErrorKind::NonIntegralDiagonal,
                    "kernel vector " + std::to_string(b) + " has a non-integral diagonal entry");
      diags(b, i) = d(i, i).get_num();
    }
  }
  return build(q, diags);
}

CenterLattice lattice_from_diagonals(const RatMatrix& q, const IntMatrix& diagonals) {
  return build(q, diagonals.transpose());
}

ModularCenter reduce_mod_p(const CenterLattice& lat, gf::Elem p) {
  if (!gf::is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  IntMatrix basis = lat.basis_diagonals.transpose();
  const std::size_t n = basis.rows();
  const std::size_t k = basis.cols();
  const std::vector<Int> ones(k, Int(1));
  auto unit = linalg::lattice_coordinates(basis, ones);
  if (!unit) throw Error(ErrorKind::UnitNotInLattice, "all-ones diagonal is not in the lattice");
  std::optional<std::size_t> unit_index;
  for (std::size_t j = 0; j < n; ++j) {
    bool is_e_j = true;
    for (std::size_t t = 0; t < n; ++t) is_e_j = is_e_j && (*unit)[t] == (t == j ? 1 : 0);
    if (is_e_j) unit_index = j;
  }
  if (!unit_index) {
    basis = rebase_with_unit(basis);
    unit_index = 0;
  }

  ModularCenter mc;
  mc.p = p;
  mc.dim = n;
  mc.unit_index = *unit_index;
  mc.structure_constants.assign(n * n * n, 0);
  const gf::Field f{p};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> prod(k);
      for (std::size_t t = 0; t < k; ++t) prod[t] = basis(i, t) * basis(j, t);
      auto coords = linalg::lattice_coordinates(basis, prod);
      if (!coords) throw Error(ErrorKind::NotIntegral, "lattice is not closed under multiplication");
      for (std::size_t m = 0; m < n; ++m) {
        Int r = (*coords)[m] % Int(p);
        if (r < 0) r += p;
        mc.structure_constants[(i * n + j) * n + m] = f.reduce(r.get_si());
      }
    }
  return mc;
}

std::optional<IntMatrix> diagonal_transition(const IntMatrix& from, const IntMatrix& to) {
  if (from.rows() != to.rows()) return std::nullopt;
  const IntMatrix basis = from.transpose();
  IntMatrix t(from.cols(), to.cols());
  for (std::size_t j = 0; j < to.cols(); ++j) {
    auto x = linalg::lattice_coordinates(basis, column_of(to, j));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < from.cols(); ++i) t(i, j) = (*x)[i];
  }
  return t;
}

bool same_diagonal_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  auto ab = diagonal_transition(a, b);
  auto ba = diagonal_transition(b, a);
  return ab && ba && linalg::is_unimodular(*ab) && linalg::is_unimodular(*ba);
}

std::optional<IntMatrix> conjugate_back(const RatMatrix& q, const std::vector<Int>& diagonal) {
  const std::size_t k = q.rows();
  RatMatrix d(k, k);
  for (std::size_t i = 0; i < k; ++i) d(i, i) = Rat(diagonal.at(i));
  const RatMatrix a = q * d * linalg::rat_inverse(q);
  if (!is_integral(a)) return std::nullopt;
  return to_int(a);
}

}  // namespace blockcenter::center
