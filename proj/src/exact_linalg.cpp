#include "blockcenter/exact_linalg.hpp"

#include <algorithm>

namespace blockcenter::linalg {

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Smith reduction in place; u/v are updated when non-null.
void smith_reduce(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int& x = a(i, j);
          if (x == 0) continue;
          if (pi == m || abs(x) < best) {
            best = abs(x);
            pi = i;
            pj = j;
            if (best == 1) goto found;
          }
        }
    found:
      if (pi == m) return;  // trailing block is zero
      a.swap_rows(t, pi);
      if (u) u->swap_rows(t, pi);
      a.swap_cols(t, pj);
      if (v) v->swap_cols(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        add_row_multiple(a, i, t, -q);
        if (u) add_row_multiple(*u, i, t, -q);
        if (a(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        add_col_multiple(a, j, t, -q);
        if (v) add_col_multiple(*v, j, t, -q);
        if (a(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Divisibility: fold a row with an offending entry into row t.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row_multiple(a, t, bad, Int(1));
      if (u) add_row_multiple(*u, t, bad, Int(1));
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      if (u) negate_row(*u, t);
    }
  }
}

// Gaussian elimination over Q; returns rank and leaves `a` in row echelon form.
std::size_t rat_echelon(RatMatrix& a, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  SnfResult res{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  smith_reduce(res.d, &res.u, &res.v);
  return res;
}

std::vector<Int> elementary_divisors(const IntMatrix& a) {
  IntMatrix d = a;
  smith_reduce(d, nullptr, nullptr);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

std::size_t rank(const IntMatrix& a) {
  RatMatrix r = to_rat(a);
  return rat_echelon(r);
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix v = IntMatrix::identity(a.cols());
  smith_reduce(d, nullptr, &v);
  std::size_t r = 0;
  while (r < std::min(d.rows(), d.cols()) && d(r, r) != 0) ++r;
  // a x = 0  <=>  d (v^-1 x) = 0  <=>  x in span of the trailing columns of v.
  IntMatrix basis(a.cols() - r, a.cols());
  for (std::size_t k = r; k < a.cols(); ++k)
    for (std::size_t i = 0; i < a.cols(); ++i) basis(k - r, i) = v(i, k);
  if (basis.rows() == 0) return basis;
  return hermite_normal_form(basis);
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (p == m || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == m) break;
      h.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        add_row_multiple(h, i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, i, r, -q);
    }
    ++r;
  }
  return h.row_block(0, r);
}

RatMatrix rat_inverse(const RatMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix w = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    w.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rat piv = w(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      w(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rat determinant(const RatMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  RatMatrix w = a;
  Rat det = 1;
  const std::size_t n = w.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      w.swap_rows(c, p);
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w(i, c) == 0) continue;
      Rat f = w(i, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

Int determinant(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix w = a;
  const std::size_t n = w.rows();
  if (n == 0) return Int(1);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return Int(0);
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w(i, j) = t;
      }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.square()) return false;
  return abs(determinant(a)) == 1;
}

bool is_positive_semidefinite(const IntMatrix& a) {
  if (!a.is_symmetric()) return false;
  RatMatrix w = to_rat(a);
  std::vector<bool> alive(w.rows(), true);
  for (std::size_t step = 0; step < w.rows(); ++step) {
    std::size_t p = w.rows();
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (!alive[i]) continue;
      if (w(i, i) < 0) return false;
      if (w(i, i) > 0 && p == w.rows()) p = i;
    }
    if (p == w.rows()) {
      // All remaining diagonal entries vanish: the remaining block must be zero.
      for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.rows(); ++j)
          if (alive[i] && alive[j] && w(i, j) != 0) return false;
      return true;
    }
    alive[p] = false;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (!alive[i] || w(i, p) == 0) continue;
      Rat f = w(i, p) / w(p, p);
      for (std::size_t j = 0; j < w.rows(); ++j)
        if (alive[j]) w(i, j) -= f * w(p, j);
    }
  }
  return true;
}

bool is_positive_definite(const IntMatrix& a) {
  if (!a.is_symmetric()) return false;
  // Leading principal minors (Sylvester's criterion).
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = a(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

std::optional<std::vector<Int>> lattice_coordinates(const IntMatrix& basis,
                                                    const std::vector<Int>& target) {
  if (target.size() != basis.cols())
    throw Error(ErrorKind::DimensionMismatch, "target length differs from lattice dimension");
  const std::size_t nb = basis.rows(), d = basis.cols();
  // Augmented system basis^T x = target.
  RatMatrix aug(d, nb + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < nb; ++k) aug(i, k) = basis(k, i);
    aug(i, nb) = target[i];
  }
  std::vector<std::size_t> piv;
  std::size_t r = rat_echelon(aug, &piv);
  if (r > 0 && piv.back() == nb) return std::nullopt;  // inconsistent
  if (r != nb) throw Error(ErrorKind::SingularMatrix, "lattice basis rows are dependent");
  std::vector<Rat> x(nb);
  for (std::size_t k = nb; k-- > 0;) {
    Rat s = aug(k, nb);
    for (std::size_t j = k + 1; j < nb; ++j) s -= aug(k, j) * x[j];
    x[k] = s / aug(k, k);
  }
  std::vector<Int> out(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    if (x[k].get_den() != 1) return std::nullopt;
    out[k] = x[k].get_num();
  }
  return out;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hermite_normal_form(a) == hermite_normal_form(b);
}

IntMatrix complete_to_unimodular(const std::vector<Int>& x) {
  const std::size_t n = x.size();
  IntMatrix row(1, n, x);
  IntMatrix v = IntMatrix::identity(n);
  smith_reduce(row, nullptr, &v);
  if (row(0, 0) != 1) throw Error(ErrorKind::InvalidArgument, "vector is not primitive");
  // The sign fix in smith_reduce is a row operation, invisible to v.
  Int lead = 0;
  for (std::size_t i = 0; i < n; ++i) lead += x[i] * v(i, 0);
  if (lead < 0)
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = -v(i, 0);
  // x * v = e_1, hence x is the first row of v^-1.
  return to_int(rat_inverse(to_rat(v)));
}

Int content(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace blockcenter::linalg
