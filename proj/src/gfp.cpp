#include "blockcenter/gfp.hpp"

#include <algorithm>
#include <bit>

#include "blockcenter/errors.hpp"

namespace blockcenter::gf {

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero in GF(p)");
  // a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Word = std::uint64_t;

Echelon rref_gf2(const std::vector<Vec>& in, std::size_t ncols) {
  const std::size_t words = (ncols + 63) / 64;
  std::vector<std::vector<Word>> m(in.size(), std::vector<Word>(words, 0));
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      if (in[i][j] & 1) m[i][j / 64] |= Word(1) << (j % 64);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    const std::size_t w = c / 64;
    const Word bit = Word(1) << (c % 64);
    std::size_t p = r;
    while (p < m.size() && !(m[p][w] & bit)) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const auto& pr = m[r];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || !(m[i][w] & bit)) continue;
      auto& row = m[i];
      for (std::size_t k = w; k < words; ++k) row[k] ^= pr[k];
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon out;
  out.pivots = std::move(pivots);
  out.rows.assign(r, Vec(ncols, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < words; ++k) {
      Word x = m[i][k];
      while (x) {
        int b = std::countr_zero(x);
        out.rows[i][k * 64 + b] = 1;
        x &= x - 1;
      }
    }
  return out;
}

Echelon rref_generic(std::vector<Vec> m, std::size_t ncols, Elem p) {
  const Field f{p};
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Elem s = f.inv(m[r][c]);
    for (std::size_t j = c; j < ncols; ++j) m[r][j] = f.mul(m[r][j], s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Elem factor = m[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (m[r][j]) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon rref(std::vector<Vec> rows, std::size_t ncols, Elem p) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
  if (p == 2) return rref_gf2(rows, ncols);
  return rref_generic(std::move(rows), ncols, p);
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols, Elem p) {
  const Field f{p};
  auto e = rref(rows, ncols, p);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = f.neg(e.rows[r][free]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vec> left_nullspace(const std::vector<Vec>& rows, std::size_t ncols, Elem p) {
  std::vector<Vec> t(ncols, Vec(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = rows[i][j];
  return nullspace(t, rows.size(), p);
}

std::size_t rank(const std::vector<Vec>& rows, std::size_t ncols, Elem p) { return rref(rows, ncols, p).rows.size(); }

Subspace Subspace::span(std::size_t ambient_dim, Elem p, std::vector<Vec> generators) {
  Subspace s(ambient_dim, p);
  auto e = rref(std::move(generators), ambient_dim, p);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim, Elem p) {
  std::vector<Vec> id(ambient_dim, Vec(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) id[i][i] = 1;
  return span(ambient_dim, p, std::move(id));
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  const Field f{p_};
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Elem c = v[pivots_[r]];
    if (c == 0) continue;
    const auto& b = basis_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (b[j]) v[j] = f.sub(v[j], f.mul(c, b[j]));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, p_, std::move(gens));
}

Subspace Subspace::annihilator() const { return span(ambient_, p_, nullspace(basis_, ambient_, p_)); }

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  return (annihilator() + other.annihilator()).annihilator();
}

std::vector<Vec> Subspace::complement_basis(const Subspace& sub) const {
  // Residues modulo `sub` vanish on its pivot columns, so any independent
  // family of them stays independent modulo `sub`.
  std::vector<Vec> residues;
  residues.reserve(basis_.size());
  for (const auto& b : basis_) residues.push_back(sub.reduce(b));
  return rref(std::move(residues), ambient_, p_).rows;
}

IncrementalBasis::IncrementalBasis(std::size_t ambient_dim, Elem p)
    : ambient_(ambient_dim), p_(p), words_((ambient_dim + 63) / 64) {
  if (p_ == 2) {
    packed_.resize(ambient_);
    has_packed_.assign(ambient_, false);
  } else {
    rows_.resize(ambient_);
    has_row_.assign(ambient_, false);
  }
}

bool IncrementalBasis::insert(const Vec& v) {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  if (p_ == 2) {
    std::vector<Word> x(words_, 0);
    for (std::size_t j = 0; j < ambient_; ++j)
      if (v[j] & 1) x[j / 64] |= Word(1) << (j % 64);
    for (std::size_t w = 0; w < words_; ++w) {
      while (x[w]) {
        std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(x[w]));
        if (!has_packed_[c]) {
          packed_[c] = std::move(x);
          has_packed_[c] = true;
          ++count_;
          return true;
        }
        const auto& b = packed_[c];
        for (std::size_t k = w; k < words_; ++k) x[k] ^= b[k];
      }
    }
    return false;
  }
  const Field f{p_};
  Vec x = v;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (x[c] == 0) continue;
    if (!has_row_[c]) {
      Elem s = f.inv(x[c]);
      for (std::size_t j = c; j < ambient_; ++j) x[j] = f.mul(x[j], s);
      rows_[c] = std::move(x);
      has_row_[c] = true;
      ++count_;
      return true;
    }
    Elem factor = x[c];
    const auto& b = rows_[c];
    for (std::size_t j = c; j < ambient_; ++j)
      if (b[j]) x[j] = f.sub(x[j], f.mul(factor, b[j]));
  }
  return false;
}

}  // namespace blockcenter::gf
