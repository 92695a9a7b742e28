#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace blockcenter::gf {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

/// Arithmetic in GF(p), p prime below 2^31.
struct Field {
  Elem p;

  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) + b) % p); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) + p - b) % p); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) * b) % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;
  Elem reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
};

bool is_prime(std::uint64_t n);

/// Reduced row echelon form: nonzero rows only, pivot entries 1, pivot
/// columns strictly increasing, pivot columns otherwise zero.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Echelon rref(std::vector<Vec> rows, std::size_t ncols, Elem p);

/// Basis of {x : M x = 0} for M given by its rows (each of length ncols).
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols, Elem p);

/// Basis of {y : y M = 0}, i.e. dependencies among the rows.
std::vector<Vec> left_nullspace(const std::vector<Vec>& rows, std::size_t ncols, Elem p);

std::size_t rank(const std::vector<Vec>& rows, std::size_t ncols, Elem p);

/// Subspace of GF(p)^n held in canonical RREF; equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, Elem p) : ambient_(ambient_dim), p_(p) {}

  static Subspace span(std::size_t ambient_dim, Elem p, std::vector<Vec> generators);
  static Subspace whole(std::size_t ambient_dim, Elem p);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  Elem characteristic() const noexcept { return p_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return basis_.empty(); }

  /// Remainder of v after eliminating the pivot columns.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  /// Intersection, computed as (U^o + W^o)^o for the standard pairing.
  Subspace intersect(const Subspace& other) const;
  /// {x : x . b = 0 for all b in the subspace}.
  Subspace annihilator() const;

  /// A basis of a complement of `sub` inside *this (sub must be contained).
  std::vector<Vec> complement_basis(const Subspace& sub) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.p_ == b.p_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Elem p_ = 2;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Greedy basis builder: insert() reports whether a vector is independent of
/// everything inserted before. Bit-packed when p = 2.
class IncrementalBasis {
 public:
  IncrementalBasis(std::size_t ambient_dim, Elem p);

  bool insert(const Vec& v);
  std::size_t dim() const noexcept { return count_; }

 private:
  std::size_t ambient_;
  Elem p_;
  std::size_t count_ = 0;
  // p = 2: packed rows indexed by pivot column.
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> packed_;
  std::vector<bool> has_packed_;
  // other p: normalized rows indexed by pivot column.
  std::vector<Vec> rows_;
  std::vector<bool> has_row_;
};

}  // namespace blockcenter::gf
