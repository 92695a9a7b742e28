#include "blockcenter/fdalgebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "blockcenter/errors.hpp"
#include "blockcenter/matrix_io.hpp"

namespace blockcenter::fd {

namespace {

constexpr std::size_t kExhaustiveFormLimit = std::size_t{1} << 16;
constexpr int kFormSamples = 1000;

std::vector<Vec> concat_rows(std::size_t n, const std::function<std::vector<Vec>(std::size_t)>& blocks) {
  std::vector<Vec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row;
    for (const auto& b : blocks(i)) row.insert(row.end(), b.begin(), b.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

Subspace rows_span(const FinDimAlgebra& a, std::vector<Vec> rows) {
  return Subspace::span(a.dim(), a.p(), std::move(rows));
}

/// Inverse of a square matrix over GF(p) given by rows; nullopt if singular.
std::optional<std::vector<Vec>> invert(const std::vector<Vec>& m, Elem p) {
  const std::size_t n = m.size();
  std::vector<Vec> aug(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto e = gf::rref(aug, 2 * n, p);
  if (e.rows.size() != n || e.pivots.back() != n - 1) return std::nullopt;
  std::vector<Vec> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(e.rows[i].begin() + n, e.rows[i].end());
  return inv;
}

Vec vec_times_matrix(const Vec& v, const std::vector<Vec>& m, const gf::Field& f) {
  Vec out(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], m[i][j]));
  }
  return out;
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(Elem p, std::size_t dim, std::vector<std::string> labels, std::vector<Elem> sc,
                             std::size_t unit_index)
    : p_(p), dim_(dim), labels_(std::move(labels)), sc_(std::move(sc)), unit_(unit_index) {
  if (!gf::is_prime(p)) throw Error(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "algebra of dimension 0");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim || sc_.size() != dim * dim * dim || unit_ >= dim)
    throw Error(ErrorKind::InvalidArgument, "structure constant table has the wrong shape");
  for (auto& c : sc_) c %= p_;
  for (std::size_t i = 0; i < dim; ++i) {
    if (basis_product(unit_, i) != basis_vector(i) || basis_product(i, unit_) != basis_vector(i))
      throw Error(ErrorKind::InvalidArgument, "basis element " + labels_[unit_] + " is not a unit");
  }
}

FinDimAlgebra FinDimAlgebra::from_products(Elem p, std::vector<std::string> labels, std::size_t unit_index,
                                           const std::function<Vec(std::size_t, std::size_t)>& product) {
  const std::size_t n = labels.size();
  std::vector<Elem> sc(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = product(i, j);
      if (v.size() != n) throw Error(ErrorKind::InvalidArgument, "product has wrong length");
      for (std::size_t m = 0; m < n; ++m) sc[(i * n + j) * n + m] = v[m] % p;
    }
  return FinDimAlgebra(p, n, std::move(labels), std::move(sc), unit_index);
}

Vec FinDimAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

Vec FinDimAlgebra::basis_product(std::size_t i, std::size_t j) const {
  auto first = sc_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vec(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vec FinDimAlgebra::multiply(const Vec& a, const Vec& b) const {
  const gf::Field f{p_};
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Elem c = f.mul(a[i], b[j]);
      const Elem* row = &sc_[(i * dim_ + j) * dim_];
      for (std::size_t m = 0; m < dim_; ++m)
        if (row[m] != 0) out[m] = f.add(out[m], f.mul(c, row[m]));
    }
  }
  return out;
}

Vec FinDimAlgebra::add(const Vec& a, const Vec& b) const {
  const gf::Field f{p_};
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec FinDimAlgebra::sub(const Vec& a, const Vec& b) const {
  const gf::Field f{p_};
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec FinDimAlgebra::power(const Vec& a, unsigned long n) const {
  Vec result = unit();
  Vec base = a;
  while (n > 0) {
    if (n & 1UL) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

bool FinDimAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec ij = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Vec ek = basis_vector(k);
        if (multiply(ij, ek) != multiply(basis_vector(i), basis_product(j, k))) return false;
      }
    }
  return true;
}

bool FinDimAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

Elem LinearForm::eval(const Vec& v, Elem p) const {
  const gf::Field f{p};
  Elem s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s = f.add(s, f.mul(coeffs[i], v[i]));
  return s;
}

Subspace radical(const FinDimAlgebra& a) {
  const std::size_t n = a.dim();
  const std::size_t u = a.unit_index();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == u) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.basis_product(i, j)[u] != 0 || a.basis_product(j, i)[u] != 0)
        throw Error(ErrorKind::NotPresentedLocal,
                    "non-unit basis elements do not span an ideal (" + a.labels()[i] + ", " + a.labels()[j] + ")");
    }
  }
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    if (i != u) gens.push_back(a.basis_vector(i));
  Subspace j = rows_span(a, gens);
  Subspace power = j;
  for (std::size_t k = 1; k <= n && !power.is_zero(); ++k) power = product_space(a, j, power);
  if (!power.is_zero())
    throw Error(ErrorKind::NotPresentedLocal, "span of the non-unit basis elements is not nilpotent");
  return j;
}

Subspace commutative_radical(const FinDimAlgebra& a) {
  if (!a.is_commutative()) throw Error(ErrorKind::InvalidArgument, "algebra is not commutative");
  unsigned long q = a.p();
  while (q < a.dim()) q *= a.p();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(a.power(a.basis_vector(i), q));
  return rows_span(a, gf::left_nullspace(images, a.dim(), a.p()));
}

Subspace product_space(const FinDimAlgebra& a, const Subspace& u, const Subspace& w) {
  gf::IncrementalBasis acc(a.dim(), a.p());
  std::vector<Vec> gens;
  for (const auto& x : u.basis())
    for (const auto& y : w.basis()) {
      Vec v = a.multiply(x, y);
      if (acc.insert(v)) gens.push_back(std::move(v));
    }
  return rows_span(a, std::move(gens));
}

std::vector<Subspace> radical_series(const FinDimAlgebra& a, const Subspace& j) {
  std::vector<Subspace> series{Subspace::whole(a.dim(), a.p())};
  Subspace current = j;
  for (std::size_t k = 0; k <= a.dim(); ++k) {
    series.push_back(current);
    if (current.is_zero()) return series;
    current = product_space(a, j, current);
  }
  throw Error(ErrorKind::NotPresentedLocal, "radical candidate is not nilpotent");
}

std::vector<Subspace> radical_series(const FinDimAlgebra& a) { return radical_series(a, radical(a)); }

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

std::vector<std::size_t> loewy_vector(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) out.push_back(series[i].dim() - series[i + 1].dim());
  return out;
}

Subspace annihilator(const FinDimAlgebra& a, const Subspace& u, Side side) {
  if (side == Side::TwoSided)
    return annihilator(a, u, Side::Left).intersect(annihilator(a, u, Side::Right));
  if (u.is_zero()) return Subspace::whole(a.dim(), a.p());
  auto rows = concat_rows(a.dim(), [&](std::size_t i) {
    std::vector<Vec> blocks;
    for (const auto& b : u.basis())
      blocks.push_back(side == Side::Left ? a.multiply(a.basis_vector(i), b) : a.multiply(b, a.basis_vector(i)));
    return blocks;
  });
  return rows_span(a, gf::left_nullspace(rows, a.dim() * u.dim(), a.p()));
}

Subspace socle(const FinDimAlgebra& a, Side side, const Subspace& j) { return annihilator(a, j, side); }

Subspace socle(const FinDimAlgebra& a, Side side) { return socle(a, side, radical(a)); }

Subspace center(const FinDimAlgebra& a) {
  auto rows = concat_rows(a.dim(), [&](std::size_t i) {
    std::vector<Vec> blocks;
    for (std::size_t k = 0; k < a.dim(); ++k) blocks.push_back(a.sub(a.basis_product(i, k), a.basis_product(k, i)));
    return blocks;
  });
  return rows_span(a, gf::left_nullspace(rows, a.dim() * a.dim(), a.p()));
}

Subspace commutator_space(const FinDimAlgebra& a) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) gens.push_back(a.sub(a.basis_product(i, j), a.basis_product(j, i)));
  return rows_span(a, std::move(gens));
}

Subspace kulshammer_T(const FinDimAlgebra& a, unsigned n) {
  if (a.p() != 2) throw Error(ErrorKind::OddCharacteristic, "Kulshammer spaces need characteristic 2");
  if (n >= 63) throw Error(ErrorKind::InvalidArgument, "exponent too large");
  const Subspace comm = commutator_space(a);
  const unsigned long q = 1UL << n;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(comm.reduce(a.power(a.basis_vector(i), q)));
  return rows_span(a, gf::left_nullspace(images, a.dim(), a.p()));
}

bool is_symmetric_form(const FinDimAlgebra& a, const LinearForm& s) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (s.eval(a.basis_product(i, j), a.p()) != s.eval(a.basis_product(j, i), a.p())) return false;
  return true;
}

bool is_nondegenerate_form(const FinDimAlgebra& a, const LinearForm& s) {
  std::vector<Vec> gram(a.dim(), Vec(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) gram[i][j] = s.eval(a.basis_product(i, j), a.p());
  return gf::rank(gram, a.dim(), a.p()) == a.dim();
}

SymmetrizingSearch search_symmetrizing_form(const FinDimAlgebra& a, std::uint64_t seed) {
  const Subspace candidates = commutator_space(a).annihilator();
  const auto& basis = candidates.basis();
  const gf::Field f{a.p()};
  auto combine = [&](const std::vector<Elem>& coeffs) {
    LinearForm s{Vec(a.dim(), 0)};
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < a.dim(); ++i) s.coeffs[i] = f.add(s.coeffs[i], f.mul(coeffs[k], basis[k][i]));
    return s;
  };

  std::size_t total = 1;
  bool small = true;
  for (std::size_t k = 0; k < basis.size() && small; ++k) {
    total *= a.p();
    small = total <= kExhaustiveFormLimit;
  }

  SymmetrizingSearch result;
  if (small) {
    std::vector<Elem> coeffs(basis.size(), 0);
    for (std::size_t idx = 1; idx < total; ++idx) {
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (++coeffs[k] < a.p()) break;
        coeffs[k] = 0;
      }
      LinearForm s = combine(coeffs);
      if (is_nondegenerate_form(a, s)) {
        result.form = std::move(s);
        return result;
      }
    }
    return result;
  }

  result.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> dist(0, a.p() - 1);
  for (int t = 0; t < kFormSamples; ++t) {
    std::vector<Elem> coeffs(basis.size());
    for (auto& c : coeffs) c = dist(rng);
    LinearForm s = combine(coeffs);
    if (is_nondegenerate_form(a, s)) {
      result.form = std::move(s);
      return result;
    }
  }
  return result;
}

LinearForm find_symmetrizing_form(const FinDimAlgebra& a, std::uint64_t seed) {
  auto r = search_symmetrizing_form(a, seed);
  if (r.form) return *r.form;
  throw Error(ErrorKind::NotSymmetric, r.exhaustive ? "no symmetrizing form exists"
                                                    : "no symmetrizing form found by sampling (low confidence)");
}

Subspace perp_space(const FinDimAlgebra& a, const LinearForm& s, const Subspace& u) {
  if (s.coeffs.size() != a.dim() || !is_symmetric_form(a, s) || !is_nondegenerate_form(a, s))
    throw Error(ErrorKind::FormNotSymmetrizing, "form is not symmetrizing");
  if (u.is_zero()) return Subspace::whole(a.dim(), a.p());
  std::vector<Vec> rows(a.dim(), Vec(u.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < u.dim(); ++k) rows[i][k] = s.eval(a.multiply(a.basis_vector(i), u.basis()[k]), a.p());
  return rows_span(a, gf::left_nullspace(rows, u.dim(), a.p()));
}

FinDimAlgebra change_basis(const FinDimAlgebra& a, const std::vector<Vec>& basis, std::vector<std::string> labels,
                           std::size_t unit_index) {
  if (basis.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "basis has the wrong size");
  auto inv = invert(basis, a.p());
  if (!inv) throw Error(ErrorKind::SingularMatrix, "new basis is linearly dependent");
  const gf::Field f{a.p()};
  return FinDimAlgebra::from_products(a.p(), std::move(labels), unit_index, [&](std::size_t i, std::size_t j) {
    return vec_times_matrix(a.multiply(basis[i], basis[j]), *inv, f);
  });
}

FinDimAlgebra present_local(const FinDimAlgebra& a) {
  const Subspace j = commutative_radical(a);
  if (j.dim() + 1 != a.dim()) throw Error(ErrorKind::NotPresentedLocal, "algebra is not local");
  std::vector<Vec> basis{a.unit()};
  std::vector<std::string> labels{"1"};
  for (std::size_t k = 0; k < j.dim(); ++k) {
    basis.push_back(j.basis()[k]);
    labels.push_back("r" + std::to_string(k + 1));
  }
  return change_basis(a, basis, std::move(labels), 0);
}

FinDimAlgebra monomial_algebra(Elem p, const std::vector<std::string>& vars,
                               const std::vector<std::vector<unsigned>>& relations) {
  using Mono = std::vector<unsigned>;
  auto killed = [&](const Mono& m) {
    for (const auto& r : relations) {
      bool divides = true;
      for (std::size_t v = 0; v < vars.size(); ++v) divides = divides && m[v] >= r.at(v);
      if (divides) return true;
    }
    return false;
  };
  for (std::size_t v = 0; v < vars.size(); ++v) {
    bool bounded = false;
    for (const auto& r : relations) {
      bool pure = r.at(v) > 0;
      for (std::size_t w = 0; w < vars.size(); ++w) pure = pure && (w == v || r[w] == 0);
      bounded = bounded || pure;
    }
    if (!bounded) throw Error(ErrorKind::InvalidArgument, "variable " + vars[v] + " is not nilpotent");
  }
  // Standard monomials by total degree, then reverse-lexicographic exponent.
  std::vector<Mono> monos{Mono(vars.size(), 0)};
  for (std::size_t head = 0; head < monos.size(); ++head) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      Mono m = monos[head];
      ++m[v];
      if (!killed(m) && std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);
    }
  }
  std::stable_sort(monos.begin(), monos.end(), [](const Mono& x, const Mono& y) {
    unsigned dx = 0, dy = 0;
    for (auto e : x) dx += e;
    for (auto e : y) dy += e;
    if (dx != dy) return dx < dy;
    return x > y;
  });
  std::map<Mono, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    index[monos[i]] = i;
    std::string label;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (monos[i][v] == 0) continue;
      label += vars[v];
      if (monos[i][v] > 1) label += "^" + std::to_string(monos[i][v]);
    }
    labels.push_back(label.empty() ? "1" : label);
  }
  const std::size_t n = monos.size();
  return FinDimAlgebra::from_products(p, labels, 0, [&](std::size_t i, std::size_t j) {
    Mono m(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) m[v] = monos[i][v] + monos[j][v];
    Vec out(n, 0);
    if (auto it = index.find(m); it != index.end()) out[it->second] = 1;
    return out;
  });
}

FinDimAlgebra group_algebra(Elem p, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  const gf::Field f{p};
  // Basis b_0 = 1, b_g = g - 1; (g-1)(h-1) = (gh - 1) - (g - 1) - (h - 1).
  auto as_vec = [&](std::size_t g) {
    Vec v(n, 0);
    if (g != 0) v[g] = 1;
    return v;
  };
  std::vector<std::string> labels{"1"};
  for (std::size_t g = 1; g < n; ++g) labels.push_back("g" + std::to_string(g) + "-1");
  return FinDimAlgebra::from_products(p, labels, 0, [&](std::size_t i, std::size_t j) {
    if (i == 0) {
      Vec v(n, 0);
      v[j] = 1;
      return v;
    }
    if (j == 0) {
      Vec v(n, 0);
      v[i] = 1;
      return v;
    }
    Vec v = as_vec(table.at(i).at(j));
    v[i] = f.sub(v[i], 1);
    v[j] = f.sub(v[j], 1);
    return v;
  });
}

FinDimAlgebra generated_matrix_algebra(Elem p, const std::vector<std::vector<Vec>>& generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  const std::size_t n = generators[0].size();
  const gf::Field f{p};
  using Mat = std::vector<Vec>;
  auto flatten = [&](const Mat& m) {
    Vec v;
    for (const auto& r : m) v.insert(v.end(), r.begin(), r.end());
    return v;
  };
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] = f.add(z[i][j], f.mul(x[i][k], y[k][j]));
    return z;
  };
  Mat id(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;

  std::vector<Mat> basis;
  gf::IncrementalBasis acc(n * n, p);
  auto offer = [&](const Mat& m) {
    if (acc.insert(flatten(m))) basis.push_back(m);
  };
  offer(id);
  for (const auto& g : generators) offer(g);
  for (std::size_t head = 0; head < basis.size(); ++head)
    for (const auto& g : generators) offer(mul(basis[head], g));

  std::vector<Vec> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  auto coords = [&](const Vec& target) {
    std::vector<Vec> rows = flat;
    rows.push_back(target);
    auto dep = gf::left_nullspace(rows, n * n, p);
    for (const auto& d : dep) {
      if (d.back() == 0) continue;
      const Elem scale = f.neg(f.inv(d.back()));
      Vec c(flat.size());
      for (std::size_t k = 0; k < flat.size(); ++k) c[k] = f.mul(d[k], scale);
      return c;
    }
    throw Error(ErrorKind::InvalidArgument, "matrix algebra is not closed");
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back(i == 0 ? "1" : "m" + std::to_string(i));
  return FinDimAlgebra::from_products(p, labels, 0, [&](std::size_t i, std::size_t j) {
    return coords(flatten(mul(basis[i], basis[j])));
  });
}

FinDimAlgebra read_algebra(std::istream& in, const std::string& source) {
  io::LineReader reader(in, source);
  auto header = reader.next();
  if (!header) reader.fail("empty algebra file");
  auto h = io::split_ws(*header);
  if (h.size() != 6 || h[0] != "DIM" || h[2] != "P" || h[4] != "UNIT") reader.fail("expected `DIM n P p UNIT i`");
  std::size_t dim = 0, unit = 0;
  Elem p = 0;
  try {
    dim = std::stoul(h[1]);
    p = static_cast<Elem>(std::stoul(h[3]));
    unit = std::stoul(h[5]);
  } catch (const std::exception&) {
    reader.fail("bad number in header");
  }
  auto label_line = reader.next();
  if (!label_line) reader.fail("missing label line");
  auto labels = io::split_ws(*label_line);
  if (labels.size() != dim) reader.fail("expected " + std::to_string(dim) + " labels");
  std::vector<Elem> sc(dim * dim * dim, 0);
  const gf::Field f{p == 0 ? 2 : p};
  while (auto line = reader.next()) {
    auto t = io::split_ws(*line);
    if (t.size() != 4) reader.fail("expected `i j k c`");
    std::size_t i = 0, j = 0, k = 0;
    long long c = 0;
    try {
      i = std::stoul(t[0]);
      j = std::stoul(t[1]);
      k = std::stoul(t[2]);
      c = std::stoll(t[3]);
    } catch (const std::exception&) {
      reader.fail("bad number");
    }
    if (i >= dim || j >= dim || k >= dim) reader.fail("index out of range");
    auto& slot = sc[(i * dim + j) * dim + k];
    slot = f.add(slot, f.reduce(c));
  }
  FinDimAlgebra a(p, dim, std::move(labels), std::move(sc), unit);
  if (!a.is_associative()) throw Error(ErrorKind::ParseError, source + ": structure constants are not associative");
  return a;
}

FinDimAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::DataFileMissing, "cannot open " + path);
  return read_algebra(in, path);
}

std::string format_algebra(const FinDimAlgebra& a) {
  std::ostringstream out;
  out << "DIM " << a.dim() << " P " << a.p() << " UNIT " << a.unit_index() << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i) out << (i ? " " : "") << a.labels()[i];
  out << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.sc(i, j, k) != 0) out << i << " " << j << " " << k << " " << a.sc(i, j, k) << "\n";
  return out.str();
}

std::string format_element(const FinDimAlgebra& a, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += std::to_string(v[i]) + "*";
    out += a.labels()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace blockcenter::fd

namespace blockcenter::fd {

Subspace local_radical(const FinDimAlgebra& a) {
  try {
    return radical(a);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPresentedLocal || !a.is_commutative()) throw;
  }
  Subspace j = commutative_radical(a);
  if (j.dim() + 1 != a.dim()) throw Error(ErrorKind::NotPresentedLocal, "algebra is not local");
  return j;
}

}  // namespace blockcenter::fd
