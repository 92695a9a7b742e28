#include "blockcenter/plesken.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "blockcenter/exact_linalg.hpp"

namespace blockcenter::plesken {

namespace {

void require_positive_definite(const IntMatrix& c) {
  if (!c.square() || !linalg::is_positive_definite(c))
    throw Error(ErrorKind::NotPositiveDefinite, "Gram matrix must be symmetric positive definite");
}

Rat quadratic_form(const RatMatrix& m, const IntVector& r) {
  Rat s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) s += r[i] * m(i, j) * r[j];
  }
  return s;
}

Int isqrt_floor(const Int& n) {
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

// Calls `visit` for every vector in the box [-bound_i, bound_i].
void for_each_in_box(const std::vector<long>& bound, const std::function<void(const IntVector&)>& visit) {
  const std::size_t l = bound.size();
  std::vector<long> cur(l);
  for (std::size_t i = 0; i < l; ++i) cur[i] = -bound[i];
  IntVector v(l);
  while (true) {
    for (std::size_t i = 0; i < l; ++i) v[i] = cur[i];
    visit(v);
    std::size_t i = l;
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = -bound[i];
      if (i == 0) return;
    }
    if (l == 0) return;
  }
}

IntMatrix sorted_normalized(const IntMatrix& x) {
  std::vector<IntVector> rows;
  rows.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) rows.push_back(sign_normalized(x.row_vector(i)));
  std::sort(rows.begin(), rows.end());
  IntMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = rows[i][j];
  return out;
}

std::string eldiv_label(const std::vector<Int>& d) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i].get_str();
  out << ')';
  return out.str();
}

// Validates a contribution multiset against k rows and trace = l.
void validate_constraints(const std::vector<Rat>& constraints, std::size_t k, std::size_t l) {
  if (constraints.size() != k)
    throw Error(ErrorKind::NoSolution, "contribution multiset has " + std::to_string(constraints.size()) +
                                           " entries for " + std::to_string(k) + " rows");
  Rat total = 0;
  for (const auto& q : constraints) total += q;
  if (total != Rat(static_cast<long>(l)))
    throw Error(ErrorKind::NoSolution, "row contributions sum to " + total.get_str() +
                                           " but the trace of the contribution matrix must be " +
                                           std::to_string(l));
}

}  // namespace

Int gram_scale(const IntMatrix& c) {
  auto d = linalg::elementary_divisors(c);
  if (d.size() != c.rows()) throw Error(ErrorKind::SingularMatrix, "Gram matrix is singular");
  return d.back();
}

IntVector sign_normalized(IntVector r) {
  for (const auto& x : r) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : r) y = -y;
    break;
  }
  return r;
}

std::vector<RowCandidate> enumerate_rows(const IntMatrix& c, bool parity_required) {
  require_positive_definite(c);
  const RatMatrix cinv = linalg::rat_inverse(c);
  const Int scale = gram_scale(c);
  std::vector<long> bound(c.rows());
  for (std::size_t i = 0; i < c.rows(); ++i) bound[i] = isqrt_floor(c(i, i)).get_si();

  std::vector<RowCandidate> out;
  for_each_in_box(bound, [&](const IntVector& r) {
    if (sign_normalized(r) != r) return;
    Rat q = quadratic_form(cinv, r);
    if (q > 1) return;
    Rat scaled = q * scale;
    Int num = scaled.get_num();
    if (parity_required && (scaled.get_den() != 1 || mpz_odd_p(num.get_mpz_t()) == 0)) return;
    out.push_back({r, q, num});
  });
  std::sort(out.begin(), out.end(), [](const RowCandidate& a, const RowCandidate& b) { return a.r < b.r; });
  return out;
}

GramAutGroup gram_automorphisms(const IntMatrix& c) {
  require_positive_definite(c);
  const std::size_t l = c.rows();
  const RatMatrix cinv = linalg::rat_inverse(c);
  const RatMatrix cr = to_rat(c);

  // Vectors of each required norm: |v_i|^2 <= c_jj * (C^-1)_ii.
  std::map<Int, std::vector<IntVector>> by_norm;
  for (std::size_t j = 0; j < l; ++j) {
    const Int& norm = c(j, j);
    if (by_norm.count(norm)) continue;
    std::vector<long> bound(l);
    for (std::size_t i = 0; i < l; ++i) {
      Rat b2 = norm * cinv(i, i);
      bound[i] = isqrt_floor(Int(b2.get_num() / b2.get_den())).get_si();
    }
    auto& vs = by_norm[norm];
    for_each_in_box(bound, [&](const IntVector& v) {
      if (quadratic_form(cr, v) == norm) vs.push_back(v);
    });
  }

  auto inner = [&](const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t k = 0; k < l; ++k) s += a[i] * c(i, k) * b[k];
    return s;
  };

  GramAutGroup group;
  std::vector<IntVector> cols(l);
  std::function<void(std::size_t)> extend = [&](std::size_t j) {
    if (j == l) {
      IntMatrix s(l, l);
      for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = 0; b < l; ++b) s(a, b) = cols[b][a];
      group.elements.push_back(std::move(s));
      return;
    }
    for (const auto& v : by_norm[c(j, j)]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = inner(cols[i], v) == c(i, j);
      if (!ok) continue;
      cols[j] = v;
      extend(j + 1);
    }
  };
  extend(0);
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

IntMatrix canonicalize(const IntMatrix& x, const GramAutGroup& aut) {
  if (aut.elements.empty()) return sorted_normalized(x);
  std::optional<IntMatrix> best;
  for (const auto& s : aut.elements) {
    IntMatrix y = sorted_normalized(x * s);
    if (!best || y < *best) best = std::move(y);
  }
  return *best;
}

std::vector<Rat> row_contributions(const IntMatrix& x, const IntMatrix& c) {
  const RatMatrix cinv = linalg::rat_inverse(c);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(quadratic_form(cinv, x.row_vector(i)));
  return out;
}

std::vector<IntMatrix> enumerate_row_multisets(const IntMatrix& c, std::size_t k,
                                               const std::optional<std::vector<Rat>>& row_constraints) {
  require_positive_definite(c);
  const std::size_t l = c.rows();
  if (k < l) throw Error(ErrorKind::InvalidArgument, "need at least as many rows as columns");

  // Remaining row budget per contribution value.
  std::map<Rat, std::size_t> budget;
  if (row_constraints) {
    validate_constraints(*row_constraints, k, l);
    for (const auto& q : *row_constraints) ++budget[q];
  }

  // Parity needs no separate filter: it is implied by the constraint values.
  auto candidates = enumerate_rows(c, false);
  if (row_constraints)
    std::erase_if(candidates, [&](const RowCandidate& rc) { return budget.count(rc.contribution) == 0; });
  // High contributions first, then lexicographic.
  std::stable_sort(candidates.begin(), candidates.end(), [](const RowCandidate& a, const RowCandidate& b) {
    if (a.contribution != b.contribution) return a.contribution > b.contribution;
    return a.r < b.r;
  });

  // Outer products r^T r, precomputed.
  std::vector<IntMatrix> outer;
  outer.reserve(candidates.size());
  for (const auto& rc : candidates) {
    IntMatrix o(l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) o(i, j) = rc.r[i] * rc.r[j];
    outer.push_back(std::move(o));
  }

  std::vector<IntMatrix> found;
  std::vector<std::size_t> chosen;
  IntMatrix remaining = c;  // c minus the partial Gram matrix

  std::function<void(std::size_t)> search = [&](std::size_t start) {
    if (chosen.size() == k) {
      if (!remaining.is_zero()) return;
      IntMatrix x(k, l);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) x(i, j) = candidates[chosen[i]].r[j];
      found.push_back(sorted_normalized(x));
      return;
    }
    for (std::size_t idx = start; idx < candidates.size(); ++idx) {
      const auto& rc = candidates[idx];
      if (row_constraints) {
        auto& left = budget[rc.contribution];
        if (left == 0) continue;
      }
      bool fits = true;
      for (std::size_t i = 0; i < l && fits; ++i) fits = remaining(i, i) >= outer[idx](i, i);
      if (!fits) continue;
      IntMatrix next = remaining - outer[idx];
      if (!linalg::is_positive_semidefinite(next)) continue;

      std::swap(remaining, next);
      chosen.push_back(idx);
      if (row_constraints) --budget[rc.contribution];
      search(idx);
      if (row_constraints) ++budget[rc.contribution];
      chosen.pop_back();
      std::swap(remaining, next);
    }
  };
  search(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<GramSolutionClass> enumerate_solutions(
    const IntMatrix& c, std::size_t k, const std::optional<std::vector<Rat>>& row_constraints) {
  auto solutions = enumerate_row_multisets(c, k, row_constraints);
  const auto aut = gram_automorphisms(c);

  std::map<IntMatrix, bool> seen;
  std::vector<GramSolutionClass> classes;
  for (const auto& x : solutions) {
    IntMatrix canon = canonicalize(x, aut);
    if (seen.count(canon)) continue;
    seen[canon] = true;
    GramSolutionClass cls;
    cls.eldiv = linalg::elementary_divisors(canon);
    cls.contributions = row_contributions(canon, c);
    std::sort(cls.contributions.begin(), cls.contributions.end());
    cls.canonical = std::move(canon);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const GramSolutionClass& a, const GramSolutionClass& b) {
    if (a.eldiv != b.eldiv) return a.eldiv < b.eldiv;
    return a.canonical < b.canonical;
  });
  std::map<std::string, int> used;
  for (auto& cls : classes) {
    cls.label = eldiv_label(cls.eldiv);
    if (int n = used[cls.label]++; n > 0) cls.label += "#" + std::to_string(n + 1);
  }
  return classes;
}

GramSolutionClass enumerate_ordinary(const IntMatrix& c, std::size_t rows) {
  require_positive_definite(c);
  const Int scale = gram_scale(c);
  if (rows == 0) rows = scale.get_ui();
  Rat each(Int(static_cast<long>(c.rows())), scale);
  each.canonicalize();
  std::vector<Rat> constraints(rows, each);
  auto classes = enumerate_solutions(c, rows, constraints);
  if (classes.empty()) throw Error(ErrorKind::NoSolution, "no solution with all contributions " + each.get_str());
  if (classes.size() != 1)
    throw Error(ErrorKind::NoSolution, "expected a unique class, found " + std::to_string(classes.size()));
  return classes.front();
}

IntVector permutation_sign_representative(const IntVector& r) {
  IntVector a = r, b = r;
  for (auto& x : b) x = -x;
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return std::max(a, b);
}

std::vector<IntVector> permutation_sign_classes(const std::vector<IntVector>& rows) {
  std::vector<IntVector> reps;
  for (const auto& r : rows) reps.push_back(permutation_sign_representative(r));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace blockcenter::plesken
