#include "blockcenter/resolution.hpp"

#include "blockcenter/errors.hpp"

namespace blockcenter::res {

namespace {

/// Right multiplication by basis element t as a dim x dim matrix on rows.
std::vector<std::vector<gf::Vec>> right_tables(const fd::FinDimAlgebra& a) {
  std::vector<std::vector<gf::Vec>> r(a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t)
    for (std::size_t i = 0; i < a.dim(); ++i) r[t].push_back(a.basis_product(i, t));
  return r;
}

gf::Vec act_basis(const std::vector<gf::Vec>& table, const gf::Vec& v, std::size_t d, const gf::Field& f) {
  gf::Vec out(v.size(), 0);
  for (std::size_t c = 0; c * d < v.size(); ++c)
    for (std::size_t i = 0; i < d; ++i) {
      const gf::Elem vi = v[c * d + i];
      if (vi == 0) continue;
      const auto& row = table[i];
      for (std::size_t m = 0; m < d; ++m)
        if (row[m] != 0) out[c * d + m] = f.add(out[c * d + m], f.mul(vi, row[m]));
    }
  return out;
}

}  // namespace

std::vector<unsigned long long> ResolutionTrace::fib() const {
  std::vector<unsigned long long> f;
  unsigned long long prev = 1, cur = 1;  // f_-1, f_0
  for (std::size_t i = 0; i < n.size(); ++i) {
    f.push_back(cur);
    const unsigned long long next = prev + cur;
    prev = cur;
    cur = next;
  }
  return f;
}

gf::Vec act_right(const fd::FinDimAlgebra& a, const gf::Vec& v, const gf::Vec& x) {
  const std::size_t d = a.dim();
  gf::Vec out(v.size(), 0);
  for (std::size_t c = 0; c * d < v.size(); ++c) {
    gf::Vec block(v.begin() + static_cast<std::ptrdiff_t>(c * d), v.begin() + static_cast<std::ptrdiff_t>((c + 1) * d));
    gf::Vec prod = a.multiply(block, x);
    std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(c * d));
  }
  return out;
}

gf::Subspace times_radical(const fd::FinDimAlgebra& a, const ModuleOverLocal& m, const gf::Subspace& j) {
  std::vector<gf::Vec> gens;
  for (const auto& v : m.span.basis())
    for (const auto& x : j.basis()) gens.push_back(act_right(a, v, x));
  return gf::Subspace::span(m.free_rank * a.dim(), a.p(), std::move(gens));
}

ResolutionTrace minimal_resolution_dims(const fd::FinDimAlgebra& a, std::size_t steps) {
  const gf::Subspace j = fd::local_radical(a);
  const std::size_t d = a.dim();
  const gf::Elem p = a.p();
  const gf::Field f{p};
  const auto tables = right_tables(a);

  // Right multiplication by a radical element, as a combination of tables.
  std::vector<std::vector<gf::Vec>> rad_tables;
  for (const auto& x : j.basis()) {
    std::vector<gf::Vec> t(d, gf::Vec(d, 0));
    for (std::size_t s = 0; s < d; ++s)
      if (x[s] != 0)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t m = 0; m < d; ++m) t[i][m] = f.add(t[i][m], f.mul(x[s], tables[s][i][m]));
    rad_tables.push_back(std::move(t));
  }

  ResolutionTrace trace;
  trace.n.push_back(1);
  // K_0 = J inside A^1.
  std::size_t rank = 1;
  std::vector<gf::Vec> kernel = j.basis();
  trace.kernel_dims.push_back(kernel.size());

  for (std::size_t step = 1; step <= steps; ++step) {
    if (kernel.empty()) {
      trace.n.push_back(0);
      trace.terminated = true;
      break;
    }
    // Generators of K: a complement of K J inside K.
    gf::IncrementalBasis kj(rank * d, p);
    for (const auto& v : kernel)
      for (const auto& t : rad_tables) kj.insert(act_basis(t, v, d, f));
    const std::size_t kj_dim = kj.dim();
    std::vector<gf::Vec> generators;
    for (const auto& v : kernel)
      if (kj.insert(v)) generators.push_back(v);
    const std::size_t n = generators.size();
    if (kj_dim + n != kernel.size())
      throw Error(ErrorKind::InvalidArgument, "module bookkeeping failed: K J not inside K");
    trace.n.push_back(n);
    if (step == steps) break;

    if (n * d > kMaxModuleDim) {
      trace.aborted = true;
      break;
    }
    // Cover map A^n -> K, e_k b_t -> g_k b_t; rows indexed by (k, t).
    std::vector<gf::Vec> cover;
    cover.reserve(n * d);
    for (const auto& g : generators)
      for (std::size_t t = 0; t < d; ++t) cover.push_back(act_basis(tables[t], g, d, f));
    std::vector<gf::Vec> next = gf::left_nullspace(cover, rank * d, p);
    if (next.size() + kernel.size() != n * d)
      throw Error(ErrorKind::InvalidArgument, "cover map is not onto the kernel");
    // Minimality: every kernel vector lies in A^n J.
    for (const auto& v : next)
      for (std::size_t c = 0; c < n; ++c) {
        gf::Vec block(v.begin() + static_cast<std::ptrdiff_t>(c * d), v.begin() + static_cast<std::ptrdiff_t>((c + 1) * d));
        if (!j.contains(block)) throw Error(ErrorKind::InvalidArgument, "resolution step is not minimal");
      }
    kernel = std::move(next);
    rank = n;
    trace.kernel_dims.push_back(kernel.size());
  }
  return trace;
}

std::string Certificate::describe() const {
  std::string s = "growth certificate at desk scale: ";
  if (pass) return s + "n_i >= f_i for every computed i";
  s += "n_i < f_i first at i = " + std::to_string(*first_violation);
  if (terminated) s += " (terminated resolution)";
  return s;
}

Certificate fibonacci_certificate(const ResolutionTrace& trace) {
  Certificate c;
  c.terminated = trace.terminated;
  const auto fib = trace.fib();
  for (std::size_t i = 0; i < trace.n.size(); ++i) {
    if (trace.n[i] < fib[i]) {
      c.first_violation = i;
      return c;
    }
  }
  c.pass = true;
  return c;
}

HypothesisResult hypothesis_check(const fd::FinDimAlgebra& a, const gf::Vec& x, const gf::Vec& z,
                                  const std::optional<gf::Vec>& y) {
  const gf::Subspace j = fd::local_radical(a);
  auto require_radical = [&](const gf::Vec& v, const char* name) {
    if (v.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, std::string(name) + " has the wrong length");
    if (!j.contains(v)) throw Error(ErrorKind::NotInRadical, std::string(name) + " is not in J(A)");
  };
  require_radical(x, "x");
  require_radical(z, "z");
  if (y) require_radical(*y, "y");

  HypothesisResult r;
  auto zero_product = [&](const gf::Vec& u, const gf::Vec& v, const std::string& label) {
    if (a.multiply(u, v) != a.zero()) r.failures.push_back(label + " != 0");
  };
  zero_product(x, z, "xz");
  zero_product(z, x, "zx");
  if (y) {
    zero_product(*y, z, "yz");
    zero_product(z, *y, "zy");
  } else {
    zero_product(z, z, "z^2");
  }
  const gf::Subspace j2 = fd::product_space(a, j, j);
  std::vector<gf::Vec> gens = j2.basis();
  gens.push_back(x);
  gens.push_back(z);
  if (y) gens.push_back(*y);
  const std::size_t expected = j2.dim() + (y ? 3 : 2);
  if (gf::Subspace::span(a.dim(), a.p(), gens).dim() != expected)
    r.failures.push_back(y ? "x, y, z dependent modulo J^2" : "x, z dependent modulo J^2");
  r.pass = r.failures.empty();
  return r;
}

}  // namespace blockcenter::res
