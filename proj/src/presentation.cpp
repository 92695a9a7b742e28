#include "blockcenter/presentation.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "blockcenter/errors.hpp"

namespace blockcenter::pres {

namespace {

using Mask = std::uint32_t;

Presentation make_case12() {
  Presentation p;
  p.name = "CASE_I_II";
  p.generators = {"X", "Y", "Z1", "Z2", "Z3", "Z4"};
  p.relations.push_back({{0, 0}, {}});
  p.relations.push_back({{1, 1}, {}});
  for (std::size_t z = 2; z < 6; ++z) {
    p.relations.push_back({{0, z}, {z}});
    p.relations.push_back({{1, z}, {z}});
  }
  for (std::size_t i = 2; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) p.relations.push_back({{i, j}});
  p.basis = {{}, {0}, {1}, {0, 1}, {2}, {3}, {4}, {5}};
  p.search_order = {0, 1, 2, 3, 4, 5};
  p.definitions.assign(6, std::nullopt);
  p.chains = {{0, 1}, {2, 3}, {3, 4}, {4, 5}};
  return p;
}

Presentation make_case3() {
  Presentation p;
  p.name = "CASE_III";
  p.generators = {"X", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6"};
  p.relations.push_back({{0, 0}, {}});
  for (std::size_t i = 1; i <= 3; ++i) p.relations.push_back({{0, 2 * i}, {2 * i - 1}});
  for (std::size_t i = 1; i < 7; ++i)
    for (std::size_t j = i; j < 7; ++j) p.relations.push_back({{i, j}});
  p.basis = {{}, {0}, {1}, {2}, {3}, {4}, {5}, {6}};
  p.search_order = {0, 2, 4, 6};
  p.definitions.assign(7, std::nullopt);
  for (std::size_t i = 1; i <= 3; ++i) p.definitions[2 * i - 1] = Polynomial{{0, 2 * i}};
  p.chains = {{2, 4}, {4, 6}};
  return p;
}

class MaskAlgebra {
 public:
  explicit MaskAlgebra(const fd::FinDimAlgebra& a) : dim_(a.dim()), size_(Mask{1} << a.dim()) {
    std::vector<Mask> basis_prod(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) basis_prod[i * dim_ + j] = to_mask(a.basis_product(i, j));
    table_.resize(std::size_t{size_} * size_);
    // Bilinear extension, built incrementally on the lowest set bit.
    for (Mask x = 1; x < size_; ++x) {
      const std::size_t i = static_cast<std::size_t>(__builtin_ctz(x));
      const Mask rest = x & (x - 1);
      for (Mask y = 1; y < size_; ++y) {
        const std::size_t j = static_cast<std::size_t>(__builtin_ctz(y));
        const Mask yrest = y & (y - 1);
        Mask v = table_[std::size_t{rest} * size_ + y] ^ table_[std::size_t{Mask{1} << i} * size_ + yrest];
        v ^= basis_prod[i * dim_ + j];
        table_[std::size_t{x} * size_ + y] = v;
      }
    }
    unit_ = to_mask(a.unit());
  }

  Mask mul(Mask x, Mask y) const { return table_[std::size_t{x} * size_ + y]; }
  Mask unit() const { return unit_; }
  Mask size() const { return size_; }
  std::size_t dim() const { return dim_; }

  static Mask to_mask(const fd::Vec& v) {
    Mask m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] & 1U) m |= Mask{1} << i;
    return m;
  }
  fd::Vec to_vec(Mask m) const {
    fd::Vec v(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = (m >> i) & 1U;
    return v;
  }

 private:
  std::size_t dim_;
  Mask size_;
  std::vector<Mask> table_;
  Mask unit_ = 0;
};

Mask eval_monomial(const MaskAlgebra& a, const Monomial& m, const std::vector<Mask>& img) {
  Mask r = a.unit();
  for (auto g : m) r = a.mul(r, img[g]);
  return r;
}

Mask eval_poly(const MaskAlgebra& a, const Polynomial& p, const std::vector<Mask>& img) {
  Mask r = 0;
  for (const auto& m : p) r ^= eval_monomial(a, m, img);
  return r;
}

/// GF(2) basis over masks, pivot = highest bit.
struct MaskBasis {
  std::array<Mask, 32> rows{};
  bool insert(Mask v) {
    while (v != 0) {
      const int top = 31 - __builtin_clz(v);
      if (rows[top] == 0) {
        rows[top] = v;
        return true;
      }
      v ^= rows[top];
    }
    return false;
  }
};

struct Schedule {
  std::vector<std::size_t> ready;                      // per generator: search level
  std::vector<std::vector<std::size_t>> defined_at;    // per level: defined generators
  std::vector<std::vector<std::size_t>> relations_at;  // per level
  std::vector<std::vector<std::size_t>> basis_at;      // per level
  std::vector<std::vector<std::size_t>> chains_at;     // per level
};

std::size_t poly_level(const Polynomial& p, const std::vector<std::size_t>& ready) {
  std::size_t lvl = 0;
  for (const auto& m : p)
    for (auto g : m) lvl = std::max(lvl, ready[g]);
  return lvl;
}

Schedule schedule(const Presentation& pres) {
  const std::size_t ng = pres.generators.size();
  const std::size_t levels = pres.search_order.size();
  Schedule s;
  s.ready.assign(ng, levels);
  for (std::size_t l = 0; l < levels; ++l) s.ready[pres.search_order[l]] = l;
  for (std::size_t g = 0; g < ng; ++g) {
    if (!pres.definitions[g]) continue;
    s.ready[g] = poly_level(*pres.definitions[g], s.ready);
  }
  s.defined_at.resize(levels);
  s.relations_at.resize(levels);
  s.basis_at.resize(levels);
  s.chains_at.resize(levels);
  for (std::size_t g = 0; g < ng; ++g)
    if (pres.definitions[g]) s.defined_at[s.ready[g]].push_back(g);
  for (std::size_t r = 0; r < pres.relations.size(); ++r)
    s.relations_at[poly_level(pres.relations[r], s.ready)].push_back(r);
  for (std::size_t b = 0; b < pres.basis.size(); ++b)
    s.basis_at[poly_level({pres.basis[b]}, s.ready)].push_back(b);
  for (std::size_t c = 0; c < pres.chains.size(); ++c)
    s.chains_at[std::max(s.ready[pres.chains[c].first], s.ready[pres.chains[c].second])].push_back(c);
  return s;
}

}  // namespace

const Presentation& presentation(PresentationId id) {
  static const Presentation case12 = make_case12();
  static const Presentation case3 = make_case3();
  return id == PresentationId::CaseI_II ? case12 : case3;
}

std::optional<PresentationId> parse_presentation_id(const std::string& s) {
  if (s == "case12" || s == "CASE_I_II") return PresentationId::CaseI_II;
  if (s == "case3" || s == "CASE_III") return PresentationId::CaseIII;
  return std::nullopt;
}

std::string presentation_name(PresentationId id) { return presentation(id).name; }

bool verify_witness(const fd::FinDimAlgebra& a, const Presentation& pres, const Witness& w) {
  if (a.p() != 2 || a.dim() != pres.dim() || w.images.size() != pres.generators.size()) return false;
  auto eval = [&](const Monomial& m) {
    fd::Vec r = a.unit();
    for (auto g : m) r = a.multiply(r, w.images[g]);
    return r;
  };
  for (const auto& rel : pres.relations) {
    fd::Vec sum = a.zero();
    for (const auto& m : rel) sum = a.add(sum, eval(m));
    if (sum != a.zero()) return false;
  }
  std::vector<fd::Vec> rows;
  for (const auto& m : pres.basis) rows.push_back(eval(m));
  return gf::rank(rows, a.dim(), 2) == a.dim();
}

std::optional<Witness> match_presentation(const fd::FinDimAlgebra& a, const Presentation& pres) {
  if (a.p() != 2) throw Error(ErrorKind::InvalidArgument, "presentation matching needs characteristic 2");
  if (a.dim() != pres.dim())
    throw Error(ErrorKind::WrongDimension, "algebra has dimension " + std::to_string(a.dim()) + ", " + pres.name +
                                               " has dimension " + std::to_string(pres.dim()));
  if (a.dim() > 12) throw Error(ErrorKind::InvalidArgument, "dimension too large for exhaustive matching");
  if (!a.is_commutative()) throw Error(ErrorKind::InvalidArgument, "algebra is not commutative");

  const MaskAlgebra alg(a);
  const Schedule sched = schedule(pres);
  const std::size_t levels = pres.search_order.size();
  std::vector<Mask> img(pres.generators.size(), 0);

  auto level_ok = [&](std::size_t lvl, MaskBasis& basis) {
    for (auto g : sched.defined_at[lvl]) img[g] = eval_poly(alg, *pres.definitions[g], img);
    for (auto c : sched.chains_at[lvl])
      if (!(img[pres.chains[c].first] < img[pres.chains[c].second])) return false;
    for (auto r : sched.relations_at[lvl])
      if (eval_poly(alg, pres.relations[r], img) != 0) return false;
    for (auto b : sched.basis_at[lvl])
      if (!basis.insert(eval_monomial(alg, pres.basis[b], img))) return false;
    return true;
  };

  // Candidates per level filtered by the relations that only involve that
  // level's generator and its dependents.
  std::vector<std::vector<Mask>> candidates(levels);
  for (std::size_t lvl = 0; lvl < levels; ++lvl) {
    const std::size_t g = pres.search_order[lvl];
    std::vector<std::size_t> local;
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
      bool only_g = true;
      for (const auto& m : pres.relations[r])
        for (auto h : m) only_g = only_g && h == g;
      if (only_g) local.push_back(r);
    }
    for (Mask x = 0; x < alg.size(); ++x) {
      img[g] = x;
      bool ok = true;
      for (auto r : local) ok = ok && eval_poly(alg, pres.relations[r], img) == 0;
      if (ok) candidates[lvl].push_back(x);
    }
  }
  std::fill(img.begin(), img.end(), 0);

  std::function<bool(std::size_t, const MaskBasis&)> dfs = [&](std::size_t lvl, const MaskBasis& basis) -> bool {
    if (lvl == levels) return true;
    const std::size_t g = pres.search_order[lvl];
    for (Mask x : candidates[lvl]) {
      img[g] = x;
      MaskBasis next = basis;
      if (level_ok(lvl, next) && dfs(lvl + 1, next)) return true;
    }
    return false;
  };
  if (!dfs(0, MaskBasis{})) return std::nullopt;

  Witness w;
  for (auto m : img) w.images.push_back(alg.to_vec(m));
  return w;
}

std::string format_witness(const fd::FinDimAlgebra& a, const Presentation& pres, const Witness& w) {
  std::string out;
  for (std::size_t g = 0; g < pres.generators.size(); ++g)
    out += pres.generators[g] + " -> " + fd::format_element(a, w.images[g]) + "\n";
  return out;
}

namespace {

fd::Vec by_labels(const fd::FinDimAlgebra& a, const std::vector<std::string>& terms) {
  fd::Vec v = a.zero();
  for (const auto& t : terms) {
    auto it = std::find(a.labels().begin(), a.labels().end(), t);
    if (it == a.labels().end()) throw Error(ErrorKind::InvalidArgument, "no basis element " + t);
    v[static_cast<std::size_t>(it - a.labels().begin())] ^= 1U;
  }
  return v;
}

}  // namespace

fd::FinDimAlgebra case12_local_model() {
  std::vector<std::vector<unsigned>> rels;
  auto mono = [](std::initializer_list<std::pair<std::size_t, unsigned>> e) {
    std::vector<unsigned> m(6, 0);
    for (auto [v, k] : e) m[v] += k;
    return m;
  };
  rels.push_back(mono({{0, 2}}));
  rels.push_back(mono({{1, 2}}));
  for (std::size_t z = 2; z < 6; ++z) {
    rels.push_back(mono({{0, 1}, {z, 1}}));
    rels.push_back(mono({{1, 1}, {z, 1}}));
    for (std::size_t w = z; w < 6; ++w) rels.push_back(mono({{z, 1}, {w, 1}}));
  }
  return fd::monomial_algebra(2, {"x", "y", "z1", "z2", "z3", "z4"}, rels);
}

fd::FinDimAlgebra case12_model() {
  const auto m = case12_local_model();
  std::vector<fd::Vec> basis = {
      by_labels(m, {"1"}),      by_labels(m, {"1", "x"}), by_labels(m, {"1", "y"}),
      by_labels(m, {"1", "x", "y", "xy"}),
      by_labels(m, {"z1"}),     by_labels(m, {"z2"}),     by_labels(m, {"z3"}), by_labels(m, {"z4"})};
  return fd::change_basis(m, basis, {"1", "X", "Y", "XY", "Z1", "Z2", "Z3", "Z4"}, 0);
}

fd::FinDimAlgebra case3_model() {
  std::vector<std::vector<unsigned>> rels;
  rels.push_back({2, 0, 0, 0});
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      std::vector<unsigned> m(4, 0);
      ++m[i];
      ++m[j];
      rels.push_back(m);
    }
  const auto m = fd::monomial_algebra(2, {"x", "u1", "u2", "u3"}, rels);
  std::vector<fd::Vec> basis = {by_labels(m, {"1"}), by_labels(m, {"1", "x"})};
  for (const char* u : {"u1", "u2", "u3"}) {
    basis.push_back(by_labels(m, {u, std::string("x") + u}));
    basis.push_back(by_labels(m, {u}));
  }
  return fd::change_basis(m, basis, {"1", "X", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6"}, 0);
}

Witness identity_witness(const fd::FinDimAlgebra& model, const Presentation& pres) {
  Witness w;
  for (const auto& g : pres.generators) w.images.push_back(by_labels(model, {g}));
  return w;
}

LocalInvariants local_invariants(const fd::FinDimAlgebra& a) {
  LocalInvariants inv;
  const fd::Subspace j = fd::commutative_radical(a);
  const auto series = fd::radical_series(a, j);
  inv.radical_dims = fd::series_dims(series);
  inv.loewy = fd::loewy_vector(series);
  inv.loewy_length = inv.loewy.size();
  inv.socle_dim = fd::socle(a, fd::Side::TwoSided, j).dim();
  const std::size_t d = j.dim();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < d && total <= (1U << 20); ++k) total *= a.p();
  if (total > (1U << 20)) return inv;
  const gf::Field f{a.p()};
  std::vector<gf::Elem> coeffs(d, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    fd::Vec w = a.zero();
    for (std::size_t k = 0; k < d; ++k) {
      const auto c = static_cast<gf::Elem>(rest % a.p());
      rest /= a.p();
      for (std::size_t t = 0; t < a.dim(); ++t) w[t] = f.add(w[t], f.mul(c, j.basis()[k][t]));
    }
    if (a.multiply(w, w) == a.zero()) ++inv.square_zero_count;
  }
  return inv;
}

}  // namespace blockcenter::pres
