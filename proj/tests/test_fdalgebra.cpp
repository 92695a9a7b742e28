#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "blockcenter/fdalgebra.hpp"
#include "blockcenter/presentation.hpp"
#include "oracles.hpp"

using namespace blockcenter;
using namespace blockcenter::fd;

namespace {

std::string algebra_path(const std::string& name) { return std::string(BLOCKCENTER_DATA_DIR) + "/algebras/" + name; }

FinDimAlgebra w_table() { return load_algebra(std::string(BLOCKCENTER_DATA_DIR) + "/paper/w_table.txt"); }

Subspace span_of(const FinDimAlgebra& a, std::vector<Vec> rows) { return Subspace::span(a.dim(), a.p(), std::move(rows)); }

Subspace basis_span(const FinDimAlgebra& a, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> rows;
  for (auto i : idx) rows.push_back(a.basis_vector(i));
  return span_of(a, rows);
}

/// Group algebra rewritten on {1} + {g - 1}.
FinDimAlgebra augmentation_presented(const FinDimAlgebra& a) {
  std::vector<Vec> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec v = a.basis_vector(i);
    if (i != a.unit_index()) v[a.unit_index()] = a.p() - 1;
    rows.push_back(v);
    labels.push_back(i == a.unit_index() ? "1" : a.labels()[i] + "-1");
  }
  return change_basis(a, rows, labels, a.unit_index());
}

/// Local symmetric algebras shipped as examples, presented locally.
std::vector<std::pair<std::string, FinDimAlgebra>> local_symmetric_examples() {
  std::vector<std::pair<std::string, FinDimAlgebra>> out;
  for (const char* g : {"gf2_c2xc2.txt", "gf2_c4.txt", "gf3_c3.txt", "gf2_d8.txt", "gf2_q8.txt"})
    out.emplace_back(g, augmentation_presented(load_algebra(algebra_path(g))));
  for (const char* t : {"gf2_x2.txt", "gf2_x3.txt"}) out.emplace_back(t, load_algebra(algebra_path(t)));
  return out;
}

FinDimAlgebra truncated(Elem p, unsigned n) { return monomial_algebra(p, {"x"}, {{n}}); }

std::set<oracle::PVec> elements(const Subspace& s) {
  return oracle::elements_of(s.basis(), s.ambient_dim(), s.characteristic());
}

Subspace random_subspace(std::mt19937_64& rng, const FinDimAlgebra& a) {
  std::uniform_int_distribution<std::size_t> count(0, a.dim());
  std::uniform_int_distribution<Elem> coef(0, a.p() - 1);
  std::vector<Vec> rows(count(rng), Vec(a.dim()));
  for (auto& r : rows)
    for (auto& x : r) x = coef(rng);
  return span_of(a, rows);
}

}  // namespace

TEST_CASE("W-table radical, series and socle") {
  const auto w = w_table();
  CHECK(w.is_associative());
  CHECK(w.is_commutative());
  const auto j = radical(w);
  CHECK(j == basis_span(w, {1, 2, 3, 4, 5, 6, 7}));
  const auto series = radical_series(w);
  CHECK(series_dims(series) == std::vector<std::size_t>{8, 7, 3, 0});
  CHECK(series[2] == basis_span(w, {5, 6, 7}));
  CHECK(socle(w, Side::Left) == basis_span(w, {5, 6, 7}));
  CHECK(socle(w, Side::TwoSided) == series[2]);
}

TEST_CASE("W-table Kulshammer spaces agree with exhaustive squaring") {
  const auto w = w_table();
  std::set<oracle::PVec> squares_vanish;
  for (const auto& v : oracle::all_elements(8, 2)) {
    const auto sq = oracle::alg_mul(w, v, v);
    if (sq == oracle::PVec(8, 0)) squares_vanish.insert(v);
  }
  CHECK(squares_vanish.size() == 128);
  const auto t1 = kulshammer_T(w, 1);
  CHECK(elements(t1) == squares_vanish);
  CHECK(t1 == radical(w));
  CHECK(kulshammer_T(w, 0) == commutator_space(w));
  CHECK(kulshammer_T(w, 5) == radical(w) + commutator_space(w));
}

TEST_CASE("Kulshammer spaces on group algebras") {
  for (const auto& [name, a] : local_symmetric_examples()) {
    if (a.p() != 2) {
      CHECK_THROWS_AS(kulshammer_T(a, 1), Error);
      continue;
    }
    CAPTURE(name);
    const auto comm = commutator_space(a);
    CHECK(kulshammer_T(a, 0) == comm);
    Subspace prev = comm;
    for (unsigned n = 1; n <= 4; ++n) {
      const auto t = kulshammer_T(a, n);
      CHECK(t.contains(prev));
      std::set<oracle::PVec> brute;
      for (const auto& v : oracle::all_elements(a.dim(), 2)) {
        oracle::PVec x = v;
        for (unsigned k = 0; k < n; ++k) x = oracle::alg_mul(a, x, x);
        Vec xv(x.begin(), x.end());
        if (comm.contains(xv)) brute.insert(v);
      }
      CHECK(elements(t) == brute);
      prev = t;
    }
    CHECK(kulshammer_T(a, 8) == radical(a) + comm);
  }
}

TEST_CASE("truncated polynomial algebras") {
  const auto x2 = truncated(2, 2);
  CHECK(radical(x2) == basis_span(x2, {1}));
  const auto x4 = truncated(2, 4);
  CHECK(series_dims(radical_series(x4)) == std::vector<std::size_t>{4, 3, 2, 1, 0});
  CHECK(loewy_vector(radical_series(x4)) == std::vector<std::size_t>{1, 1, 1, 1});
  const auto x3 = truncated(2, 3);
  CHECK(socle(x3, Side::Left) == basis_span(x3, {2}));
}

TEST_CASE("CASE_I_II model: radical, layers and socle") {
  const auto a = pres::case12_model();
  CHECK(local_radical(a).dim() == 7);
  CHECK(series_dims(radical_series(a, local_radical(a))) == std::vector<std::size_t>{8, 7, 1, 0});
  const auto soc = socle(a, Side::Left, local_radical(a));
  CHECK(soc.dim() == 5);
  // annihilator oracle: v with v * w = 0 for every w in J
  std::set<oracle::PVec> brute;
  const auto jb = local_radical(a).basis();
  for (const auto& v : oracle::all_elements(8, 2)) {
    bool kills = true;
    for (const auto& w : jb) kills = kills && oracle::alg_mul(a, v, oracle::to_pvec(w)) == oracle::PVec(8, 0);
    if (kills) brute.insert(v);
  }
  CHECK(elements(soc) == brute);
  CHECK_THROWS_AS(find_symmetrizing_form(a), Error);
  CHECK(search_symmetrizing_form(a).exhaustive);
}

TEST_CASE("commutator spaces") {
  CHECK(commutator_space(w_table()).is_zero());

  auto unit_matrix = [](std::size_t i, std::size_t j) {
    std::vector<Vec> m(2, Vec(2, 0));
    m[i][j] = 1;
    return m;
  };
  const auto m2 = generated_matrix_algebra(2, {unit_matrix(0, 0), unit_matrix(0, 1), unit_matrix(1, 0)});
  REQUIRE(m2.dim() == 4);
  const auto comm = commutator_space(m2);
  CHECK(comm.dim() == 3);
  std::vector<oracle::PVec> pairs;
  const auto all = oracle::all_elements(4, 2);
  for (const auto& x : all)
    for (const auto& y : all) {
      auto xy = oracle::alg_mul(m2, x, y), yx = oracle::alg_mul(m2, y, x);
      for (std::size_t k = 0; k < 4; ++k) xy[k] = oracle::modp(xy[k] - yx[k], 2);
      pairs.push_back(xy);
    }
  CHECK(oracle::rank_modp(pairs, 2) == 3);

  // 1, x, y, w with xy = w and all other radical products zero
  const auto nc = FinDimAlgebra::from_products(2, {"1", "x", "y", "w"}, 0, [](std::size_t i, std::size_t j) {
    Vec v(4, 0);
    if (i == 0) v[j] = 1;
    else if (j == 0) v[i] = 1;
    else if (i == 1 && j == 2) v[3] = 1;
    return v;
  });
  CHECK(nc.is_associative());
  CHECK(!nc.is_commutative());
  CHECK(commutator_space(nc) == basis_span(nc, {3}));
}

TEST_CASE("center agrees with exhaustive commutation") {
  std::vector<FinDimAlgebra> algebras;
  for (const auto& [name, a] : local_symmetric_examples()) algebras.push_back(a);
  algebras.push_back(load_algebra(algebra_path("gf2_d8.txt")));
  algebras.push_back(w_table());
  algebras.push_back(pres::case3_model());
  for (const auto& a : algebras) {
    std::set<oracle::PVec> brute;
    for (const auto& v : oracle::all_elements(a.dim(), a.p())) {
      bool central = true;
      for (std::size_t i = 0; i < a.dim() && central; ++i) {
        const auto e = oracle::to_pvec(a.basis_vector(i));
        central = oracle::alg_mul(a, v, e) == oracle::alg_mul(a, e, v);
      }
      if (central) brute.insert(v);
    }
    CHECK(elements(center(a)) == brute);
  }
}

TEST_CASE("symmetrizing forms") {
  const auto x2 = truncated(2, 2);
  const auto s = find_symmetrizing_form(x2);
  CHECK(s.coeffs == Vec{0, 1});
  CHECK(is_symmetric_form(x2, s));
  CHECK(is_nondegenerate_form(x2, s));

  // GF(2) x GF(2) on {1, e} with e idempotent
  const auto split = FinDimAlgebra::from_products(2, {"1", "e"}, 0, [](std::size_t i, std::size_t j) {
    Vec v(2, 0);
    v[(i == 1 || j == 1) ? 1 : 0] = 1;
    return v;
  });
  const auto t = find_symmetrizing_form(split);
  CHECK(is_nondegenerate_form(split, t));
  // sum of coordinates in the idempotent basis e, 1 - e
  CHECK(is_nondegenerate_form(split, LinearForm{Vec{0, 1}}));

  for (const auto& [name, a] : local_symmetric_examples()) {
    CAPTURE(name);
    const auto f = find_symmetrizing_form(a);
    CHECK(is_symmetric_form(a, f));
    CHECK(is_nondegenerate_form(a, f));
  }
  CHECK_THROWS_AS(find_symmetrizing_form(w_table()), Error);
}

TEST_CASE("perp spaces in a truncated polynomial algebra") {
  const auto x4 = truncated(2, 4);
  const LinearForm s{Vec{0, 0, 0, 1}};
  const auto series = radical_series(x4);
  CHECK(perp_space(x4, s, series[0]).is_zero());
  CHECK(perp_space(x4, s, series[1]) == basis_span(x4, {3}));
  const auto soc2 = perp_space(x4, s, series[2]);
  CHECK(soc2 == basis_span(x4, {2, 3}));
  CHECK(soc2 == annihilator(x4, series[2], Side::Left));
  CHECK_THROWS_AS(perp_space(x4, LinearForm{Vec{0, 0, 1, 0}}, series[1]), Error);
}

TEST_CASE("perp is an involution on random subspaces") {
  std::mt19937_64 rng(50);
  const auto examples = local_symmetric_examples();
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = examples[trial % examples.size()].second;
    const auto s = find_symmetrizing_form(a);
    const auto u = random_subspace(rng, a);
    const auto perp = perp_space(a, s, u);
    REQUIRE(perp.dim() + u.dim() == a.dim());
    REQUIRE(perp_space(a, s, perp) == u);
  }
}

TEST_CASE("local symmetric algebra identities") {
  for (const auto& [name, a] : local_symmetric_examples()) {
    CAPTURE(name);
    const auto j = local_radical(a);
    const auto series = radical_series(a, j);
    const auto soc = socle(a, Side::Left, j);
    const auto z = center(a);
    const auto comm = commutator_space(a);

    CHECK(soc.dim() == 1);
    CHECK(soc == socle(a, Side::Right, j));
    CHECK(z.contains(soc));
    const auto jz = j.intersect(z);
    CHECK(jz.dim() + 1 == z.dim());
    CHECK(product_space(a, soc, jz).is_zero());
    CHECK(soc.intersect(comm).is_zero());
    CHECK(a.dim() == z.dim() + comm.dim());
    CHECK(series[series.size() - 2] == soc);
    CHECK(series.size() >= 3);
    CHECK(series[2].contains(comm));

    // layers of dimension one force the previous power into the center
    for (std::size_t n = 1; n + 1 < series.size(); ++n)
      if (series[n].dim() - series[n + 1].dim() == 1) CHECK(z.contains(series[n - 1]));

    // elements of soc^2 = (J^2)^perp multiply J into the socle, commuting
    const auto s = find_symmetrizing_form(a);
    const auto soc2 = perp_space(a, s, series[2]);
    CHECK(soc2 == annihilator(a, series[2], Side::Left));
    for (const auto& x : soc2.basis())
      for (const auto& y : j.basis()) {
        const auto xy = a.multiply(x, y);
        CHECK(soc.contains(xy));
        CHECK(xy == a.multiply(y, x));
      }
  }
}

TEST_CASE("products of generators span the radical layers") {
  std::mt19937_64 rng(32);
  int done = 0;
  while (done < 25) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<std::vector<Vec>> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Vec> m(5, Vec(5, 0));
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = r + 1; c < 5; ++c) m[r][c] = static_cast<Elem>(bit(rng));
      gens.push_back(m);
    }
    const auto a = generated_matrix_algebra(2, gens);
    if (a.dim() > 8 || a.dim() < 3) continue;
    ++done;
    REQUIRE(a.is_associative());
    const auto j = radical(a);
    const auto series = radical_series(a, j);
    const auto x1 = series[1].complement_basis(series[2]);
    std::vector<Vec> layer = x1;
    for (std::size_t n = 1; n + 1 < series.size(); ++n) {
      REQUIRE(span_of(a, layer) + series[n + 1] == series[n]);
      std::vector<Vec> left, right;
      for (const auto& g : x1)
        for (const auto& m : layer) {
          left.push_back(a.multiply(g, m));
          right.push_back(a.multiply(m, g));
        }
      if (n + 2 < series.size()) {
        REQUIRE(span_of(a, left) + series[n + 2] == series[n + 1]);
        REQUIRE(span_of(a, right) + series[n + 2] == series[n + 1]);
      }
      layer = left;
    }
  }
}

TEST_CASE("commutators lie in J^2 for local algebras") {
  for (const auto& [name, a] : local_symmetric_examples()) {
    const auto series = radical_series(a, local_radical(a));
    CHECK(series[2].contains(commutator_space(a)));
  }
}

TEST_CASE("monomial algebras and file round trip") {
  const auto a = monomial_algebra(2, {"x", "z"}, {{3, 0}, {1, 1}, {0, 2}});
  CHECK(a.dim() == 4);
  CHECK(a.labels() == std::vector<std::string>{"1", "x", "z", "x^2"});
  std::istringstream in(format_algebra(a));
  const auto b = read_algebra(in);
  CHECK(format_algebra(b) == format_algebra(a));
  const auto shipped = load_algebra(algebra_path("gf2_x3_xz_z2.txt"));
  CHECK(format_algebra(shipped) == format_algebra(a));

  CHECK(format_element(w_table(), w_table().add(w_table().basis_vector(1), w_table().basis_vector(5))) == "W1 + W5");
  CHECK(format_element(w_table(), w_table().zero()) == "0");
}

TEST_CASE("rejected inputs") {
  std::istringstream bad_assoc("DIM 2 P 2 UNIT 0\n1 a\n0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 1\n");
  CHECK_NOTHROW(read_algebra(bad_assoc));  // a^2 = 1 + a is the field of order 4, fine
  std::istringstream nonassoc(
      "DIM 3 P 2 UNIT 0\n1 a b\n0 0 0 1\n0 1 1 1\n0 2 2 1\n1 0 1 1\n2 0 2 1\n1 1 2 1\n2 1 1 1\n");
  CHECK_THROWS_AS(read_algebra(nonassoc), Error);
  CHECK_THROWS_AS(FinDimAlgebra(4, 1, {"1"}, {1}, 0), Error);
  const auto grp = load_algebra(algebra_path("gf2_c4.txt"));
  CHECK_THROWS_AS(radical(grp), Error);
  CHECK(local_radical(grp).dim() == 3);
}
