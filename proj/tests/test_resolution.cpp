#include <doctest.h>

#include <algorithm>

#include "blockcenter/fdalgebra.hpp"
#include "blockcenter/resolution.hpp"
#include "oracles.hpp"

using namespace blockcenter;
using namespace blockcenter::res;

namespace {

fd::FinDimAlgebra x3_xz_z2() { return fd::monomial_algebra(2, {"x", "z"}, {{3, 0}, {1, 1}, {0, 2}}); }

std::vector<oracle::PVec> radical_rows(const fd::FinDimAlgebra& a) {
  std::vector<oracle::PVec> out;
  const auto j = fd::local_radical(a);
  for (const auto& v : j.basis()) out.push_back(oracle::to_pvec(v));
  return out;
}

/// Square-zero radical of dimension d: {1, e_1..e_d} with e_i e_j = 0.
fd::FinDimAlgebra square_zero(std::size_t d) {
  std::vector<std::vector<unsigned>> rel;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::vector<unsigned> e(d, 0);
      e[i] += 1;
      e[j] += 1;
      rel.push_back(e);
    }
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < d; ++i) vars.push_back("e" + std::to_string(i + 1));
  return fd::monomial_algebra(2, vars, rel);
}

gf::Vec basis(const fd::FinDimAlgebra& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.labels()[i] == label) return a.basis_vector(i);
  FAIL("no basis element " << label);
  return {};
}

}  // namespace

TEST_CASE("shifted Fibonacci numbers") {
  ResolutionTrace t;
  t.n.assign(13, 0);
  const std::vector<unsigned long long> expected{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377};
  CHECK(t.fib() == expected);
}

TEST_CASE("resolution over the prime field terminates") {
  const auto f = fd::monomial_algebra(2, {"x"}, {{1}});
  REQUIRE(f.dim() == 1);
  const auto t = minimal_resolution_dims(f, 5);
  CHECK(t.n == std::vector<std::size_t>{1, 0});
  CHECK(t.terminated);
  const auto c = fibonacci_certificate(t);
  CHECK(!c.pass);
  CHECK(c.first_violation == 1u);
  CHECK(c.terminated);
  CHECK(c.describe().find("terminated resolution") != std::string::npos);
}

TEST_CASE("dual numbers give a periodic resolution") {
  const auto a = fd::monomial_algebra(2, {"x"}, {{2}});
  const auto t = minimal_resolution_dims(a, 10);
  CHECK(t.n == std::vector<std::size_t>(11, 1));
  CHECK(t.n == oracle::resolution_dims(a, radical_rows(a), 10));
  const auto c = fibonacci_certificate(t);
  CHECK(!c.pass);
  CHECK(c.first_violation == 1u);
  CHECK(c.describe().rfind("growth certificate at desk scale", 0) == 0);
}

TEST_CASE("x^3 = xz = z^2 = 0 satisfies the growth hypotheses") {
  const auto a = x3_xz_z2();
  const auto h = hypothesis_check(a, basis(a, "x"), basis(a, "z"));
  CHECK(h.pass);
  CHECK(h.failures.empty());

  const auto t = minimal_resolution_dims(a, 12);
  REQUIRE(t.n.size() == 13);
  // n_i = 2^i from the Poincare series 1 / (1 - 2t); the dense oracle checks the first steps
  for (std::size_t i = 0; i < t.n.size(); ++i) CHECK(t.n[i] == (std::size_t{1} << i));
  const auto head = oracle::resolution_dims(a, radical_rows(a), 7);
  CHECK(std::equal(head.begin(), head.end(), t.n.begin()));
  const auto fib = t.fib();
  for (std::size_t i = 0; i < t.n.size(); ++i) CHECK(t.n[i] >= fib[i]);
  CHECK(fibonacci_certificate(t).pass);
}

TEST_CASE("hypothesis failures") {
  const auto a = x3_xz_z2();
  const auto dup = hypothesis_check(a, basis(a, "x"), basis(a, "x"));
  CHECK(!dup.pass);
  const auto x4 = fd::monomial_algebra(2, {"x"}, {{4}});
  CHECK(!hypothesis_check(x4, basis(x4, "x"), basis(x4, "x^2")).pass);
  CHECK_THROWS_AS(hypothesis_check(a, a.unit(), basis(a, "z")), Error);

  // the three-element variant: x, y, z with z killing x and y
  const auto b = fd::monomial_algebra(2, {"x", "y", "z"}, {{2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}});
  CHECK(hypothesis_check(b, basis(b, "x"), basis(b, "z"), basis(b, "y")).pass);
  CHECK(!hypothesis_check(b, basis(b, "x"), basis(b, "xy"), basis(b, "y")).pass);
}

TEST_CASE("square-zero radicals follow the closed form") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto a = square_zero(d);
    REQUIRE(a.dim() == d + 1);
    const std::size_t steps = d == 3 ? 4 : 7;
    const auto t = minimal_resolution_dims(a, steps);
    std::size_t expect = 1;
    for (std::size_t i = 0; i <= steps; ++i, expect *= d) CHECK(t.n[i] == expect);
    CHECK(t.n == oracle::resolution_dims(a, radical_rows(a), steps));
  }
}

TEST_CASE("resolutions of other local algebras agree with the oracle") {
  const std::string dir = std::string(BLOCKCENTER_DATA_DIR) + "/algebras/";
  for (const char* name : {"gf2_x3.txt", "gf2_c2xc2.txt", "gf2_c4.txt", "gf3_c3.txt"}) {
    CAPTURE(name);
    const auto a = fd::load_algebra(dir + name);
    const auto t = minimal_resolution_dims(a, 6);
    CHECK(t.n == oracle::resolution_dims(a, radical_rows(a), 6));
    for (std::size_t i = 1; i < t.kernel_dims.size(); ++i) CHECK(t.kernel_dims[i] + t.kernel_dims[i - 1] == t.n[i] * a.dim());
  }
}

TEST_CASE("hypotheses imply the certificate on random commutative examples") {
  for (unsigned e = 2; e <= 5; ++e) {
    const auto a = fd::monomial_algebra(2, {"x", "z"}, {{e, 0}, {1, 1}, {0, 2}});
    REQUIRE(hypothesis_check(a, basis(a, "x"), basis(a, "z")).pass);
    CHECK(fibonacci_certificate(minimal_resolution_dims(a, 9)).pass);
  }
}
