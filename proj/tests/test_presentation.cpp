#include <doctest.h>

#include "blockcenter/fdalgebra.hpp"
#include "blockcenter/presentation.hpp"
#include "oracles.hpp"

using namespace blockcenter;
using namespace blockcenter::pres;

namespace {

fd::FinDimAlgebra w_table() { return fd::load_algebra(std::string(BLOCKCENTER_DATA_DIR) + "/paper/w_table.txt"); }

// Evaluates a polynomial in the witness images with the oracle multiplication.
oracle::PVec evaluate(const fd::FinDimAlgebra& a, const Polynomial& poly, const Witness& w) {
  oracle::PVec total(a.dim(), 0);
  for (const auto& mono : poly) {
    oracle::PVec v = oracle::to_pvec(a.unit());
    for (auto g : mono) v = oracle::alg_mul(a, v, oracle::to_pvec(w.images[g]));
    for (std::size_t k = 0; k < a.dim(); ++k) total[k] = (total[k] + v[k]) % 2;
  }
  return total;
}

bool oracle_accepts(const fd::FinDimAlgebra& a, const Presentation& p, const Witness& w) {
  for (const auto& rel : p.relations)
    if (evaluate(a, rel, w) != oracle::PVec(a.dim(), 0)) return false;
  std::vector<oracle::PVec> basis;
  for (const auto& mono : p.basis) basis.push_back(evaluate(a, Polynomial{mono}, w));
  return oracle::rank_modp(basis, 2) == a.dim();
}

}  // namespace

TEST_CASE("presentation lookup") {
  CHECK(parse_presentation_id("case12") == PresentationId::CaseI_II);
  CHECK(parse_presentation_id("CASE_III") == PresentationId::CaseIII);
  CHECK(!parse_presentation_id("case4"));
  CHECK(presentation(PresentationId::CaseI_II).dim() == 8);
  CHECK(presentation(PresentationId::CaseIII).dim() == 8);
}

TEST_CASE("models match their own presentation through the identity") {
  for (auto [id, model] : {std::pair{PresentationId::CaseI_II, case12_model()},
                           std::pair{PresentationId::CaseIII, case3_model()}}) {
    const auto& p = presentation(id);
    const auto ident = identity_witness(model, p);
    CHECK(verify_witness(model, p, ident));
    CHECK(oracle_accepts(model, p, ident));
    const auto found = match_presentation(model, p);
    REQUIRE(found);
    CHECK(verify_witness(model, p, *found));
    CHECK(oracle_accepts(model, p, *found));
  }
}

TEST_CASE("the two presentations are not isomorphic") {
  CHECK(!match_presentation(case12_model(), presentation(PresentationId::CaseIII)));
  CHECK(!match_presentation(case3_model(), presentation(PresentationId::CaseI_II)));
  const auto a = local_invariants(case12_model());
  const auto b = local_invariants(case3_model());
  CHECK(a.radical_dims == std::vector<std::size_t>{8, 7, 1, 0});
  CHECK(b.radical_dims == std::vector<std::size_t>{8, 7, 3, 0});
  CHECK(a.loewy_length == 3);
  CHECK(a.loewy == std::vector<std::size_t>{1, 6, 1});
  CHECK(b.loewy == std::vector<std::size_t>{1, 4, 3});
  CHECK(a.socle_dim == 5);
  CHECK(b.socle_dim == 3);
}

TEST_CASE("local model agrees with the unit-generator model") {
  CHECK(local_invariants(case12_local_model()) == local_invariants(case12_model()));
  CHECK(match_presentation(case12_local_model(), presentation(PresentationId::CaseI_II)));
}

TEST_CASE("the W-table is of the third kind") {
  const auto w = w_table();
  const auto& p = presentation(PresentationId::CaseIII);
  const auto found = match_presentation(w, p);
  REQUIRE(found);
  CHECK(oracle_accepts(w, p, *found));
  CHECK(local_invariants(w) == local_invariants(case3_model()));
  CHECK(!match_presentation(w, presentation(PresentationId::CaseI_II)));
}

TEST_CASE("square-zero counts by exhaustion") {
  for (const auto& a : {case12_model(), case3_model(), w_table()}) {
    std::size_t count = 0;
    const auto j = fd::local_radical(a);
    for (const auto& v : oracle::elements_of(j.basis(), 8, 2))
      if (oracle::alg_mul(a, v, v) == oracle::PVec(8, 0)) ++count;
    CHECK(local_invariants(a).square_zero_count == count);
  }
}

TEST_CASE("witness verification rejects broken assignments") {
  const auto model = case12_model();
  const auto& p = presentation(PresentationId::CaseI_II);
  auto w = identity_witness(model, p);
  std::swap(w.images[0], w.images[2]);
  CHECK(verify_witness(model, p, w) == oracle_accepts(model, p, w));
  w.images[0] = model.zero();
  CHECK(!verify_witness(model, p, w));
  CHECK(!oracle_accepts(model, p, w));
}

TEST_CASE("matcher input checks") {
  const auto small = fd::monomial_algebra(2, {"x"}, {{3}});
  CHECK_THROWS_AS(match_presentation(small, presentation(PresentationId::CaseIII)), Error);
  try {
    match_presentation(small, presentation(PresentationId::CaseIII));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongDimension);
  }
  const auto odd = fd::monomial_algebra(3, {"x", "y"}, {{2, 0}, {1, 1}, {0, 5}});
  CHECK_THROWS_AS(match_presentation(odd, presentation(PresentationId::CaseI_II)), Error);
}
