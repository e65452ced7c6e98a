#include "doctest.h"
#include "sdep/error.hpp"
#include "support.hpp"

using namespace sdep;
using sdep::testing::load_module;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("maximal ideal in two variables") {
  const GradedModule gm = GradedModule::build(maximal_ideal(2, FieldSpec::rationals()), MultiDegree{1, 1});
  CHECK(gm.hilbert_function({0, 0}) == 0);
  CHECK(gm.hilbert_function({1, 0}) == 1);
  CHECK(gm.hilbert_function({0, 1}) == 1);
  CHECK(gm.hilbert_function({1, 1}) == 1);
  CHECK(gm.hilbert_function({2, 2}) == 1);
  CHECK(verify_g_determined(gm).ok);
}

TEST_CASE("monomial ideals and quotients match monomial membership") {
  // dim I_a = 1 iff some generator divides X^a; the quotient is the complement.
  const auto corpus = testing::random_corpus(40, 7, FieldSpec::rationals(), 30);
  for (const auto& entry : corpus) {
    const GradedModule gm = GradedModule::build(entry.presentation);
    const bool quotient = entry.label.starts_with("R/");
    std::vector<MultiDegree> gens;
    if (quotient) {
      for (const Relation& r : entry.presentation.relations) gens.push_back(r.terms[0].shift);
    } else {
      gens = entry.presentation.generators;
    }
    for (const MultiDegree& a : gm.box().degrees()) {
      const bool in_ideal =
          std::any_of(gens.begin(), gens.end(), [&](const MultiDegree& u) { return u.precedes(a); });
      CHECK_MESSAGE(gm.hilbert_function(a) == ((in_ideal != quotient) ? 1u : 0u),
                    entry.label << " at " << a.to_string());
    }
    CHECK(verify_g_determined(gm).ok);
  }
}

TEST_CASE("minimal generators are kept in input order") {
  const ModulePresentation p =
      monomial_ideal(2, FieldSpec::rationals(), {{2, 0}, {1, 1}, {1, 0}, {0, 3}});
  CHECK(p.generators == std::vector<MultiDegree>{{1, 0}, {0, 3}});
  CHECK(p.relations.size() == 1);
}

TEST_CASE("the five-generator module with three relations") {
  const GradedModule gm = load_module("five_generators.json");
  const std::map<MultiDegree, std::size_t> nonzero{
      {{3, 0}, 2}, {{3, 1}, 2}, {{3, 2}, 2}, {{3, 3}, 2}, {{2, 1}, 1}, {{2, 2}, 2},
      {{2, 3}, 3}, {{1, 2}, 1}, {{1, 3}, 2}, {{0, 3}, 1}};
  for (const MultiDegree& a : gm.g_box().degrees()) {
    const auto it = nonzero.find(a);
    CHECK_MESSAGE(gm.hilbert_function(a) == (it == nonzero.end() ? 0u : it->second), a.to_string());
  }
  CHECK(verify_g_determined(gm).ok);
}

TEST_CASE("g-determinedness of R/(X1^2)") {
  const ModulePresentation p = quotient_by_monomial_ideal(1, FieldSpec::rationals(), {{2}});
  CHECK(kind_of([&] { GradedModule::build(p, MultiDegree{1}); }) == ErrorKind::kPresentationExceedsG);
  const GradedModule loose = GradedModule::build(p, MultiDegree{1}, 1, GBound::kDiagnose);
  const GDeterminedReport rep = verify_g_determined(loose);
  CHECK_FALSE(rep.ok);
  CHECK(rep.degree == MultiDegree{1});
  CHECK(rep.variable == 0);
  CHECK(verify_g_determined(GradedModule::build(p, MultiDegree{2})).ok);
}

TEST_CASE("multiplication maps commute and compose along paths") {
  for (const char* name : {"max_plus_principal.json", "five_generators.json", "m3.json"}) {
    const GradedModule gm = load_module(name);
    const std::size_t n = gm.n();
    for (const MultiDegree& a : gm.box().degrees()) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const MultiDegree ai = a + MultiDegree::unit(n, i);
          const MultiDegree aj = a + MultiDegree::unit(n, j);
          if (!gm.box().contains(ai + MultiDegree::unit(n, j))) continue;
          CHECK(gm.mult_map(ai, j) * gm.mult_map(a, i) == gm.mult_map(aj, i) * gm.mult_map(a, j));
        }
      }
    }
    // multiply() against the coordinate path 0 -> a.
    for (const MultiDegree& a : gm.box().degrees()) {
      ExactMatrix path = ExactMatrix::identity(gm.hilbert_function(MultiDegree(n)), gm.field());
      MultiDegree at(n);
      for (std::size_t k = 0; k < n; ++k) {
        while (at[k] < a[k]) {
          path = gm.mult_map(at, k) * path;
          ++at[k];
        }
      }
      CHECK(gm.multiply(MultiDegree(n), a) == path);
    }
  }
}

TEST_CASE("presentation errors") {
  const FieldSpec q = FieldSpec::rationals();
  ModulePresentation p{2, q, {{1, 0}, {0, 1}}, {}};
  p.relations.push_back(Relation{{{0, {0, 1}, q.one()}, {1, {0, 0}, q.one()}}});
  CHECK(kind_of([&] { p.validate(); }) == ErrorKind::kHomogeneity);
  ModulePresentation neg{1, q, {{-1}}, {}};
  CHECK(kind_of([&] { neg.validate(); }) == ErrorKind::kDomain);
  CHECK(kind_of([&] { direct_sum({maximal_ideal(2, q), maximal_ideal(3, q)}); }) == ErrorKind::kShape);
  CHECK(kind_of([&] { GradedModule::build(maximal_ideal(2, q), MultiDegree{0, 1}); }) ==
        ErrorKind::kPresentationExceedsG);
  const GradedModule gm = GradedModule::build(maximal_ideal(2, q));
  CHECK(kind_of([&] { gm.piece({3, 0}); }) == ErrorKind::kRange);
}

TEST_CASE("free modules and direct sums") {
  const FieldSpec q = FieldSpec::rationals();
  const GradedModule gm =
      GradedModule::build(direct_sum({maximal_ideal(2, q), free_module(2, q, {{0, 0}, {1, 0}})}));
  CHECK(gm.g() == MultiDegree{1, 1});
  CHECK(gm.hilbert_function({0, 0}) == 1);
  CHECK(gm.hilbert_function({1, 0}) == 3);
  CHECK(gm.hilbert_function({0, 1}) == 2);
  CHECK(gm.hilbert_function({1, 1}) == 3);
  CHECK_FALSE(gm.is_zero());
  CHECK(GradedModule::build(quotient_by_monomial_ideal(2, q, {{0, 0}})).is_zero());
}
