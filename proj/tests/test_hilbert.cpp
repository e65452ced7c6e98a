#include "doctest.h"
#include "sdep/error.hpp"
#include "support.hpp"

using namespace sdep;
using sdep::testing::load_module;

namespace {

std::vector<HilbertPartition> enumerate_all(const TruncatedSeries& s, std::size_t depth = 0) {
  std::vector<HilbertPartition> out;
  enumerate_partitions(s, depth, [&](const HilbertPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("partitions of the maximal ideal in two variables") {
  const GradedModule gm = load_module("m2.json");
  const auto parts = enumerate_all(truncated_series(gm));
  // {[10,11],[01,01]}, {[10,10],[01,11]}, {[10,10],[01,01],[11,11]}
  CHECK(parts.size() == 3);
  CHECK(enumerate_all(truncated_series(gm), 2).empty());
  CHECK(hdepth(gm) == Depth::finite(1));
}

TEST_CASE("Hilbert depth of small modules") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(hdepth(load_module("m3.json")) == Depth::finite(2));
  CHECK(hdepth(load_module("m4.json")) == Depth::finite(2));
  for (std::size_t n = 1; n <= 3; ++n) {
    const ModulePresentation r = free_module(n, q, {MultiDegree(n)});
    CHECK(hdepth(GradedModule::build(r)) == Depth::finite(n));
    CHECK(hdepth(GradedModule::build(r, testing::ones(n))) == Depth::finite(n));
  }
  CHECK(hdepth(GradedModule::build(quotient_by_monomial_ideal(2, q, {{0, 0}}))).is_infinite());
}

TEST_CASE("induced decompositions follow the saturated coordinates of b") {
  const HilbertPartition p{{{{0, 0}, {1, 1}}}};
  const HilbertDecomposition wide = induced_decomposition(p, {2, 2});
  CHECK(wide.summands.size() == 4);
  for (const Summand& s : wide.summands) CHECK(s.vars.size() == 0);
  const HilbertDecomposition tight = induced_decomposition(p, {1, 1});
  REQUIRE(tight.summands.size() == 1);
  CHECK(tight.summands[0].vars == VarSet::of({0, 1}));
  const HilbertDecomposition mixed = induced_decomposition(p, {1, 2});
  // Z_b = {1}; c ranges over [a,b] with c_1 = a_1.
  CHECK(mixed.summands.size() == 2);
  CHECK(mixed.depth() == Depth::finite(1));
}

TEST_CASE("partition and decomposition conversions") {
  const GradedModule gm = load_module("five_generators.json");
  const TruncatedSeries series = truncated_series(gm);
  std::size_t seen = 0;
  enumerate_partitions(series, 0, [&](const HilbertPartition& p) {
    HilbertDecomposition d = partition_to_decomposition(p, series);
    CHECK(validate_decomposition(d, gm).ok);
    HilbertDecomposition back = induced_decomposition(decomposition_to_partition(d, gm.g()), gm.g());
    d.canonicalize();
    back.canonicalize();
    CHECK(back == d);
    CHECK(partition_series(p, gm.g()) == series);
    return ++seen < 200;
  });
  CHECK(seen == 200);
  HilbertPartition wrong{{{{3, 0}, {3, 3}}}};
  CHECK_THROWS_AS(partition_to_decomposition(wrong, series), Error);
  CHECK_THROWS_AS(interval_poly({{0, 0}, {4, 0}}, gm.g()), Error);
}

TEST_CASE("validation reports the first failing degree") {
  const GradedModule gm = load_module("max_plus_principal.json");
  HilbertDecomposition d = testing::load_decomposition("max_plus_principal_dec.json", gm);
  CHECK(validate_decomposition(d, gm).ok);
  d.summands.pop_back();
  const ValidationResult v = validate_decomposition(d, gm);
  CHECK_FALSE(v.ok);
  CHECK(v.degree == MultiDegree{0, 1});
  // K[{2}](-(1,0)) has a_1 = g_1 but X_1 is not free.
  const HilbertDecomposition bad{{{VarSet::of({1}), {1, 0}}, {VarSet::of({0, 1}), {0, 1}}}};
  CHECK_FALSE(validate_decomposition(bad, gm).ok);
}

TEST_CASE("enumeration matches brute force and emits each multiset once") {
  for (const auto& entry : testing::random_corpus(25, 11, FieldSpec::rationals())) {
    const GradedModule gm = GradedModule::build(entry.presentation);
    const TruncatedSeries series = truncated_series(gm);
    for (std::size_t s = 0; s <= gm.n(); ++s) {
      const auto listed = enumerate_all(series, s);
      const std::set<HilbertPartition> unique(listed.begin(), listed.end());
      CHECK_MESSAGE(unique.size() == listed.size(), entry.label);
      CHECK_MESSAGE(unique == testing::brute_force_partitions(series, s), entry.label << " s=" << s);
    }
  }
}
