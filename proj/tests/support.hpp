// Shared fixtures and brute-force oracles for the test suites. The oracles
// deliberately use different algorithms from the library code they check.
#ifndef SDEP_TESTS_SUPPORT_HPP
#define SDEP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdep/hilbert.hpp"
#include "sdep/io.hpp"
#include "sdep/module.hpp"
#include "sdep/multipoly.hpp"
#include "sdep/polytope.hpp"
#include "sdep/stanley.hpp"

namespace sdep::testing {

inline std::string data_path(const std::string& name) { return std::string(SDEP_DATA_DIR) + "/" + name; }

inline GradedModule load_module(const std::string& name,
                                const std::optional<FieldSpec>& field = {}) {
  io::ModuleFile mf = io::read_module_file(data_path(name), field);
  return GradedModule::build(mf.presentation, mf.g);
}

inline HilbertDecomposition load_decomposition(const std::string& name, const GradedModule& gm) {
  return io::read_decomposition_file(data_path(name), gm.n(), gm.g());
}

inline MultiDegree ones(std::size_t n) { return MultiDegree(n, 1); }

/// m^alpha + R^beta over `field`.
inline ModulePresentation max_ideal_plus_free(std::size_t n, std::size_t alpha, std::size_t beta,
                                              const FieldSpec& field) {
  std::vector<ModulePresentation> parts;
  for (std::size_t i = 0; i < alpha; ++i) parts.push_back(maximal_ideal(n, field));
  for (std::size_t i = 0; i < beta; ++i) parts.push_back(free_module(n, field, {MultiDegree(n)}));
  if (parts.empty()) {
    ModulePresentation zero;
    zero.n = n;
    zero.field = field;
    return zero;
  }
  return direct_sum(parts);
}

inline long total_dim(const GradedModule& gm) {
  long t = 0;
  for (const MultiDegree& a : gm.g_box().degrees()) t += static_cast<long>(gm.hilbert_function(a));
  return t;
}

/// Leibniz expansion over all permutations.
inline SparsePoly leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SparsePoly det(m.field());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    SparsePoly term = SparsePoly::constant(m.field().one());
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Every multiset of intervals [a,b] in [0,g] whose indicator functions sum to
/// `series`, chosen interval by interval (no covering order).
inline std::set<HilbertPartition> brute_force_partitions(const TruncatedSeries& series,
                                                         std::size_t min_depth = 0) {
  const MultiDegree& g = series.g();
  const Box box(g);
  std::vector<Interval> all;
  for (const MultiDegree& a : box.degrees()) {
    for (const MultiDegree& b : box.degrees()) {
      if (a.precedes(b) && saturated_coordinates(b, g).size() >= min_depth) all.push_back({a, b});
    }
  }
  std::set<HilbertPartition> out;
  std::vector<long> residual = series.coefficients();
  std::vector<Interval> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (std::all_of(residual.begin(), residual.end(), [](long r) { return r == 0; })) {
      HilbertPartition p{chosen};
      p.canonicalize();
      out.insert(p);
      return;
    }
    // Intervals are ordered by lower corner in box order and [a,b] only
    // reaches degrees >= a, so degrees before all[k].lower are final.
    const std::size_t first_open = k == all.size() ? box.size() : box.index(all[k].lower);
    for (std::size_t i = 0; i < first_open; ++i) {
      if (residual[i] != 0) return;
    }
    if (k == all.size()) return;
    rec(k + 1);
    const std::vector<MultiDegree> cells = interval_degrees(all[k].lower, all[k].upper);
    std::size_t copies = 0;
    while (std::all_of(cells.begin(), cells.end(),
                       [&](const MultiDegree& c) { return residual[box.index(c)] > 0; })) {
      for (const MultiDegree& c : cells) --residual[box.index(c)];
      chosen.push_back(all[k]);
      ++copies;
      rec(k + 1);
    }
    for (; copies > 0; --copies) {
      for (const MultiDegree& c : cells) ++residual[box.index(c)];
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

/// All non-negative integer solutions of the equalities of `sys`, by
/// depth-first search over the variables with the bound u(b,Z) <= dim M_b.
inline std::vector<std::vector<long>> brute_force_solutions(const LinearSystem& sys,
                                                            const GradedModule& gm) {
  std::vector<std::vector<long>> out;
  std::vector<long> u(sys.variables.size(), 0);
  std::vector<long> lhs(sys.equalities.size(), 0);
  // rows_of[v]: equality rows containing variable v.
  std::vector<std::vector<std::size_t>> rows_of(sys.variables.size());
  for (std::size_t r = 0; r < sys.equalities.size(); ++r) {
    for (const auto& [v, c] : sys.equalities[r].coeffs) rows_of[v].push_back(r);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == u.size()) {
      for (std::size_t r = 0; r < lhs.size(); ++r) {
        if (lhs[r] != sys.equalities[r].rhs) return;
      }
      out.push_back(u);
      return;
    }
    const long bound = static_cast<long>(gm.hilbert_function(sys.variables[v].shift));
    for (long x = 0; x <= bound; ++x) {
      bool ok = true;
      for (std::size_t r : rows_of[v]) ok = ok && lhs[r] + x <= sys.equalities[r].rhs;
      if (!ok) break;
      for (std::size_t r : rows_of[v]) lhs[r] += x;
      u[v] = x;
      rec(v + 1);
      for (std::size_t r : rows_of[v]) lhs[r] -= x;
    }
    u[v] = 0;
  };
  rec(0);
  return out;
}

/// Rado's condition checked over every subfamily.
inline bool rado_condition(const std::vector<Subspace>& spaces) {
  const std::size_t s = spaces.size();
  for (std::uint32_t mask = 1; mask < (1U << s); ++mask) {
    std::vector<Subspace> chosen;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask >> i & 1U) chosen.push_back(spaces[i]);
    }
    if (subspace_sum_dim(chosen) < chosen.size()) return false;
  }
  return true;
}

/// Calls fn on every point of F_q^vars (q^|vars| points).
inline void for_each_point(const std::vector<GenericVar>& vars, const FieldSpec& field,
                           const std::function<void(const Assignment&)>& fn) {
  const std::uint64_t q = field.characteristic();
  std::vector<std::uint64_t> digits(vars.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      a.emplace(vars[i], field.from_int(static_cast<long>(digits[i])));
    }
    fn(a);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
}

struct CorpusEntry {
  std::string label;
  ModulePresentation presentation;
};

/// Random monomial ideals and quotients with n <= 3 and sum of dim M_a over
/// [0, g] between 1 and max_total, where g is the presentation's default.
inline std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed,
                                              const FieldSpec& field, long max_total = 6) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t gens = 1 + rng() % 3;
    std::vector<MultiDegree> exps;
    for (std::size_t i = 0; i < gens; ++i) {
      MultiDegree d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = static_cast<int>(rng() % 3);
      exps.push_back(d);
    }
    const bool quotient = rng() % 2;
    ModulePresentation pres = quotient ? quotient_by_monomial_ideal(n, field, exps)
                                       : monomial_ideal(n, field, exps);
    std::string label = quotient ? "R/(" : "(";
    for (std::size_t i = 0; i < exps.size(); ++i) label += (i ? "," : "") + exps[i].to_string();
    label += ")";
    if (seen.count(label)) continue;
    const GradedModule gm = GradedModule::build(pres);
    const long t = total_dim(gm);
    if (t < 1 || t > max_total) continue;
    seen.insert(label);
    out.push_back({label, pres});
  }
  return out;
}

/// Enumerated partitions at depth >= s, as induced decompositions.
inline std::vector<HilbertDecomposition> all_decompositions(const GradedModule& gm,
                                                            std::size_t s = 0,
                                                            std::size_t limit = SIZE_MAX) {
  std::vector<HilbertDecomposition> out;
  enumerate_partitions(truncated_series(gm), s, [&](const HilbertPartition& p) {
    out.push_back(induced_decomposition(p, gm.g()));
    return out.size() < limit;
  });
  return out;
}

}  // namespace sdep::testing

#endif  // SDEP_TESTS_SUPPORT_HPP
