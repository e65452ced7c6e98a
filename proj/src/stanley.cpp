#include "sdep/stanley.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "sdep/error.hpp"
#include "sdep/parallel.hpp"

namespace sdep {

const char* to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::kAuto: return "auto";
    case CheckMode::kSymbolic: return "symbolic";
    case CheckMode::kFinite: return "finite";
    case CheckMode::kUnified: return "unified";
    case CheckMode::kTransversal: return "transversal";
    case CheckMode::kRandomized: return "randomized";
  }
  return "?";
}

CheckMode parse_check_mode(const std::string& text) {
  for (CheckMode m : {CheckMode::kAuto, CheckMode::kSymbolic, CheckMode::kFinite,
                      CheckMode::kUnified, CheckMode::kTransversal, CheckMode::kRandomized}) {
    if (text == to_string(m)) return m;
  }
  throw Error(ErrorKind::kParse, "unknown check mode '" + text + "'");
}

const DegreeMatrix& SymbolicMatrixFamily::at(const MultiDegree& a) const {
  return matrices.at(Box(g).index(a));
}

namespace {

void require_valid(const GradedModule& gm, const HilbertDecomposition& d) {
  const ValidationResult v = validate_decomposition(d, gm);
  if (!v.ok) throw Error(ErrorKind::kPrecondition, "not a g-determined Hilbert decomposition: " + v.reason);
}

// Numeric data shared by witness search and verification: for every a in
// [0, g], the summands C(a) and the matrices of X^(a - S_i) : M_{S_i} -> M_a.
struct DegreeMaps {
  MultiDegree degree;
  std::size_t dim = 0;
  std::vector<std::size_t> columns;
  std::vector<ExactMatrix> maps;
};

std::vector<DegreeMaps> degree_maps(const GradedModule& gm, const HilbertDecomposition& d,
                                    int threads) {
  const Box& box = gm.g_box();
  std::vector<DegreeMaps> out(box.size());
  for_each_index(box.size(), threads, [&](std::size_t idx) {
    DegreeMaps& dm = out[idx];
    dm.degree = box.degree(idx);
    dm.dim = gm.hilbert_function(dm.degree);
    dm.columns = d.contributing(dm.degree);
    for (std::size_t i : dm.columns) dm.maps.push_back(gm.multiply(d.summands[i].shift, dm.degree));
  });
  return out;
}

std::vector<std::size_t> summand_dims(const GradedModule& gm, const HilbertDecomposition& d) {
  std::vector<std::size_t> dims;
  for (const Summand& s : d.summands) dims.push_back(gm.hilbert_function(s.shift));
  return dims;
}

std::vector<GenericVar> generic_variables(const std::vector<std::size_t>& dims) {
  std::vector<GenericVar> vars;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    for (std::size_t j = 0; j < dims[i]; ++j) {
      vars.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  return vars;
}

// The numeric A_a(y), columns in C(a) order.
ExactMatrix evaluate_degree(const DegreeMaps& dm, const std::vector<Vector>& y,
                            const FieldSpec& field) {
  ExactMatrix m(dm.dim, dm.columns.size(), field);
  for (std::size_t c = 0; c < dm.columns.size(); ++c) {
    const Vector col = dm.maps[c].apply(y[dm.columns[c]]);
    for (std::size_t r = 0; r < dm.dim; ++r) m(r, c) = col[r];
  }
  return m;
}

bool degree_full_rank(const DegreeMaps& dm, const std::vector<Vector>& y, const FieldSpec& field) {
  if (dm.columns.size() != dm.dim) return false;
  if (dm.dim == 0) return true;
  return rank(evaluate_degree(dm, y, field)) == dm.dim;
}

std::vector<Vector> values_by_summand(const Assignment& values, const std::vector<std::size_t>& dims,
                                      const FieldSpec& field) {
  std::vector<Vector> y(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    for (std::size_t j = 0; j < dims[i]; ++j) {
      const GenericVar v{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      auto it = values.find(v);
      if (it == values.end()) throw Error(ErrorKind::kUnboundVariable, v.to_string());
      if (it->second.modulus() != field.characteristic()) {
        throw Error(ErrorKind::kDomain, v.to_string() + " = " + it->second.to_string() +
                                            " is not an element of " + field.to_string());
      }
      y[i].push_back(it->second);
    }
  }
  return y;
}

}  // namespace

SymbolicMatrixFamily build_matrices(const GradedModule& gm, const HilbertDecomposition& d,
                                    int threads) {
  require_valid(gm, d);
  const FieldSpec& field = gm.field();
  SymbolicMatrixFamily fam;
  fam.field = field;
  fam.g = gm.g();
  fam.variables = generic_variables(summand_dims(gm, d));
  const std::vector<DegreeMaps> maps = degree_maps(gm, d, threads);
  fam.matrices.resize(maps.size());
  for_each_index(maps.size(), threads, [&](std::size_t idx) {
    const DegreeMaps& dm = maps[idx];
    DegreeMatrix& out = fam.matrices[idx];
    out.degree = dm.degree;
    out.columns = dm.columns;
    out.matrix = PolyMatrix(dm.dim, dm.columns.size(), field);
    for (std::size_t c = 0; c < dm.columns.size(); ++c) {
      const ExactMatrix& coeff = dm.maps[c];
      const auto i = static_cast<std::uint32_t>(dm.columns[c]);
      for (std::size_t k = 0; k < dm.dim; ++k) {
        SparsePoly entry(field);
        for (std::size_t j = 0; j < coeff.cols(); ++j) {
          entry.add_term(coeff(k, j), Monomial(GenericVar{i, static_cast<std::uint32_t>(j)}));
        }
        out.matrix(k, c) = std::move(entry);
      }
    }
  });
  return fam;
}

namespace {

std::vector<SparsePoly> all_determinants(const SymbolicMatrixFamily& fam, int threads) {
  std::vector<SparsePoly> dets(fam.matrices.size());
  for_each_index(fam.matrices.size(), threads,
                 [&](std::size_t idx) { dets[idx] = det_symbolic(fam.matrices[idx].matrix); });
  return dets;
}

std::optional<std::size_t> first_zero(const std::vector<SparsePoly>& dets) {
  for (std::size_t i = 0; i < dets.size(); ++i) {
    if (dets[i].is_zero()) return i;
  }
  return std::nullopt;
}

CheckReport finite_from_dets(const SymbolicMatrixFamily& fam, const std::vector<SparsePoly>& dets,
                             std::uint64_t q, std::size_t term_budget) {
  CheckReport report;
  report.mode = CheckMode::kFinite;
  if (auto zero = first_zero(dets)) {
    report.induced = false;
    report.failing_degree = fam.matrices[*zero].degree;
    report.reduced_product_zero = true;
    report.detail = "det A_a vanishes identically at " + report.failing_degree->to_string();
    return report;
  }
  SparsePoly product = SparsePoly::constant(fam.field.one());
  for (const SparsePoly& det : dets) {
    if (det.num_terms() * product.num_terms() > term_budget * 64) {
      throw Error(ErrorKind::kResource,
                  "expanding the determinant product needs more than " +
                      std::to_string(term_budget) +
                      " terms; use --mode unified, or transversal/randomized over Q");
    }
    product = reduce_exponents(product * det, q);
    if (product.num_terms() > term_budget) {
      throw Error(ErrorKind::kResource,
                  "reduced determinant product exceeds " + std::to_string(term_budget) +
                      " terms; use --mode unified, or transversal/randomized over Q");
    }
    if (product.is_zero()) break;
  }
  report.reduced_product_zero = product.is_zero();
  report.induced = !product.is_zero();
  report.detail = product.is_zero() ? "reduced product of determinants is zero"
                                    : "reduced product has " +
                                          std::to_string(product.num_terms()) + " terms";
  return report;
}

}  // namespace

CheckReport check_infinite(const SymbolicMatrixFamily& fam, int threads) {
  const std::vector<SparsePoly> dets = all_determinants(fam, threads);
  CheckReport report;
  report.mode = CheckMode::kSymbolic;
  if (auto zero = first_zero(dets)) {
    report.failing_degree = fam.matrices[*zero].degree;
    report.detail = "det A_a is the zero polynomial at " + report.failing_degree->to_string();
    return report;
  }
  report.induced = true;
  report.detail = "all " + std::to_string(dets.size()) + " determinants are nonzero";
  return report;
}

CheckReport check_finite(const SymbolicMatrixFamily& fam, std::uint64_t q,
                         std::size_t term_budget) {
  if (!fam.field.is_finite()) throw Error(ErrorKind::kMode, "finite-field check over Q");
  if (q != fam.field.characteristic()) {
    throw Error(ErrorKind::kDomain, "q = " + std::to_string(q) + " but the field is " +
                                        fam.field.to_string());
  }
  return finite_from_dets(fam, all_determinants(fam, 1), q, term_budget);
}

CheckReport check_unified(const SymbolicMatrixFamily& fam, std::size_t term_budget) {
  if (!fam.field.is_finite()) {
    CheckReport r = check_infinite(fam);
    r.mode = CheckMode::kUnified;
    return r;
  }
  const std::uint64_t q = fam.field.characteristic();
  const std::vector<SparsePoly> dets = all_determinants(fam, 1);
  // Exponent of Y in P is at most the sum over factors of its exponent there.
  std::map<GenericVar, std::uint64_t> bound;
  std::uint64_t max_bound = 0;
  for (const SparsePoly& det : dets) {
    std::map<GenericVar, std::uint32_t> local;
    for (const auto& [m, c] : det.terms()) {
      for (const auto& [v, e] : m.factors()) local[v] = std::max(local[v], e);
    }
    for (const auto& [v, e] : local) max_bound = std::max(max_bound, bound[v] += e);
  }
  if (max_bound < q) {
    CheckReport report;
    report.mode = CheckMode::kUnified;
    if (auto zero = first_zero(dets)) {
      report.failing_degree = fam.matrices[*zero].degree;
      report.reduced_product_zero = true;
      report.detail = "det A_a vanishes identically at " + report.failing_degree->to_string();
    } else {
      report.induced = true;
      report.reduced_product_zero = false;
      report.detail = "exponent bound " + std::to_string(max_bound) + " < q = " +
                      std::to_string(q) + "; all determinants nonzero";
    }
    return report;
  }
  CheckReport report = finite_from_dets(fam, dets, q, term_budget);
  report.mode = CheckMode::kUnified;
  report.detail = "exponent bound " + std::to_string(max_bound) + " >= q = " + std::to_string(q) +
                  "; " + report.detail;
  return report;
}

bool has_independent_transversal(const std::vector<Subspace>& spaces) {
  const std::size_t s = spaces.size();
  if (s == 0) return true;
  const std::size_t ambient = spaces.front().ambient_dim();
  const FieldSpec field = spaces.front().field();
  if (s > ambient) return false;
  struct Element {
    std::size_t owner;
    const Vector* vec;
  };
  std::vector<Element> elements;
  for (std::size_t i = 0; i < s; ++i) {
    if (spaces[i].ambient_dim() != ambient) {
      throw Error(ErrorKind::kDimensionMismatch, "transversal over different ambient spaces");
    }
    if (spaces[i].dim() == 0) return false;
    for (const Vector& v : spaces[i].basis()) elements.push_back({i, &v});
  }

  std::vector<std::size_t> chosen;  // element ids
  std::vector<bool> in_set(elements.size(), false);
  std::vector<bool> owner_used(s, false);

  // Greedy start: smaller spaces pick first.
  {
    std::vector<std::size_t> order(s);
    for (std::size_t i = 0; i < s; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return spaces[a].dim() < spaces[b].dim();
    });
    std::vector<Vector> rows;
    for (std::size_t owner : order) {
      for (std::size_t e = 0; e < elements.size(); ++e) {
        if (elements[e].owner != owner) continue;
        rows.push_back(*elements[e].vec);
        if (rank(ExactMatrix::from_rows(rows, ambient, field)) == rows.size()) {
          chosen.push_back(e);
          in_set[e] = true;
          owner_used[owner] = true;
          break;
        }
        rows.pop_back();
      }
    }
  }

  // Augmenting paths in the exchange graph of the linear matroid and the
  // partition matroid "one vector per space".
  while (chosen.size() < s) {
    const std::size_t k = chosen.size();
    // For x outside the set: whether x is in span(chosen) and its coordinates.
    std::vector<bool> spanned(elements.size(), false);
    std::vector<Vector> coords(elements.size());
    for (std::size_t x = 0; x < elements.size(); ++x) {
      if (in_set[x]) continue;
      ExactMatrix m(ambient, k + 1, field);
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < ambient; ++r) m(r, c) = (*elements[chosen[c]].vec)[r];
      }
      for (std::size_t r = 0; r < ambient; ++r) m(r, k) = (*elements[x].vec)[r];
      EchelonForm e = rref(std::move(m));
      if (e.pivots.size() == k) {
        spanned[x] = true;
        coords[x].resize(k);
        for (std::size_t c = 0; c < k; ++c) coords[x][c] = e.reduced(c, k);
      }
    }
    // Nodes: element ids. BFS from sources (x not spanned) to sinks (owner unused).
    std::vector<long> parent(elements.size(), -2);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < elements.size(); ++x) {
      if (!in_set[x] && !spanned[x]) {
        parent[x] = -1;
        queue.push_back(x);
      }
    }
    std::optional<std::size_t> sink;
    while (!queue.empty() && !sink) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (!in_set[u]) {
        if (!owner_used[elements[u].owner]) {
          sink = u;
          break;
        }
        // x -> y when chosen - y + x keeps one vector per space.
        for (std::size_t c = 0; c < k; ++c) {
          const std::size_t y = chosen[c];
          if (parent[y] == -2 && elements[y].owner == elements[u].owner) {
            parent[y] = static_cast<long>(u);
            queue.push_back(y);
          }
        }
      } else {
        // y -> x when chosen - y + x stays linearly independent.
        const std::size_t pos = static_cast<std::size_t>(
            std::find(chosen.begin(), chosen.end(), u) - chosen.begin());
        for (std::size_t x = 0; x < elements.size(); ++x) {
          if (in_set[x] || parent[x] != -2) continue;
          if (!spanned[x] || !coords[x][pos].is_zero()) {
            parent[x] = static_cast<long>(u);
            queue.push_back(x);
          }
        }
      }
    }
    if (!sink) return false;
    for (long v = static_cast<long>(*sink); v >= 0; v = parent[v]) {
      in_set[v] = !in_set[v];
    }
    chosen.clear();
    std::fill(owner_used.begin(), owner_used.end(), false);
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (in_set[e]) {
        chosen.push_back(e);
        owner_used[elements[e].owner] = true;
      }
    }
  }
  return true;
}

CheckReport check_transversal(const GradedModule& gm, const HilbertDecomposition& d,
                              int threads) {
  if (gm.field().is_finite()) {
    throw Error(ErrorKind::kMode,
                "transversal check needs an infinite field; per-degree transversals do not "
                "glue over " + gm.field().to_string());
  }
  require_valid(gm, d);
  const Box& box = gm.g_box();
  std::vector<char> ok(box.size(), 0);
  for_each_index(box.size(), threads, [&](std::size_t idx) {
    const MultiDegree a = box.degree(idx);
    std::vector<Subspace> spaces;
    for (std::size_t i : d.contributing(a)) spaces.push_back(gm.image(d.summands[i].shift, a));
    ok[idx] = has_independent_transversal(spaces) ? 1 : 0;
  });
  CheckReport report;
  report.mode = CheckMode::kTransversal;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (!ok[idx]) {
      report.failing_degree = box.degree(idx);
      report.detail = "no independent transversal at " + report.failing_degree->to_string();
      return report;
    }
  }
  report.induced = true;
  report.detail = "independent transversals exist in all " + std::to_string(box.size()) +
                  " degrees";
  return report;
}

WitnessVerification verify_witness(const GradedModule& gm, const HilbertDecomposition& d,
                                   const Assignment& values, int threads) {
  const FieldSpec& field = gm.field();
  const std::vector<std::size_t> dims = summand_dims(gm, d);
  const std::vector<Vector> y = values_by_summand(values, dims, field);
  const std::vector<DegreeMaps> maps = degree_maps(gm, d, threads);
  WitnessVerification out;
  out.transcript.resize(maps.size());
  for_each_index(maps.size(), threads, [&](std::size_t idx) {
    const DegreeMaps& dm = maps[idx];
    DegreeCheck& dc = out.transcript[idx];
    dc.degree = dm.degree;
    dc.size = dm.dim;
    dc.rank = dm.dim == 0 ? 0 : rank(evaluate_degree(dm, y, field));
  });
  for (std::size_t idx = 0; idx < maps.size(); ++idx) {
    const DegreeCheck& dc = out.transcript[idx];
    if (dc.rank != dc.size || maps[idx].columns.size() != dc.size) {
      out.ok = false;
      out.failing_degree = dc.degree;
      break;
    }
  }
  return out;
}

namespace {

std::optional<Assignment> search_ordered(const std::vector<DegreeMaps>& maps,
                                         const std::vector<std::size_t>& dims,
                                         const FieldSpec& field, std::size_t budget) {
  const std::vector<GenericVar> vars = generic_variables(dims);
  const std::size_t n = vars.size();
  std::vector<Vector> y(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) y[i].assign(dims[i], field.one());
  auto load = [&](const std::vector<long>& t) {
    for (std::size_t v = 0; v < n; ++v) y[vars[v].summand][vars[v].basis] = field.from_int(t[v]);
  };
  auto passes = [&]() {
    for (const DegreeMaps& dm : maps) {
      if (!degree_full_rank(dm, y, field)) return false;
    }
    return true;
  };
  std::size_t tried = 0;
  for (long top = 1; tried < budget; ++top) {
    std::vector<long> t(n, 1);
    while (true) {
      if (std::find(t.begin(), t.end(), top) != t.end() || n == 0) {
        if (++tried > budget) return std::nullopt;
        load(t);
        if (passes()) {
          Assignment a;
          for (std::size_t v = 0; v < n; ++v) a.emplace(vars[v], field.from_int(t[v]));
          return a;
        }
        if (n == 0) return std::nullopt;
      }
      // Lexicographic successor in {1..top}^n.
      std::size_t pos = n;
      while (pos > 0 && t[pos - 1] == top) t[--pos] = 1;
      if (pos == 0) break;
      ++t[pos - 1];
    }
  }
  return std::nullopt;
}

std::optional<Assignment> search_random(const std::vector<DegreeMaps>& maps,
                                        const std::vector<std::size_t>& dims,
                                        const FieldSpec& field, std::size_t attempts,
                                        std::uint64_t seed, std::uint64_t range) {
  const std::vector<GenericVar> vars = generic_variables(dims);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(field.is_finite() ? 0 : 1, range);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    Assignment a;
    std::vector<Vector> y(dims.size());
    for (const GenericVar& v : vars) {
      Scalar s = field.from_mpz(mpz_class(static_cast<unsigned long>(dist(rng))));
      y[v.summand].push_back(s);
      a.emplace(v, std::move(s));
    }
    bool ok = true;
    for (const DegreeMaps& dm : maps) {
      if (!degree_full_rank(dm, y, field)) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  return std::nullopt;
}

class FiniteWitnessSearch {
 public:
  FiniteWitnessSearch(const std::vector<DegreeMaps>& maps, const std::vector<std::size_t>& dims,
                      const FieldSpec& field, std::size_t budget)
      : maps_(maps), dims_(dims), field_(field), budget_(budget), y_(dims.size()),
        due_(dims.size()) {
    for (std::size_t idx = 0; idx < maps.size(); ++idx) {
      if (maps[idx].columns.empty()) {
        if (maps[idx].dim != 0) impossible_ = true;
        continue;
      }
      due_[maps[idx].columns.back()].push_back(idx);
    }
    for (std::size_t i = 0; i < dims.size(); ++i) y_[i].assign(dims[i], field.zero());
    const std::uint64_t q = field.characteristic();
    for (std::uint64_t v = 1; v < q; ++v) values_.push_back(field.from_int(static_cast<long>(v)));
    values_.push_back(field.zero());
  }

  std::optional<Assignment> run() {
    if (impossible_) return std::nullopt;
    if (!assign(0, 0)) return std::nullopt;
    Assignment a;
    for (const GenericVar& v : generic_variables(dims_)) a.emplace(v, y_[v.summand][v.basis]);
    return a;
  }

  bool exhausted() const { return nodes_ > budget_; }

 private:
  bool assign(std::size_t summand, std::size_t basis) {
    if (summand == dims_.size()) return true;
    if (basis == dims_[summand]) {
      for (std::size_t idx : due_[summand]) {
        if (!degree_full_rank(maps_[idx], y_, field_)) return false;
      }
      return assign(summand + 1, 0);
    }
    for (const Scalar& v : values_) {
      if (++nodes_ > budget_) return false;
      y_[summand][basis] = v;
      if (assign(summand, basis + 1)) return true;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const std::vector<DegreeMaps>& maps_;
  const std::vector<std::size_t>& dims_;
  FieldSpec field_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool impossible_ = false;
  std::vector<Vector> y_;
  std::vector<std::vector<std::size_t>> due_;
  std::vector<Scalar> values_;
};

}  // namespace

StanleyWitness extract_witness(const GradedModule& gm, const HilbertDecomposition& d,
                               const WitnessOptions& options) {
  require_valid(gm, d);
  const FieldSpec& field = gm.field();
  const std::vector<std::size_t> dims = summand_dims(gm, d);
  const std::vector<DegreeMaps> maps = degree_maps(gm, d, 1);
  std::optional<Assignment> found;
  if (field.is_finite()) {
    FiniteWitnessSearch search(maps, dims, field, options.finite_node_budget);
    found = search.run();
    if (!found) {
      throw Error(ErrorKind::kNoWitness,
                  search.exhausted()
                      ? "backtracking budget of " + std::to_string(options.finite_node_budget) +
                            " nodes exhausted over " + field.to_string()
                      : "no assignment over " + field.to_string() +
                            " makes every A_a invertible");
    }
  } else {
    found = search_ordered(maps, dims, field, options.ordered_budget);
    if (!found) {
      found = search_random(maps, dims, field, options.random_attempts, options.seed,
                            std::uint64_t{1} << 20);
    }
    if (!found) {
      throw Error(ErrorKind::kNoWitness,
                  "no witness among " + std::to_string(options.ordered_budget) +
                      " ordered and " + std::to_string(options.random_attempts) +
                      " random candidates (is the decomposition induced?)");
    }
  }
  StanleyWitness w;
  w.values = std::move(*found);
  const WitnessVerification check = verify_witness(gm, d, w.values);
  if (!check.ok) {
    throw Error(ErrorKind::kNoWitness, "internal: witness failed verification at " +
                                           check.failing_degree->to_string());
  }
  w.transcript = check.transcript;
  return w;
}

CheckReport check_decomposition(const GradedModule& gm, const HilbertDecomposition& d,
                                const CheckOptions& options) {
  require_valid(gm, d);
  const bool finite = gm.field().is_finite();
  CheckMode mode = options.mode;
  if (mode == CheckMode::kRandomized) {
    const std::vector<DegreeMaps> maps = degree_maps(gm, d, options.threads);
    const std::vector<std::size_t> dims = summand_dims(gm, d);
    const std::uint64_t range = finite ? gm.field().characteristic() - 1 : (std::uint64_t{1} << 31);
    if (auto sample = search_random(maps, dims, gm.field(), options.random_samples, options.seed,
                                    range)) {
      if (verify_witness(gm, d, *sample, options.threads).ok) {
        CheckReport report;
        report.induced = true;
        report.mode = CheckMode::kRandomized;
        report.sample = std::move(sample);
        report.detail = "sampled point verified in every degree";
        return report;
      }
    }
    mode = CheckMode::kAuto;
  }
  if (mode == CheckMode::kAuto) {
    if (finite) {
      mode = CheckMode::kUnified;
    } else {
      mode = CheckMode::kSymbolic;
      const Box& box = gm.g_box();
      for (std::size_t idx = 0; idx < box.size(); ++idx) {
        if (gm.hilbert_function(box.degree(idx)) > kSymbolicMaxColumns) {
          mode = CheckMode::kTransversal;
          break;
        }
      }
    }
  }
  switch (mode) {
    case CheckMode::kTransversal:
      return check_transversal(gm, d, options.threads);
    case CheckMode::kSymbolic:
      if (finite) {
        throw Error(ErrorKind::kMode, "symbolic (infinite-field) check over " +
                                          gm.field().to_string() + "; use unified or finite");
      }
      return check_infinite(build_matrices(gm, d, options.threads), options.threads);
    case CheckMode::kFinite:
      return check_finite(build_matrices(gm, d, options.threads), gm.field().characteristic(),
                          options.term_budget);
    case CheckMode::kUnified:
      return check_unified(build_matrices(gm, d, options.threads), options.term_budget);
    default:
      break;
  }
  throw Error(ErrorKind::kMode, "unhandled check mode");
}

SdepthResult sdepth(const GradedModule& gm, const SdepthOptions& options) {
  SdepthResult result;
  if (gm.is_zero()) {
    result.depth = Depth::infinite();
    result.report.induced = true;
    result.report.detail = "zero module";
    return result;
  }
  const TruncatedSeries series = truncated_series(gm);
  for (std::size_t s = gm.n() + 1; s-- > 0;) {
    bool found = false;
    enumerate_partitions(series, s, [&](const HilbertPartition& p) {
      HilbertDecomposition d = induced_decomposition(p, gm.g());
      ++result.decompositions_tested;
      CheckReport report = check_decomposition(gm, d, options.check);
      if (!report.induced) return true;
      StanleyWitness w;
      if (report.sample) {
        w.values = *report.sample;
        w.transcript = verify_witness(gm, d, w.values).transcript;
      } else {
        w = extract_witness(gm, d, options.witness);
      }
      result.depth = Depth::finite(s);
      result.decomposition = std::move(d);
      result.witness = std::move(w);
      result.report = std::move(report);
      found = true;
      return false;
    });
    if (found) return result;
  }
  throw Error(ErrorKind::kPrecondition, "no Stanley decomposition found at any depth");
}

}  // namespace sdep
