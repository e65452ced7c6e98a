#include "sdep/module.hpp"

#include <algorithm>

#include "sdep/error.hpp"
#include "sdep/parallel.hpp"

namespace sdep {

MultiDegree ModulePresentation::relation_degree(std::size_t r) const {
  const Relation& rel = relations.at(r);
  if (rel.terms.empty()) {
    throw Error(ErrorKind::kShape, "relation " + std::to_string(r + 1) + " has no terms");
  }
  std::optional<MultiDegree> deg;
  for (const RelationTerm& t : rel.terms) {
    if (t.gen >= generators.size()) {
      throw Error(ErrorKind::kShape, "relation " + std::to_string(r + 1) +
                                         " refers to generator " + std::to_string(t.gen + 1) +
                                         " of " + std::to_string(generators.size()));
    }
    if (t.shift.size() != n || !t.shift.is_nonnegative()) {
      throw Error(ErrorKind::kShape, "relation " + std::to_string(r + 1) + " has shift " +
                                         t.shift.to_string() + " (need " + std::to_string(n) +
                                         " non-negative entries)");
    }
    MultiDegree d = generators[t.gen] + t.shift;
    if (deg && *deg != d) {
      throw Error(ErrorKind::kHomogeneity, "relation " + std::to_string(r + 1) +
                                               " mixes degrees " + deg->to_string() +
                                               " and " + d.to_string());
    }
    deg = d;
  }
  return *deg;
}

MultiDegree ModulePresentation::default_g() const {
  MultiDegree g(n);
  for (const MultiDegree& d : generators) g = g.join(d);
  for (std::size_t r = 0; r < relations.size(); ++r) g = g.join(relation_degree(r));
  return g;
}

void ModulePresentation::validate() const {
  if (n > 32) throw Error(ErrorKind::kDomain, "at most 32 ring variables are supported");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != n) {
      throw Error(ErrorKind::kShape, "generator " + std::to_string(i + 1) + " has degree " +
                                         generators[i].to_string() + ", expected length " +
                                         std::to_string(n));
    }
    if (!generators[i].is_nonnegative()) {
      throw Error(ErrorKind::kDomain, "generator " + std::to_string(i + 1) +
                                          " has negative degree " +
                                          generators[i].to_string() +
                                          " (module must be positively determined)");
    }
  }
  for (std::size_t r = 0; r < relations.size(); ++r) {
    relation_degree(r);
    for (const RelationTerm& t : relations[r].terms) {
      if (t.coeff.modulus() != field.characteristic()) {
        throw Error(ErrorKind::kShape, "relation " + std::to_string(r + 1) +
                                           " has a coefficient outside " + field.to_string());
      }
    }
  }
}

namespace {

void require_length(std::size_t n, const std::vector<MultiDegree>& degs, const char* what) {
  for (const MultiDegree& d : degs) {
    if (d.size() != n || !d.is_nonnegative()) {
      throw Error(ErrorKind::kShape, std::string(what) + " " + d.to_string() +
                                         " is not a point of N^" + std::to_string(n));
    }
  }
}

std::vector<MultiDegree> minimal_generators(const std::vector<MultiDegree>& exponents) {
  std::vector<MultiDegree> out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < exponents.size() && !redundant; ++j) {
      if (i == j || !exponents[j].precedes(exponents[i])) continue;
      // Strictly smaller, or an equal copy appearing earlier.
      redundant = exponents[j] != exponents[i] || j < i;
    }
    if (!redundant) out.push_back(exponents[i]);
  }
  return out;
}

}  // namespace

ModulePresentation monomial_ideal(std::size_t n, const FieldSpec& field,
                                  const std::vector<MultiDegree>& exponents) {
  require_length(n, exponents, "monomial exponent");
  ModulePresentation p{n, field, minimal_generators(exponents), {}};
  for (std::size_t u = 0; u < p.generators.size(); ++u) {
    for (std::size_t v = u + 1; v < p.generators.size(); ++v) {
      const MultiDegree lcm = p.generators[u].join(p.generators[v]);
      p.relations.push_back(Relation{{{u, lcm - p.generators[u], field.one()},
                                      {v, lcm - p.generators[v], -field.one()}}});
    }
  }
  return p;
}

ModulePresentation quotient_by_monomial_ideal(std::size_t n, const FieldSpec& field,
                                              const std::vector<MultiDegree>& exponents) {
  require_length(n, exponents, "monomial exponent");
  ModulePresentation p{n, field, {MultiDegree(n)}, {}};
  for (const MultiDegree& u : minimal_generators(exponents)) {
    p.relations.push_back(Relation{{{0, u, field.one()}}});
  }
  return p;
}

ModulePresentation free_module(std::size_t n, const FieldSpec& field,
                               const std::vector<MultiDegree>& shifts) {
  require_length(n, shifts, "free shift");
  return ModulePresentation{n, field, shifts, {}};
}

ModulePresentation direct_sum(const std::vector<ModulePresentation>& summands) {
  if (summands.empty()) {
    throw Error(ErrorKind::kShape, "direct sum of no modules (ring unknown)");
  }
  ModulePresentation out{summands.front().n, summands.front().field, {}, {}};
  for (const ModulePresentation& s : summands) {
    if (s.n != out.n || !(s.field == out.field)) {
      throw Error(ErrorKind::kShape, "direct sum over different rings: n=" +
                                         std::to_string(out.n) + " " + out.field.to_string() +
                                         " vs n=" + std::to_string(s.n) + " " +
                                         s.field.to_string());
    }
    const std::size_t offset = out.generators.size();
    out.generators.insert(out.generators.end(), s.generators.begin(), s.generators.end());
    for (Relation r : s.relations) {
      for (RelationTerm& t : r.terms) t.gen += offset;
      out.relations.push_back(std::move(r));
    }
  }
  return out;
}

ModulePresentation maximal_ideal(std::size_t n, const FieldSpec& field) {
  std::vector<MultiDegree> vars;
  for (std::size_t k = 0; k < n; ++k) vars.push_back(MultiDegree::unit(n, k));
  return monomial_ideal(n, field, vars);
}

Vector GradedPiece::coordinates(Vector ambient_vector) const {
  Vector reduced = relations.reduce(std::move(ambient_vector));
  Vector out;
  out.reserve(basis_columns.size());
  for (std::size_t c : basis_columns) out.push_back(std::move(reduced[c]));
  return out;
}

std::optional<std::size_t> GradedPiece::ambient_position(std::size_t gen) const {
  auto it = std::lower_bound(ambient.begin(), ambient.end(), gen);
  if (it == ambient.end() || *it != gen) return std::nullopt;
  return static_cast<std::size_t>(it - ambient.begin());
}

GradedPiece compute_piece(const ModulePresentation& pres, const MultiDegree& a) {
  GradedPiece piece;
  piece.degree = a;
  for (std::size_t i = 0; i < pres.generators.size(); ++i) {
    if (pres.generators[i].precedes(a)) piece.ambient.push_back(i);
  }
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    if (!pres.relation_degree(r).precedes(a)) continue;
    Vector v(piece.ambient.size(), pres.field.zero());
    for (const RelationTerm& t : pres.relations[r].terms) {
      v[*piece.ambient_position(t.gen)] += t.coeff;
    }
    rows.push_back(std::move(v));
  }
  piece.relations = Subspace::span(piece.ambient.size(), pres.field, rows);
  std::size_t next = 0;
  const auto& pivots = piece.relations.pivots();
  for (std::size_t c = 0; c < piece.ambient.size(); ++c) {
    if (next < pivots.size() && pivots[next] == c) {
      ++next;
    } else {
      piece.basis_columns.push_back(c);
    }
  }
  return piece;
}

GradedModule GradedModule::build(ModulePresentation pres, std::optional<MultiDegree> g,
                                 int threads, GBound bound) {
  pres.validate();
  GradedModule gm;
  gm.g_ = g ? *g : pres.default_g();
  if (gm.g_.size() != pres.n || !gm.g_.is_nonnegative()) {
    throw Error(ErrorKind::kShape, "g = " + gm.g_.to_string() + " is not a point of N^" +
                                       std::to_string(pres.n));
  }
  const bool enforce = bound == GBound::kEnforce;
  for (std::size_t i = 0; i < pres.generators.size() && enforce; ++i) {
    if (!pres.generators[i].precedes(gm.g_)) {
      throw Error(ErrorKind::kPresentationExceedsG,
                  "generator " + std::to_string(i + 1) + " in degree " +
                      pres.generators[i].to_string() + " is not <= g = " + gm.g_.to_string());
    }
  }
  for (std::size_t r = 0; r < pres.relations.size() && enforce; ++r) {
    const MultiDegree d = pres.relation_degree(r);
    if (!d.precedes(gm.g_)) {
      throw Error(ErrorKind::kPresentationExceedsG,
                  "relation " + std::to_string(r + 1) + " in degree " + d.to_string() +
                      " is not <= g = " + gm.g_.to_string());
    }
  }
  gm.pres_ = std::move(pres);
  gm.g_box_ = Box(gm.g_);
  gm.box_ = Box(gm.g_ + MultiDegree(gm.g_.size(), 1));

  const std::size_t count = gm.box_.size();
  gm.pieces_.resize(count);
  for_each_index(count, threads, [&](std::size_t idx) {
    gm.pieces_[idx] = compute_piece(gm.pres_, gm.box_.degree(idx));
  });

  const std::size_t n = gm.pres_.n;
  gm.mult_maps_.resize(count * n);
  for_each_index(count, threads, [&](std::size_t idx) {
    const MultiDegree a = gm.box_.degree(idx);
    for (std::size_t k = 0; k < n; ++k) {
      const MultiDegree next = a + MultiDegree::unit(n, k);
      if (gm.box_.contains(next)) gm.mult_maps_[idx * n + k] = gm.multiply(a, next);
    }
  });
  return gm;
}

const GradedPiece& GradedModule::piece(const MultiDegree& a) const {
  return pieces_[box_.index(a)];
}

std::size_t GradedModule::hilbert_function(const MultiDegree& a) const {
  return piece(a).dim();
}

const ExactMatrix& GradedModule::mult_map(const MultiDegree& a, std::size_t k) const {
  const std::size_t n = pres_.n;
  if (k >= n) throw Error(ErrorKind::kRange, "variable index " + std::to_string(k + 1));
  const MultiDegree next = a + MultiDegree::unit(n, k);
  if (!box_.contains(next)) {
    throw Error(ErrorKind::kRange, next.to_string() + " outside the computed box [0," +
                                       box_.upper().to_string() + "]");
  }
  return mult_maps_[box_.index(a) * n + k];
}

ExactMatrix GradedModule::multiply(const MultiDegree& from, const MultiDegree& to) const {
  if (!from.precedes(to)) {
    throw Error(ErrorKind::kRange, "cannot multiply from " + from.to_string() + " to " +
                                       to.to_string());
  }
  const GradedPiece& src = piece(from);
  const GradedPiece& dst = piece(to);
  ExactMatrix m(dst.dim(), src.dim(), pres_.field);
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const std::size_t gen = src.ambient[src.basis_columns[j]];
    Vector e(dst.ambient_dim(), pres_.field.zero());
    e[*dst.ambient_position(gen)] = pres_.field.one();
    Vector coords = dst.coordinates(std::move(e));
    for (std::size_t k = 0; k < dst.dim(); ++k) m(k, j) = coords[k];
  }
  return m;
}

Subspace GradedModule::image(const MultiDegree& from, const MultiDegree& to) const {
  return Subspace::column_space(multiply(from, to));
}

bool GradedModule::is_zero() const {
  for (std::size_t i = 0; i < g_box_.size(); ++i) {
    if (piece(g_box_.degree(i)).dim() != 0) return false;
  }
  return true;
}

GDeterminedReport verify_g_determined(const GradedModule& gm) {
  const Box& box = gm.box();
  const std::size_t n = gm.n();
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const MultiDegree a = box.degree(idx);
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] != gm.g()[k]) continue;
      const ExactMatrix& m = gm.mult_map(a, k);
      if (m.rows() != m.cols() || rank(m) != m.cols()) return {false, a, k};
    }
  }
  return {};
}

}  // namespace sdep
