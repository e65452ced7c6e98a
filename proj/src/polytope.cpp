#include "sdep/polytope.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "sdep/error.hpp"
#include "sdep/parallel.hpp"

namespace sdep {

std::string OmegaVariable::name() const {
  std::string s = "u[";
  for (std::size_t i = 0; i < shift.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(shift[i]);
  }
  s += ';';
  bool first = true;
  for (std::size_t j : z.members()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(j + 1);
  }
  return s + ']';
}

std::string OmegaVariable::lp_name() const {
  // u[1,0;1,2] -> u_1_0__1_2
  std::string s = "u";
  for (int c : shift) s += '_' + std::to_string(c);
  s += '_';
  for (std::size_t j : z.members()) s += '_' + std::to_string(j + 1);
  return s;
}

bool OmegaVariable::alive_at(const MultiDegree& a) const {
  return Summand{z, shift}.alive_at(a);
}

std::vector<OmegaVariable> omega_variables(const MultiDegree& g, std::size_t min_depth) {
  const std::size_t n = g.size();
  const Box box(g);
  std::vector<OmegaVariable> vars;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const MultiDegree b = box.degree(idx);
    const VarSet forced = saturated_coordinates(b, g);
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      const VarSet z = VarSet::from_bits(bits);
      if (forced.is_subset_of(z) && z.size() >= min_depth) vars.push_back({b, z});
    }
  }
  return vars;
}

bool LinearSystem::relaxation() const {
  if (!has_inequalities || !max_subset) return false;
  const Box box(g);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    std::size_t size = 1;
    for (int c : box.degree(idx)) size *= static_cast<std::size_t>(c + 1);
    if (size > *max_subset) return true;
  }
  return false;
}

std::optional<std::size_t> LinearSystem::find(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name() == name || variables[i].lp_name() == name) return i;
  }
  return std::nullopt;
}

namespace {

std::map<MultiDegree, std::vector<std::size_t>> variables_by_shift(const LinearSystem& sys) {
  std::map<MultiDegree, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < sys.variables.size(); ++i) out[sys.variables[i].shift].push_back(i);
  return out;
}

// Variables u(b, Z) alive at a, i.e. supp(a - b) inside Z.
std::vector<std::pair<std::size_t, long>> alive_terms(const LinearSystem& sys,
                                                      const std::vector<std::size_t>& candidates,
                                                      const MultiDegree& a) {
  std::vector<std::pair<std::size_t, long>> terms;
  for (std::size_t i : candidates) {
    if (sys.variables[i].alive_at(a)) terms.emplace_back(i, 1);
  }
  return terms;
}

}  // namespace

LinearSystem build_hilbert_system(const GradedModule& gm, std::size_t min_depth) {
  LinearSystem sys;
  sys.n = gm.n();
  sys.field = gm.field();
  sys.g = gm.g();
  sys.min_depth = min_depth;
  sys.variables = omega_variables(gm.g(), min_depth);
  std::vector<std::size_t> all(sys.variables.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const Box& box = gm.g_box();
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    LinearRow row;
    row.degree = box.degree(idx);
    row.coeffs = alive_terms(sys, all, row.degree);
    row.rhs = static_cast<long>(gm.hilbert_function(row.degree));
    sys.equalities.push_back(std::move(row));
  }
  return sys;
}

LinearSystem build_stanley_inequalities(const GradedModule& gm, std::optional<std::size_t> k,
                                        std::size_t min_depth, int threads) {
  LinearSystem sys = build_hilbert_system(gm, min_depth);
  sys.has_inequalities = true;
  sys.max_subset = k;
  const Box& box = gm.g_box();
  if (!k) {
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      if (interval_degrees(MultiDegree(std::vector<int>(gm.n(), 0)), box.degree(idx)).size() >
          kMaxExhaustiveInterval) {
        throw Error(ErrorKind::kResource,
                    "every subset J of [0," + box.degree(idx).to_string() + "] is too many; " +
                        "pass a finite --max-subset");
      }
    }
  }
  const auto by_shift = variables_by_shift(sys);
  std::vector<std::vector<LinearRow>> per_degree(box.size());
  for_each_index(box.size(), threads, [&](std::size_t idx) {
    const MultiDegree a = box.degree(idx);
    const std::vector<MultiDegree> below =
        interval_degrees(MultiDegree(std::vector<int>(gm.n(), 0)), a);
    std::vector<Subspace> images;
    std::vector<std::vector<std::pair<std::size_t, long>>> terms;
    for (const MultiDegree& b : below) {
      images.push_back(gm.image(b, a));
      auto it = by_shift.find(b);
      terms.push_back(it == by_shift.end() ? decltype(terms)::value_type{}
                                           : alive_terms(sys, it->second, a));
    }
    const std::size_t limit = std::min(k.value_or(below.size()), below.size());
    // Combinations of `below` by size, each in lexicographic order.
    for (std::size_t size = 1; size <= limit; ++size) {
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        LinearRow row;
        row.degree = a;
        std::vector<Subspace> chosen;
        for (std::size_t i : pick) {
          row.subset.push_back(below[i]);
          row.coeffs.insert(row.coeffs.end(), terms[i].begin(), terms[i].end());
          chosen.push_back(images[i]);
        }
        row.rhs = static_cast<long>(subspace_sum_dim(chosen));
        per_degree[idx].push_back(std::move(row));
        std::size_t pos = size;
        while (pos > 0 && pick[pos - 1] == below.size() - size + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
      }
    }
  });
  for (auto& rows : per_degree) {
    for (auto& row : rows) sys.inequalities.push_back(std::move(row));
  }
  return sys;
}

namespace {

void write_terms(std::ostream& out, const LinearSystem& sys,
                 const std::vector<std::pair<std::size_t, long>>& coeffs, bool lp) {
  if (coeffs.empty()) {
    out << (lp ? "0 " + sys.variables.front().lp_name() : std::string("0"));
    return;
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& [v, c] = coeffs[i];
    if (i) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const long m = c < 0 ? -c : c;
    if (m != 1) out << m << ' ';
    out << (lp ? sys.variables[v].lp_name() : sys.variables[v].name());
  }
}

std::string subset_text(const std::vector<MultiDegree>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ',';
    s += subset[i].to_string();
  }
  return s + '}';
}

std::string subset_note(const LinearSystem& sys) {
  if (!sys.has_inequalities) return "none";
  std::string s = sys.max_subset ? std::to_string(*sys.max_subset) : std::string("all");
  return s + (sys.relaxation() ? " relaxation" : " exact");
}

}  // namespace

void write_sip(const LinearSystem& sys, std::ostream& out) {
  out << "# sip 1\n";
  out << "# ring n=" << sys.n << " field=" << sys.field.to_string() << "\n";
  out << "# g " << sys.g.to_string() << "\n";
  out << "# min-depth " << sys.min_depth << "\n";
  out << "# subsets " << subset_note(sys) << "\n";
  out << "# variables " << sys.variables.size() << " equalities " << sys.equalities.size()
      << " inequalities " << sys.inequalities.size() << "\n";
  for (const OmegaVariable& v : sys.variables) out << "var " << v.name() << " >= 0 integer\n";
  for (const LinearRow& row : sys.equalities) {
    out << "eq " << row.degree.to_string() << ": ";
    write_terms(out, sys, row.coeffs, false);
    out << " = " << row.rhs << "\n";
  }
  for (const LinearRow& row : sys.inequalities) {
    out << "le " << row.degree.to_string() << ' ' << subset_text(row.subset) << ": ";
    write_terms(out, sys, row.coeffs, false);
    out << " <= " << row.rhs << "\n";
  }
}

void write_lp(const LinearSystem& sys, std::ostream& out) {
  out << "\\ n=" << sys.n << " field=" << sys.field.to_string() << " g=" << sys.g.to_string()
      << " min-depth=" << sys.min_depth << " subsets=" << subset_note(sys) << "\n";
  out << "Minimize\n obj: ";
  std::vector<std::pair<std::size_t, long>> all;
  for (std::size_t i = 0; i < sys.variables.size(); ++i) all.emplace_back(i, 1);
  write_terms(out, sys, all, true);
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < sys.equalities.size(); ++r) {
    out << " e" << r + 1 << ": ";
    write_terms(out, sys, sys.equalities[r].coeffs, true);
    out << " = " << sys.equalities[r].rhs << "\n";
  }
  for (std::size_t r = 0; r < sys.inequalities.size(); ++r) {
    out << " s" << r + 1 << ": ";
    write_terms(out, sys, sys.inequalities[r].coeffs, true);
    out << " <= " << sys.inequalities[r].rhs << "\n";
  }
  out << "General\n";
  for (const OmegaVariable& v : sys.variables) out << ' ' << v.lp_name() << "\n";
  out << "End\n";
}

void export_ip(const LinearSystem& sys, const std::string& stem) {
  for (const char* ext : {".sip", ".lp"}) {
    const std::string path = stem + ext;
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::kParse, "cannot write " + path);
    if (std::string(ext) == ".sip") write_sip(sys, out);
    else write_lp(sys, out);
  }
}

std::vector<long> to_u_vector(const LinearSystem& sys, const HilbertDecomposition& d) {
  std::map<OmegaVariable, std::size_t> index;
  for (std::size_t i = 0; i < sys.variables.size(); ++i) index.emplace(sys.variables[i], i);
  std::vector<long> u(sys.variables.size(), 0);
  for (const Summand& s : d.summands) {
    auto it = index.find(OmegaVariable{s.shift, s.vars});
    if (it == index.end()) {
      throw Error(ErrorKind::kDomain, s.to_string() + " is not a variable of this system");
    }
    ++u[it->second];
  }
  return u;
}

HilbertDecomposition from_u_vector(const LinearSystem& sys, const std::vector<long>& u) {
  if (u.size() != sys.variables.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "u-vector length " + std::to_string(u.size()) +
                                                   " for " + std::to_string(sys.variables.size()) +
                                                   " variables");
  }
  HilbertDecomposition d;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0) throw Error(ErrorKind::kDomain, sys.variables[i].name() + " is negative");
    for (long c = 0; c < u[i]; ++c) d.summands.push_back({sys.variables[i].z, sys.variables[i].shift});
  }
  return d;
}

namespace {

long row_value(const LinearRow& row, const std::vector<long>& u) {
  long v = 0;
  for (const auto& [i, c] : row.coeffs) v += c * u.at(i);
  return v;
}

}  // namespace

std::optional<std::size_t> violated_equality(const LinearSystem& sys, const std::vector<long>& u) {
  for (std::size_t r = 0; r < sys.equalities.size(); ++r) {
    if (row_value(sys.equalities[r], u) != sys.equalities[r].rhs) return r;
  }
  return std::nullopt;
}

std::optional<std::size_t> violated_inequality(const LinearSystem& sys,
                                               const std::vector<long>& u) {
  for (std::size_t r = 0; r < sys.inequalities.size(); ++r) {
    if (row_value(sys.inequalities[r], u) > sys.inequalities[r].rhs) return r;
  }
  return std::nullopt;
}

std::optional<SubsetViolation> stanley_inequality_violation(const GradedModule& gm,
                                                            const HilbertDecomposition& d) {
  const Box& box = gm.g_box();
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const MultiDegree a = box.degree(idx);
    std::map<MultiDegree, long> count;
    for (const Summand& s : d.summands) {
      if (s.alive_at(a)) ++count[s.shift];
    }
    if (count.size() > kMaxExhaustiveInterval) {
      throw Error(ErrorKind::kResource, std::to_string(count.size()) +
                                            " distinct shifts alive at " + a.to_string());
    }
    std::vector<MultiDegree> shifts;
    std::vector<long> counts;
    std::vector<Subspace> images;
    for (const auto& [b, c] : count) {
      shifts.push_back(b);
      counts.push_back(c);
      images.push_back(gm.image(b, a));
    }
    for (std::uint32_t mask = 1; mask < (1U << shifts.size()); ++mask) {
      long lhs = 0;
      std::vector<Subspace> chosen;
      std::vector<MultiDegree> subset;
      for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (!(mask >> i & 1U)) continue;
        lhs += counts[i];
        chosen.push_back(images[i]);
        subset.push_back(shifts[i]);
      }
      const std::size_t dim = subspace_sum_dim(chosen);
      if (lhs > static_cast<long>(dim)) return SubsetViolation{a, subset, lhs, dim};
    }
  }
  return std::nullopt;
}

HilbertDecomposition import_solution(const LinearSystem& sys, std::istream& in,
                                     const std::string& source) {
  std::vector<long> u(sys.variables.size(), 0);
  std::vector<bool> seen(sys.variables.size(), false);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, value, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> value) || (fields >> extra)) {
      throw Error(ErrorKind::kParse, where + "expected 'name<TAB>value'");
    }
    const auto var = sys.find(name);
    if (!var) throw Error(ErrorKind::kParse, where + "unknown variable " + name);
    if (seen[*var]) throw Error(ErrorKind::kParse, where + name + " assigned twice");
    long v = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || end != value.data() + value.size()) {
      throw Error(ErrorKind::kParse, where + "value '" + value + "' is not an integer");
    }
    if (v < 0) throw Error(ErrorKind::kParse, where + "negative value for " + name);
    u[*var] = v;
    seen[*var] = true;
  }
  if (auto r = violated_equality(sys, u)) {
    const LinearRow& row = sys.equalities[*r];
    throw Error(ErrorKind::kPrecondition,
                source + ": infeasible, " + std::to_string(row_value(row, u)) +
                    " summands alive at " + row.degree.to_string() + " but dim M_a = " +
                    std::to_string(row.rhs));
  }
  HilbertDecomposition d = from_u_vector(sys, u);
  d.canonicalize();
  return d;
}

}  // namespace sdep
