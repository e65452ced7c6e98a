#include "sdep/hilbert.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "sdep/error.hpp"

namespace sdep {

std::string Depth::to_string() const {
  return value ? std::to_string(*value) : std::string("inf");
}

TruncatedSeries::TruncatedSeries(MultiDegree g) : box_(std::move(g)), coeff_(box_.size(), 0) {}

long TruncatedSeries::total() const {
  long sum = 0;
  for (long c : coeff_) sum += c;
  return sum;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.g() != g()) throw Error(ErrorKind::kDimensionMismatch, "series over different boxes");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.g() != g()) throw Error(ErrorKind::kDimensionMismatch, "series over different boxes");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    os << box_.degree(i).to_string() << ' ' << coeff_[i] << '\n';
  }
  return os.str();
}

TruncatedSeries truncated_series(const GradedModule& gm) {
  TruncatedSeries s(gm.g());
  for (std::size_t i = 0; i < s.box().size(); ++i) {
    s.coefficients()[i] = static_cast<long>(gm.hilbert_function(s.box().degree(i)));
  }
  return s;
}

std::string Interval::to_string() const {
  return "[" + lower.to_string() + "," + upper.to_string() + "]";
}

namespace {

void require_interval_in_box(const Interval& iv, const MultiDegree& g) {
  if (iv.lower.size() != g.size() || iv.upper.size() != g.size() ||
      !iv.lower.is_nonnegative() || !iv.lower.precedes(iv.upper) || !iv.upper.precedes(g)) {
    throw Error(ErrorKind::kRange, "interval " + iv.to_string() + " is not inside [0," +
                                       g.to_string() + "]");
  }
}

}  // namespace

TruncatedSeries interval_poly(const Interval& iv, const MultiDegree& g) {
  require_interval_in_box(iv, g);
  TruncatedSeries s(g);
  for (const MultiDegree& c : interval_degrees(iv.lower, iv.upper)) s[c] += 1;
  return s;
}

void HilbertPartition::canonicalize() { std::sort(intervals.begin(), intervals.end()); }

bool Summand::alive_at(const MultiDegree& a) const {
  if (!shift.precedes(a)) return false;
  return support(a - shift).is_subset_of(vars);
}

std::string Summand::to_string() const {
  return "K[" + vars.to_string() + "](-" + shift.to_string() + ")";
}

Depth HilbertDecomposition::depth() const {
  if (summands.empty()) return Depth::infinite();
  std::size_t best = summands.front().vars.size();
  for (const Summand& s : summands) best = std::min(best, s.vars.size());
  return Depth::finite(best);
}

void HilbertDecomposition::canonicalize() { std::sort(summands.begin(), summands.end()); }

std::vector<std::size_t> HilbertDecomposition::contributing(const MultiDegree& a) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].alive_at(a)) out.push_back(i);
  }
  return out;
}

TruncatedSeries partition_series(const HilbertPartition& p, const MultiDegree& g) {
  TruncatedSeries s(g);
  for (const Interval& iv : p.intervals) {
    require_interval_in_box(iv, g);
    for (const MultiDegree& c : interval_degrees(iv.lower, iv.upper)) s[c] += 1;
  }
  return s;
}

HilbertDecomposition induced_decomposition(const HilbertPartition& p, const MultiDegree& g) {
  HilbertDecomposition d;
  for (const Interval& iv : p.intervals) {
    require_interval_in_box(iv, g);
    const VarSet z = saturated_coordinates(iv.upper, g);
    MultiDegree top = iv.upper;
    for (std::size_t j : z.members()) top[j] = iv.lower[j];
    for (const MultiDegree& c : interval_degrees(iv.lower, top)) d.summands.push_back({z, c});
  }
  d.canonicalize();
  return d;
}

HilbertDecomposition partition_to_decomposition(const HilbertPartition& p,
                                                const TruncatedSeries& series) {
  TruncatedSeries sum(series.g());
  try {
    sum = partition_series(p, series.g());
  } catch (const Error& e) {
    throw Error(ErrorKind::kPartitionMismatch, e.what());
  }
  if (!(sum == series)) {
    for (std::size_t i = 0; i < sum.coefficients().size(); ++i) {
      if (sum.coefficients()[i] != series.coefficients()[i]) {
        throw Error(ErrorKind::kPartitionMismatch,
                    "intervals give coefficient " + std::to_string(sum.coefficients()[i]) +
                        " at " + series.box().degree(i).to_string() + ", series has " +
                        std::to_string(series.coefficients()[i]));
      }
    }
  }
  return induced_decomposition(p, series.g());
}

HilbertPartition decomposition_to_partition(const HilbertDecomposition& d, const MultiDegree& g) {
  HilbertPartition p;
  for (const Summand& s : d.summands) {
    MultiDegree b = s.shift;
    for (std::size_t j : s.vars.members()) b[j] = g[j];
    p.intervals.push_back({s.shift, b});
  }
  p.canonicalize();
  return p;
}

ValidationResult validate_decomposition(const HilbertDecomposition& d, const GradedModule& gm) {
  const MultiDegree& g = gm.g();
  const std::size_t n = gm.n();
  TruncatedSeries alive(g);
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const Summand& s = d.summands[i];
    const std::string who = "summand " + std::to_string(i + 1) + " " + s.to_string();
    if (s.shift.size() != n || !s.shift.is_nonnegative() || !s.shift.precedes(g)) {
      return {false, s.shift, who + ": shift is not in [0," + g.to_string() + "]"};
    }
    if (!s.vars.is_subset_of(VarSet::all(n))) {
      return {false, s.shift, who + ": variable index above n"};
    }
    if (!saturated_coordinates(s.shift, g).is_subset_of(s.vars)) {
      return {false, s.shift, who + ": coordinates with s_j = g_j must be free variables"};
    }
    MultiDegree top = s.shift;
    for (std::size_t j : s.vars.members()) top[j] = g[j];
    for (const MultiDegree& c : interval_degrees(s.shift, top)) alive[c] += 1;
  }
  const Box& box = alive.box();
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const MultiDegree a = box.degree(idx);
    const long want = static_cast<long>(gm.hilbert_function(a));
    if (alive.coefficients()[idx] != want) {
      return {false, a,
              std::to_string(alive.coefficients()[idx]) + " summands alive at " + a.to_string() +
                  " but dim M_a = " + std::to_string(want)};
    }
  }
  return {};
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const TruncatedSeries& series, std::size_t min_depth,
                  const PartitionVisitor& visitor)
      : box_(series.box()), g_(series.g()), visitor_(visitor) {
    residual_ = series.coefficients();
    covers_.resize(box_.size());
    for (std::size_t a = 0; a < box_.size(); ++a) {
      const MultiDegree lower = box_.degree(a);
      for (const MultiDegree& b : interval_degrees(lower, g_)) {
        const std::size_t rho = saturated_coordinates(b, g_).size();
        if (rho < min_depth) continue;
        Cover c{box_.index(b), rho, {}};
        for (const MultiDegree& x : interval_degrees(lower, b)) {
          c.cells.push_back(static_cast<std::uint32_t>(box_.index(x)));
        }
        covers_[a].push_back(std::move(c));
      }
      // Deep intervals first, then lexicographic by upper corner.
      std::stable_sort(covers_[a].begin(), covers_[a].end(),
                       [](const Cover& x, const Cover& y) { return x.rho > y.rho; });
    }
  }

  EnumerationStats run() {
    for (long c : residual_) {
      if (c < 0) return stats_;
    }
    dfs(0, box_.size(), 0);
    return stats_;
  }

 private:
  struct Cover {
    std::size_t upper;
    std::size_t rho;
    std::vector<std::uint32_t> cells;
  };

  // Returns false once the visitor asked to stop.
  bool dfs(std::size_t start, std::size_t last_lower, std::size_t last_cover) {
    ++stats_.nodes;
    std::size_t a = start;
    while (a < residual_.size() && residual_[a] == 0) ++a;
    if (a == residual_.size()) {
      HilbertPartition p;
      for (const auto& [lower, cover] : chosen_) {
        p.intervals.push_back({box_.degree(lower), box_.degree(covers_[lower][cover].upper)});
      }
      p.canonicalize();
      ++stats_.partitions;
      if (!visitor_(p)) {
        stats_.stopped = true;
        return false;
      }
      return true;
    }
    const std::vector<Cover>& options = covers_[a];
    // Intervals sharing a lower corner are chosen in non-decreasing cover order.
    for (std::size_t pos = a == last_lower ? last_cover : 0; pos < options.size(); ++pos) {
      const Cover& c = options[pos];
      bool fits = true;
      for (std::uint32_t x : c.cells) {
        if (residual_[x] <= 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::uint32_t x : c.cells) --residual_[x];
      chosen_.emplace_back(a, pos);
      const bool keep_going = dfs(a, a, pos);
      chosen_.pop_back();
      for (std::uint32_t x : c.cells) ++residual_[x];
      if (!keep_going) return false;
    }
    return true;
  }

  const Box& box_;
  MultiDegree g_;
  const PartitionVisitor& visitor_;
  std::vector<long> residual_;
  std::vector<std::vector<Cover>> covers_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats enumerate_partitions(const TruncatedSeries& series, std::size_t min_depth,
                                      const PartitionVisitor& visitor) {
  PartitionSearch search(series, min_depth, visitor);
  return search.run();
}

Depth hdepth(const GradedModule& gm) {
  if (gm.is_zero()) return Depth::infinite();
  const TruncatedSeries series = truncated_series(gm);
  for (std::size_t s = gm.n() + 1; s-- > 0;) {
    const EnumerationStats st =
        enumerate_partitions(series, s, [](const HilbertPartition&) { return false; });
    if (st.partitions > 0) return Depth::finite(s);
  }
  throw Error(ErrorKind::kPrecondition, "no Hilbert partition of depth >= 0 exists");
}

}  // namespace sdep
