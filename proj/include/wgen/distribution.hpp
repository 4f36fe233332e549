#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wgen/core.hpp"

namespace wgen {

/// Contiguous, sorted, half-open cost intervals [l_j, u_j) covering
/// [range_min, range_max).
class CostIntervals {
 public:
  CostIntervals() = default;
  explicit CostIntervals(std::vector<double> edges);

  static CostIntervals equal_width(double range_min, double range_max, std::size_t n);

  std::size_t size() const { return edges_.empty() ? 0 : edges_.size() - 1; }
  double range_min() const { return edges_.front(); }
  double range_max() const { return edges_.back(); }
  double lower(std::size_t j) const { return edges_[j]; }
  double upper(std::size_t j) const { return edges_[j + 1]; }
  double width(std::size_t j) const { return edges_[j + 1] - edges_[j]; }
  double midpoint(std::size_t j) const { return edges_[j] + width(j) / 2.0; }
  const std::vector<double>& edges() const { return edges_; }

  bool operator==(const CostIntervals& other) const = default;

 private:
  std::vector<double> edges_;  // size n+1, strictly increasing
};

/// Binned distribution over a cost range; holds both targets (d*) and
/// achieved/current distributions (d^c).
struct CostHistogram {
  CostIntervals intervals;
  std::vector<std::int64_t> counts;

  static CostHistogram zeros(const CostIntervals& intervals) {
    return {intervals, std::vector<std::int64_t>(intervals.size(), 0)};
  }

  std::int64_t total() const;
  void validate() const;
};

enum class Shape { uniform, normal, file };

struct BenchmarkSpec {
  std::string name;
  CostMetric cost_type = CostMetric::plan_cost;
  double range_min = 0.0;
  double range_max = 0.0;
  std::int64_t num_queries = 0;   // N
  std::size_t num_intervals = 0;  // n
  Shape shape = Shape::uniform;
  double mean = 0.0;    // normal
  double stddev = 0.0;  // normal
  std::vector<double> weights;  // file shape: n non-negative reals

  void validate() const;  // throws BadSpec
};

/// Target histogram for a benchmark spec; counts always sum to exactly N.
/// Uniform assigns floor(N/n) per bin with the remainder spread from the
/// lowest index; normal integrates the density per bin; file normalizes the
/// given weights. Fractional quotas are rounded by largest remainder.
CostHistogram build_target(const BenchmarkSpec& spec);

/// Index j with l_j <= cost < u_j, or nullopt when cost is outside
/// [range_min, range_max).
std::optional<std::size_t> bin_index(const CostIntervals& intervals, double cost);

/// Per-interval counts of observed costs; out-of-range costs are ignored.
std::vector<std::int64_t> coverage(std::span<const std::vector<double>> cost_vectors,
                                   const CostIntervals& intervals);

/// 1-D earth mover's distance between the histograms normalized to
/// probability mass, with bin mass placed at interval midpoints. An all-zero
/// histogram is treated as all mass at the lowest midpoint.
double wasserstein(const CostHistogram& a, const CostHistogram& b);

/// argmax over j not in `skip` of target[j] - current[j]; absent when the
/// best gap is <= 0. Ties resolve to the lowest index.
std::optional<std::pair<std::size_t, std::int64_t>> largest_gap(
    const CostHistogram& target, const CostHistogram& current,
    const std::set<std::size_t>& skip);

}  // namespace wgen
