#include "wgen/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wgen {

CostIntervals::CostIntervals(std::vector<double> edges) : edges_(std::move(edges)) {
  if (edges_.size() < 2) raise(ErrorCode::bad_spec, "intervals need at least one bin");
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (!(edges_[i] < edges_[i + 1])) {
      raise(ErrorCode::bad_spec, "interval edges must be strictly increasing");
    }
  }
}

CostIntervals CostIntervals::equal_width(double range_min, double range_max, std::size_t n) {
  if (n == 0) raise(ErrorCode::bad_spec, "interval count must be >= 1");
  if (!(range_min < range_max)) raise(ErrorCode::bad_spec, "empty cost range");
  std::vector<double> edges(n + 1);
  const double width = (range_max - range_min) / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i) {
    edges[i] = range_min + width * static_cast<double>(i);
  }
  edges[0] = range_min;
  edges[n] = range_max;
  return CostIntervals(std::move(edges));
}

std::int64_t CostHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

void CostHistogram::validate() const {
  if (counts.size() != intervals.size()) {
    raise(ErrorCode::bad_spec, "histogram count vector length != interval count");
  }
  for (auto c : counts) {
    if (c < 0) raise(ErrorCode::bad_spec, "negative histogram count");
  }
}

void BenchmarkSpec::validate() const {
  if (num_intervals < 1) raise(ErrorCode::bad_spec, "num_intervals must be >= 1");
  if (num_queries < static_cast<std::int64_t>(num_intervals)) {
    raise(ErrorCode::bad_spec, "num_queries must be >= num_intervals");
  }
  if (!(range_min < range_max)) raise(ErrorCode::bad_spec, "cost range is empty");
  if (shape == Shape::normal && !(stddev > 0)) {
    raise(ErrorCode::bad_spec, "normal shape needs stddev > 0");
  }
  if (shape == Shape::file) {
    if (weights.size() != num_intervals) {
      raise(ErrorCode::bad_spec, "file shape needs exactly one weight per interval");
    }
    double sum = 0;
    for (double w : weights) {
      if (w < 0 || !std::isfinite(w)) raise(ErrorCode::bad_spec, "weights must be non-negative");
      sum += w;
    }
    if (!(sum > 0)) raise(ErrorCode::bad_spec, "weights sum to zero");
  }
}

namespace {

// Largest-remainder apportionment of N over normalized weights; sum-preserving
// and deterministic (remainder ties go to the lowest index).
std::vector<std::int64_t> apportion(std::int64_t n, const std::vector<double>& weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::int64_t> counts(weights.size(), 0);
  std::vector<std::pair<double, std::size_t>> remainders;
  remainders.reserve(weights.size());
  std::int64_t assigned = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double quota = static_cast<double>(n) * weights[j] / total;
    counts[j] = static_cast<std::int64_t>(std::floor(quota));
    assigned += counts[j];
    remainders.emplace_back(quota - std::floor(quota), j);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::int64_t k = 0; k < n - assigned; ++k) {
    counts[remainders[static_cast<std::size_t>(k)].second] += 1;
  }
  return counts;
}

double normal_cdf(double x, double mean, double stddev) {
  return 0.5 * std::erfc(-(x - mean) / (stddev * std::sqrt(2.0)));
}

}  // namespace

CostHistogram build_target(const BenchmarkSpec& spec) {
  spec.validate();
  auto intervals = CostIntervals::equal_width(spec.range_min, spec.range_max, spec.num_intervals);

  std::vector<double> weights(spec.num_intervals, 1.0);
  switch (spec.shape) {
    case Shape::uniform:
      break;
    case Shape::normal:
      for (std::size_t j = 0; j < spec.num_intervals; ++j) {
        weights[j] = normal_cdf(intervals.upper(j), spec.mean, spec.stddev) -
                     normal_cdf(intervals.lower(j), spec.mean, spec.stddev);
      }
      break;
    case Shape::file:
      weights = spec.weights;
      break;
  }

  CostHistogram target{std::move(intervals), apportion(spec.num_queries, weights)};
  target.validate();
  return target;
}

std::optional<std::size_t> bin_index(const CostIntervals& intervals, double cost) {
  if (intervals.size() == 0) return std::nullopt;
  if (cost < intervals.range_min() || cost >= intervals.range_max()) return std::nullopt;
  const auto& edges = intervals.edges();
  auto it = std::upper_bound(edges.begin(), edges.end(), cost);
  const auto idx = static_cast<std::size_t>(std::distance(edges.begin(), it));
  // upper_bound lands one past the containing lower edge
  return std::min(idx - 1, intervals.size() - 1);
}

std::vector<std::int64_t> coverage(std::span<const std::vector<double>> cost_vectors,
                                   const CostIntervals& intervals) {
  std::vector<std::int64_t> counts(intervals.size(), 0);
  for (const auto& costs : cost_vectors) {
    for (double c : costs) {
      if (auto j = bin_index(intervals, c)) counts[*j] += 1;
    }
  }
  return counts;
}

double wasserstein(const CostHistogram& a, const CostHistogram& b) {
  a.validate();
  b.validate();
  if (!(a.intervals == b.intervals)) {
    raise(ErrorCode::interval_mismatch, "histograms have different intervals");
  }
  const std::size_t n = a.intervals.size();

  auto normalize = [n](const CostHistogram& h) {
    std::vector<double> mass(n, 0.0);
    const double total = static_cast<double>(h.total());
    if (total <= 0) {
      mass[0] = 1.0;  // documented sentinel: all mass at the lowest midpoint
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        mass[j] = static_cast<double>(h.counts[j]) / total;
      }
    }
    return mass;
  };

  const auto pa = normalize(a);
  const auto pb = normalize(b);

  // 1-D EMD between point masses at bin midpoints: integrate |CDF_a - CDF_b|
  // along the midpoint axis. For equal-width bins the per-step factor is the
  // bin width.
  double distance = 0.0;
  double cdf_diff = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    cdf_diff += pa[j] - pb[j];
    distance += std::abs(cdf_diff) * (a.intervals.midpoint(j + 1) - a.intervals.midpoint(j));
  }
  return distance;
}

std::optional<std::pair<std::size_t, std::int64_t>> largest_gap(
    const CostHistogram& target, const CostHistogram& current,
    const std::set<std::size_t>& skip) {
  if (!(target.intervals == current.intervals)) {
    raise(ErrorCode::interval_mismatch, "histograms have different intervals");
  }
  std::optional<std::pair<std::size_t, std::int64_t>> best;
  for (std::size_t j = 0; j < target.counts.size(); ++j) {
    if (skip.count(j)) continue;
    const std::int64_t gap = target.counts[j] - current.counts[j];
    if (!best || gap > best->second) best = {j, gap};
  }
  if (best && best->second > 0) return best;
  return std::nullopt;
}

}  // namespace wgen
