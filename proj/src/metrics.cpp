#include "kpsumm/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "kpsumm/common.hpp"

namespace kpsumm {

namespace {

// Applies fn(u_i, v_i) over the union of the two sparse supports.
template <typename Fn>
void merge_join(const WeightedVector& u, const WeightedVector& v, Fn&& fn) {
  const auto& a = u.entries();
  const auto& b = v.entries();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].term == b[j].term) {
      fn(a[i].weight, b[j].weight);
      ++i;
      ++j;
    } else if (a[i].term < b[j].term) {
      fn(a[i].weight, 0.0);
      ++i;
    } else {
      fn(0.0, b[j].weight);
      ++j;
    }
  }
  for (; i < a.size(); ++i) fn(a[i].weight, 0.0);
  for (; j < b.size(); ++j) fn(0.0, b[j].weight);
}

double minkowski_distance(const WeightedVector& u, const WeightedVector& v, double p) {
  double sum = 0;
  merge_join(u, v, [&](double x, double y) { sum += std::pow(std::fabs(x - y), p); });
  return std::pow(sum, 1.0 / p);
}

double euclidean_distance(const WeightedVector& u, const WeightedVector& v) {
  double sum = 0;
  merge_join(u, v, [&](double x, double y) { sum += (x - y) * (x - y); });
  return std::sqrt(sum);
}

double manhattan_distance(const WeightedVector& u, const WeightedVector& v) {
  double sum = 0;
  merge_join(u, v, [&](double x, double y) { sum += std::fabs(x - y); });
  return sum;
}

double chebyshev_distance(const WeightedVector& u, const WeightedVector& v) {
  double max = 0;
  merge_join(u, v, [&](double x, double y) { max = std::max(max, std::fabs(x - y)); });
  return max;
}

double jensen_shannon_divergence(const WeightedVector& u, const WeightedVector& v) {
  double mass_u = u.l1_norm();
  double mass_v = v.l1_norm();
  if (mass_u <= 0.0 || mass_v <= 0.0)
    throw DomainError("jensen-shannon divergence requires vectors with positive L1 mass");
  double sum = 0;
  merge_join(u, v, [&](double x, double y) {
    double p = x / mass_u;
    double q = y / mass_v;
    double m = 0.5 * (p + q);
    if (p > 0) sum += 0.5 * p * std::log(p / m);
    if (q > 0) sum += 0.5 * q * std::log(q / m);
  });
  return std::max(sum, 0.0);
}

}  // namespace

Metric Metric::minkowski(double p) {
  if (!(p > 0.0)) throw DomainError("minkowski exponent must be > 0");
  return {MetricKind::minkowski, p};
}

Metric parse_metric(const std::string& name) {
  if (name == "cosine") return Metric::cosine();
  if (name == "euclidean") return Metric::euclidean();
  if (name == "manhattan") return Metric::manhattan();
  if (name == "chebyshev") return Metric::chebyshev();
  if (name == "frac133") return Metric::frac133();
  if (name == "js" || name == "jensen-shannon") return Metric::jensen_shannon();
  const std::string prefix = "minkowski:";
  if (name.rfind(prefix, 0) == 0) {
    std::size_t pos = 0;
    double p = 0;
    std::string arg = name.substr(prefix.size());
    try {
      p = std::stod(arg, &pos);
    } catch (const std::exception&) {
      throw DomainError("invalid minkowski exponent: '" + arg + "'");
    }
    if (pos != arg.size()) throw DomainError("invalid minkowski exponent: '" + arg + "'");
    return Metric::minkowski(p);
  }
  throw DomainError(
      "unknown metric '" + name +
      "' (expected cosine|euclidean|manhattan|chebyshev|frac133|minkowski:<p>|js)");
}

std::string metric_name(const Metric& metric) {
  switch (metric.kind) {
    case MetricKind::cosine: return "cosine";
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::manhattan: return "manhattan";
    case MetricKind::chebyshev: return "chebyshev";
    case MetricKind::frac133: return "frac133";
    case MetricKind::jensen_shannon: return "js";
    case MetricKind::minkowski: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "minkowski:%g", metric.p);
      return buf;
    }
  }
  return "?";
}

double cosine_similarity(const WeightedVector& u, const WeightedVector& v) {
  double nu = u.l2_norm();
  double nv = v.l2_norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  double cos = u.dot(v) / (nu * nv);
  if (cos < 0.0) return 0.0;  // inputs are non-negative; guard rounding only
  return std::min(cos, 1.0);
}

double distance(const Metric& metric, const WeightedVector& u, const WeightedVector& v) {
  switch (metric.kind) {
    case MetricKind::cosine: return 1.0 - cosine_similarity(u, v);
    case MetricKind::euclidean: return euclidean_distance(u, v);
    case MetricKind::manhattan: return manhattan_distance(u, v);
    case MetricKind::chebyshev: return chebyshev_distance(u, v);
    case MetricKind::minkowski: return minkowski_distance(u, v, metric.p);
    case MetricKind::frac133: return minkowski_distance(u, v, 4.0 / 3.0);
    case MetricKind::jensen_shannon: return jensen_shannon_divergence(u, v);
  }
  throw DomainError("unreachable metric kind");
}

double similarity(const Metric& metric, const WeightedVector& u, const WeightedVector& v) {
  if (metric.kind == MetricKind::cosine) return cosine_similarity(u, v);
  return -distance(metric, u, v);
}

}  // namespace kpsumm
