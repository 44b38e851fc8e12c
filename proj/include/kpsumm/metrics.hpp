#pragma once

#include <string>

#include "kpsumm/vectorspace.hpp"

namespace kpsumm {

enum class MetricKind {
  cosine,
  euclidean,
  manhattan,
  chebyshev,
  minkowski,
  frac133,  // minkowski with p = 4/3
  jensen_shannon,
};

struct Metric {
  MetricKind kind = MetricKind::cosine;
  double p = 0.0;  // only meaningful for minkowski

  static Metric cosine() { return {MetricKind::cosine, 0.0}; }
  static Metric euclidean() { return {MetricKind::euclidean, 0.0}; }
  static Metric manhattan() { return {MetricKind::manhattan, 0.0}; }
  static Metric chebyshev() { return {MetricKind::chebyshev, 0.0}; }
  static Metric minkowski(double p);  // requires p > 0
  static Metric frac133() { return {MetricKind::frac133, 4.0 / 3.0}; }
  static Metric jensen_shannon() { return {MetricKind::jensen_shannon, 0.0}; }
};

// Accepts cosine|euclidean|manhattan|chebyshev|frac133|minkowski:<p>|js.
Metric parse_metric(const std::string& name);
std::string metric_name(const Metric& metric);

// Cosine distance is 1 - cos(u, v) with the zero-vector convention
// cos = 0; jensen_shannon uses natural log over L1-normalized inputs and
// throws DomainError when either vector has zero mass.
double distance(const Metric& metric, const WeightedVector& u, const WeightedVector& v);

// cos(u, v) for cosine; -distance for every distance metric, so that
// "similarity above threshold" and "distance below threshold" coincide.
double similarity(const Metric& metric, const WeightedVector& u, const WeightedVector& v);

double cosine_similarity(const WeightedVector& u, const WeightedVector& v);

}  // namespace kpsumm
