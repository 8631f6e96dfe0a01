#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "chebenclose/eval.hpp"
#include "chebenclose/expansion.hpp"
#include "chebenclose/interval.hpp"

namespace chebenclose {

struct BenchConfig {
  int degree = 1024;
  int num_points = 100;
  double decay_rho = 1.01;
  double coeff_radius = 0.0;
  double point_radius = 0.0;
  double boundary_bias = 0.1;
  std::uint64_t seed = 0;
  std::vector<Method> methods{all_methods.begin(), all_methods.end()};
  int timing_reps = 3;
  int threads = 0;  // 0 = hardware concurrency; CHEB_ENCLOSE_THREADS caps either way
};

struct PointSample {
  RealInterval x;
};

// Per-record status: the evaluator statuses plus the CLI-level domain error.
enum class RecordStatus { ok, degenerate, unbounded, domain_error };

inline RecordStatus to_record_status(EvalStatus s) {
  switch (s) {
    case EvalStatus::ok: return RecordStatus::ok;
    case EvalStatus::degenerate: return RecordStatus::degenerate;
    case EvalStatus::unbounded: return RecordStatus::unbounded;
  }
  return RecordStatus::domain_error;
}

inline std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::ok: return "ok";
    case RecordStatus::degenerate: return "degenerate";
    case RecordStatus::unbounded: return "unbounded";
    case RecordStatus::domain_error: return "domain_error";
  }
  return "unknown";
}

inline std::optional<RecordStatus> record_status_from_string(std::string_view s) {
  for (RecordStatus st : {RecordStatus::ok, RecordStatus::degenerate, RecordStatus::unbounded,
                          RecordStatus::domain_error})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

// One (point, method) outcome. Enclosure endpoints and radius are NaN when
// the method produced no enclosure (degenerate / domain_error).
struct ResultRow {
  int point_id = 0;
  RealInterval x;
  Method method = Method::laurent_horner;
  RealInterval enclosure;
  double radius = 0.0;
  std::int64_t elapsed_ns = 0;
  RecordStatus status = RecordStatus::ok;
};

struct DigitsSummary {
  double mean = std::numeric_limits<double>::quiet_NaN();
  int included = 0;
  int excluded = 0;
};

// mean(-log10(radius)) over positive finite radii; zero/infinite/NaN radii
// carry no digit count and are excluded (and counted).
inline DigitsSummary mean_correct_digits(std::span<const double> radii) {
  double sum = 0.0;
  int included = 0, excluded = 0;
  for (double r : radii) {
    if (std::isfinite(r) && r > 0.0) {
      sum += -std::log10(r);
      ++included;
    } else {
      ++excluded;
    }
  }
  DigitsSummary out;
  out.included = included;
  out.excluded = excluded;
  if (included > 0) out.mean = sum / included;
  return out;
}

struct MethodAggregate {
  Method method = Method::laurent_horner;
  DigitsSummary digits;
  double median_radius = std::numeric_limits<double>::quiet_NaN();
  std::int64_t total_ns = 0;
  int unbounded_count = 0;
  int degenerate_count = 0;
};

struct BenchReport {
  BenchConfig config;
  std::vector<ResultRow> rows;  // point-major, methods in config order
  std::vector<MethodAggregate> aggregates;
};

namespace detail {

// Stream tags keep the coefficient and point draws independent for one seed.
inline constexpr std::uint64_t kCoeffStream = 0x636f656666736565ULL;
inline constexpr std::uint64_t kPointStream = 0x706f696e74736565ULL;

// Uniform in [0, 1) from the top 53 bits; identical across platforms since
// mt19937_64 output is fully specified.
inline double unit_uniform(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double symmetric_uniform(std::mt19937_64& eng) {
  return 2.0 * unit_uniform(eng) - 1.0;  // [-1, 1)
}

inline RealInterval inflate(double mid, double rad) {
  if (rad == 0.0) return RealInterval(mid);
  return {next_down(mid - rad), next_up(mid + rad)};
}

inline std::int64_t median_of(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace detail

// Synthetic stand-in for a smooth random function: midpoints u_k * rho^-k
// with u_k uniform in [-1, 1], inflated to intervals of radius coeff_radius.
// The decay scale is accumulated with downward rounding so |mid(c_k)| <= rho^-k
// holds exactly.
inline ChebExpansion gen_decaying_coeffs(int degree, double decay_rho, double coeff_radius,
                                         std::uint64_t seed) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (!(decay_rho > 1.0)) throw std::invalid_argument("decay_rho must exceed 1");
  if (!(coeff_radius >= 0.0)) throw std::invalid_argument("coeff_radius must be nonnegative");
  std::mt19937_64 eng(seed ^ detail::kCoeffStream);
  std::vector<RealInterval> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  double scale = 1.0;
  for (int k = 0; k <= degree; ++k) {
    double mid = detail::symmetric_uniform(eng) * scale;
    c.push_back(detail::inflate(mid, coeff_radius));
    scale = std::max(0.0, detail::next_down(scale / decay_rho));
  }
  return ChebExpansion(std::move(c));
}

// ceil(boundary_bias * num_points) samples get |midpoint| > 0.99 (random
// sign, magnitude up to and including 1); the rest are uniform on [-1, 1].
// Every interval is intersected with [-1, 1] after inflation.
inline std::vector<PointSample> sample_points(int num_points, double point_radius,
                                              double boundary_bias, std::uint64_t seed) {
  if (num_points < 1) throw std::invalid_argument("num_points must be positive");
  if (!(point_radius >= 0.0)) throw std::invalid_argument("point_radius must be nonnegative");
  if (!(boundary_bias >= 0.0 && boundary_bias <= 1.0))
    throw std::invalid_argument("boundary_bias must lie in [0, 1]");
  std::mt19937_64 eng(seed ^ detail::kPointStream);
  int n_boundary = std::min(
      num_points, static_cast<int>(std::ceil(boundary_bias * num_points)));
  const RealInterval unit(-1.0, 1.0);
  std::vector<PointSample> out;
  out.reserve(static_cast<std::size_t>(num_points));
  for (int i = 0; i < num_points; ++i) {
    double t;
    if (i < n_boundary) {
      double mag = 1.0 - 0.01 * detail::unit_uniform(eng);  // (0.99, 1]
      if (!(mag > 0.99)) mag = detail::next_up(0.99);
      t = (eng() & 1u) ? -mag : mag;
    } else {
      t = detail::symmetric_uniform(eng);
    }
    out.push_back({intersect(detail::inflate(t, point_radius), unit)});
  }
  return out;
}

namespace detail {

inline int env_thread_cap() {
  const char* v = std::getenv("CHEB_ENCLOSE_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  int n = std::atoi(v);
  return n > 0 ? n : 1;
}

inline ResultRow run_one(int point_id, const ChebExpansion& p, const RealInterval& x,
                         Method m, int reps) {
  ResultRow row;
  row.point_id = point_id;
  row.x = x;
  row.method = m;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::int64_t> times;
  times.reserve(static_cast<std::size_t>(std::max(1, reps)));
  try {
    EnclosureResult res{};
    for (int r = 0; r < std::max(1, reps); ++r) {
      res = evaluate(m, p, x);
      times.push_back(res.elapsed_ns);
    }
    row.elapsed_ns = median_of(times);
    row.status = to_record_status(res.status);
    if (res.status == EvalStatus::degenerate) {
      row.enclosure = RealInterval(nan, nan);
      row.radius = nan;
    } else {
      row.enclosure = res.value;
      row.radius = radius(res.value);
    }
  } catch (const DomainError&) {
    row.status = RecordStatus::domain_error;
    row.enclosure = RealInterval(nan, nan);
    row.radius = nan;
  }
  return row;
}

}  // namespace detail

// Runs every configured method at every sampled point. Rows are keyed by
// (point id, method) and filled into fixed slots, so the report content is
// independent of worker count; only the elapsed_ns fields vary between runs.
inline BenchReport run_benchmark(const BenchConfig& cfg) {
  ChebExpansion p = gen_decaying_coeffs(cfg.degree, cfg.decay_rho, cfg.coeff_radius, cfg.seed);
  std::vector<PointSample> points =
      sample_points(cfg.num_points, cfg.point_radius, cfg.boundary_bias, cfg.seed);
  if (cfg.methods.empty()) throw std::invalid_argument("no methods selected");

  BenchReport report;
  report.config = cfg;
  std::size_t m = cfg.methods.size();
  report.rows.resize(points.size() * m);

  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (int cap = detail::env_thread_cap(); cap > 0) threads = std::min(threads, cap);
  threads = std::max(1, std::min<int>(threads, static_cast<int>(points.size())));

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < m; ++j)
        report.rows[i * m + j] = detail::run_one(static_cast<int>(i), p, points[i].x,
                                                 cfg.methods[j], cfg.timing_reps);
  };

  if (threads == 1) {
    worker(0, points.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (points.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = static_cast<std::size_t>(t) * chunk;
      std::size_t end = std::min(points.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t j = 0; j < m; ++j) {
    MethodAggregate agg;
    agg.method = cfg.methods[j];
    std::vector<double> radii, known_radii;  // known = an enclosure was returned
    for (std::size_t i = 0; i < points.size(); ++i) {
      const ResultRow& row = report.rows[i * m + j];
      radii.push_back(row.radius);
      if (!std::isnan(row.radius)) known_radii.push_back(row.radius);
      agg.total_ns += row.elapsed_ns;
      if (row.status == RecordStatus::unbounded) ++agg.unbounded_count;
      if (row.status == RecordStatus::degenerate) ++agg.degenerate_count;
    }
    agg.digits = mean_correct_digits(radii);
    if (!known_radii.empty()) {
      std::sort(known_radii.begin(), known_radii.end());
      std::size_t h = known_radii.size() / 2;
      agg.median_radius = known_radii.size() % 2 == 1
                              ? known_radii[h]
                              : 0.5 * (known_radii[h - 1] + known_radii[h]);
    }
    report.aggregates.push_back(agg);
  }
  return report;
}

}  // namespace chebenclose
