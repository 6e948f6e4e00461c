// Interconnection shaping over resonant pairs: absorption (smallest retained
// radius) and containment (largest retained radius) under a beat-time bound,
// plus the (r_res, T_min) Pareto frontier.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gyroshape/error.hpp"
#include "gyroshape/inscribed.hpp"
#include "gyroshape/resonance.hpp"

namespace gyroshape {

enum class Objective { absorb, contain };
enum class TMinMode { approx, exact };

inline const char* to_string(Objective o)
{
  return o == Objective::absorb ? "absorb" : "contain";
}

inline const char* to_string(TMinMode m)
{
  return m == TMinMode::approx ? "approx" : "exact";
}

struct DesignQuery
{
  Objective objective{Objective::absorb};
  double t_max{0.0};
  double beat_min{10.0};
  std::int64_t max_order{60};
  std::optional<std::int64_t> exclude_low_order;  ///< drop pairs with tau + sigma <= M
  std::optional<std::int64_t> delta;              ///< restrict to tau - sigma == delta
  double d_bound{1.0};
  TMinMode t_min_mode{TMinMode::approx};
};

struct ParetoPoint
{
  ResonantPair pair;
  double n{0.0};
  double r_res_unit{0.0};  ///< inscribed radius at qdot0 = 1
  double t_min{0.0};
  bool dominated{false};
};

struct DesignOutcome
{
  std::optional<ParetoPoint> chosen;
  std::vector<ParetoPoint> frontier;  ///< feasible candidates, dominance marked
  bool feasible{false};
  double r_res{0.0};                  ///< d_bound * chosen r_res_unit
  double h_q_min{0.0};
  std::string rationale;
};

struct ScaledRadius
{
  double r_res{0.0};
  double h_q_min{0.0};
};

/// r_res is homogeneous of degree one in the impulse amplitude.
inline ScaledRadius scale_disturbance(const ParetoPoint& point, double qdot0)
{
  const double r = std::abs(qdot0) * point.r_res_unit;
  return {r, 0.5 * r * r};
}

inline ParetoPoint score_pair(const ResonantPair& pair, TMinMode mode)
{
  const InscribedReport rep = inscribed_radius_exact(resonant_param(pair, 1.0));
  return {pair, coupling_from_pair(pair), rep.r_res,
          mode == TMinMode::approx ? rep.t_min_approx : rep.t_min_exact, false};
}

/// Marks points dominated in (r_res_unit, t_min), both minimised. Identical
/// points do not dominate each other.
inline void mark_dominance(std::vector<ParetoPoint>& points)
{
  std::vector<std::size_t> idx(points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = i;
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].t_min != points[b].t_min) {
      return points[a].t_min < points[b].t_min;
    }
    return points[a].r_res_unit < points[b].r_res_unit;
  });
  double best_before = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j < idx.size() && points[idx[j]].t_min == points[idx[i]].t_min) {
      ++j;
    }
    const double group_min = points[idx[i]].r_res_unit;  // group sorted by r
    for (std::size_t k = i; k < j; ++k) {
      ParetoPoint& p = points[idx[k]];
      p.dominated = best_before <= p.r_res_unit || group_min < p.r_res_unit;
    }
    best_before = std::min(best_before, group_min);
    i = j;
  }
}

namespace detail {

inline void sort_by_t_min(std::vector<ParetoPoint>& points)
{
  std::stable_sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    if (a.t_min != b.t_min) {
      return a.t_min < b.t_min;
    }
    if (a.r_res_unit != b.r_res_unit) {
      return a.r_res_unit < b.r_res_unit;
    }
    if (a.pair.order != b.pair.order) {
      return a.pair.order < b.pair.order;
    }
    return a.pair.delta < b.pair.delta;
  });
}

constexpr double kRadiusTieTolerance = 1e-12;

}  // namespace detail

/// Every enumerated pair scored, dominance marked, sorted by t_min.
inline std::vector<ParetoPoint> pareto_frontier(std::int64_t max_order, double beat_min, TMinMode mode)
{
  std::vector<ParetoPoint> points;
  for (const auto& pair : enumerate_pairs(max_order, beat_min)) {
    points.push_back(score_pair(pair, mode));
  }
  mark_dominance(points);
  detail::sort_by_t_min(points);
  return points;
}

/// True when `a` is the better choice for the objective. Radii within
/// 1e-12 tie; ties go to smaller t_min, then smaller order, then smaller delta.
inline bool better_choice(const ParetoPoint& a, const ParetoPoint& b, Objective objective)
{
  const double diff = a.r_res_unit - b.r_res_unit;
  if (std::abs(diff) > detail::kRadiusTieTolerance) {
    return objective == Objective::absorb ? diff < 0.0 : diff > 0.0;
  }
  if (a.t_min != b.t_min) {
    return a.t_min < b.t_min;
  }
  if (a.pair.order != b.pair.order) {
    return a.pair.order < b.pair.order;
  }
  return a.pair.delta < b.pair.delta;
}

inline DesignOutcome solve(const DesignQuery& query)
{
  if (!(query.t_max > 0.0) || !std::isfinite(query.t_max)) {
    throw InvalidInput("t_max must be positive and finite");
  }
  if (!(query.d_bound >= 0.0) || !std::isfinite(query.d_bound)) {
    throw InvalidInput("disturbance bound must be finite and non-negative");
  }
  if (query.exclude_low_order && *query.exclude_low_order < 3) {
    throw InvalidInput("low-order threshold M must be >= 3");
  }

  DesignOutcome out;
  const auto infeasible = [&](const std::string& binding) {
    out.feasible = false;
    out.rationale = "infeasible: no resonant pair survives the " + binding + " constraint";
    return out;
  };

  std::vector<ResonantPair> pairs = enumerate_pairs(query.max_order, query.beat_min);
  if (pairs.empty()) {
    return infeasible("beat_min");
  }
  if (query.delta) {
    std::erase_if(pairs, [&](const ResonantPair& p) { return p.delta != *query.delta; });
    if (pairs.empty()) {
      return infeasible("delta");
    }
  }
  if (query.exclude_low_order) {
    std::erase_if(pairs, [&](const ResonantPair& p) { return p.order <= *query.exclude_low_order; });
    if (pairs.empty()) {
      return infeasible("exclude_low_order");
    }
  }

  std::vector<ParetoPoint> feasible;
  for (const auto& pair : pairs) {
    ParetoPoint p = score_pair(pair, query.t_min_mode);
    if (p.t_min <= query.t_max) {
      feasible.push_back(p);
    }
  }
  if (feasible.empty()) {
    return infeasible("t_max");
  }

  mark_dominance(feasible);
  detail::sort_by_t_min(feasible);
  const ParetoPoint* best = &feasible.front();
  for (const auto& p : feasible) {
    if (better_choice(p, *best, query.objective)) {
      best = &p;
    }
  }

  out.feasible = true;
  out.chosen = *best;
  out.frontier = std::move(feasible);
  const ScaledRadius scaled = scale_disturbance(*out.chosen, query.d_bound);
  out.r_res = scaled.r_res;
  out.h_q_min = scaled.h_q_min;

  std::ostringstream why;
  why << (query.objective == Objective::absorb ? "minimal" : "maximal")
      << " r_res among " << out.frontier.size() << " pairs with beat ratio >= " << query.beat_min
      << " and T_min (" << to_string(query.t_min_mode) << ") <= " << query.t_max;
  if (query.delta) {
    why << ", delta = " << *query.delta;
  }
  if (query.exclude_low_order) {
    why << ", order > " << *query.exclude_low_order;
  }
  out.rationale = why.str();
  return out;
}

}  // namespace gyroshape
