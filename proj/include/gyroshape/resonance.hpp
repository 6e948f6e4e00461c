// Integer arithmetic of resonant frequency pairs.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gyroshape/error.hpp"

namespace gyroshape {

/// Coprime (tau, sigma) with tau > sigma >= 1 such that omega1 / omega2 = tau / sigma.
struct ResonantPair
{
  std::int64_t tau{2};
  std::int64_t sigma{1};
  std::int64_t delta{1};  ///< tau - sigma
  std::int64_t order{3};  ///< tau + sigma

  friend bool operator==(const ResonantPair&, const ResonantPair&) = default;
};

inline ResonantPair make_pair(std::int64_t tau, std::int64_t sigma)
{
  if (tau < 1 || sigma < 1) {
    throw InvalidInput("resonant pair entries must be positive");
  }
  if (tau <= sigma) {
    throw PairOrdering("resonant pair requires tau > sigma, got (" + std::to_string(tau) +
                       ", " + std::to_string(sigma) + ")");
  }
  if (std::gcd(tau, sigma) != 1) {
    throw NotCoprime("(" + std::to_string(tau) + ", " + std::to_string(sigma) +
                     ") share the factor " + std::to_string(std::gcd(tau, sigma)));
  }
  return {tau, sigma, tau - sigma, tau + sigma};
}

/// Positive coupling n = (tau - sigma) / sqrt(tau sigma) realising the pair.
inline double coupling_from_pair(const ResonantPair& pair)
{
  return static_cast<double>(pair.delta) /
         std::sqrt(static_cast<double>(pair.tau) * static_cast<double>(pair.sigma));
}

/// (tau + sigma) / (tau - sigma): fast cycles per slow beat period.
inline double beat_ratio(const ResonantPair& pair)
{
  return static_cast<double>(pair.order) / static_cast<double>(pair.delta);
}

/// The inscribed radius vanishes exactly for these pairs.
inline bool is_degenerate(const ResonantPair& pair)
{
  return pair.delta % 4 == 2;
}

enum class ResonanceKind { low_order, generic };

/// Low-order membership for a threshold M. High order is a property of
/// sequences, so a single pair outside the low-order set is reported as
/// generic together with its order and |n|.
struct ResonanceClass
{
  ResonanceKind kind{ResonanceKind::generic};
  std::int64_t m_threshold{0};
  std::int64_t order{0};
  double abs_n{0.0};
};

inline ResonanceClass classify(const ResonantPair& pair, std::int64_t m_threshold)
{
  if (m_threshold < 3) {
    throw InvalidInput("low-order threshold M must be >= 3");
  }
  const auto kind = pair.order <= m_threshold ? ResonanceKind::low_order : ResonanceKind::generic;
  return {kind, m_threshold, pair.order, coupling_from_pair(pair)};
}

inline const char* to_string(ResonanceKind kind)
{
  return kind == ResonanceKind::low_order ? "low_order" : "generic";
}

/// All coprime pairs with order <= max_order and beat ratio >= beat_min,
/// sorted by (order, delta).
inline std::vector<ResonantPair> enumerate_pairs(std::int64_t max_order, double beat_min)
{
  if (max_order < 3) {
    throw InvalidInput("max_order must be >= 3");
  }
  if (!(beat_min >= 1.0)) {
    throw InvalidInput("beat_min must be >= 1");
  }
  std::vector<ResonantPair> out;
  for (std::int64_t order = 3; order <= max_order; ++order) {
    // delta ascending means tau ascending from just above order / 2.
    for (std::int64_t tau = order / 2 + 1; tau < order; ++tau) {
      const std::int64_t sigma = order - tau;
      if (std::gcd(tau, sigma) != 1) {
        continue;
      }
      const ResonantPair pair{tau, sigma, tau - sigma, order};
      // Integer form of order / delta >= beat_min avoids rounding at the boundary.
      if (static_cast<double>(pair.order) >= beat_min * static_cast<double>(pair.delta)) {
        out.push_back(pair);
      }
    }
  }
  return out;
}

namespace detail {

/// Continued-fraction convergents p/q of a ratio > 1 with p + q <= max_order.
inline std::vector<ResonantPair> convergent_candidates(double ratio, std::int64_t max_order)
{
  std::vector<ResonantPair> out;
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p = static_cast<std::int64_t>(std::floor(ratio)), q = 1;
  double rest = ratio - std::floor(ratio);
  for (int iter = 0; iter < 64; ++iter) {
    if (p + q > max_order) {
      break;
    }
    if (p > q && q >= 1 && std::gcd(p, q) == 1) {
      out.push_back({p, q, p - q, p + q});
    }
    if (rest < 1e-15) {
      break;
    }
    const double inv = 1.0 / rest;
    const auto digit = static_cast<std::int64_t>(std::floor(inv));
    rest = inv - std::floor(inv);
    const std::int64_t p_next = digit * p + p_prev;
    const std::int64_t q_next = digit * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return out;
}

}  // namespace detail

/// Smallest-order pair (ties: smallest delta) whose coupling is within tol of
/// |n|, or nothing if no pair up to max_order qualifies.
///
/// Convergents of omega1/omega2 only shorten the scan: when one qualifies,
/// orders above it cannot win, so the exhaustive pass stops there.
inline std::optional<ResonantPair> pair_from_coupling(double n, double tol, std::int64_t max_order)
{
  if (!std::isfinite(n)) {
    throw InvalidInput("coupling n must be finite");
  }
  if (!(tol > 0.0)) {
    throw InvalidInput("tolerance must be > 0");
  }
  if (max_order < 3) {
    throw InvalidInput("max_order must be >= 3");
  }
  const double abs_n = std::abs(n);
  const auto matches = [&](const ResonantPair& p) {
    return std::abs(coupling_from_pair(p) - abs_n) <= tol;
  };

  std::int64_t scan_limit = max_order;
  const double root = std::hypot(abs_n, 2.0);
  const double ratio = (root + abs_n) / (root - abs_n);
  if (std::isfinite(ratio) && ratio > 1.0) {
    for (const auto& c : detail::convergent_candidates(ratio, max_order)) {
      if (matches(c)) {
        scan_limit = c.order;
        break;
      }
    }
  }

  for (std::int64_t order = 3; order <= scan_limit; ++order) {
    for (std::int64_t tau = order / 2 + 1; tau < order; ++tau) {
      const std::int64_t sigma = order - tau;
      if (std::gcd(tau, sigma) != 1) {
        continue;
      }
      const ResonantPair pair{tau, sigma, tau - sigma, order};
      if (matches(pair)) {
        return pair;
      }
    }
  }
  return std::nullopt;
}

}  // namespace gyroshape
