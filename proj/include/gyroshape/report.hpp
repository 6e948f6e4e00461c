// CSV and JSON serialisation shared by the command-line tool.
//
// Floats are written in scientific notation with 12 significant digits so
// identical inputs produce byte-identical files. JSON keys keep insertion
// order.
#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gyroshape/design.hpp"
#include "gyroshape/dynamics.hpp"
#include "gyroshape/envelope.hpp"
#include "gyroshape/inscribed.hpp"
#include "gyroshape/resonance.hpp"

namespace gyroshape::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

inline std::string format_number(double value)
{
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", value == 0.0 ? 0.0 : value);
  return buf;
}

namespace detail {

inline void write_string(std::ostream& os, const std::string& s)
{
  os << Json(s).dump();
}

inline void write_json(std::ostream& os, const Json& j, int indent, int depth)
{
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          os << ",\n";
        }
        first = false;
        os << pad;
        write_string(os, it.key());
        os << ": ";
        write_json(os, it.value(), indent, depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) {
          os << ",\n";
        }
        first = false;
        os << pad;
        write_json(os, v, indent, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        os << format_number(v);
      } else {
        os << "null";
      }
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace detail

/// Pretty JSON with floats in fixed 12-significant-digit scientific form.
inline std::string dump(const Json& j)
{
  std::ostringstream os;
  detail::write_json(os, j, 2, 0);
  os << "\n";
  return os.str();
}

inline Json optional_number(const std::optional<double>& v)
{
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const ModalSystem& s)
{
  return Json{{"n", s.n}, {"omega1", s.omega1}, {"omega2", s.omega2}};
}

inline Json to_json(const ResonantPair& p)
{
  return Json{{"tau", p.tau}, {"sigma", p.sigma}, {"delta", p.delta}, {"order", p.order}};
}

inline Json to_json(const ResonanceClass& c)
{
  return Json{{"kind", to_string(c.kind)},
              {"m_threshold", c.m_threshold},
              {"order", c.order},
              {"abs_n", c.abs_n}};
}

inline Json to_json(const InscribedReport& r)
{
  Json j;
  j["degenerate"] = r.degenerate;
  j["certified"] = true;
  j["r_res"] = r.r_res;
  j["r_res_tolerance"] = r.degenerate ? 0.0 : 1e-12;
  j["theta_min"] = r.theta_min;
  j["theta_c"] = optional_number(r.theta_c);
  j["theta_asy"] = optional_number(r.theta_asy);
  j["u_asy"] = optional_number(r.u_asy);
  j["error_bound"] = optional_number(r.error_bound);
  j["root_tolerance"] = ::gyroshape::detail::kRootTolerance;
  j["t_min_exact"] = r.t_min_exact;
  j["t_min_approx"] = r.t_min_approx;
  j["h_q_min"] = r.h_q_min;
  return j;
}

inline Json to_json(const UncertifiedRadius& u)
{
  return Json{{"certified", false},
              {"r_min", u.r_min},
              {"t_at_min", u.t_at_min},
              {"horizon", u.horizon},
              {"samples", u.samples}};
}

inline Json to_json(const ParetoPoint& p)
{
  return Json{{"tau", p.pair.tau},
              {"sigma", p.pair.sigma},
              {"n", p.n},
              {"r_res_unit", p.r_res_unit},
              {"t_min", p.t_min},
              {"dominated", p.dominated}};
}

inline Json to_json(const DesignQuery& q)
{
  Json j;
  j["objective"] = to_string(q.objective);
  j["t_max"] = q.t_max;
  j["beat_min"] = q.beat_min;
  j["max_order"] = q.max_order;
  j["exclude_low_order"] = q.exclude_low_order ? Json(*q.exclude_low_order) : Json(nullptr);
  j["delta"] = q.delta ? Json(*q.delta) : Json(nullptr);
  j["d_bound"] = q.d_bound;
  j["t_min_mode"] = to_string(q.t_min_mode);
  return j;
}

inline Json to_json(const DesignOutcome& o)
{
  Json j;
  j["feasible"] = o.feasible;
  j["chosen"] = o.chosen ? to_json(*o.chosen) : Json(nullptr);
  j["r_res"] = o.r_res;
  j["h_q_min"] = o.h_q_min;
  j["rationale"] = o.rationale;
  Json frontier = Json::array();
  for (const auto& p : o.frontier) {
    frontier.push_back(to_json(p));
  }
  j["frontier"] = std::move(frontier);
  return j;
}

/// Top-level document: schema version, echoed inputs, results, provenance.
inline Json document(Json inputs, Json results, const char* provenance)
{
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["provenance"] = provenance;
  return j;
}

inline std::string csv_row(std::initializer_list<std::string> cells)
{
  std::string row;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) {
      row += ',';
    }
    first = false;
    row += c;
  }
  row += '\n';
  return row;
}

inline std::string trace_csv(const std::vector<StateSample>& samples)
{
  std::string out = "t,q,qdot,z,zdot,hq,hz,h\n";
  for (const auto& s : samples) {
    out += csv_row({format_number(s.t), format_number(s.q), format_number(s.qdot),
                    format_number(s.z), format_number(s.zdot), format_number(s.hq),
                    format_number(s.hz), format_number(s.h)});
  }
  return out;
}

inline std::string envelope_csv(const EnvelopeCurve& curve)
{
  std::string out = "phi,q,qdot\n";
  for (const auto& e : curve.samples) {
    out += csv_row({format_number(e.phi), format_number(e.x.q), format_number(e.x.qdot)});
  }
  return out;
}

inline std::string pareto_csv(const std::vector<ParetoPoint>& points)
{
  std::string out = "tau,sigma,n,r_res_unit,t_min,dominated\n";
  for (const auto& p : points) {
    out += csv_row({std::to_string(p.pair.tau), std::to_string(p.pair.sigma), format_number(p.n),
                    format_number(p.r_res_unit), format_number(p.t_min),
                    p.dominated ? "1" : "0"});
  }
  return out;
}

}  // namespace gyroshape::report
