#include "transco/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace transco {

namespace {

nlohmann::json amps_to_json(const std::vector<cplx>& amps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const cplx& a : amps) arr.push_back({a.real(), a.imag()});
  return arr;
}

std::vector<cplx> amps_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("amplitude list expected");
  std::vector<cplx> amps;
  amps.reserve(arr.size());
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("amplitudes must be [re, im] pairs");
    amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return amps;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json field_to_json(const FieldState& s) {
  return {{"n_cut", s.n_cut()}, {"amps", amps_to_json(s.amps)}};
}

FieldState field_from_json(const nlohmann::json& j) {
  if (!j.contains("n_cut") || !j.contains("amps"))
    throw std::invalid_argument("field JSON needs n_cut and amps");
  FieldState s;
  s.amps = amps_from_json(j.at("amps"));
  const int n_cut = j.at("n_cut").get<int>();
  if (n_cut < 0 || s.amps.size() != static_cast<size_t>(n_cut) + 1)
    throw std::invalid_argument("n_cut does not match amplitude count");
  const double n2 = norm_squared(s);
  if (std::abs(n2 - 1.0) > 1e-6)
    throw std::invalid_argument("field state is not normalized");
  if (std::abs(n2 - 1.0) > kNormTol) renormalize(s);
  return s;
}

nlohmann::json joint_to_json(const JointState& s) {
  return {{"omega_ratio", s.params.omega / s.params.omega0},
          {"g_amps", amps_to_json(s.g)},
          {"e_amps", amps_to_json(s.e)}};
}

JointState joint_from_json(const nlohmann::json& j) {
  if (!j.contains("omega_ratio") || !j.contains("g_amps") ||
      !j.contains("e_amps"))
    throw std::invalid_argument(
        "joint JSON needs omega_ratio, g_amps and e_amps");
  JointState s;
  s.g = amps_from_json(j.at("g_amps"));
  s.e = amps_from_json(j.at("e_amps"));
  if (s.g.size() != s.e.size())
    throw std::invalid_argument("g_amps and e_amps must share one length");
  if (s.g.empty()) throw std::invalid_argument("empty joint state");
  s.params.omega0 = 1.0;
  s.params.omega = j.at("omega_ratio").get<double>();
  const double n2 = norm_squared(s);
  if (std::abs(n2 - 1.0) > 1e-6)
    throw std::invalid_argument("joint state is not normalized");
  if (std::abs(n2 - 1.0) > kNormTol) {
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : s.g) a *= inv;
    for (cplx& a : s.e) a *= inv;
  }
  return s;
}

nlohmann::json trace_to_json(const CatalysisTrace& trace) {
  nlohmann::json events = nlohmann::json::array();
  for (const CatalysisEvent& ev : trace.events)
    events.push_back({{"event", ev.index},
                      {"t_star", ev.t_star},
                      {"p_event", ev.p_event},
                      {"p_cumulative", ev.p_cumulative}});
  return {{"initial_mean_photon", trace.initial_mean_photon},
          {"aborted", trace.aborted},
          {"events", events},
          {"final_field", field_to_json(trace.final_field)}};
}

void write_trace_csv(const CatalysisTrace& trace, std::ostream& os) {
  os << "event,t_star,p_event,p_cumulative\n";
  for (const CatalysisEvent& ev : trace.events)
    os << ev.index << ',' << format_double(ev.t_star) << ','
       << format_double(ev.p_event) << ',' << format_double(ev.p_cumulative)
       << '\n';
}

void write_table_csv(const SweepTable& table, std::ostream& os) {
  os << table.x_label << ',' << table.y_label << '\n';
  for (size_t i = 0; i < table.x.size(); ++i)
    os << format_double(table.x[i]) << ',' << format_double(table.y[i])
       << '\n';
}

nlohmann::json table_to_json(const SweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < table.x.size(); ++i)
    rows.push_back({table.x[i], table.y[i]});
  return {{"x_label", table.x_label},
          {"y_label", table.y_label},
          {"metadata", table.metadata},
          {"rows", rows}};
}

}  // namespace transco
