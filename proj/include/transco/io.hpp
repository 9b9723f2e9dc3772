#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "transco/analysis.hpp"

namespace transco {

// Field state JSON: {"n_cut": int, "amps": [[re, im], ...]}
nlohmann::json field_to_json(const FieldState& s);
FieldState field_from_json(const nlohmann::json& j);

// Joint state JSON: {"omega_ratio": real, "g_amps": [[re, im], ...],
//                    "e_amps": [[re, im], ...]}, omega0 = 1 units.
nlohmann::json joint_to_json(const JointState& s);
JointState joint_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const CatalysisTrace& trace);

// CSV with columns event,t_star,p_event,p_cumulative.
void write_trace_csv(const CatalysisTrace& trace, std::ostream& os);

// Two-column CSV; header names come from the table labels.
void write_table_csv(const SweepTable& table, std::ostream& os);
nlohmann::json table_to_json(const SweepTable& table);

/// Shortest representation that round-trips a double (17 significant digits).
std::string format_double(double v);

}  // namespace transco
