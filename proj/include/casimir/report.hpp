#pragma once

#include <string>

#include "casimir/types.hpp"

namespace casimir {

// One computation point. Picks the engine for the requested regime:
//   T = 0                  -> closed forms (S = 0, F = E, P from the zero-T law)
//   deep quantum, N <= 3   -> zero-T closed form plus brute-force thermal
//                             corrections (beta / (4 pi d) > 8, where the
//                             Bessel series needs more terms than it is worth)
//   otherwise              -> exponentially convergent closed series
// Guarantees S = beta (E - F) and classical_ratio = T / t_c.
CasimirReport compute_report(const PlateConfig& cfg, const ThermalState& state, BoundaryPair bc,
                             const SeriesControl& ctrl);

namespace io {

// Lowercase wire tokens used by every serializer ("closed_form", "dd", ...).
const char* engine_token(Engine e);
const char* bc_token(BoundaryPair bc);

// Scientific notation, 9 significant digits; -0 is normalized to 0 and
// non-finite values render as "nan"/"inf"/"-inf".
std::string format_sci(double x);

// Deterministic JSON object for one report; field order is fixed.
std::string to_json(const CasimirReport& r);

// JSON object for a scan point that failed: same shape, null payload, plus
// the error message.
std::string failed_json(int n_dim, BoundaryPair bc, double d, double T, const std::string& what);

// Header shared by every CSV emitter (scan contract).
const char* csv_header();

// One CSV row; axis is "d" or "T" and axis_value the running coordinate.
std::string to_csv_row(const std::string& axis, double axis_value, const CasimirReport& r);

// CSV row with nan payload for a failed scan point.
std::string failed_csv_row(const std::string& axis, double axis_value);

}  // namespace io

}  // namespace casimir
