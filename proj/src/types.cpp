#include "casimir/types.hpp"

#include <cctype>

namespace casimir {

const char* to_string(BoundaryPair bc) {
  switch (bc) {
    case BoundaryPair::DD: return "DD";
    case BoundaryPair::DN: return "DN";
    case BoundaryPair::NN: return "NN";
  }
  return "?";
}

const char* to_string(Engine e) {
  switch (e) {
    case Engine::ClosedForm: return "ClosedForm";
    case Engine::ModeSum: return "ModeSum";
    case Engine::Optical: return "Optical";
  }
  return "?";
}

BoundaryPair bc_from_string(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "dd") return BoundaryPair::DD;
  if (t == "dn") return BoundaryPair::DN;
  if (t == "nn") return BoundaryPair::NN;
  throw ValidationError("boundary pair must be one of dd, dn, nn (got '" + s + "')");
}

ConfigBundle make_config(int n_dim, double separation, double beta) {
  if (n_dim < 1) throw ValidationError("n_dim >= 1");
  if (!(separation > 0.0) || !std::isfinite(separation))
    throw ValidationError("separation > 0");
  if (!(beta > 0.0)) throw ValidationError("beta > 0");
  ConfigBundle b;
  b.cfg = PlateConfig{n_dim, separation};
  b.state = ThermalState{beta};
  b.scale = ClassicalScale{M_PI / separation};
  return b;
}

double classical_limit_ratio(const ThermalState& state, const ClassicalScale& scale) {
  if (state.zero_temperature()) return 0.0;
  return 1.0 / (state.beta * scale.t_c);
}

void validate_control(const SeriesControl& ctrl) {
  if (!(ctrl.rel_tol > 0.0 && ctrl.rel_tol < 1.0)) throw ValidationError("rel_tol in (0, 1)");
  if (!(ctrl.abs_tol > 0.0 && ctrl.abs_tol < 1.0)) throw ValidationError("abs_tol in (0, 1)");
  if (ctrl.max_terms < 16) throw ValidationError("max_terms >= 16");
  for (std::size_t i = 0; i < ctrl.damping_ladder.size(); ++i) {
    if (!(ctrl.damping_ladder[i] > 0.0))
      throw ValidationError("damping_ladder entries positive");
    if (i > 0 && !(ctrl.damping_ladder[i] < ctrl.damping_ladder[i - 1]))
      throw ValidationError("damping_ladder strictly decreasing");
  }
}

}  // namespace casimir
