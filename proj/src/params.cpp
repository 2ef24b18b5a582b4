#include "fredkin/params.hpp"

#include <cmath>
#include <stdexcept>

#include "fredkin/hilbert.hpp"

namespace fredkin {

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::resonant ? "resonant" : "detuned";
}

std::string_view to_string(DissipatorConvention convention) {
  return convention == DissipatorConvention::conventional ? "conventional" : "literal";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "resonant") return ModelKind::resonant;
  if (text == "detuned") return ModelKind::detuned;
  throw std::invalid_argument("unknown model '" + std::string(text) +
                              "' (expected resonant or detuned)");
}

DissipatorConvention parse_dissipator(std::string_view text) {
  if (text == "conventional") return DissipatorConvention::conventional;
  if (text == "literal") return DissipatorConvention::literal;
  throw std::invalid_argument("unknown dissipator convention '" + std::string(text) +
                              "' (expected conventional or literal)");
}

void ModelParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(std::isfinite(g) && g > 0.0, "g must be positive");
  require(std::isfinite(omega) && omega >= 0.0, "omega must be non-negative");
  require(std::isfinite(kappa) && kappa >= 0.0, "kappa must be non-negative");
  require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be non-negative");
  if (model == ModelKind::detuned) {
    require(std::isfinite(delta) && delta > 0.0, "delta must be positive for the detuned model");
  }
  check_n_max(n_max);
}

bool ModelParams::zeno_regime_ok() const {
  if (omega > 0.1 * g) return false;
  if (model == ModelKind::detuned && omega > 0.1 * delta) return false;
  return true;
}

ModelParams ModelParams::resonant(double omega_over_g, double kappa_over_g, double gamma_over_g) {
  ModelParams p;
  p.model = ModelKind::resonant;
  p.omega = omega_over_g;
  p.kappa = kappa_over_g;
  p.gamma = gamma_over_g;
  return p;
}

ModelParams ModelParams::detuned(double omega_over_g, double delta_over_g, double kappa_over_g,
                                 double gamma_over_g) {
  ModelParams p = resonant(omega_over_g, kappa_over_g, gamma_over_g);
  p.model = ModelKind::detuned;
  p.delta = delta_over_g;
  return p;
}

}  // namespace fredkin
