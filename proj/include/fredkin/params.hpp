#pragma once

#include <string>
#include <string_view>

namespace fredkin {

enum class ModelKind { resonant, detuned };

// How the no-jump decay term is weighted.
//   conventional: (γ/2) per excited atom, (κ/2) per photon.
//   literal:      the double sum over atoms and modes, i.e. γ per excited atom
//                 and (3κ/2) per photon.
enum class DissipatorConvention { conventional, literal };

std::string_view to_string(ModelKind kind);
std::string_view to_string(DissipatorConvention convention);
ModelKind parse_model_kind(std::string_view text);
DissipatorConvention parse_dissipator(std::string_view text);

// Rates are angular frequencies in one common unit (ħ = 1). The natural
// choice is g = 1, which makes every other field a ratio to g.
struct ModelParams {
  ModelKind model = ModelKind::resonant;
  double g = 1.0;
  double omega = 0.03;
  double delta = 0.0;  // used only by the detuned model
  double kappa = 0.0;
  double gamma = 0.0;
  int n_max = 1;
  DissipatorConvention dissipator = DissipatorConvention::conventional;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  /// Ω ≤ 0.1·g, and for the detuned model also Ω ≤ 0.1·Δ.
  bool zeno_regime_ok() const;

  static ModelParams resonant(double omega_over_g, double kappa_over_g = 0.0,
                              double gamma_over_g = 0.0);
  static ModelParams detuned(double omega_over_g, double delta_over_g, double kappa_over_g = 0.0,
                             double gamma_over_g = 0.0);
};

}  // namespace fredkin
