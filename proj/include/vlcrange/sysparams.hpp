#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vlcrange {

/// Physical and device parameters of the link, all in SI units.
///
/// This is a plain aggregate; `validate()` enforces the invariants and is
/// applied by every parsing entry point. Unit-test code may build invalid
/// instances on purpose (for example B = 0) to probe limiting behaviour.
struct SystemParameters {
  double q = 1.6e-19;          ///< electron charge [C]
  double kappa = 1.38e-23;     ///< Boltzmann constant [J/K]
  double T_e = 300.0;          ///< absolute temperature [K]
  double G_ol = 10.0;          ///< open-loop voltage gain
  double eta_cap = 1.12e-6;    ///< fixed capacitance per unit area [F/m^2]
  double Gamma = 1.5;          ///< channel noise factor
  double B = 4.0e8;            ///< equivalent noise bandwidth [Hz]
  double g_m = 0.03;           ///< transconductance [S]
  double I2 = 0.562;           ///< noise bandwidth factor
  double I3 = 0.0868;          ///< noise bandwidth factor
  double R_p = 0.4;            ///< responsivity [A/W]
  double p_BS = 5.8e-2;        ///< background spectral irradiance [W/(m^2 nm)]
  double lambda_opt = 400.0;   ///< optical filter bandwidth [nm]
  double I_DC = 5e-12;         ///< dark current [A]
  double S = 2.0e-5;           ///< detector active area [m^2]
  double P_t = 1.0;            ///< transmitted optical power [W]
  double P_diff = 0.0;         ///< diffuse received power [W]
  double m = 1.0;              ///< Lambertian emission order
  double T_s = 1.0;            ///< optical filter gain
  double g_conc = 1.0;         ///< concentrator gain
  double phi_con = 1.5707963267948966;  ///< receiver field of view [rad]

  bool operator==(const SystemParameters&) const = default;
};

/// Typical indoor link values (photodiode front end, 400 MHz bandwidth).
SystemParameters default_parameters();

/// Throws ValidationError naming the first violated invariant.
void validate(const SystemParameters& p);

/// Description of one key of the external (unit-suffixed) JSON schema.
struct SchemaField {
  std::string_view key;        ///< external key, e.g. "S_cm2"
  std::string_view field;      ///< SystemParameters member name, e.g. "S"
  std::string_view unit;       ///< external unit label
  std::string_view si_unit;    ///< SI unit label
};

/// All schema keys in canonical order.
const std::vector<SchemaField>& parameter_schema();

/// Parse a JSON parameter document. Omitted keys take defaults.
///
/// Power-of-ten unit conversions are applied to the decimal text before it
/// is rounded, so "S_cm2": 0.2 yields exactly the double nearest 2e-5.
SystemParameters parse_parameters(std::string_view document);

/// Apply a JSON document on top of `base` instead of the defaults.
SystemParameters parse_parameters(std::string_view document, const SystemParameters& base);

/// Apply a single `key=value` override using the external schema.
void apply_override(SystemParameters& p, std::string_view key, std::string_view value_text);

/// External-unit decimal rendering of one field. The text parses back to the
/// identical SI double.
std::string external_value_text(const SystemParameters& p, std::string_view key);

/// SI value of the field behind an external key.
double si_value(const SystemParameters& p, std::string_view key);

/// Full document in the external schema; parse_parameters() inverts it
/// bit-for-bit for finite values.
std::string serialize_parameters(const SystemParameters& p);

}  // namespace vlcrange
