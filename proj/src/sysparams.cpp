#include "vlcrange/sysparams.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>

#include <json.hpp>

#include "vlcrange/decimal.hpp"
#include "vlcrange/error.hpp"

namespace vlcrange {

namespace {

constexpr long double kPiLong = 3.141592653589793238462643383279502884L;

enum class Conversion { PowerOfTen, Degrees };

enum class Bound { Positive, NonNegative, FieldOfView };

struct FieldSpec {
  SchemaField schema;
  double SystemParameters::*member;
  Conversion conversion;
  int shift;  // si = external * 10^shift
  Bound bound;
};

const std::vector<FieldSpec>& field_specs() {
  using P = SystemParameters;
  static const std::vector<FieldSpec> specs = {
      {{"q_C", "q", "C", "C"}, &P::q, Conversion::PowerOfTen, 0, Bound::Positive},
      {{"kappa_JK", "kappa", "J/K", "J/K"}, &P::kappa, Conversion::PowerOfTen, 0, Bound::Positive},
      {{"T_e_K", "T_e", "K", "K"}, &P::T_e, Conversion::PowerOfTen, 0, Bound::Positive},
      {{"G_ol", "G_ol", "1", "1"}, &P::G_ol, Conversion::PowerOfTen, 0, Bound::Positive},
      {{"eta_pF_cm2", "eta_cap", "pF/cm^2", "F/m^2"}, &P::eta_cap, Conversion::PowerOfTen, -8,
       Bound::NonNegative},
      {{"Gamma", "Gamma", "1", "1"}, &P::Gamma, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"B_MHz", "B", "MHz", "Hz"}, &P::B, Conversion::PowerOfTen, 6, Bound::Positive},
      {{"g_m_mS", "g_m", "mS", "S"}, &P::g_m, Conversion::PowerOfTen, -3, Bound::Positive},
      {{"I2", "I2", "1", "1"}, &P::I2, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"I3", "I3", "1", "1"}, &P::I3, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"R_p_A_W", "R_p", "A/W", "A/W"}, &P::R_p, Conversion::PowerOfTen, 0, Bound::Positive},
      {{"p_BS_W_cm2_nm", "p_BS", "W/(cm^2 nm)", "W/(m^2 nm)"}, &P::p_BS, Conversion::PowerOfTen, 4,
       Bound::NonNegative},
      {{"lambda_nm", "lambda_opt", "nm", "nm"}, &P::lambda_opt, Conversion::PowerOfTen, 0,
       Bound::NonNegative},
      {{"I_DC_pA", "I_DC", "pA", "A"}, &P::I_DC, Conversion::PowerOfTen, -12, Bound::NonNegative},
      {{"S_cm2", "S", "cm^2", "m^2"}, &P::S, Conversion::PowerOfTen, -4, Bound::Positive},
      // P_t = 0 is admitted so that the no-signal limit (infinite bound) is reachable.
      {{"P_t_W", "P_t", "W", "W"}, &P::P_t, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"P_diff_W", "P_diff", "W", "W"}, &P::P_diff, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"m", "m", "1", "1"}, &P::m, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"T_s", "T_s", "1", "1"}, &P::T_s, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"g_conc", "g_conc", "1", "1"}, &P::g_conc, Conversion::PowerOfTen, 0, Bound::NonNegative},
      {{"phi_con_deg", "phi_con", "deg", "rad"}, &P::phi_con, Conversion::Degrees, 0,
       Bound::FieldOfView},
  };
  return specs;
}

const FieldSpec& find_spec(std::string_view key) {
  for (const auto& spec : field_specs()) {
    if (spec.schema.key == key) return spec;
  }
  throw UnknownKeyError(std::string(key));
}

double degrees_to_radians(long double degrees) {
  return static_cast<double>(degrees * (kPiLong / 180.0L));
}

double convert_to_si(const FieldSpec& spec, std::string_view text) {
  if (spec.conversion == Conversion::Degrees) {
    // Validate syntax with the strict decimal grammar, then read in extended precision.
    parse_decimal(text);
    const std::string owned(text);
    return degrees_to_radians(std::strtold(owned.c_str(), nullptr));
  }
  try {
    return to_double(shift_decimal(parse_decimal(text), spec.shift));
  } catch (const DomainError& e) {
    throw ParseError(std::string(spec.schema.key) + ": " + e.what());
  }
}

std::string convert_to_external(const FieldSpec& spec, double si) {
  if (spec.conversion == Conversion::Degrees) {
    const long double degrees = static_cast<long double>(si) * (180.0L / kPiLong);
    const std::string plain = format_double(static_cast<double>(degrees));
    if (degrees_to_radians(std::strtold(plain.c_str(), nullptr)) == si) return plain;
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), degrees);
    (void)ec;
    return std::string(buf.data(), ptr);
  }
  return render_decimal(shift_decimal(shortest_decimal(si), -spec.shift));
}

class ParameterSax {
 public:
  using json = nlohmann::json;

  explicit ParameterSax(SystemParameters& target) : target_(target) {}

  bool null() { return reject("null"); }
  bool boolean(bool) { return reject("boolean"); }
  bool number_integer(json::number_integer_t v) { return assign(std::to_string(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return assign(std::to_string(v)); }
  bool number_float(json::number_float_t, const std::string& text) { return assign(text); }
  bool string(std::string&) { return reject("string"); }
  bool binary(json::binary_t&) { return reject("binary"); }
  bool start_object(std::size_t) {
    if (depth_++ != 0) throw ParseError("parameter document must be a flat object");
    return true;
  }
  bool end_object() {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) { return reject("array"); }
  bool end_array() { return true; }
  bool key(std::string& k) {
    if (!seen_.insert(k).second) throw ParseError("duplicate parameter key '" + k + "'");
    current_ = &find_spec(k);
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& e) {
    throw ParseError("malformed parameter document at byte " + std::to_string(position) + ": " +
                     e.what());
  }

 private:
  bool reject(const char* kind) {
    if (depth_ == 0) throw ParseError("parameter document must be a JSON object");
    throw ParseError(std::string("parameter '") + std::string(current_->schema.key) +
                     "' must be a number, got " + kind);
  }
  bool assign(const std::string& text) {
    if (depth_ == 0) throw ParseError("parameter document must be a JSON object");
    target_.*(current_->member) = convert_to_si(*current_, text);
    return true;
  }

  SystemParameters& target_;
  const FieldSpec* current_ = nullptr;
  std::set<std::string> seen_;
  int depth_ = 0;
};

}  // namespace

SystemParameters default_parameters() { return SystemParameters{}; }

void validate(const SystemParameters& p) {
  for (const auto& spec : field_specs()) {
    const double v = p.*(spec.member);
    const std::string name = std::string(spec.schema.field) + " (" + std::string(spec.schema.key) + ")";
    if (!std::isfinite(v)) throw ValidationError(name, "must be finite");
    switch (spec.bound) {
      case Bound::Positive:
        if (!(v > 0.0)) throw ValidationError(name, "must be > 0");
        break;
      case Bound::NonNegative:
        if (!(v >= 0.0)) throw ValidationError(name, "must be >= 0");
        break;
      case Bound::FieldOfView:
        if (!(v > 0.0 && v <= std::numbers::pi / 2)) {
          throw ValidationError(name, "must lie in (0, pi/2]");
        }
        break;
    }
  }
}

const std::vector<SchemaField>& parameter_schema() {
  static const std::vector<SchemaField> schema = [] {
    std::vector<SchemaField> out;
    for (const auto& spec : field_specs()) out.push_back(spec.schema);
    return out;
  }();
  return schema;
}

SystemParameters parse_parameters(std::string_view document) {
  return parse_parameters(document, default_parameters());
}

SystemParameters parse_parameters(std::string_view document, const SystemParameters& base) {
  SystemParameters p = base;
  ParameterSax sax(p);
  nlohmann::json::sax_parse(document.begin(), document.end(), &sax);
  validate(p);
  return p;
}

void apply_override(SystemParameters& p, std::string_view key, std::string_view value_text) {
  const auto& spec = find_spec(key);
  p.*(spec.member) = convert_to_si(spec, value_text);
}

std::string external_value_text(const SystemParameters& p, std::string_view key) {
  const auto& spec = find_spec(key);
  return convert_to_external(spec, p.*(spec.member));
}

double si_value(const SystemParameters& p, std::string_view key) {
  return p.*(find_spec(key).member);
}

std::string serialize_parameters(const SystemParameters& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& spec : field_specs()) {
    if (!first) out += ", ";
    first = false;
    out += '"';
    out += spec.schema.key;
    out += "\": ";
    out += convert_to_external(spec, p.*(spec.member));
  }
  out += "}";
  return out;
}

}  // namespace vlcrange
