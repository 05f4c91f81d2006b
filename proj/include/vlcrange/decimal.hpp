#pragma once

#include <string>
#include <string_view>

namespace vlcrange {

/// Exact decimal number: (-1)^negative * digits * 10^exponent.
///
/// Used to apply power-of-ten unit conversions to text before rounding to
/// binary, which keeps unit-suffixed documents bit-exact on round trip.
struct Decimal {
  bool negative = false;
  std::string digits = "0";  ///< no leading zeros unless the value is zero
  int exponent = 0;
};

/// Parses a JSON-style number literal. Throws ParseError on bad syntax.
Decimal parse_decimal(std::string_view text);

/// Shortest decimal that rounds back to `value`. `value` must be finite.
Decimal shortest_decimal(double value);

Decimal shift_decimal(Decimal d, int powers_of_ten);

/// Plain or scientific text that represents `d` exactly.
std::string render_decimal(const Decimal& d);

/// Correctly rounded conversion to double.
double to_double(const Decimal& d);

/// Shortest round-trip rendering; non-finite values become "inf", "-inf", "nan".
std::string format_double(double value);

}  // namespace vlcrange
