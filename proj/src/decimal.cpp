#include "vlcrange/decimal.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "vlcrange/error.hpp"

namespace vlcrange {

namespace {

void normalize(Decimal& d) {
  const auto first = d.digits.find_first_not_of('0');
  if (first == std::string::npos) {
    d = Decimal{};
    return;
  }
  d.digits.erase(0, first);
  const auto last = d.digits.find_last_not_of('0');
  d.exponent += static_cast<int>(d.digits.size() - 1 - last);
  d.digits.erase(last + 1);
}

}  // namespace

Decimal parse_decimal(std::string_view text) {
  Decimal d;
  std::size_t i = 0;
  const auto fail = [&] { throw ParseError("not a number: '" + std::string(text) + "'"); };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    d.negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  int exponent = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i++]);
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i++]);
      --exponent;
      any = true;
    }
  }
  if (!any) fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    int value = 0;
    const char* begin = text.data() + i;
    if (i < text.size() && text[i] == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == begin) fail();
    i = static_cast<std::size_t>(ptr - text.data());
    exponent += value;
  }
  if (i != text.size()) fail();
  d.digits = std::move(digits);
  d.exponent = exponent;
  const bool negative = d.negative;
  normalize(d);
  if (d.digits != "0") d.negative = negative;
  return d;
}

Decimal shortest_decimal(double value) {
  if (!std::isfinite(value)) throw DomainError("shortest_decimal: non-finite value");
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific);
  (void)ec;
  // d.ddddde[+-]XX
  const std::string_view s(buf.data(), static_cast<std::size_t>(ptr - buf.data()));
  Decimal d;
  std::size_t i = 0;
  if (s[0] == '-') {
    d.negative = true;
    i = 1;
  }
  const auto e = s.find('e');
  std::string digits;
  for (std::size_t k = i; k < e; ++k) {
    if (s[k] != '.') digits.push_back(s[k]);
  }
  int exp10 = 0;
  const char* begin = s.data() + e + 1;
  if (*begin == '+') ++begin;
  std::from_chars(begin, s.data() + s.size(), exp10);
  d.digits = digits;
  d.exponent = exp10 - static_cast<int>(digits.size() - 1);
  const bool negative = d.negative;
  normalize(d);
  if (d.digits != "0") d.negative = negative;
  return d;
}

Decimal shift_decimal(Decimal d, int powers_of_ten) {
  if (d.digits != "0") d.exponent += powers_of_ten;
  return d;
}

std::string render_decimal(const Decimal& d) {
  std::string out = d.negative ? "-" : "";
  const int n = static_cast<int>(d.digits.size());
  // Position of the decimal point relative to the first digit.
  const int point = n + d.exponent;
  if (d.exponent >= 0 && point <= 17) {
    out += d.digits;
    out.append(static_cast<std::size_t>(d.exponent), '0');
  } else if (d.exponent < 0 && point > 0) {
    out += d.digits.substr(0, static_cast<std::size_t>(point));
    out += '.';
    out += d.digits.substr(static_cast<std::size_t>(point));
  } else if (d.exponent < 0 && point > -5) {
    out += "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += d.digits;
  } else {
    out += d.digits[0];
    if (n > 1) {
      out += '.';
      out += d.digits.substr(1);
    }
    out += 'e';
    out += std::to_string(point - 1);
  }
  return out;
}

double to_double(const Decimal& d) {
  const std::string text = render_decimal(d);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw DomainError("decimal value out of double range: " + text);
  }
  (void)ptr;
  return value;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

}  // namespace vlcrange
