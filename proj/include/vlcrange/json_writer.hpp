#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vlcrange {

/// Minimal streaming JSON emitter with stable key order and two-space
/// indentation. Doubles use the shortest round-trip form; non-finite values
/// are written as the strings "inf", "-inf" and "nan".
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  /// Caller guarantees `literal` is a valid JSON number.
  JsonWriter& number_literal(std::string_view literal);

  JsonWriter& field(std::string_view k, double v) { return key(k).value(v); }
  JsonWriter& field(std::string_view k, std::uint64_t v) { return key(k).value(v); }
  JsonWriter& field(std::string_view k, bool v) { return key(k).value(v); }
  JsonWriter& field(std::string_view k, std::string_view v) { return key(k).value(v); }
  JsonWriter& field(std::string_view k, const char* v) { return key(k).value(v); }
  JsonWriter& array(std::string_view k, const std::vector<double>& values);

  /// Document text followed by a newline.
  std::string str() const { return out_ + "\n"; }

 private:
  void before_value();
  void newline();

  struct Frame {
    bool is_object;
    int count;
  };
  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

std::string json_escape(std::string_view s);

}  // namespace vlcrange
