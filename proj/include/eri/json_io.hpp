#pragma once

#include <cstdint>
#include <string>

namespace eri {

// Formats a real with 12 significant digits ("%.12g"), the fixed width used
// by every report so golden files are reproducible. Non-finite values map to
// "null" (JSON has no Inf/NaN); callers flag those separately.
std::string format_real(double v);

// Report writer that emits keys in insertion order with deterministic bytes.
// nlohmann::json is used for *reading*; outputs go through this writer so
// field order and number formatting stay pinned.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  JsonWriter& null();
  // Splices pre-serialized JSON (used to carry opaque blobs through).
  JsonWriter& raw(const std::string& json);

 private:
  void comma();
  void indent();

  std::string out_;
  int depth_ = 0;
  bool need_comma_ = false;
  bool after_key_ = false;
};

std::string escape_json(const std::string& s);

// Writes `content` to `path` atomically: temp file in the same directory,
// then rename. No partial file is left behind on failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace eri
