#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesim/errors.hpp"

namespace curvesim {

// Flat "key = value" config text. '#' starts a comment, blank lines are
// ignored, keys may be dotted (section.key). Values are scalars or
// comma-separated lists. Duplicate keys are an error.
class KeyValueFile {
 public:
  static KeyValueFile parse_file(const std::string& path);
  static KeyValueFile parse_string(const std::string& text,
                                   const std::string& name = "<string>");

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key) const;
  bool get_bool(const std::string& key, bool fallback) const;

  // Number, or std::nullopt when the value is the literal "auto".
  std::optional<double> get_double_or_auto(const std::string& key) const;

  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& key) const;

  // "rpm:value, rpm:value, ..." pairs.
  std::vector<std::pair<double, double>> get_pair_list(const std::string& key) const;

  const std::string& name() const { return name_; }
  std::vector<std::string> keys() const;

  // Directory of the parsed file; used to resolve relative path values.
  std::string resolve_path(const std::string& relative) const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };

  [[noreturn]] void fail(const std::string& key, const std::string& message) const;
  const Entry& require(const std::string& key) const;
  double parse_number(const std::string& key, const std::string& text) const;

  std::string name_;
  std::string directory_;
  std::map<std::string, Entry> entries_;
};

}  // namespace curvesim
