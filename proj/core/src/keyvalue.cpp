#include "curvesim/keyvalue.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace curvesim {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  KeyValueFile kv = parse_string(buf.str(), path);
  kv.directory_ = std::filesystem::path(path).parent_path().string();
  return kv;
}

KeyValueFile KeyValueFile::parse_string(const std::string& text, const std::string& name) {
  KeyValueFile kv;
  kv.name_ = name;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(name + ":" + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(name + ":" + std::to_string(lineno) + ": empty key");
    }
    if (kv.entries_.count(key)) {
      throw ConfigError(name + ":" + std::to_string(lineno) + ": duplicate key '" +
                        key + "' (first defined at line " +
                        std::to_string(kv.entries_[key].line) + ")");
    }
    kv.entries_[key] = Entry{value, lineno};
  }
  return kv;
}

bool KeyValueFile::has(const std::string& key) const { return entries_.count(key) > 0; }

void KeyValueFile::fail(const std::string& key, const std::string& message) const {
  auto it = entries_.find(key);
  const std::string loc =
      it == entries_.end() ? name_ : name_ + ":" + std::to_string(it->second.line);
  throw ConfigError(loc + ": field '" + key + "': " + message);
}

const KeyValueFile::Entry& KeyValueFile::require(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw ConfigError(name_ + ": missing required field '" + key + "'");
  }
  return it->second;
}

double KeyValueFile::parse_number(const std::string& key, const std::string& text) const {
  const std::string t = trim(text);
  if (t.empty()) fail(key, "empty numeric value");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) fail(key, "not a number: '" + t + "'");
  return v;
}

std::string KeyValueFile::get_string(const std::string& key) const {
  return require(key).value;
}

std::string KeyValueFile::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? entries_.at(key).value : fallback;
}

double KeyValueFile::get_double(const std::string& key) const {
  return parse_number(key, require(key).value);
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
  return has(key) ? parse_number(key, entries_.at(key).value) : fallback;
}

int KeyValueFile::get_int(const std::string& key) const {
  const double v = get_double(key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) fail(key, "expected an integer");
  return i;
}

int KeyValueFile::get_int(const std::string& key, int fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool KeyValueFile::get_bool(const std::string& key) const {
  const std::string v = get_string(key);
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail(key, "expected a boolean (true/false), got '" + v + "'");
  return false;  // unreachable
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
  return has(key) ? get_bool(key) : fallback;
}

std::optional<double> KeyValueFile::get_double_or_auto(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  const std::string v = trim(entries_.at(key).value);
  if (v == "auto") return std::nullopt;
  return parse_number(key, v);
}

std::vector<double> KeyValueFile::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& item : split(require(key).value, ','))
    out.push_back(parse_number(key, item));
  return out;
}

std::vector<std::string> KeyValueFile::get_string_list(const std::string& key) const {
  std::vector<std::string> out;
  for (const std::string& item : split(require(key).value, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::pair<double, double>> KeyValueFile::get_pair_list(const std::string& key) const {
  std::vector<std::pair<double, double>> out;
  for (const std::string& item : split(require(key).value, ',')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos) fail(key, "expected 'x:y' pairs, got '" + item + "'");
    out.emplace_back(parse_number(key, item.substr(0, colon)),
                     parse_number(key, item.substr(colon + 1)));
  }
  return out;
}

std::vector<std::string> KeyValueFile::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

std::string KeyValueFile::resolve_path(const std::string& relative) const {
  std::filesystem::path p(relative);
  if (p.is_absolute() || directory_.empty()) return relative;
  return (std::filesystem::path(directory_) / p).string();
}

}  // namespace curvesim
