#include "flrw/cli/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "flrw/error.hpp"

namespace flrw::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size();
}

}  // namespace

std::vector<KeySpec> cosmology_keys() {
  return {{"ell", "0.6666666666666666", "scale-factor exponent, < 1"},
          {"mass_re", "1", "real part of m"},
          {"mass_im", "0", "imaginary part of m"},
          {"epsilon", "1", "initial time"}};
}

RunConfig::RunConfig(std::vector<KeySpec> keys) : keys_(std::move(keys)) {
  for (const KeySpec& k : keys_) values_[k.name] = {k.default_value, "default"};
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, path + ": cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  load_text(buffer.str(), path);
}

void RunConfig::load_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, int> seen;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string where = source + ":" + std::to_string(number);
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::Config, where + ": expected 'key = value'");
    }
    const std::string key = trim(body.substr(0, eq));
    if (const auto it = seen.find(key); it != seen.end()) {
      throw Error(ErrorKind::Config, where + ": key '" + key + "' already set on line " +
                                         std::to_string(it->second));
    }
    seen[key] = number;
    set(key, trim(body.substr(eq + 1)), where);
  }
}

void RunConfig::set(const std::string& key, const std::string& value,
                    const std::string& origin) {
  if (!values_.count(key)) {
    throw Error(ErrorKind::Config, origin + ": unknown key '" + key + "'");
  }
  values_[key] = {value, origin};
}

bool RunConfig::is_set(const std::string& key) const { return !entry(key).value.empty(); }

const RunConfig::Entry& RunConfig::entry(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorKind::Config, "internal: undeclared key '" + key + "'");
  return it->second;
}

void RunConfig::fail(const std::string& key, const std::string& message) const {
  const Entry& e = entry(key);
  throw Error(ErrorKind::Config, e.origin + ": key '" + key + "': " + message);
}

std::string RunConfig::text(const std::string& key) const { return entry(key).value; }

double RunConfig::number(const std::string& key) const {
  double v = 0.0;
  if (!parse_double(entry(key).value, v)) fail(key, "'" + entry(key).value + "' is not a number");
  return v;
}

long RunConfig::integer(const std::string& key) const {
  const double v = number(key);
  if (v != static_cast<double>(static_cast<long>(v))) fail(key, "expected an integer");
  return static_cast<long>(v);
}

bool RunConfig::flag(const std::string& key) const {
  const std::string& v = entry(key).value;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(key, "expected true or false, got '" + v + "'");
}

Complex RunConfig::complex(const std::string& re_key, const std::string& im_key) const {
  return {number(re_key), number(im_key)};
}

std::vector<double> RunConfig::list(const std::string& key) const {
  std::vector<double> out;
  if (!is_set(key)) return out;
  for (const std::string& item : split(entry(key).value, ',')) {
    double v = 0.0;
    if (!parse_double(item, v)) fail(key, "'" + item + "' is not a number");
    out.push_back(v);
  }
  return out;
}

std::vector<std::array<double, 3>> RunConfig::triples(const std::string& key) const {
  std::vector<std::array<double, 3>> out;
  if (!is_set(key)) return out;
  for (const std::string& group : split(entry(key).value, ';')) {
    const auto parts = split(group, ',');
    std::array<double, 3> p{};
    if (parts.size() != 3) fail(key, "expected x,y,z triples separated by ';'");
    for (int i = 0; i < 3; ++i) {
      if (!parse_double(parts[i], p[i])) fail(key, "'" + parts[i] + "' is not a number");
    }
    out.push_back(p);
  }
  return out;
}

CosmologyParams RunConfig::cosmology() const {
  const double eps = number("epsilon");
  if (!(eps > 0.0)) fail("epsilon", "must be positive");
  const double ell = number("ell");
  try {
    return CosmologyParams(ell, complex("mass_re", "mass_im"), eps);
  } catch (const Error& e) {
    fail("ell", e.what());
  }
}

}  // namespace flrw::cli
