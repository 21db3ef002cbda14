#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "flrw/cosmology.hpp"

namespace flrw::cli {

struct KeySpec {
  std::string name;
  std::string default_value;
  std::string help;
};

/// Flat `key = value` configuration. Lines starting with '#' and blank
/// lines are ignored. Every key must belong to the command's key set;
/// diagnostics name the file, line and key.
class RunConfig {
 public:
  explicit RunConfig(std::vector<KeySpec> keys);

  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& source);
  /// Later calls override earlier ones (file, then flags).
  void set(const std::string& key, const std::string& value, const std::string& origin);

  [[nodiscard]] const std::vector<KeySpec>& keys() const { return keys_; }
  [[nodiscard]] bool is_set(const std::string& key) const;
  [[nodiscard]] std::string text(const std::string& key) const;
  [[nodiscard]] double number(const std::string& key) const;
  [[nodiscard]] long integer(const std::string& key) const;
  [[nodiscard]] bool flag(const std::string& key) const;
  [[nodiscard]] Complex complex(const std::string& re_key, const std::string& im_key) const;
  /// Comma-separated numbers.
  [[nodiscard]] std::vector<double> list(const std::string& key) const;
  /// Semicolon-separated triples "x,y,z; x,y,z".
  [[nodiscard]] std::vector<std::array<double, 3>> triples(const std::string& key) const;
  /// From ell, mass_re, mass_im, epsilon.
  [[nodiscard]] CosmologyParams cosmology() const;

 private:
  struct Entry {
    std::string value;
    std::string origin;
  };
  [[nodiscard]] const Entry& entry(const std::string& key) const;
  [[noreturn]] void fail(const std::string& key, const std::string& message) const;

  std::vector<KeySpec> keys_;
  std::map<std::string, Entry> values_;
};

/// ell, mass_re, mass_im, epsilon.
std::vector<KeySpec> cosmology_keys();

}  // namespace flrw::cli
