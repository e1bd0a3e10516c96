#pragma once

#include "bvkit/instance.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvkit {

/// Raised when an instance document is malformed or inconsistent. All
/// problems found are listed, not only the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Reads an instance from JSON text. `allow_characteristic_two` permits
/// "Fp:2" in the document.
Instance parse_instance(const std::string& text, bool allow_characteristic_two = false);
Instance load_instance(const std::filesystem::path& path, bool allow_characteristic_two = false);

/// Writes a finite instance (and its Gysin data, if finite) as JSON.
std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace bvkit
