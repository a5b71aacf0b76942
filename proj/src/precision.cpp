#include "fekete/precision.hpp"

#include <stdexcept>
#include <string>

namespace fekete {

Precision parse_precision(std::string_view text) {
  if (text == "std" || text == "standard") return Precision::standard;
  if (text == "ext" || text == "extended") return Precision::extended;
  throw std::invalid_argument("unknown precision '" + std::string(text) + "' (expected std or ext)");
}

std::string_view to_string(Precision p) {
  return p == Precision::standard ? "std" : "ext";
}

}  // namespace fekete
