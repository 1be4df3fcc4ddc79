#include "traceclt/symfunc/group.hpp"

#include <algorithm>
#include <cctype>

namespace traceclt {

std::string_view group_tag(Group g) {
  switch (g) {
    case Group::SpecialOrthogonal:
      return "SO";
    case Group::UnitarySymplectic:
      return "USp";
    case Group::Unitary:
      return "U";
  }
  return "?";
}

Group parse_group(std::string_view tag) {
  std::string lower(tag);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "so") return Group::SpecialOrthogonal;
  if (lower == "usp" || lower == "sp") return Group::UnitarySymplectic;
  if (lower == "u") return Group::Unitary;
  throw std::invalid_argument("unknown group '" + std::string(tag) + "' (expected SO, USp or U)");
}

}  // namespace traceclt
