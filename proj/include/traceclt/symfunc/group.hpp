#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace traceclt {

/// The three compact families whose trace statistics are studied.
/// Dimension is kept symbolic: SO(n) and U(n) act on C^n, USp(2n) on C^{2n}.
enum class Group { SpecialOrthogonal, UnitarySymplectic, Unitary };

/// Short tag used on the command line and in reports ("SO", "USp", "U").
std::string_view group_tag(Group g);

/// Parses a tag accepted by group_tag (case-insensitive). Throws std::invalid_argument.
Group parse_group(std::string_view tag);

/// Only U(n) has non-real traces, hence conjugated letters.
inline bool has_conjugates(Group g) { return g == Group::Unitary; }

/// Matrix size for the dimension parameter n: 2n for USp(2n), n otherwise.
inline int matrix_dimension(Group g, int n) {
  return g == Group::UnitarySymplectic ? 2 * n : n;
}

class GroupMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace traceclt
