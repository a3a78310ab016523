#ifndef COVMAT_COVERING_IO_HPP_
#define COVMAT_COVERING_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "covmat/covering.hpp"

namespace covmat {

/// Covering text format:
///   - first significant line: whitespace-separated universe element names
///   - every following significant line: one block
///   - lines beginning with '#' are comments; blank lines are skipped
///
/// Parse failures throw CoveringParseError naming the offending line, or
/// NotACoveringError when the blocks do not cover the universe.
Covering parse_covering(std::istream& in);
Covering parse_covering_text(std::string_view text);
Covering parse_covering_file(const std::string& path);

/// Inverse of parse_covering up to block deduplication: universe line, then
/// one line per block with members in universe order.
std::string print_covering(const Covering& cov);

/// Set spec: comma-separated element names; "" and "{}" denote the empty
/// set. Surrounding whitespace per name is ignored.
ElementSet parse_set_spec(const UniversePtr& universe, std::string_view spec);

}  // namespace covmat

#endif  // COVMAT_COVERING_IO_HPP_
