#ifndef COVMAT_RANDOM_COVERING_HPP_
#define COVMAT_RANDOM_COVERING_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "covmat/covering.hpp"

namespace covmat {

/// Single letters a..z for n <= 26, x1..xn beyond.
std::vector<std::string> default_element_names(std::size_t n);

/// Draw an integer in [0, bound) from the raw mt19937_64 stream. Plain
/// modulo reduction: the engine's output sequence is standard-specified, so
/// results are byte-identical across platforms (std::uniform_int_distribution
/// is not).
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound);

/// m random nonempty element subsets over default names; every element left
/// uncovered afterwards is appended to a uniformly chosen block, so the
/// block count stays m. Blocks may still collide as sets; build_covering
/// deduplicates them.
std::vector<ElementSet> random_blocks(std::size_t n, std::size_t m, std::mt19937_64& rng);

Covering random_covering(std::size_t n, std::size_t m, std::mt19937_64& rng);

}  // namespace covmat

#endif  // COVMAT_RANDOM_COVERING_HPP_
