#include "covmat/random_covering.hpp"

namespace covmat {

std::vector<std::string> default_element_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    if (n <= 26) {
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

std::vector<ElementSet> random_blocks(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    auto universe = Universe::make(default_element_names(n));

    std::vector<ElementSet> blocks;
    blocks.reserve(m);
    for (std::size_t b = 0; b < m; ++b) {
        ElementSet block(universe);
        for (std::size_t i = 0; i < n; ++i)
            if (rng() & 1u) block.add_index(i);
        if (block.empty()) block.add_index(next_below(rng, n));
        blocks.push_back(std::move(block));
    }

    ElementSet covered(universe);
    for (const auto& block : blocks) covered = covered.united(block);
    for (std::size_t i = 0; i < n; ++i)
        if (!covered.contains_index(i)) blocks[next_below(rng, m)].add_index(i);

    return blocks;
}

Covering random_covering(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    auto blocks = random_blocks(n, m, rng);
    auto universe = blocks.front().universe();
    return build_covering(std::move(universe), std::move(blocks));
}

}  // namespace covmat
