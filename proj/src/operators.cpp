#include "covmat/operators.hpp"

namespace covmat {

namespace {

void check_universe(const Covering& cov, const ElementSet& x) {
    ElementSet probe(cov.universe());
    probe.check_same_universe(x);
}

}  // namespace

ElementSet upper_approx(const Covering& cov, const ElementSet& x, OperatorScheme scheme) {
    check_universe(cov, x);
    const auto& universe = cov.universe();
    ElementSet result(universe);
    switch (scheme) {
        case OperatorScheme::Second:
            // Union of the blocks meeting X.
            for (const auto& block : cov.blocks())
                if (block.intersects(x)) result = result.united(block);
            return result;
        case OperatorScheme::Fifth:
            // Elements whose neighborhood meets X.
            for (std::size_t i = 0; i < universe->size(); ++i)
                if (cov.neighborhoods().of_index(i).intersects(x)) result.add_index(i);
            return result;
        case OperatorScheme::Sixth:
        case OperatorScheme::SixthDual:
            // Union of the neighborhoods meeting X; the dual family defines
            // its upper approximation with the identical formula.
            for (std::size_t i = 0; i < universe->size(); ++i) {
                const auto& nbr = cov.neighborhoods().of_index(i);
                if (nbr.intersects(x)) result = result.united(nbr);
            }
            return result;
    }
    throw Error("unreachable operator scheme");
}

ElementSet lower_approx(const Covering& cov, const ElementSet& x, OperatorScheme scheme) {
    check_universe(cov, x);
    const auto& universe = cov.universe();
    ElementSet result(universe);
    switch (scheme) {
        case OperatorScheme::Second:
        case OperatorScheme::SixthDual:
            // Literal complement-of-upper-of-complement, no rewriting.
            return upper_approx(cov, x.complemented(), scheme).complemented();
        case OperatorScheme::Fifth:
            // Elements whose neighborhood fits inside X.
            for (std::size_t i = 0; i < universe->size(); ++i)
                if (cov.neighborhoods().of_index(i).is_subset_of(x)) result.add_index(i);
            return result;
        case OperatorScheme::Sixth:
            // Union of the neighborhoods contained in X.
            for (std::size_t i = 0; i < universe->size(); ++i) {
                const auto& nbr = cov.neighborhoods().of_index(i);
                if (nbr.is_subset_of(x)) result = result.united(nbr);
            }
            return result;
    }
    throw Error("unreachable operator scheme");
}

}  // namespace covmat
