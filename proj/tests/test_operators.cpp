#include <doctest.h>

#include <random>

#include "covmat/operators.hpp"
#include "covmat/random_covering.hpp"
#include "helpers.hpp"

using namespace covmat;
using namespace covmat::tests;

using OS = OperatorScheme;

TEST_CASE("upper approximations on the running example") {
    const Covering cov = example_covering();
    CHECK(upper_approx(cov, set_of(cov, {"d", "e", "f"}), OS::Sixth).names() ==
          std::vector<std::string>{"a", "c", "d", "e", "f"});
    CHECK(upper_approx(cov, set_of(cov, {"a"}), OS::Fifth).names() ==
          std::vector<std::string>{"a", "b", "c"});
    CHECK(upper_approx(cov, set_of(cov, {"a"}), OS::Second).names() ==
          std::vector<std::string>{"a", "b", "c", "d"});
    for (auto scheme : {OS::Second, OS::Fifth, OS::Sixth, OS::SixthDual})
        CHECK(upper_approx(cov, ElementSet(cov.universe()), scheme).empty());
}

TEST_CASE("lower approximations on the running example") {
    const Covering cov = example_covering();
    CHECK(lower_approx(cov, set_of(cov, {"a", "b", "c"}), OS::Sixth).names() ==
          std::vector<std::string>{"a", "b"});
    CHECK(lower_approx(cov, set_of(cov, {"a", "b", "c"}), OS::SixthDual).names() ==
          std::vector<std::string>{"b"});
    for (auto scheme : {OS::Second, OS::Fifth, OS::Sixth, OS::SixthDual})
        CHECK(lower_approx(cov, ElementSet::full(cov.universe()), scheme) ==
              ElementSet::full(cov.universe()));
}

// The sixth approximations of the running example, straight from the
// defining formulas, for every probe set used by the table fixtures.
TEST_CASE("sixth-scheme golden values") {
    const Covering cov = example_covering();
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> upper = {
        {{"a"}, {"a", "b", "c", "d"}},
        {{"a", "b"}, {"a", "b", "c", "d"}},
        {{"a", "b", "c"}, {"a", "b", "c", "d"}},
        {{"d", "e", "f"}, {"a", "c", "d", "e", "f"}},
        {{"a", "d", "e", "f"}, {"a", "b", "c", "d", "e", "f"}},
    };
    for (const auto& [x, expected] : upper) {
        CHECK(upper_approx(cov, set_of(cov, x), OS::Sixth).names() == expected);
        CHECK(upper_approx(cov, set_of(cov, x), OS::SixthDual).names() == expected);
    }

    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> lower = {
        {{"a"}, {"a"}},
        {{"a", "b"}, {"a", "b"}},
        {{"a", "b", "c"}, {"a", "b"}},
        {{"a", "b", "c", "d"}, {"a", "b", "c", "d"}},
        {{"a", "b", "d", "e", "f"}, {"a", "b", "d", "e", "f"}},
        {{"a", "b", "c", "d", "e", "f"}, {"a", "b", "c", "d", "e", "f"}},
    };
    for (const auto& [x, expected] : lower)
        CHECK(lower_approx(cov, set_of(cov, x), OS::Sixth).names() == expected);
}

TEST_CASE("universe mismatch is rejected") {
    const Covering cov = example_covering();
    auto other = Universe::make({"x"});
    CHECK_THROWS_AS(upper_approx(cov, ElementSet(other), OS::Sixth), UniverseMismatchError);
    CHECK_THROWS_AS(lower_approx(cov, ElementSet(other), OS::Second), UniverseMismatchError);
}

TEST_CASE("lower-approximation identities over random coverings") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + next_below(rng, 8);
        const std::size_t m = 1 + next_below(rng, 6);
        const Covering cov = random_covering(n, m, rng);
        const Covering induced = induced_covering(cov);

        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const ElementSet x = subset_from_mask(cov.universe(), mask);

            // Fifth and sixth lower approximations coincide.
            const ElementSet il = lower_approx(cov, x, OS::Fifth);
            const ElementSet xl = lower_approx(cov, x, OS::Sixth);
            CHECK(il == xl);

            // Both are stable under passing to the neighborhood covering.
            CHECK(lower_approx(induced, x, OS::Fifth) == il);
            CHECK(lower_approx(induced, x, OS::Sixth) == xl);

            // Sandwich around X.
            CHECK(xl.is_subset_of(x));
            CHECK(x.is_subset_of(upper_approx(cov, x, OS::Sixth)));

            // The dual family shares the upper approximation by definition.
            CHECK(upper_approx(cov, x, OS::Sixth) == upper_approx(cov, x, OS::SixthDual));
        }
    }
}

TEST_CASE("sixth and sixth-dual lower approximations genuinely differ") {
    const Covering cov = example_covering();
    const ElementSet x = set_of(cov, {"a", "b", "c"});
    const ElementSet direct = lower_approx(cov, x, OS::Sixth);
    const ElementSet dual = lower_approx(cov, x, OS::SixthDual);
    CHECK(direct.names() == std::vector<std::string>{"a", "b"});
    CHECK(dual.names() == std::vector<std::string>{"b"});
    CHECK_FALSE(direct == dual);
}

TEST_CASE("monotonicity by enumeration on small universes") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + next_below(rng, 5);
        const std::size_t m = 1 + next_below(rng, 4);
        const Covering cov = random_covering(n, m, rng);
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;

        for (std::uint64_t xm = 0; xm <= full; ++xm) {
            // Enumerate supersets of xm by stepping through submasks of the rest.
            const std::uint64_t rest = full & ~xm;
            std::uint64_t extra = 0;
            while (true) {
                const std::uint64_t ym = xm | extra;
                const ElementSet x = subset_from_mask(cov.universe(), xm);
                const ElementSet y = subset_from_mask(cov.universe(), ym);
                for (auto scheme : {OS::Second, OS::Fifth, OS::Sixth, OS::SixthDual}) {
                    CHECK(upper_approx(cov, x, scheme).is_subset_of(upper_approx(cov, y, scheme)));
                    CHECK(lower_approx(cov, x, scheme).is_subset_of(lower_approx(cov, y, scheme)));
                }
                if (extra == rest) break;
                extra = (extra - rest) & rest;
            }
        }
    }
}
