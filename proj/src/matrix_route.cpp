#include "covmat/matrix_route.hpp"

#include <random>
#include <utility>

#include "covmat/format.hpp"
#include "covmat/operators.hpp"

namespace covmat {

CharacteristicMatrices::CharacteristicMatrices(const Covering& cov)
    : universe_(cov.universe()),
      membership_(membership_matrix(cov)),
      gamma_(bool_product(membership_, transpose(membership_))),
      pi_(impl_product(membership_, transpose(membership_))),
      pi_t_(transpose(pi_)),
      pi_t_dot_pi_(bool_product(pi_t_, pi_)),
      pi_t_impl_pi_(impl_product(pi_t_, pi_)) {}

CharacteristicMatrices characteristic_matrices(const Covering& cov) {
    return CharacteristicMatrices(cov);
}

BoolVector approx_vector(const CharacteristicMatrices& cm, const BoolVector& chi_x,
                         MatrixFormula formula) {
    switch (formula) {
        case MatrixFormula::SecondUpper:
            return bool_product(cm.gamma(), chi_x);
        case MatrixFormula::SecondLower:
            return impl_product(cm.gamma(), chi_x);
        case MatrixFormula::FifthUpper:
            return bool_product(cm.pi(), chi_x);
        case MatrixFormula::FifthLower:
        case MatrixFormula::SixthLowerCorrected:
            return impl_product(cm.pi(), chi_x);
        case MatrixFormula::SixthUpper:
        case MatrixFormula::SixthDualUpper:
            return bool_product(cm.pi_t_dot_pi(), chi_x);
        case MatrixFormula::SixthLowerCov:
            return impl_product(cm.pi_t_impl_pi(), chi_x);
        case MatrixFormula::SixthDualLower:
        case MatrixFormula::SixthLowerLegacyWrong:
            return impl_product(cm.pi_t_dot_pi(), chi_x);
    }
    throw Error("unreachable matrix formula");
}

ElementSet approx_by_matrix(const CharacteristicMatrices& cm, const ElementSet& x,
                            MatrixFormula formula) {
    ElementSet probe(cm.universe());
    probe.check_same_universe(x);
    return to_set(approx_vector(cm, from_set(x), formula), cm.universe());
}

bool IdentityReport::all_pass() const {
    for (const auto& identity : identities)
        if (!identity.pass) return false;
    return true;
}

const IdentityResult* IdentityReport::find(std::string_view id) const {
    for (const auto& identity : identities)
        if (identity.id == id) return &identity;
    return nullptr;
}

namespace {

ElementSet subset_from_mask(const UniversePtr& universe, std::uint64_t mask) {
    ElementSet x(universe);
    for (std::size_t i = 0; i < universe->size(); ++i)
        if ((mask >> i) & 1u) x.add_index(i);
    return x;
}

struct IdentityCheck {
    const char* id;
    const char* description;
    // Returns left/right results for one subset; unequal means failure.
    std::pair<ElementSet, ElementSet> (*eval)(const Covering& cov, const Covering& induced,
                                              const CharacteristicMatrices& cm,
                                              const ElementSet& x);
};

using OS = OperatorScheme;
using MF = MatrixFormula;

// One entry per identity the toolkit promises. Matrix formulas are always
// compared against the set-theoretic route so the two code paths stay
// independent witnesses of each other.
constexpr IdentityCheck kIdentityChecks[] = {
    {"second-upper-matrix", "matrix SH(X) == set-route SH(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SecondUpper),
                          upper_approx(cov, x, OS::Second));
     }},
    {"second-lower-matrix", "matrix SL(X) == set-route SL(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SecondLower),
                          lower_approx(cov, x, OS::Second));
     }},
    {"fifth-upper-matrix", "matrix IH(X) == set-route IH(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::FifthUpper),
                          upper_approx(cov, x, OS::Fifth));
     }},
    {"fifth-lower-matrix", "matrix IL(X) == set-route IL(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::FifthLower),
                          lower_approx(cov, x, OS::Fifth));
     }},
    {"lower-fifth-eq-sixth", "set-route IL(X) == set-route XL(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices&,
        const ElementSet& x) {
         return std::pair(lower_approx(cov, x, OS::Fifth), lower_approx(cov, x, OS::Sixth));
     }},
    {"sixth-upper-matrix", "matrix XH(X) == set-route XH(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SixthUpper),
                          upper_approx(cov, x, OS::Sixth));
     }},
    {"sixth-lower-matrix", "corrected matrix XL(X) == set-route XL(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SixthLowerCorrected),
                          lower_approx(cov, x, OS::Sixth));
     }},
    {"fifth-lower-induced-stable", "IL over the covering == IL over its neighborhood covering",
     [](const Covering& cov, const Covering& induced, const CharacteristicMatrices&,
        const ElementSet& x) {
         return std::pair(lower_approx(cov, x, OS::Fifth), lower_approx(induced, x, OS::Fifth));
     }},
    {"sixth-lower-induced-stable", "XL over the covering == XL over its neighborhood covering",
     [](const Covering& cov, const Covering& induced, const CharacteristicMatrices&,
        const ElementSet& x) {
         return std::pair(lower_approx(cov, x, OS::Sixth), lower_approx(induced, x, OS::Sixth));
     }},
    {"sixth-lower-induced-route", "induced-covering matrix XL(X) == corrected matrix XL(X)",
     [](const Covering&, const Covering&, const CharacteristicMatrices& cm, const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SixthLowerCov),
                          approx_by_matrix(cm, x, MF::SixthLowerCorrected));
     }},
    {"dual-upper-matrix", "matrix XH^d(X) == set-route XH^d(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SixthDualUpper),
                          upper_approx(cov, x, OS::SixthDual));
     }},
    {"dual-lower-matrix", "matrix XL^d(X) == set-route XL^d(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SixthDualLower),
                          lower_approx(cov, x, OS::SixthDual));
     }},
    {"legacy-eq-dual-lower", "legacy formula == set-route XL^d(X), never XL(X)",
     [](const Covering& cov, const Covering&, const CharacteristicMatrices& cm,
        const ElementSet& x) {
         return std::pair(approx_by_matrix(cm, x, MF::SixthLowerLegacyWrong),
                          lower_approx(cov, x, OS::SixthDual));
     }},
};

}  // namespace

IdentityReport verify_identities(const Covering& cov, const VerifyOptions& options) {
    const auto& universe = cov.universe();
    const std::size_t n = universe->size();
    if (options.exhaustive && n > options.exhaustive_limit)
        throw UniverseTooLargeError(n, options.exhaustive_limit);

    IdentityReport report;
    report.exhaustive = options.exhaustive;
    for (const auto& check : kIdentityChecks)
        report.identities.push_back({check.id, check.description, true, 0, std::nullopt});

    const Covering induced = induced_covering(cov);
    const CharacteristicMatrices cm(cov);

    std::mt19937_64 rng(options.seed);
    const std::size_t total =
        options.exhaustive ? (std::size_t{1} << n) : options.samples;

    for (std::size_t step = 0; step < total; ++step) {
        ElementSet x(universe);
        if (options.exhaustive) {
            x = subset_from_mask(universe, step);
        } else if (n <= 63) {
            x = subset_from_mask(universe, rng() % (std::uint64_t{1} << n));
        } else {
            for (std::size_t i = 0; i < n; ++i)
                if (rng() & 1u) x.add_index(i);
        }

        for (std::size_t c = 0; c < std::size(kIdentityChecks); ++c) {
            auto& entry = report.identities[c];
            ++entry.checked;
            auto [lhs, rhs] = kIdentityChecks[c].eval(cov, induced, cm, x);
            if (!(lhs == rhs) && entry.pass) {
                entry.pass = false;
                entry.counterexample = format_set(x) + ": " + format_set(lhs) + " vs " +
                                       format_set(rhs);
            }
        }

        const auto legacy = approx_by_matrix(cm, x, MF::SixthLowerLegacyWrong);
        const auto corrected = approx_by_matrix(cm, x, MF::SixthLowerCorrected);
        if (!(legacy == corrected)) {
            ++report.legacy_corrected_diffs;
            if (!report.legacy_corrected_witness)
                report.legacy_corrected_witness = format_set(x) + ": legacy " +
                                                  format_set(legacy) + " vs corrected " +
                                                  format_set(corrected);
        }
        ++report.subsets_checked;
    }
    return report;
}

}  // namespace covmat
