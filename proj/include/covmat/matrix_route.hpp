#ifndef COVMAT_MATRIX_ROUTE_HPP_
#define COVMAT_MATRIX_ROUTE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covmat/boolmat.hpp"
#include "covmat/covering.hpp"

namespace covmat {

/// The characteristic matrices of a covering, plus the derived products the
/// approximation formulas reuse. Everything is computed once at
/// construction; instances are immutable.
///
///   gamma = M . M^T   (type 1; symmetric, unit diagonal)
///   pi    = M (x) M^T (type 2; row i is the characteristic vector of N(x_i))
///
/// where M is the membership matrix, "." the max-min product and "(x)" the
/// implication product.
class CharacteristicMatrices {
public:
    explicit CharacteristicMatrices(const Covering& cov);

    const UniversePtr& universe() const { return universe_; }
    const BoolMatrix& membership() const { return membership_; }
    const BoolMatrix& gamma() const { return gamma_; }
    const BoolMatrix& pi() const { return pi_; }
    const BoolMatrix& pi_transposed() const { return pi_t_; }
    const BoolMatrix& pi_t_dot_pi() const { return pi_t_dot_pi_; }
    const BoolMatrix& pi_t_impl_pi() const { return pi_t_impl_pi_; }

private:
    UniversePtr universe_;
    BoolMatrix membership_;
    BoolMatrix gamma_;
    BoolMatrix pi_;
    BoolMatrix pi_t_;
    BoolMatrix pi_t_dot_pi_;
    BoolMatrix pi_t_impl_pi_;
};

CharacteristicMatrices characteristic_matrices(const Covering& cov);

/// Every matrix-formula route. Composite expressions group left to right:
/// SixthLowerLegacyWrong is (Pi^T . Pi) (x) chi_X and SixthLowerCov is
/// (Pi^T (x) Pi) (x) chi_X.
enum class MatrixFormula {
    SecondUpper,          // Gamma . chi_X
    SecondLower,          // Gamma (x) chi_X
    FifthUpper,           // Pi . chi_X
    FifthLower,           // Pi (x) chi_X
    SixthUpper,           // (Pi^T . Pi) . chi_X
    SixthLowerCorrected,  // Pi (x) chi_X
    SixthLowerCov,        // (Pi^T (x) Pi) (x) chi_X, via the induced covering
    SixthDualUpper,       // (Pi^T . Pi) . chi_X
    SixthDualLower,       // (Pi^T . Pi) (x) chi_X
    // Deprecated: the historical sixth-lower formula. It computes the dual
    // lower approximation XL^d, not XL. Kept behind this explicit tag so the
    // discrepancy stays executable and regression-tested; never use it for
    // new work.
    SixthLowerLegacyWrong,  // (Pi^T . Pi) (x) chi_X
};

/// Result characteristic vector of a formula applied to chi_X.
BoolVector approx_vector(const CharacteristicMatrices& cm, const BoolVector& chi_x,
                         MatrixFormula formula);

ElementSet approx_by_matrix(const CharacteristicMatrices& cm, const ElementSet& x,
                            MatrixFormula formula);

struct IdentityResult {
    std::string id;
    std::string description;
    bool pass = true;
    std::size_t checked = 0;
    /// First failing subset, rendered as a set literal.
    std::optional<std::string> counterexample;
};

struct IdentityReport {
    std::vector<IdentityResult> identities;
    std::size_t subsets_checked = 0;
    bool exhaustive = false;
    /// Subsets where the legacy formula and the corrected formula disagree.
    /// Their disagreement is expected on non-partition coverings; the count
    /// and first witness feed the CLI's reporting.
    std::size_t legacy_corrected_diffs = 0;
    std::optional<std::string> legacy_corrected_witness;

    bool all_pass() const;
    const IdentityResult* find(std::string_view id) const;
};

struct VerifyOptions {
    bool exhaustive = false;
    std::size_t samples = 256;   // used when not exhaustive
    std::uint64_t seed = 0;
    std::size_t exhaustive_limit = 10;  // max universe size for exhaustive runs
};

/// Executes every operator identity the matrix formulas are expected to
/// satisfy against the set-theoretic route, over all 2^n subsets
/// (exhaustive) or a random sample. Throws UniverseTooLargeError when an
/// exhaustive run is requested above the limit.
IdentityReport verify_identities(const Covering& cov, const VerifyOptions& options = {});

}  // namespace covmat

#endif  // COVMAT_MATRIX_ROUTE_HPP_
