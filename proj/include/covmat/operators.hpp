#ifndef COVMAT_OPERATORS_HPP_
#define COVMAT_OPERATORS_HPP_

#include "covmat/covering.hpp"

namespace covmat {

/// The four operator families handled by this toolkit, by their customary
/// numbering in the covering rough-set literature:
///   Second    SH/SL  blocks meeting X; lower is the complement dual
///   Fifth     IH/IL  elementwise tests on N(x)
///   Sixth     XH/XL  unions of neighborhoods meeting / inside X
///   SixthDual XHd/XLd  upper as Sixth, lower defined as [XHd(X^c)]^c
enum class OperatorScheme { Second, Fifth, Sixth, SixthDual };

/// Set-theoretic reference implementations, straight from the defining
/// formulas. Dual lowers are computed literally as
/// complement-of-upper-of-complement so this route cannot share a rewrite
/// with the matrix formulas it is used to check.
ElementSet upper_approx(const Covering& cov, const ElementSet& x, OperatorScheme scheme);
ElementSet lower_approx(const Covering& cov, const ElementSet& x, OperatorScheme scheme);

}  // namespace covmat

#endif  // COVMAT_OPERATORS_HPP_
