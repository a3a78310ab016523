#ifndef COVMAT_FORMAT_HPP_
#define COVMAT_FORMAT_HPP_

#include <string>

#include "covmat/boolmat.hpp"
#include "covmat/covering.hpp"

namespace covmat {

/// "{a, b, c}" with members in universe order; "{}" for the empty set.
std::string format_set(const ElementSet& x);

/// "[1 0 0 1]^T", entries in index order.
std::string format_vector(const BoolVector& v);

}  // namespace covmat

#endif  // COVMAT_FORMAT_HPP_
