#include "covmat/format.hpp"

#include <sstream>

namespace covmat {

std::string format_set(const ElementSet& x) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& name : x.names()) {
        if (!first) out << ", ";
        out << name;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string format_vector(const BoolVector& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << (v.get(i) ? '1' : '0');
    }
    out << "]^T";
    return out.str();
}

}  // namespace covmat
