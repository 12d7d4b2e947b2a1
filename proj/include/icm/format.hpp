#pragma once

#include <string>

#include "icm/semigroup.hpp"

namespace icm {

// "(2,4,6)", "()" for the empty vector
inline std::string kunz_str(const KunzVector& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(x[i]);
    }
    return out + ")";
}

// "<4,9>"
inline std::string generator_str(const NumericalSemigroup& S) {
    std::string out = "<";
    const auto& g = S.minimal_generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g[i]);
    }
    return out + ">";
}

} // namespace icm
