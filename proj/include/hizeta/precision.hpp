#pragma once

#include <cmath>

#include "hizeta/error.hpp"

namespace hizeta {

/// Accuracy targets shared by every truncated series, product and quadrature.
struct PrecisionPolicy {
    double eps_abs = 1e-10;
    double eps_rel = 1e-10;
    int max_terms = 32;
    int quad_points = 20;

    /// Throws DomainError if the policy asks for more than binary64 can give.
    void validate() const {
        if (!(eps_abs >= std::ldexp(1.0, -48)) || !(eps_rel > 0.0))
            throw DomainError("precision policy: eps_abs must be >= 2^-48 and eps_rel > 0");
        if (max_terms < 8) throw DomainError("precision policy: max_terms must be >= 8");
        if (quad_points < 2 || quad_points > 64)
            throw DomainError("precision policy: quad_points must lie in [2, 64]");
    }
};

}  // namespace hizeta
