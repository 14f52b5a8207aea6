#include "scsigma/types.hpp"

namespace scsigma {

const Material &validate_material(const Material &m) {
    if (!(m.tc > 0.0)) {
        throw DomainError("material.tc must be positive");
    }
    if (!(m.sigma_n > 0.0)) {
        throw DomainError("material.sigma_n must be positive");
    }
    if (!(m.lambda_l0 > 0.0)) {
        throw DomainError("material.lambda_l0 must be positive");
    }
    if (!(m.delta0_ratio > 0.0)) {
        throw DomainError("material.delta0_ratio must be positive");
    }
    if (!(m.dynes_gamma_ratio >= 0.0)) {
        throw DomainError("material.dynes_gamma_ratio must be non-negative");
    }
    return m;
}

} // namespace scsigma
