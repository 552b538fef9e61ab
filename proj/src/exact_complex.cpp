#include "logtb/exact_complex.hpp"

#include <stdexcept>

namespace logtb::exact {

ExactComplex ExactComplex::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt d)(i)");
    const QuadExt n2 = norm_squared();
    const QuadExt inv = n2.inverse();
    return {re_ * inv, -im_ * inv};
}

std::string ExactComplex::to_string() const {
    return re_.to_string() + (im_.is_zero() ? "" : "+" + im_.to_string() + "*i");
}

}  // namespace logtb::exact
