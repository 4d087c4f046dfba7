#include "attokit/units.hpp"

#include "attokit/errors.hpp"

#include <cmath>
#include <string>

namespace attokit {

namespace {

void check_ellipticity(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw DomainError("ellipticity must lie in [0, 1], got " + std::to_string(epsilon));
    }
}

}  // namespace

double field_to_intensity(double field, double epsilon) {
    if (!(field >= 0.0)) {
        throw DomainError("field strength must be nonnegative, got " + std::to_string(field));
    }
    check_ellipticity(epsilon);
    return field * field * (1.0 + epsilon * epsilon);
}

double intensity_to_field(double intensity, double epsilon) {
    if (!(intensity >= 0.0)) {
        throw DomainError("intensity must be nonnegative, got " + std::to_string(intensity));
    }
    check_ellipticity(epsilon);
    return std::sqrt(intensity / (1.0 + epsilon * epsilon));
}

double intensity_au_to_wcm2(double intensity) {
    if (!(intensity >= 0.0)) {
        throw DomainError("intensity must be nonnegative, got " + std::to_string(intensity));
    }
    return intensity * kPhys.au_intensity_in_w_cm2;
}

double intensity_wcm2_to_au(double intensity) {
    if (!(intensity >= 0.0)) {
        throw DomainError("intensity must be nonnegative, got " + std::to_string(intensity));
    }
    return intensity / kPhys.au_intensity_in_w_cm2;
}

}  // namespace attokit
