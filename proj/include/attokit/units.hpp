#pragma once

// Atomic-unit constants and conversions to laboratory units.
//
// Everything inside the library works in atomic units; the helpers below are
// meant for I/O boundaries only.

namespace attokit {

struct PhysConstants {
    /// Speed of light in atomic units.
    double c = 137.036;
    /// Attoseconds per atomic unit of time.
    double au_time_in_attoseconds = 24.18884;
    /// W/cm^2 per atomic unit of intensity.
    double au_intensity_in_w_cm2 = 3.50945e16;

    /// Fine-structure constant, always derived from c.
    constexpr double alpha() const noexcept { return 1.0 / c; }
};

inline constexpr PhysConstants kPhys{};

/// Cycle-averaged intensity of an elliptically polarized pulse with peak
/// field `field`: I = F^2 (1 + eps^2).
double field_to_intensity(double field, double epsilon);

/// Inverse of field_to_intensity.
double intensity_to_field(double intensity, double epsilon);

constexpr double au_to_attoseconds(double t) noexcept { return t * kPhys.au_time_in_attoseconds; }
constexpr double attoseconds_to_au(double t) noexcept { return t / kPhys.au_time_in_attoseconds; }

double intensity_au_to_wcm2(double intensity);
double intensity_wcm2_to_au(double intensity);

}  // namespace attokit
