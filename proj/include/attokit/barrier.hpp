#pragma once

#include <string>

namespace attokit {

/// Bound system seen by the active electron.
struct AtomSpec {
    double ip = 0.0;      ///< ionization potential, au
    double z_eff = 0.0;   ///< effective nuclear charge
    std::string label;

    /// Validating constructor; throws InvariantError unless ip > 0 and z_eff > 0.
    static AtomSpec make(double ip, double z_eff, std::string label = "custom");

    /// He with the Clementi screening constant (Z_eff = 1.6875).
    static AtomSpec helium_clementi();
    /// He with Z_eff = 1.375.
    static AtomSpec helium_kullie();
};

inline constexpr double kHeliumIp = 0.90357;
inline constexpr double kHeliumZeffClementi = 1.6875;
inline constexpr double kHeliumZeffKullie = 1.375;

/// Geometry of the 1D barrier V_eff(x) = -Z_eff/x - F x at the bound level -I_p.
struct BarrierGeometry {
    double delta_z = 0.0;      ///< sqrt(I_p^2 - 4 Z_eff F)
    double x_entry = 0.0;      ///< inner classical turning point
    double x_exit = 0.0;       ///< outer classical turning point
    double d_b = 0.0;          ///< barrier width x_exit - x_entry
    double x_classical = 0.0;  ///< I_p / F
    double x_max = 0.0;        ///< position of the barrier top
    double h_b = 0.0;          ///< barrier top above -I_p
    double f_a = 0.0;          ///< atomic field strength
    double f = 0.0;
};

/// F_a = I_p^2 / (4 Z_eff); the barrier disappears at this field.
double atomic_field_strength(const AtomSpec& atom);

/// Magnitude of the discriminant, flagged when it is imaginary (f > F_a).
struct Discriminant {
    double magnitude = 0.0;
    bool imaginary = false;
};

/// Real-or-imaginary discriminant. Use this when the above-threshold branch is wanted.
Discriminant discriminant(const AtomSpec& atom, double f);

/// Real branch of the discriminant. Throws AboveThresholdError for f > F_a and
/// DomainError for f < 0.
double delta_z(const AtomSpec& atom, double f);

/// Requires 0 < f <= F_a.
BarrierGeometry barrier_geometry(const AtomSpec& atom, double f);

/// Bare Coulomb potential -Z_eff/x.
double potential(const AtomSpec& atom, double x);

/// Length-gauge potential -Z_eff/x - f x, defined for x > 0.
double effective_potential(const AtomSpec& atom, double f, double x);

}  // namespace attokit
