#include "attokit/barrier.hpp"

#include "attokit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace attokit {

AtomSpec AtomSpec::make(double ip, double z_eff, std::string label) {
    if (!(ip > 0.0) || !std::isfinite(ip)) {
        throw InvariantError("ionization potential must be positive, got " + std::to_string(ip));
    }
    if (!(z_eff > 0.0) || !std::isfinite(z_eff)) {
        throw InvariantError("effective charge must be positive, got " + std::to_string(z_eff));
    }
    return AtomSpec{ip, z_eff, std::move(label)};
}

AtomSpec AtomSpec::helium_clementi() {
    return make(kHeliumIp, kHeliumZeffClementi, "He (Z_eff=1.6875)");
}

AtomSpec AtomSpec::helium_kullie() {
    return make(kHeliumIp, kHeliumZeffKullie, "He (Z_eff=1.375)");
}

double atomic_field_strength(const AtomSpec& atom) {
    return atom.ip * atom.ip / (4.0 * atom.z_eff);
}

Discriminant discriminant(const AtomSpec& atom, double f) {
    if (!(f >= 0.0)) {
        throw DomainError("field strength must be nonnegative, got " + std::to_string(f));
    }
    // At f == F_a the difference is a few ulps of I_p^2 either side of zero;
    // sqrt would blow that up to ~1e-8, so snap it.
    const double ip2 = atom.ip * atom.ip;
    const double d2 = ip2 - 4.0 * atom.z_eff * f;
    const double snap = 8.0 * std::numeric_limits<double>::epsilon() * ip2;
    if (d2 < -snap) {
        return {std::sqrt(-d2), true};
    }
    return {d2 > snap ? std::sqrt(d2) : 0.0, false};
}

double delta_z(const AtomSpec& atom, double f) {
    const Discriminant d = discriminant(atom, f);
    if (d.imaginary) {
        throw AboveThresholdError(f, atomic_field_strength(atom), d.magnitude);
    }
    return d.magnitude;
}

BarrierGeometry barrier_geometry(const AtomSpec& atom, double f) {
    if (!(f > 0.0)) {
        throw DomainError("barrier geometry needs a positive field, got " + std::to_string(f));
    }
    BarrierGeometry g;
    g.f = f;
    g.f_a = atomic_field_strength(atom);
    g.delta_z = delta_z(atom, f);

    // x_entry = (I_p - delta)/2F rewritten through the root product x_- x_+ = Z/F
    // so that weak fields do not lose digits to cancellation.
    const double sum = atom.ip + g.delta_z;
    g.x_exit = sum / (2.0 * f);
    g.x_entry = 2.0 * atom.z_eff / sum;
    g.d_b = g.delta_z / f;
    g.x_classical = atom.ip / f;
    g.x_max = std::sqrt(atom.z_eff / f);
    g.h_b = std::max(0.0, atom.ip - 2.0 * std::sqrt(atom.z_eff * f));
    if (g.delta_z == 0.0) {
        g.x_entry = g.x_exit = g.x_max;
        g.h_b = 0.0;
    }
    return g;
}

double potential(const AtomSpec& atom, double x) {
    if (x == 0.0) {
        throw SingularityError("Coulomb potential is singular at x = 0");
    }
    return -atom.z_eff / x;
}

double effective_potential(const AtomSpec& atom, double f, double x) {
    if (!(x > 0.0)) {
        throw DomainError("effective potential is defined for x > 0, got " + std::to_string(x));
    }
    return -atom.z_eff / x - f * x;
}

}  // namespace attokit
