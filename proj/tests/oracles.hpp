#pragma once

// Test-only reference routes. Nothing here calls into the library's formulas;
// each helper evaluates the textbook expression directly so the tests compare
// two independent paths.

#include <cmath>
#include <functional>
#include <random>

namespace attokit::oracle {

/// Naive closed forms, written as printed (no cancellation-safe rewrites).
struct NaiveModel {
    double ip;
    double z;

    double delta(double f) const { return std::sqrt(ip * ip - 4.0 * z * f); }
    double tau_i(double f) const { return 1.0 / (2.0 * (ip + delta(f))); }
    double tau_d(double f) const { return 1.0 / (2.0 * (ip - delta(f))); }
    double x_minus(double f) const { return (ip - delta(f)) / (2.0 * f); }
    double x_plus(double f) const { return (ip + delta(f)) / (2.0 * f); }
    double f_a() const { return ip * ip / (4.0 * z); }
};

/// Golden-section search for the maximum of a unimodal function on [a, b].
inline double golden_section_max(const std::function<double(double)>& fn, double a, double b,
                                 double tol = 1e-12) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    for (int i = 0; i < 500 && (b - a) > tol * (std::abs(a) + std::abs(b)); ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

/// Random (I_p, Z_eff, F/F_a) triples over a physically sensible range.
class AtomFieldSampler {
public:
    explicit AtomFieldSampler(unsigned seed) : rng_(seed) {}

    double ip() { return std::uniform_real_distribution<double>(0.5, 2.5)(rng_); }
    double z_eff() { return std::uniform_real_distribution<double>(1.0, 2.5)(rng_); }
    /// Fraction of F_a in [lo, 1).
    double fraction(double lo = 0.2) { return std::uniform_real_distribution<double>(lo, 1.0)(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

private:
    std::mt19937_64 rng_;
};

}  // namespace attokit::oracle
