#pragma once

#include "attokit/barrier.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace attokit {

/// Peak-field description of the driving pulse.
struct LaserSpec {
    double omega0 = 0.0;   ///< central circular frequency, au
    double f = 0.0;        ///< peak field strength, au
    double epsilon = 0.0;  ///< ellipticity in [0, 1]

    static LaserSpec make(double omega0, double f, double epsilon);

    /// Attoclock pulse at 736 nm: omega0 = 0.0619 au, epsilon = 0.87.
    static LaserSpec kase(double f);

    LaserSpec with_field(double field) const;
};

inline constexpr double kKaseOmega0 = 0.0619;
inline constexpr double kKaseEllipticity = 0.87;
inline constexpr double kDefaultRegimeBand = 0.1;
inline constexpr int kDefaultSeriesOrder = 200;

enum class Regime { Tunneling, Intermediate, Multiphoton, AboveThreshold };

std::string_view to_string(Regime regime);

struct Keldysh {
    double gamma_k = 0.0;
    double tau_k = 0.0;     ///< au
    double tau_k_as = 0.0;
};

/// Time quantities at one field strength. All `_as` members mirror the
/// atomic-unit member of the same name.
struct TTimeResult {
    double f = 0.0;
    double tau_i = 0.0;
    double tau_d = 0.0;
    double tau_sym = 0.0;
    double tau_num = 0.0;
    double tau_i_as = 0.0;
    double tau_d_as = 0.0;
    double tau_sym_as = 0.0;
    double tau_num_as = 0.0;
    std::optional<Keldysh> keldysh;
    std::optional<Regime> regime;

    /// The parametric time equals tau_num identically.
    double tau_parm() const noexcept { return tau_num; }
};

/// gamma_K = sqrt(2 I_p) omega0 / F. Throws DomainError for F <= 0.
Keldysh keldysh(const AtomSpec& atom, const LaserSpec& laser);

Regime classify_regime(const AtomSpec& atom, const LaserSpec& laser,
                       double band = kDefaultRegimeBand);

/// Symmetric tunneling time and its two branches. Fills tau_num as well;
/// the Keldysh fields stay empty.
///
/// Throws InfiniteDelayError at f = 0, AboveThresholdError for f > F_a.
TTimeResult t_sym(const AtomSpec& atom, double f);

/// tau_num = tau_d - 1/(2 I_p), evaluated in closed form.
double t_num_closed(const AtomSpec& atom, double f);

inline double t_parm(const AtomSpec& atom, double f) { return t_num_closed(atom, f); }

struct SeriesResult {
    double value = 0.0;
    std::vector<double> terms;
};

/// Partial geometric sum (1/2I_p) sum_{k=1..k_max} (delta_z/I_p)^k. Stops early
/// once a term drops below 1e-16 of the running sum.
SeriesResult t_num_series(const AtomSpec& atom, double f, int k_max = kDefaultSeriesOrder);

enum class Reference { HalfInverseIp, TauI };

/// Initial-time offset t_0 for the given reference convention.
double reference_offset(const AtomSpec& atom, double f, Reference reference);

/// tau_num + t_0. With HalfInverseIp this reproduces tau_d.
double reference_shift(double tau_num_value, const AtomSpec& atom, double f, Reference reference);

/// Full record: times, Keldysh quantities and regime at laser.f.
TTimeResult evaluate(const AtomSpec& atom, const LaserSpec& laser, double band = kDefaultRegimeBand);

enum class Model { TauD, TauNum, TauSym };

std::string_view to_string(Model model);

/// Model time in au extracted from a result.
double model_time(const TTimeResult& result, Model model);

struct ScanRow {
    double f = 0.0;
    double intensity_au = 0.0;
    std::optional<TTimeResult> result;  ///< empty for error rows
    double time_au = 0.0;
    double time_as = 0.0;
    std::optional<double> gamma_k;
    std::optional<Regime> regime;
    std::string error;  ///< empty when the row is valid

    bool ok() const noexcept { return error.empty(); }
};

/// One row per grid value, in grid order. Out-of-range fields produce an error
/// row; the scan keeps going.
std::vector<ScanRow> scan(const AtomSpec& atom, const LaserSpec& laser, std::span<const double> fields,
                          Model model, double band = kDefaultRegimeBand);

}  // namespace attokit
