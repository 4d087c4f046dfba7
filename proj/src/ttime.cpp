#include "attokit/ttime.hpp"

#include "attokit/errors.hpp"
#include "attokit/units.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace attokit {

LaserSpec LaserSpec::make(double omega0, double f, double epsilon) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw InvariantError("omega0 must be positive, got " + std::to_string(omega0));
    }
    if (!(f >= 0.0) || !std::isfinite(f)) {
        throw InvariantError("field strength must be nonnegative, got " + std::to_string(f));
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw InvariantError("ellipticity must lie in [0, 1], got " + std::to_string(epsilon));
    }
    return LaserSpec{omega0, f, epsilon};
}

LaserSpec LaserSpec::kase(double f) { return make(kKaseOmega0, f, kKaseEllipticity); }

LaserSpec LaserSpec::with_field(double field) const { return make(omega0, field, epsilon); }

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Tunneling: return "Tunneling";
        case Regime::Intermediate: return "Intermediate";
        case Regime::Multiphoton: return "Multiphoton";
        case Regime::AboveThreshold: return "AboveThreshold";
    }
    return "?";
}

std::string_view to_string(Model model) {
    switch (model) {
        case Model::TauD: return "taud";
        case Model::TauNum: return "taunum";
        case Model::TauSym: return "tausym";
    }
    return "?";
}

Keldysh keldysh(const AtomSpec& atom, const LaserSpec& laser) {
    if (!(laser.f > 0.0)) {
        throw DomainError("Keldysh parameter diverges at zero field");
    }
    Keldysh k;
    k.tau_k = std::sqrt(2.0 * atom.ip) / laser.f;
    k.gamma_k = k.tau_k * laser.omega0;
    k.tau_k_as = au_to_attoseconds(k.tau_k);
    return k;
}

Regime classify_regime(const AtomSpec& atom, const LaserSpec& laser, double band) {
    if (!(band >= 0.0)) {
        throw DomainError("regime band must be nonnegative, got " + std::to_string(band));
    }
    const double gamma = keldysh(atom, laser).gamma_k;
    if (discriminant(atom, laser.f).imaginary) {
        return Regime::AboveThreshold;
    }
    if (gamma < 1.0 - band) {
        return Regime::Tunneling;
    }
    if (gamma > 1.0 + band) {
        return Regime::Multiphoton;
    }
    return Regime::Intermediate;
}

namespace {

// Shared guard for every time quantity: f = 0 diverges, f > F_a is refused.
double checked_delta(const AtomSpec& atom, double f) {
    if (f == 0.0) {
        throw InfiniteDelayError();
    }
    return delta_z(atom, f);
}

}  // namespace

TTimeResult t_sym(const AtomSpec& atom, double f) {
    const double delta = checked_delta(atom, f);
    const double sum = atom.ip + delta;
    // I_p - delta == 4 Z F / (I_p + delta); the right side keeps full precision
    // for weak fields where the difference cancels.
    const double four_zf = 4.0 * atom.z_eff * f;

    TTimeResult r;
    r.f = f;
    r.tau_i = 1.0 / (2.0 * sum);
    r.tau_d = sum / (2.0 * four_zf);
    r.tau_sym = r.tau_i + r.tau_d;
    r.tau_num = delta * sum / (2.0 * atom.ip * four_zf);
    r.tau_i_as = au_to_attoseconds(r.tau_i);
    r.tau_d_as = au_to_attoseconds(r.tau_d);
    r.tau_sym_as = au_to_attoseconds(r.tau_sym);
    r.tau_num_as = au_to_attoseconds(r.tau_num);
    return r;
}

double t_num_closed(const AtomSpec& atom, double f) {
    const double delta = checked_delta(atom, f);
    return delta * (atom.ip + delta) / (8.0 * atom.ip * atom.z_eff * f);
}

SeriesResult t_num_series(const AtomSpec& atom, double f, int k_max) {
    if (k_max < 1) {
        throw DomainError("series order must be at least 1, got " + std::to_string(k_max));
    }
    const double ratio = checked_delta(atom, f) / atom.ip;

    SeriesResult s;
    s.terms.reserve(static_cast<std::size_t>(std::min(k_max, 4096)));
    double term = 1.0 / (2.0 * atom.ip);
    for (int k = 1; k <= k_max; ++k) {
        term *= ratio;
        s.terms.push_back(term);
        s.value += term;
        if (term <= 1e-16 * s.value) {
            break;
        }
    }
    return s;
}

double reference_offset(const AtomSpec& atom, double f, Reference reference) {
    switch (reference) {
        case Reference::HalfInverseIp:
            checked_delta(atom, f);
            return 1.0 / (2.0 * atom.ip);
        case Reference::TauI:
            return 1.0 / (2.0 * (atom.ip + checked_delta(atom, f)));
    }
    return 0.0;
}

double reference_shift(double tau_num_value, const AtomSpec& atom, double f, Reference reference) {
    return tau_num_value + reference_offset(atom, f, reference);
}

TTimeResult evaluate(const AtomSpec& atom, const LaserSpec& laser, double band) {
    TTimeResult r = t_sym(atom, laser.f);
    r.keldysh = keldysh(atom, laser);
    r.regime = classify_regime(atom, laser, band);
    return r;
}

double model_time(const TTimeResult& result, Model model) {
    switch (model) {
        case Model::TauD: return result.tau_d;
        case Model::TauNum: return result.tau_num;
        case Model::TauSym: return result.tau_sym;
    }
    return 0.0;
}

std::vector<ScanRow> scan(const AtomSpec& atom, const LaserSpec& laser, std::span<const double> fields,
                          Model model, double band) {
    std::vector<ScanRow> rows;
    rows.reserve(fields.size());
    for (const double f : fields) {
        ScanRow row;
        row.f = f;
        try {
            const LaserSpec point = laser.with_field(f);
            row.intensity_au = field_to_intensity(f, point.epsilon);
            if (f > 0.0) {
                row.gamma_k = keldysh(atom, point).gamma_k;
                row.regime = classify_regime(atom, point, band);
            }
            TTimeResult r = evaluate(atom, point, band);
            row.time_au = model_time(r, model);
            row.time_as = au_to_attoseconds(row.time_au);
            row.result = std::move(r);
        } catch (const AboveThresholdError& e) {
            row.error = std::string("AboveThreshold: ") + e.what();
        } catch (const InfiniteDelayError& e) {
            row.error = std::string("InfiniteDelay: ") + e.what();
        } catch (const std::exception& e) {
            row.error = std::string("DomainError: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace attokit
