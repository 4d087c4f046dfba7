#include "attokit/photonics.hpp"

#include "attokit/errors.hpp"
#include "attokit/units.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

namespace attokit {

namespace detail {
extern const std::string_view kTable1GoldenCsv;
}

namespace {

double interaction_area(double orbital_radius) {
    if (!(orbital_radius > 0.0)) {
        throw DomainError("orbital radius must be positive, got " + std::to_string(orbital_radius));
    }
    return 4.0 * std::numbers::pi * orbital_radius * orbital_radius;
}

// One orbital period, 1/sqrt(2 I_p).
double interaction_time(const AtomSpec& atom) { return 1.0 / std::sqrt(2.0 * atom.ip); }

}  // namespace

ExpansionSpec::ExpansionSpec(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty() || coefficients_.front() != 1.0) {
        throw InvariantError("momentum expansion requires a_0 = 1");
    }
}

ExpansionSpec ExpansionSpec::first_order(double a1) { return ExpansionSpec({1.0, a1}); }

ExpansionSpec ExpansionSpec::zeroth_order() { return ExpansionSpec({1.0}); }

double electron_momentum(const AtomSpec& atom) { return std::sqrt(2.0 * atom.ip); }

EffectiveMass effective_mass(const LaserSpec& laser) {
    if (!(laser.omega0 > 0.0)) {
        throw DomainError("omega0 must be positive");
    }
    const double k_l = laser.f / laser.omega0;
    return {k_l / kPhys.c, k_l};
}

double mean_photon_number(const AtomSpec& atom, const LaserSpec& laser, double orbital_radius) {
    const double intensity = field_to_intensity(laser.f, laser.epsilon);
    return intensity / laser.omega0 * interaction_area(orbital_radius) * interaction_time(atom);
}

MomentumTransfer compton_momentum(const AtomSpec& atom, const LaserSpec& laser, double orbital_radius) {
    const double p = mean_photon_number(atom, laser, orbital_radius) * laser.omega0 / kPhys.c;
    return {p, 100.0 * p / electron_momentum(atom)};
}

MomentumTransfer wavepacket_momentum(const AtomSpec& atom, const LaserSpec& laser, double eta) {
    if (!(eta > 0.0)) {
        throw DomainError("coupling eta must be positive, got " + std::to_string(eta));
    }
    const double k_l = laser.f / laser.omega0;
    const double p = eta * kPhys.alpha() * k_l * k_l;
    return {p, 100.0 * p / electron_momentum(atom)};
}

double ratio_wp_over_compton(const AtomSpec& atom, const LaserSpec& laser, double eta, double orbital_radius) {
    if (!(laser.f > 0.0)) {
        throw DomainError("p_W/p_C is undefined at zero field (no photons)");
    }
    if (!(eta > 0.0)) {
        throw DomainError("coupling eta must be positive, got " + std::to_string(eta));
    }
    const double w2 = laser.omega0 * laser.omega0;
    return eta / (interaction_time(atom) * interaction_area(orbital_radius) * w2 *
                  (1.0 + laser.epsilon * laser.epsilon));
}

FedorovMass fedorov_mass(double n_photons, double lambda0, double waist, double omega0) {
    if (!(lambda0 > 0.0) || !(waist > 0.0)) {
        throw DomainError("wavelength and waist must be positive");
    }
    if (!(n_photons >= 0.0)) {
        throw DomainError("photon number must be nonnegative");
    }
    FedorovMass m;
    m.mass = n_photons * (lambda0 / (2.0 * std::numbers::pi * waist)) * (omega0 / (kPhys.c * kPhys.c));
    if (waist <= lambda0) {
        m.warning = "waist is not much larger than the wavelength; the invariant-mass estimate assumes w_a >> lambda0";
    }
    return m;
}

double single_photon_field_limit(double omega_ph) {
    if (!(omega_ph > 0.0)) {
        throw DomainError("photon frequency must be positive");
    }
    return omega_ph * omega_ph / kPhys.c;
}

double ponderomotive_energy(const LaserSpec& laser, double chi) {
    if (!(laser.omega0 > 0.0)) {
        throw DomainError("omega0 must be positive");
    }
    return chi * laser.f * laser.f / (laser.omega0 * laser.omega0);
}

MomentumExpansion momentum_expansion(const LaserSpec& laser, const ExpansionSpec& spec) {
    if (!(laser.omega0 > 0.0)) {
        throw DomainError("omega0 must be positive");
    }
    const double k_l = laser.f / laser.omega0;
    MomentumExpansion e;
    double power = k_l;  // alpha^i (F/omega0)^(i+1)
    for (const double a : spec.coefficients()) {
        e.k_terms.push_back(a * power);
        e.k_total += a * power;
        power *= kPhys.alpha() * k_l;
    }
    return e;
}

PhotonStats photon_stats(const AtomSpec& atom, const LaserSpec& laser, double eta) {
    PhotonStats s;
    s.f = laser.f;
    s.intensity_au = field_to_intensity(laser.f, laser.epsilon);
    s.intensity_wcm2 = intensity_au_to_wcm2(s.intensity_au);
    s.m_l = effective_mass(laser).m_l;
    s.n_ph_mean = mean_photon_number(atom, laser);
    const MomentumTransfer compton = compton_momentum(atom, laser);
    const MomentumTransfer wave = wavepacket_momentum(atom, laser, eta);
    s.p_compton = compton.p;
    s.ratio_compton_pct = compton.ratio_pct;
    s.p_wavepacket = wave.p;
    s.ratio_wavepacket_pct = wave.ratio_pct;
    s.k_e = electron_momentum(atom);
    return s;
}

std::vector<PhotonStats> table1(const AtomSpec& atom, const LaserSpec& laser, std::span<const double> multipliers,
                                double eta) {
    std::vector<PhotonStats> rows;
    rows.reserve(multipliers.size());
    for (const double x : multipliers) {
        if (!(x > 0.0)) {
            throw DomainError("intensity multipliers must be positive, got " + std::to_string(x));
        }
        const double intensity = intensity_wcm2_to_au(x * 1e14);
        const LaserSpec point = laser.with_field(intensity_to_field(intensity, laser.epsilon));
        rows.push_back(photon_stats(atom, point, eta));
    }
    return rows;
}

std::string_view to_string(Table1Quantity q) {
    switch (q) {
        case Table1Quantity::Intensity: return "intensity_au";
        case Table1Quantity::Field: return "field_au";
        case Table1Quantity::EffectiveMass: return "m_l";
        case Table1Quantity::MeanPhotons: return "n_ph_mean";
        case Table1Quantity::ComptonRatio: return "ratio_compton_pct";
        case Table1Quantity::WavepacketRatio: return "ratio_wavepacket_pct";
    }
    return "?";
}

std::optional<Table1Quantity> parse_table1_quantity(std::string_view name) {
    for (const Table1Quantity q : kTable1Quantities) {
        if (to_string(q) == name) {
            return q;
        }
    }
    return std::nullopt;
}

double table1_value(const PhotonStats& row, Table1Quantity q) {
    switch (q) {
        case Table1Quantity::Intensity: return row.intensity_au;
        case Table1Quantity::Field: return row.f;
        case Table1Quantity::EffectiveMass: return row.m_l;
        case Table1Quantity::MeanPhotons: return row.n_ph_mean;
        case Table1Quantity::ComptonRatio: return row.ratio_compton_pct;
        case Table1Quantity::WavepacketRatio: return row.ratio_wavepacket_pct;
    }
    return 0.0;
}

std::vector<GoldenCell> parse_table1_golden(std::istream& in) {
    std::vector<GoldenCell> cells;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line.rfind("quantity,x,published", 0) != 0) {
                throw InvariantError("golden file: unexpected header at line " + std::to_string(line_no));
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int i = 0; i < 4; ++i) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        fields.push_back(line.substr(start));
        if (fields.size() < 3) {
            throw InvariantError("golden file: too few fields at line " + std::to_string(line_no));
        }
        GoldenCell cell;
        const auto q = parse_table1_quantity(fields[0]);
        if (!q) {
            throw InvariantError("golden file: unknown quantity '" + fields[0] + "' at line " +
                                 std::to_string(line_no));
        }
        cell.quantity = *q;
        try {
            cell.x = std::stod(fields[1]);
            cell.published = std::stod(fields[2]);
            if (fields.size() > 3 && !fields[3].empty()) {
                cell.expected = std::stod(fields[3]);
            }
        } catch (const std::exception&) {
            throw InvariantError("golden file: bad number at line " + std::to_string(line_no));
        }
        if (fields.size() > 4) {
            cell.note = fields[4];
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

const std::vector<GoldenCell>& embedded_table1_golden() {
    static const std::vector<GoldenCell> cells = [] {
        std::istringstream in{std::string(detail::kTable1GoldenCsv)};
        return parse_table1_golden(in);
    }();
    return cells;
}

std::string_view to_string(DiffStatus s) {
    switch (s) {
        case DiffStatus::Ok: return "ok";
        case DiffStatus::Mismatch: return "mismatch";
        case DiffStatus::Flagged: return "flagged";
    }
    return "?";
}

std::vector<CellDiff> diff_table1(std::span<const PhotonStats> rows, std::span<const double> multipliers,
                                  std::span<const GoldenCell> golden, double rel_tolerance) {
    std::vector<CellDiff> diffs;
    for (const Table1Quantity q : kTable1Quantities) {
        for (std::size_t i = 0; i < rows.size() && i < multipliers.size(); ++i) {
            for (const GoldenCell& cell : golden) {
                if (cell.quantity != q || cell.x != multipliers[i]) {
                    continue;
                }
                CellDiff d;
                d.quantity = q;
                d.x = cell.x;
                d.computed = table1_value(rows[i], q);
                d.published = cell.published;
                d.rel_diff = std::abs(d.computed - d.published) / std::abs(d.published);
                d.expected = cell.expected;
                if (cell.expected) {
                    d.status = DiffStatus::Flagged;
                    d.pass = std::abs(d.computed - *cell.expected) <= kTable1FlaggedAbsTolerance;
                } else {
                    d.pass = d.rel_diff <= rel_tolerance;
                    d.status = d.pass ? DiffStatus::Ok : DiffStatus::Mismatch;
                }
                diffs.push_back(std::move(d));
            }
        }
    }
    return diffs;
}

}  // namespace attokit
