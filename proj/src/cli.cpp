#include "attokit/cli.hpp"

#include "attokit/errors.hpp"
#include "attokit/photonics.hpp"
#include "attokit/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace attokit::cli {

namespace {

using Json = nlohmann::ordered_json;

// Warnings go to the error stream, decorated only for an interactive stderr.
class Diagnostics {
public:
    Diagnostics(std::ostream& err, bool color) : err_(err), color_(color) {}

    void warning(const std::string& message) {
        err_ << (color_ ? "\033[33mwarning:\033[0m " : "warning: ") << message << '\n';
    }

    void error(const std::string& message) {
        err_ << (color_ ? "\033[31merror:\033[0m " : "error: ") << message << '\n';
    }

private:
    std::ostream& err_;
    bool color_;
};

double round_significant(double value) {
    if (value == 0.0 || !std::isfinite(value)) {
        return value == 0.0 ? 0.0 : value;
    }
    return std::strtod(format_number(value).c_str(), nullptr);
}

// Applies the 6-significant-digit policy to every float in a document.
void round_numbers(Json& j) {
    if (j.is_number_float()) {
        j = round_significant(j.get<double>());
    } else if (j.is_structured()) {
        for (auto& child : j) {
            round_numbers(child);
        }
    }
}

void write_json(std::ostream& out, Json j) {
    round_numbers(j);
    out << j.dump(2) << '\n';
}

std::string csv_optional(const std::optional<double>& value) {
    return value ? format_number(*value) : std::string();
}

std::optional<double> parse_double(std::string_view token) {
    const std::string s(token);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<double> parse_list(std::string_view spec) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string_view token =
            trim(spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        const auto v = parse_double(token);
        if (!v) {
            throw ConfigError("cannot parse number '" + std::string(token) + "'");
        }
        values.push_back(*v);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_scan(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
    const auto rows = scan(cfg.atom, cfg.laser, cfg.fields, cfg.model, cfg.band);
    for (const ScanRow& row : rows) {
        if (!row.ok()) {
            diag.warning("f=" + format_number(row.f) + ": " + row.error);
        }
    }

    const auto series_as = [&](const ScanRow& row) -> std::optional<double> {
        if (!cfg.series_order || !row.ok()) {
            return std::nullopt;
        }
        return au_to_attoseconds(t_num_series(cfg.atom, row.f, *cfg.series_order).value);
    };
    const auto regime_name = [](const ScanRow& row) -> std::string {
        return row.regime ? std::string(to_string(*row.regime)) : std::string("invalid");
    };

    if (cfg.format == Format::Json) {
        Json j;
        j["atom"] = cfg.atom.label;
        j["ip"] = cfg.atom.ip;
        j["z_eff"] = cfg.atom.z_eff;
        j["f_a"] = atomic_field_strength(cfg.atom);
        j["omega0"] = cfg.laser.omega0;
        j["ellipticity"] = cfg.laser.epsilon;
        j["model"] = std::string(to_string(cfg.model));
        auto& arr = j["rows"] = Json::array();
        for (const ScanRow& row : rows) {
            Json r;
            r["f_au"] = row.f;
            r["intensity_au"] = row.intensity_au;
            r["intensity_wcm2"] = intensity_au_to_wcm2(row.intensity_au);
            if (row.result) {
                r["tau_i_as"] = row.result->tau_i_as;
                r["tau_d_as"] = row.result->tau_d_as;
                r["tau_sym_as"] = row.result->tau_sym_as;
                r["tau_num_as"] = row.result->tau_num_as;
                r["time_as"] = row.time_as;
                if (const auto s = series_as(row)) {
                    r["tau_num_series_as"] = *s;
                }
            }
            if (row.gamma_k) {
                r["gamma_k"] = *row.gamma_k;
            }
            r["regime"] = regime_name(row);
            if (!row.ok()) {
                r["error"] = row.error;
            }
            arr.push_back(std::move(r));
        }
        write_json(out, std::move(j));
        return;
    }

    out << "f_au,intensity_au,intensity_wcm2,tau_i_as,tau_d_as,tau_sym_as,tau_num_as,gamma_k,regime";
    if (cfg.series_order) {
        out << ",tau_num_series_as";
    }
    out << '\n';
    for (const ScanRow& row : rows) {
        const auto& r = row.result;
        out << format_number(row.f) << ',' << format_number(row.intensity_au) << ','
            << format_number(intensity_au_to_wcm2(row.intensity_au)) << ','
            << csv_optional(r ? std::optional(r->tau_i_as) : std::nullopt) << ','
            << csv_optional(r ? std::optional(r->tau_d_as) : std::nullopt) << ','
            << csv_optional(r ? std::optional(r->tau_sym_as) : std::nullopt) << ','
            << csv_optional(r ? std::optional(r->tau_num_as) : std::nullopt) << ','
            << csv_optional(row.gamma_k) << ',' << regime_name(row);
        if (cfg.series_order) {
            out << ',' << csv_optional(series_as(row));
        }
        out << '\n';
    }
}

void cmd_regimes(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
    const double f_a = atomic_field_strength(cfg.atom);
    struct Row {
        double f;
        double intensity;
        Keldysh k;
        Regime regime;
    };
    std::vector<Row> rows;
    for (const double f : cfg.fields) {
        if (!(f > 0.0)) {
            diag.warning("f=" + format_number(f) + ": regime needs a positive field; row skipped");
            continue;
        }
        const LaserSpec point = cfg.laser.with_field(f);
        rows.push_back({f, field_to_intensity(f, point.epsilon), keldysh(cfg.atom, point),
                        classify_regime(cfg.atom, point, cfg.band)});
    }

    if (cfg.format == Format::Json) {
        Json j;
        j["f_a"] = f_a;
        j["band"] = cfg.band;
        auto& arr = j["rows"] = Json::array();
        for (const Row& r : rows) {
            Json o;
            o["f_au"] = r.f;
            o["intensity_au"] = r.intensity;
            o["gamma_k"] = r.k.gamma_k;
            o["tau_k_au"] = r.k.tau_k;
            o["tau_k_as"] = r.k.tau_k_as;
            o["regime"] = std::string(to_string(r.regime));
            arr.push_back(std::move(o));
        }
        write_json(out, std::move(j));
        return;
    }
    out << "f_au,intensity_au,gamma_k,tau_k_au,tau_k_as,f_a,regime\n";
    for (const Row& r : rows) {
        out << format_number(r.f) << ',' << format_number(r.intensity) << ',' << format_number(r.k.gamma_k) << ','
            << format_number(r.k.tau_k) << ',' << format_number(r.k.tau_k_as) << ',' << format_number(f_a) << ','
            << to_string(r.regime) << '\n';
    }
}

std::vector<GoldenCell> load_golden(const std::string& path) {
    if (path.empty()) {
        return embedded_table1_golden();
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open golden file '" + path + "'");
    }
    try {
        return parse_table1_golden(in);
    } catch (const InvariantError& e) {
        throw ConfigError(e.what());
    }
}

void cmd_table1(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
    const std::vector<double> multipliers =
        cfg.multipliers.empty() ? std::vector<double>(std::begin(kTable1Multipliers), std::end(kTable1Multipliers))
                                : cfg.multipliers;
    const auto rows = table1(cfg.atom, cfg.laser, multipliers, cfg.eta);

    std::vector<CellDiff> diffs;
    if (cfg.golden) {
        diffs = diff_table1(rows, multipliers, load_golden(*cfg.golden));
        for (const CellDiff& d : diffs) {
            if (!d.pass) {
                diag.warning(std::string(to_string(d.quantity)) + " at x=" + format_number(d.x) + ": computed " +
                             format_number(d.computed) + " vs published " + format_number(d.published));
            }
        }
    }

    if (cfg.format == Format::Json) {
        Json j;
        j["eta"] = cfg.eta;
        auto& arr = j["rows"] = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const PhotonStats& s = rows[i];
            Json r;
            r["x"] = multipliers[i];
            r["intensity_au"] = s.intensity_au;
            r["intensity_wcm2"] = s.intensity_wcm2;
            r["field_au"] = s.f;
            r["m_l"] = s.m_l;
            r["n_ph_mean"] = s.n_ph_mean;
            r["p_compton"] = s.p_compton;
            r["p_wavepacket"] = s.p_wavepacket;
            r["ratio_compton_pct"] = s.ratio_compton_pct;
            r["ratio_wavepacket_pct"] = s.ratio_wavepacket_pct;
            r["k_e"] = s.k_e;
            arr.push_back(std::move(r));
        }
        if (cfg.golden) {
            auto& g = j["golden_diff"] = Json::array();
            for (const CellDiff& d : diffs) {
                Json o;
                o["quantity"] = std::string(to_string(d.quantity));
                o["x"] = d.x;
                o["computed"] = d.computed;
                o["published"] = d.published;
                o["rel_diff"] = d.rel_diff;
                o["expected"] = d.expected ? Json(*d.expected) : Json(nullptr);
                o["status"] = std::string(to_string(d.status));
                o["pass"] = d.pass;
                g.push_back(std::move(o));
            }
        }
        write_json(out, std::move(j));
        return;
    }

    out << "quantity";
    for (const double x : multipliers) {
        out << ',' << format_number(x);
    }
    out << '\n';
    for (const Table1Quantity q : kTable1Quantities) {
        out << to_string(q);
        for (const PhotonStats& s : rows) {
            out << ',' << format_number(table1_value(s, q));
        }
        out << '\n';
    }
    if (cfg.golden) {
        out << "\nquantity,x,computed,published,rel_diff,expected,status,pass\n";
        for (const CellDiff& d : diffs) {
            out << to_string(d.quantity) << ',' << format_number(d.x) << ',' << format_number(d.computed) << ','
                << format_number(d.published) << ',' << format_number(d.rel_diff) << ',' << csv_optional(d.expected)
                << ',' << to_string(d.status) << ',' << (d.pass ? "yes" : "no") << '\n';
        }
    }
}

void cmd_barrier(const RunConfig& cfg, std::ostream& out, Diagnostics&) {
    if (!cfg.field) {
        throw ConfigError("barrier needs --field");
    }
    BarrierGeometry g;
    try {
        g = barrier_geometry(cfg.atom, *cfg.field);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }

    struct Sample {
        double x;
        double v;
        double v_eff;
    };
    std::vector<Sample> profile;
    if (cfg.profile_points > 0) {
        const double lo = 0.5 * g.x_entry;
        const double hi = 1.5 * g.x_exit;
        const int n = cfg.profile_points;
        for (int i = 0; i < n; ++i) {
            const double x = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
            profile.push_back({x, potential(cfg.atom, x), effective_potential(cfg.atom, g.f, x)});
        }
    }

    if (cfg.format == Format::Json) {
        Json j;
        j["f_au"] = g.f;
        j["f_a"] = g.f_a;
        j["delta_z"] = g.delta_z;
        j["x_entry"] = g.x_entry;
        j["x_exit"] = g.x_exit;
        j["x_classical"] = g.x_classical;
        j["x_max"] = g.x_max;
        j["d_b"] = g.d_b;
        j["h_b"] = g.h_b;
        if (!profile.empty()) {
            auto& arr = j["profile"] = Json::array();
            for (const Sample& s : profile) {
                arr.push_back(Json{{"x_au", s.x}, {"v_au", s.v}, {"v_eff_au", s.v_eff}});
            }
        }
        write_json(out, std::move(j));
        return;
    }
    out << "f_au,f_a,delta_z,x_entry,x_exit,x_classical,x_max,d_b,h_b\n";
    out << format_number(g.f) << ',' << format_number(g.f_a) << ',' << format_number(g.delta_z) << ','
        << format_number(g.x_entry) << ',' << format_number(g.x_exit) << ',' << format_number(g.x_classical) << ','
        << format_number(g.x_max) << ',' << format_number(g.d_b) << ',' << format_number(g.h_b) << '\n';
    if (!profile.empty()) {
        out << "\nx_au,v_au,v_eff_au\n";
        for (const Sample& s : profile) {
            out << format_number(s.x) << ',' << format_number(s.v) << ',' << format_number(s.v_eff) << '\n';
        }
    }
}

void cmd_compare(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
    const auto points = load_experiment(cfg.data_path);
    const FitReport report = compare(points, cfg.atom, cfg.model, cfg.shift, cfg.laser.epsilon);
    for (const ExcludedPoint& e : report.excluded) {
        diag.warning("line " + std::to_string(e.line) + " excluded: " + e.reason);
    }
    if (cfg.format == Format::Json) {
        write_json(out, to_json(report));
        return;
    }
    out << "line,label,f_au,delay_as,model_as,shift_as,residual_as,sigma_as\n";
    for (const Residual& r : report.per_point_residuals) {
        out << r.line << ',' << r.label << ',' << format_number(r.f_au) << ',' << format_number(r.delay_as) << ','
            << format_number(r.model_as) << ',' << format_number(r.shift_as) << ',' << format_number(r.residual_as)
            << ',' << format_number(r.sigma_as) << '\n';
    }
    out << "# n_points=" << report.n_points << " rms_as=" << format_number(report.rms_as)
        << " chi2=" << format_number(report.chi2) << '\n';
}

// ---------------------------------------------------------------------------
// Flag handling

struct RawFlags {
    std::string atom = "he-clementi";
    std::optional<double> ip;
    std::optional<double> zeff;
    double omega0 = kKaseOmega0;
    double ellipticity = kKaseEllipticity;
    std::string field_grid;
    std::string intensity_grid;
    std::string model = "taud";
    std::string shift = "none";
    double eta = kDefaultEta;
    double band = kDefaultRegimeBand;
    std::optional<int> series_order;
    std::string format;
    std::string multipliers;
    std::optional<double> field;
    int profile = 0;
    std::string output;
    std::string data;
};

AtomSpec resolve_atom(const RawFlags& f) {
    if (f.atom == "custom") {
        if (!f.ip || !f.zeff) {
            throw ConfigError("--atom custom needs both --ip and --zeff");
        }
        try {
            return AtomSpec::make(*f.ip, *f.zeff, "custom");
        } catch (const InvariantError& e) {
            throw ConfigError(e.what());
        }
    }
    if (f.ip || f.zeff) {
        throw ConfigError("--ip/--zeff only apply to --atom custom");
    }
    if (f.atom == "he-clementi") {
        return AtomSpec::helium_clementi();
    }
    if (f.atom == "he-kullie") {
        return AtomSpec::helium_kullie();
    }
    throw ConfigError("unknown atom preset '" + f.atom + "'");
}

RunConfig resolve(const RawFlags& f, const std::string& command) {
    RunConfig cfg;
    cfg.atom = resolve_atom(f);
    try {
        cfg.laser = LaserSpec::make(f.omega0, 0.0, f.ellipticity);
    } catch (const InvariantError& e) {
        throw ConfigError(e.what());
    }

    if (f.model == "taud") {
        cfg.model = Model::TauD;
    } else if (f.model == "taunum") {
        cfg.model = Model::TauNum;
    } else if (f.model == "tausym") {
        cfg.model = Model::TauSym;
    } else {
        throw ConfigError("unknown model '" + f.model + "'");
    }

    if (f.shift == "none") {
        cfg.shift = Shift::None;
    } else if (f.shift == "half-inverse-ip") {
        cfg.shift = Shift::HalfInverseIp;
    } else if (f.shift == "tau-i") {
        cfg.shift = Shift::TauI;
    } else {
        throw ConfigError("unknown shift '" + f.shift + "'");
    }

    const std::string format = f.format.empty() ? (command == "compare" ? "json" : "csv") : f.format;
    if (format == "csv") {
        cfg.format = Format::Csv;
    } else if (format == "json") {
        cfg.format = Format::Json;
    } else {
        throw ConfigError("unknown format '" + format + "'");
    }

    if (!(f.eta > 0.0)) {
        throw ConfigError("--eta must be positive");
    }
    cfg.eta = f.eta;
    if (!(f.band >= 0.0)) {
        throw ConfigError("--band must be nonnegative");
    }
    cfg.band = f.band;
    if (f.series_order && *f.series_order < 1) {
        throw ConfigError("--series-order must be at least 1");
    }
    cfg.series_order = f.series_order;

    const double f_a = atomic_field_strength(cfg.atom);
    if (!f.field_grid.empty() && !f.intensity_grid.empty()) {
        throw ConfigError("give exactly one of --field-grid and --intensity-grid");
    }
    if (!f.field_grid.empty()) {
        cfg.fields = parse_grid(f.field_grid, f_a);
    } else if (!f.intensity_grid.empty()) {
        for (const double wcm2 : parse_grid(f.intensity_grid, intensity_au_to_wcm2(field_to_intensity(f_a, f.ellipticity)))) {
            if (!(wcm2 >= 0.0)) {
                throw ConfigError("intensities must be nonnegative");
            }
            cfg.fields.push_back(intensity_to_field(intensity_wcm2_to_au(wcm2), f.ellipticity));
        }
    }
    if ((command == "scan" || command == "regimes") && cfg.fields.empty()) {
        throw ConfigError(command + " needs --field-grid or --intensity-grid");
    }

    if (!f.multipliers.empty()) {
        cfg.multipliers = parse_list(f.multipliers);
        for (const double x : cfg.multipliers) {
            if (!(x > 0.0)) {
                throw ConfigError("intensity multipliers must be positive");
            }
        }
    }
    cfg.field = f.field;
    if (f.profile < 0) {
        throw ConfigError("--profile must be nonnegative");
    }
    cfg.profile_points = f.profile;
    cfg.data_path = f.data;
    if (command == "compare" && cfg.data_path.empty()) {
        throw ConfigError("compare needs a data file");
    }
    return cfg;
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::vector<double> parse_grid(std::string_view spec, double atomic_field) {
    spec = trim(spec);
    if (spec.empty()) {
        throw ConfigError("empty grid");
    }
    std::vector<double> values;
    if (spec.find(':') != std::string_view::npos) {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = spec.find(':', start);
            parts.push_back(trim(spec.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
            if (pos == std::string_view::npos) {
                break;
            }
            start = pos + 1;
        }
        if (parts.size() != 3) {
            throw ConfigError("grid '" + std::string(spec) + "' must be lo:hi:step");
        }
        const auto lo = parse_double(parts[0]);
        const auto hi = parts[1] == "fa" ? std::optional(atomic_field) : parse_double(parts[1]);
        const auto step = parse_double(parts[2]);
        if (!lo || !hi || !step) {
            throw ConfigError("grid '" + std::string(spec) + "' has a non-numeric bound");
        }
        if (!(*step > 0.0) || *hi < *lo) {
            throw ConfigError("grid '" + std::string(spec) + "' must have lo <= hi and step > 0");
        }
        const double span = (*hi - *lo) / *step;
        if (span > 1e6) {
            throw ConfigError("grid '" + std::string(spec) + "' has too many points");
        }
        // Tolerate the rounding in e.g. (0.12 - 0.04) / 0.01 = 7.999999...
        const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        for (std::size_t i = 0; i < n; ++i) {
            values.push_back(*lo + static_cast<double>(i) * *step);
        }
        if (parts[1] == "fa" && values.back() < atomic_field && atomic_field - values.back() < 1e-9 * *step) {
            values.back() = atomic_field;
        }
    } else {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = spec.find(',', start);
            const std::string_view token =
                trim(spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            const auto v = token == "fa" ? std::optional(atomic_field) : parse_double(token);
            if (!v) {
                throw ConfigError("cannot parse grid value '" + std::string(token) + "'");
            }
            values.push_back(*v);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw ConfigError("grid '" + std::string(spec) + "' is not strictly increasing");
        }
    }
    return values;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const bool color = &err == &std::cerr && std::getenv("ATTOKIT_NO_COLOR") == nullptr && ::isatty(2) == 1;
    Diagnostics diag(err, color);

    CLI::App app{"Tunneling-time modeling toolkit for attosecond strong-field ionization", "attokit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");

    RawFlags f;
    app.add_option("--atom", f.atom, "he-clementi | he-kullie | custom")->capture_default_str();
    app.add_option("--ip", f.ip, "Ionization potential in au (custom atom)");
    app.add_option("--zeff", f.zeff, "Effective nuclear charge (custom atom)");
    app.add_option("--omega0", f.omega0, "Central circular frequency in au")->capture_default_str();
    app.add_option("--ellipticity", f.ellipticity, "Ellipticity in [0, 1]")->capture_default_str();
    app.add_option("--field-grid", f.field_grid, "Field grid in au: lo:hi:step, value or list; 'fa' = F_a");
    app.add_option("--intensity-grid", f.intensity_grid, "Intensity grid in W/cm^2: lo:hi:step, value or list");
    app.add_option("--model", f.model, "taud | taunum | tausym")->capture_default_str();
    app.add_option("--shift", f.shift, "none | half-inverse-ip | tau-i")->capture_default_str();
    app.add_option("--eta", f.eta, "Wave-packet coupling")->capture_default_str();
    app.add_option("--band", f.band, "Half-width of the intermediate gamma_K band")->capture_default_str();
    app.add_option("--series-order", f.series_order, "Add the geometric-series tau_num with this many terms");
    app.add_option("--format", f.format, "csv | json");
    std::string golden;
    auto* golden_opt = app.add_option("--golden", golden, "Diff against the published table (optional file)")
                           ->expected(0, 1);
    app.add_option("--multipliers", f.multipliers, "Table intensity multipliers x (1e14 W/cm^2), comma list");
    app.add_option("--field", f.field, "Field strength in au (barrier)");
    app.add_option("--profile", f.profile, "Number of V_eff samples over [0.5 x_entry, 1.5 x_exit]");
    app.add_option("--output", f.output, "Write to PATH instead of stdout");

    auto* scan_cmd = app.add_subcommand("scan", "Tunneling times over a field grid")->fallthrough();
    auto* table_cmd = app.add_subcommand("table1", "Photon statistics table")->fallthrough();
    auto* barrier_cmd = app.add_subcommand("barrier", "Barrier geometry at one field")->fallthrough();
    auto* regimes_cmd = app.add_subcommand("regimes", "Keldysh regime classification over a grid")->fallthrough();
    auto* compare_cmd = app.add_subcommand("compare", "Compare a model curve with delay data")->fallthrough();
    compare_cmd->add_option("data", f.data, "Delimited data file")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        diag.error(e.what());
        return kExitConfigError;
    }

    std::string command;
    for (auto* sub : {scan_cmd, table_cmd, barrier_cmd, regimes_cmd, compare_cmd}) {
        if (sub->parsed()) {
            command = sub->get_name();
        }
    }

    try {
        RunConfig cfg = resolve(f, command);
        if (golden_opt->count() > 0) {
            cfg.golden = golden;
        }

        // Render fully before writing so a failure leaves no partial output.
        std::ostringstream buffer;
        if (command == "scan") {
            cmd_scan(cfg, buffer, diag);
        } else if (command == "table1") {
            cmd_table1(cfg, buffer, diag);
        } else if (command == "barrier") {
            cmd_barrier(cfg, buffer, diag);
        } else if (command == "regimes") {
            cmd_regimes(cfg, buffer, diag);
        } else if (command == "compare") {
            cmd_compare(cfg, buffer, diag);
        }
        if (f.output.empty()) {
            out << buffer.str();
            out.flush();
        } else {
            std::ofstream file(f.output);
            if (!file) {
                throw ConfigError("cannot open output file '" + f.output + "'");
            }
            file << buffer.str();
        }
    } catch (const ConfigError& e) {
        diag.error(e.what());
        return kExitConfigError;
    } catch (const LoadError& e) {
        diag.error(e.what());
        return kExitDataError;
    } catch (const DomainError& e) {
        diag.error(e.what());
        return command == "compare" ? kExitDataError : kExitConfigError;
    } catch (const InvariantError& e) {
        diag.error(e.what());
        return kExitConfigError;
    }
    return kExitOk;
}

}  // namespace attokit::cli
