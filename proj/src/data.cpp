#include "attokit/data.hpp"

#include "attokit/errors.hpp"
#include "attokit/units.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

namespace attokit {

namespace {

std::string describe(const std::string& source, const std::vector<LoadIssue>& issues) {
    std::ostringstream os;
    os << source << ": " << issues.size() << (issues.size() == 1 ? " problem" : " problems");
    for (const LoadIssue& issue : issues) {
        os << "\n  line " << issue.line << ": " << issue.message;
    }
    return os.str();
}

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

struct AbscissaUnit {
    AbscissaKind kind;
    double to_au;
};

std::optional<AbscissaUnit> abscissa_unit(std::string_view name) {
    if (name == "field_au") {
        return AbscissaUnit{AbscissaKind::Field, 1.0};
    }
    if (name == "intensity_au") {
        return AbscissaUnit{AbscissaKind::Intensity, 1.0};
    }
    if (name == "intensity_wcm2") {
        return AbscissaUnit{AbscissaKind::Intensity, 1.0 / kPhys.au_intensity_in_w_cm2};
    }
    return std::nullopt;
}

std::optional<double> delay_unit_to_as(std::string_view name) {
    if (name == "as") {
        return 1.0;
    }
    if (name == "au") {
        return kPhys.au_time_in_attoseconds;
    }
    return std::nullopt;
}

}  // namespace

double ExperimentPoint::field_au(double epsilon) const {
    return kind == AbscissaKind::Field ? abscissa : intensity_to_field(abscissa, epsilon);
}

LoadError::LoadError(std::string source, std::vector<LoadIssue> issues)
    : std::runtime_error(describe(source, issues)), issues_(std::move(issues)) {}

std::vector<ExperimentPoint> load_experiment(const std::filesystem::path& path, const LoadSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw LoadError(path.string(), {{0, "cannot open file"}});
    }
    return load_experiment(in, schema, path.string());
}

std::vector<ExperimentPoint> load_experiment(std::istream& in, const LoadSchema& schema,
                                             std::string_view source_name) {
    const std::string source(source_name);
    std::vector<LoadIssue> issues;

    const auto delay_scale = delay_unit_to_as(schema.delay_unit);
    if (!delay_scale) {
        issues.push_back({0, "unknown delay unit '" + schema.delay_unit + "' (expected as or au)"});
    }

    std::string line;
    int line_no = 0;
    std::vector<std::string> header;
    char delimiter = ',';
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
            line.erase(0, 3);
        }
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        delimiter = t.find('\t') != std::string_view::npos ? '\t' : ',';
        for (const std::string_view name : split(t, delimiter)) {
            header.emplace_back(name);
        }
        break;
    }
    if (header.empty()) {
        issues.push_back({line_no, "missing header row"});
        throw LoadError(source, std::move(issues));
    }

    const auto column = [&](std::string_view name) -> std::optional<std::size_t> {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const int header_line = line_no;

    std::string abscissa_name = schema.abscissa_column;
    if (abscissa_name.empty()) {
        for (const char* candidate : {"field_au", "intensity_au", "intensity_wcm2"}) {
            if (column(candidate)) {
                if (!abscissa_name.empty()) {
                    issues.push_back({header_line, "more than one abscissa column ('" + abscissa_name + "' and '" +
                                                       candidate + "')"});
                    break;
                }
                abscissa_name = candidate;
            }
        }
        if (abscissa_name.empty()) {
            issues.push_back({header_line, "missing abscissa column (field_au, intensity_au or intensity_wcm2)"});
        }
    }
    const std::string unit_name = schema.abscissa_unit.empty() ? abscissa_name : schema.abscissa_unit;
    const auto unit = abscissa_unit(unit_name);
    if (!abscissa_name.empty() && !unit) {
        issues.push_back({header_line, "unknown abscissa unit '" + unit_name + "'"});
    }

    const auto abscissa_col = abscissa_name.empty() ? std::nullopt : column(abscissa_name);
    if (!abscissa_name.empty() && !abscissa_col) {
        issues.push_back({header_line, "missing column '" + abscissa_name + "'"});
    }
    const auto delay_col = column(schema.delay_column);
    if (!delay_col) {
        issues.push_back({header_line, "missing column '" + schema.delay_column + "'"});
    }
    const auto lo_col = column(schema.err_lo_column);
    const auto hi_col = column(schema.err_hi_column);
    const auto label_col = column(schema.label_column);

    if (!issues.empty()) {
        throw LoadError(source, std::move(issues));
    }

    std::vector<ExperimentPoint> points;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto fields = split(t, delimiter);
        if (fields.size() != header.size()) {
            issues.push_back({line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                           std::to_string(fields.size())});
            continue;
        }
        const std::size_t before = issues.size();
        const auto number = [&](std::size_t col, std::string_view what) -> double {
            const auto v = parse_number(fields[col]);
            if (!v) {
                issues.push_back({line_no, std::string(what) + ": cannot parse '" + std::string(fields[col]) + "'"});
                return 0.0;
            }
            return *v;
        };

        ExperimentPoint p;
        p.line = line_no;
        p.kind = unit->kind;
        p.abscissa = number(*abscissa_col, abscissa_name) * unit->to_au;
        p.delay_as = number(*delay_col, schema.delay_column) * *delay_scale;
        if (lo_col) {
            p.err_lo_as = number(*lo_col, schema.err_lo_column) * *delay_scale;
        }
        if (hi_col) {
            p.err_hi_as = number(*hi_col, schema.err_hi_column) * *delay_scale;
        }
        p.source_label = label_col ? std::string(fields[*label_col]) : std::string();
        if (issues.size() == before) {
            if (!(p.abscissa > 0.0)) {
                issues.push_back({line_no, "abscissa must be positive"});
            }
            if (p.err_lo_as < 0.0 || p.err_hi_as < 0.0) {
                issues.push_back({line_no, "error bars must be nonnegative"});
            }
        }
        if (issues.size() == before) {
            points.push_back(std::move(p));
        }
    }
    if (!issues.empty()) {
        throw LoadError(source, std::move(issues));
    }
    return points;
}

std::string_view to_string(Shift shift) {
    switch (shift) {
        case Shift::None: return "none";
        case Shift::HalfInverseIp: return "half-inverse-ip";
        case Shift::TauI: return "tau-i";
    }
    return "?";
}

FitReport compare(std::span<const ExperimentPoint> points, const AtomSpec& atom, Model model, Shift shift,
                  double epsilon) {
    if (points.empty()) {
        throw DomainError("compare needs at least one data point");
    }
    FitReport report;
    report.model = model;
    report.shift = shift;

    double sum_sq = 0.0;
    double sum_shift = 0.0;
    for (const ExperimentPoint& p : points) {
        double f = p.abscissa;
        try {
            f = p.field_au(epsilon);
            const TTimeResult r = t_sym(atom, f);
            Residual res;
            res.f_au = f;
            res.label = p.source_label;
            res.line = p.line;
            if (shift != Shift::None) {
                const Reference ref = shift == Shift::HalfInverseIp ? Reference::HalfInverseIp : Reference::TauI;
                res.shift_as = au_to_attoseconds(reference_offset(atom, f, ref));
            }
            res.model_as = au_to_attoseconds(model_time(r, model)) + res.shift_as;
            res.delay_as = p.delay_as;
            res.residual_as = res.model_as - res.delay_as;
            res.sigma_as = 0.5 * (p.err_lo_as + p.err_hi_as);
            sum_sq += res.residual_as * res.residual_as;
            sum_shift += res.shift_as;
            if (res.sigma_as > 0.0) {
                report.chi2 += (res.residual_as / res.sigma_as) * (res.residual_as / res.sigma_as);
                ++report.chi2_points;
            }
            report.per_point_residuals.push_back(std::move(res));
        } catch (const DomainError& e) {
            report.excluded.push_back({f, e.what(), p.source_label, p.line});
        }
    }
    report.n_points = report.per_point_residuals.size();
    if (report.n_points == 0) {
        throw DomainError("every data point lies outside the model's range (0, F_a]");
    }
    report.rms_as = std::sqrt(sum_sq / static_cast<double>(report.n_points));
    report.shift_applied_as = sum_shift / static_cast<double>(report.n_points);
    return report;
}

nlohmann::ordered_json to_json(const FitReport& report) {
    nlohmann::ordered_json j;
    j["model"] = std::string(to_string(report.model));
    j["shift"] = std::string(to_string(report.shift));
    j["n_points"] = report.n_points;
    j["rms_as"] = report.rms_as;
    j["chi2"] = report.chi2;
    j["chi2_points"] = report.chi2_points;
    j["shift_applied_as"] = report.shift_applied_as;
    auto& residuals = j["per_point_residuals"] = nlohmann::ordered_json::array();
    for (const Residual& r : report.per_point_residuals) {
        nlohmann::ordered_json row;
        row["line"] = r.line;
        row["label"] = r.label;
        row["f_au"] = r.f_au;
        row["delay_as"] = r.delay_as;
        row["model_as"] = r.model_as;
        row["shift_as"] = r.shift_as;
        row["residual_as"] = r.residual_as;
        row["sigma_as"] = r.sigma_as;
        residuals.push_back(std::move(row));
    }
    auto& excluded = j["excluded"] = nlohmann::ordered_json::array();
    for (const ExcludedPoint& e : report.excluded) {
        nlohmann::ordered_json row;
        row["line"] = e.line;
        row["label"] = e.label;
        row["f_au"] = e.f_au;
        row["reason"] = e.reason;
        excluded.push_back(std::move(row));
    }
    return j;
}

}  // namespace attokit
