#pragma once

// Experimental delay-versus-field data and its comparison with model curves.

#include "attokit/barrier.hpp"
#include "attokit/ttime.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace attokit {

enum class AbscissaKind { Field, Intensity };

struct ExperimentPoint {
    double abscissa = 0.0;  ///< au; field or intensity per `kind`
    AbscissaKind kind = AbscissaKind::Field;
    double delay_as = 0.0;
    double err_lo_as = 0.0;
    double err_hi_as = 0.0;
    std::string source_label;
    int line = 0;  ///< 1-based line in the source, 0 when synthetic

    /// Field strength in au; intensities are converted with the given ellipticity.
    double field_au(double epsilon) const;
};

/// Column mapping and declared units for load_experiment. Empty
/// `abscissa_column` means: use whichever of field_au, intensity_au,
/// intensity_wcm2 the header carries.
struct LoadSchema {
    std::string abscissa_column;
    /// field_au | intensity_au | intensity_wcm2; inferred from the column name when empty.
    std::string abscissa_unit;
    std::string delay_column = "delay_as";
    /// as | au; applies to the delay and both error bars.
    std::string delay_unit = "as";
    std::string err_lo_column = "err_lo_as";
    std::string err_hi_column = "err_hi_as";
    std::string label_column = "label";
};

struct LoadIssue {
    int line = 0;
    std::string message;
};

/// Every problem found in a source, not just the first one.
class LoadError : public std::runtime_error {
public:
    LoadError(std::string source, std::vector<LoadIssue> issues);

    const std::vector<LoadIssue>& issues() const noexcept { return issues_; }

private:
    std::vector<LoadIssue> issues_;
};

std::vector<ExperimentPoint> load_experiment(const std::filesystem::path& path, const LoadSchema& schema = {});
std::vector<ExperimentPoint> load_experiment(std::istream& in, const LoadSchema& schema = {},
                                             std::string_view source_name = "<stream>");

enum class Shift { None, HalfInverseIp, TauI };

std::string_view to_string(Shift shift);

struct Residual {
    double f_au = 0.0;
    double model_as = 0.0;  ///< model time including the shift
    double shift_as = 0.0;
    double delay_as = 0.0;
    double residual_as = 0.0;  ///< model - delay
    double sigma_as = 0.0;     ///< (err_lo + err_hi) / 2
    std::string label;
    int line = 0;
};

struct ExcludedPoint {
    double f_au = 0.0;
    std::string reason;
    std::string label;
    int line = 0;
};

struct FitReport {
    double rms_as = 0.0;
    double chi2 = 0.0;
    std::size_t n_points = 0;
    /// Points that entered chi2 (sigma > 0).
    std::size_t chi2_points = 0;
    /// Mean offset added to the model; constant for HalfInverseIp.
    double shift_applied_as = 0.0;
    Model model = Model::TauD;
    Shift shift = Shift::None;
    std::vector<Residual> per_point_residuals;
    std::vector<ExcludedPoint> excluded;
};

/// Residuals of model(f) + shift against the delays. Points outside (0, F_a]
/// are excluded and listed; throws DomainError if nothing is left.
FitReport compare(std::span<const ExperimentPoint> points, const AtomSpec& atom, Model model, Shift shift,
                  double epsilon = kKaseEllipticity);

/// Key order is fixed.
nlohmann::ordered_json to_json(const FitReport& report);

}  // namespace attokit
