#pragma once

#include "attokit/barrier.hpp"
#include "attokit/data.hpp"
#include "attokit/ttime.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace attokit::cli {

enum ExitCode : int { kExitOk = 0, kExitConfigError = 1, kExitDataError = 2 };

enum class Format { Csv, Json };

/// Everything a subcommand needs, after flag and config-file merging.
struct RunConfig {
    AtomSpec atom = AtomSpec::helium_clementi();
    LaserSpec laser = LaserSpec::kase(0.0);
    std::vector<double> fields;  ///< au, strictly increasing
    Model model = Model::TauD;
    Shift shift = Shift::None;
    Format format = Format::Csv;
    double eta = 1.0;
    double band = kDefaultRegimeBand;
    std::optional<int> series_order;
    std::vector<double> multipliers;
    std::optional<std::string> golden;  ///< "" selects the compiled-in table
    std::optional<double> field;
    int profile_points = 0;
    std::string data_path;
};

/// Configuration problems; mapped to exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses `lo:hi:step`, a single value, or a comma list. The token `fa`
/// stands for `atomic_field` in lists and single values. The result must be
/// strictly increasing.
std::vector<double> parse_grid(std::string_view spec, double atomic_field);

/// Formats with 6 significant digits.
std::string format_number(double value);

/// Entry point shared by the executable and the tests; `args` excludes argv[0].
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace attokit::cli
