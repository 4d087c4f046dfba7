#include "attokit/data.hpp"
#include "attokit/errors.hpp"
#include "attokit/units.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

using namespace attokit;

namespace {

const AtomSpec kHe = AtomSpec::helium_clementi();
const std::string kFixtures = ATTOKIT_FIXTURES;
constexpr double kHalfInverseIpAs = 13.3851500160475;

std::vector<ExperimentPoint> synthetic(Model model, double offset_as = 0.0) {
    std::vector<ExperimentPoint> points;
    for (const double f : {0.04, 0.06, 0.08, 0.10, 0.12}) {
        ExperimentPoint p;
        p.abscissa = f;
        p.delay_as = au_to_attoseconds(model_time(t_sym(kHe, f), model)) + offset_as;
        p.err_lo_as = 1.0;
        p.err_hi_as = 3.0;
        points.push_back(p);
    }
    return points;
}

}  // namespace

TEST(LoadExperiment, ThreeRowFixture) {
    const auto points = load_experiment(kFixtures + "/three_rows.csv");
    ASSERT_EQ(points.size(), 3u);
    EXPECT_DOUBLE_EQ(points[0].abscissa, 0.05);
    EXPECT_EQ(points[0].kind, AbscissaKind::Field);
    EXPECT_DOUBLE_EQ(points[0].delay_as, 57.18);
    EXPECT_DOUBLE_EQ(points[0].err_lo_as, 2.0);
    EXPECT_DOUBLE_EQ(points[0].err_hi_as, 3.0);
    EXPECT_EQ(points[2].source_label, "c");
    EXPECT_EQ(points[0].line, 2);
}

TEST(LoadExperiment, IdempotentAndOrderPreserving) {
    const auto a = load_experiment(kFixtures + "/synthetic_taud.csv");
    const auto b = load_experiment(kFixtures + "/synthetic_taud.csv");
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].abscissa, b[i].abscissa);
        EXPECT_EQ(a[i].delay_as, b[i].delay_as);
        if (i > 0) {
            EXPECT_GT(a[i].abscissa, a[i - 1].abscissa);
        }
    }
}

TEST(LoadExperiment, ReportsEveryBadRowWithLineNumbers) {
    try {
        load_experiment(kFixtures + "/malformed.csv");
        FAIL() << "expected LoadError";
    } catch (const LoadError& e) {
        ASSERT_EQ(e.issues().size(), 3u);
        EXPECT_EQ(e.issues()[0].line, 4);
        EXPECT_NE(e.issues()[0].message.find("nonnegative"), std::string::npos);
        EXPECT_EQ(e.issues()[1].line, 6);
        EXPECT_EQ(e.issues()[2].line, 7);
        EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos);
    }
}

TEST(LoadExperiment, IntensityInWcm2IsConvertedToAtomicUnits) {
    std::istringstream in("intensity_wcm2,delay_as\n1e14,10\n");
    const auto points = load_experiment(in);
    ASSERT_EQ(points.size(), 1u);
    EXPECT_EQ(points[0].kind, AbscissaKind::Intensity);
    EXPECT_NEAR(points[0].abscissa, 0.00285, 1e-5);
    EXPECT_NEAR(points[0].abscissa, 1e14 / 3.50945e16, 1e-18);
}

TEST(LoadExperiment, TabDelimitedIntensityFixture) {
    const auto points = load_experiment(kFixtures + "/synthetic_taud_wcm2.tsv");
    ASSERT_EQ(points.size(), 5u);
    EXPECT_NEAR(points[0].field_au(0.87), 0.04, 1e-12);
    EXPECT_EQ(points[0].err_lo_as, 0.0);
    EXPECT_EQ(points[0].err_hi_as, 2.0);
}

TEST(LoadExperiment, HeaderAndUnitErrors) {
    std::istringstream no_abscissa("delay_as\n1\n");
    EXPECT_THROW(load_experiment(no_abscissa), LoadError);
    std::istringstream no_delay("field_au\n0.05\n");
    EXPECT_THROW(load_experiment(no_delay), LoadError);
    std::istringstream two_abscissas("field_au,intensity_au,delay_as\n0.05,0.001,1\n");
    EXPECT_THROW(load_experiment(two_abscissas), LoadError);
    std::istringstream empty("# nothing here\n");
    EXPECT_THROW(load_experiment(empty), LoadError);
    EXPECT_THROW(load_experiment(kFixtures + "/does_not_exist.csv"), LoadError);

    LoadSchema bad_unit;
    bad_unit.delay_unit = "fs";
    std::istringstream in("field_au,delay_as\n0.05,1\n");
    EXPECT_THROW(load_experiment(in, bad_unit), LoadError);

    LoadSchema bad_abscissa;
    bad_abscissa.abscissa_column = "E";
    bad_abscissa.abscissa_unit = "kV_per_cm";
    std::istringstream in2("E,delay_as\n0.05,1\n");
    EXPECT_THROW(load_experiment(in2, bad_abscissa), LoadError);
}

TEST(LoadExperiment, CustomSchema) {
    LoadSchema schema;
    schema.abscissa_column = "F";
    schema.abscissa_unit = "field_au";
    schema.delay_column = "t";
    schema.delay_unit = "au";
    std::istringstream data("F,t\n0.05,1.0\n");
    const auto points = load_experiment(data, schema);
    ASSERT_EQ(points.size(), 1u);
    EXPECT_DOUBLE_EQ(points[0].delay_as, 24.18884);
}

TEST(Compare, PerfectFitHasZeroResiduals) {
    const FitReport r = compare(synthetic(Model::TauD), kHe, Model::TauD, Shift::None);
    EXPECT_EQ(r.n_points, 5u);
    EXPECT_EQ(r.per_point_residuals.size(), r.n_points);
    EXPECT_LT(r.rms_as, 1e-12);
    EXPECT_LT(r.chi2, 1e-24);
    EXPECT_EQ(r.chi2_points, 5u);
    EXPECT_DOUBLE_EQ(r.per_point_residuals[0].sigma_as, 2.0);
}

TEST(Compare, ConstantOffsetGivesThatRms) {
    const FitReport r = compare(synthetic(Model::TauD, 5.0), kHe, Model::TauD, Shift::None);
    EXPECT_NEAR(r.rms_as, 5.0, 1e-12);
    // residual = -5 at sigma = 2 for each point.
    EXPECT_NEAR(r.chi2, 5 * 6.25, 1e-10);
}

TEST(Compare, TranslationConsistency) {
    for (const double c : {-7.5, -0.1, 0.3, 12.0}) {
        const FitReport r = compare(synthetic(Model::TauSym, c), kHe, Model::TauSym, Shift::None);
        EXPECT_NEAR(r.rms_as, std::abs(c), 1e-11);
    }
}

TEST(Compare, ShiftIdentity) {
    const auto tau_d_points = synthetic(Model::TauD);
    const auto tau_num_points = synthetic(Model::TauNum);

    const FitReport unshifted = compare(tau_num_points, kHe, Model::TauD, Shift::None);
    EXPECT_NEAR(unshifted.rms_as, kHalfInverseIpAs, 1e-10);

    const FitReport shifted = compare(tau_d_points, kHe, Model::TauNum, Shift::HalfInverseIp);
    EXPECT_LT(shifted.rms_as, 1e-9);
    EXPECT_NEAR(shifted.shift_applied_as, kHalfInverseIpAs, 1e-10);

    const FitReport plain = compare(tau_d_points, kHe, Model::TauD, Shift::None);
    for (std::size_t i = 0; i < plain.n_points; ++i) {
        EXPECT_NEAR(shifted.per_point_residuals[i].model_as, plain.per_point_residuals[i].model_as, 1e-11);
        EXPECT_NEAR(shifted.per_point_residuals[i].residual_as, plain.per_point_residuals[i].residual_as, 1e-11);
    }
}

TEST(Compare, TauIShiftVariesPerPoint) {
    const FitReport r = compare(synthetic(Model::TauNum), kHe, Model::TauNum, Shift::TauI);
    for (const Residual& res : r.per_point_residuals) {
        EXPECT_NEAR(res.shift_as, au_to_attoseconds(t_sym(kHe, res.f_au).tau_i), 1e-11);
        EXPECT_NEAR(res.residual_as, res.shift_as, 1e-11);
    }
}

TEST(Compare, ZeroSigmaSkipsChi2ButNotRms) {
    auto points = synthetic(Model::TauD, 1.0);
    points[0].err_lo_as = points[0].err_hi_as = 0.0;
    const FitReport r = compare(points, kHe, Model::TauD, Shift::None);
    EXPECT_EQ(r.n_points, 5u);
    EXPECT_EQ(r.chi2_points, 4u);
    EXPECT_NEAR(r.rms_as, 1.0, 1e-12);
    EXPECT_NEAR(r.chi2, 4 * 0.25, 1e-10);
}

TEST(Compare, PointsAboveAtomicFieldAreExcluded) {
    const auto points = load_experiment(kFixtures + "/synthetic_with_above_fa.csv");
    const FitReport r = compare(points, kHe, Model::TauD, Shift::None);
    EXPECT_EQ(r.n_points, 3u);
    ASSERT_EQ(r.excluded.size(), 1u);
    EXPECT_DOUBLE_EQ(r.excluded[0].f_au, 0.13);
    EXPECT_EQ(r.excluded[0].line, 6);
    EXPECT_LT(r.rms_as, 1e-9);

    std::vector<ExperimentPoint> only_above(1);
    only_above[0].abscissa = 0.2;
    EXPECT_THROW(compare(only_above, kHe, Model::TauD, Shift::None), DomainError);
    EXPECT_THROW(compare({}, kHe, Model::TauD, Shift::None), DomainError);
}

TEST(Compare, JsonKeyOrderIsStable) {
    const FitReport r = compare(synthetic(Model::TauD), kHe, Model::TauD, Shift::None);
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    const std::vector<std::string> expected{"model", "shift", "n_points", "rms_as", "chi2", "chi2_points",
                                            "shift_applied_as", "per_point_residuals", "excluded"};
    EXPECT_EQ(keys, expected);
    EXPECT_EQ(j.dump(), to_json(r).dump());
}
