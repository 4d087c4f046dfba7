#include "attokit/errors.hpp"
#include "attokit/units.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <utility>

using namespace attokit;

namespace {

// (F, I_n) pairs as printed in the photon-statistics table.
constexpr std::array<std::pair<double, double>, 7> kPrintedFieldIntensity{{
    {0.040, 0.00285}, {0.057, 0.0057}, {0.07, 0.00855}, {0.081, 0.0114},
    {0.090, 0.01425}, {0.099, 0.0171}, {0.11, 0.0214},
}};

}  // namespace

TEST(Constants, AlphaIsDerivedFromC) {
    EXPECT_DOUBLE_EQ(kPhys.alpha() * kPhys.c, 1.0);
    EXPECT_GT(kPhys.c, 0.0);
    EXPECT_GT(kPhys.au_time_in_attoseconds, 0.0);
    EXPECT_GT(kPhys.au_intensity_in_w_cm2, 0.0);
}

TEST(FieldToIntensity, Examples) {
    EXPECT_NEAR(field_to_intensity(0.040, 0.87), 0.00281104, 1e-12);
    EXPECT_LT(std::abs(field_to_intensity(0.040, 0.87) - 0.00285) / 0.00285, 0.015);
    EXPECT_EQ(field_to_intensity(0.0, 0.87), 0.0);
    EXPECT_NEAR(field_to_intensity(0.11, 0.87), 0.02125849, 1e-12);
    EXPECT_LT(std::abs(field_to_intensity(0.11, 0.87) - 0.0214) / 0.0214, 0.01);
}

TEST(FieldToIntensity, RejectsBadInput) {
    EXPECT_THROW(field_to_intensity(-0.01, 0.5), DomainError);
    EXPECT_THROW(field_to_intensity(0.01, -0.1), DomainError);
    EXPECT_THROW(field_to_intensity(0.01, 1.1), DomainError);
}

TEST(IntensityToField, Examples) {
    EXPECT_NEAR(intensity_to_field(0.00285, 0.87), 0.0402762, 1e-7);
    EXPECT_EQ(intensity_to_field(0.0, 0.0), 0.0);
    EXPECT_NEAR(intensity_to_field(0.0214, 0.87), 0.1103655, 1e-7);
    EXPECT_THROW(intensity_to_field(-1.0, 0.0), DomainError);
}

TEST(Attoseconds, Examples) {
    EXPECT_DOUBLE_EQ(au_to_attoseconds(1.0), 24.18884);
    EXPECT_NEAR(au_to_attoseconds(0.553360558672820), 13.3851500160, 1e-9);
    EXPECT_NEAR(au_to_attoseconds(3.0427), 73.60, 5e-3);
}

TEST(IntensityWcm2, Examples) {
    EXPECT_NEAR(intensity_au_to_wcm2(0.00285) / 1e14, 1.0002, 1e-4);
    EXPECT_EQ(intensity_au_to_wcm2(0.0), 0.0);
    EXPECT_NEAR(intensity_au_to_wcm2(0.0214) / 1e14, 7.510, 1e-3);
    EXPECT_THROW(intensity_au_to_wcm2(-1.0), DomainError);
    EXPECT_THROW(intensity_wcm2_to_au(-1.0), DomainError);
}

TEST(UnitProperties, RoundTripsAreIdentity) {
    oracle::AtomFieldSampler s(7);
    for (int i = 0; i < 10000; ++i) {
        const double x = s.log_uniform(1e-6, 1e3);
        const double eps = s.uniform(0.0, 1.0);
        EXPECT_NEAR(intensity_to_field(field_to_intensity(x, eps), eps), x, 1e-12 * x);
        EXPECT_NEAR(attoseconds_to_au(au_to_attoseconds(x)), x, 1e-12 * x);
        EXPECT_NEAR(intensity_wcm2_to_au(intensity_au_to_wcm2(x)), x, 1e-12 * x);
    }
}

TEST(UnitProperties, IntensityMonotoneInFieldAndEllipticity) {
    oracle::AtomFieldSampler s(11);
    for (int i = 0; i < 1000; ++i) {
        const double f = s.uniform(1e-4, 1.0);
        const double eps = s.uniform(0.0, 0.99);
        EXPECT_LT(field_to_intensity(f, eps), field_to_intensity(f * 1.001, eps));
        EXPECT_LT(field_to_intensity(f, eps), field_to_intensity(f, eps + 0.01));
    }
}

TEST(UnitProperties, PrintedTablePairsFollowEllipticRelation) {
    for (const auto& [f, printed] : kPrintedFieldIntensity) {
        EXPECT_LT(std::abs(field_to_intensity(f, 0.87) - printed) / printed, 0.015) << "F=" << f;
    }
}
