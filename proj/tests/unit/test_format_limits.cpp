#include <gtest/gtest.h>

#include <cstdlib>

#include "cube_spectra/format.hpp"
#include "cube_spectra/limits.hpp"

namespace cs = cube_spectra;

TEST(FormatReal, NineSignificantDigits) {
  EXPECT_EQ(cs::format_real(3.16227766016838), "3.16227766");
  EXPECT_EQ(cs::format_real(0.0), "0");
  EXPECT_EQ(cs::format_real(-0.0), "0");
  EXPECT_EQ(cs::format_real(56.0), "56");
  EXPECT_EQ(cs::format_real(1e-20), "1e-20");
  EXPECT_EQ(cs::format_real(-2.5), "-2.5");
}

TEST(RoundSignificant, StableAtNineDigits) {
  EXPECT_EQ(cs::round_significant(0.7219280948873623), 0.721928095);
  EXPECT_EQ(cs::round_significant(0.0), 0.0);
  EXPECT_EQ(cs::round_significant(123456789012.0), 123456789000.0);
  EXPECT_EQ(cs::round_significant(cs::round_significant(1.0 / 3)), cs::round_significant(1.0 / 3));
}

TEST(ParseOutputFormat, KnownAndUnknown) {
  EXPECT_EQ(cs::parse_output_format("json"), cs::OutputFormat::json);
  EXPECT_EQ(cs::parse_output_format("csv"), cs::OutputFormat::csv);
  EXPECT_EQ(cs::parse_output_format("text"), cs::OutputFormat::text);
  EXPECT_THROW(cs::parse_output_format("JSON"), std::invalid_argument);
}

TEST(CsvField, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(cs::csv_field("plain"), "plain");
  EXPECT_EQ(cs::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(cs::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

class EnvCap : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("CUBE_SPECTRA_MAX_N"); }
};

TEST_F(EnvCap, DefaultsAndOverride) {
  unsetenv("CUBE_SPECTRA_MAX_N");
  EXPECT_EQ(cs::transform_dimension_cap(), cs::kDefaultTransformCap);
  EXPECT_EQ(cs::sweep_dimension_cap(), cs::kDefaultSweepCap);
  EXPECT_NO_THROW(cs::require_transform_dimension(20));
  EXPECT_THROW(cs::require_transform_dimension(0), std::out_of_range);

  setenv("CUBE_SPECTRA_MAX_N", "10", 1);
  EXPECT_EQ(cs::transform_dimension_cap(), 10);
  EXPECT_THROW(cs::require_transform_dimension(11), std::out_of_range);
  EXPECT_THROW(cs::require_sweep_dimension(11), std::out_of_range);

  setenv("CUBE_SPECTRA_MAX_N", "40", 1);
  EXPECT_THROW(cs::transform_dimension_cap(), std::invalid_argument);
  setenv("CUBE_SPECTRA_MAX_N", "12x", 1);
  EXPECT_THROW(cs::sweep_dimension_cap(), std::invalid_argument);
}
