#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cube_spectra/codes.hpp"
#include "oracles.hpp"

namespace cs = cube_spectra;
using cs::Point;

namespace {

cs::Code code(int n, std::vector<Point> pts) { return cs::Code(n, std::move(pts)); }

cs::Code parse(const std::string& text) {
  std::istringstream in(text);
  return cs::read_code(in);
}

}  // namespace

TEST(Code, ValidatesAndSorts) {
  EXPECT_THROW(code(3, {}), std::invalid_argument);
  EXPECT_THROW(code(3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(code(3, {8}), std::invalid_argument);
  const cs::Code c = code(3, {5, 1, 3});
  EXPECT_EQ(std::vector<Point>(c.points().begin(), c.points().end()), (std::vector<Point>{1, 3, 5}));
  EXPECT_EQ(c, code(3, {3, 5, 1}));
  EXPECT_TRUE(c.contains(3));
  EXPECT_FALSE(c.contains(2));
}

TEST(MinDistance, Examples) {
  EXPECT_EQ(cs::min_distance(code(5, {0b00000, 0b11111})), 5);
  EXPECT_EQ(cs::min_distance(code(4, oracle::even_weight(4))), 2);
  EXPECT_EQ(cs::min_distance(code(7, oracle::hamming74())), 3);
  EXPECT_EQ(oracle::pairwise_min_distance(7, oracle::hamming74()), 3);
  const cs::Code single = code(4, {6});
  EXPECT_TRUE(single.is_singleton());
  EXPECT_EQ(cs::min_distance(single), 5);
}

TEST(MinDistance, AutocorrelationRouteAgreesWithPairwise) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const auto pts = oracle::random_subset(n, rng);
    const cs::Code c(n, pts);
    EXPECT_EQ(cs::min_distance(c), oracle::pairwise_min_distance(n, pts));
    EXPECT_EQ(cs::min_distance_from_autocorrelation(c), cs::min_distance(c));
  }
}

TEST(Autocorrelation, ExamplesAndZeroBelowDistance) {
  const auto a = cs::autocorrelation(code(2, {0b00, 0b11}));
  EXPECT_EQ(std::vector<double>(a.values().begin(), a.values().end()), (std::vector<double>{0.5, 0, 0, 0.5}));
  const auto full = cs::autocorrelation(cs::Code::whole_cube(4));
  for (double v : full.values()) EXPECT_EQ(v, 1.0);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 8;
    const cs::Code c = cs::random_code(n, 1 + trial % 4, rng());
    const auto ac = cs::autocorrelation(c);
    const int d = cs::min_distance(c);
    EXPECT_DOUBLE_EQ(ac[0], static_cast<double>(c.size()) / static_cast<double>(cs::cube_size(n)));
    for (std::size_t x = 0; x < ac.size(); ++x) {
      EXPECT_GE(ac[static_cast<Point>(x)], 0.0);
      const int w = oracle::weight(x);
      if (w > 0 && w < d) EXPECT_EQ(ac[static_cast<Point>(x)], 0.0);
    }
  }
}

TEST(Autocorrelation, DifferenceCountsBothRoutesAgree) {
  // n <= 20 may take the transform route; compare with a direct pair count.
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 9;
    const auto pts = oracle::random_subset(n, rng);
    const auto counts = cs::difference_counts(cs::Code(n, pts));
    std::vector<std::int64_t> direct(std::size_t{1} << n, 0);
    for (Point x : pts) {
      for (Point y : pts) ++direct[x ^ y];
    }
    for (std::size_t x = 0; x < direct.size(); ++x) EXPECT_EQ(counts[static_cast<Point>(x)], direct[x]);
  }
}

TEST(LinearCode, RowReductionIsCanonical) {
  const cs::LinearCode a(4, {0b1100, 0b0110, 0b1010});
  const cs::LinearCode b(4, {0b1010, 0b0110});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dimension(), 2);
  const cs::Code words = a.expand();
  EXPECT_EQ(std::vector<Point>(words.points().begin(), words.points().end()),
            oracle::span({0b1100, 0b0110}));
}

TEST(DualCode, Examples) {
  const cs::LinearCode rep3(3, {0b111});
  const cs::LinearCode dual = cs::dual_code(rep3);
  EXPECT_EQ(dual, cs::LinearCode(3, {0b110, 0b011}));
  EXPECT_EQ(dual.expand().size(), 4u);

  const cs::LinearCode full(3, {1, 2, 4});
  EXPECT_EQ(cs::dual_code(full).dimension(), 0);
  EXPECT_EQ(cs::dual_code(full).expand(), code(3, {0}));

  const cs::LinearCode self(2, {0b11});
  EXPECT_EQ(cs::dual_code(self), self);
}

TEST(DualDistance, Examples) {
  EXPECT_EQ(cs::dual_distance(code(4, oracle::even_weight(4))), 4);
  EXPECT_EQ(cs::dual_distance(code(5, {0})), 1);
  EXPECT_EQ(cs::dual_distance(cs::Code::whole_cube(5)), 6);
}

TEST(LinearCodes, DualityPropertiesExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::uint64_t count = 0;
      std::set<std::vector<Point>> seen;
      cs::for_each_linear_code(n, k, [&](const cs::LinearCode& c) {
        ++count;
        const cs::Code words = c.expand();
        ASSERT_EQ(words.size(), std::size_t{1} << k);
        ASSERT_TRUE(words.contains(0));
        if (n <= 6) seen.insert(std::vector<Point>(words.points().begin(), words.points().end()));
        if (n > 7) return;  // the full property sweep below n = 8 keeps the test quick
        const cs::LinearCode dual = cs::dual_code(c);
        const cs::Code dual_words = dual.expand();
        EXPECT_EQ(c.dimension() + dual.dimension(), n);
        EXPECT_EQ(words.size() * dual_words.size(), cs::cube_size(n));
        EXPECT_EQ(cs::dual_code(dual), c);
        EXPECT_EQ(cs::dual_distance(words), cs::min_distance(dual_words));
        // wht(1_C) = |C| / 2^n * 1_{C-perp}; integer form 2^n * that = |C| * 1_{C-perp}.
        const auto t = cs::wht_unnormalized(words.int_indicator());
        for (std::size_t s = 0; s < t.size(); ++s) {
          const std::int64_t expected = dual_words.contains(static_cast<Point>(s)) ? static_cast<std::int64_t>(words.size()) : 0;
          ASSERT_EQ(t[static_cast<Point>(s)], expected);
        }
      });
      EXPECT_EQ(count, oracle::gaussian_binomial(n, k)) << "n=" << n << " k=" << k;
      if (n <= 6) EXPECT_EQ(seen.size(), count);
    }
  }
}

TEST(LinearCodes, EnumerationExamplesAndRange) {
  const auto one_dim = cs::enumerate_linear_codes(2, 1);
  ASSERT_EQ(one_dim.size(), 3u);
  std::set<Point> gens;
  for (const auto& c : one_dim) gens.insert(c.generators()[0]);
  EXPECT_EQ(gens, (std::set<Point>{0b01, 0b10, 0b11}));
  EXPECT_EQ(cs::enumerate_linear_codes(3, 2).size(), 7u);
  EXPECT_EQ(cs::enumerate_linear_codes(5, 5).size(), 1u);
  EXPECT_THROW(cs::enumerate_linear_codes(9, 2), std::out_of_range);
  EXPECT_THROW(cs::enumerate_linear_codes(4, 0), std::out_of_range);
  EXPECT_THROW(cs::enumerate_linear_codes(3, 4), std::out_of_range);
}

TEST(DistanceDistribution, Examples) {
  const auto a = cs::distance_distribution(code(2, {0b00, 0b11}));
  EXPECT_EQ(a.values(), (std::vector<double>{1, 0, 1}));

  // Oracle: count ordered pairs directly.
  const auto even = oracle::even_weight(4);
  std::vector<double> expected(5, 0.0);
  for (Point x : even) {
    for (Point y : even) expected[static_cast<std::size_t>(oracle::weight(x ^ y))] += 1.0 / 8.0;
  }
  EXPECT_EQ(cs::distance_distribution(code(4, even)).values(), expected);
  EXPECT_EQ(expected, (std::vector<double>{1, 0, 6, 0, 1}));

  // Linear code: a[w] is the number of codewords of weight w.
  const auto h = oracle::hamming74();
  const auto dist = cs::distance_distribution(code(7, h));
  std::vector<double> weights(8, 0.0);
  for (Point x : h) weights[static_cast<std::size_t>(oracle::weight(x))] += 1.0;
  EXPECT_EQ(dist.values(), weights);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 8;
    const auto pts = oracle::random_subset(n, rng);
    const auto v = cs::distance_distribution(cs::Code(n, pts)).values();
    double total = 0;
    for (double x : v) {
      EXPECT_GE(x, 0.0);
      total += x;
    }
    EXPECT_EQ(v[0], 1.0);
    EXPECT_NEAR(total, static_cast<double>(pts.size()), 1e-9);
  }
}

TEST(RandomCode, ExamplesAndDeterminism) {
  EXPECT_EQ(cs::random_code(4, 5, 9).size(), 1u);
  EXPECT_EQ(cs::random_code(5, 1, 9), cs::Code::whole_cube(5));
  const int a53 = oracle::max_code_size(5, 3);
  EXPECT_EQ(a53, 4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const cs::Code c = cs::random_code(5, 3, seed);
    EXPECT_GE(c.size(), 2u);
    EXPECT_LE(c.size(), static_cast<std::size_t>(a53));
    EXPECT_GE(cs::min_distance(c), 3);
  }
  EXPECT_EQ(cs::random_code(9, 3, 77), cs::random_code(9, 3, 77));
}

TEST(RandomCode, IsMaximalByInclusion) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 6;
    const int d = 1 + static_cast<int>(seed % 4);
    const cs::Code c = cs::random_code(n, d, seed);
    for (Point x = 0; x < (Point{1} << n); ++x) {
      if (c.contains(x)) continue;
      bool blocked = false;
      for (Point y : c.points()) blocked = blocked || oracle::weight(x ^ y) < d;
      EXPECT_TRUE(blocked) << "point " << x << " could be added";
    }
  }
}

TEST(HammingBall, MatchesScan) {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) EXPECT_EQ(cs::hamming_ball(n, r), oracle::ball_by_scan(n, r));
  }
}

TEST(CodeFile, BinaryStringsAndComments) {
  const cs::Code c = parse("# rep code\n0000\n  1111  # all ones\n\n");
  EXPECT_EQ(c, code(4, {0, 15}));
  EXPECT_EQ(parse("n=4\n0001\n"), code(4, {1}));
}

TEST(CodeFile, HexNeedsHeader) {
  EXPECT_EQ(parse("n=5\n0x1f\n0x00\n"), code(5, {0, 31}));
  EXPECT_THROW(parse("0x1f\n"), cs::CodeParseError);
  EXPECT_THROW(parse("n=4\n0x1f\n"), cs::CodeParseError);
}

TEST(CodeFile, Errors) {
  EXPECT_THROW(parse("000\n01\n"), cs::CodeParseError);       // differing lengths
  EXPECT_THROW(parse("n=4\n010\n"), cs::CodeParseError);      // header mismatch
  EXPECT_THROW(parse("# nothing\n"), cs::CodeParseError);     // no codewords
  EXPECT_THROW(parse("0101\n0101\n"), cs::CodeParseError);    // duplicate
  EXPECT_THROW(parse("01a1\n"), cs::CodeParseError);
  EXPECT_THROW(parse("n=3\nn=3\n000\n"), cs::CodeParseError);
  EXPECT_THROW(cs::read_code_file("/nonexistent/code.txt"), cs::CodeParseError);
}

TEST(CodeFile, WriteReadRoundTrip) {
  const cs::Code c = code(7, oracle::hamming74());
  std::ostringstream out;
  cs::write_code(out, c);
  EXPECT_EQ(parse(out.str()), c);
  EXPECT_EQ(cs::to_bit_string(1, 3), "001");
}
