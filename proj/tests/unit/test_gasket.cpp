#include "btg/gasket.hpp"
#include "btg/itm.hpp"
#include "btg/renorm.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace btg;
using testing_helpers::L;
using testing_helpers::Q;

TEST(Charts, AlphaBeta) {
  auto [a, b] = chart_alpha_beta(L(3, 5, 2, 10));
  EXPECT_EQ(a, Q(7, 10));
  EXPECT_EQ(b, Q(2, 10));
  EXPECT_EQ(chart_alpha_beta_inverse(a, b), L(3, 5, 2, 10));
  EXPECT_THROW(chart_alpha_beta_inverse(Q(1, 5), Q(1, 2)), std::invalid_argument);
  EXPECT_THROW(chart_alpha_beta_inverse(Q(6, 5), Q(1, 2)), std::invalid_argument);
}

TEST(Charts, RoundTripOnSamples) {
  for (const auto& s : sample_points(5, 3, 1)) {
    auto [a, b] = chart_alpha_beta(s.point);
    EXPECT_EQ(chart_alpha_beta_inverse(a, b), s.point);
  }
}

TEST(Charts, SimplexCorners) {
  auto [x0, y0] = chart_simplex(L(1, 0, 0, 1));
  auto [x1, y1] = chart_simplex(L(0, 1, 0, 1));
  auto [x2, y2] = chart_simplex(L(0, 0, 1, 1));
  EXPECT_DOUBLE_EQ(x0, 0);
  EXPECT_DOUBLE_EQ(y0, 0);
  EXPECT_DOUBLE_EQ(x1, 1);
  EXPECT_DOUBLE_EQ(y1, 0);
  EXPECT_DOUBLE_EQ(x2, 0.5);
  EXPECT_NEAR(y2, std::sqrt(3.0) / 2, 1e-15);
}

TEST(Render, Validation) {
  RenderConfig c;
  c.depth = -1;
  EXPECT_THROW(render(c), std::invalid_argument);
  c.depth = 31;
  EXPECT_THROW(render(c), std::invalid_argument);
  c.depth = 3;
  c.resolution = 8;
  EXPECT_THROW(render(c), std::invalid_argument);
}

TEST(Render, SizesPerChart) {
  EXPECT_EQ(raster_size(Chart::AlphaBeta, 100), std::make_pair(100, 100));
  EXPECT_EQ(raster_size(Chart::Simplex, 100), std::make_pair(100, 87));
}

TEST(Render, DepthZeroAlphaBetaIsTheLowerTriangle) {
  RenderConfig c;
  c.depth = 0;
  c.resolution = 64;
  c.chart = Chart::AlphaBeta;
  Raster r = render(c);
  for (int row = 0; row < r.height; ++row)
    for (int col = 0; col < r.width; ++col) {
      int i = col, rb = r.height - 1 - row;  // beta counted from the bottom
      EXPECT_EQ(r.at(col, row), rb <= i ? 1 : 0) << col << "," << row;
    }
}

TEST(Render, FillAndCarveAgree) {
  for (Chart chart : {Chart::Simplex, Chart::AlphaBeta})
    for (int res : {64, 101, 256}) {
      RenderConfig c;
      c.depth = 9;
      c.resolution = res;
      c.chart = chart;
      Raster fill = render(c);
      c.mode = RenderMode::CarveHoles;
      Raster carve = render(c);
      EXPECT_EQ(fill.bits, carve.bits) << res;
    }
}

TEST(Render, CountDecreasesWithDepth) {
  RenderConfig c;
  c.resolution = 200;
  std::size_t prev = SIZE_MAX;
  for (int d = 0; d <= 8; ++d) {
    c.depth = d;
    std::size_t n = render(c).count();
    EXPECT_LE(n, prev);
    prev = n;
  }
}

TEST(Render, IndependentOfThreadCount) {
  RenderConfig c;
  c.depth = 10;
  c.resolution = 300;
  c.threads = 1;
  Raster a = render(c);
  c.threads = 3;
  EXPECT_EQ(render(c).bits, a.bits);
}

TEST(Render, PpmHeader) {
  RenderConfig c;
  c.depth = 2;
  c.resolution = 16;
  Raster r = render(c);
  std::ostringstream os;
  write_ppm(os, r);
  std::string s = os.str();
  std::string header = "P6\n16 " + std::to_string(r.height) + "\n255\n";
  EXPECT_EQ(s.substr(0, header.size()), header);
  EXPECT_EQ(s.size(), header.size() + 3u * 16u * static_cast<std::size_t>(r.height));
}

TEST(Samples, CountsAndValidation) {
  EXPECT_EQ(sample_points(0, 1, 1).size(), 1u);
  EXPECT_EQ(sample_points(6, 4, 1).size(), 256u);
  EXPECT_EQ(sample_points(0, 1, 1).front().point, L(1, 1, 1, 3));
  EXPECT_THROW(sample_points(3, 0, 1), std::invalid_argument);
  EXPECT_THROW(sample_points(25, 1, 1), std::invalid_argument);
}

TEST(Samples, BarycentersSurviveTheirDepth) {
  for (int d : {1, 4, 8}) {
    for (const auto& s : sample_points(d, 1, 1)) {
      Classification c = classify(BtParams::from_lengths(s.point), static_cast<std::size_t>(d));
      ASSERT_TRUE(std::holds_alternative<verdict::InfiniteUpTo>(c)) << describe(c);
      InductionRun run = run_induction({Perm::P123, s.point}, static_cast<std::size_t>(d));
      EXPECT_EQ(run.word, s.word);
    }
  }
}

TEST(Samples, CsvAndUnitSquare) {
  auto pts = sample_points(3, 2, 5);
  std::ostringstream os;
  write_points_csv(os, pts, Chart::AlphaBeta);
  std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "word,a,b,c,x,y");
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 17);
  for (const auto& p : chart_points(pts, Chart::Simplex)) {
    EXPECT_GE(p[0], 0);
    EXPECT_LE(p[0], 1);
    EXPECT_GE(p[1], 0);
    EXPECT_LE(p[1], 1);
  }
}
