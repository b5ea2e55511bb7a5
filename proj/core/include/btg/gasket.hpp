#pragma once

// Raster images and point samples of the gasket: the parameters whose
// induction never falls into a hole.

#include "btg/simplex.hpp"
#include "btg/word.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace btg {

enum class Chart { Simplex, AlphaBeta };
enum class RenderMode { FillCylinders, CarveHoles };

struct RenderConfig {
  int depth = 12;
  int resolution = 1024;
  Chart chart = Chart::Simplex;
  RenderMode mode = RenderMode::FillCylinders;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Throws std::invalid_argument for depth < 0, depth > 30 or resolution < 16.
void validate(const RenderConfig& c);

/// One byte per pixel, row 0 at the top; 1 = gasket.
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  std::uint8_t at(int col, int row) const { return bits[static_cast<std::size_t>(row) * width + col]; }
  std::size_t count() const;
};

/// Simplex chart: W x round(W sqrt(3)/2), (a,b,c) -> (b + c/2, c sqrt(3)/2),
/// c = 1 at the top. AlphaBeta chart: W x W, alpha to the right, beta up.
/// A pixel is tested at its center, exactly: FillCylinders keeps it when it
/// lies in a closed depth-d cylinder, CarveHoles removes it when it lies in a
/// hole preimage minus the two sibling cylinders, up to depth d - 1.
Raster render(const RenderConfig& config);

/// Binary PPM (P6), gasket black on white.
void write_ppm(std::ostream& os, const Raster& r);

/// Width and height of the raster for a chart.
std::pair<int, int> raster_size(Chart chart, int resolution);

/// alpha = b + c = 1 - a, beta = c.
std::pair<Rational, Rational> chart_alpha_beta(const LengthVector& p);
/// Throws std::invalid_argument unless 0 <= beta <= alpha <= 1.
LengthVector chart_alpha_beta_inverse(const Rational& alpha, const Rational& beta);

/// (b + c/2, c sqrt(3)/2).
std::pair<double, double> chart_simplex(const LengthVector& p);

struct SamplePoint {
  Word word;  // the depth-d cylinder it came from
  LengthVector point;
};

/// For every depth-d cylinder from P123, its barycenter and per_cylinder - 1
/// seeded interior points. Throws std::invalid_argument for per_cylinder < 1
/// or depth outside 0..24.
std::vector<SamplePoint> sample_points(int depth, int per_cylinder, std::uint64_t seed);

/// word,a,b,c,x,y with x,y in the chosen chart.
void write_points_csv(std::ostream& os, const std::vector<SamplePoint>& pts, Chart chart);

/// Chart coordinates scaled into the unit square (the simplex chart fits
/// as is; its height is sqrt(3)/2).
std::vector<std::array<double, 2>> chart_points(const std::vector<SamplePoint>& pts, Chart chart);

}  // namespace btg
