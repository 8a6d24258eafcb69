#pragma once

// Julia sets of rational maps by backward iteration, rendered to PGM.
// The only floating-point code in the library.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace thuemorse {

using Complex = std::complex<double>;

/// f(z) = N(z) / D(z), coefficients in ascending powers.
class RationalMap {
 public:
  RationalMap(std::vector<Complex> numerator, std::vector<Complex> denominator,
              std::string name = "custom");

  static RationalMap z_squared();
  /// The approximate maps f_2 ... f_5; q outside 2..5 throws Error.
  static RationalMap preset(unsigned q);

  const std::vector<Complex>& numerator() const noexcept { return num_; }
  const std::vector<Complex>& denominator() const noexcept { return den_; }
  const std::string& name() const noexcept { return name_; }
  unsigned degree() const noexcept;

  Complex operator()(Complex z) const;
  /// All w with f(w) = z, from the companion matrix of N - zD and polished
  /// by Newton steps. Roots whose residual |f(w) - z| stays above tolerance
  /// are dropped.
  std::vector<Complex> preimages(Complex z, double tolerance = 1e-9) const;

 private:
  std::vector<Complex> num_;
  std::vector<Complex> den_;
  std::string name_;
};

struct Viewport {
  Complex center{0.0, 0.0};
  /// Horizontal extent; the vertical one follows from the aspect ratio.
  double width = 4.0;
};

/// "cx,cy,width".
Viewport parse_viewport(const std::string& text);

struct RenderConfig {
  Viewport view;
  unsigned width = 512;
  unsigned height = 512;
  std::size_t points = 100000;
  std::uint64_t seed = 1;
  unsigned burn_in = 64;
  /// Independent chains, each seeded from (seed, chain index).
  unsigned chains = 8;
  /// Worker threads; 0 picks the hardware concurrency. Output does not
  /// depend on it.
  unsigned threads = 0;
  double residual_tolerance = 1e-9;
  /// Abort once more than this fraction of steps (plus a small slack) had
  /// no acceptable preimage.
  double max_skip_fraction = 0.01;
};

struct JuliaCloud {
  std::vector<Complex> points;
  std::size_t steps = 0;
  std::size_t skipped = 0;
  double max_residual = 0.0;
};

/// Deterministic given the map and config; throws Error when skips exceed
/// the configured fraction.
JuliaCloud julia_points(const RationalMap& f, const RenderConfig& config);

struct GrayImage {
  unsigned width = 0;
  unsigned height = 0;
  /// Row-major, 255 = white.
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(unsigned x, unsigned y) const { return pixels[std::size_t(y) * width + x]; }
  std::size_t dark_pixels() const;
};

/// Bins points into the viewport; darker pixels hold more points.
GrayImage render(const std::vector<Complex>& points, const RenderConfig& config);
/// Pixel containing z, or false when z falls outside the viewport.
bool pixel_of(Complex z, const RenderConfig& config, unsigned& x, unsigned& y);

/// Binary portable graymap (P5).
void write_pgm(const GrayImage& image, std::ostream& out);

}  // namespace thuemorse
