#include "thuemorse/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "thuemorse/error.hpp"

namespace thuemorse {

namespace {

void trim(std::vector<Complex>& p) {
  while (p.size() > 1 && p.back() == Complex(0.0)) p.pop_back();
}

Complex horner(const std::vector<Complex>& p, Complex z) {
  Complex v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
  return v;
}

Complex horner_derivative(const std::vector<Complex>& p, Complex z) {
  Complex v = 0.0;
  for (std::size_t i = p.size(); i-- > 1;) v = v * z + static_cast<double>(i) * p[i];
  return v;
}

std::vector<Complex> roots(std::vector<Complex> p) {
  // Drop leading coefficients that are negligible against the others.
  double scale = 0.0;
  for (const Complex& c : p) scale = std::max(scale, std::abs(c));
  while (p.size() > 1 && std::abs(p.back()) <= 1e-14 * scale) p.pop_back();
  const std::size_t n = p.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {-p[0] / p[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) return {};
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

}  // namespace

RationalMap::RationalMap(std::vector<Complex> numerator, std::vector<Complex> denominator,
                         std::string name)
    : num_(std::move(numerator)), den_(std::move(denominator)), name_(std::move(name)) {
  if (num_.empty()) num_.push_back(0.0);
  trim(num_);
  trim(den_);
  if (den_.empty() || (den_.size() == 1 && den_[0] == Complex(0.0)))
    throw Error("denominator of a rational map must be nonzero");
}

RationalMap RationalMap::z_squared() { return RationalMap({0.0, 0.0, 1.0}, {1.0}, "z^2"); }

RationalMap RationalMap::preset(unsigned q) {
  using C = Complex;
  switch (q) {
    case 2:
      return RationalMap({1.0}, {0.0, 1.0, -0.5}, "f2");
    case 3:
      return RationalMap({C(0.128775, 0.0942072)},
                         {0.0, 1.0, C(-1.74702, 0.285702), C(0.831347, -0.190468)}, "f3");
    case 4:
      return RationalMap({C(0.0232438, 0.0757918)},
                         {0.0, 1.0, C(-2.67804, 1.10938), C(2.37852, -1.93187),
                          C(-0.694865, 0.89421)},
                         "f4");
    case 5:
      return RationalMap({C(-0.00877156, 0.0526634)},
                         {0.0, 1.0, C(-3.22614, 2.0417), C(3.13076, -5.12089),
                          C(-0.677772, 4.35662), C(-0.245783, -1.22944)},
                         "f5");
    default:
      throw Error("no preset map for q = " + std::to_string(q) + " (available: 2..5)");
  }
}

unsigned RationalMap::degree() const noexcept {
  return static_cast<unsigned>(std::max(num_.size(), den_.size()) - 1);
}

Complex RationalMap::operator()(Complex z) const { return horner(num_, z) / horner(den_, z); }

std::vector<Complex> RationalMap::preimages(Complex z, double tolerance) const {
  std::vector<Complex> p(std::max(num_.size(), den_.size()), 0.0);
  for (std::size_t i = 0; i < num_.size(); ++i) p[i] += num_[i];
  for (std::size_t i = 0; i < den_.size(); ++i) p[i] -= z * den_[i];
  std::vector<Complex> out;
  for (Complex w : roots(p)) {
    for (int it = 0; it < 8; ++it) {
      const Complex d = horner_derivative(p, w);
      if (d == Complex(0.0)) break;
      const Complex step = horner(p, w) / d;
      w -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(w))) break;
    }
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
    if (std::abs((*this)(w) - z) < tolerance) out.push_back(w);
  }
  return out;
}

Viewport parse_viewport(const std::string& text) {
  std::istringstream in(text);
  double cx, cy, w;
  char c1, c2;
  if (!(in >> cx >> c1 >> cy >> c2 >> w) || c1 != ',' || c2 != ',' || w <= 0)
    throw ParseError("viewport must be \"cx,cy,width\" with width > 0: " + text);
  return Viewport{{cx, cy}, w};
}

namespace {

struct ChainResult {
  std::vector<Complex> points;
  std::size_t steps = 0;
  std::size_t skipped = 0;
  double max_residual = 0.0;
};

ChainResult run_chain(const RationalMap& f, const RenderConfig& cfg, unsigned chain,
                      std::size_t count) {
  ChainResult r;
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(chain)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto fresh = [&] { return Complex(unit(rng), unit(rng)); };
  Complex z = fresh();
  const std::size_t total = count + cfg.burn_in;
  const std::size_t allowed =
      static_cast<std::size_t>(cfg.max_skip_fraction * static_cast<double>(total)) + 16;
  r.points.reserve(count);
  for (std::size_t step = 0; step < total;) {
    ++r.steps;
    const auto pre = f.preimages(z, cfg.residual_tolerance);
    if (pre.empty()) {
      if (++r.skipped > allowed) break;
      z = fresh();
      continue;
    }
    const Complex w = pre[std::uniform_int_distribution<std::size_t>(0, pre.size() - 1)(rng)];
    r.max_residual = std::max(r.max_residual, std::abs(f(w) - z));
    z = w;
    if (step >= cfg.burn_in) r.points.push_back(z);
    ++step;
  }
  return r;
}

}  // namespace

JuliaCloud julia_points(const RationalMap& f, const RenderConfig& config) {
  if (f.degree() < 2) throw Error("backward iteration needs a map of degree at least 2");
  JuliaCloud cloud;
  if (config.points == 0) return cloud;
  const unsigned chains = std::max(1u, config.chains);
  std::vector<ChainResult> results(chains);
  std::vector<std::size_t> counts(chains, config.points / chains);
  for (std::size_t c = 0; c < config.points % chains; ++c) ++counts[c];

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, chains);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (unsigned c = t; c < chains; c += threads) results[c] = run_chain(f, config, c, counts[c]);
      });
  }
  for (unsigned c = 0; c < chains; ++c) {
    const ChainResult& r = results[c];
    cloud.steps += r.steps;
    cloud.skipped += r.skipped;
    cloud.max_residual = std::max(cloud.max_residual, r.max_residual);
    if (r.points.size() < counts[c]) {
      std::ostringstream msg;
      msg << "chain " << c << " of " << f.name() << " aborted: " << r.skipped
          << " steps without an acceptable preimage after " << r.points.size() << " of "
          << counts[c] << " points";
      throw Error(msg.str());
    }
    cloud.points.insert(cloud.points.end(), r.points.begin(), r.points.end());
  }
  return cloud;
}

std::size_t GrayImage::dark_pixels() const {
  return static_cast<std::size_t>(
      std::count_if(pixels.begin(), pixels.end(), [](std::uint8_t p) { return p < 255; }));
}

bool pixel_of(Complex z, const RenderConfig& cfg, unsigned& x, unsigned& y) {
  const double w = cfg.view.width;
  const double h = w * cfg.height / cfg.width;
  const double fx = (z.real() - (cfg.view.center.real() - w / 2)) / w * cfg.width;
  const double fy = ((cfg.view.center.imag() + h / 2) - z.imag()) / h * cfg.height;
  if (!(fx >= 0 && fy >= 0 && fx < cfg.width && fy < cfg.height)) return false;
  x = static_cast<unsigned>(fx);
  y = static_cast<unsigned>(fy);
  return true;
}

GrayImage render(const std::vector<Complex>& points, const RenderConfig& config) {
  if (config.width == 0 || config.height == 0) throw Error("image dimensions must be positive");
  GrayImage img{config.width, config.height,
                std::vector<std::uint8_t>(std::size_t(config.width) * config.height, 255)};
  std::vector<std::uint32_t> hits(img.pixels.size(), 0);
  for (const Complex& z : points) {
    unsigned x, y;
    if (pixel_of(z, config, x, y)) ++hits[std::size_t(y) * config.width + x];
  }
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (hits[i])
      img.pixels[i] = static_cast<std::uint8_t>(std::max(0.0, 160.0 - 40.0 * std::log2(hits[i])));
  return img;
}

void write_pgm(const GrayImage& image, std::ostream& out) {
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
}

}  // namespace thuemorse
