#include "vne/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "vne/errors.hpp"

namespace vne {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output function (Steele/Lea/Flood).
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

void check_config(const SamplerConfig& config) {
  if (config.dim < 1 || config.dim > ComplexMatrix::kMaxDim)
    throw InvalidDimension("sampler dimension must be in [1, 64]");
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_unit_pos() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

std::pair<double, double> SplitMix64::next_gaussian_pair() {
  const double u1 = next_unit_pos();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

Complex SplitMix64::next_complex_gaussian() {
  const auto [x, y] = next_gaussian_pair();
  return Complex{x, y};
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ ((index + 1) * kGolden));
}

Measure parse_measure(const std::string& name) {
  if (name == "hilbert_schmidt") return Measure::hilbert_schmidt;
  if (name == "pure") return Measure::pure;
  if (name == "rank_mixture") return Measure::rank_mixture;
  throw OutOfRange("unknown measure '" + name +
                   "' (expected hilbert_schmidt, pure, or rank_mixture)");
}

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::hilbert_schmidt: return "hilbert_schmidt";
    case Measure::pure: return "pure";
    case Measure::rank_mixture: return "rank_mixture";
  }
  throw OutOfRange("invalid measure value");
}

namespace {

// rho = G G* / Tr(G G*) for a dim x cols matrix G of independent complex
// Gaussians.  Hermiticity is exact by construction (upper triangle mirrored).
DensityMatrix ginibre_state(SplitMix64& rng, int dim, int cols) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Complex> g(static_cast<std::size_t>(dim) * cols);
    for (Complex& z : g) z = rng.next_complex_gaussian();
    auto at = [&](int i, int k) -> Complex& {
      return g[static_cast<std::size_t>(i) * cols + k];
    };
    ComplexMatrix m(dim);
    double tr = 0.0;
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) {
        Complex s = 0.0;
        for (int k = 0; k < cols; ++k) s += at(i, k) * std::conj(at(j, k));
        if (i == j) {
          const double diag = s.real();
          m.at(i, i) = diag;
          tr += diag;
        } else {
          m.at(i, j) = s;
          m.at(j, i) = std::conj(s);
        }
      }
    }
    if (tr < 1e-300) continue;
    return DensityMatrix::unchecked(m * Complex{1.0 / tr, 0.0});
  }
  throw DegenerateDraw("Ginibre draw degenerated 100 times in a row");
}

DensityMatrix pure_state(SplitMix64& rng, int dim) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Complex> psi(static_cast<std::size_t>(dim));
    double n2 = 0.0;
    for (Complex& z : psi) {
      z = rng.next_complex_gaussian();
      n2 += std::norm(z);
    }
    if (n2 < 1e-300) continue;
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
      m.at(i, i) = std::norm(psi[static_cast<std::size_t>(i)]) / n2;
      for (int j = i + 1; j < dim; ++j) {
        const Complex v = psi[static_cast<std::size_t>(i)] *
                          std::conj(psi[static_cast<std::size_t>(j)]) / n2;
        m.at(i, j) = v;
        m.at(j, i) = std::conj(v);
      }
    }
    return DensityMatrix::unchecked(std::move(m));
  }
  throw DegenerateDraw("pure-state draw degenerated 100 times in a row");
}

}  // namespace

DensityMatrix sample_density(const SamplerConfig& config, std::uint64_t index) {
  check_config(config);
  SplitMix64 rng(derive_stream_seed(config.seed, index));
  switch (config.measure) {
    case Measure::hilbert_schmidt:
      return ginibre_state(rng, config.dim, config.dim);
    case Measure::pure:
      return pure_state(rng, config.dim);
    case Measure::rank_mixture: {
      const int rank = 1 + static_cast<int>(rng.next_unit() * config.dim);
      return ginibre_state(rng, config.dim, std::min(rank, config.dim));
    }
  }
  throw OutOfRange("invalid measure value");
}

UnitaryMatrix sample_unitary(const SamplerConfig& config, std::uint64_t index) {
  check_config(config);
  const int d = config.dim;
  SplitMix64 rng(derive_stream_seed(config.seed, index));

  for (int attempt = 0; attempt < 100; ++attempt) {
    ComplexMatrix a(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a.at(i, j) = rng.next_complex_gaussian();

    // Householder QR: reduce a to upper-triangular R while accumulating
    // q = H_0 H_1 ... (each reflector is Hermitian and involutive).
    ComplexMatrix q = ComplexMatrix::identity(d);
    bool degenerate = false;
    for (int j = 0; j < d - 1; ++j) {
      double norm_sq = 0.0;
      for (int i = j; i < d; ++i) norm_sq += std::norm(a.at(i, j));
      const double norm = std::sqrt(norm_sq);
      if (norm < 1e-300) {
        degenerate = true;
        break;
      }
      const Complex x0 = a.at(j, j);
      const double x0_abs = std::abs(x0);
      const Complex phase = x0_abs > 0.0 ? x0 / x0_abs : Complex{1.0, 0.0};
      const Complex alpha = -phase * norm;

      // v = x - alpha*e1; this sign choice never cancels.
      std::vector<Complex> v(static_cast<std::size_t>(d - j));
      v[0] = x0 - alpha;
      for (int i = j + 1; i < d; ++i)
        v[static_cast<std::size_t>(i - j)] = a.at(i, j);
      double v_sq = 0.0;
      for (const Complex& z : v) v_sq += std::norm(z);
      if (v_sq < 1e-300) continue;  // column already triangular

      // A <- H A on columns j..d-1 (column j becomes (alpha, 0, ..., 0)).
      a.at(j, j) = alpha;
      for (int i = j + 1; i < d; ++i) a.at(i, j) = 0.0;
      for (int col = j + 1; col < d; ++col) {
        Complex dot = 0.0;
        for (int i = j; i < d; ++i)
          dot += std::conj(v[static_cast<std::size_t>(i - j)]) * a.at(i, col);
        const Complex f = 2.0 * dot / v_sq;
        for (int i = j; i < d; ++i)
          a.at(i, col) -= f * v[static_cast<std::size_t>(i - j)];
      }
      // Q <- Q H (apply the reflector from the right).
      for (int row = 0; row < d; ++row) {
        Complex dot = 0.0;
        for (int i = j; i < d; ++i)
          dot += q.at(row, i) * v[static_cast<std::size_t>(i - j)];
        const Complex f = 2.0 * dot / v_sq;
        for (int i = j; i < d; ++i)
          q.at(row, i) -= f * std::conj(v[static_cast<std::size_t>(i - j)]);
      }
    }
    if (degenerate) continue;

    // Phase correction: U = Q Diag(r_ii / |r_ii|), making the distribution
    // Haar rather than QR-convention-dependent.
    std::vector<Complex> column_phase(static_cast<std::size_t>(d));
    bool tiny = false;
    for (int j = 0; j < d; ++j) {
      const Complex rjj = a.at(j, j);
      const double mag = std::abs(rjj);
      if (mag < 1e-300) {
        tiny = true;
        break;
      }
      column_phase[static_cast<std::size_t>(j)] = rjj / mag;
    }
    if (tiny) continue;
    ComplexMatrix u(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        u.at(i, j) = q.at(i, j) * column_phase[static_cast<std::size_t>(j)];
    return UnitaryMatrix::unchecked(std::move(u));
  }
  throw DegenerateDraw("unitary draw degenerated 100 times in a row");
}

}  // namespace vne
