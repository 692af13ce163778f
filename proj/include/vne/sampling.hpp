#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "vne/complex_matrix.hpp"

namespace vne {

enum class Measure {
  hilbert_schmidt,  ///< G G* / Tr(G G*) with G a square complex Gaussian
  pure,             ///< normalized random rank-1 projector
  rank_mixture,     ///< rank r uniform in {1..dim}, then a dim x r factor
};

/// Parses "hilbert_schmidt" | "pure" | "rank_mixture"; throws OutOfRange on
/// anything else.
Measure parse_measure(const std::string& name);
std::string measure_name(Measure m);

struct SamplerConfig {
  std::uint64_t seed = 0;
  int dim = 2;
  Measure measure = Measure::rank_mixture;
};

/// SplitMix64: the 64-bit shift-xor-multiply generator from Steele,
/// Lea & Flood's SplittableRandom.  Chosen because its state is a plain
/// counter-style word, which makes per-index stream derivation trivial and
/// keeps every sample reproducible bit-for-bit from (seed, index) alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit();

  /// Uniform double in (0, 1]; safe as a log argument.
  double next_unit_pos();

  /// Two independent N(0,1) draws via the Box-Muller transform.
  std::pair<double, double> next_gaussian_pair();

  /// x + iy with independent N(0,1) components.
  Complex next_complex_gaussian();

 private:
  std::uint64_t state_;
};

/// Stream-derivation rule, pinned for reproducibility: the generator for
/// sample `index` is seeded with
///   finalize(seed XOR ((index + 1) * 0x9E3779B97F4A7C15))
/// where `finalize` is the SplitMix64 output function applied to the raw
/// word.  Distinct indices give independent streams, so sample k never
/// requires generating samples 0..k-1.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

/// Random density matrix under config.measure; deterministic in
/// (config.seed, index).
DensityMatrix sample_density(const SamplerConfig& config, std::uint64_t index);

/// Haar-distributed unitary: QR-factorize a square complex Gaussian matrix
/// and multiply Q by Diag(r_ii / |r_ii|).  Draws with a pathologically small
/// |r_ii| (< 1e-300) are resampled; DegenerateDraw after 100 consecutive
/// failures.
UnitaryMatrix sample_unitary(const SamplerConfig& config, std::uint64_t index);

}  // namespace vne
