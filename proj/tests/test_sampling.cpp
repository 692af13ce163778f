#include "vne/sampling.hpp"

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <doctest.h>

#include "vne/eig.hpp"
#include "vne/entropy.hpp"
#include "vne/errors.hpp"

using vne::Measure;
using vne::SamplerConfig;
using vne::SplitMix64;

TEST_CASE("splitmix64 matches the published seed-0 vector") {
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(g.next() == 0x06C45D188009454FULL);
}

TEST_CASE("unit draws are pinned and land in the right interval") {
  SplitMix64 g(12345);
  CHECK(g.next_unit() == 0.1330796686614273);
  CHECK(g.next_unit() == 0.20481663336165912);
  CHECK(g.next_unit() == 0.11954258300911547);

  SplitMix64 h(9);
  for (int i = 0; i < 1000; ++i) {
    double u = h.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    double v = h.next_unit_pos();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("stream seeds are pinned") {
  CHECK(vne::derive_stream_seed(0, 0) == 0xE220A8397B1DCDAFULL);
  CHECK(vne::derive_stream_seed(0, 1) == 0x6E789E6AA1B965F4ULL);
  CHECK(vne::derive_stream_seed(42, 7) == 0xB4346C5A4AC089C3ULL);
  // Index 0 of seed s is by construction the first next() of SplitMix64(s).
  SplitMix64 g(0);
  CHECK(vne::derive_stream_seed(0, 0) == g.next());
}

TEST_CASE("gaussian draws have sane moments") {
  SplitMix64 g(2718281828ULL);
  const int pairs = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < pairs; ++i) {
    auto [x, y] = g.next_gaussian_pair();
    sum += x + y;
    sum_sq += x * x + y * y;
  }
  const double n = 2.0 * pairs;
  CHECK(std::abs(sum / n) <= 0.02);
  CHECK(std::abs(sum_sq / n - 1.0) <= 0.03);
}

TEST_CASE("density samples are bit-for-bit reproducible") {
  for (Measure m : {Measure::hilbert_schmidt, Measure::pure, Measure::rank_mixture}) {
    SamplerConfig cfg;
    cfg.seed = 17;
    cfg.dim = 3;
    cfg.measure = m;
    for (std::uint64_t k = 0; k < 200; ++k) {
      auto a = vne::sample_density(cfg, k);
      auto b = vne::sample_density(cfg, k);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(a.mat().at(i, j) == b.mat().at(i, j));
    }
  }
}

TEST_CASE("different indices give different states") {
  SamplerConfig cfg;
  cfg.seed = 17;
  cfg.dim = 2;
  auto a = vne::sample_density(cfg, 0);
  auto b = vne::sample_density(cfg, 1);
  CHECK((a.mat() - b.mat()).max_abs() > 1e-6);
}

TEST_CASE("samples pass density-matrix validation for every measure") {
  for (Measure m : {Measure::hilbert_schmidt, Measure::pure, Measure::rank_mixture}) {
    for (int dim : {1, 2, 3, 6}) {
      SamplerConfig cfg;
      cfg.seed = 99;
      cfg.dim = dim;
      cfg.measure = m;
      for (std::uint64_t k = 0; k < 50; ++k) {
        auto rho = vne::sample_density(cfg, k);
        CHECK(rho.mat().hermiticity_error() == 0.0);  // exact by construction
        CHECK_NOTHROW(vne::DensityMatrix{rho.mat()});
      }
    }
  }
}

TEST_CASE("pure samples have zero entropy") {
  SamplerConfig cfg;
  cfg.seed = 5;
  cfg.dim = 4;
  cfg.measure = Measure::pure;
  for (std::uint64_t k = 0; k < 100; ++k) {
    CHECK(vne::von_neumann_entropy(vne::sample_density(cfg, k)) <= 1e-10);
  }
}

TEST_CASE("hilbert-schmidt qubit purity has the known mean") {
  SamplerConfig cfg;
  cfg.seed = 31337;
  cfg.dim = 2;
  cfg.measure = Measure::hilbert_schmidt;
  double sum = 0.0;
  const int n = 100000;
  for (std::uint64_t k = 0; k < n; ++k) {
    auto rho = vne::sample_density(cfg, k);
    sum += (rho.mat() * rho.mat()).trace().real();
  }
  // E[Tr rho^2] = 4/5 for the flat measure on the Bloch ball.
  CHECK(std::abs(sum / n - 0.8) <= 0.01);
}

TEST_CASE("rank mixture produces every rank") {
  SamplerConfig cfg;
  cfg.seed = 12;
  cfg.dim = 3;
  cfg.measure = Measure::rank_mixture;
  std::set<int> seen;
  for (std::uint64_t k = 0; k < 400; ++k) {
    auto rho = vne::sample_density(cfg, k);
    auto eig = vne::eig_hermitian(rho.mat());
    int rank = 0;
    for (double v : eig.values) rank += v > 1e-9 ? 1 : 0;
    seen.insert(rank);
  }
  CHECK(seen == std::set<int>{1, 2, 3});
}

TEST_CASE("sampled unitaries are unitary and reproducible") {
  for (int dim : {1, 2, 3, 5}) {
    SamplerConfig cfg;
    cfg.seed = 2024;
    cfg.dim = dim;
    for (std::uint64_t k = 0; k < 100; ++k) {
      auto u = vne::sample_unitary(cfg, k);
      CHECK(u.mat().unitarity_error() <= 1e-10);
    }
    auto a = vne::sample_unitary(cfg, 3);
    auto b = vne::sample_unitary(cfg, 3);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        CHECK(a.mat().at(i, j) == b.mat().at(i, j));
  }
}

TEST_CASE("dimension one unitaries are unit-modulus scalars") {
  SamplerConfig cfg;
  cfg.seed = 88;
  cfg.dim = 1;
  for (std::uint64_t k = 0; k < 20; ++k) {
    auto u = vne::sample_unitary(cfg, k);
    CHECK(std::abs(std::abs(u.mat().at(0, 0)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("haar conjugation preserves a fixed spectrum") {
  const std::vector<double> lam{0.4, 0.3, 0.2, 0.1};
  auto diag = vne::ComplexMatrix::diagonal(lam);
  SamplerConfig cfg;
  cfg.seed = 606;
  cfg.dim = 4;
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    auto u = vne::sample_unitary(cfg, k);
    auto vals = vne::eig_hermitian(conjugate_by_unitary(diag, u)).values;
    for (std::size_t i = 0; i < lam.size(); ++i)
      worst = std::max(worst, std::abs(vals[i] - lam[i]));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("haar first-entry second moment is 1/dim") {
  SamplerConfig cfg;
  cfg.seed = 101;
  cfg.dim = 3;
  double sum = 0.0;
  const int n = 5000;
  for (std::uint64_t k = 0; k < n; ++k)
    sum += std::norm(vne::sample_unitary(cfg, k).mat().at(0, 0));
  CHECK(std::abs(sum / n - 1.0 / 3.0) <= 0.02);
}

TEST_CASE("measure names parse and round trip") {
  for (Measure m : {Measure::hilbert_schmidt, Measure::pure, Measure::rank_mixture}) {
    CHECK(vne::parse_measure(vne::measure_name(m)) == m);
  }
  CHECK_THROWS_AS(vne::parse_measure("haar"), vne::OutOfRange);
  CHECK_THROWS_AS(vne::parse_measure(""), vne::OutOfRange);
}

TEST_CASE("sampler dimension is validated") {
  SamplerConfig cfg;
  cfg.dim = 0;
  CHECK_THROWS_AS(vne::sample_density(cfg, 0), vne::InvalidDimension);
  cfg.dim = 65;
  CHECK_THROWS_AS(vne::sample_unitary(cfg, 0), vne::InvalidDimension);
}
