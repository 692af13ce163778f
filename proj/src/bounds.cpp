#include "vne/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vne/entropy.hpp"
#include "vne/errors.hpp"

namespace vne {

namespace {

void check_t_unit(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw OutOfRange("t = " + std::to_string(t) + " outside [0, 1]");
}

}  // namespace

double fannes_validity_max() { return 1.0 / (2.0 * std::numbers::e); }

double fannes_bound(int dim, double t) {
  if (dim < 1) throw InvalidDimension("fannes_bound requires dim >= 1");
  if (t < 0.0) throw OutOfRange("fannes_bound requires t >= 0");
  if (t > fannes_validity_max())
    throw OutOfValidityRange("fannes_bound is only valid for t <= 1/(2e); use "
                             "fannes_weak_bound beyond it");
  if (t == 0.0) return 0.0;
  return 2.0 * t * std::log2(static_cast<double>(dim)) -
         2.0 * t * std::log2(2.0 * t);
}

double fannes_weak_bound(int dim, double t) {
  if (dim < 1) throw InvalidDimension("fannes_weak_bound requires dim >= 1");
  check_t_unit(t);
  return 2.0 * t * std::log2(static_cast<double>(dim)) +
         1.0 / (std::numbers::e * std::numbers::ln2);
}

double sharp_bound(int dim, double t) {
  if (dim < 1) throw InvalidDimension("sharp_bound requires dim >= 1");
  check_t_unit(t);
  if (dim == 1) {
    if (t > 0.0)
      throw InvalidDimension("sharp_bound: dim = 1 admits only t = 0");
    return 0.0;
  }
  return t * std::log2(static_cast<double>(dim - 1)) + h_scalar(t) +
         h_scalar(1.0 - t);
}

std::pair<DensityMatrix, DensityMatrix> extremal_pair(int dim, double t) {
  if (dim < 2) throw InvalidDimension("extremal_pair requires dim >= 2");
  check_t_unit(t);
  std::vector<double> rho(static_cast<std::size_t>(dim),
                          t / static_cast<double>(dim - 1));
  rho[0] = 1.0 - t;
  std::vector<double> sigma(static_cast<std::size_t>(dim), 0.0);
  sigma[0] = 1.0;
  return {DensityMatrix::from_probabilities(rho),
          DensityMatrix::from_probabilities(sigma)};
}

BoundReport make_bound_report(int dim, double t) {
  BoundReport r;
  r.dim = dim;
  r.t = t;
  r.fannes = t <= fannes_validity_max()
                 ? std::optional<double>(fannes_bound(dim, t))
                 : std::nullopt;
  r.fannes_weak = fannes_weak_bound(dim, t);
  r.sharp = sharp_bound(dim, t);
  return r;
}

}  // namespace vne
