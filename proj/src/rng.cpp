#include "entlab/rng.hpp"

#include <cmath>

namespace entlab {

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 is kept away from 0 so the log is finite.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 step over a master/index combination.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace random_matrix {

CMatrix ginibre(int d, Rng& rng) {
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = rng.gaussian_complex();
    }
  }
  return g;
}

CMatrix haar_unitary(int d, Rng& rng) {
  const CMatrix g = ginibre(d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is exactly Haar.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0) ? rjj / a : Complex(1, 0);
  }
  return q;
}

}  // namespace random_matrix
}  // namespace entlab
