#ifndef ENTLAB_RNG_HPP
#define ENTLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "entlab/linalg.hpp"

namespace entlab {

// Seeded generator with a fully specified output sequence. Gaussian draws go
// through Box-Muller on top of mt19937_64 rather than
// std::normal_distribution, whose algorithm is implementation-defined; the
// same seed must give the same states on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double gaussian();

  Complex gaussian_complex() { return {gaussian(), gaussian()}; }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Per-trial sub-seed so that trial results do not depend on worker count or
// scheduling: every trial owns a generator seeded by (master, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

namespace random_matrix {

// d x d matrix of standard complex Gaussians.
CMatrix ginibre(int d, Rng& rng);

// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix haar_unitary(int d, Rng& rng);

}  // namespace random_matrix
}  // namespace entlab

#endif
