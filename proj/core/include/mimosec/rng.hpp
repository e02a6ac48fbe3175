// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_RNG_HPP
#define MIMOSEC_RNG_HPP

#include <cstdint>
#include <random>

#include "mimosec/linalg.hpp"

namespace mimosec {

// Reproducible random stream addressed by (master_seed, stream_id).
//
// Stream t of a Monte Carlo run is constructed directly from the pair,
// with no sequential dependence between streams, so trials can be evaluated
// in any order or on any thread and still produce identical draws. The
// engine seed is derived by splitmix64 mixing of the pair; distinct
// stream ids give decorrelated mt19937_64 states.
//
// Value-semantic: copies evolve independently.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // Standard real Gaussian N(0, 1).
    double normal();

    // Uniform double in [0, 1).
    double uniform01();

    // Uniform integer in [0, bound). bound must be >= 1.
    std::uint64_t uniform_below(std::uint64_t bound);

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

// n i.i.d. circularly-symmetric complex Gaussians with unit total variance:
// independent real and imaginary parts, each N(0, 1/2), so E|g|^2 = 1 and
// |g|^2 is exponential(1). Throws std::invalid_argument for n = 0.
ComplexVector sample_complex_standard_normal(RngStream& rng, std::size_t n);

} // namespace mimosec

#endif
