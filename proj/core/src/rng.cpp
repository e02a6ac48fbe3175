// SPDX-License-Identifier: Apache-2.0

#include "mimosec/rng.hpp"

#include <stdexcept>

namespace mimosec {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 make_engine(std::uint64_t master_seed, std::uint64_t stream_id) {
    // Mix the pair into four 32-bit words; seed_seq spreads them over the
    // full mt19937_64 state.
    std::uint64_t s = master_seed ^ (stream_id * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL);
    std::uint32_t words[8];
    for (int i = 0; i < 4; ++i) {
        std::uint64_t w = splitmix64(s);
        words[2 * i] = static_cast<std::uint32_t>(w);
        words[2 * i + 1] = static_cast<std::uint32_t>(w >> 32);
    }
    std::seed_seq seq(words, words + 8);
    return std::mt19937_64(seq);
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed),
      stream_id_(stream_id),
      engine_(make_engine(master_seed, stream_id)),
      normal_(0.0, 1.0) {}

double RngStream::normal() { return normal_(engine_); }

double RngStream::uniform01() {
    // 53 random bits into [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("RngStream::uniform_below: bound must be >= 1");
    std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
    return dist(engine_);
}

ComplexVector sample_complex_standard_normal(RngStream& rng, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("sample_complex_standard_normal: n must be >= 1");
    constexpr double kCompStd = 0.70710678118654752440; // sqrt(1/2)
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double re = kCompStd * rng.normal();
        const double im = kCompStd * rng.normal();
        v[i] = cxd(re, im);
    }
    return v;
}

} // namespace mimosec
