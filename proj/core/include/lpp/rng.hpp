#pragma once

#include <cstdint>
#include <random>

namespace lpp {

// std::mt19937_64 is bit-exact across standard libraries; the conversion to a
// real number below is ours, so the whole draw sequence is portable.
using Rng = std::mt19937_64;

// Uniform variate on the open interval (0, 1) with 53 random bits.
double uniform_open(Rng& rng);

std::uint64_t splitmix64(std::uint64_t& state);

// Independent stream for replicate `replicate` of the sub-campaign labelled
// `stream` (an n value, a trial index, ...). Pure function of its arguments.
Rng replicate_rng(std::uint64_t master_seed, std::uint64_t stream,
                  std::uint64_t replicate);

}  // namespace lpp
