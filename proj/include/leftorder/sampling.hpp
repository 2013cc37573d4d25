#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leftorder/gamma.hpp"
#include "leftorder/words.hpp"

namespace leftorder::sampling {

// Deterministic seeded sampling used by verification sweeps and tests.
// mt19937_64 output is fully specified by the standard; bounded draws go
// through below() rather than std::uniform_int_distribution (whose
// mapping is implementation-defined), so a seed pins byte-identical
// reports on any platform.

using Rng = std::mt19937_64;

// Uniform draw from [0, k), k >= 1, by rejection sampling.
std::uint64_t below(Rng& rng, std::uint64_t k);

// Freely reduced word of exactly `length` single letters over `alphabet`
// (no letter immediately followed by its inverse).
Word random_reduced_word(Rng& rng, const Alphabet& alphabet,
                         long long length);

// The fixed conjugator battery
//   { 1, b, c, b^-1, c^-1, bc, cb^-1, Delta, Delta^-1 b }
// as reduced {b,c}-words (Delta = b^{n+1}).
std::vector<Word> conjugator_battery(const gamma::GammaGroup& G);

// `count` random reduced {b,c}-words of length 1..max_length.
std::vector<Word> sample_conjugators(Rng& rng, long long count,
                                     long long max_length);

}  // namespace leftorder::sampling
