#include "leftorder/sampling.hpp"

#include <stdexcept>

namespace leftorder::sampling {

std::uint64_t below(Rng& rng, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("below() needs k >= 1");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % k;
}

Word random_reduced_word(Rng& rng, const Alphabet& alphabet,
                         long long length) {
  std::vector<Gen> gens;
  for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::X, Gen::Y, Gen::D}) {
    if (alphabet.contains(g)) gens.push_back(g);
  }
  if (gens.empty()) throw std::invalid_argument("empty alphabet");

  Word w(alphabet);
  Gen prev_gen = gens[0];
  long long prev_sign = 0;  // 0 marks "no previous letter"
  for (long long i = 0; i < length; ++i) {
    // Single letters (gen, +-1) except the inverse of the previous one.
    const std::uint64_t options =
        prev_sign == 0 ? 2 * gens.size() : 2 * gens.size() - 1;
    std::uint64_t pick = below(rng, options);
    Gen g;
    long long sgn;
    for (std::uint64_t idx = 0;; ++idx) {
      g = gens[idx % gens.size()];
      sgn = idx < gens.size() ? 1 : -1;
      if (prev_sign != 0 && g == prev_gen && sgn == -prev_sign) continue;
      if (pick == 0) break;
      --pick;
    }
    w.append(g, sgn);
    prev_gen = g;
    prev_sign = sgn;
  }
  return w;
}

std::vector<Word> conjugator_battery(const gamma::GammaGroup& G) {
  const long long n = G.n();
  auto make = [&](std::initializer_list<Letter> letters) {
    Word w(gamma::kAlphabet);
    for (const Letter& l : letters) w.append(l.gen, l.exp);
    return w;
  };
  return {
      make({}),
      make({{Gen::B, 1}}),
      make({{Gen::C, 1}}),
      make({{Gen::B, -1}}),
      make({{Gen::C, -1}}),
      make({{Gen::B, 1}, {Gen::C, 1}}),
      make({{Gen::C, 1}, {Gen::B, -1}}),
      make({{Gen::B, n + 1}}),          // Delta
      make({{Gen::B, -n}}),             // Delta^-1 b
  };
}

std::vector<Word> sample_conjugators(Rng& rng, long long count,
                                     long long max_length) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    long long len = 1 + static_cast<long long>(
                            below(rng, static_cast<std::uint64_t>(max_length)));
    out.push_back(random_reduced_word(rng, gamma::kAlphabet, len));
  }
  return out;
}

}  // namespace leftorder::sampling
