#include "leftorder/twist.hpp"

#include <stdexcept>

namespace leftorder::twist {

namespace {

long long gamma_parameter(long long m) {
  if (m == 0 || m == -1) {
    throw std::invalid_argument(
        "twist parameter m must not be 0 or -1 (degenerate unknot/trefoil "
        "cases)");
  }
  return m > 0 ? 2 * m : -2 * m - 2;
}

}  // namespace

TwistKnotGroup::TwistKnotGroup(long long m)
    : m_(m), gamma_(gamma_parameter(m)) {}

Word embed(const TwistKnotGroup& T, const Word& w) {
  if (!(w.alphabet() == kAlphabet)) {
    throw std::invalid_argument("twist-knot words use the alphabet {a, b}");
  }
  Word out(gamma::kAlphabet);
  const bool positive_m = T.m() > 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == Gen::B) {
      out.append(Gen::B, l.exp);
      continue;
    }
    // a = c^{-1} b for m > 0, a = c b^{-1} for m < 0.
    long long reps = l.exp < 0 ? -l.exp : l.exp;
    for (long long i = 0; i < reps; ++i) {
      if (positive_m) {
        if (l.exp > 0) {
          out.append(Gen::C, -1);
          out.append(Gen::B, 1);
        } else {
          out.append(Gen::B, -1);
          out.append(Gen::C, 1);
        }
      } else {
        if (l.exp > 0) {
          out.append(Gen::C, 1);
          out.append(Gen::B, -1);
        } else {
          out.append(Gen::B, 1);
          out.append(Gen::C, -1);
        }
      }
    }
  }
  return out;
}

Word meridian(const TwistKnotGroup& T) {
  Word w(kAlphabet);
  w.append(Gen::B, -T.m());
  w.append(Gen::A, 1);
  return embed(T, w);
}

Word fiber(const TwistKnotGroup& T) {
  Word w(kAlphabet);
  w.append(Gen::A, 2);
  return embed(T, w);
}

Word boundary_element(const TwistKnotGroup& T, long long r, long long s) {
  return concat(power(meridian(T), r), power(fiber(T), s));
}

Sign sign_conj(const TwistKnotGroup& T, const Word& w, const Word& g) {
  Word conjugated = concat(invert(g), concat(w, g));
  return gamma::sign(T.group(), conjugated);
}

}  // namespace leftorder::twist
