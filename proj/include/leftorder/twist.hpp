#pragma once

#include "leftorder/gamma.hpp"
#include "leftorder/sign.hpp"
#include "leftorder/words.hpp"

namespace leftorder::twist {

// Bridge from 4-surgery data on the m-twist knot to the Gamma engine:
// realizes G_{2m+1} = < a, b | a^2 = b^{2m+1} > (the (2, 2m+1) torus-knot
// group) as Gamma_n, with the meridian mu = b^{-m} a and the Seifert
// regular fiber h = a^2.
//
//   m > 0:  n = 2m,      c = b a^{-1},  Delta = h
//   m < 0:  n = -2m - 2,  c = a b,       Delta = h^{-1}
//
// m = 0 and m = -1 (unknot / trefoil degenerations) are rejected.
// m = 1 is the figure-eight case and is permitted as a regression anchor.

inline const Alphabet kAlphabet{"ab"};

class TwistKnotGroup {
 public:
  // Throws std::invalid_argument for m in {0, -1}.
  explicit TwistKnotGroup(long long m);

  long long m() const { return m_; }
  const gamma::GammaGroup& group() const { return gamma_; }

  // True iff Delta coincides with the fiber h (m > 0); for m < 0,
  // Delta = h^{-1}.
  bool delta_equals_fiber() const { return m_ > 0; }

 private:
  long long m_;
  gamma::GammaGroup gamma_;
};

// Image of an {a,b}-word under the isomorphism onto Gamma_n, substituting
// a = c^{-1} b (m > 0) or a = c b^{-1} (m < 0); output is freely reduced
// over {b, c}.
Word embed(const TwistKnotGroup& T, const Word& w);

// The meridian b^{-m} a as a {b,c}-word.
Word meridian(const TwistKnotGroup& T);

// The regular fiber a^2 as a {b,c}-word; gamma-equal to Delta^{+-1}
// according to the sign of m.
Word fiber(const TwistKnotGroup& T);

// mu^r h^s as a reduced {b,c}-word.
Word boundary_element(const TwistKnotGroup& T, long long r, long long s);

// Sign of w under the conjugate ordering <^g, i.e. the Navas sign of
// g^{-1} w g.
Sign sign_conj(const TwistKnotGroup& T, const Word& w, const Word& g);

}  // namespace leftorder::twist
