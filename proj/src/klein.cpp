#include "leftorder/klein.hpp"

#include <stdexcept>

namespace leftorder::klein {

namespace {

long long parity_flip(long long value, long long exponent) {
  return (exponent % 2 == 0) ? value : -value;
}

}  // namespace

KleinForm mul(KleinForm a, KleinForm b) {
  return KleinForm{checked_add(a.s, b.s),
                   checked_add(parity_flip(a.r, b.s), b.r)};
}

KleinForm inverse(KleinForm a) {
  // (s, r)^{-1} = (-s, -r * (-1)^s)
  return KleinForm{-a.s, -parity_flip(a.r, a.s)};
}

KleinForm power(KleinForm a, long long k) {
  KleinForm base = k < 0 ? inverse(a) : a;
  long long reps = k < 0 ? -k : k;
  KleinForm out;
  for (long long i = 0; i < reps; ++i) {
    out = mul(out, base);
  }
  return out;
}

KleinForm canonical(const Word& w) {
  if (!(w.alphabet() == kAlphabet)) {
    throw std::invalid_argument("Klein-bottle words use the alphabet {x, y}");
  }
  KleinForm acc;
  for (const Letter& l : w.letters()) {
    if (l.gen == Gen::X) {
      acc = mul(acc, KleinForm{l.exp, 0});
    } else {
      acc = mul(acc, KleinForm{0, l.exp});
    }
  }
  return acc;
}

Family family_of(OrderingId o) {
  return (o == OrderingId::PP || o == OrderingId::PM) ? Family::LPlus
                                                      : Family::LMinus;
}

OrderingId ordering_from_name(std::string_view text) {
  if (text == "++") return OrderingId::PP;
  if (text == "+-") return OrderingId::PM;
  if (text == "-+") return OrderingId::MP;
  if (text == "--") return OrderingId::MM;
  throw std::invalid_argument("unknown ordering '" + std::string(text) +
                              "' (expected ++, +-, -+ or --)");
}

Sign sign_under(KleinForm e, OrderingId o) {
  if (e.is_identity()) return Sign::Trivial;
  const bool x_positive = (o == OrderingId::PP || o == OrderingId::PM);
  const bool y_positive = (o == OrderingId::PP || o == OrderingId::MP);
  bool positive;
  if (e.s != 0) {
    positive = x_positive ? (e.s > 0) : (e.s < 0);
  } else {
    positive = y_positive ? (e.r > 0) : (e.r < 0);
  }
  return positive ? Sign::Positive : Sign::Negative;
}

long long q_image(KleinForm e) { return e.s; }

OrderingId conjugate_ordering(OrderingId o, KleinForm g) {
  if (g.s % 2 == 0) return o;
  switch (o) {
    case OrderingId::PP: return OrderingId::PM;
    case OrderingId::PM: return OrderingId::PP;
    case OrderingId::MP: return OrderingId::MM;
    case OrderingId::MM: return OrderingId::MP;
  }
  return o;
}

std::string render(KleinForm e) {
  Word w(kAlphabet);
  w.append(Gen::X, e.s);
  w.append(Gen::Y, e.r);
  return to_string(w);
}

}  // namespace leftorder::klein
