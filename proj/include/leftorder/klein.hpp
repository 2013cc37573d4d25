#pragma once

#include <string>

#include "leftorder/sign.hpp"
#include "leftorder/words.hpp"

namespace leftorder::klein {

// The Klein-bottle group K = < x, y | x^{-1} y x = y^{-1} > with its
// canonical (s, r) coordinates and its four left-orderings.
//
// Elements are stored canonically as x^s y^r; the multiplication law
//
//   (s1, r1) * (s2, r2) = (s1 + s2, r1 * (-1)^{s2} + r2)
//
// makes every operation O(1).  All value types and functions here are
// pure; unrestricted concurrency is fine.

inline const Alphabet kAlphabet{"xy"};

struct KleinForm {
  long long s = 0;  // x-exponent
  long long r = 0;  // y-exponent

  bool is_identity() const { return s == 0 && r == 0; }
  bool operator==(const KleinForm&) const = default;
};

KleinForm mul(KleinForm a, KleinForm b);
KleinForm inverse(KleinForm a);
KleinForm power(KleinForm a, long long k);

// Canonical coordinates of an {x,y}-word, obtained by moving x-letters
// left via y^a x^e = x^e y^{a * (-1)^e}.
KleinForm canonical(const Word& w);

// The four left-orderings, named by their two sign clauses: the first
// index is the sign of the x-clause (s > 0 vs s < 0), the second is the
// sign of the y-clause used when s = 0.
enum class OrderingId { PP, PM, MP, MM };

enum class Family { LPlus, LMinus };

// PP and PM form L+; MP and MM form L-.
Family family_of(OrderingId o);

constexpr std::string_view name(OrderingId o) {
  switch (o) {
    case OrderingId::PP: return "++";
    case OrderingId::PM: return "+-";
    case OrderingId::MP: return "-+";
    case OrderingId::MM: return "--";
  }
  return "?";
}

constexpr std::string_view name(Family f) {
  return f == Family::LPlus ? "L+" : "L-";
}

// Accepts "++", "+-", "-+", "--".  Throws std::invalid_argument.
OrderingId ordering_from_name(std::string_view text);

// Sign of x^s y^r under the given ordering:
//   ++ : positive iff s > 0, or s = 0 and r > 0
//   +- : positive iff s > 0, or s = 0 and r < 0
//   -+ : positive iff s < 0, or s = 0 and r > 0
//   -- : positive iff s < 0, or s = 0 and r < 0
Sign sign_under(KleinForm e, OrderingId o);

// Image under the quotient map q : K -> <x> killing y; returns s.
long long q_image(KleinForm e);

// The ordering whose positive cone is g^{-1} P(o) g: the x-clause is
// unchanged and the y-clause flips iff g.s is odd.
OrderingId conjugate_ordering(OrderingId o, KleinForm g);

// "x^s y^r" in the word grammar, omitting zero-exponent runs; the
// identity renders as "1".
std::string render(KleinForm e);

}  // namespace leftorder::klein
