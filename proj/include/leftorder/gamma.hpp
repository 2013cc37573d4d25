#pragma once

#include <string>
#include <vector>

#include "leftorder/sign.hpp"
#include "leftorder/words.hpp"

namespace leftorder::gamma {

// Exact word problem and the Navas left-ordering for
//
//   Gamma_n = < b, c | b = c b^n c >,   n >= 1,
//
// the torus-knot group of type (2, n+1) when n is even.  Two canonical
// forms are used:
//
//  * SyllableForm -- the alternating normal form in the isomorphic
//    central-extension model < a, b | a^2 = b^{n+1} > (a = b^n c), which
//    serves as the equality oracle;
//  * NavasForm -- u * Delta^ell with u a positive {b,c}-word, which
//    decides signs under the Navas ordering (positive cone = semigroup
//    generated by {b, c}).
//
// GammaGroup is an immutable descriptor and every operation here is a
// pure function, so unrestricted parallel use is safe.

inline const Alphabet kAlphabet{"bc"};
// Accepted by parse(): d denotes Delta = b^{n+1}.
inline const Alphabet kAlphabetWithDelta{"bcd"};

class GammaGroup {
 public:
  // Throws std::invalid_argument unless n >= 1.
  explicit GammaGroup(long long n);

  long long n() const { return n_; }

  Word identity() const { return Word::identity(kAlphabet); }

  // Delta = b^{n+1}, a generator of the center.
  Word delta() const;

  // Parses a {b,c,d}-word, expanding d to b^{n+1}.
  Word parse(std::string_view text) const;

 private:
  long long n_;
};

// Canonical form Delta^ell b^{head} a b^{tail[0]} a ... a b^{tail[k-1]}
// in the model < a, b | a^2 = b^{n+1} >, with head in [0, n], interior
// tail entries in [1, n] and the last tail entry in [0, n].  Two
// SyllableForms denote equal group elements iff they are identical.
struct SyllableForm {
  long long ell = 0;
  long long head = 0;
  std::vector<long long> tail;

  bool operator==(const SyllableForm&) const = default;
};

// One b-run and the c-run following it: b^{b_exp} c^{c_exp}.
struct NavasRun {
  long long b_exp = 0;
  long long c_exp = 0;
  bool operator==(const NavasRun&) const = default;
};

// Normal form u * Delta^ell with
//
//   u = c^{lead_c} b^{m_1} c^{n_1} ... b^{m_k} c^{n_k}
//
// subject to:
//   (i)   interior c-runs are nonempty; lead_c >= 0 and the final c-run
//         may be empty;
//   (ii)  b-exponents flanked by c on both sides lie in [1, n-1];
//   (iii) the bound relaxes to [1, n] at an open end of u: for m_1 when
//         lead_c = 0, and for m_k when the final c-run is empty.  (A
//         single run reaches n under either relaxation; requiring both
//         clauses at once would leave c^j b^n without any normal form.)
struct NavasForm {
  long long ell = 0;
  long long lead_c = 0;            // n_0
  std::vector<NavasRun> runs;      // (m_i, n_i) for i = 1..k

  bool u_empty() const { return lead_c == 0 && runs.empty(); }
  bool operator==(const NavasForm&) const = default;
};

// Computes the unique SyllableForm of a {b,c}-word by substituting
// c -> b^{-n} a and normalizing with the rules a^2 -> Delta,
// a^{-1} -> a Delta^{-1}, b^{+-(n+1)} -> Delta^{+-1},
// b^{-1} -> b^n Delta^{-1} (Delta central).  Total on {b,c}-words.
SyllableForm syllable_form(const GammaGroup& G, const Word& w);

// Product of two canonical forms.
SyllableForm mul(const GammaGroup& G, const SyllableForm& f1,
                 const SyllableForm& f2);

// The Navas normal form of the element denoted by s (substitutes
// a -> b^n c and extracts central powers).
NavasForm navas_form(const GammaGroup& G, const SyllableForm& s);
NavasForm navas_form(const GammaGroup& G, const Word& w);

// True iff the form satisfies conditions (i)-(iii) plus basic range
// sanity; exposed so sweeps can assert validity of every output.
bool is_valid(const GammaGroup& G, const NavasForm& f);

// Structural validity of a SyllableForm (entry ranges as defined above).
bool is_valid(const GammaGroup& G, const SyllableForm& f);

bool equal(const GammaGroup& G, const Word& w1, const Word& w2);

// Sign under the Navas ordering: with normal form u * Delta^ell,
// positive iff (u nonempty and ell >= 0) or (u empty and ell > 0).
Sign sign(const GammaGroup& G, const Word& w);
Sign sign(const GammaGroup& G, const NavasForm& f);

// Strict total order: less(w1, w2) iff sign(w1^{-1} w2) is positive.
bool less(const GammaGroup& G, const Word& w1, const Word& w2);

struct CofinalFloor {
  long long ell = 0;
  bool exact = false;  // true iff w is itself a power of Delta
  bool operator==(const CofinalFloor&) const = default;
};

// Floor bracket Delta^ell <= w < Delta^{ell+1}, strict on the left iff
// exact is false.
CofinalFloor cofinal_floor(const GammaGroup& G, const Word& w);

// Expansion back to a reduced {b,c}-word (a -> b^n c, Delta -> b^{n+1});
// syllable_form(expand(f)) == f.
Word expand(const GammaGroup& G, const SyllableForm& f);
Word expand(const GammaGroup& G, const NavasForm& f);

// Renders "c^{n0} b^{m1} c^{n1} ... d^{ell}" in the word grammar with
// d = Delta, omitting zero-exponent runs; trivial u with ell = 0 renders
// as "1".
std::string render(const NavasForm& f);

std::string render(const SyllableForm& f);

}  // namespace leftorder::gamma
