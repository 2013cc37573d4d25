#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leftorder/klein.hpp"
#include "leftorder/sampling.hpp"
#include "leftorder/sign.hpp"
#include "leftorder/twist.hpp"
#include "leftorder/words.hpp"

namespace leftorder::glue {

// The gluing map phi between the peripheral subgroups of the torus-knot
// exterior and the twisted I-bundle over the Klein bottle, the
// ordering-selection rule, the compatibility checker, and the lemma
// verification sweeps.
//
// Orientation convention: 1 <^g w is evaluated as
// sign(g^{-1} w g) = positive, which matches the conjugation action
// g(P) = g^{-1} P g on positive cones.
//
// Case evaluation is pure; reports are assembled in a canonical order,
// so a given seed pins the report bytes regardless of how a caller
// distributes the cases.

// mu^r h^s in the peripheral subgroup H1, free abelian on (mu, h).
struct BoundaryElement {
  long long r = 0;
  long long s = 0;
};

// phi(mu^r h^s) = y^{-r} (y^{-1} x^2)^s; canonical closed form
// (2s, -(r+s)).
klein::KleinForm phi(BoundaryElement e);

// The ordering of the Klein-bottle group selected for the conjugate
// ordering <^g:
//   m > 0: +- if g^{-1} mu g is positive, else ++   (family L+)
//   m < 0: -- if g^{-1} mu g is positive, else -+   (family L-)
klein::OrderingId choose_ordering(const twist::TwistKnotGroup& T,
                                  const Word& g);

struct Violation {
  std::string g;  // conjugator (or sampled element) as a word string
  long long r = 0;
  long long s = 0;
  std::string detail;
};

// For every (r, s) in [-rmax, rmax] x [-smax, smax] with
// 1 <^g mu^r h^s, requires phi(mu^r h^s) to be positive under
// choose_ordering(T, g); returns the counterexamples (expected empty).
std::vector<Violation> check_compat(const twist::TwistKnotGroup& T,
                                    const Word& g, long long rmax,
                                    long long smax);

// Checks that the positives of H1 under <^g are exactly
//   m > 0: {s > 0} union {s = 0, sign-matched r}
//   m < 0: {s < 0} union {s = 0, sign-matched r}
// where the r-clause is r > 0 if g^{-1} mu g > 1 and r < 0 otherwise.
std::vector<Violation> check_property_s(const twist::TwistKnotGroup& T,
                                        const Word& g, long long rmax,
                                        long long smax);

// Per-conjugator outcome inside a sweep report.
struct ConjugatorRecord {
  std::string g;
  Sign sign_of_conjugated_mu = Sign::Trivial;
  klein::OrderingId chosen = klein::OrderingId::PP;
  long long cases_checked = 0;
  long long violations = 0;
};

struct SweepParams {
  long long rmax = 12;
  long long smax = 12;
  long long samples = 200;  // random conjugators on top of the battery
  long long glen = 10;      // max conjugator length
  std::uint64_t seed = 1;
};

// Structured outcome of a lemma sweep or compatibility check.
// pass iff violations is empty.
struct SweepReport {
  std::string command;  // "compat" or "verify"
  std::string lemma;    // verify sweeps only
  long long m = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, long long>> params;  // echoed in order
  long long cases = 0;
  std::vector<Violation> violations;
  std::vector<ConjugatorRecord> conjugators;
  // Ordering-selection branches exercised, indexed ++, +-, -+, --.
  std::array<long long, 4> branches{};
  bool pass = true;
  long long elapsed_ms = 0;
};

// Desk-scale compatibility sweep: battery + seeded random conjugators,
// full grid per conjugator.
SweepReport run_compat(const twist::TwistKnotGroup& T, const SweepParams& p);

// Meridian and fiber signs match the sign of m; fiber is Delta^{+-1}.
SweepReport verify_meridian(const twist::TwistKnotGroup& T);

// mu^r < Delta for all r in [-rmax, rmax].
SweepReport verify_mu_delta(const twist::TwistKnotGroup& T, long long rmax);

// Delta^{-1} < g^{-1} mu^r g < Delta on the given conjugators and
// r in [-rmax, rmax].
SweepReport verify_interval(const twist::TwistKnotGroup& T,
                            std::span<const Word> conjugators,
                            long long rmax);
SweepReport run_interval(const twist::TwistKnotGroup& T, long long rmax,
                         long long samples, long long glen,
                         std::uint64_t seed);

// Floor bracket Delta^ell <= w < Delta^{ell+1} on seeded samples,
// checked through independent comparator calls.
SweepReport verify_cofinal(const twist::TwistKnotGroup& T, long long samples,
                           std::uint64_t seed);

// Property-S dichotomy for one conjugator / swept over battery + samples.
SweepReport verify_property_s(const twist::TwistKnotGroup& T, const Word& g,
                              long long rmax, long long smax);
SweepReport run_property_s(const twist::TwistKnotGroup& T,
                           const SweepParams& p);

// Conjugation on the Klein-bottle orderings preserves the families L+
// and L-, and the closed-form conjugate_ordering matches the definition
// g(P) = g^{-1} P g on a deterministic element battery.
SweepReport verify_klein_normality(long long samples, std::uint64_t seed);

// Renders the fundamental-group presentation of the glued manifold with
// mu and h expanded in a, b.  Throws for m in {0, -1}.
std::string pi1_presentation(long long m);

// CSV "r,s,sign_H1,klein_s,klein_r,sign_image", one row per grid point,
// rows sorted by (s, r).
std::string cone_map_csv(const twist::TwistKnotGroup& T, const Word& g,
                         long long rmax, long long smax);

}  // namespace leftorder::glue
