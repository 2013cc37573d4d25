#include "leftorder/glue.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "leftorder/gamma.hpp"

namespace leftorder::glue {

namespace {

using gamma::GammaGroup;
using klein::KleinForm;
using klein::OrderingId;
using twist::TwistKnotGroup;

class Stopwatch {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Battery first, then seeded random words: index order is the report
// order.
std::vector<Word> battery_plus_samples(const GammaGroup& G, long long samples,
                                       long long glen, std::uint64_t seed) {
  auto gs = sampling::conjugator_battery(G);
  sampling::Rng rng(seed);
  auto extra = sampling::sample_conjugators(rng, samples, glen);
  gs.insert(gs.end(), extra.begin(), extra.end());
  return gs;
}

std::string expected_vs_actual(Sign actual, Sign expected) {
  std::string out = "sign is ";
  out += to_string(actual);
  out += ", expected ";
  out += to_string(expected);
  return out;
}

}  // namespace

KleinForm phi(BoundaryElement e) {
  const KleinForm x{1, 0};
  const KleinForm y{0, 1};
  // h maps to y^{-1} x^2 = (2, -1); fold the group law rather than the
  // closed form (2s, -(r+s)), which tests check against this.
  const KleinForm h_image = klein::mul(klein::inverse(y), klein::power(x, 2));
  return klein::mul(klein::power(klein::inverse(y), e.r),
                    klein::power(h_image, e.s));
}

OrderingId choose_ordering(const TwistKnotGroup& T, const Word& g) {
  const Sign s = twist::sign_conj(T, twist::meridian(T), g);
  if (T.m() > 0) {
    return s == Sign::Positive ? OrderingId::PM : OrderingId::PP;
  }
  return s == Sign::Positive ? OrderingId::MM : OrderingId::MP;
}

std::vector<Violation> check_compat(const TwistKnotGroup& T, const Word& g,
                                    long long rmax, long long smax) {
  std::vector<Violation> out;
  const OrderingId chosen = choose_ordering(T, g);
  const std::string gs = to_string(g);
  for (long long s = -smax; s <= smax; ++s) {
    for (long long r = -rmax; r <= rmax; ++r) {
      const Word w = twist::boundary_element(T, r, s);
      if (twist::sign_conj(T, w, g) != Sign::Positive) continue;
      const KleinForm image = phi({r, s});
      if (klein::sign_under(image, chosen) != Sign::Positive) {
        out.push_back({gs, r, s,
                       "1 <^g mu^r h^s but phi image " + klein::render(image) +
                           " is not positive under " +
                           std::string(klein::name(chosen))});
      }
    }
  }
  return out;
}

std::vector<Violation> check_property_s(const TwistKnotGroup& T, const Word& g,
                                        long long rmax, long long smax) {
  std::vector<Violation> out;
  const Sign mu_sign = twist::sign_conj(T, twist::meridian(T), g);
  const std::string gs = to_string(g);
  for (long long s = -smax; s <= smax; ++s) {
    for (long long r = -rmax; r <= rmax; ++r) {
      const Word w = twist::boundary_element(T, r, s);
      const Sign actual = twist::sign_conj(T, w, g);
      Sign expected;
      if (r == 0 && s == 0) {
        expected = Sign::Trivial;
      } else {
        // s-clause by the sign of m; on the s = 0 line the r-clause
        // follows the sign of g^{-1} mu g.
        bool positive;
        if (T.m() > 0) {
          positive = s > 0;
        } else {
          positive = s < 0;
        }
        if (s == 0) positive = (mu_sign == Sign::Positive) == (r > 0);
        expected = positive ? Sign::Positive : Sign::Negative;
      }
      if (actual != expected) {
        out.push_back({gs, r, s, expected_vs_actual(actual, expected)});
      }
    }
  }
  return out;
}

SweepReport run_compat(const TwistKnotGroup& T, const SweepParams& p) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "compat";
  rep.m = T.m();
  rep.seed = p.seed;
  rep.params = {{"rmax", p.rmax},
                {"smax", p.smax},
                {"samples", p.samples},
                {"glen", p.glen}};
  const Word mu = twist::meridian(T);
  const long long grid = (2 * p.rmax + 1) * (2 * p.smax + 1);
  for (const Word& g :
       battery_plus_samples(T.group(), p.samples, p.glen, p.seed)) {
    ConjugatorRecord rec;
    rec.g = to_string(g);
    rec.sign_of_conjugated_mu = twist::sign_conj(T, mu, g);
    rec.chosen = choose_ordering(T, g);
    rec.cases_checked = grid;
    auto v = check_compat(T, g, p.rmax, p.smax);
    rec.violations = static_cast<long long>(v.size());
    rep.branches[static_cast<int>(rec.chosen)] += 1;
    rep.cases += grid;
    for (auto& x : v) rep.violations.push_back(std::move(x));
    rep.conjugators.push_back(std::move(rec));
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

SweepReport verify_meridian(const TwistKnotGroup& T) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "verify";
  rep.lemma = "meridian";
  rep.m = T.m();
  const auto& G = T.group();
  const Word mu = twist::meridian(T);
  const Word h = twist::fiber(T);
  const Sign expected = T.m() > 0 ? Sign::Positive : Sign::Negative;
  const Word delta_signed =
      T.delta_equals_fiber() ? G.delta() : invert(G.delta());

  rep.cases = 3;
  if (Sign s = gamma::sign(G, mu); s != expected) {
    rep.violations.push_back(
        {"1", 1, 0, "meridian: " + expected_vs_actual(s, expected)});
  }
  if (Sign s = gamma::sign(G, h); s != expected) {
    rep.violations.push_back(
        {"1", 0, 1, "fiber: " + expected_vs_actual(s, expected)});
  }
  if (!gamma::equal(G, h, delta_signed)) {
    rep.violations.push_back({"1", 0, 1,
                              T.m() > 0 ? "fiber is not Delta"
                                        : "fiber is not Delta^-1"});
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

SweepReport verify_mu_delta(const TwistKnotGroup& T, long long rmax) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "verify";
  rep.lemma = "mu-delta";
  rep.m = T.m();
  rep.params = {{"rmax", rmax}};
  const auto& G = T.group();
  const Word mu = twist::meridian(T);
  const Word delta = G.delta();
  for (long long r = -rmax; r <= rmax; ++r) {
    rep.cases += 1;
    if (!gamma::less(G, power(mu, r), delta)) {
      rep.violations.push_back({"1", r, 0, "mu^r is not < Delta"});
    }
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

SweepReport verify_interval(const TwistKnotGroup& T,
                            std::span<const Word> conjugators,
                            long long rmax) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "verify";
  rep.lemma = "interval";
  rep.m = T.m();
  rep.params = {{"rmax", rmax}};
  const auto& G = T.group();
  const Word mu = twist::meridian(T);
  const Word delta = G.delta();
  const Word delta_inv = invert(delta);
  for (const Word& g : conjugators) {
    const Word ginv = invert(g);
    for (long long r = -rmax; r <= rmax; ++r) {
      rep.cases += 1;
      const Word conj = concat(concat(ginv, power(mu, r)), g);
      const bool lower = gamma::less(G, delta_inv, conj);
      const bool upper = gamma::less(G, conj, delta);
      if (!lower || !upper) {
        std::string detail = "g^-1 mu^r g escapes (Delta^-1, Delta):";
        if (!lower) detail += " not > Delta^-1";
        if (!upper) detail += " not < Delta";
        rep.violations.push_back({to_string(g), r, 0, detail});
      }
    }
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

SweepReport run_interval(const TwistKnotGroup& T, long long rmax,
                         long long samples, long long glen,
                         std::uint64_t seed) {
  const auto gs = battery_plus_samples(T.group(), samples, glen, seed);
  SweepReport rep = verify_interval(T, gs, rmax);
  rep.seed = seed;
  rep.params = {{"rmax", rmax}, {"samples", samples}, {"glen", glen}};
  return rep;
}

SweepReport verify_cofinal(const TwistKnotGroup& T, long long samples,
                           std::uint64_t seed) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "verify";
  rep.lemma = "cofinal";
  rep.m = T.m();
  rep.seed = seed;
  rep.params = {{"samples", samples}};
  const auto& G = T.group();
  sampling::Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    rep.cases += 1;
    const long long len = 1 + static_cast<long long>(sampling::below(rng, 16));
    const Word w = sampling::random_reduced_word(rng, gamma::kAlphabet, len);
    const auto floor = gamma::cofinal_floor(G, w);
    // Bracket is re-checked through the comparator, not by trusting ell.
    const Word lo = power(G.delta(), floor.ell);
    const Word hi = power(G.delta(), floor.ell + 1);
    const bool lower_ok =
        floor.exact ? gamma::equal(G, lo, w) : gamma::less(G, lo, w);
    const bool upper_ok = gamma::less(G, w, hi);
    if (!lower_ok || !upper_ok) {
      std::string detail = "floor bracket fails at ell=";
      detail += std::to_string(floor.ell);
      if (!lower_ok) {
        detail += floor.exact ? "; w != Delta^ell" : "; not Delta^ell < w";
      }
      if (!upper_ok) detail += "; not w < Delta^(ell+1)";
      rep.violations.push_back({to_string(w), floor.ell, 0, detail});
    }
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

SweepReport verify_property_s(const TwistKnotGroup& T, const Word& g,
                              long long rmax, long long smax) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "verify";
  rep.lemma = "prop-s";
  rep.m = T.m();
  rep.params = {{"rmax", rmax}, {"smax", smax}};
  rep.cases = (2 * rmax + 1) * (2 * smax + 1);
  rep.violations = check_property_s(T, g, rmax, smax);

  ConjugatorRecord rec;
  rec.g = to_string(g);
  rec.sign_of_conjugated_mu = twist::sign_conj(T, twist::meridian(T), g);
  rec.chosen = choose_ordering(T, g);
  rec.cases_checked = rep.cases;
  rec.violations = static_cast<long long>(rep.violations.size());
  rep.branches[static_cast<int>(rec.chosen)] += 1;
  rep.conjugators.push_back(std::move(rec));

  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

SweepReport run_property_s(const TwistKnotGroup& T, const SweepParams& p) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "verify";
  rep.lemma = "prop-s";
  rep.m = T.m();
  rep.seed = p.seed;
  rep.params = {{"rmax", p.rmax},
                {"smax", p.smax},
                {"samples", p.samples},
                {"glen", p.glen}};
  const Word mu = twist::meridian(T);
  const long long grid = (2 * p.rmax + 1) * (2 * p.smax + 1);
  for (const Word& g :
       battery_plus_samples(T.group(), p.samples, p.glen, p.seed)) {
    ConjugatorRecord rec;
    rec.g = to_string(g);
    rec.sign_of_conjugated_mu = twist::sign_conj(T, mu, g);
    rec.chosen = choose_ordering(T, g);
    rec.cases_checked = grid;
    auto v = check_property_s(T, g, p.rmax, p.smax);
    rec.violations = static_cast<long long>(v.size());
    rep.branches[static_cast<int>(rec.chosen)] += 1;
    rep.cases += grid;
    for (auto& x : v) rep.violations.push_back(std::move(x));
    rep.conjugators.push_back(std::move(rec));
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

SweepReport verify_klein_normality(long long samples, std::uint64_t seed) {
  Stopwatch timer;
  SweepReport rep;
  rep.command = "verify";
  rep.lemma = "klein-normal";
  rep.m = 0;  // no twist-knot parameter in play
  rep.seed = seed;
  rep.params = {{"samples", samples}};

  // Fixed membership battery: all x^s y^r with |s|, |r| <= 2.
  std::vector<KleinForm> elements;
  for (long long s = -2; s <= 2; ++s) {
    for (long long r = -2; r <= 2; ++r) elements.push_back({s, r});
  }
  constexpr OrderingId kOrders[] = {OrderingId::PP, OrderingId::PM,
                                    OrderingId::MP, OrderingId::MM};

  sampling::Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    const KleinForm g{static_cast<long long>(sampling::below(rng, 21)) - 10,
                      static_cast<long long>(sampling::below(rng, 21)) - 10};
    const std::string gs = klein::render(g);
    for (OrderingId o : kOrders) {
      const OrderingId conj = klein::conjugate_ordering(o, g);
      rep.cases += 1;
      if (klein::family_of(conj) != klein::family_of(o)) {
        rep.violations.push_back(
            {gs, 0, 0,
             std::string("conjugation exits the family: ") +
                 std::string(klein::name(o)) + " -> " +
                 std::string(klein::name(conj))});
      }
      // Closed-form flip rule vs the definition g(P) = g^{-1} P g:
      // w is conj-positive iff g w g^{-1} is o-positive.
      for (const KleinForm& w : elements) {
        rep.cases += 1;
        const KleinForm moved =
            klein::mul(klein::mul(g, w), klein::inverse(g));
        if (klein::sign_under(w, conj) != klein::sign_under(moved, o)) {
          rep.violations.push_back(
              {gs, w.r, w.s,
               std::string("conjugate of ") + std::string(klein::name(o)) +
                   " disagrees with g(P)=g^-1 P g at " + klein::render(w)});
        }
      }
    }
  }
  rep.pass = rep.violations.empty();
  rep.elapsed_ms = timer.ms();
  return rep;
}

std::string pi1_presentation(long long m) {
  const TwistKnotGroup T(m);  // validates m
  Word torus_rhs(twist::kAlphabet);
  torus_rhs.append(Gen::B, checked_add(checked_mul(2, m), 1));
  Word mu(twist::kAlphabet);
  mu.append(Gen::B, -m);
  mu.append(Gen::A, 1);

  std::string out = "< a, b, x, y | a^2 = ";
  out += to_string(torus_rhs);
  out += ", x^-1 y x = y^-1, ";
  out += to_string(mu);
  out += " = y^-1, a^2 = y^-1 x^2 >";
  return out;
}

std::string cone_map_csv(const TwistKnotGroup& T, const Word& g,
                         long long rmax, long long smax) {
  const OrderingId chosen = choose_ordering(T, g);
  std::ostringstream out;
  out << "r,s,sign_H1,klein_s,klein_r,sign_image\n";
  for (long long s = -smax; s <= smax; ++s) {
    for (long long r = -rmax; r <= rmax; ++r) {
      const Word w = twist::boundary_element(T, r, s);
      const Sign h1 = twist::sign_conj(T, w, g);
      const KleinForm image = phi({r, s});
      const Sign im = klein::sign_under(image, chosen);
      out << r << ',' << s << ',' << to_char(h1) << ',' << image.s << ','
          << image.r << ',' << to_char(im) << '\n';
    }
  }
  return out.str();
}

}  // namespace leftorder::glue
