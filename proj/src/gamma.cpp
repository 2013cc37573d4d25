#include "leftorder/gamma.hpp"

#include <cassert>
#include <stdexcept>

namespace leftorder::gamma {

namespace {

// Floor division for m > 0; remainder lands in [0, m-1].
long long floor_div(long long v, long long m) {
  long long q = v / m;
  if (v % m != 0 && (v < 0) != (m < 0)) --q;
  return q;
}

// Right-multiplication onto an always-canonical SyllableForm.
//
// Rules applied, with the prefix held in `f` fully normalized before the
// next input letter is consumed (leftmost-innermost order):
//
//   b^{+-(n+1)} -> Delta^{+-1}     b-run reduced mod n+1, quotient to ell
//   b^{-1}      -> b^n Delta^{-1}  (the negative case of the same rule)
//   a a         -> Delta
//   a^{-1}      -> a Delta^{-1}
//   c^{+-1}     -> b^{-n} a / a^{-1} b^n   (substitution at input time)
//
// Delta is central, so its exponent accumulates separately in ell.
//
// Termination: each single input letter triggers O(1) rule applications
// (one b-run reduction, or one a-append/pop), so a pass is linear in the
// single-letter length of the input.  The step budget is a circuit
// breaker against a rule-ordering bug ever turning this into a loop;
// exceeding it throws instead of hanging.
struct Accumulator {
  long long n;
  SyllableForm f;
  long long steps = 0;
  long long budget;

  Accumulator(const GammaGroup& G, long long input_letters)
      : n(G.n()), budget(checked_add(64, checked_mul(16, input_letters))) {}

  void tick() {
    if (++steps > budget) {
      throw std::runtime_error(
          "syllable normalization exceeded its step budget (" +
          std::to_string(budget) + " steps)");
    }
  }

  void mul_b(long long e) {
    tick();
    long long& slot = f.tail.empty() ? f.head : f.tail.back();
    long long v = checked_add(slot, e);
    long long q = floor_div(v, n + 1);
    f.ell = checked_add(f.ell, q);
    slot = v - q * (n + 1);
  }

  void mul_a() {
    tick();
    if (!f.tail.empty() && f.tail.back() == 0) {
      // ... a b^0 a = ... a a = ... Delta
      f.tail.pop_back();
      f.ell = checked_add(f.ell, 1);
    } else {
      f.tail.push_back(0);
    }
  }

  void mul_a_inv() {
    mul_a();
    f.ell = checked_add(f.ell, -1);
  }

  void mul_c(long long e) {
    if (e > 0) {
      for (long long i = 0; i < e; ++i) {
        mul_b(-n);
        mul_a();
      }
    } else {
      for (long long i = 0; i < -e; ++i) {
        mul_a_inv();
        mul_b(n);
      }
    }
  }

  void mul_letter(const Letter& l) {
    switch (l.gen) {
      case Gen::B: mul_b(l.exp); return;
      case Gen::C: mul_c(l.exp); return;
      default:
        throw std::invalid_argument("gamma words use the alphabet {b, c}");
    }
  }

  void mul_form(const SyllableForm& g) {
    f.ell = checked_add(f.ell, g.ell);
    mul_b(g.head);
    for (long long t : g.tail) {
      mul_a();
      mul_b(t);
    }
  }
};

}  // namespace

GammaGroup::GammaGroup(long long n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("GammaGroup requires n >= 1, got " +
                                std::to_string(n));
  }
}

Word GammaGroup::delta() const {
  Word w(kAlphabet);
  w.append(Gen::B, n_ + 1);
  return w;
}

Word GammaGroup::parse(std::string_view text) const {
  Word raw = parse_word(text, kAlphabetWithDelta);
  Word out(kAlphabet);
  for (const Letter& l : raw.letters()) {
    if (l.gen == Gen::D) {
      out.append(Gen::B, checked_mul(l.exp, n_ + 1));
    } else {
      out.append(l.gen, l.exp);
    }
  }
  return out;
}

SyllableForm syllable_form(const GammaGroup& G, const Word& w) {
  if (!(w.alphabet() == kAlphabet)) {
    throw std::invalid_argument("gamma words use the alphabet {b, c}");
  }
  Accumulator acc(G, w.length());
  for (const Letter& l : w.letters()) {
    acc.mul_letter(l);
  }
  return acc.f;
}

SyllableForm mul(const GammaGroup& G, const SyllableForm& f1,
                 const SyllableForm& f2) {
  long long size = static_cast<long long>(f2.tail.size()) + 4;
  Accumulator acc(G, checked_mul(size, 4));
  acc.f = f1;
  acc.mul_form(f2);
  return acc.f;
}

NavasForm navas_form(const GammaGroup& G, const SyllableForm& s) {
  const long long n = G.n();
  NavasForm out;
  out.ell = s.ell;

  auto add_b = [&](long long v) {
    if (v == 0) return;
    out.runs.push_back(NavasRun{v, 0});
  };
  auto add_c = [&] {
    if (out.runs.empty()) {
      out.lead_c = checked_add(out.lead_c, 1);
    } else {
      out.runs.back().c_exp = checked_add(out.runs.back().c_exp, 1);
    }
  };

  if (s.tail.empty()) {
    add_b(s.head);
    return out;
  }

  // Substituting a -> b^n c in Delta^ell b^{j0} a b^{j1} ... a b^{jk}
  // yields b-runs j0+n, j1+n, ..., j(k-1)+n, jk separated by single c's.
  // Every non-final run except b^n (the j=0 case at the front) carries
  // one Delta: b^{j+n} = Delta b^{j-1}.  Zero runs drop out, merging the
  // surrounding c's.
  if (s.head == 0) {
    add_b(n);
  } else {
    out.ell = checked_add(out.ell, 1);
    add_b(s.head - 1);
  }
  for (std::size_t i = 0; i + 1 < s.tail.size(); ++i) {
    add_c();
    out.ell = checked_add(out.ell, 1);
    add_b(s.tail[i] - 1);
  }
  add_c();
  add_b(s.tail.back());
  return out;
}

NavasForm navas_form(const GammaGroup& G, const Word& w) {
  return navas_form(G, syllable_form(G, w));
}

bool is_valid(const GammaGroup& G, const SyllableForm& f) {
  const long long n = G.n();
  if (f.head < 0 || f.head > n) return false;
  for (std::size_t i = 0; i < f.tail.size(); ++i) {
    long long lo = (i + 1 == f.tail.size()) ? 0 : 1;
    if (f.tail[i] < lo || f.tail[i] > n) return false;
  }
  return true;
}

bool is_valid(const GammaGroup& G, const NavasForm& f) {
  const long long n = G.n();
  if (f.lead_c < 0) return false;
  const std::size_t k = f.runs.size();
  for (std::size_t i = 0; i < k; ++i) {
    const NavasRun& run = f.runs[i];
    if (run.b_exp < 1 || run.c_exp < 0) return false;
    // (i): interior c-runs are nonempty.
    if (i + 1 < k && run.c_exp < 1) return false;
    // (ii)/(iii): a b-exponent reaches n only at an open end of u (the
    // first run with lead_c = 0, or the final run with no c after it);
    // runs flanked by c on both sides stay within [1, n-1].
    const bool head = i == 0 && f.lead_c == 0;
    const bool tail = i + 1 == k && run.c_exp == 0;
    if (run.b_exp > (head || tail ? n : n - 1)) return false;
  }
  return true;
}

bool equal(const GammaGroup& G, const Word& w1, const Word& w2) {
  return syllable_form(G, w1) == syllable_form(G, w2);
}

Sign sign(const GammaGroup& G, const NavasForm& f) {
  (void)G;
  if (f.u_empty()) {
    if (f.ell == 0) return Sign::Trivial;
    return f.ell > 0 ? Sign::Positive : Sign::Negative;
  }
  return f.ell >= 0 ? Sign::Positive : Sign::Negative;
}

Sign sign(const GammaGroup& G, const Word& w) {
  return sign(G, navas_form(G, w));
}

bool less(const GammaGroup& G, const Word& w1, const Word& w2) {
  return sign(G, concat(invert(w1), w2)) == Sign::Positive;
}

CofinalFloor cofinal_floor(const GammaGroup& G, const Word& w) {
  NavasForm f = navas_form(G, w);
  return CofinalFloor{f.ell, f.u_empty()};
}

Word expand(const GammaGroup& G, const SyllableForm& f) {
  const long long n = G.n();
  Word w(kAlphabet);
  w.append(Gen::B, checked_mul(f.ell, n + 1));
  w.append(Gen::B, f.head);
  for (long long t : f.tail) {
    w.append(Gen::B, n);  // a = b^n c
    w.append(Gen::C, 1);
    w.append(Gen::B, t);
  }
  return w;
}

Word expand(const GammaGroup& G, const NavasForm& f) {
  const long long n = G.n();
  Word w(kAlphabet);
  w.append(Gen::C, f.lead_c);
  for (const NavasRun& run : f.runs) {
    w.append(Gen::B, run.b_exp);
    w.append(Gen::C, run.c_exp);
  }
  w.append(Gen::B, checked_mul(f.ell, n + 1));
  return w;
}

std::string render(const NavasForm& f) {
  Word w(Alphabet{"bcd"});
  w.append(Gen::C, f.lead_c);
  for (const NavasRun& run : f.runs) {
    w.append(Gen::B, run.b_exp);
    w.append(Gen::C, run.c_exp);
  }
  w.append(Gen::D, f.ell);
  return to_string(w);
}

std::string render(const SyllableForm& f) {
  std::string out = "d^" + std::to_string(f.ell) + " b^" +
                    std::to_string(f.head);
  for (long long t : f.tail) {
    out += " a b^" + std::to_string(t);
  }
  return out;
}

}  // namespace leftorder::gamma
