#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leftorder {

// Free words over small declared alphabets.
//
// The generator vocabulary is fixed: a b c x y d (d stands for the
// central element Delta in rendered normal forms).  Each group module
// declares which subset it works over; words remember their alphabet so
// that cross-alphabet products are rejected instead of silently mixed.
//
// Words are immutable values once built and are safe to share between
// threads.

enum class Gen : char {
  A = 'a',
  B = 'b',
  C = 'c',
  X = 'x',
  Y = 'y',
  D = 'd',
};

constexpr char to_char(Gen g) { return static_cast<char>(g); }

// Returns false for characters outside the fixed vocabulary.
bool gen_from_char(char ch, Gen& out);

class Alphabet {
 public:
  Alphabet() = default;

  // Builds an alphabet from its letters, e.g. Alphabet("bc").
  // Throws std::invalid_argument on characters outside the vocabulary.
  explicit Alphabet(std::string_view letters);

  bool contains(Gen g) const { return (mask_ & bit(g)) != 0; }
  bool operator==(const Alphabet&) const = default;

  // Letters in the fixed order a b c x y d.
  std::string to_string() const;

 private:
  static std::uint8_t bit(Gen g);
  std::uint8_t mask_ = 0;
};

struct Letter {
  Gen gen;
  long long exp;  // nonzero
  bool operator==(const Letter&) const = default;
};

// Overflow-checked 64-bit arithmetic.  Central powers accumulate during
// normalization; wraparound would corrupt sign decisions, so arithmetic
// that could overflow throws std::overflow_error instead.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

  static Word identity(Alphabet alphabet) { return Word(alphabet); }

  const std::vector<Letter>& letters() const { return letters_; }
  Alphabet alphabet() const { return alphabet_; }
  bool is_identity() const { return letters_.empty(); }

  // Total number of single letters, i.e. the sum of |exponent|.
  long long length() const;

  // Right-multiplies by gen^exp, keeping the word freely reduced.
  // exp == 0 is a no-op.  Throws if gen is not in the alphabet.
  void append(Gen gen, long long exp);

  bool operator==(const Word&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& what);
  std::size_t position;
};

// Parses the word grammar
//
//   word := '1' | (letter ('^' integer)?)*
//
// with tokens separated by one or more spaces; letters are drawn from
// `alphabet`, exponents are optionally signed decimal integers.  A zero
// exponent is accepted and elided.  The empty string and "1" denote the
// identity.  The result is freely reduced.
Word parse_word(std::string_view text, Alphabet alphabet);

// Freely reduced product w1 * w2.  Throws on alphabet mismatch.
Word concat(const Word& w1, const Word& w2);

// Reversed word with negated exponents; concat(w, invert(w)) is trivial.
Word invert(const Word& w);

// w^k (k may be negative or zero).
Word power(const Word& w, long long k);

// Renders with single spaces, omitting "^1"; the identity renders as "1".
// parse_word(to_string(w), w.alphabet()) == w.
std::string to_string(const Word& w);

}  // namespace leftorder
