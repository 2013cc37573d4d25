#include "leftorder/words.hpp"

#include <cctype>
#include <charconv>

namespace leftorder {

bool gen_from_char(char ch, Gen& out) {
  switch (ch) {
    case 'a': out = Gen::A; return true;
    case 'b': out = Gen::B; return true;
    case 'c': out = Gen::C; return true;
    case 'x': out = Gen::X; return true;
    case 'y': out = Gen::Y; return true;
    case 'd': out = Gen::D; return true;
    default: return false;
  }
}

std::uint8_t Alphabet::bit(Gen g) {
  switch (g) {
    case Gen::A: return 1u << 0;
    case Gen::B: return 1u << 1;
    case Gen::C: return 1u << 2;
    case Gen::X: return 1u << 3;
    case Gen::Y: return 1u << 4;
    case Gen::D: return 1u << 5;
  }
  return 0;
}

Alphabet::Alphabet(std::string_view letters) {
  for (char ch : letters) {
    Gen g;
    if (!gen_from_char(ch, g)) {
      throw std::invalid_argument(std::string("unknown generator '") + ch +
                                  "' in alphabet");
    }
    mask_ |= bit(g);
  }
}

std::string Alphabet::to_string() const {
  std::string out;
  for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::X, Gen::Y, Gen::D}) {
    if (contains(g)) out.push_back(to_char(g));
  }
  return out;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in exponent arithmetic");
  }
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in exponent arithmetic");
  }
  return r;
}

long long Word::length() const {
  long long total = 0;
  for (const Letter& l : letters_) {
    total = checked_add(total, l.exp < 0 ? -l.exp : l.exp);
  }
  return total;
}

void Word::append(Gen gen, long long exp) {
  if (!alphabet_.contains(gen)) {
    throw std::invalid_argument(std::string("generator '") + to_char(gen) +
                                "' not in alphabet " + alphabet_.to_string());
  }
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    long long merged = checked_add(letters_.back().exp, exp);
    if (merged == 0) {
      letters_.pop_back();
    } else {
      letters_.back().exp = merged;
    }
    return;
  }
  letters_.push_back(Letter{gen, exp});
}

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(pos) +
                         ": " + what),
      position(pos) {}

Word parse_word(std::string_view text, Alphabet alphabet) {
  Word w(alphabet);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_spaces = [&] {
    while (i < n && text[i] == ' ') ++i;
  };

  skip_spaces();
  // "1" on its own denotes the identity.
  if (i < n && text[i] == '1') {
    std::size_t j = i + 1;
    while (j < n && text[j] == ' ') ++j;
    if (j == n) return w;
    throw ParseError(i, "'1' must stand alone");
  }

  while (i < n) {
    const std::size_t token_pos = i;
    Gen g;
    if (!gen_from_char(text[i], g)) {
      throw ParseError(i, std::string("unknown generator '") + text[i] + "'");
    }
    if (!alphabet.contains(g)) {
      throw ParseError(i, std::string("generator '") + text[i] +
                              "' not in alphabet " + alphabet.to_string());
    }
    ++i;
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
        throw ParseError(start, "expected integer exponent after '^'");
      }
      const char* first = text.data() + start;
      const char* last = text.data() + i;
      if (*first == '+') ++first;  // from_chars does not accept '+'
      auto [ptr, ec] = std::from_chars(first, last, exp);
      if (ec != std::errc() || ptr != last) {
        throw ParseError(start, "exponent out of range");
      }
    }
    if (i < n && text[i] != ' ') {
      throw ParseError(i, "expected space between tokens");
    }
    (void)token_pos;
    w.append(g, exp);
    skip_spaces();
  }
  return w;
}

Word concat(const Word& w1, const Word& w2) {
  if (w1.alphabet() != w2.alphabet()) {
    throw std::invalid_argument("alphabet mismatch: " +
                                w1.alphabet().to_string() + " vs " +
                                w2.alphabet().to_string());
  }
  Word out = w1;
  for (const Letter& l : w2.letters()) {
    out.append(l.gen, l.exp);
  }
  return out;
}

Word invert(const Word& w) {
  Word out(w.alphabet());
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    out.append(it->gen, checked_mul(it->exp, -1));
  }
  return out;
}

Word power(const Word& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  long long reps = k < 0 ? -k : k;
  Word out(w.alphabet());
  for (long long i = 0; i < reps; ++i) {
    out = concat(out, base);
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(to_char(l.gen));
    if (l.exp != 1) {
      out.push_back('^');
      out += std::to_string(l.exp);
    }
  }
  return out;
}

}  // namespace leftorder
