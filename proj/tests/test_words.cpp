#include "doctest.h"
#include "leftorder/words.hpp"

#include <limits>

namespace lo = leftorder;

namespace {

const lo::Alphabet kBC{"bc"};

lo::Word bc(std::string_view text) { return lo::parse_word(text, kBC); }

}  // namespace

TEST_CASE("parse round-trips through to_string") {
  for (const char* text : {"1", "b", "b^-1", "b^2 c^-3 b", "c b c b c",
                           "b^100 c^-100"}) {
    const lo::Word w = bc(text);
    CHECK(lo::to_string(w) == text);
    CHECK(lo::parse_word(lo::to_string(w), kBC) == w);
  }
}

TEST_CASE("parse accepts grammar variants") {
  CHECK(bc("") == lo::Word::identity(kBC));
  CHECK(bc("  1  ") == lo::Word::identity(kBC));
  CHECK(bc("b^+2") == bc("b^2"));
  CHECK(bc("  b   c  ") == bc("b c"));
  CHECK(bc("b^0") == bc("1"));
  CHECK(bc("b^1") == bc("b"));
}

TEST_CASE("parse reduces freely") {
  CHECK(bc("b b^-1") == bc("1"));
  CHECK(bc("b^2 b^-1") == bc("b"));
  CHECK(bc("b b b") == bc("b^3"));
  CHECK(bc("c b^3 b^-3 c^-1") == bc("1"));
  CHECK(bc("b c c^-1 b").letters().size() == 1);
}

TEST_CASE("parse rejects malformed input with positions") {
  auto position_of = [](const char* text) {
    try {
      bc(text);
    } catch (const lo::ParseError& e) {
      return e.position;
    }
    return std::size_t(-1);
  };
  CHECK(position_of("q") == 0);
  CHECK(position_of("b^") == 2);
  CHECK(position_of("b^-") == 2);
  CHECK(position_of("b^x") == 2);
  CHECK(position_of("bc") == 1);        // missing space
  CHECK(position_of("b^2c") == 3);
  CHECK(position_of("1 b") == 0);       // '1' must stand alone
  CHECK(position_of("a") == 0);         // not in this alphabet
  CHECK(position_of("b^99999999999999999999") == 2);
}

TEST_CASE("identity renders as 1") {
  CHECK(lo::to_string(lo::Word::identity(kBC)) == "1");
  CHECK(bc("1").is_identity());
}

TEST_CASE("append keeps words reduced") {
  lo::Word w(kBC);
  w.append(lo::Gen::B, 2);
  w.append(lo::Gen::B, -2);
  CHECK(w.is_identity());
  w.append(lo::Gen::C, 1);
  w.append(lo::Gen::C, 4);
  CHECK(lo::to_string(w) == "c^5");
  w.append(lo::Gen::B, 0);
  CHECK(lo::to_string(w) == "c^5");
  CHECK_THROWS_AS(w.append(lo::Gen::X, 1), std::invalid_argument);
}

TEST_CASE("length sums letter magnitudes") {
  CHECK(bc("1").length() == 0);
  CHECK(bc("b^3 c^-2").length() == 5);
}

TEST_CASE("concat, invert and power") {
  const lo::Word u = bc("b c^-1");
  const lo::Word v = bc("c b^2");
  CHECK(lo::to_string(lo::concat(u, v)) == "b^3");
  CHECK(lo::to_string(lo::invert(u)) == "c b^-1");
  CHECK(lo::concat(u, lo::invert(u)).is_identity());
  CHECK(lo::power(u, 0).is_identity());
  CHECK(lo::power(bc("b"), 5) == bc("b^5"));
  CHECK(lo::power(u, -1) == lo::invert(u));
  CHECK(lo::power(bc("b c"), 2) == bc("b c b c"));

  const lo::Word xy = lo::parse_word("x y", lo::Alphabet("xy"));
  CHECK_THROWS_AS(lo::concat(u, xy), std::invalid_argument);
}

TEST_CASE("checked arithmetic refuses to wrap") {
  const long long big = std::numeric_limits<long long>::max();
  CHECK_THROWS_AS(lo::checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(lo::checked_mul(big, 2), std::overflow_error);
  CHECK(lo::checked_add(big, -1) == big - 1);
  lo::Word w(kBC);
  w.append(lo::Gen::B, big);
  CHECK_THROWS_AS(w.append(lo::Gen::B, big), std::overflow_error);
}

TEST_CASE("alphabets restrict parsing") {
  CHECK_THROWS_AS(lo::Alphabet("bz"), std::invalid_argument);
  CHECK(lo::Alphabet("cb").to_string() == "bc");
  CHECK_THROWS_AS(lo::parse_word("x", kBC), lo::ParseError);
  CHECK(lo::parse_word("d^2", lo::Alphabet("bcd")).letters().size() == 1);
}
