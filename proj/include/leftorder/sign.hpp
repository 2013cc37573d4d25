#pragma once

#include <string_view>

namespace leftorder {

// Trichotomy value of a group element under a left-ordering: every
// element is exactly one of negative, trivial (the identity) or positive.
enum class Sign {
  Negative = -1,
  Trivial = 0,
  Positive = 1,
};

constexpr Sign opposite(Sign s) {
  return static_cast<Sign>(-static_cast<int>(s));
}

constexpr std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Trivial: return "trivial";
    case Sign::Positive: return "positive";
  }
  return "?";
}

// Single-character rendering used in CSV output: '-', '0', '+'.
constexpr char to_char(Sign s) {
  switch (s) {
    case Sign::Negative: return '-';
    case Sign::Trivial: return '0';
    case Sign::Positive: return '+';
  }
  return '?';
}

}  // namespace leftorder
