#include "doctest.h"
#include "leftorder/klein.hpp"
#include "leftorder/sampling.hpp"

#include <array>

namespace lo = leftorder;
using lo::klein::Family;
using lo::klein::KleinForm;
using lo::klein::OrderingId;

namespace {

constexpr std::array<OrderingId, 4> kOrders = {OrderingId::PP, OrderingId::PM,
                                               OrderingId::MP, OrderingId::MM};

KleinForm xy(std::string_view text) {
  return lo::klein::canonical(lo::parse_word(text, lo::klein::kAlphabet));
}

KleinForm rand_elem(lo::sampling::Rng& rng, long long bound) {
  const auto draw = [&] {
    return static_cast<long long>(lo::sampling::below(rng, 2 * bound + 1)) -
           bound;
  };
  return KleinForm{draw(), draw()};
}

}  // namespace

TEST_CASE("canonical coordinates") {
  CHECK(xy("y x") == KleinForm{1, -1});
  CHECK(xy("1") == KleinForm{0, 0});
  CHECK(xy("y^-1 x^2") == KleinForm{2, -1});
  CHECK(xy("x^-1 y x") == xy("y^-1"));  // the defining relation
  CHECK(xy("x^2 y") == xy("y x^2"));    // x^2 is central
}

TEST_CASE("multiplication law, inverses and powers") {
  CHECK(lo::klein::mul({1, 2}, {1, 3}) == KleinForm{2, 1});
  lo::sampling::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const KleinForm a = rand_elem(rng, 8);
    const KleinForm b = rand_elem(rng, 8);
    const KleinForm c = rand_elem(rng, 8);
    CHECK(lo::klein::mul(lo::klein::mul(a, b), c) ==
          lo::klein::mul(a, lo::klein::mul(b, c)));
    CHECK(lo::klein::mul(a, lo::klein::inverse(a)).is_identity());
    CHECK(lo::klein::mul(lo::klein::inverse(a), a).is_identity());
  }
  CHECK(lo::klein::power({2, -1}, 3) == KleinForm{6, -3});
  CHECK(lo::klein::power({1, 1}, 2) == KleinForm{2, 0});
  CHECK(lo::klein::power({2, -1}, -1) == lo::klein::inverse({2, -1}));
  CHECK(lo::klein::power({5, 7}, 0).is_identity());
}

TEST_CASE("signs under the four orderings") {
  CHECK(lo::klein::sign_under({1, 0}, OrderingId::PP) == lo::Sign::Positive);
  CHECK(lo::klein::sign_under({0, -1}, OrderingId::PM) == lo::Sign::Positive);
  for (OrderingId o : kOrders) {
    CHECK(lo::klein::sign_under({0, 0}, o) == lo::Sign::Trivial);
  }
  // Pairwise distinct, witnessed on x, x^-1, y, y^-1.
  const std::array<KleinForm, 4> witnesses = {KleinForm{1, 0}, KleinForm{-1, 0},
                                              KleinForm{0, 1}, KleinForm{0, -1}};
  for (std::size_t i = 0; i < kOrders.size(); ++i) {
    for (std::size_t j = i + 1; j < kOrders.size(); ++j) {
      bool differ = false;
      for (const KleinForm& w : witnesses) {
        differ = differ || lo::klein::sign_under(w, kOrders[i]) !=
                               lo::klein::sign_under(w, kOrders[j]);
      }
      CHECK(differ);
    }
  }
}

TEST_CASE("each ordering is left-invariant") {
  lo::sampling::Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const KleinForm e1 = rand_elem(rng, 10);
    const KleinForm e2 = rand_elem(rng, 10);
    const KleinForm g = rand_elem(rng, 10);
    const KleinForm diff = lo::klein::mul(lo::klein::inverse(e1), e2);
    const KleinForm shifted =
        lo::klein::mul(lo::klein::inverse(lo::klein::mul(g, e1)),
                       lo::klein::mul(g, e2));
    CHECK(diff == shifted);  // the order data depends only on e1^-1 e2
    for (OrderingId o : kOrders) {
      CHECK(lo::klein::sign_under(diff, o) ==
            lo::klein::sign_under(shifted, o));
    }
  }
}

TEST_CASE("quotient map") {
  CHECK(lo::klein::q_image({2, -3}) == 2);
  CHECK(lo::klein::q_image(xy("y^-1 x^2")) == 2);
  CHECK(lo::klein::q_image({0, 11}) == 0);
}

TEST_CASE("conjugation flips the y-clause for odd x-exponent") {
  CHECK(lo::klein::conjugate_ordering(OrderingId::PP, {1, 0}) ==
        OrderingId::PM);
  for (OrderingId o : kOrders) {
    CHECK(lo::klein::conjugate_ordering(o, {0, 5}) == o);
    CHECK(lo::klein::conjugate_ordering(o, {0, 0}) == o);
    CHECK(lo::klein::conjugate_ordering(o, {2, -1}) == o);
  }
  // Membership check for the derived example: cone of PP conjugated by x
  // contains w iff x w x^-1 is PP-positive.
  const KleinForm x{1, 0};
  for (const KleinForm w :
       {KleinForm{0, 1}, KleinForm{0, -1}, KleinForm{1, 0}}) {
    const KleinForm moved =
        lo::klein::mul(lo::klein::mul(x, w), lo::klein::inverse(x));
    CHECK(lo::klein::sign_under(w, OrderingId::PM) ==
          lo::klein::sign_under(moved, OrderingId::PP));
  }
}

TEST_CASE("closed-form conjugation matches the cone definition") {
  lo::sampling::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const KleinForm g = rand_elem(rng, 6);
    const KleinForm w = rand_elem(rng, 6);
    for (OrderingId o : kOrders) {
      const OrderingId conj = lo::klein::conjugate_ordering(o, g);
      const KleinForm moved =
          lo::klein::mul(lo::klein::mul(g, w), lo::klein::inverse(g));
      CHECK(lo::klein::sign_under(w, conj) == lo::klein::sign_under(moved, o));
    }
  }
}

TEST_CASE("conjugation preserves the families") {
  lo::sampling::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const KleinForm g = rand_elem(rng, 10);
    for (OrderingId o : kOrders) {
      CHECK(lo::klein::family_of(lo::klein::conjugate_ordering(o, g)) ==
            lo::klein::family_of(o));
    }
  }
  CHECK(lo::klein::family_of(OrderingId::PP) == Family::LPlus);
  CHECK(lo::klein::family_of(OrderingId::PM) == Family::LPlus);
  CHECK(lo::klein::family_of(OrderingId::MP) == Family::LMinus);
  CHECK(lo::klein::family_of(OrderingId::MM) == Family::LMinus);
}

TEST_CASE("ordering names") {
  for (OrderingId o : kOrders) {
    CHECK(lo::klein::ordering_from_name(lo::klein::name(o)) == o);
  }
  CHECK(lo::klein::name(Family::LPlus) == "L+");
  CHECK(lo::klein::name(Family::LMinus) == "L-");
  CHECK_THROWS_AS(lo::klein::ordering_from_name("+"), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(lo::klein::render({2, -1}) == "x^2 y^-1");
  CHECK(lo::klein::render({0, 0}) == "1");
  CHECK(lo::klein::render({0, 3}) == "y^3");
  CHECK(lo::klein::render({-1, 0}) == "x^-1");
}
