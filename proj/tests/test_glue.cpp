#include "doctest.h"
#include "leftorder/glue.hpp"
#include "leftorder/report.hpp"
#include "leftorder/sampling.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"

namespace lo = leftorder;
using lo::glue::BoundaryElement;
using lo::klein::KleinForm;
using lo::klein::OrderingId;
using lo::twist::TwistKnotGroup;

TEST_CASE("phi anchors and closed form") {
  CHECK(lo::glue::phi({1, 0}) == KleinForm{0, -1});
  CHECK(lo::glue::phi({0, 1}) == KleinForm{2, -1});
  CHECK(lo::glue::phi({3, 2}) == KleinForm{4, -5});
  for (long long r = -9; r <= 9; ++r) {
    for (long long s = -9; s <= 9; ++s) {
      const KleinForm image = lo::glue::phi({r, s});
      CHECK(image == KleinForm{2 * s, -(r + s)});
      CHECK(lo::klein::q_image(image) == 2 * s);
    }
  }
}

TEST_CASE("phi is a homomorphism on the peripheral subgroup") {
  for (long long r1 = -4; r1 <= 4; ++r1) {
    for (long long s1 = -4; s1 <= 4; ++s1) {
      for (long long r2 = -4; r2 <= 4; ++r2) {
        for (long long s2 = -4; s2 <= 4; ++s2) {
          CHECK(lo::glue::phi({r1 + r2, s1 + s2}) ==
                lo::klein::mul(lo::glue::phi({r1, s1}),
                               lo::glue::phi({r2, s2})));
        }
      }
    }
  }
}

TEST_CASE("ordering selection") {
  const TwistKnotGroup T2(2);
  const TwistKnotGroup Tm2(-2);
  const auto& G2 = T2.group();
  CHECK(lo::glue::choose_ordering(T2, G2.identity()) == OrderingId::PM);
  CHECK(lo::glue::choose_ordering(Tm2, Tm2.group().identity()) ==
        OrderingId::MP);
  // b^-1 conjugates mu negative for m = 2, exercising the PP branch;
  // b conjugates mu positive for m = -2, exercising MM.
  CHECK(lo::twist::sign_conj(T2, lo::twist::meridian(T2),
                             G2.parse("b^-1")) == lo::Sign::Negative);
  CHECK(lo::glue::choose_ordering(T2, G2.parse("b^-1")) == OrderingId::PP);
  CHECK(lo::glue::choose_ordering(Tm2, Tm2.group().parse("b")) ==
        OrderingId::MM);
  // Selection lands in L+ for m > 0 and L- for m < 0.
  lo::sampling::Rng rng(3);
  const auto gs = lo::sampling::sample_conjugators(rng, 40, 8);
  for (const lo::Word& g : gs) {
    CHECK(lo::klein::family_of(lo::glue::choose_ordering(T2, g)) ==
          lo::klein::Family::LPlus);
    CHECK(lo::klein::family_of(lo::glue::choose_ordering(Tm2, g)) ==
          lo::klein::Family::LMinus);
  }
}

TEST_CASE("compatibility holds on desk-scale grids") {
  const TwistKnotGroup T2(2);
  CHECK(lo::glue::check_compat(T2, T2.group().identity(), 12, 12).empty());
  const TwistKnotGroup Tm3(-3);
  CHECK(lo::glue::check_compat(Tm3, Tm3.group().parse("b c"), 12, 12).empty());
}

TEST_CASE("property-S dichotomy on the identity conjugator") {
  const TwistKnotGroup T2(2);
  CHECK(lo::glue::check_property_s(T2, T2.group().identity(), 8, 8).empty());
  // Positives for m > 0, g = 1 are exactly {s > 0} plus {s = 0, r > 0}.
  CHECK(lo::twist::sign_conj(T2, lo::twist::boundary_element(T2, -7, 1),
                             T2.group().identity()) == lo::Sign::Positive);
  CHECK(lo::twist::sign_conj(T2, lo::twist::boundary_element(T2, 3, 0),
                             T2.group().identity()) == lo::Sign::Positive);
  CHECK(lo::twist::sign_conj(T2, lo::twist::boundary_element(T2, -3, 0),
                             T2.group().identity()) == lo::Sign::Negative);
  CHECK(lo::twist::sign_conj(T2, lo::twist::boundary_element(T2, 7, -1),
                             T2.group().identity()) == lo::Sign::Negative);

  const TwistKnotGroup Tm2(-2);
  CHECK(lo::glue::check_property_s(Tm2, Tm2.group().identity(), 8, 8).empty());
  CHECK(lo::twist::sign_conj(Tm2, lo::twist::boundary_element(Tm2, 0, -1),
                             Tm2.group().identity()) == lo::Sign::Positive);
  CHECK(lo::twist::sign_conj(Tm2, lo::twist::boundary_element(Tm2, -3, 0),
                             Tm2.group().identity()) == lo::Sign::Positive);
}

TEST_CASE("lemma sweeps pass at unit scale") {
  const TwistKnotGroup T3(3);
  CHECK(lo::glue::verify_meridian(T3).pass);
  const TwistKnotGroup Tm2(-2);
  CHECK(lo::glue::verify_mu_delta(Tm2, 25).pass);
  CHECK(lo::glue::run_interval(Tm2, 10, 30, 10, 1).pass);
  CHECK(lo::glue::verify_cofinal(TwistKnotGroup(2), 150, 1).pass);
  CHECK(lo::glue::verify_klein_normality(50, 1).pass);

  lo::glue::SweepParams p;
  p.rmax = 6;
  p.smax = 6;
  p.samples = 10;
  p.glen = 8;
  const auto rep = lo::glue::run_property_s(TwistKnotGroup(-3), p);
  CHECK(rep.pass);
  CHECK(rep.cases == 19 * 13 * 13);  // 9 battery + 10 samples, full grid
  CHECK(rep.conjugators.size() == 19);
}

TEST_CASE("compat report structure") {
  lo::glue::SweepParams p;
  p.rmax = 4;
  p.smax = 4;
  p.samples = 5;
  p.glen = 6;
  p.seed = 11;
  const auto rep = lo::glue::run_compat(TwistKnotGroup(2), p);
  CHECK(rep.pass);
  CHECK(rep.command == "compat");
  CHECK(rep.m == 2);
  CHECK(rep.seed == 11);
  CHECK(rep.cases == 14 * 9 * 9);
  CHECK(rep.violations.empty());
  CHECK(rep.conjugators.size() == 14);
  long long branch_total = 0;
  for (long long count : rep.branches) branch_total += count;
  CHECK(branch_total == 14);
  // m > 0 only selects from L+.
  CHECK(rep.branches[2] == 0);
  CHECK(rep.branches[3] == 0);
  for (const auto& rec : rep.conjugators) {
    CHECK(rec.cases_checked == 9 * 9);
    CHECK(rec.violations == 0);
    CHECK(rec.sign_of_conjugated_mu != lo::Sign::Trivial);
  }
}

TEST_CASE("reports render deterministically") {
  lo::glue::SweepParams p;
  p.rmax = 3;
  p.smax = 3;
  p.samples = 4;
  p.glen = 5;
  p.seed = 7;
  const auto rep1 = lo::glue::run_compat(TwistKnotGroup(-2), p);
  const auto rep2 = lo::glue::run_compat(TwistKnotGroup(-2), p);
  CHECK(lo::glue::render_json(rep1) == lo::glue::render_json(rep2));
  CHECK(lo::glue::render_text(rep1) == lo::glue::render_text(rep2));

  const auto doc = nlohmann::json::parse(lo::glue::render_json(rep1));
  for (const char* key : {"command", "m", "seed", "params", "cases",
                          "violations", "violations_total", "conjugators",
                          "branches", "pass", "elapsed_ms"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["command"] == "compat");
  CHECK(doc["m"] == -2);
  CHECK(doc["seed"] == 7);
  CHECK(doc["pass"] == true);
  CHECK(doc["elapsed_ms"] == 0);  // timing is opt-in to keep bytes stable
  CHECK(doc["params"]["rmax"] == 3);
  CHECK(doc["violations"].is_array());
  CHECK(doc["violations"].empty());
  CHECK(doc["conjugators"].size() == 13);
  CHECK(doc["conjugators"][0]["g"] == "1");
  CHECK(doc["conjugators"][0]["chosen"] == "-+");
}

TEST_CASE("violation capping is explicit, never silent") {
  lo::glue::SweepReport rep;
  rep.command = "compat";
  for (int i = 0; i < 5; ++i) {
    rep.violations.push_back({"g", i, 0, "detail"});
  }
  rep.pass = false;
  lo::glue::RenderOptions opt;
  opt.max_violations = 2;
  const auto doc = nlohmann::json::parse(lo::glue::render_json(rep, opt));
  CHECK(doc["violations"].size() == 2);
  CHECK(doc["violations_total"] == 5);
  const std::string text = lo::glue::render_text(rep, opt);
  CHECK(text.find("3 further violations suppressed") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
}

TEST_CASE("presentation text") {
  CHECK(lo::glue::pi1_presentation(2) ==
        "< a, b, x, y | a^2 = b^5, x^-1 y x = y^-1, b^-2 a = y^-1, "
        "a^2 = y^-1 x^2 >");
  CHECK(lo::glue::pi1_presentation(1) ==
        "< a, b, x, y | a^2 = b^3, x^-1 y x = y^-1, b^-1 a = y^-1, "
        "a^2 = y^-1 x^2 >");
  CHECK(lo::glue::pi1_presentation(-2) ==
        "< a, b, x, y | a^2 = b^-3, x^-1 y x = y^-1, b^2 a = y^-1, "
        "a^2 = y^-1 x^2 >");
  CHECK_THROWS_AS(lo::glue::pi1_presentation(0), std::invalid_argument);
  CHECK_THROWS_AS(lo::glue::pi1_presentation(-1), std::invalid_argument);
}

TEST_CASE("cone map CSV") {
  const TwistKnotGroup T(2);
  const std::string csv =
      lo::glue::cone_map_csv(T, T.group().identity(), 2, 2);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,s,sign_H1,klein_s,klein_r,sign_image");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  CHECK(rows.size() == 25);
  CHECK(rows.front() == "-2,-2,-,-4,4,-");
  CHECK(rows[12] == "0,0,0,0,0,0");
  // Row (r=1, s=0) sits at index 2*5 + 3.
  CHECK(rows[13] == "1,0,+,0,-1,+");
  for (const std::string& row : rows) {
    // Compatibility restated: positive upstairs implies positive image.
    const auto first = row.find(",-,");
    (void)first;
    std::istringstream cells(row);
    std::string cell;
    std::vector<std::string> parts;
    while (std::getline(cells, cell, ',')) parts.push_back(cell);
    REQUIRE(parts.size() == 6);
    if (parts[2] == "+") CHECK(parts[5] == "+");
  }
}
