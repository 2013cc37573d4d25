#include <cstdint>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leftorder/gamma.hpp"
#include "leftorder/glue.hpp"
#include "leftorder/klein.hpp"
#include "leftorder/report.hpp"
#include "leftorder/twist.hpp"
#include "leftorder/words.hpp"

namespace lo = leftorder;

namespace {

// Exit statuses: 0 success / all checks pass, 1 verification violations,
// 2 usage or input errors.

struct SweepOpts {
  long long m = 0;
  long long rmax = -1;  // -1 means "per-command default"
  long long smax = -1;
  long long samples = -1;
  long long glen = -1;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool timing = false;
  long long max_violations = -1;
};

long long pick(long long value, long long fallback) {
  return value < 0 ? fallback : value;
}

int emit_reports(const std::vector<lo::glue::SweepReport>& reps,
                 const SweepOpts& o) {
  const lo::glue::RenderOptions ropt{o.timing, o.max_violations};
  if (o.format == "json") {
    if (reps.size() == 1) {
      std::cout << lo::glue::render_json(reps.front(), ropt);
    } else {
      std::cout << lo::glue::render_json(std::span(reps), ropt);
    }
  } else {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (i > 0) std::cout << '\n';
      std::cout << lo::glue::render_text(reps[i], ropt);
    }
  }
  for (const auto& rep : reps) {
    if (!rep.pass) return 1;
  }
  return 0;
}

void add_sweep_options(CLI::App* sub, SweepOpts& o, bool with_grid) {
  if (with_grid) {
    sub->add_option("--rmax", o.rmax, "meridian exponent bound");
    sub->add_option("--smax", o.smax, "fiber exponent bound");
  }
  sub->add_option("--samples", o.samples, "random sample count");
  sub->add_option("--glen", o.glen, "max conjugator length");
  sub->add_option("--seed", o.seed, "RNG seed");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--timing", o.timing,
                "report measured elapsed_ms instead of 0");
  sub->add_option("--max-violations", o.max_violations,
                  "cap the rendered violation list (full count stays in "
                  "violations_total)");
}

std::vector<lo::glue::SweepReport> run_verify(const std::string& lemma,
                                              const SweepOpts& o) {
  std::vector<lo::glue::SweepReport> reps;
  const bool all = lemma == "all";
  if (all || lemma == "meridian") {
    reps.push_back(lo::glue::verify_meridian(lo::twist::TwistKnotGroup(o.m)));
  }
  if (all || lemma == "mu-delta") {
    reps.push_back(lo::glue::verify_mu_delta(lo::twist::TwistKnotGroup(o.m),
                                             pick(o.rmax, 25)));
  }
  if (all || lemma == "interval") {
    reps.push_back(lo::glue::run_interval(lo::twist::TwistKnotGroup(o.m),
                                          pick(o.rmax, 10),
                                          pick(o.samples, 200),
                                          pick(o.glen, 10), o.seed));
  }
  if (all || lemma == "cofinal") {
    reps.push_back(lo::glue::verify_cofinal(lo::twist::TwistKnotGroup(o.m),
                                            pick(o.samples, 1000), o.seed));
  }
  if (all || lemma == "prop-s") {
    const lo::glue::SweepParams p{pick(o.rmax, 12), pick(o.smax, 12),
                                  pick(o.samples, 200), pick(o.glen, 10),
                                  o.seed};
    reps.push_back(
        lo::glue::run_property_s(lo::twist::TwistKnotGroup(o.m), p));
  }
  if (all || lemma == "klein-normal") {
    reps.push_back(
        lo::glue::verify_klein_normality(pick(o.samples, 200), o.seed));
  }
  return reps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact left-orderings on torus-knot groups, the Klein-bottle group, "
      "and the 4-surgery gluing checks"};
  app.require_subcommand(1);
  int status = 0;

  // normalize
  struct {
    long long n = 0;
    std::string word;
    std::string form = "navas";
  } ncfg;
  auto* norm = app.add_subcommand(
      "normalize", "Normal form of a {b,c,d}-word in Gamma_n (d = Delta)");
  norm->add_option("--n", ncfg.n, "group parameter n >= 1")->required();
  norm->add_option("--word", ncfg.word, "word over {b,c,d}")->required();
  norm->add_option("--form", ncfg.form, "navas (default) or syllable")
      ->check(CLI::IsMember({"navas", "syllable"}));
  norm->callback([&] {
    const lo::gamma::GammaGroup G(ncfg.n);
    const lo::Word w = G.parse(ncfg.word);
    if (ncfg.form == "syllable") {
      std::cout << lo::gamma::render(lo::gamma::syllable_form(G, w)) << '\n';
    } else {
      std::cout << lo::gamma::render(lo::gamma::navas_form(G, w)) << '\n';
    }
  });

  // sign
  struct {
    long long n = 0;
    std::string word;
  } scfg;
  auto* sgn = app.add_subcommand("sign",
                                 "Navas sign of a {b,c,d}-word in Gamma_n");
  sgn->add_option("--n", scfg.n, "group parameter n >= 1")->required();
  sgn->add_option("--word", scfg.word, "word over {b,c,d}")->required();
  sgn->callback([&] {
    const lo::gamma::GammaGroup G(scfg.n);
    std::cout << lo::to_string(lo::gamma::sign(G, G.parse(scfg.word)))
              << '\n';
  });

  // compare
  struct {
    long long n = 0;
    std::string lhs;
    std::string rhs;
  } ccfg;
  auto* cmp = app.add_subcommand(
      "compare", "Compare two {b,c,d}-words under the Navas ordering");
  cmp->add_option("--n", ccfg.n, "group parameter n >= 1")->required();
  cmp->add_option("--lhs", ccfg.lhs, "left word")->required();
  cmp->add_option("--rhs", ccfg.rhs, "right word")->required();
  cmp->callback([&] {
    const lo::gamma::GammaGroup G(ccfg.n);
    const lo::Word lhs = G.parse(ccfg.lhs);
    const lo::Word rhs = G.parse(ccfg.rhs);
    if (lo::gamma::equal(G, lhs, rhs)) {
      std::cout << "equal\n";
    } else if (lo::gamma::less(G, lhs, rhs)) {
      std::cout << "less\n";
    } else {
      std::cout << "greater\n";
    }
  });

  // twist-sign
  struct {
    long long m = 0;
    std::string word;
    std::string conjugator = "1";
  } tcfg;
  auto* tsgn = app.add_subcommand(
      "twist-sign",
      "Sign of an {a,b}-word of the twist-knot torus group under the "
      "(conjugated) Navas ordering");
  tsgn->add_option("--m", tcfg.m, "twist parameter, m not in {0, -1}")
      ->required();
  tsgn->add_option("--word", tcfg.word, "word over {a,b}")->required();
  tsgn->add_option("--conjugator", tcfg.conjugator,
                   "conjugator g over {b,c,d}; evaluates sign(g^-1 w g)");
  tsgn->callback([&] {
    const lo::twist::TwistKnotGroup T(tcfg.m);
    const lo::Word w = lo::parse_word(tcfg.word, lo::twist::kAlphabet);
    const lo::Word g = T.group().parse(tcfg.conjugator);
    std::cout << lo::to_string(
                     lo::twist::sign_conj(T, lo::twist::embed(T, w), g))
              << '\n';
  });

  // verify
  SweepOpts vcfg;
  std::string lemma;
  auto* verify = app.add_subcommand("verify", "Run a lemma sweep");
  auto* verify_m =
      verify->add_option("--m", vcfg.m, "twist parameter, m not in {0, -1}");
  verify
      ->add_option("--lemma", lemma,
                   "meridian | mu-delta | interval | cofinal | prop-s | "
                   "klein-normal | all")
      ->required()
      ->check(CLI::IsMember({"meridian", "mu-delta", "interval", "cofinal",
                             "prop-s", "klein-normal", "all"}));
  add_sweep_options(verify, vcfg, /*with_grid=*/true);
  verify->callback([&] {
    if (lemma != "klein-normal" && verify_m->count() == 0) {
      throw std::invalid_argument("--m is required for --lemma " + lemma);
    }
    status = emit_reports(run_verify(lemma, vcfg), vcfg);
  });

  // compat
  SweepOpts pcfg;
  auto* compat = app.add_subcommand(
      "compat",
      "Compatibility sweep: positives of the peripheral subgroup map to "
      "positives of the chosen Klein-bottle ordering");
  compat->add_option("--m", pcfg.m, "twist parameter, m not in {0, -1}")
      ->required();
  add_sweep_options(compat, pcfg, /*with_grid=*/true);
  compat->callback([&] {
    const lo::glue::SweepParams p{pick(pcfg.rmax, 12), pick(pcfg.smax, 12),
                                  pick(pcfg.samples, 200),
                                  pick(pcfg.glen, 10), pcfg.seed};
    status = emit_reports(
        {lo::glue::run_compat(lo::twist::TwistKnotGroup(pcfg.m), p)}, pcfg);
  });

  // cone-map
  struct {
    long long m = 0;
    std::string conjugator = "1";
    long long rmax = 12;
    long long smax = 12;
  } mcfg;
  auto* cone = app.add_subcommand(
      "cone-map",
      "CSV of peripheral signs and their Klein-bottle images on a grid");
  cone->add_option("--m", mcfg.m, "twist parameter, m not in {0, -1}")
      ->required();
  cone->add_option("--conjugator", mcfg.conjugator, "conjugator over {b,c,d}");
  cone->add_option("--rmax", mcfg.rmax, "meridian exponent bound");
  cone->add_option("--smax", mcfg.smax, "fiber exponent bound");
  cone->callback([&] {
    const lo::twist::TwistKnotGroup T(mcfg.m);
    const lo::Word g = T.group().parse(mcfg.conjugator);
    std::cout << lo::glue::cone_map_csv(T, g, mcfg.rmax, mcfg.smax);
  });

  // presentation
  long long pres_m = 0;
  auto* pres = app.add_subcommand(
      "presentation",
      "Fundamental-group presentation of the glued 4-surgery manifold");
  pres->add_option("--m", pres_m, "twist parameter, m not in {0, -1}")
      ->required();
  pres->callback(
      [&] { std::cout << lo::glue::pi1_presentation(pres_m) << '\n'; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
