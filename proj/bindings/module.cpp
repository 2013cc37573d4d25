#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

#include "leftorder/gamma.hpp"
#include "leftorder/glue.hpp"
#include "leftorder/klein.hpp"
#include "leftorder/report.hpp"
#include "leftorder/twist.hpp"
#include "leftorder/words.hpp"

namespace py = pybind11;
namespace lo = leftorder;

namespace {

// The Python surface is string-in / string-out on the word grammar;
// words stay opaque and every value crosses the boundary in the same
// form the CLI prints.

std::string sign_str(lo::Sign s) { return std::string(lo::to_string(s)); }

lo::glue::SweepParams sweep_params(long long rmax, long long smax,
                                   long long samples, long long glen,
                                   std::uint64_t seed) {
  return {rmax, smax, samples, glen, seed};
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Exact left-orderings on torus-knot groups and the Klein-bottle "
      "group, with the 4-surgery gluing checks";

  mod.def(
      "normalize",
      [](long long n, const std::string& word) {
        const lo::gamma::GammaGroup G(n);
        return lo::gamma::render(lo::gamma::navas_form(G, G.parse(word)));
      },
      py::arg("n"), py::arg("word"),
      "Navas normal form of a {b,c,d}-word in Gamma_n, rendered in the "
      "word grammar (d = Delta)");

  mod.def(
      "sign",
      [](long long n, const std::string& word) {
        const lo::gamma::GammaGroup G(n);
        return sign_str(lo::gamma::sign(G, G.parse(word)));
      },
      py::arg("n"), py::arg("word"),
      "'negative', 'trivial' or 'positive' under the Navas ordering");

  mod.def(
      "equal",
      [](long long n, const std::string& lhs, const std::string& rhs) {
        const lo::gamma::GammaGroup G(n);
        return lo::gamma::equal(G, G.parse(lhs), G.parse(rhs));
      },
      py::arg("n"), py::arg("lhs"), py::arg("rhs"));

  mod.def(
      "less",
      [](long long n, const std::string& lhs, const std::string& rhs) {
        const lo::gamma::GammaGroup G(n);
        return lo::gamma::less(G, G.parse(lhs), G.parse(rhs));
      },
      py::arg("n"), py::arg("lhs"), py::arg("rhs"));

  mod.def(
      "cofinal_floor",
      [](long long n, const std::string& word) {
        const lo::gamma::GammaGroup G(n);
        const auto floor = lo::gamma::cofinal_floor(G, G.parse(word));
        return std::make_pair(floor.ell, floor.exact);
      },
      py::arg("n"), py::arg("word"),
      "(ell, exact) with Delta^ell <= w < Delta^(ell+1)");

  mod.def(
      "meridian",
      [](long long m) {
        const lo::twist::TwistKnotGroup T(m);
        return lo::to_string(lo::twist::meridian(T));
      },
      py::arg("m"), "the meridian b^-m a as a {b,c}-word");

  mod.def(
      "fiber",
      [](long long m) {
        const lo::twist::TwistKnotGroup T(m);
        return lo::to_string(lo::twist::fiber(T));
      },
      py::arg("m"), "the regular fiber a^2 as a {b,c}-word");

  mod.def(
      "twist_sign",
      [](long long m, const std::string& word,
         const std::string& conjugator) {
        const lo::twist::TwistKnotGroup T(m);
        const lo::Word w = lo::parse_word(word, lo::twist::kAlphabet);
        const lo::Word g = T.group().parse(conjugator);
        return sign_str(lo::twist::sign_conj(T, lo::twist::embed(T, w), g));
      },
      py::arg("m"), py::arg("word"), py::arg("conjugator") = "1",
      "sign of an {a,b}-word under the ordering conjugated by g");

  mod.def(
      "klein_canonical",
      [](const std::string& word) {
        const auto e = lo::klein::canonical(
            lo::parse_word(word, lo::klein::kAlphabet));
        return std::make_pair(e.s, e.r);
      },
      py::arg("word"), "(s, r) with the element equal to x^s y^r");

  mod.def(
      "klein_sign",
      [](long long s, long long r, const std::string& ordering) {
        return sign_str(lo::klein::sign_under(
            {s, r}, lo::klein::ordering_from_name(ordering)));
      },
      py::arg("s"), py::arg("r"), py::arg("ordering"));

  mod.def(
      "conjugate_ordering",
      [](const std::string& ordering, long long s, long long r) {
        return std::string(lo::klein::name(lo::klein::conjugate_ordering(
            lo::klein::ordering_from_name(ordering), {s, r})));
      },
      py::arg("ordering"), py::arg("s"), py::arg("r"),
      "the ordering with positive cone g^-1 P g for g = x^s y^r");

  mod.def(
      "phi",
      [](long long r, long long s) {
        const auto e = lo::glue::phi({r, s});
        return std::make_pair(e.s, e.r);
      },
      py::arg("r"), py::arg("s"),
      "Klein coordinates (s, r) of the image of mu^r h^s");

  mod.def(
      "choose_ordering",
      [](long long m, const std::string& conjugator) {
        const lo::twist::TwistKnotGroup T(m);
        return std::string(lo::klein::name(
            lo::glue::choose_ordering(T, T.group().parse(conjugator))));
      },
      py::arg("m"), py::arg("conjugator") = "1");

  mod.def(
      "compat_report",
      [](long long m, long long rmax, long long smax, long long samples,
         long long glen, std::uint64_t seed) {
        const lo::twist::TwistKnotGroup T(m);
        return lo::glue::render_json(lo::glue::run_compat(
            T, sweep_params(rmax, smax, samples, glen, seed)));
      },
      py::arg("m"), py::arg("rmax") = 12, py::arg("smax") = 12,
      py::arg("samples") = 200, py::arg("glen") = 10, py::arg("seed") = 1,
      "JSON compatibility report (deterministic for a given seed)");

  mod.def(
      "presentation",
      [](long long m) { return lo::glue::pi1_presentation(m); },
      py::arg("m"));

  mod.def(
      "cone_map",
      [](long long m, const std::string& conjugator, long long rmax,
         long long smax) {
        const lo::twist::TwistKnotGroup T(m);
        return lo::glue::cone_map_csv(T, T.group().parse(conjugator), rmax,
                                      smax);
      },
      py::arg("m"), py::arg("conjugator") = "1", py::arg("rmax") = 12,
      py::arg("smax") = 12, "CSV grid of peripheral signs and phi images");
}
