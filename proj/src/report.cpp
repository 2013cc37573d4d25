#include "leftorder/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace leftorder::glue {

namespace {

using nlohmann::ordered_json;

long long rendered_violation_count(const SweepReport& rep,
                                   const RenderOptions& opt) {
  const long long total = static_cast<long long>(rep.violations.size());
  if (opt.max_violations < 0) return total;
  return std::min(total, opt.max_violations);
}

ordered_json report_json(const SweepReport& rep, const RenderOptions& opt) {
  ordered_json j;
  j["command"] = rep.command;
  if (!rep.lemma.empty()) j["lemma"] = rep.lemma;
  j["m"] = rep.m;
  j["seed"] = rep.seed;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : rep.params) params[key] = value;
  j["params"] = std::move(params);
  j["cases"] = rep.cases;
  ordered_json violations = ordered_json::array();
  const long long shown = rendered_violation_count(rep, opt);
  for (long long i = 0; i < shown; ++i) {
    const Violation& v = rep.violations[static_cast<std::size_t>(i)];
    violations.push_back(ordered_json{
        {"g", v.g}, {"r", v.r}, {"s", v.s}, {"detail", v.detail}});
  }
  j["violations"] = std::move(violations);
  j["violations_total"] = static_cast<long long>(rep.violations.size());
  if (!rep.conjugators.empty()) {
    ordered_json records = ordered_json::array();
    for (const ConjugatorRecord& rec : rep.conjugators) {
      records.push_back(
          ordered_json{{"g", rec.g},
                       {"sign_of_conjugated_mu",
                        std::string(to_string(rec.sign_of_conjugated_mu))},
                       {"chosen", std::string(klein::name(rec.chosen))},
                       {"cases_checked", rec.cases_checked},
                       {"violations", rec.violations}});
    }
    j["conjugators"] = std::move(records);
    j["branches"] = ordered_json{{"++", rep.branches[0]},
                                 {"+-", rep.branches[1]},
                                 {"-+", rep.branches[2]},
                                 {"--", rep.branches[3]}};
  }
  j["pass"] = rep.pass;
  j["elapsed_ms"] = opt.include_elapsed ? rep.elapsed_ms : 0;
  return j;
}

}  // namespace

std::string render_json(const SweepReport& rep, const RenderOptions& opt) {
  return report_json(rep, opt).dump(2) + "\n";
}

std::string render_json(std::span<const SweepReport> reps,
                        const RenderOptions& opt) {
  ordered_json arr = ordered_json::array();
  for (const SweepReport& rep : reps) arr.push_back(report_json(rep, opt));
  return arr.dump(2) + "\n";
}

std::string render_text(const SweepReport& rep, const RenderOptions& opt) {
  std::ostringstream out;
  out << rep.command;
  if (!rep.lemma.empty()) out << " --lemma " << rep.lemma;
  out << "  m=" << rep.m << "  seed=" << rep.seed << '\n';
  if (!rep.params.empty()) {
    out << "params:";
    for (const auto& [key, value] : rep.params) {
      out << ' ' << key << '=' << value;
    }
    out << '\n';
  }
  if (!rep.conjugators.empty()) {
    out << "conjugators: " << rep.conjugators.size() << "  branches: ++ "
        << rep.branches[0] << ", +- " << rep.branches[1] << ", -+ "
        << rep.branches[2] << ", -- " << rep.branches[3] << '\n';
  }
  out << "cases: " << rep.cases << '\n';
  const long long shown = rendered_violation_count(rep, opt);
  for (long long i = 0; i < shown; ++i) {
    const Violation& v = rep.violations[static_cast<std::size_t>(i)];
    out << "violation: g=" << v.g << " r=" << v.r << " s=" << v.s << "  "
        << v.detail << '\n';
  }
  if (shown < static_cast<long long>(rep.violations.size())) {
    out << "(" << rep.violations.size() - shown
        << " further violations suppressed)\n";
  }
  out << "violations: " << rep.violations.size() << '\n';
  if (opt.include_elapsed) out << "elapsed_ms: " << rep.elapsed_ms << '\n';
  out << (rep.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace leftorder::glue
