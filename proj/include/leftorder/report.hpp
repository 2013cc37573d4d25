#pragma once

#include <span>
#include <string>

#include "leftorder/glue.hpp"

namespace leftorder::glue {

// Rendering of SweepReport.  Reports carry a wall-clock elapsed_ms, but
// the rendered value is 0 unless include_elapsed is set: identical
// config + seed must give byte-identical output, and timing is the one
// nondeterministic field.
struct RenderOptions {
  bool include_elapsed = false;
  // Caps the rendered violation list; < 0 means unlimited.  The full
  // count is always present as violations_total.
  long long max_violations = -1;
};

// JSON object per the stable schema {"command", "m", "seed", "params",
// "cases", "violations", "pass", "elapsed_ms"}; additional keys
// ("lemma", "violations_total", "conjugators", "branches") extend it
// when meaningful.  Two-space indentation, trailing newline.
std::string render_json(const SweepReport& rep, const RenderOptions& opt = {});

// JSON array of report objects (the `verify --lemma all` form).
std::string render_json(std::span<const SweepReport> reps,
                        const RenderOptions& opt = {});

std::string render_text(const SweepReport& rep, const RenderOptions& opt = {});

}  // namespace leftorder::glue
