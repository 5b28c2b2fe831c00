#pragma once

#include <string>
#include <vector>

namespace reslat {

/// Built-in case studies, each a deterministic self-checking report. The
/// returned text is byte-stable; `ok` is false when a case study's expected
/// outcome failed to reproduce.
struct ReproOutcome {
  std::string text;
  bool ok = true;
};

std::vector<std::string> repro_ids();
ReproOutcome run_repro(const std::string& id);

}  // namespace reslat
