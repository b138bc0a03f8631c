#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace catalan {

// Named, deterministic verification suites runnable from the command line.
// Each replays one lemma-sized piece of the development on fixed-seed data
// and reports pass/fail; a failure would be a falsification, not a tolerance
// miss.
std::vector<std::string> lemma_check_names();
bool has_lemma_check(const std::string& name);
Report run_lemma_check(const std::string& name);

} // namespace catalan
