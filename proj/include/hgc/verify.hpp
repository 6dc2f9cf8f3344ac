#pragma once

#include <string>
#include <vector>

#include "hgc/double.hpp"

namespace hgc {

/// The named verification suites that can run over a loaded double:
/// "bialgebra", "hopf", "qt", "modules" and "all".
std::vector<std::string> suite_names();

/// Runs one suite.  Unknown names throw Error("UnsupportedSuite").  Missing
/// optional sections and structural faults inside corrupted-but-parseable
/// inputs are converted into failed checks, never exceptions, so a report
/// always comes back.
///
/// The modules suite rebuilds the regular module of the core, restricts it
/// to every conjugation orbit, reads the restrictions back as crossed
/// modules, and checks their laws, the round trips, the braiding
/// cancellations, the agreement of the element-induced braiding with the
/// structural one, and the recovery of the braiding elements.
ValidationReport run_suite(const DrinfeldDouble& d, const std::string& suite);

}  // namespace hgc
