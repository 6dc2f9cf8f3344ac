#pragma once

#include <string>

#include "hgc/hopf.hpp"

namespace hgc {

/// Named small groups: "e", "c2", "c3", "s3" (S3 as permutations of
/// {1,2,3} in cycle notation).  Throws Error("UnknownDemo") otherwise.
FiniteGroup demo_group(const std::string& name);

/// Group algebra of the cyclic group of order two with its standard Hopf
/// structure (grouplike generator).
OrdinaryHopf kc2_hopf(const Field& f);

/// The four-dimensional algebra with basis {1, g, x, gx}, relations
/// g^2 = 1, x^2 = 0, xg = -gx, comultiplication determined by grouplike g
/// and (1, g)-skew-primitive x.  Requires characteristic != 2; throws
/// Error("CharacteristicConflict") otherwise.
OrdinaryHopf sweedler4_hopf(const Field& f);

/// Dispatcher used by the command line tool: family is one of "trivial",
/// "kc2", "sweedler4" (constant families except for "trivial"); group as in
/// demo_group.  Throws Error("UnknownDemo") on unknown names.
HopfGC demo_hopf(const std::string& family, const std::string& group,
                 const Field& f);

}  // namespace hgc
