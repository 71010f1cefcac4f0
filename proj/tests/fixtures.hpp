#pragma once

#include "arpaforge/design.hpp"

// Hand-entered reference designs used across the test suites. Each fixture
// is an explicit pair with its declared parameters; the suites verify the
// membership conditions, ratios and cross-family interpretations on them.
namespace fixtures {

using arpaforge::DesignPair;

// Symbol-side reference pairs: (4,3,2), (5,3,2), (5,4,3).
DesignPair arpa_432();
DesignPair arpa_532();
DesignPair arpa_543();

// Boolean-side counterparts with the same parameters and ratios.
DesignPair cpa_432();
DesignPair cpa_532();
DesignPair cpa_543();

// Lifted pairs: the (5,2,2) and (5,4,3) outputs of the row construction.
DesignPair lifted_522();
DesignPair lifted_543();

// The (4,2,1) strength-1 lifted pair.
DesignPair lifted_421();

}  // namespace fixtures
