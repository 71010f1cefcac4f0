#pragma once

#include <string>

#include "arpaforge/design.hpp"
#include "arpaforge/lift.hpp"
#include "arpaforge/regular.hpp"

namespace arpaforge {

/// JSON object {kind, params:{q|nu, p|d, k}, first:[{row:[...], mult:n}], second:[...]}.
std::string pair_to_json(const DesignPair& pair);
DesignPair pair_from_json(const std::string& text);

/// Plain-text grid, one row per line with an optional "x<mult>" suffix:
///   cpa nu=5 d=4 k=3
///   N:
///   1 1 1 1 1 x3
///   ...
///   D:
///   ...
std::string pair_to_text(const DesignPair& pair);
DesignPair pair_from_text(const std::string& text);

/// CSV with one line per array row: side,mult,c0,...,c{n-1}.
std::string pair_to_csv(const DesignPair& pair);

std::string repvec_to_json(const RepVec& v);
RepVec repvec_from_json(const std::string& text);

std::string zenc_to_json(const ZEnc& z);
ZEnc zenc_from_json(const std::string& text);

std::string ztilde_to_json(const ZTilde& t);
ZTilde ztilde_from_json(const std::string& text);

/// Canonical row order used by every renderer: descending interpretation
/// weight, then ascending row. Keeps all text output byte-stable.
std::vector<std::pair<Word, BigInt>> canonical_rows(const DesignArray& a);

}  // namespace arpaforge
