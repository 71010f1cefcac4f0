#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arpaforge/design.hpp"
#include "arpaforge/regular.hpp"

namespace arpaforge {

/// Sparse signed encoding of a symbol-side pair: entry(u) counts the
/// occurrences of row u, in the first array when negative and the second
/// when positive. Built from a z-encoding by the lift; `scale` is the
/// positive integer that cleared the construction's fractional weights
/// (the source pair must be scaled by the same factor to stay aligned).
struct ZTilde {
    int nu = 0;
    int k = 0;
    int d_prime = 0;
    BigInt scale = 1;
    std::map<Word, BigInt> entries;
};

/// Largest weight below nu carried by the encoding, searched over {d..nu-1}.
int z_top_weight(const ZEnc& z);

/// Smallest element of J union {nu - r}.
int c_star(const std::vector<int>& J, int nu, int r);

/// Anchor row of class J: coordinate j is j on J and c_star(J) elsewhere.
Word g_word(const std::vector<int>& J, int nu, int r);

/// Graded rows of class J: coordinate j is j on J, c+1 on coordinates
/// <= c outside J, and c above. Requires 0 <= c < c_star(J) in context.
Word g_c_word(const std::vector<int>& J, int c, int nu);

/// Symbol budget guaranteed for the lifted pair: d+2 when the encoding
/// carries weights above d, d+1 when weight d-1 sits on the positive side,
/// d otherwise.
int d_prime(const ZEnc& z);

/// The lift: expands a z-encoding of a regular Boolean-side pair into the
/// row encoding of a symbol-side pair of the same strength and ratio.
/// Requires z[d] > 0 and, unless enforce_balance is cleared, the full set
/// of balance equations. A failed per-class conservation check afterwards
/// is an internal error, never a soft failure.
ZTilde lift(const ZEnc& z, bool enforce_balance = true);

/// Splits a scaled encoding into the explicit pair: negative entries fill
/// the first array, positive ones the second.
DesignPair materialize_lift(const ZTilde& t);

/// f(h, lam, c) = sum_{i=h}^{r} C(nu-c-h-lam, i-h) C(nu-c-i, r-i)
///                / C(nu-1-i, r-i) * z_i.
/// Vanishes whenever h + lam < k and c <= nu - r, for every balanced z.
Rational f_z_eval(const ZEnc& z, int h, int lam, int c);

/// Row-count balance at mixed data (H, L, v): the signed number of rows u
/// with u_j = j on H and u_L = v. Zero for every v that differs from the
/// identity pattern on L whenever the pair has strength k.
Rational r_count(const ZTilde& t, const std::vector<int>& H, const std::vector<int>& L,
                 const Word& v);

/// One sampled tuple of the mixed-projection cross-check.
struct MixedProjectionCase {
    int case_id = 0;  // 1..6, the table's classification
    std::vector<int> H, L;
    Word v;
    int c = 0, s = 0;
    Rational direct;
    Rational expected;
};

struct MixedProjectionReport {
    std::vector<long> case_counts = std::vector<long>(7, 0);  // index 1..6
    long extra_zero_tuples = 0;  // valid tuples outside the six cases
    bool all_zero = true;
    bool all_match = true;
    std::vector<MixedProjectionCase> failures;
};

/// Exhaustive cross-check of the strength condition on mixed projections:
/// for every admissible (H, L, v), the direct row count over the lifted
/// encoding must equal the tabulated f-combination, and both must vanish.
MixedProjectionReport mixed_projection_check(const ZTilde& t, const ZEnc& z);

struct LiftReport {
    bool interprets = false;     // lifted pair maps back onto the source pair
    bool symbol_budget = false;  // second array stays within d_prime symbols
    bool k_equal = false;        // strength condition on the lifted pair
    std::optional<MixedProjectionReport> mixed;  // populated for small nu

    bool pass() const;
    std::string str() const;
};

/// Verifies the three guarantees of the lift against an explicit source
/// pair (already scale-aligned), plus the mixed-projection cross-check
/// when nu is small enough to enumerate.
LiftReport verify_lift(const DesignPair& arpa, const DesignPair& cpa, int dprime);

/// Text dump of an encoding; coordinates that match their column index are
/// flagged with '*'.
std::string ztilde_text(const ZTilde& t);

}  // namespace arpaforge
