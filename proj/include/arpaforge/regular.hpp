#pragma once

#include <vector>

#include "arpaforge/design.hpp"

namespace arpaforge {

/// Per-weight multiplicities of a regular Boolean-side pair: y[i] counts the
/// occurrences of each weight-i word in the first array (i = 0..nu), x[i]
/// in the second (i = 0..d). Fully describes the pair.
struct RepVec {
    int nu = 0;
    int d = 0;
    int k = 0;
    std::vector<BigInt> y;  // nu + 1 entries
    std::vector<BigInt> x;  // d + 1 entries

    friend bool operator==(const RepVec& a, const RepVec& b) = default;
};

/// Signed merge of a representative vector for pairs whose arrays share no
/// row: z[i] = x[i] - y[i] for i <= d and -y[i] above, so the sign selects
/// the array. z[nu] < 0 always (the all-ones rows live in the first array).
struct ZEnc {
    int nu = 0;
    int d = 0;
    int k = 0;
    std::vector<BigInt> z;  // nu + 1 entries

    friend bool operator==(const ZEnc& a, const ZEnc& b) = default;
};

void validate(const RepVec& v);
void validate(const ZEnc& z);

/// True iff, for each weight i, all C(nu, i) words of that weight occur with
/// one common multiplicity (possibly zero). Boolean alphabet only.
bool is_regular(const DesignArray& a);

/// Closure of a Boolean-side pair under all column permutations, computed
/// arithmetically: each weight-i source row contributes i! (nu-i)! copies of
/// every weight-i word. Output is regular with the same target ratio. With
/// reduce = true all multiplicities are divided by their collective gcd.
DesignPair symmetrize(const DesignPair& pair, bool reduce = false);

/// Reads the per-weight multiplicities off a regular pair.
RepVec rep_vector(const DesignPair& pair);

/// Expands a representative vector into the explicit pair it describes.
/// Rejects vectors that fail the balance equations at their strength or
/// have no all-ones rows.
DesignPair materialize(const RepVec& v);

/// The k+1 balance equations
///   sum_{i=h}^{nu-k+h} C(nu-k, i-h) y_i = sum_{i=h}^{d} C(nu-k, i-h) x_i
/// that characterize representative vectors of pairs of strength k.
bool check_eq4(const RepVec& v, int k);

/// Homogeneous form of the balance equations on a z-encoding.
bool check_eq6(const ZEnc& z, int k);
bool check_eq6(const ZEnc& z);

/// Signed merge; rejects vectors whose arrays share a weight class.
ZEnc to_z(const RepVec& v);

/// Splits a z-encoding back by sign.
RepVec from_z(const ZEnc& z);

/// Removes min(y_i, x_i) from both sides of every shared weight class;
/// balance equations and the target ratio's numerator are unaffected.
RepVec strip_common(const RepVec& v);

}  // namespace arpaforge
