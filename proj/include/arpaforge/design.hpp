#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arpaforge/rational.hpp"
#include "arpaforge/words.hpp"

namespace arpaforge {

/// A multiset of fixed-length rows over a finite alphabet. Rows are kept in
/// a sorted map from word to multiplicity, so equality "up to the order of
/// the rows" is plain structural equality.
class DesignArray {
public:
    DesignArray(int columns, int alphabet);

    void add_rows(const Word& w, const BigInt& mult);
    void remove_rows(const Word& w, const BigInt& mult);

    int columns() const { return columns_; }
    int alphabet() const { return alphabet_; }
    const std::map<Word, BigInt>& rows() const { return rows_; }
    BigInt row_count() const;
    BigInt multiplicity(const Word& w) const;
    bool empty() const { return rows_.empty(); }

    /// Number of rows (with multiplicity) of each weight, indexed 0..columns.
    std::vector<BigInt> weight_profile() const;

    /// Multiplies every multiplicity by f > 0.
    void scale(const BigInt& f);

    friend bool operator==(const DesignArray& a, const DesignArray& b) = default;

private:
    int columns_;
    int alphabet_;
    std::map<Word, BigInt> rows_;
};

enum class DesignKind { arpa, cpa };

std::string kind_str(DesignKind k);

/// A pair of same-shape arrays together with its declared parameters:
/// (q, p, k) for the symbol-side family, (nu, d, k) for the Boolean-side
/// family. `n` holds q or nu, `cap` holds p or d.
struct DesignPair {
    DesignKind kind;
    int n;
    int cap;
    int k;
    DesignArray first;
    DesignArray second;

    friend bool operator==(const DesignPair& a, const DesignPair& b) = default;
};

/// Validates shapes and the shared row count forced by the strength
/// condition, then assembles the pair.
DesignPair make_pair(DesignKind kind, int n, int cap, int k, DesignArray first,
                     DesignArray second);

/// Target row of the pair's first array: 0 1 ... q-1 for the symbol side,
/// all-ones for the Boolean side.
Word target_row(const DesignPair& pair);

struct ConditionCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // first concrete offender, empty when passing
};

struct Verdict {
    std::vector<ConditionCheck> conditions;
    bool pass() const;
    std::string str() const;
};

struct KMismatch {
    std::vector<int> columns;
    Word projection;
    BigInt count_first;
    BigInt count_second;
};

/// First column subset (in lexicographic order) on which the two arrays'
/// projections differ as multisets, or nullopt if none does.
std::optional<KMismatch> find_k_mismatch(const DesignArray& a, const DesignArray& b, int k);

/// The strength condition: every k-column projection of a and b agrees as a
/// multiset. Exhaustive over all column subsets.
bool check_k_equal(const DesignArray& a, const DesignArray& b, int k);

/// Checks the two membership conditions of the Boolean-side family (target
/// row present; second-array rows of weight at most d) plus strength k.
Verdict check_cpa(const DesignPair& pair, int nu, int d, int k);
Verdict check_cpa(const DesignPair& pair);

/// Symbol-side analogue: identity row present; second-array rows use at
/// most p distinct symbols; strength k.
Verdict check_arpa(const DesignPair& pair, int q, int p, int k);
Verdict check_arpa(const DesignPair& pair);

/// Frequency of the target row: multiplicity of that row in `first` over the
/// common row count. Assumes the pair passes its kind's check.
Rational ratio(const DesignPair& pair);

DesignArray interpretation(const DesignArray& a);

/// Maps a symbol-side pair to its Boolean-side counterpart; target-row
/// multiplicity and row counts carry over unchanged.
DesignPair interpretation(const DesignPair& pair);

/// True iff applying the interpretation map to both arrays of `arpa`
/// reproduces `cpa` exactly (as row multisets).
bool interprets_as(const DesignPair& arpa, const DesignPair& cpa);

/// Upper bound 2 / (sum_{h=0}^{k} C(nu,h) C(nu-1-h, k-h) + 1) on the target
/// ratio of Boolean pairs with weight cap equal to the strength.
Rational theorem3_bound(int nu, int k);

struct WeightEqualityReport {
    bool pass = false;
    /// Both sides of the k+1 weight-profile balance equations.
    std::vector<BigInt> lhs, rhs;
    /// a_h - b_h - (-1)^{k-h} sum_{i>k} C(i,h) C(i-1-h, k-h) b_i, all zero
    /// for a pair of strength k with cap d = k.
    std::vector<BigInt> residuals;
};

/// Evaluates the weight-profile identities satisfied by Boolean pairs with
/// d = k: the h-indexed balance equations and their induced residual form.
WeightEqualityReport weight_equalities(const DesignPair& pair, int nu, int k);

/// Row-extension: appends the suffix (q-p+k, ..., q-1) to every row of a
/// pair with parameters (q-p+k, k, k), producing a pair with parameters
/// (q, p, k) and the same target ratio. Requires q > p > k.
DesignPair extend_arpa(const DesignPair& pair, int q, int p, int k);

}  // namespace arpaforge
