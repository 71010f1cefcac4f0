#pragma once

#include <functional>
#include <string>
#include <vector>

namespace arpaforge {

/// A fixed-length row over the alphabet {0, ..., alphabet-1}. Rows of the
/// symbol-side arrays (Q, P) use alphabet q; rows of the Boolean-side
/// arrays (N, D) use alphabet 2.
using Word = std::vector<int>;

/// Number of non-zero coordinates.
int weight(const Word& w);

/// (0, 1, ..., n-1), the target row of the symbol-side arrays.
Word identity_word(int n);

/// (1, 1, ..., 1), the target row of the Boolean-side arrays.
Word ones_word(int n);

/// The Boolean interpretation of a symbol row: coordinate j of the output
/// is 1 exactly when w[j] == j.
Word interpretation(const Word& w);

/// Number of distinct symbols occurring in w.
int distinct_symbols(const Word& w);

/// Calls fn once per k-element subset of {0, ..., n-1}, in lexicographic
/// order; subsets are passed as sorted index vectors.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

std::string word_str(const Word& w);

}  // namespace arpaforge
