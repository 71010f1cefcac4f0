#include "arpaforge/words.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace arpaforge {

int weight(const Word& w) {
    int count = 0;
    for (int c : w)
        if (c != 0) ++count;
    return count;
}

Word identity_word(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Word ones_word(int n) { return Word(n, 1); }

Word interpretation(const Word& w) {
    Word out(w.size());
    for (size_t j = 0; j < w.size(); ++j) out[j] = (w[j] == static_cast<int>(j)) ? 1 : 0;
    return out;
}

int distinct_symbols(const Word& w) {
    std::set<int> symbols(w.begin(), w.end());
    return static_cast<int>(symbols.size());
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string word_str(const Word& w) {
    std::string out;
    for (size_t j = 0; j < w.size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(w[j]);
    }
    return out;
}

}  // namespace arpaforge
