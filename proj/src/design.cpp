#include "arpaforge/design.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#include "arpaforge/exactmath.hpp"
#include "arpaforge/parallel.hpp"

namespace arpaforge {

DesignArray::DesignArray(int columns, int alphabet) : columns_(columns), alphabet_(alphabet) {
    if (columns < 1) throw std::invalid_argument("DesignArray: need at least one column");
    if (alphabet < 1) throw std::invalid_argument("DesignArray: need at least one symbol");
}

void DesignArray::add_rows(const Word& w, const BigInt& mult) {
    if (static_cast<int>(w.size()) != columns_)
        throw std::invalid_argument("DesignArray: row length does not match column count");
    for (int c : w)
        if (c < 0 || c >= alphabet_)
            throw std::invalid_argument("DesignArray: symbol out of alphabet range");
    if (mult < 1) throw std::invalid_argument("DesignArray: multiplicity must be positive");
    rows_[w] += mult;
}

void DesignArray::remove_rows(const Word& w, const BigInt& mult) {
    auto it = rows_.find(w);
    if (it == rows_.end() || it->second < mult)
        throw std::invalid_argument("DesignArray: removing more rows than present");
    it->second -= mult;
    if (it->second == 0) rows_.erase(it);
}

BigInt DesignArray::row_count() const {
    BigInt total = 0;
    for (const auto& [w, m] : rows_) total += m;
    return total;
}

BigInt DesignArray::multiplicity(const Word& w) const {
    auto it = rows_.find(w);
    return it == rows_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> DesignArray::weight_profile() const {
    std::vector<BigInt> profile(columns_ + 1, BigInt(0));
    for (const auto& [w, m] : rows_) profile[weight(w)] += m;
    return profile;
}

void DesignArray::scale(const BigInt& f) {
    if (f < 1) throw std::invalid_argument("DesignArray: scale factor must be positive");
    for (auto& [w, m] : rows_) m *= f;
}

std::string kind_str(DesignKind k) { return k == DesignKind::arpa ? "arpa" : "cpa"; }

DesignPair make_pair(DesignKind kind, int n, int cap, int k, DesignArray first,
                     DesignArray second) {
    if (k < 1) throw std::invalid_argument("make_pair: strength k must be at least 1");
    if (cap < k || n < cap)
        throw std::invalid_argument("make_pair: parameters must satisfy k <= cap <= n");
    if (first.columns() != n || second.columns() != n)
        throw std::invalid_argument("make_pair: arrays must have n columns");
    int expected_alphabet = kind == DesignKind::arpa ? n : 2;
    if (first.alphabet() != expected_alphabet || second.alphabet() != expected_alphabet)
        throw std::invalid_argument("make_pair: array alphabet does not match the pair kind");
    if (first.row_count() != second.row_count())
        throw std::invalid_argument("make_pair: the two arrays must have the same row count");
    if (first.empty()) throw std::invalid_argument("make_pair: arrays must be non-empty");
    return DesignPair{kind, n, cap, k, std::move(first), std::move(second)};
}

Word target_row(const DesignPair& pair) {
    return pair.kind == DesignKind::arpa ? identity_word(pair.n) : ones_word(pair.n);
}

bool Verdict::pass() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionCheck& c) { return c.pass; });
}

std::string Verdict::str() const {
    std::ostringstream os;
    for (const auto& c : conditions) {
        os << c.name << ": " << (c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.witness.empty()) os << "  (" << c.witness << ")";
        os << '\n';
    }
    os << "overall: " << (pass() ? "pass" : "FAIL") << '\n';
    return os.str();
}

namespace {

std::map<Word, BigInt> project(const DesignArray& a, const std::vector<int>& cols) {
    std::map<Word, BigInt> out;
    Word proj(cols.size());
    for (const auto& [w, m] : a.rows()) {
        for (size_t j = 0; j < cols.size(); ++j) proj[j] = w[cols[j]];
        out[proj] += m;
    }
    return out;
}

std::optional<KMismatch> mismatch_at(const DesignArray& a, const DesignArray& b,
                                     const std::vector<int>& cols) {
    auto pa = project(a, cols);
    auto pb = project(b, cols);
    if (pa == pb) return std::nullopt;
    // Report the smallest projection whose counts differ.
    auto ia = pa.begin();
    auto ib = pb.begin();
    while (ia != pa.end() && ib != pb.end()) {
        if (ia->first < ib->first) return KMismatch{cols, ia->first, ia->second, 0};
        if (ib->first < ia->first) return KMismatch{cols, ib->first, 0, ib->second};
        if (ia->second != ib->second) return KMismatch{cols, ia->first, ia->second, ib->second};
        ++ia, ++ib;
    }
    if (ia != pa.end()) return KMismatch{cols, ia->first, ia->second, 0};
    return KMismatch{cols, ib->first, 0, ib->second};
}

void validate_k_inputs(const DesignArray& a, const DesignArray& b, int k) {
    if (a.columns() != b.columns() || a.alphabet() != b.alphabet())
        throw std::invalid_argument("check_k_equal: arrays must share shape and alphabet");
    if (k < 1) throw std::invalid_argument("check_k_equal: strength k must be at least 1");
    if (k > a.columns()) throw std::invalid_argument("check_k_equal: k exceeds column count");
}

}  // namespace

std::optional<KMismatch> find_k_mismatch(const DesignArray& a, const DesignArray& b, int k) {
    validate_k_inputs(a, b, k);
    std::vector<std::vector<int>> subsets;
    for_each_combination(a.columns(), k, [&](const std::vector<int>& cols) { subsets.push_back(cols); });

    ChunkedRange range(subsets.size());
    std::vector<std::optional<KMismatch>> found(range.chunk_count());
    std::atomic<bool> abort{false};
    range.run([&](std::size_t begin, std::size_t end, std::size_t chunk) {
        for (std::size_t i = begin; i < end && !abort.load(std::memory_order_relaxed); ++i) {
            if (auto m = mismatch_at(a, b, subsets[i])) {
                found[chunk] = std::move(m);
                abort.store(true, std::memory_order_relaxed);
                return;
            }
        }
    });
    // Chunks cover the subset list in order, so the first non-empty slot is a
    // deterministic witness even though later chunks may also have aborted.
    for (auto& m : found)
        if (m) return m;
    return std::nullopt;
}

bool check_k_equal(const DesignArray& a, const DesignArray& b, int k) {
    return !find_k_mismatch(a, b, k).has_value();
}

namespace {

ConditionCheck check_target_row(const DesignPair& pair, const char* name) {
    ConditionCheck c{name, false, ""};
    Word target = target_row(pair);
    if (pair.first.multiplicity(target) > 0) {
        c.pass = true;
    } else {
        c.witness = "row '" + word_str(target) + "' absent from the first array";
    }
    return c;
}

ConditionCheck check_strength(const DesignPair& pair, int k) {
    ConditionCheck c{"k_equal", false, ""};
    auto mism = find_k_mismatch(pair.first, pair.second, k);
    if (!mism) {
        c.pass = true;
    } else {
        std::ostringstream os;
        os << "columns {";
        for (size_t j = 0; j < mism->columns.size(); ++j)
            os << (j ? " " : "") << mism->columns[j];
        os << "} projection '" << word_str(mism->projection) << "' occurs " << mism->count_first
           << " vs " << mism->count_second << " times";
        c.witness = os.str();
    }
    return c;
}

void validate_pair_params(const DesignPair& pair, DesignKind kind, int n, int cap, int k) {
    if (pair.kind != kind) throw std::invalid_argument("check: pair has the wrong kind");
    if (pair.first.columns() != n)
        throw std::invalid_argument("check: pair does not have the requested column count");
    if (k < 1 || cap < k || n < cap)
        throw std::invalid_argument("check: parameters must satisfy 1 <= k <= cap <= n");
}

}  // namespace

Verdict check_cpa(const DesignPair& pair, int nu, int d, int k) {
    validate_pair_params(pair, DesignKind::cpa, nu, d, k);
    Verdict v;
    v.conditions.push_back(check_target_row(pair, "delta_N"));

    ConditionCheck cd{"delta_D", true, ""};
    for (const auto& [w, m] : pair.second.rows()) {
        if (weight(w) > d) {
            cd.pass = false;
            cd.witness = "row '" + word_str(w) + "' has weight " + std::to_string(weight(w)) +
                         " > " + std::to_string(d);
            break;
        }
    }
    v.conditions.push_back(std::move(cd));
    v.conditions.push_back(check_strength(pair, k));
    return v;
}

Verdict check_cpa(const DesignPair& pair) { return check_cpa(pair, pair.n, pair.cap, pair.k); }

Verdict check_arpa(const DesignPair& pair, int q, int p, int k) {
    validate_pair_params(pair, DesignKind::arpa, q, p, k);
    Verdict v;
    v.conditions.push_back(check_target_row(pair, "gamma_Q"));

    ConditionCheck cp{"gamma_P", true, ""};
    for (const auto& [w, m] : pair.second.rows()) {
        int s = distinct_symbols(w);
        if (s > p) {
            cp.pass = false;
            cp.witness = "row '" + word_str(w) + "' uses " + std::to_string(s) +
                         " distinct symbols > " + std::to_string(p);
            break;
        }
    }
    v.conditions.push_back(std::move(cp));
    v.conditions.push_back(check_strength(pair, k));
    return v;
}

Verdict check_arpa(const DesignPair& pair) { return check_arpa(pair, pair.n, pair.cap, pair.k); }

Rational ratio(const DesignPair& pair) {
    return Rational(pair.first.multiplicity(target_row(pair)), pair.second.row_count());
}

DesignArray interpretation(const DesignArray& a) {
    DesignArray out(a.columns(), 2);
    for (const auto& [w, m] : a.rows()) out.add_rows(interpretation(w), m);
    return out;
}

DesignPair interpretation(const DesignPair& pair) {
    if (pair.kind != DesignKind::arpa)
        throw std::invalid_argument("interpretation: expects a symbol-side pair");
    return make_pair(DesignKind::cpa, pair.n, pair.cap, pair.k, interpretation(pair.first),
                     interpretation(pair.second));
}

bool interprets_as(const DesignPair& arpa, const DesignPair& cpa) {
    if (arpa.kind != DesignKind::arpa || cpa.kind != DesignKind::cpa)
        throw std::invalid_argument("interprets_as: expects a symbol-side and a Boolean-side pair");
    if (arpa.n != cpa.n || arpa.first.row_count() != cpa.first.row_count()) return false;
    return interpretation(arpa.first) == cpa.first && interpretation(arpa.second) == cpa.second;
}

Rational theorem3_bound(int nu, int k) {
    if (k < 1 || nu <= k) throw std::invalid_argument("theorem3_bound: requires nu > k >= 1");
    BigInt denom = 1;
    for (int h = 0; h <= k; ++h) denom += binom(nu, h) * binom(nu - 1 - h, k - h);
    return Rational(BigInt(2), denom);
}

WeightEqualityReport weight_equalities(const DesignPair& pair, int nu, int k) {
    validate_pair_params(pair, DesignKind::cpa, nu, k, k);
    if (pair.cap != k)
        throw std::invalid_argument("weight_equalities: pair must have weight cap d = k");

    std::vector<BigInt> b = pair.first.weight_profile();
    std::vector<BigInt> a = pair.second.weight_profile();

    WeightEqualityReport report;
    report.pass = true;
    for (int h = 0; h <= k; ++h) {
        BigInt lhs = 0;
        for (int i = h; i <= nu - k + h; ++i) lhs += binom(i, h) * binom(nu - i, k - h) * b[i];
        BigInt rhs = 0;
        for (int i = h; i <= k; ++i) rhs += binom(i, h) * binom(nu - i, k - h) * a[i];
        report.lhs.push_back(lhs);
        report.rhs.push_back(rhs);
        if (lhs != rhs) report.pass = false;
    }
    for (int h = 0; h <= k; ++h) {
        BigInt tail = 0;
        for (int i = k + 1; i <= nu; ++i) tail += binom(i, h) * binom(i - 1 - h, k - h) * b[i];
        if ((k - h) % 2 != 0) tail = -tail;
        BigInt residual = a[h] - b[h] - tail;
        report.residuals.push_back(residual);
        if (residual != 0) report.pass = false;
    }
    return report;
}

DesignPair extend_arpa(const DesignPair& pair, int q, int p, int k) {
    if (!(q > p && p > k)) throw std::invalid_argument("extend_arpa: requires q > p > k");
    int base = q - p + k;
    if (pair.kind != DesignKind::arpa || pair.n != base || pair.cap != k || pair.k != k)
        throw std::invalid_argument("extend_arpa: input must have parameters (q-p+k, k, k)");
    if (!check_arpa(pair).pass())
        throw std::invalid_argument("extend_arpa: input pair fails its own verification");

    auto extend = [&](const DesignArray& a) {
        DesignArray out(q, q);
        for (const auto& [w, m] : a.rows()) {
            Word longer = w;
            for (int j = base; j < q; ++j) longer.push_back(j);
            out.add_rows(longer, m);
        }
        return out;
    };
    return make_pair(DesignKind::arpa, q, p, k, extend(pair.first), extend(pair.second));
}

}  // namespace arpaforge
