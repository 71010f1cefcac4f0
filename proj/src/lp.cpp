#include "arpaforge/lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "arpaforge/exactmath.hpp"

namespace arpaforge {

namespace {

void validate_params(int nu, int d, int k, const char* who) {
    if (!(1 <= k && k <= d && d < nu))
        throw std::invalid_argument(std::string(who) + ": requires 1 <= k <= d < nu");
}

}  // namespace

void validate(const OptSequence& s, int nu, int d, int k) {
    validate_params(nu, d, k, "OptSequence");
    if (static_cast<int>(s.idx.size()) != k + 2)
        throw std::invalid_argument("OptSequence: needs k+2 entries");
    if (s.idx.front() != 0 || s.idx[k] != d || s.idx[k + 1] != nu)
        throw std::invalid_argument("OptSequence: must run 0 < ... < d < nu");
    for (size_t j = 0; j + 1 < s.idx.size(); ++j)
        if (s.idx[j] >= s.idx[j + 1])
            throw std::invalid_argument("OptSequence: entries must be strictly increasing");
}

std::vector<std::vector<BigInt>> lp_matrix(int nu, int d, int k) {
    validate_params(nu, d, k, "lp_matrix");
    std::vector<std::vector<BigInt>> m(k + 1, std::vector<BigInt>(nu + d + 1));
    for (int h = 0; h <= k; ++h)
        for (int i = 0; i <= nu + d; ++i)
            m[h][i] = (i < nu) ? -binom(nu - k, i - h) : binom(nu - k, i - nu - h);
    return m;
}

bool is_base(const std::set<int>& Y, const std::set<int>& X, int k) {
    std::set<int> uni = Y;
    uni.insert(X.begin(), X.end());
    if (static_cast<int>(uni.size()) != static_cast<int>(Y.size() + X.size())) return false;
    return static_cast<int>(uni.size()) == k + 1;
}

bool is_base(const Base& b, int k) { return is_base(b.Y, b.X, k); }

Rational BasicSolution::objective(int nu) const {
    Rational total;
    for (const auto& [i, v] : y) total += Rational(binom(nu, i)) * v;
    for (const auto& [i, v] : x) total += Rational(binom(nu, i)) * v;
    return total;
}

namespace {

Rational support_product(const std::vector<int>& uni, int i, int nu) {
    Rational prod(1);
    for (int a : uni)
        if (a != i) prod *= Rational(BigInt(nu - a), BigInt(i - a));
    return prod;
}

std::vector<int> sorted_union(const Base& b) {
    std::vector<int> uni(b.Y.begin(), b.Y.end());
    uni.insert(uni.end(), b.X.begin(), b.X.end());
    std::sort(uni.begin(), uni.end());
    return uni;
}

}  // namespace

BasicSolution basic_solution(const Base& b, int nu) {
    int k = static_cast<int>(b.Y.size() + b.X.size()) - 1;
    if (!is_base(b, k)) throw std::invalid_argument("basic_solution: not a base");
    for (int i : b.Y)
        if (i < 0 || i >= nu) throw std::invalid_argument("basic_solution: Y out of range");
    for (int i : b.X)
        if (i < 0 || i > nu) throw std::invalid_argument("basic_solution: X out of range");

    std::vector<int> uni = sorted_union(b);
    BasicSolution sol;
    for (int i : b.Y) sol.y[i] = -support_product(uni, i, nu) / Rational(binom(nu, i));
    for (int i : b.X) sol.x[i] = support_product(uni, i, nu) / Rational(binom(nu, i));
    return sol;
}

bool is_feasible_base(const Base& b, int k) {
    if (!is_base(b, k)) return false;
    std::vector<int> uni = sorted_union(b);
    bool expect_x = true;  // memberships alternate X, Y, ... in decreasing order
    for (auto it = uni.rbegin(); it != uni.rend(); ++it, expect_x = !expect_x) {
        if (expect_x ? !b.X.count(*it) : !b.Y.count(*it)) return false;
    }
    return true;
}

Rational base_objective(const Base& b, int nu) {
    std::vector<int> uni = sorted_union(b);
    Rational total;
    for (int i : uni) {
        Rational prod(1);
        for (int a : uni)
            if (a != i) prod *= Rational(BigInt(nu - a), BigInt(std::abs(i - a)));
        total += prod;
    }
    return total;
}

namespace {

/// The divisor sum in the closed objective: value = 2 / (1 + sum).
Rational sequence_sum(const std::vector<int>& idx, int nu, int k) {
    Rational total;
    for (int r = 0; r <= k; ++r) {
        Rational prod(1);
        for (int s = 0; s < r; ++s) prod *= Rational(BigInt(nu - idx[s]), BigInt(idx[r] - idx[s]));
        for (int s = r + 1; s <= k; ++s)
            prod *= Rational(BigInt(nu - idx[s]), BigInt(idx[s] - idx[r]));
        total += prod;
    }
    return total;
}

}  // namespace

DeltaResult delta_opt(int nu, int d, int k) {
    validate_params(nu, d, k, "delta_opt");
    std::optional<DeltaResult> best;
    // Interior entries i_1 < ... < i_{k-1} range over {1 .. d-1}; the
    // endpoints 0, d, nu are pinned. Lexicographic enumeration plus
    // strict improvement keeps the lexicographically smallest argmax.
    for_each_combination(d - 1, k - 1, [&](const std::vector<int>& interior) {
        std::vector<int> idx;
        idx.push_back(0);
        for (int j : interior) idx.push_back(j + 1);
        idx.push_back(d);
        idx.push_back(nu);
        Rational value = Rational(2) / (Rational(1) + sequence_sum(idx, nu, k));
        if (!best || value > best->value) best = DeltaResult{value, OptSequence{idx}};
    });
    return *best;
}

BaseEnumResult delta_by_base_enumeration(int nu, int d, int k, bool prune) {
    validate_params(nu, d, k, "delta_by_base_enumeration");
    std::optional<Rational> best;
    std::vector<Base> argmin;
    long feasible = 0;

    // Every base is a (k+1)-subset of {0..nu-1} plus a side assignment with
    // the X side capped at d.
    for_each_combination(nu, k + 1, [&](const std::vector<int>& uni) {
        int m = k + 1;
        for (int mask = 0; mask < (1 << m); ++mask) {
            Base b;
            bool ok = true;
            for (int j = 0; j < m && ok; ++j) {
                if (mask & (1 << j)) {
                    if (uni[j] > d) ok = false;
                    b.X.insert(uni[j]);
                } else {
                    b.Y.insert(uni[j]);
                }
            }
            if (!ok || !is_feasible_base(b, k)) continue;
            ++feasible;
            if (prune && (!b.X.count(d) || (!b.X.count(0) && !b.Y.count(0)))) continue;
            Rational v = base_objective(b, nu);
            if (!best || v < *best) {
                best = v;
                argmin.clear();
                argmin.push_back(b);
            } else if (v == *best) {
                argmin.push_back(b);
            }
        }
    });
    if (!best) throw std::logic_error("delta_by_base_enumeration: no feasible base found");
    return BaseEnumResult{Rational(2) / (*best + Rational(1)), std::move(argmin), feasible};
}

std::vector<Rational> sequence_coefficients(const OptSequence& s, int nu) {
    int k = s.k();
    std::vector<Rational> coeffs;
    for (int r = 0; r <= k; ++r) {
        Rational prod(1);
        for (int t = 0; t <= k; ++t)
            if (t != r)
                prod *= Rational(BigInt(nu - s.idx[t]), BigInt(std::abs(s.idx[r] - s.idx[t])));
        coeffs.push_back(prod / Rational(binom(nu, s.idx[r])));
    }
    return coeffs;
}

BigInt min_rstar(const OptSequence& s, int nu) {
    BigInt rstar = 1;
    for (const Rational& c : sequence_coefficients(s, nu)) rstar = lcm(rstar, c.den());
    return rstar;
}

RepVec optimal_cpa(int nu, int d, int k) {
    DeltaResult opt = delta_opt(nu, d, k);
    const OptSequence& seq = opt.argmax;
    BigInt rstar = min_rstar(seq, nu);
    std::vector<Rational> coeffs = sequence_coefficients(seq, nu);

    RepVec v{nu, d, k, std::vector<BigInt>(nu + 1, BigInt(0)),
             std::vector<BigInt>(d + 1, BigInt(0))};
    for (int r = 0; r <= k; ++r) {
        Rational scaled = Rational(rstar) * coeffs[r];
        if (!scaled.is_integer())
            throw std::logic_error("optimal_cpa: R* failed to clear a coefficient denominator");
        if (r % 2 == k % 2)
            v.x[seq.idx[r]] = scaled.num();
        else
            v.y[seq.idx[r]] = scaled.num();
    }
    v.y[nu] = rstar;
    if (!check_eq4(v, k))
        throw std::logic_error("optimal_cpa: constructed vector fails its balance equations");
    return v;
}

std::optional<Rational> closed_form(int q, int p, int k) {
    if (!(1 <= k && k <= p && p <= q)) throw std::invalid_argument("closed_form: requires 1 <= k <= p <= q");
    if (p == k) {
        BigInt denom = 1;
        for (int i = 0; i <= k; ++i) denom += binom(q, i) * binom(q - i - 1, k - i);
        return Rational(BigInt(2), denom);
    }
    if (k == 1) return Rational(p, q);
    if (k == 2) {
        long lo = p / 2, hi = p - lo;
        return Rational(BigInt(hi) * BigInt(lo), BigInt(q - hi) * BigInt(q - lo));
    }
    return std::nullopt;
}

Rational gamma(int q, int p, int k) {
    if (!(1 <= k && k <= p && p <= q)) throw std::invalid_argument("gamma: requires 1 <= k <= p <= q");
    if (p == q) return Rational(1);
    return delta_opt(q, p, k).value;
}

}  // namespace arpaforge
