#include "arpaforge/regular.hpp"

#include <stdexcept>

#include "arpaforge/exactmath.hpp"

namespace arpaforge {

void validate(const RepVec& v) {
    if (v.k < 1 || v.d < v.k || v.nu < v.d)
        throw std::invalid_argument("RepVec: parameters must satisfy 1 <= k <= d <= nu");
    if (static_cast<int>(v.y.size()) != v.nu + 1 || static_cast<int>(v.x.size()) != v.d + 1)
        throw std::invalid_argument("RepVec: y needs nu+1 entries and x needs d+1");
    for (const auto& e : v.y)
        if (e < 0) throw std::invalid_argument("RepVec: negative multiplicity in y");
    for (const auto& e : v.x)
        if (e < 0) throw std::invalid_argument("RepVec: negative multiplicity in x");
}

void validate(const ZEnc& z) {
    if (z.k < 1 || z.d < z.k || z.nu <= z.d)
        throw std::invalid_argument("ZEnc: parameters must satisfy 1 <= k <= d < nu");
    if (static_cast<int>(z.z.size()) != z.nu + 1)
        throw std::invalid_argument("ZEnc: z needs nu+1 entries");
    if (z.z[z.nu] >= 0) throw std::invalid_argument("ZEnc: z[nu] must be negative");
    for (int i = z.d + 1; i < z.nu; ++i)
        if (z.z[i] > 0)
            throw std::invalid_argument("ZEnc: weights above d cannot occur in the second array");
}

bool is_regular(const DesignArray& a) {
    if (a.alphabet() != 2) throw std::invalid_argument("is_regular: needs a Boolean alphabet");
    int nu = a.columns();
    std::vector<BigInt> class_mult(nu + 1, BigInt(-1));
    for (const auto& [w, m] : a.rows()) {
        int i = weight(w);
        if (class_mult[i] == -1)
            class_mult[i] = m;
        else if (class_mult[i] != m)
            return false;
    }
    // A partially present weight class is irregular too.
    std::vector<BigInt> seen(nu + 1, BigInt(0));
    for (const auto& [w, m] : a.rows()) seen[weight(w)] += 1;
    for (int i = 0; i <= nu; ++i)
        if (seen[i] != 0 && seen[i] != binom(nu, i)) return false;
    return true;
}

DesignPair symmetrize(const DesignPair& pair, bool reduce) {
    if (pair.kind != DesignKind::cpa)
        throw std::invalid_argument("symmetrize: expects a Boolean-side pair");
    if (!check_cpa(pair).pass())
        throw std::invalid_argument("symmetrize: input pair fails its verification");

    int nu = pair.n;
    auto symmetrized_profile = [&](const DesignArray& a) {
        std::vector<BigInt> counts = a.weight_profile();
        std::vector<BigInt> mult(nu + 1);
        for (int i = 0; i <= nu; ++i) mult[i] = factorial(i) * factorial(nu - i) * counts[i];
        return mult;
    };
    std::vector<BigInt> mn = symmetrized_profile(pair.first);
    std::vector<BigInt> md = symmetrized_profile(pair.second);

    if (reduce) {
        BigInt g = 0;
        for (const auto& m : mn) g = gcd(g, m);
        for (const auto& m : md) g = gcd(g, m);
        if (g > 1) {
            for (auto& m : mn) m /= g;
            for (auto& m : md) m /= g;
        }
    }

    auto build = [&](const std::vector<BigInt>& mult) {
        DesignArray out(nu, 2);
        for (int i = 0; i <= nu; ++i) {
            if (mult[i] == 0) continue;
            for_each_combination(nu, i, [&](const std::vector<int>& support) {
                Word w(nu, 0);
                for (int j : support) w[j] = 1;
                out.add_rows(w, mult[i]);
            });
        }
        return out;
    };
    return make_pair(DesignKind::cpa, nu, pair.cap, pair.k, build(mn), build(md));
}

RepVec rep_vector(const DesignPair& pair) {
    if (pair.kind != DesignKind::cpa)
        throw std::invalid_argument("rep_vector: expects a Boolean-side pair");
    if (!is_regular(pair.first) || !is_regular(pair.second))
        throw std::invalid_argument("rep_vector: both arrays must be regular");

    int nu = pair.n;
    int d = pair.cap;
    RepVec v{nu, d, pair.k, std::vector<BigInt>(nu + 1, BigInt(0)),
             std::vector<BigInt>(d + 1, BigInt(0))};
    for (const auto& [w, m] : pair.first.rows()) v.y[weight(w)] = m;
    for (const auto& [w, m] : pair.second.rows()) {
        int i = weight(w);
        if (i > d)
            throw std::invalid_argument("rep_vector: second array has rows above the weight cap");
        v.x[i] = m;
    }
    return v;
}

bool check_eq4(const RepVec& v, int k) {
    validate(v);
    if (k < 1 || k > v.d) throw std::invalid_argument("check_eq4: requires 1 <= k <= d");
    for (int h = 0; h <= k; ++h) {
        BigInt lhs = 0;
        for (int i = h; i <= v.nu - k + h; ++i) lhs += binom(v.nu - k, i - h) * v.y[i];
        BigInt rhs = 0;
        for (int i = h; i <= v.d; ++i) rhs += binom(v.nu - k, i - h) * v.x[i];
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_eq6(const ZEnc& z, int k) {
    validate(z);
    for (int h = 0; h <= k; ++h) {
        BigInt sum = 0;
        for (int i = h; i <= z.nu - k + h; ++i) sum += binom(z.nu - k, i - h) * z.z[i];
        if (sum != 0) return false;
    }
    return true;
}

bool check_eq6(const ZEnc& z) { return check_eq6(z, z.k); }

DesignPair materialize(const RepVec& v) {
    validate(v);
    if (v.y[v.nu] == 0)
        throw std::invalid_argument("materialize: the all-ones class must be non-empty");
    if (!check_eq4(v, v.k))
        throw std::invalid_argument("materialize: balance equations fail at strength k");

    auto build = [&](const std::vector<BigInt>& mult) {
        DesignArray out(v.nu, 2);
        for (int i = 0; i < static_cast<int>(mult.size()); ++i) {
            if (mult[i] == 0) continue;
            for_each_combination(v.nu, i, [&](const std::vector<int>& support) {
                Word w(v.nu, 0);
                for (int j : support) w[j] = 1;
                out.add_rows(w, mult[i]);
            });
        }
        return out;
    };
    return make_pair(DesignKind::cpa, v.nu, v.d, v.k, build(v.y), build(v.x));
}

ZEnc to_z(const RepVec& v) {
    validate(v);
    if (v.nu <= v.d)
        throw std::invalid_argument("to_z: requires d < nu (the all-ones class is first-array only)");
    for (int i = 0; i <= v.d; ++i)
        if (v.y[i] > 0 && v.x[i] > 0)
            throw std::invalid_argument(
                "to_z: arrays share weight class " + std::to_string(i) +
                "; strip_common first");
    ZEnc z{v.nu, v.d, v.k, std::vector<BigInt>(v.nu + 1)};
    for (int i = 0; i <= v.nu; ++i) z.z[i] = (i > v.d) ? BigInt(-v.y[i]) : BigInt(v.x[i] - v.y[i]);
    validate(z);
    return z;
}

RepVec from_z(const ZEnc& z) {
    validate(z);
    RepVec v{z.nu, z.d, z.k, std::vector<BigInt>(z.nu + 1, BigInt(0)),
             std::vector<BigInt>(z.d + 1, BigInt(0))};
    for (int i = 0; i <= z.nu; ++i) {
        if (z.z[i] >= 0 && i <= z.d)
            v.x[i] = z.z[i];
        else
            v.y[i] = -z.z[i];
    }
    return v;
}

RepVec strip_common(const RepVec& v) {
    validate(v);
    RepVec out = v;
    for (int i = 0; i <= v.d; ++i) {
        BigInt shared = std::min(out.y[i], out.x[i]);
        out.y[i] -= shared;
        out.x[i] -= shared;
    }
    return out;
}

}  // namespace arpaforge
