#include "arpaforge/lift.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "arpaforge/exactmath.hpp"

namespace arpaforge {

int z_top_weight(const ZEnc& z) {
    for (int i = z.nu - 1; i >= z.d; --i)
        if (z.z[i] != 0) return i;
    throw std::invalid_argument("z_top_weight: no non-zero weight in {d .. nu-1}");
}

int c_star(const std::vector<int>& J, int nu, int r) {
    int best = nu - r;
    for (int j : J) best = std::min(best, j);
    return best;
}

Word g_word(const std::vector<int>& J, int nu, int r) {
    int cs = c_star(J, nu, r);
    Word w(nu, cs);
    for (int j : J) w[j] = j;
    return w;
}

Word g_c_word(const std::vector<int>& J, int c, int nu) {
    if (c < 0) throw std::invalid_argument("g_c_word: c must be non-negative");
    Word w(nu);
    for (int j = 0; j < nu; ++j) w[j] = (j <= c) ? c + 1 : c;
    for (int j : J) w[j] = j;
    return w;
}

int d_prime(const ZEnc& z) {
    validate(z);
    if (z.z[z.d] <= 0)
        throw std::invalid_argument("d_prime: weight-d rows must sit in the second array");
    int r = z_top_weight(z);
    if (r > z.d) return z.d + 2;
    if (z.d >= 1 && z.z[z.d - 1] > 0) return z.d + 1;
    return z.d;
}

ZTilde lift(const ZEnc& z, bool enforce_balance) {
    validate(z);
    int nu = z.nu, d = z.d, k = z.k;
    if (z.z[d] <= 0)
        throw std::invalid_argument("lift: weight-d rows must sit in the second array");
    if (enforce_balance && !check_eq6(z))
        throw std::invalid_argument("lift: encoding fails its balance equations");

    int r = z_top_weight(z);
    std::map<Word, Rational> raw;
    auto emit = [&](Word w, Rational value) {
        if (value.is_zero()) throw std::logic_error("lift: emitted a zero entry");
        if (!raw.emplace(std::move(w), std::move(value)).second)
            throw std::logic_error("lift: two classes emitted the same row");
    };

    // Rows derived from the all-ones word.
    emit(identity_word(nu), Rational(z.z[nu]));

    // Rows derived from the words of weight r.
    for_each_combination(nu, r, [&](const std::vector<int>& J) {
        emit(g_word(J, nu, r), Rational(z.z[r]));
    });

    // Rows derived from the words of weight below r. The c = c_star(J)
    // = nu - r step emits nothing; its share is exactly the vanishing
    // boundary binomial, which the conservation check below confirms.
    for (int i = 0; i < r; ++i) {
        if (z.z[i] == 0) continue;
        Rational unit = Rational(z.z[i]) / Rational(binom(nu - 1 - i, r - i));
        for_each_combination(nu, i, [&](const std::vector<int>& J) {
            int cs = c_star(J, nu, r);
            for (int c = 0; c <= cs; ++c) {
                if (c < cs) {
                    emit(g_c_word(J, c, nu), Rational(binom(nu - c - 2 - i, r - 1 - i)) * unit);
                } else if (c == cs && cs < nu - r) {
                    emit(g_word(J, nu, r), Rational(binom(nu - c - 1 - i, r - i)) * unit);
                }
            }
        });
    }

    ZTilde t;
    t.nu = nu;
    t.k = k;
    t.d_prime = d_prime(z);
    t.scale = 1;
    for (const auto& [w, v] : raw) t.scale = lcm(t.scale, v.den());
    for (const auto& [w, v] : raw) {
        Rational scaled = Rational(t.scale) * v;
        t.entries[w] = scaled.num();
    }

    // Per-class conservation: the rows interpreting as each Boolean word of
    // weight i must add up to scale * z_i.
    std::map<Word, BigInt> class_sums;
    for (const auto& [w, m] : t.entries) class_sums[interpretation(w)] += m;
    std::vector<long> classes_seen(nu + 1, 0);
    for (const auto& [u, total] : class_sums) {
        int i = weight(u);
        ++classes_seen[i];
        if (total != t.scale * z.z[i])
            throw std::logic_error("lift: per-class conservation failed at weight " +
                                   std::to_string(i));
    }
    for (int i = 0; i <= nu; ++i) {
        BigInt expected = (z.z[i] != 0) ? binom(nu, i) : BigInt(0);
        if (BigInt(classes_seen[i]) != expected)
            throw std::logic_error("lift: class coverage mismatch at weight " + std::to_string(i));
    }
    return t;
}

DesignPair materialize_lift(const ZTilde& t) {
    if (t.entries.empty()) throw std::invalid_argument("materialize_lift: empty encoding");
    DesignArray q(t.nu, t.nu), p(t.nu, t.nu);
    for (const auto& [w, m] : t.entries) {
        if (m < 0)
            q.add_rows(w, -m);
        else if (m > 0)
            p.add_rows(w, m);
        else
            throw std::invalid_argument("materialize_lift: zero entry");
    }
    if (q.row_count() != p.row_count())
        throw std::logic_error("materialize_lift: the two sides have different row counts");
    return make_pair(DesignKind::arpa, t.nu, t.d_prime, t.k, std::move(q), std::move(p));
}

Rational f_z_eval(const ZEnc& z, int h, int lam, int c) {
    validate(z);
    if (h < 0 || lam < 0 || c < 0)
        throw std::invalid_argument("f_z_eval: parameters must be natural");
    int r = z_top_weight(z);
    Rational total;
    for (int i = h; i <= r; ++i) {
        if (z.z[i] == 0) continue;
        Rational term = Rational(binom(z.nu - c - h - lam, i - h) * binom(z.nu - c - i, r - i),
                                 binom(z.nu - 1 - i, r - i));
        total += term * Rational(z.z[i]);
    }
    return total;
}

Rational r_count(const ZTilde& t, const std::vector<int>& H, const std::vector<int>& L,
                 const Word& v) {
    if (L.size() != v.size()) throw std::invalid_argument("r_count: |L| and |v| must agree");
    BigInt total = 0;
    for (const auto& [w, m] : t.entries) {
        bool match = true;
        for (int j : H)
            if (w[j] != j) {
                match = false;
                break;
            }
        for (size_t s = 0; match && s < L.size(); ++s)
            if (w[L[s]] != v[s]) match = false;
        if (match) total += m;
    }
    return Rational(total);
}

namespace {

int classify_case(int s, int c, const std::vector<int>& L, bool c_in_H, int nu_minus_r) {
    int kh = static_cast<int>(L.size());  // k - h
    int l_first = L.front(), l_last = L.back();
    if (s > 0) {
        // C1 needs c sandwiched between the split positions of L.
        if (!c_in_H && c < nu_minus_r && L[s - 1] <= c && c < L[s]) return 1;
        return 0;
    }
    if (!c_in_H) {
        if (c < nu_minus_r && l_first < c && c < l_last) return 2;
        if (c < nu_minus_r && c < l_first) return 3;
        if (l_last < c) return 4;
        return 0;
    }
    if (c < nu_minus_r && c < l_last) return 5;
    if (l_last < c) return 6;
    (void)kh;
    return 0;
}

Rational expected_value(int case_id, const ZEnc& z, int h, int lam, int c, int k, int r) {
    int nur = z.nu - r;
    switch (case_id) {
        case 1:
            return (c == nur - 1) ? f_z_eval(z, h, lam, nur)
                                  : f_z_eval(z, h, lam, c + 1) - f_z_eval(z, h, lam - 1, c + 2);
        case 2:
            return f_z_eval(z, h + 1, lam - 1, c + 1);
        case 3:
            return (c == nur - 1)
                       ? f_z_eval(z, h, k - h - 1, nur)
                       : f_z_eval(z, h, k - h - 1, c + 1) - f_z_eval(z, h, k - h - 1, c + 2);
        case 4:
            return (c == nur) ? f_z_eval(z, h, 0, nur)
                              : f_z_eval(z, h, 0, c) - f_z_eval(z, h, 0, c + 1);
        case 5:
            return f_z_eval(z, h, lam - 1, c + 1);
        case 6:
            return f_z_eval(z, h, 0, c);
        default:
            throw std::logic_error("expected_value: unknown case");
    }
}

}  // namespace

MixedProjectionReport mixed_projection_check(const ZTilde& t, const ZEnc& z) {
    int nu = t.nu, k = t.k;
    int r = z_top_weight(z);
    MixedProjectionReport report;

    for (int h = 0; h < k; ++h) {
        for_each_combination(nu, h, [&](const std::vector<int>& H) {
            std::vector<int> rest;
            for (int j = 0; j < nu; ++j)
                if (std::find(H.begin(), H.end(), j) == H.end()) rest.push_back(j);
            for_each_combination(static_cast<int>(rest.size()), k - h,
                                 [&](const std::vector<int>& pick) {
                std::vector<int> L;
                for (int p : pick) L.push_back(rest[p]);
                int cs_H = nu - r;
                for (int j : H) cs_H = std::min(cs_H, j);
                bool c0_in_H = !H.empty() && H.front() == 0;  // H sorted
                (void)c0_in_H;
                for (int s = 0; s < k - h; ++s) {
                    for (int c = 0; c <= cs_H; ++c) {
                        // v is c+1 on the first s positions and c after; it
                        // must avoid the identity pattern coordinate-wise.
                        bool valid = true;
                        for (int tpos = 0; tpos < s && valid; ++tpos)
                            if (L[tpos] == c + 1) valid = false;
                        for (int tpos = s; tpos < k - h && valid; ++tpos)
                            if (L[tpos] == c) valid = false;
                        if (!valid) continue;

                        Word v(k - h);
                        for (int tpos = 0; tpos < k - h; ++tpos) v[tpos] = (tpos < s) ? c + 1 : c;
                        bool c_in_H = std::find(H.begin(), H.end(), c) != H.end();
                        int lam = 0;
                        for (int l : L)
                            if (l > c) ++lam;

                        Rational direct = r_count(t, H, L, v);
                        if (!direct.is_zero()) report.all_zero = false;

                        int case_id = classify_case(s, c, L, c_in_H, nu - r);
                        if (case_id == 0) {
                            ++report.extra_zero_tuples;
                            if (!direct.is_zero())
                                report.failures.push_back(
                                    MixedProjectionCase{0, H, L, v, c, s, direct, Rational(0)});
                            continue;
                        }
                        ++report.case_counts[case_id];
                        Rational expected =
                            Rational(t.scale) * expected_value(case_id, z, h, lam, c, k, r);
                        if (direct != expected || !expected.is_zero()) {
                            report.all_match = false;
                            report.failures.push_back(
                                MixedProjectionCase{case_id, H, L, v, c, s, direct, expected});
                        }
                    }
                }
            });
        });
    }
    return report;
}

bool LiftReport::pass() const {
    bool base = interprets && symbol_budget && k_equal;
    if (mixed) base = base && mixed->all_zero && mixed->all_match;
    return base;
}

std::string LiftReport::str() const {
    std::ostringstream os;
    os << "interprets-as-source: " << (interprets ? "pass" : "FAIL") << '\n'
       << "symbol-budget: " << (symbol_budget ? "pass" : "FAIL") << '\n'
       << "k-equal: " << (k_equal ? "pass" : "FAIL") << '\n';
    if (mixed) {
        os << "mixed-projections: " << ((mixed->all_zero && mixed->all_match) ? "pass" : "FAIL")
           << " (cases";
        for (int c = 1; c <= 6; ++c) os << ' ' << "C" << c << "=" << mixed->case_counts[c];
        os << ", other " << mixed->extra_zero_tuples << ")\n";
    }
    os << "overall: " << (pass() ? "pass" : "FAIL") << '\n';
    return os.str();
}

LiftReport verify_lift(const DesignPair& arpa, const DesignPair& cpa, int dprime) {
    if (arpa.kind != DesignKind::arpa || cpa.kind != DesignKind::cpa)
        throw std::invalid_argument("verify_lift: expects a symbol-side and a Boolean-side pair");
    LiftReport report;
    report.interprets = interprets_as(arpa, cpa);

    report.symbol_budget = true;
    for (const auto& [w, m] : arpa.second.rows()) {
        if (distinct_symbols(w) > dprime) {
            report.symbol_budget = false;
            break;
        }
    }
    report.k_equal = check_k_equal(arpa.first, arpa.second, arpa.k);

    if (arpa.n <= 6 && is_regular(cpa.first) && is_regular(cpa.second)) {
        RepVec v = rep_vector(cpa);
        bool disjoint = true;
        for (int i = 0; i <= v.d && disjoint; ++i)
            if (v.y[i] > 0 && v.x[i] > 0) disjoint = false;
        if (disjoint && v.x[v.d] > 0) {
            ZTilde t;
            t.nu = arpa.n;
            t.k = arpa.k;
            t.d_prime = dprime;
            t.scale = 1;  // both inputs are already on the same scale
            for (const auto& [w, m] : arpa.first.rows()) t.entries[w] -= m;
            for (const auto& [w, m] : arpa.second.rows()) t.entries[w] += m;
            for (auto it = t.entries.begin(); it != t.entries.end();)
                it = (it->second == 0) ? t.entries.erase(it) : std::next(it);
            report.mixed = mixed_projection_check(t, to_z(v));
        }
    }
    return report;
}

std::string ztilde_text(const ZTilde& t) {
    std::ostringstream os;
    os << "ztilde nu=" << t.nu << " k=" << t.k << " d_prime=" << t.d_prime
       << " scale=" << t.scale << '\n';
    for (const auto& [w, m] : t.entries) {
        for (size_t j = 0; j < w.size(); ++j) {
            if (j) os << ' ';
            os << w[j];
            if (w[j] == static_cast<int>(j)) os << '*';
        }
        os << " | " << m << '\n';
    }
    return os.str();
}

}  // namespace arpaforge
