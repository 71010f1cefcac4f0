#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "arpaforge/design.hpp"
#include "arpaforge/exactmath.hpp"
#include "fixtures.hpp"

using namespace arpaforge;

TEST_CASE("reference symbol-side pairs verify with the expected ratios") {
    auto a432 = fixtures::arpa_432();
    auto a532 = fixtures::arpa_532();
    auto a543 = fixtures::arpa_543();
    CHECK(check_arpa(a432, 4, 3, 2).pass());
    CHECK(check_arpa(a532, 5, 3, 2).pass());
    CHECK(check_arpa(a543, 5, 4, 3).pass());
    CHECK(ratio(a432) == Rational(1, 3));
    CHECK(ratio(a532) == Rational(1, 6));
    CHECK(ratio(a543) == Rational(1, 5));
}

TEST_CASE("reference Boolean-side pairs verify with the expected ratios") {
    auto c432 = fixtures::cpa_432();
    auto c532 = fixtures::cpa_532();
    auto c543 = fixtures::cpa_543();
    CHECK(check_cpa(c432, 4, 3, 2).pass());
    CHECK(check_cpa(c532, 5, 3, 2).pass());
    CHECK(check_cpa(c543, 5, 4, 3).pass());
    CHECK(ratio(c432) == Rational(1, 3));
    CHECK(ratio(c532) == Rational(1, 6));
    CHECK(ratio(c543) == Rational(3, 15));
}

TEST_CASE("strength holds at the declared k and fails one above") {
    auto c432 = fixtures::cpa_432();
    CHECK(check_k_equal(c432.first, c432.second, 2));
    CHECK_FALSE(check_k_equal(c432.first, c432.second, 3));
    auto witness = find_k_mismatch(c432.first, c432.second, 3);
    REQUIRE(witness.has_value());
    CHECK(witness->count_first != witness->count_second);

    auto a = c432.first;
    CHECK(check_k_equal(a, a, 2));
    CHECK(check_k_equal(a, a, 4));
    CHECK_THROWS_AS(check_k_equal(a, a, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_k_equal(a, a, 0), std::invalid_argument);
}

TEST_CASE("strength is symmetric and monotone") {
    auto c543 = fixtures::cpa_543();
    for (int k = 1; k <= 3; ++k) {
        CHECK(check_k_equal(c543.first, c543.second, k));
        CHECK(check_k_equal(c543.second, c543.first, k));
    }
    auto c532 = fixtures::cpa_532();
    CHECK(check_k_equal(c532.first, c532.second, 1));  // strength 2 implies strength 1
}

TEST_CASE("membership conditions fail with tightened caps") {
    auto c543 = fixtures::cpa_543();
    auto verdict = check_cpa(c543, 5, 3, 3);
    CHECK_FALSE(verdict.pass());
    CHECK_FALSE(verdict.conditions[1].pass);  // weight-4 rows exceed d = 3
    CHECK(verdict.conditions[1].witness.find("weight 4") != std::string::npos);

    auto a432 = fixtures::arpa_432();
    auto verdict2 = check_arpa(a432, 4, 2, 2);
    CHECK_FALSE(verdict2.pass());
    CHECK_FALSE(verdict2.conditions[1].pass);  // "0 1 0 2" uses three symbols
}

TEST_CASE("trivial pairs") {
    for (int k = 1; k <= 4; ++k) {
        DesignArray a(k, k);
        a.add_rows(identity_word(k), 1);
        auto pair = make_pair(DesignKind::arpa, k, k, k, a, a);
        CHECK(check_arpa(pair, k, k, k).pass());
        CHECK(ratio(pair) == Rational(1));
    }
    DesignArray ones(4, 2);
    ones.add_rows(ones_word(4), 1);
    auto pair = make_pair(DesignKind::cpa, 4, 4, 2, ones, ones);
    CHECK(check_cpa(pair, 4, 4, 2).pass());
}

TEST_CASE("interpretation map point values") {
    CHECK(interpretation(Word{0, 1, 0, 2}) == Word{1, 1, 0, 0});
    CHECK(interpretation(identity_word(6)) == ones_word(6));
    CHECK(interpretation(Word{3, 0, 0, 3}) == Word{0, 0, 0, 1});
}

TEST_CASE("reference pairs interpret as their Boolean counterparts") {
    CHECK(interprets_as(fixtures::arpa_432(), fixtures::cpa_432()));
    CHECK(interprets_as(fixtures::arpa_532(), fixtures::cpa_532()));
    CHECK(interprets_as(fixtures::arpa_543(), fixtures::cpa_543()));
    CHECK_FALSE(interprets_as(fixtures::arpa_432(), fixtures::cpa_532()));

    for (auto pair : {fixtures::arpa_432(), fixtures::arpa_532(), fixtures::arpa_543()}) {
        auto mapped = interpretation(pair);
        CHECK(interprets_as(pair, mapped));
        CHECK(ratio(mapped) == ratio(pair));
        CHECK(check_cpa(mapped, pair.n, pair.cap, pair.k).pass());
    }
}

TEST_CASE("ratio bound for weight cap equal to strength") {
    CHECK(theorem3_bound(6, 2) == Rational(1, 25));
    CHECK(theorem3_bound(5, 3) == Rational(1, 25));
    CHECK(theorem3_bound(5, 2) == Rational(1, 16));
    CHECK_THROWS_AS(theorem3_bound(3, 3), std::invalid_argument);
}

TEST_CASE("weight-profile equalities reject unbalanced pairs") {
    DesignArray n(5, 2), d(5, 2);
    n.add_rows(ones_word(5), 1);
    n.add_rows(Word{1, 1, 0, 0, 0}, 1);
    d.add_rows(Word{1, 1, 0, 0, 0}, 1);
    d.add_rows(Word{0, 1, 1, 0, 0}, 1);
    auto bad = DesignPair{DesignKind::cpa, 5, 2, 2, n, d};
    CHECK_FALSE(weight_equalities(bad, 5, 2).pass);
    CHECK_THROWS_AS(weight_equalities(fixtures::cpa_543(), 5, 3), std::invalid_argument);
}

TEST_CASE("row extension preserves ratio and strength") {
    DesignArray a(2, 2);
    a.add_rows(identity_word(2), 1);
    auto trivial = make_pair(DesignKind::arpa, 2, 2, 2, a, a);
    auto extended = extend_arpa(trivial, 4, 3, 2);
    CHECK(extended.first.multiplicity(Word{0, 1, 2, 3}) == 1);
    CHECK(check_arpa(extended, 4, 3, 2).pass());
    CHECK(ratio(extended) == Rational(1));
    CHECK_THROWS_AS(extend_arpa(trivial, 4, 4, 2), std::invalid_argument);
}

TEST_CASE("arrays are canonical multisets") {
    DesignArray a(3, 2);
    a.add_rows(Word{1, 0, 1}, 2);
    a.add_rows(Word{0, 1, 1}, 1);
    DesignArray b(3, 2);
    b.add_rows(Word{0, 1, 1}, 1);
    b.add_rows(Word{1, 0, 1}, 1);
    b.add_rows(Word{1, 0, 1}, 1);
    CHECK(a == b);
    CHECK(a.row_count() == 3);
    CHECK_THROWS_AS(a.add_rows(Word{2, 0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(a.add_rows(Word{1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(a.add_rows(Word{1, 0, 0}, 0), std::invalid_argument);
}

TEST_CASE("pair construction enforces the shared row count") {
    DesignArray n(3, 2), d(3, 2);
    n.add_rows(ones_word(3), 2);
    d.add_rows(Word{1, 0, 0}, 1);
    CHECK_THROWS_AS(make_pair(DesignKind::cpa, 3, 2, 1, n, d), std::invalid_argument);
}

TEST_CASE("randomized: permuting columns preserves strength") {
    std::mt19937_64 rng(99);
    auto c543 = fixtures::cpa_543();
    std::vector<int> perm{0, 1, 2, 3, 4};
    auto permute = [&](const DesignArray& src) {
        DesignArray out(5, 2);
        for (const auto& [w, m] : src.rows()) {
            Word moved(5);
            for (int j = 0; j < 5; ++j) moved[j] = w[perm[j]];
            out.add_rows(moved, m);
        }
        return out;
    };
    for (int it = 0; it < 20; ++it) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(check_k_equal(permute(c543.first), permute(c543.second), 3));
    }
}
