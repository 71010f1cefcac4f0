#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arpaforge/design_io.hpp"
#include "arpaforge/lift.hpp"
#include "arpaforge/lp.hpp"
#include "fixtures.hpp"

using namespace arpaforge;

TEST_CASE("pair json round trip") {
    for (auto pair : {fixtures::arpa_432(), fixtures::arpa_543(), fixtures::lifted_522()}) {
        auto text = pair_to_json(pair);
        CHECK(pair_from_json(text) == pair);
    }
    for (auto pair : {fixtures::cpa_432(), fixtures::cpa_543()}) {
        CHECK(pair_from_json(pair_to_json(pair)) == pair);
    }
}

TEST_CASE("pair text round trip") {
    for (auto pair : {fixtures::arpa_532(), fixtures::lifted_543()})
        CHECK(pair_from_text(pair_to_text(pair)) == pair);
    for (auto pair : {fixtures::cpa_532(), fixtures::cpa_543()})
        CHECK(pair_from_text(pair_to_text(pair)) == pair);
}

TEST_CASE("text reader accepts multiplicity suffixes and blank lines") {
    std::string text =
        "cpa nu=3 d=2 k=1\n"
        "\n"
        "N:\n"
        "1 1 1 x2\n"
        "1 0 0\n"
        "D:\n"
        "1 1 0 x2\n"
        "0 0 1\n";
    auto pair = pair_from_text(text);
    CHECK(pair.first.multiplicity(Word{1, 1, 1}) == 2);
    CHECK(pair.second.row_count() == 3);
    CHECK(pair.n == 3);
    CHECK(pair.cap == 2);
    CHECK(pair.k == 1);
}

TEST_CASE("text reader rejects malformed input") {
    CHECK_THROWS_AS(pair_from_text("nonsense n=3"), std::invalid_argument);
    CHECK_THROWS_AS(pair_from_text("cpa nu=3 d=2 k=1\n1 1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(pair_from_text("cpa nu=3 d=2\nN:\n1 1 1\nD:\n1 1 0\n"),
                    std::invalid_argument);
}

TEST_CASE("csv rendering carries one line per row with a side column") {
    auto csv = pair_to_csv(fixtures::cpa_432());
    CHECK(csv.find("side,mult,c0,c1,c2,c3") == 0);
    CHECK(csv.find("N,2,1,1,1,1") != std::string::npos);
    CHECK(csv.find("D,1,0,0,0,0") != std::string::npos);
}

TEST_CASE("canonical row order is stable and groups by interpretation weight") {
    auto rows = canonical_rows(fixtures::lifted_522().first);
    CHECK(rows.front().first == identity_word(5));  // full-match row first
    int last = 6;
    for (const auto& [w, m] : rows) {
        int iw = weight(interpretation(w));
        CHECK(iw <= last);
        last = iw;
    }
}

TEST_CASE("representative vector json round trip") {
    auto v = optimal_cpa(5, 2, 2);
    auto parsed = repvec_from_json(repvec_to_json(v));
    CHECK(parsed == v);
    CHECK_THROWS(repvec_from_json("{\"nu\":3}"));
}

TEST_CASE("z-encoding json round trip") {
    auto z = to_z(optimal_cpa(5, 3, 2));
    CHECK(zenc_from_json(zenc_to_json(z)) == z);
}

TEST_CASE("lift encoding json round trip") {
    auto t = lift(to_z(optimal_cpa(5, 2, 2)));
    auto parsed = ztilde_from_json(ztilde_to_json(t));
    CHECK(parsed.entries == t.entries);
    CHECK(parsed.scale == t.scale);
    CHECK(parsed.d_prime == t.d_prime);
}

TEST_CASE("json output is deterministic") {
    auto a = pair_to_json(fixtures::arpa_543());
    auto b = pair_to_json(fixtures::arpa_543());
    CHECK(a == b);
}

TEST_CASE("random pairs survive both serializations") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<int> nu_dist(2, 6);
        int nu = nu_dist(rng);
        std::uniform_int_distribution<int> d_dist(1, nu - 1);
        int d = d_dist(rng);
        std::uniform_int_distribution<int> k_dist(1, d);
        auto v = optimal_cpa(nu, d, k_dist(rng));
        auto pair = materialize(v);
        CHECK(pair_from_json(pair_to_json(pair)) == pair);
        CHECK(pair_from_text(pair_to_text(pair)) == pair);
    }
}
