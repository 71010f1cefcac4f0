#include "fixtures.hpp"

namespace fixtures {

using arpaforge::BigInt;
using arpaforge::DesignArray;
using arpaforge::DesignKind;
using arpaforge::Word;

namespace {

struct RowSpec {
    Word row;
    long mult;
};

DesignArray build(int columns, int alphabet, const std::vector<RowSpec>& rows) {
    DesignArray a(columns, alphabet);
    for (const auto& r : rows) a.add_rows(r.row, BigInt(r.mult));
    return a;
}

}  // namespace

DesignPair arpa_432() {
    auto q = build(4, 4,
                   {{{0, 1, 2, 3}, 2},
                    {{0, 1, 0, 2}, 1},
                    {{0, 0, 2, 2}, 1},
                    {{3, 1, 2, 2}, 1},
                    {{3, 0, 0, 3}, 1}});
    auto p = build(4, 4,
                   {{{0, 1, 2, 2}, 2},
                    {{0, 1, 0, 3}, 1},
                    {{0, 0, 2, 3}, 1},
                    {{3, 1, 2, 3}, 1},
                    {{3, 0, 0, 2}, 1}});
    return make_pair(DesignKind::arpa, 4, 3, 2, std::move(q), std::move(p));
}

DesignPair arpa_532() {
    auto q = build(5, 5,
                   {{{0, 1, 2, 3, 4}, 1},
                    {{1, 2, 2, 1, 4}, 1},
                    {{3, 3, 2, 2, 4}, 1},
                    {{3, 3, 3, 3, 3}, 1},
                    {{1, 1, 3, 1, 3}, 1},
                    {{0, 2, 3, 2, 3}, 1}});
    auto p = build(5, 5,
                   {{{3, 3, 2, 3, 4}, 1},
                    {{1, 1, 2, 1, 4}, 1},
                    {{0, 2, 2, 2, 4}, 1},
                    {{0, 1, 3, 3, 3}, 1},
                    {{1, 2, 3, 1, 3}, 1},
                    {{3, 3, 3, 2, 3}, 1}});
    return make_pair(DesignKind::arpa, 5, 3, 2, std::move(q), std::move(p));
}

DesignPair arpa_543() {
    auto q = build(5, 5,
                   {{{0, 0, 1, 3, 4}, 1},
                    {{0, 0, 2, 0, 4}, 1},
                    {{0, 0, 2, 3, 3}, 1},
                    {{0, 1, 1, 0, 4}, 1},
                    {{0, 1, 1, 3, 3}, 1},
                    {{0, 1, 2, 0, 3}, 1},
                    {{0, 1, 2, 3, 4}, 3},
                    {{4, 0, 1, 0, 3}, 2},
                    {{4, 0, 2, 3, 4}, 1},
                    {{4, 1, 1, 3, 4}, 1},
                    {{4, 1, 2, 0, 4}, 1},
                    {{4, 1, 2, 3, 3}, 1}});
    auto p = build(5, 5,
                   {{{0, 0, 1, 0, 3}, 1},
                    {{0, 0, 2, 3, 4}, 2},
                    {{0, 1, 1, 3, 4}, 2},
                    {{0, 1, 2, 0, 4}, 2},
                    {{0, 1, 2, 3, 3}, 2},
                    {{4, 0, 1, 0, 4}, 1},
                    {{4, 0, 1, 3, 3}, 1},
                    {{4, 0, 2, 0, 3}, 1},
                    {{4, 1, 1, 0, 3}, 1},
                    {{4, 1, 2, 3, 4}, 2}});
    return make_pair(DesignKind::arpa, 5, 4, 3, std::move(q), std::move(p));
}

DesignPair cpa_432() {
    auto n = build(4, 2,
                   {{{1, 1, 1, 1}, 2},
                    {{1, 1, 0, 0}, 1},
                    {{1, 0, 1, 0}, 1},
                    {{0, 1, 1, 0}, 1},
                    {{0, 0, 0, 1}, 1}});
    auto d = build(4, 2,
                   {{{1, 1, 1, 0}, 2},
                    {{1, 1, 0, 1}, 1},
                    {{1, 0, 1, 1}, 1},
                    {{0, 1, 1, 1}, 1},
                    {{0, 0, 0, 0}, 1}});
    return make_pair(DesignKind::cpa, 4, 3, 2, std::move(n), std::move(d));
}

DesignPair cpa_532() {
    auto n = build(5, 2,
                   {{{1, 1, 1, 1, 1}, 1},
                    {{0, 0, 1, 0, 1}, 2},
                    {{0, 0, 0, 1, 0}, 1},
                    {{0, 1, 0, 0, 0}, 1},
                    {{1, 0, 0, 0, 0}, 1}});
    auto d = build(5, 2,
                   {{{0, 0, 1, 1, 1}, 1},
                    {{0, 1, 1, 0, 1}, 1},
                    {{1, 0, 1, 0, 1}, 1},
                    {{1, 1, 0, 1, 0}, 1},
                    {{0, 0, 0, 0, 0}, 2}});
    return make_pair(DesignKind::cpa, 5, 3, 2, std::move(n), std::move(d));
}

DesignPair cpa_543() {
    auto n = build(5, 2,
                   {{{1, 0, 0, 1, 1}, 1},
                    {{1, 0, 1, 0, 1}, 1},
                    {{1, 0, 1, 1, 0}, 1},
                    {{1, 1, 0, 0, 1}, 1},
                    {{1, 1, 0, 1, 0}, 1},
                    {{1, 1, 1, 0, 0}, 1},
                    {{1, 1, 1, 1, 1}, 3},
                    {{0, 0, 0, 0, 0}, 2},
                    {{0, 0, 1, 1, 1}, 1},
                    {{0, 1, 0, 1, 1}, 1},
                    {{0, 1, 1, 0, 1}, 1},
                    {{0, 1, 1, 1, 0}, 1}});
    auto d = build(5, 2,
                   {{{1, 0, 0, 0, 0}, 1},
                    {{1, 0, 1, 1, 1}, 2},
                    {{1, 1, 0, 1, 1}, 2},
                    {{1, 1, 1, 0, 1}, 2},
                    {{1, 1, 1, 1, 0}, 2},
                    {{0, 0, 0, 0, 1}, 1},
                    {{0, 0, 0, 1, 0}, 1},
                    {{0, 0, 1, 0, 0}, 1},
                    {{0, 1, 0, 0, 0}, 1},
                    {{0, 1, 1, 1, 1}, 2}});
    return make_pair(DesignKind::cpa, 5, 4, 3, std::move(n), std::move(d));
}

DesignPair lifted_522() {
    auto q = build(5, 5,
                   {{{0, 1, 2, 3, 4}, 1},
                    {{0, 0, 0, 0, 0}, 3},
                    {{1, 1, 0, 0, 0}, 1},
                    {{1, 1, 1, 1, 1}, 2},
                    {{1, 0, 2, 0, 0}, 1},
                    {{2, 2, 2, 1, 1}, 1},
                    {{2, 2, 2, 2, 2}, 1},
                    {{1, 0, 0, 3, 0}, 1},
                    {{2, 2, 1, 3, 1}, 1},
                    {{3, 3, 3, 3, 2}, 1},
                    {{1, 0, 0, 0, 4}, 1},
                    {{2, 2, 1, 1, 4}, 1},
                    {{3, 3, 3, 2, 4}, 1}});
    auto p = build(5, 5,
                   {{{0, 1, 0, 0, 0}, 1},
                    {{0, 0, 2, 0, 0}, 1},
                    {{0, 0, 0, 3, 0}, 1},
                    {{0, 0, 0, 0, 4}, 1},
                    {{1, 1, 2, 1, 1}, 1},
                    {{1, 1, 1, 3, 1}, 1},
                    {{1, 1, 1, 1, 4}, 1},
                    {{2, 2, 2, 3, 2}, 1},
                    {{2, 2, 2, 2, 4}, 1},
                    {{3, 3, 3, 3, 4}, 1},
                    {{1, 0, 0, 0, 0}, 3},
                    {{2, 2, 1, 1, 1}, 2},
                    {{3, 3, 3, 2, 2}, 1}});
    return make_pair(DesignKind::arpa, 5, 2, 2, std::move(q), std::move(p));
}

DesignPair lifted_543() {
    auto q = build(5, 5,
                   {{{0, 1, 2, 3, 4}, 3},
                    {{0, 1, 2, 0, 0}, 1},
                    {{0, 1, 0, 3, 0}, 1},
                    {{0, 1, 0, 0, 4}, 1},
                    {{0, 0, 2, 3, 0}, 1},
                    {{0, 0, 2, 0, 4}, 1},
                    {{0, 0, 0, 3, 4}, 1},
                    {{1, 1, 2, 3, 0}, 1},
                    {{1, 1, 2, 0, 4}, 1},
                    {{1, 1, 0, 3, 4}, 1},
                    {{1, 0, 2, 3, 4}, 1},
                    {{1, 0, 0, 0, 0}, 2}});
    auto p = build(5, 5,
                   {{{0, 1, 2, 3, 0}, 2},
                    {{0, 1, 2, 0, 4}, 2},
                    {{0, 1, 0, 3, 4}, 2},
                    {{0, 0, 2, 3, 4}, 2},
                    {{1, 1, 2, 3, 4}, 2},
                    {{0, 0, 0, 0, 0}, 1},
                    {{1, 1, 0, 0, 0}, 1},
                    {{1, 0, 2, 0, 0}, 1},
                    {{1, 0, 0, 3, 0}, 1},
                    {{1, 0, 0, 0, 4}, 1}});
    return make_pair(DesignKind::arpa, 5, 4, 3, std::move(q), std::move(p));
}

DesignPair lifted_421() {
    auto q = build(4, 4,
                   {{{0, 1, 2, 3}, 3},
                    {{1, 0, 0, 0}, 2},
                    {{2, 2, 1, 1}, 1}});
    auto p = build(4, 4,
                   {{{0, 1, 0, 0}, 1},
                    {{0, 0, 2, 0}, 1},
                    {{0, 0, 0, 3}, 1},
                    {{1, 1, 2, 1}, 1},
                    {{1, 1, 1, 3}, 1},
                    {{2, 2, 2, 3}, 1}});
    return make_pair(DesignKind::arpa, 4, 2, 1, std::move(q), std::move(p));
}

}  // namespace fixtures
