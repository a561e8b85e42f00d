#include "doctest.h"

#include <string>

#include "riskcad/scoring.hpp"

using namespace riskcad;

namespace {

ScoringSystem seven_by_four() {
    ScoringSystem s;
    s.likelihood = {{1, "Extremely remote"}, {2, "2"}, {3, "Remote"}, {4, "4"},
                    {5, "Reasonably probable"}, {6, "6"}, {7, "Frequent"}};
    s.impact = {{1, "Minor"}, {2, "Significant"}, {3, "Severe"}, {4, "Catastrophic"}};
    return s;
}

struct GridEntry {
    int fi;
    int si;
    char letter;
    int ri;
};

// The full grid for the 7x4 scales and default thresholds, frozen here as
// the reference the implementation has to reproduce cell by cell.
constexpr GridEntry reference_grid[] = {
    {1, 1, 'L', 2}, {1, 2, 'L', 3}, {1, 3, 'L', 4}, {1, 4, 'M', 5},
    {2, 1, 'L', 3}, {2, 2, 'L', 4}, {2, 3, 'M', 5}, {2, 4, 'M', 6},
    {3, 1, 'L', 4}, {3, 2, 'M', 5}, {3, 3, 'M', 6}, {3, 4, 'M', 7},
    {4, 1, 'M', 5}, {4, 2, 'M', 6}, {4, 3, 'M', 7}, {4, 4, 'H', 8},
    {5, 1, 'M', 6}, {5, 2, 'M', 7}, {5, 3, 'H', 8}, {5, 4, 'H', 9},
    {6, 1, 'M', 7}, {6, 2, 'H', 8}, {6, 3, 'H', 9}, {6, 4, 'H', 10},
    {7, 1, 'H', 8}, {7, 2, 'H', 9}, {7, 3, 'H', 10}, {7, 4, 'H', 11},
};

char letter_of(Intolerance level) {
    switch (level) {
    case Intolerance::Low: return 'L';
    case Intolerance::Medium: return 'M';
    case Intolerance::High: return 'H';
    }
    return '?';
}

} // namespace

TEST_CASE("risk index is the sum of the two ranks") {
    CHECK(risk_index(5, 4) == 9);
    CHECK(risk_index(4, 3) == 7);
    CHECK(risk_index(1, 1) == 2);
    CHECK(risk_index(7, 4) == 11);
}

TEST_CASE("risk index is strictly monotone in each rank") {
    for (int fi = 1; fi <= 7; ++fi) {
        for (int si = 1; si <= 4; ++si) {
            if (fi < 7) CHECK(risk_index(fi + 1, si) > risk_index(fi, si));
            if (si < 4) CHECK(risk_index(fi, si + 1) > risk_index(fi, si));
        }
    }
}

TEST_CASE("threshold classification matches the reference grid") {
    ScoringSystem s = seven_by_four();
    for (const auto& entry : reference_grid) {
        CAPTURE(entry.fi);
        CAPTURE(entry.si);
        CHECK(risk_index(entry.fi, entry.si) == entry.ri);
        CHECK(letter_of(classify(s, entry.fi, entry.si)) == entry.letter);
    }
}

TEST_CASE("generate_cells covers the grid and agrees with classify") {
    ScoringSystem s = seven_by_four();
    CellMap cells = generate_cells(s);
    CHECK(cells.size() == 28);
    for (const auto& entry : reference_grid) {
        auto it = cells.find({entry.fi, entry.si});
        REQUIRE(it != cells.end());
        CHECK(letter_of(it->second) == entry.letter);
    }
}

TEST_CASE("classification never decreases along either rank") {
    ScoringSystem s = seven_by_four();
    CellMap cells = generate_cells(s);
    for (const auto& [key, level] : cells) {
        auto right = cells.find({key.first + 1, key.second});
        if (right != cells.end()) CHECK(level <= right->second);
        auto up = cells.find({key.first, key.second + 1});
        if (up != cells.end()) CHECK(level <= up->second);
    }
}

TEST_CASE("an explicit cell map overrides the thresholds") {
    ScoringSystem s = seven_by_four();
    s.likelihood.resize(1);
    s.impact.resize(1);
    CHECK(classify(s, 1, 1) == Intolerance::Low);
    s.cells = CellMap{{{1, 1}, Intolerance::High}};
    CHECK(classify(s, 1, 1) == Intolerance::High);
}

TEST_CASE("out-of-range ranks are rejected with the offending scale named") {
    ScoringSystem s = seven_by_four();
    CHECK_THROWS_WITH_AS(classify(s, 8, 1), "likelihood rank 8 outside scale 1..7", RangeError);
    CHECK_THROWS_WITH_AS(classify(s, 0, 1), "likelihood rank 0 outside scale 1..7", RangeError);
    CHECK_THROWS_WITH_AS(classify(s, 3, 5), "impact rank 5 outside scale 1..4", RangeError);
}

TEST_CASE("custom thresholds move the bands") {
    ScoringSystem s = seven_by_four();
    s.low_max = 2;
    s.high_min = 10;
    CHECK(classify(s, 1, 1) == Intolerance::Low);
    CHECK(classify(s, 1, 2) == Intolerance::Medium);
    CHECK(classify(s, 7, 2) == Intolerance::Medium);
    CHECK(classify(s, 7, 3) == Intolerance::High);
}
