#include "riskcad/scoring.hpp"

#include <string>

namespace riskcad {

int risk_index(int fi, int si) { return fi + si; }

namespace {

void check_rank(int rank, int size, const char* scale) {
    if (rank < 1 || rank > size)
        throw RangeError(std::string(scale) + " rank " + std::to_string(rank) +
                         " outside scale 1.." + std::to_string(size));
}

} // namespace

Intolerance classify(const ScoringSystem& scoring, int fi, int si) {
    check_rank(fi, static_cast<int>(scoring.likelihood.size()), "likelihood");
    check_rank(si, static_cast<int>(scoring.impact.size()), "impact");
    if (scoring.cells) {
        auto it = scoring.cells->find({fi, si});
        if (it == scoring.cells->end())
            throw RangeError("cell (" + std::to_string(fi) + ", " + std::to_string(si) +
                             ") missing from the explicit cell map");
        return it->second;
    }
    int ri = risk_index(fi, si);
    if (ri <= scoring.low_max) return Intolerance::Low;
    if (ri >= scoring.high_min) return Intolerance::High;
    return Intolerance::Medium;
}

CellMap generate_cells(const ScoringSystem& scoring) {
    CellMap cells;
    for (int fi = 1; fi <= static_cast<int>(scoring.likelihood.size()); ++fi)
        for (int si = 1; si <= static_cast<int>(scoring.impact.size()); ++si)
            cells[{fi, si}] = classify(scoring, fi, si);
    return cells;
}

} // namespace riskcad
