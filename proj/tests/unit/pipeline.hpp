#pragma once

#include "obs/obstruction.hpp"
#include "obs/plmaps.hpp"

#include <random>

struct Pipeline {
    obs::Arrangement arrangement;
    obs::PLMap map;
    obs::TopChainMap top;
    obs::GeneralPositionReport report;
    obs::Cocycle cocycle;
};

inline Pipeline runPipeline(const obs::Arrangement& a, const obs::PLMap& m) {
    Pipeline p{a, m, obs::solveTopChainMap(m.sphere, obs::economicComplex(m.sphere.n)), {}, {}};
    std::vector<obs::SimplexPQ> cells;
    for (const auto& [s, c] : p.top.imageOfE) cells.push_back(s);
    p.report = obs::generalPositionCheck(m, a, cells);
    if (p.report.pass()) p.cocycle = obs::assembleCocycle(p.report, p.top);
    return p;
}

inline obs::Arrangement arrangement8() {
    return obs::orbitArrangement(obs::partitionSubspaceSixTuple(1, 1, 2), obs::dihedral(8));
}

inline obs::RatVec seed8() { return {-3, 3, -1, 1, 1, -2, 2, -1}; }

inline obs::RatVec randomSeed(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-40, 40);
    obs::RatVec s(n);
    obs::Rat sum = 0;
    for (int i = 0; i < n; ++i) {
        s[i] = obs::frac(d(rng), 1 + (d(rng) + 40) % 13);
        sum += s[i];
    }
    for (auto& x : s) x -= sum / n;
    return s;
}
