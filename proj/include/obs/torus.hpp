#pragma once

#include <string>
#include <vector>

namespace obs {

enum class Sym { Xi, MinusXi, Free };

// point of the r-fold product of n-spheres; only the symbolic shape of each component matters
struct TorusPoint {
    std::vector<Sym> c;
    bool operator==(const TorusPoint&) const = default;
};

std::string toString(const TorusPoint& p);

// A^i = {x_i = -x_{i+1}} for i < r-1, A^{r-1} = {x_{r-1} = x_0}
bool subtorusMembership(const TorusPoint& p, int i, int r, int n);
std::vector<int> subtorusStratum(const TorusPoint& p, int r, int n);
TorusPoint omega(const TorusPoint& p);

struct LovaszHit {
    TorusPoint point;
    std::vector<int> stratum;
};

struct LovaszResult {
    int r = 0, n = 0;
    std::vector<LovaszHit> hits;
    bool singleOrbit = false;
    bool eachSingleStratum = false;
};

// f(x) = (x, xi, ..., xi): solve each subtorus constraint for the free first component
LovaszResult lovaszIntersection(int r, int n);

}  // namespace obs
