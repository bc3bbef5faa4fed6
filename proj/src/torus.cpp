#include "obs/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace obs {

static Sym neg(Sym s) {
    switch (s) {
        case Sym::Xi: return Sym::MinusXi;
        case Sym::MinusXi: return Sym::Xi;
        case Sym::Free: return Sym::Free;
    }
    return s;
}

std::string toString(const TorusPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i) s += ",";
        s += p.c[i] == Sym::Xi ? "xi" : p.c[i] == Sym::MinusXi ? "-xi" : "x";
    }
    return s + ")";
}

bool subtorusMembership(const TorusPoint& p, int i, int r, int n) {
    if (r < 2 || n < 1 || (int)p.c.size() != r || i < 0 || i >= r)
        throw std::invalid_argument("subtorus index out of range");
    Sym x = i == r - 1 ? p.c[r - 1] : p.c[i];
    Sym y = i == r - 1 ? p.c[0] : neg(p.c[i + 1]);
    if (x == Sym::Free || y == Sym::Free) throw std::invalid_argument("membership needs determined components");
    return x == y;
}

std::vector<int> subtorusStratum(const TorusPoint& p, int r, int n) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
        if (subtorusMembership(p, i, r, n)) s.push_back(i);
    return s;
}

TorusPoint omega(const TorusPoint& p) {
    TorusPoint q;
    q.c.push_back(neg(p.c[0]));
    for (std::size_t k = p.c.size() - 1; k >= 1; --k) q.c.push_back(p.c[k]);
    return q;
}

LovaszResult lovaszIntersection(int r, int n) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    LovaszResult res{r, n, {}, false, false};
    std::vector<TorusPoint> found;
    for (int i = 0; i < r; ++i) {
        TorusPoint p;
        p.c.assign(r, Sym::Xi);
        // components 1..r-1 are xi; only constraints touching x_0 can hold
        if (i == 0) {
            p.c[0] = neg(p.c[1]);
        } else if (i == r - 1) {
            p.c[0] = p.c[r - 1];
        } else {
            if (!(p.c[i] == neg(p.c[i + 1]))) continue;
        }
        if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
    }
    for (const auto& p : found) res.hits.push_back({p, subtorusStratum(p, r, n)});
    res.eachSingleStratum = std::all_of(res.hits.begin(), res.hits.end(), [](const LovaszHit& h) { return h.stratum.size() == 1; });
    res.singleOrbit = res.hits.size() == 2 && omega(res.hits[0].point) == res.hits[1].point &&
                      omega(res.hits[1].point) == res.hits[0].point;
    return res;
}

}  // namespace obs
