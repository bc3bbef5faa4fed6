#include "doctest.h"
#include "obs/torus.hpp"

using namespace obs;

namespace {

// f(x) = (x, xi, ..., xi); enumerate the symbolic shapes of x directly
std::vector<std::pair<Sym, std::vector<int>>> oracle(int r) {
    std::vector<std::pair<Sym, std::vector<int>>> out;
    for (Sym c : {Sym::Xi, Sym::MinusXi, Sym::Free}) {
        std::vector<Sym> x(r, Sym::Xi);
        x[0] = c;
        std::vector<int> strata;
        for (int i = 0; i < r; ++i) {
            Sym p = x[i], q = x[(i + 1) % r];
            bool in = i < r - 1 ? (p == Sym::Xi && q == Sym::MinusXi) || (p == Sym::MinusXi && q == Sym::Xi)
                                : p == q && p != Sym::Free;
            if (in) strata.push_back(i);
        }
        if (!strata.empty()) out.push_back({c, strata});
    }
    return out;
}

}  // namespace

TEST_CASE("torus intersections match the enumeration") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 4}, {4, 7}, {2, 2}}) {
        LovaszResult res = lovaszIntersection(r, n);
        auto expect = oracle(r);
        REQUIRE(res.hits.size() == expect.size());
        CHECK(res.hits.size() == 2);
        for (const auto& [c, strata] : expect) {
            bool found = false;
            for (const auto& h : res.hits)
                if (h.point.c[0] == c && h.stratum == strata) found = true;
            CHECK(found);
            CHECK(strata.size() == 1);
        }
        CHECK(res.singleOrbit);
        CHECK(res.eachSingleStratum);
        CHECK((omega(res.hits[0].point) == res.hits[1].point));
    }
    CHECK_THROWS(lovaszIntersection(1, 3));
    CHECK_THROWS(lovaszIntersection(3, 1));
}

TEST_CASE("omega") {
    TorusPoint p{{Sym::MinusXi, Sym::Xi, Sym::Free}};
    CHECK((omega(p) == TorusPoint{{Sym::Xi, Sym::Free, Sym::Xi}}));
    CHECK((omega(omega(p)) == TorusPoint{{Sym::MinusXi, Sym::Xi, Sym::Free}}));
}
