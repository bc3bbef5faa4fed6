#include <set>

#include "doctest.h"
#include "obs/arrangements.hpp"
#include "obs/plmaps.hpp"

using namespace obs;

namespace {

RatVec u(int i, int n) {
    RatVec v(n, frac(-1, n));
    v[((i - 1) % n + n) % n] += 1;
    return v;
}

// rows of the incidence table for [u_i,u_i+1;u_j,u_j+1] against L(a,b,a), range typo in row 5 corrected
std::set<std::pair<int, int>> tableOracle(int a, int b) {
    int n = 2 * a + b;
    std::set<std::pair<int, int>> s{{a, a + b}, {a, n}, {a + b, n}};
    for (int r = a + b + 1; r <= n - 1; ++r) s.insert({a, r});
    for (int r = 1; r <= a - 1; ++r) s.insert({r, a + b});
    for (int r = a + 1; r <= a + b - 1; ++r) s.insert({r, n});
    return s;
}

}  // namespace

TEST_CASE("subspace construction") {
    Subspace v = makeSubspace(4, {{1, -1, 0, 0}});
    CHECK(v.dim == 2);
    CHECK(v.contains({1, 1, -1, -1}));
    CHECK_FALSE(v.contains({1, 0, -1, 0}));
    for (const auto& b : v.orientedBasis) CHECK(v.contains(b));
    CHECK(coordinates(v, v.orientedBasis[1]) == RatVec{0, 1});
    CHECK(wCoordinates({1, -1, 2, -2}) == RatVec{1, 0, 2});
    CHECK(indicator(5, 2, 3) == RatVec{0, 1, 1, 0, 0});
}

TEST_CASE("n = 8 arrangement structure") {
    Subspace L = partitionSubspaceSixTuple(1, 1, 2);
    CHECK(L.dim == 4);
    for (const auto& row : sixTupleEquationRows(1, 1, 2, TenVariant::SectionEquations))
        for (const auto& v : L.orientedBasis) {
            Rat dot = 0;
            for (int i = 0; i < 8; ++i) dot += row[i] * v[i];
            CHECK(dot == 0);
        }
    auto d = dihedral(8);
    Arrangement a = orbitArrangement(L, d);
    CHECK(a.size() == 4);
    CHECK(imageIndex(epsilon(d, 4), a, 0) == 0);
    CHECK(imageIndex(epsilon(d, 2), a, 0) == imageIndex(jay(), a, 0));
    CHECK(imageIndex(epsilon(d, 1), a, 0) != 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a.maximal[k].dim == L.dim);
        CHECK(transform(a.orbitLabel[k], d, L) == a.maximal[k]);
    }
}

TEST_CASE("n = 10 arrangement structure") {
    auto d = dihedral(10);
    Arrangement a = orbitArrangement(partitionSubspaceSixTuple(1, 2, 2), d);
    CHECK(a.size() == 5);
    CHECK(imageIndex(epsilon(d, 5), a, 0) == 0);
    Arrangement lit = orbitArrangement(partitionSubspaceSixTuple(1, 2, 2, TenVariant::LiteralSum8), d);
    CHECK(lit.maximal[0].dim == a.maximal[0].dim - 1);
    CHECK((parseTenVariant(toString(TenVariant::GeneralFormula)) == TenVariant::GeneralFormula));
}

TEST_CASE("zero subspace has a one-element orbit") {
    std::vector<RatVec> rows;
    for (int i = 1; i < 6; ++i) rows.push_back(indicator(6, i, i));
    Subspace z = makeSubspace(6, rows);
    CHECK(z.dim == 0);
    CHECK(orbitArrangement(z, dihedral(6)).size() == 1);
}

TEST_CASE("orbit arrangements are closed and coherent") {
    for (int n = 4; n <= 9; ++n)
        for (const auto& s : {dihedral(n), quaternion(n)}) {
            Subspace L = makeSubspace(n, {indicator(n, 1, 1), indicator(n, 2, n / 2 + 1)});
            Arrangement a = orbitArrangement(L, s);
            for (const auto& g : elements(s))
                for (std::size_t k = 0; k < a.size(); ++k) {
                    int img = imageIndex(g, a, (int)k);
                    REQUIRE(img >= 0);
                    CHECK(transform(g, s, a.maximal[k]) == a.maximal[img]);
                    CHECK(a.maximal[img].dim == L.dim);
                }
        }
}

TEST_CASE("orientation transport") {
    auto d = dihedral(8);
    Arrangement a = orbitArrangement(partitionSubspaceSixTuple(1, 1, 2), d);
    // stabilizer signs do not depend on the chosen orientations
    Arrangement r = withOrientations(a, {true, true, true, true});
    Arrangement r0 = withOrientations(a, {true, false, false, false});
    for (const auto& g : elements(d))
        for (int k = 0; k < 4; ++k) {
            int img = imageIndex(g, a, k);
            int s = orientationTransportSign(g, a, k);
            CHECK(s * s == 1);
            CHECK(orientationTransportSign(g, r, k) == s);
            int flips = (k == 0) + (img == 0);
            CHECK(orientationTransportSign(g, r0, k) == (flips == 1 ? -s : s));
        }
    CHECK(reversedOrientation(reversedOrientation(a.maximal[1])).orientedBasis == a.maximal[1].orientedBasis);
}

TEST_CASE("intersection poset of the n = 8 arrangement") {
    Arrangement a = orbitArrangement(partitionSubspaceSixTuple(1, 1, 2), dihedral(8));
    auto p = intersectionPoset(a);
    CHECK(p.nodes.size() == 5);
    CHECK(p.nodes.back().dim == 3);
    CHECK(p.generators.back().size() == 4);
    RatVec x = p.nodes.back().orientedBasis[0];
    CHECK(stratumOf(x, a).size() == 4);
}

TEST_CASE("fan incidences before the extra hyperplane match the table") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 2}, {2, 5}, {4, 3}, {3, 5}}) {
        int n = 2 * a + b;
        Subspace L = partitionSubspaceTriple(a, b, a);
        CHECK(L.dim == n - 3);
        std::set<std::pair<int, int>> found;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (intersectHull({u(i, n), u(i + 1, n), u(j, n), u(j + 1, n)}, L).kind != FaceIntersection::Empty)
                    found.insert({i, j});
        CHECK(found == tableOracle(a, b));
        CHECK((int)found.size() == n);
        Subspace L1 = intersect(L, fanHyperplane(a, b, n));
        CHECK(L1.dim == n - 4);
    }
}
