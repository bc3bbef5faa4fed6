#include "doctest.h"
#include "pipeline.hpp"

using namespace obs;

TEST_CASE("seed images") {
    PLMap m = buildEquivariantMap(seed8(), 8, true);
    CHECK(m.vertexImage(m.sphere.vertexId(jay())) == RatVec{-1, 2, -2, 1, 1, -1, 3, -3});
    CHECK(m.vertexImage(m.sphere.vertexId(identity())) == seed8());
    PLMap fan = buildEquivariantMap({frac(4, 5), frac(-1, 5), frac(-1, 5), frac(-1, 5), frac(-1, 5)}, 5);
    CHECK(fan.vertexImage(fan.sphere.vertexId(jay())) == RatVec{frac(-1, 5), frac(-1, 5), frac(-1, 5), frac(-1, 5), frac(4, 5)});
    CHECK_THROWS(buildEquivariantMap({1, 0, 0}, 3));
}

TEST_CASE("vertex images are equivariant") {
    std::mt19937 rng(21);
    for (int n = 2; n <= 12; ++n)
        for (bool invert : {false, true}) {
            PLMap m = buildEquivariantMap(randomSeed(rng, n), n, invert);
            auto els = elements(m.sphere.group);
            if (n > 6) els.resize(8);
            for (const auto& g : els)
                for (int v = 0; v < m.sphere.vertexCount(); ++v)
                    CHECK(m.vertexImage(m.sphere.actOnVertex(g, v)) == act(m.twist(g), m.target, m.vertexImage(v)));
        }
}

TEST_CASE("hull intersections") {
    auto u = [](int i) {
        RatVec v(3, frac(-1, 3));
        v[i - 1] += 1;
        return v;
    };
    auto seg = intersectHull({u(1), u(2)}, makeSubspace(3, {{1, -1, 0}}));
    CHECK(seg.kind == FaceIntersection::Point);
    CHECK(seg.barycentric == RatVec{frac(1, 2), frac(1, 2)});
    CHECK(seg.point == RatVec{frac(1, 6), frac(1, 6), frac(-1, 3)});
    CHECK(seg.interior);
    CHECK(intersectHull({u(1), u(2)}, makeSubspace(3, {{0, 0, 1}})).kind == FaceIntersection::Empty);
    CHECK(intersectHull({u(1), u(2), u(3)}, makeSubspace(3, {{1, 0, 0}})).kind == FaceIntersection::Positive);
    auto corner = intersectHull({u(1), u(2)}, makeSubspace(3, {{1, 1, 0}}));
    CHECK(corner.kind == FaceIntersection::Empty);
}

TEST_CASE("n = 8 general position and orbit coherence") {
    Arrangement a = arrangement8();
    PLMap m = buildEquivariantMap(seed8(), 8, true);
    Pipeline p = runPipeline(a, m);
    CHECK(p.report.pass());
    REQUIRE(p.report.records.size() == 7);
    for (const auto& rec : p.report.records) {
        CHECK(rec.stratum.size() == 1);
        CHECK(rec.interior);
        CHECK(rec.transversal);
        int k = *rec.stratum.begin();
        CHECK(intersectionSign(m, rec, a.maximal[k]) == rec.signs[0]);
        for (const auto& h : elements(m.sphere.group)) {
            auto [img, sign] = m.sphere.actOnSimplex(h, rec.simplex);
            GroupElement th = m.twist(h);
            int kk = imageIndex(th, a, k);
            RatVec target = act(th, m.target, rec.point);
            bool found = false;
            for (const auto& r : intersectSimplexWithSubspace(m, img, a.maximal[kk])) found = found || r.point == target;
            CHECK(found);
        }
    }
}

TEST_CASE("probe agrees with the direct sign") {
    Arrangement a = arrangement8();
    PLMap m = buildEquivariantMap(seed8(), 8, true);
    Pipeline p = runPipeline(a, m);
    for (const auto& rec : p.report.records) {
        std::vector<IntersectionRecord> others;
        for (const auto& r : p.report.records)
            if (r.simplex == rec.simplex && r.point != rec.point) others.push_back(r);
        ProbeResult pr = translateProbe(m, rec, a, others);
        int k = *rec.stratum.begin(), total = 0;
        for (const auto& h : pr.hits) {
            CHECK(h.element == k);
            total += h.sign;
        }
        CHECK(total == rec.signs[0]);
    }
}

TEST_CASE("general position failures are reported") {
    int n = 5;
    RatVec u1(n, frac(-1, n));
    u1[0] += 1;
    Arrangement b = orbitArrangement(intersect(partitionSubspaceTriple(2, 1, 2), fanHyperplane(2, 1, n)), dihedral(n));
    Pipeline p = runPipeline(b, buildEquivariantMap(u1, n));
    CHECK_FALSE(p.report.pass());
    CHECK_FALSE(p.report.A.counterexample.empty());
}
