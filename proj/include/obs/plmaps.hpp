#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "obs/arrangements.hpp"
#include "obs/spheres.hpp"

namespace obs {

// f(g t) = twist(g) * seed, where twist is the identity or the automorphism e -> e^-1, j -> j.
struct PLMap {
    SimplicialSphere sphere;
    GroupSpec target;  // dihedral group acting on R^n
    RatVec seed;
    bool invertEpsilon = false;
    bool flipWOrientation = false;

    GroupElement twist(const GroupElement& g) const;
    RatVec vertexImage(int vertexId) const;
    std::vector<RatVec> simplexImage(const SimplexPQ& s) const;
};

PLMap buildEquivariantMap(const RatVec& seed, int n, bool invertEpsilon = false);

struct FaceIntersection {
    enum Kind { Empty, Point, Positive } kind = Empty;
    RatVec barycentric;  // for Point
    RatVec point;
    bool interior = false;
    std::size_t polytopeVertices = 0;
};

// convex hull of the given image points intersected with a linear subspace
FaceIntersection intersectHull(const std::vector<RatVec>& points, const Subspace& v, bool stopAtFirst = false);

struct IntersectionRecord {
    SimplexPQ simplex;
    RatVec barycentric;
    RatVec point;
    std::set<int> stratum;
    bool interior = true;
    bool transversal = true;
    std::vector<int> signs;  // per stratum member, in stratum order
    bool positiveDimensional = false;
};

std::vector<IntersectionRecord> intersectSimplexWithSubspace(const PLMap& m, const SimplexPQ& s, const Subspace& v);

struct Condition {
    bool pass = true;
    std::string counterexample;
};

struct GeneralPositionReport {
    Condition A, B, C, D;
    std::vector<IntersectionRecord> records;  // on the cell simplices, ordered by (simplex, stratum)

    bool pass() const { return A.pass && B.pass && C.pass && D.pass; }
};

GeneralPositionReport generalPositionCheck(const PLMap& m, const Arrangement& a,
                                           const std::vector<SimplexPQ>& cellSimplices);

// sign of det [edge vectors of the image simplex | oriented basis of v] in W coordinates; 0 if degenerate
int intersectionSign(const std::vector<RatVec>& imageVertices, const Subspace& v);
int intersectionSign(const PLMap& m, const IntersectionRecord& rec, const Subspace& v);

struct ProbeHit {
    int element = -1;
    RatVec point;
    int sign = 0;
};

struct ProbeResult {
    RatVec delta;
    Rat shrink;  // scale of the local simplex around the point
    std::vector<ProbeHit> hits;
    std::vector<int> countPerElement;
};

// Linking data of a small disk of f(sigma) around rec, pushed off by delta. Throws if no generic delta is found.
ProbeResult translateProbe(const PLMap& m, const IntersectionRecord& rec, const Arrangement& a,
                           const std::vector<IntersectionRecord>& otherHitsOnSimplex,
                           const std::optional<RatVec>& delta = std::nullopt);

RatVec defaultProbeDirection(int n);

}  // namespace obs
