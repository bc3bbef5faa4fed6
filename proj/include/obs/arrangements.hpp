#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "obs/groups.hpp"
#include "obs/linalg.hpp"

namespace obs {

struct Subspace {
    int n = 0;
    RatMatrix equations;  // RREF, always containing the sum row in its row space
    int dim = 0;
    std::vector<RatVec> orientedBasis;

    bool contains(const RatVec& x) const;
    bool operator==(const Subspace& o) const { return n == o.n && equations == o.equations; }
};

Subspace makeSubspace(int n, const std::vector<RatVec>& equationRows);
Subspace transform(const GroupElement& g, const GroupSpec& s, const Subspace& v);
Subspace intersect(const Subspace& v, const Subspace& w);
Subspace reversedOrientation(const Subspace& v);
// coordinates of x (which must lie in v) in the oriented basis of v
RatVec coordinates(const Subspace& v, const RatVec& x);
// coordinates of x in W_n with respect to e_k - e_{k+1}
RatVec wCoordinates(const RatVec& x);

RatVec indicator(int n, int from, int to);  // 1-based inclusive range

enum class TenVariant { SectionEquations, GeneralFormula, LiteralSum8 };
std::string toString(TenVariant v);
TenVariant parseTenVariant(const std::string& s);

std::vector<RatVec> sixTupleEquationRows(int a1, int a2, int a3, TenVariant variant);
Subspace partitionSubspaceSixTuple(int a1, int a2, int a3, TenVariant variant = TenVariant::SectionEquations);
Subspace partitionSubspaceTriple(int a1, int a2, int a3);
Subspace fanHyperplane(int a, int b, int n);

struct Arrangement {
    GroupSpec group;
    Subspace seed;
    std::vector<Subspace> maximal;
    std::vector<GroupElement> orbitLabel;

    int indexOf(const Subspace& v) const;  // -1 if absent
    std::size_t size() const { return maximal.size(); }
};

Arrangement orbitArrangement(const Subspace& seed, const GroupSpec& s);
Arrangement withOrientations(const Arrangement& a, const std::vector<bool>& reverse);

// sign of the matrix expressing g*(basis of element k) in the basis of the image element
int orientationTransportSign(const GroupElement& g, const Arrangement& a, int k);
int imageIndex(const GroupElement& g, const Arrangement& a, int k);

struct IntersectionPoset {
    std::vector<Subspace> nodes;
    std::vector<std::set<int>> generators;  // maximal elements containing each node
    std::vector<std::pair<int, int>> coverEdges;  // (lower, upper)
};
IntersectionPoset intersectionPoset(const Arrangement& a);

std::set<int> stratumOf(const RatVec& point, const Arrangement& a);

}  // namespace obs
