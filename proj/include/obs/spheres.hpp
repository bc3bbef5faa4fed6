#pragma once

#include <map>
#include <string>
#include <vector>

#include "obs/groups.hpp"
#include "obs/linalg.hpp"

namespace obs {

// Oriented simplicial chains on the join sphere; keys are sorted vertex ids.
using Chain = std::map<std::vector<int>, Int>;

void addSimplex(Chain& c, std::vector<int> vertices, const Int& coeff);
Chain boundary(const Chain& c);
void addChain(Chain& into, const Chain& c, const Int& coeff = 1);
bool isZero(const Chain& c);

struct SimplexPQ {
    int p = 0, q = 0;
    auto operator<=>(const SimplexPQ&) const = default;
};
std::string toString(const SimplexPQ& s);

// P_2n * P_2n with the free Q4n action; vertex g*t has id vertexId(g).
struct SimplicialSphere {
    int n = 0;
    GroupSpec group;

    int vertexCount() const { return 4 * n; }
    int vertexId(const GroupElement& g) const;
    GroupElement vertexDecomposition(int id) const;
    std::string vertexLabel(int id) const;  // "a3", "b1"
    int actOnVertex(const GroupElement& h, int id) const;
    // ordered vertices [e^p t, e^(p+1) t, e^q jt, e^(q+1) jt]
    std::vector<int> vertices(const SimplexPQ& s) const;
    std::vector<SimplexPQ> simplices3() const;
    Chain chainOf(const SimplexPQ& s, const Int& coeff = 1) const;
    Chain act(const GroupElement& h, const Chain& c) const;
    // h * sigma = sign * sigma'
    std::pair<SimplexPQ, int> actOnSimplex(const GroupElement& h, const SimplexPQ& s) const;
    // all k-simplices (sorted vertex tuples), k = 0..3, in a fixed order
    std::vector<std::vector<int>> simplices(int k) const;
};

SimplicialSphere buildJoinSphere(int n);

// integer boundary matrix C_k -> C_{k-1} over the simplices(k) bases
IntMatrix boundaryMatrix(const SimplicialSphere& s, int k);

struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;
    bool operator==(const HomologyGroup&) const = default;
};
// homology of a complex given by consecutive boundary matrices d[k]: C_k -> C_{k-1} (d[0] empty)
std::vector<HomologyGroup> homology(const std::vector<IntMatrix>& d, const std::vector<std::size_t>& ranks);

using GroupRingElement = std::map<GroupElement, Int>;
GroupRingElement multiply(const GroupRingElement& x, const GroupRingElement& y, const GroupSpec& s);

enum class Cell { a, b, bp, c, cp, e };
int cellDim(Cell c);
std::string toString(Cell c);

struct EconomicComplex {
    int n = 0;
    GroupSpec group;
    std::map<Cell, std::vector<std::pair<GroupRingElement, Cell>>> boundary;

    std::vector<Cell> cells(int dim) const;
    // boundary over the Z-basis {g * cell}; columns ordered by (cell, element)
    IntMatrix expandedBoundary(int dim) const;
    std::size_t expandedRank(int dim) const;
};

EconomicComplex economicComplex(int n);
bool boundarySquaredZero(const EconomicComplex& e);

struct TopChainMap {
    std::vector<std::pair<SimplexPQ, int>> imageOfE;  // sigma(i,0) with sign
};

// chain map on the cells below the top one
Chain chainMapLower(const SimplicialSphere& s, Cell c);
Chain chainMapOf(const SimplicialSphere& s, const EconomicComplex& e, const TopChainMap& top,
                 const GroupRingElement& r, Cell c);
// solves d f(e) = f(d e) for the signs and freezes them
TopChainMap solveTopChainMap(const SimplicialSphere& s, const EconomicComplex& e);
std::vector<std::pair<SimplexPQ, int>> maximalCellSimplices(int n);

}  // namespace obs
