#pragma once

#include <set>
#include <string>
#include <vector>

#include "obs/arrangements.hpp"
#include "obs/plmaps.hpp"

namespace obs {

struct PointClass {
    int record = -1;  // index into the general-position report's records
    std::set<int> stratum;
    std::vector<int> signs;
    int multiplicity = 1;  // coefficient of the carrier simplex in the top cell
    bool broken = false;
};

struct Cocycle {
    std::vector<PointClass> terms;
};

Cocycle assembleCocycle(const GeneralPositionReport& rep, const TopChainMap& top);

// top-stratum linking vector, one coordinate per maximal element
IntVec chiEvaluate(const Cocycle& c, const Arrangement& a);

struct HomModule {
    std::size_t rank = 0;
    IntMatrix actEpsilon, actJ;  // twisted dual action on generator coordinates
    AbelianGroupPresentation quotient;
};

// twisted action (g.xi)(x) = det(g) xi(g^-1 x) on Hom of the top-stratum cycles
IntMatrix twistedAction(const GroupElement& g, const Arrangement& a);
HomModule homCoinvariants(const Arrangement& a);

enum class Verdict { ObstructionNonzero, ObstructionZero, Inconclusive };
std::string toString(Verdict v);
std::string verdictSentence(Verdict v);

struct CoinvariantsResult {
    AbelianGroupPresentation group;
    IntVec homVector;
    IntVec classCoordinates;
    Verdict verdict = Verdict::Inconclusive;
    std::string diagnosis;
};

CoinvariantsResult topStratumEvaluate(const Cocycle& c, const Arrangement& a);

// closed half of an element bounded by one of its codimension-one strata, or the whole element
struct Piece {
    int element = -1;
    int ridge = -1;
    int half = 0;
};

struct BrokenClassData {
    std::vector<Subspace> ridges;
    std::vector<Piece> pieces;
    IntMatrix pieceBoundary;           // ridges x pieces
    std::vector<IntVec> cycleBasis;    // integer kernel of pieceBoundary
    IntVec pieceFunctional;            // linking of the cocycle with each piece
    std::vector<ProbeResult> probes;   // one per broken term
    int jFixedBrokenTerms = 0;         // broken terms whose image simplex a reflection fixes with orientation
};

struct BrokenClassResult {
    CoinvariantsResult result;
    BrokenClassData data;
};

BrokenClassResult brokenClassEvaluate(const Cocycle& c, const Arrangement& a, const PLMap& m,
                                      const GeneralPositionReport& rep);

}  // namespace obs
