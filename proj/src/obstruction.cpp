#include "obs/obstruction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace obs {

Cocycle assembleCocycle(const GeneralPositionReport& rep, const TopChainMap& top) {
    if (!rep.pass()) throw std::invalid_argument("cocycle needs a map in general position");
    Cocycle c;
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const auto& r = rep.records[i];
        PointClass p;
        p.record = (int)i;
        p.stratum = r.stratum;
        p.signs = r.signs;
        p.broken = r.stratum.size() >= 2;
        for (const auto& [s, sign] : top.imageOfE)
            if (s == r.simplex) p.multiplicity = sign;
        c.terms.push_back(p);
    }
    return c;
}

IntVec chiEvaluate(const Cocycle& c, const Arrangement& a) {
    IntVec h(a.size());
    for (const auto& t : c.terms) {
        if (t.broken) throw std::invalid_argument("broken point class needs the broken-class evaluator");
        h[*t.stratum.begin()] += t.multiplicity * t.signs[0];
    }
    return h;
}

IntMatrix twistedAction(const GroupElement& g, const Arrangement& a) {
    std::size_t k = a.size();
    int det = detOnW(g, a.group, a.seed.n);
    IntMatrix m(k, k);
    for (std::size_t v = 0; v < k; ++v)
        m(imageIndex(g, a, (int)v), v) = det * orientationTransportSign(g, a, (int)v);
    return m;
}

static IntMatrix relationsFrom(const std::vector<IntMatrix>& actions, std::size_t k) {
    IntMatrix rel(0, k);
    for (const auto& m : actions)
        for (std::size_t c = 0; c < k; ++c) {
            IntVec row(k);
            for (std::size_t r = 0; r < k; ++r) row[r] = (r == c ? 1 : 0) - m(r, c);
            bool zero = std::all_of(row.begin(), row.end(), [](const Int& x) { return sgn(x) == 0; });
            if (!zero) rel.appendRow(row);
        }
    rel.cols = k;
    return rel;
}

HomModule homCoinvariants(const Arrangement& a) {
    HomModule h;
    h.rank = a.size();
    h.actEpsilon = twistedAction(epsilon(a.group), a);
    h.actJ = twistedAction(jay(), a);
    h.quotient = abelianQuotient(h.rank, relationsFrom({h.actEpsilon, h.actJ}, h.rank));
    return h;
}

std::string toString(Verdict v) {
    switch (v) {
        case Verdict::ObstructionNonzero: return "ObstructionNonzero";
        case Verdict::ObstructionZero: return "ObstructionZero";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "";
}

std::string verdictSentence(Verdict v) {
    switch (v) {
        case Verdict::ObstructionNonzero: return "no equivariant map; the asserted partition exists";
        case Verdict::ObstructionZero:
            return "primary obstruction vanishes; method inconclusive for the partition claim";
        case Verdict::Inconclusive: return "evaluator preconditions failed; no conclusion";
    }
    return "";
}

static CoinvariantsResult classify(const AbelianGroupPresentation& q, const IntVec& h) {
    CoinvariantsResult r;
    r.group = q;
    r.homVector = h;
    r.classCoordinates = q.classOf(h);
    r.verdict = q.isZero(h) ? Verdict::ObstructionZero : Verdict::ObstructionNonzero;
    return r;
}

CoinvariantsResult topStratumEvaluate(const Cocycle& c, const Arrangement& a) {
    return classify(homCoinvariants(a).quotient, chiEvaluate(c, a));
}

namespace {

struct PieceModel {
    std::vector<Subspace> ridges;
    std::vector<std::vector<int>> ridgesOf;  // per element
    std::vector<Piece> pieces;
    std::vector<RatVec> normal;              // per piece: functional separating its half

    int halfOf(std::size_t piece, const RatVec& x) const {
        Rat s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += normal[piece][k] * x[k];
        return sgn(s);
    }
    int pieceIndex(int element, int ridge, int half) const {
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (pieces[i].element == element && pieces[i].ridge == ridge && pieces[i].half == half) return (int)i;
        return -1;
    }
    int ridgeIndex(const Subspace& s) const {
        for (std::size_t r = 0; r < ridges.size(); ++r)
            if (ridges[r] == s) return (int)r;
        return -1;
    }
};

Rat dot(const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
}

void buildPieces(const Arrangement& a, PieceModel& pm) {
    std::size_t k = a.size();
    pm.ridgesOf.assign(k, {});
    for (std::size_t v = 0; v < k; ++v)
        for (std::size_t w = 0; w < k; ++w) {
            if (v == w) continue;
            Subspace s = intersect(a.maximal[v], a.maximal[w]);
            if (s.dim != a.maximal[v].dim - 1) continue;
            int idx = pm.ridgeIndex(s);
            if (idx < 0) {
                pm.ridges.push_back(s);
                idx = (int)pm.ridges.size() - 1;
            }
            auto& list = pm.ridgesOf[v];
            if (std::find(list.begin(), list.end(), idx) == list.end()) list.push_back(idx);
        }
    for (std::size_t v = 0; v < k; ++v) {
        auto& list = pm.ridgesOf[v];
        std::sort(list.begin(), list.end());
        if (list.empty()) {
            pm.pieces.push_back({(int)v, -1, 0});
            pm.normal.push_back(RatVec(a.maximal[v].n));
            continue;
        }
        for (int r : list) {
            const Subspace& R = pm.ridges[r];
            RatVec f;
            for (std::size_t row = 0; row < R.equations.rows && f.empty(); ++row) {
                RatVec cand = R.equations.row(row);
                for (const auto& b : a.maximal[v].orientedBasis)
                    if (sgn(dot(cand, b)) != 0) {
                        f = cand;
                        break;
                    }
            }
            for (int h : {1, -1}) {
                pm.pieces.push_back({(int)v, r, h});
                pm.normal.push_back(f);
            }
        }
    }
}

// a basis vector of the element on the given side of the piece's ridge
RatVec insidePoint(const Arrangement& a, const PieceModel& pm, std::size_t i, int side) {
    const Piece& p = pm.pieces[i];
    for (const auto& b : a.maximal[p.element].orientedBasis) {
        Rat d = dot(pm.normal[i], b);
        if (sgn(d) == 0) continue;
        RatVec x = b;
        if (sgn(d) != side)
            for (auto& y : x) y = -y;
        return x;
    }
    throw std::logic_error("ridge functional vanishes on its element");
}

// boundary sign of a half: outward normal first, then the ridge basis
int halfBoundarySign(const Arrangement& a, const PieceModel& pm, std::size_t i) {
    const Piece& p = pm.pieces[i];
    const Subspace& V = a.maximal[p.element];
    const Subspace& R = pm.ridges[p.ridge];
    std::vector<RatVec> cols{insidePoint(a, pm, i, -p.half)};
    for (const auto& b : R.orientedBasis) cols.push_back(b);
    RatMatrix m(V.dim, V.dim);
    for (int c = 0; c < V.dim; ++c) {
        RatVec co = coordinates(V, cols[c]);
        for (int r = 0; r < V.dim; ++r) m(r, c) = co[r];
    }
    return sgn(determinant(m));
}

IntMatrix pieceAction(const GroupElement& g, const Arrangement& a, const PieceModel& pm) {
    std::size_t P = pm.pieces.size();
    IntMatrix m(P, P);
    for (std::size_t i = 0; i < P; ++i) {
        const Piece& p = pm.pieces[i];
        int w = imageIndex(g, a, p.element);
        int s = orientationTransportSign(g, a, p.element);
        int j;
        if (p.ridge < 0) {
            j = pm.pieceIndex(w, -1, 0);
        } else {
            int r = pm.ridgeIndex(transform(g, a.group, pm.ridges[p.ridge]));
            RatVec x = act(g, a.group, insidePoint(a, pm, i, p.half));
            int j0 = pm.pieceIndex(w, r, 1);
            j = j0 < 0 ? -1 : pm.pieceIndex(w, r, pm.halfOf(j0, x));
        }
        if (j < 0) throw std::logic_error("group does not permute the pieces");
        m(j, i) = s;
    }
    return m;
}

// adds value to every piece of the element containing x
void depositHit(const PieceModel& pm, int element, const RatVec& x, const Int& value, IntVec& functional) {
    for (std::size_t i = 0; i < pm.pieces.size(); ++i) {
        const Piece& p = pm.pieces[i];
        if (p.element != element) continue;
        if (p.ridge < 0 || pm.halfOf(i, x) == p.half) functional[i] += value;
    }
}

// M with action * Z = Z * M
IntMatrix restrictToCycles(const IntMatrix& action, const std::vector<IntVec>& basis) {
    std::size_t P = action.rows, k = basis.size();
    RatMatrix z(P, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < P; ++r) z(r, c) = Rat(basis[c][r]);
    IntMatrix out(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        RatVec img(P);
        for (std::size_t r = 0; r < P; ++r)
            for (std::size_t q = 0; q < P; ++q) img[r] += Rat(action(r, q) * basis[c][q]);
        auto sol = solveAffine(z, img);
        if (sol.kind != SolutionSet::UniquePoint) throw std::logic_error("cycle lattice is not invariant");
        for (std::size_t r = 0; r < k; ++r) {
            if (sol.point[r].get_den() != 1) throw std::logic_error("cycle lattice action is not integral");
            out(r, c) = sol.point[r].get_num();
        }
    }
    return out;
}

}  // namespace

BrokenClassResult brokenClassEvaluate(const Cocycle& c, const Arrangement& a, const PLMap& m,
                                      const GeneralPositionReport& rep) {
    BrokenClassResult out;
    PieceModel pm;
    buildPieces(a, pm);
    auto& d = out.data;
    d.ridges = pm.ridges;
    d.pieces = pm.pieces;
    std::size_t P = pm.pieces.size();
    d.pieceBoundary = IntMatrix(pm.ridges.size(), P);
    for (std::size_t i = 0; i < P; ++i)
        if (pm.pieces[i].ridge >= 0) d.pieceBoundary(pm.pieces[i].ridge, i) = halfBoundarySign(a, pm, i);
    d.cycleBasis = integerKernel(d.pieceBoundary);
    std::size_t k = d.cycleBasis.size();

    d.pieceFunctional.assign(P, Int(0));
    for (const auto& t : c.terms) {
        const auto& rec = rep.records[t.record];
        if (!t.broken) {
            depositHit(pm, *t.stratum.begin(), rec.point, t.multiplicity * t.signs[0], d.pieceFunctional);
            continue;
        }
        ProbeResult pr;
        try {
            pr = translateProbe(m, rec, a, rep.records);
        } catch (const std::runtime_error& e) {
            out.result.diagnosis = e.what();
            return out;
        }
        for (const auto& h : pr.hits) depositHit(pm, h.element, h.point, t.multiplicity * h.sign, d.pieceFunctional);
        d.probes.push_back(pr);

        auto img = m.simplexImage(rec.simplex);
        for (const auto& g : elements(m.target)) {
            if (g.j == 0) continue;
            std::vector<int> perm;
            for (const auto& p : img) {
                auto it = std::find(img.begin(), img.end(), act(g, m.target, p));
                if (it == img.end()) break;
                perm.push_back((int)(it - img.begin()));
            }
            if (perm.size() == 4 && PermutationAction{4, perm}.sign() == 1) {
                ++d.jFixedBrokenTerms;
                break;
            }
        }
    }

    IntVec xi(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t p = 0; p < P; ++p) xi[i] += d.cycleBasis[i][p] * d.pieceFunctional[p];

    std::vector<IntMatrix> dual;
    for (const auto& g : {epsilon(a.group), jay()}) {
        GroupElement gi = inverse(g, a.group);
        IntMatrix mInv = restrictToCycles(pieceAction(gi, a, pm), d.cycleBasis);
        int det = detOnW(g, a.group, a.seed.n);
        IntMatrix t = mInv.transpose();
        for (auto& x : t.a) x *= det;
        dual.push_back(t);
    }
    out.result = classify(abelianQuotient(k, relationsFrom(dual, k)), xi);
    return out;
}

}  // namespace obs
