#include "obs/plmaps.hpp"

#include <map>
#include <stdexcept>

namespace obs {

GroupElement PLMap::twist(const GroupElement& g) const {
    GroupElement d = quotientToDihedral(g, sphere.group);
    return invertEpsilon ? canonical({-d.a, d.j}, target) : d;
}

RatVec PLMap::vertexImage(int vertexId) const {
    return act(twist(sphere.vertexDecomposition(vertexId)), target, seed);
}

std::vector<RatVec> PLMap::simplexImage(const SimplexPQ& s) const {
    std::vector<RatVec> out;
    for (int id : sphere.vertices(s)) out.push_back(vertexImage(id));
    return out;
}

PLMap buildEquivariantMap(const RatVec& seed, int n, bool invertEpsilon) {
    if ((int)seed.size() != n) throw std::invalid_argument("seed has wrong dimension");
    Rat sum = 0;
    for (const auto& x : seed) sum += x;
    if (sgn(sum) != 0) throw std::invalid_argument("seed does not lie in W_n");
    return {buildJoinSphere(n), dihedral(n), seed, invertEpsilon};
}

static RatVec combine(const std::vector<RatVec>& pts, const RatVec& lambda) {
    RatVec x(pts[0].size());
    for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += lambda[j] * pts[j][k];
    return x;
}

FaceIntersection intersectHull(const std::vector<RatVec>& points, const Subspace& v, bool stopAtFirst) {
    std::size_t k = points.size();
    RatMatrix sys(v.equations.rows + 1, k);
    RatVec rhs(v.equations.rows + 1);
    for (std::size_t r = 0; r < v.equations.rows; ++r)
        for (std::size_t j = 0; j < k; ++j) {
            Rat s = 0;
            for (int c = 0; c < v.n; ++c) s += v.equations(r, c) * points[j][c];
            sys(r, j) = s;
        }
    for (std::size_t j = 0; j < k; ++j) sys(v.equations.rows, j) = 1;
    rhs[v.equations.rows] = 1;

    FaceIntersection out;
    auto nonneg = [](const RatVec& l) {
        for (const auto& x : l)
            if (sgn(x) < 0) return false;
        return true;
    };
    auto finish = [&](const RatVec& lambda) {
        out.kind = FaceIntersection::Point;
        out.barycentric = lambda;
        out.point = combine(points, lambda);
        out.interior = true;
        for (const auto& x : lambda)
            if (sgn(x) == 0) out.interior = false;
        out.polytopeVertices = 1;
    };
    auto full = solveAffine(sys, rhs);
    if (full.kind == SolutionSet::Empty) return out;
    if (full.kind == SolutionSet::UniquePoint) {
        if (nonneg(full.point)) finish(full.point);
        return out;
    }
    std::vector<RatVec> verts;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1) cols.push_back(j);
        RatMatrix sub(sys.rows, cols.size());
        for (std::size_t r = 0; r < sys.rows; ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = sys(r, cols[c]);
        auto s = solveAffine(sub, rhs);
        if (s.kind != SolutionSet::UniquePoint || !nonneg(s.point)) continue;
        RatVec lambda(k);
        for (std::size_t c = 0; c < cols.size(); ++c) lambda[cols[c]] = s.point[c];
        bool seen = false;
        for (const auto& w : verts) seen = seen || w == lambda;
        if (!seen) verts.push_back(lambda);
        if (stopAtFirst) break;
    }
    if (verts.empty()) return out;
    if (verts.size() == 1) {
        finish(verts[0]);
        return out;
    }
    out.kind = FaceIntersection::Positive;
    out.barycentric = verts[0];
    out.point = combine(points, verts[0]);
    out.polytopeVertices = verts.size();
    return out;
}

static bool transversalTo(const std::vector<RatVec>& img, const Subspace& v) {
    RatMatrix m(0, img[0].size() - 1);
    for (std::size_t j = 1; j < img.size(); ++j) {
        RatVec e(img[0].size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = img[j][k] - img[0][k];
        m.appendRow(wCoordinates(e));
    }
    for (const auto& b : v.orientedBasis) m.appendRow(wCoordinates(b));
    return rank(m) == (std::size_t)v.n - 1;
}

int intersectionSign(const std::vector<RatVec>& img, const Subspace& v) {
    std::size_t n = img[0].size();
    if (img.size() - 1 + v.orientedBasis.size() != n - 1) return 0;
    RatMatrix m(n - 1, n - 1);
    std::size_t col = 0;
    for (std::size_t j = 1; j < img.size(); ++j, ++col) {
        RatVec e(n);
        for (std::size_t k = 0; k < n; ++k) e[k] = img[j][k] - img[0][k];
        RatVec w = wCoordinates(e);
        for (std::size_t r = 0; r + 1 < n; ++r) m(r, col) = w[r];
    }
    for (const auto& b : v.orientedBasis) {
        RatVec w = wCoordinates(b);
        for (std::size_t r = 0; r + 1 < n; ++r) m(r, col) = w[r];
        ++col;
    }
    return sgn(determinant(m));
}

int intersectionSign(const PLMap& m, const IntersectionRecord& rec, const Subspace& v) {
    int s = intersectionSign(m.simplexImage(rec.simplex), v);
    return m.flipWOrientation ? -s : s;
}

std::vector<IntersectionRecord> intersectSimplexWithSubspace(const PLMap& m, const SimplexPQ& s, const Subspace& v) {
    auto img = m.simplexImage(s);
    FaceIntersection f = intersectHull(img, v);
    if (f.kind == FaceIntersection::Empty) return {};
    IntersectionRecord r;
    r.simplex = s;
    r.barycentric = f.barycentric;
    r.point = f.point;
    r.interior = f.interior;
    r.positiveDimensional = f.kind == FaceIntersection::Positive;
    r.transversal = !r.positiveDimensional && transversalTo(img, v);
    return {r};
}

static std::string faceName(const SimplexPQ& s, int omitted) {
    return toString(s) + " face without vertex " + std::to_string(omitted);
}

GeneralPositionReport generalPositionCheck(const PLMap& m, const Arrangement& a,
                                           const std::vector<SimplexPQ>& cellSimplices) {
    GeneralPositionReport rep;
    auto fail = [](Condition& c, const std::string& why) {
        if (c.pass) c.counterexample = why;
        c.pass = false;
    };
    for (const auto& s : cellSimplices) {
        auto img = m.simplexImage(s);
        for (int omit = 0; omit < 4; ++omit) {
            std::vector<RatVec> face;
            for (int j = 0; j < 4; ++j)
                if (j != omit) face.push_back(img[j]);
            for (std::size_t k = 0; k < a.size(); ++k)
                if (intersectHull(face, a.maximal[k], true).kind != FaceIntersection::Empty)
                    fail(rep.A, faceName(s, omit) + " meets element " + std::to_string(k));
        }
        std::map<RatVec, IntersectionRecord> merged;
        for (std::size_t k = 0; k < a.size(); ++k)
            for (auto& r : intersectSimplexWithSubspace(m, s, a.maximal[k])) {
                if (r.positiveDimensional)
                    fail(rep.B, toString(s) + " meets element " + std::to_string(k) + " in a positive-dimensional set");
                auto it = merged.find(r.barycentric);
                if (it == merged.end()) it = merged.emplace(r.barycentric, r).first;
                it->second.stratum.insert((int)k);
                it->second.transversal = it->second.transversal && r.transversal;
                it->second.positiveDimensional = it->second.positiveDimensional || r.positiveDimensional;
            }
        for (auto& [key, r] : merged) {
            if (r.positiveDimensional) {
                rep.records.push_back(r);
                continue;
            }
            r.stratum = stratumOf(r.point, a);
            for (int k : r.stratum) {
                bool t = transversalTo(img, a.maximal[k]);
                r.transversal = r.transversal && t;
                r.signs.push_back(intersectionSign(m, r, a.maximal[k]));
            }
            if (!r.interior) fail(rep.A, toString(s) + " meets the arrangement on its boundary");
            if (!r.transversal) fail(rep.C, toString(s) + " meets the arrangement non-transversally");
            if (r.stratum.size() > 2) {
                fail(rep.D, toString(s) + " meets a stratum lying in more than two elements");
            } else if (r.stratum.size() == 2) {
                int k = *r.stratum.begin(), l = *r.stratum.rbegin();
                if (intersect(a.maximal[k], a.maximal[l]).dim != a.maximal[k].dim - 1)
                    fail(rep.D, toString(s) + " meets an intersection stratum of codimension > 1");
            }
            rep.records.push_back(r);
        }
    }
    return rep;
}

RatVec defaultProbeDirection(int n) {
    RatVec d(n);
    Rat t(2, 7), p = 1, mean = 0;
    for (int k = 0; k < n; ++k) d[k] = p, mean += p, p *= t;
    mean /= n;
    for (auto& x : d) x -= mean;
    return d;
}

ProbeResult translateProbe(const PLMap& m, const IntersectionRecord& rec, const Arrangement& a,
                           const std::vector<IntersectionRecord>& others, const std::optional<RatVec>& delta) {
    std::size_t n = rec.point.size();
    auto img = m.simplexImage(rec.simplex);
    Rat rho(1, 2);
    auto containsOther = [&](const Rat& r) {
        for (const auto& o : others) {
            if (!(o.simplex == rec.simplex) || o.barycentric == rec.barycentric) continue;
            bool in = true;
            for (std::size_t j = 0; j < 4 && in; ++j)
                if (sgn(o.barycentric[j] - (1 - r) * rec.barycentric[j]) < 0) in = false;
            if (in) return true;
        }
        return false;
    };
    while (containsOther(rho)) rho /= 2;
    std::vector<RatVec> local;
    for (const auto& p : img) {
        RatVec q(n);
        for (std::size_t k = 0; k < n; ++k) q[k] = rec.point[k] + rho * (p[k] - rec.point[k]);
        local.push_back(q);
    }

    std::vector<RatVec> directions;
    if (delta) {
        bool zero = true;
        for (const auto& x : *delta) zero = zero && sgn(x) == 0;
        if (zero || delta->size() != n) throw std::invalid_argument("probe vector is not generic");
        directions.push_back(*delta);
    } else {
        directions.push_back(defaultProbeDirection((int)n));
    }

    for (const auto& dir : directions) {
        Rat s = 1;
        for (int attempt = 0; attempt < 48; ++attempt, s /= 2) {
            RatVec d(n);
            for (std::size_t k = 0; k < n; ++k) d[k] = s * dir[k];
            std::vector<RatVec> moved;
            for (const auto& q : local) {
                RatVec w(n);
                for (std::size_t k = 0; k < n; ++k) w[k] = q[k] + d[k];
                moved.push_back(w);
            }
            bool ok = true;
            for (int omit = 0; omit < 4 && ok; ++omit) {
                std::vector<RatVec> prism;
                for (int j = 0; j < 4; ++j)
                    if (j != omit) prism.push_back(local[j]), prism.push_back(moved[j]);
                for (std::size_t k = 0; k < a.size() && ok; ++k)
                    if (intersectHull(prism, a.maximal[k], true).kind != FaceIntersection::Empty) ok = false;
            }
            ProbeResult res;
            res.delta = d;
            res.shrink = rho;
            res.countPerElement.assign(a.size(), 0);
            for (std::size_t k = 0; k < a.size() && ok; ++k) {
                FaceIntersection f = intersectHull(moved, a.maximal[k]);
                if (f.kind == FaceIntersection::Empty) continue;
                if (f.kind != FaceIntersection::Point || !f.interior || stratumOf(f.point, a).size() != 1) {
                    ok = false;
                    break;
                }
                int sg = intersectionSign(moved, a.maximal[k]);
                if (m.flipWOrientation) sg = -sg;
                if (sg == 0) {
                    ok = false;
                    break;
                }
                res.hits.push_back({(int)k, f.point, sg});
                res.countPerElement[k] += sg;
            }
            if (ok) return res;
        }
    }
    throw std::runtime_error("no generic probe vector found");
}

}  // namespace obs
