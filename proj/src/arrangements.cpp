#include "obs/arrangements.hpp"

#include <algorithm>
#include <stdexcept>

namespace obs {

bool Subspace::contains(const RatVec& x) const {
    if ((int)x.size() != n) return false;
    for (std::size_t r = 0; r < equations.rows; ++r) {
        Rat s = 0;
        for (int c = 0; c < n; ++c) s += equations(r, c) * x[c];
        if (sgn(s) != 0) return false;
    }
    return true;
}

Subspace makeSubspace(int n, const std::vector<RatVec>& equationRows) {
    RatMatrix m(0, n);
    m.appendRow(RatVec(n, Rat(1)));
    for (const auto& r : equationRows) m.appendRow(r);
    Subspace v;
    v.n = n;
    v.equations = rref(m).reduced;
    v.dim = n - (int)v.equations.rows;
    v.orientedBasis = kernelBasis(v.equations);
    return v;
}

Subspace transform(const GroupElement& g, const GroupSpec& s, const Subspace& v) {
    std::vector<RatVec> rows;
    for (std::size_t r = 0; r < v.equations.rows; ++r) rows.push_back(act(g, s, v.equations.row(r)));
    return makeSubspace(v.n, rows);
}

Subspace intersect(const Subspace& v, const Subspace& w) {
    std::vector<RatVec> rows;
    for (std::size_t r = 0; r < v.equations.rows; ++r) rows.push_back(v.equations.row(r));
    for (std::size_t r = 0; r < w.equations.rows; ++r) rows.push_back(w.equations.row(r));
    return makeSubspace(v.n, rows);
}

Subspace reversedOrientation(const Subspace& v) {
    Subspace w = v;
    if (!w.orientedBasis.empty())
        for (auto& x : w.orientedBasis[0]) x = -x;
    return w;
}

RatVec coordinates(const Subspace& v, const RatVec& x) {
    RatMatrix a(v.n, v.dim);
    for (int k = 0; k < v.n; ++k)
        for (int i = 0; i < v.dim; ++i) a(k, i) = v.orientedBasis[i][k];
    auto s = solveAffine(a, x);
    if (s.kind != SolutionSet::UniquePoint) throw std::invalid_argument("vector not in subspace");
    return s.point;
}

RatVec wCoordinates(const RatVec& x) {
    RatVec c;
    Rat acc = 0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        acc += x[k];
        c.push_back(acc);
    }
    return c;
}

RatVec indicator(int n, int from, int to) {
    RatVec v(n);
    for (int k = from; k <= to; ++k) v[k - 1] = 1;
    return v;
}

std::string toString(TenVariant v) {
    switch (v) {
        case TenVariant::SectionEquations: return "section-equations";
        case TenVariant::GeneralFormula: return "general-formula";
        case TenVariant::LiteralSum8: return "literal-sum8";
    }
    return "";
}

TenVariant parseTenVariant(const std::string& s) {
    for (auto v : {TenVariant::SectionEquations, TenVariant::GeneralFormula, TenVariant::LiteralSum8})
        if (toString(v) == s) return v;
    throw std::invalid_argument("unknown equation variant: " + s);
}

std::vector<RatVec> sixTupleEquationRows(int a1, int a2, int a3, TenVariant variant) {
    if (a1 <= 0 || a2 <= 0 || a3 <= 0) throw std::invalid_argument("six-tuple entries must be positive");
    int h = a1 + a2 + a3, n = 2 * h;
    std::vector<int> starts{1, a1 + 1, a1 + a2 + 1};
    bool ten = a1 == 1 && a2 == 2 && a3 == 2;
    if (ten && variant != TenVariant::GeneralFormula) starts = {1, 2, 3};
    std::vector<RatVec> rows;
    for (int s : starts) rows.push_back(indicator(n, s, s + h - 1));
    if (ten && variant == TenVariant::LiteralSum8) rows.push_back(indicator(n, 1, 8));
    return rows;
}

Subspace partitionSubspaceSixTuple(int a1, int a2, int a3, TenVariant variant) {
    return makeSubspace(2 * (a1 + a2 + a3), sixTupleEquationRows(a1, a2, a3, variant));
}

Subspace partitionSubspaceTriple(int a1, int a2, int a3) {
    if (a1 <= 0 || a2 <= 0 || a3 <= 0) throw std::invalid_argument("triple entries must be positive");
    int n = a1 + a2 + a3;
    return makeSubspace(n, {indicator(n, 1, a1), indicator(n, a1 + 1, a1 + a2)});
}

Subspace fanHyperplane(int a, int b, int n) {
    if (a < 1 || b < 1 || 2 * a + b != n) throw std::invalid_argument("fan hyperplane needs 2a+b = n");
    RatVec h(n);
    h[a + b - 1] += 1;
    h[a] -= 1;
    h[0] += 1;
    h[n - 2] -= 1;
    Subspace v;
    v.n = n;
    RatMatrix m(0, n);
    m.appendRow(h);
    v.equations = rref(m).reduced;
    v.dim = n - (int)v.equations.rows;
    v.orientedBasis = kernelBasis(v.equations);
    return v;
}

int Arrangement::indexOf(const Subspace& v) const {
    for (std::size_t i = 0; i < maximal.size(); ++i)
        if (maximal[i] == v) return (int)i;
    return -1;
}

Arrangement orbitArrangement(const Subspace& seed, const GroupSpec& s) {
    Arrangement a;
    a.group = s;
    a.seed = seed;
    for (const auto& g : elements(s)) {
        Subspace v = transform(g, s, seed);
        if (a.indexOf(v) >= 0) continue;
        a.maximal.push_back(v);
        a.orbitLabel.push_back(g);
    }
    return a;
}

Arrangement withOrientations(const Arrangement& a, const std::vector<bool>& reverse) {
    Arrangement b = a;
    for (std::size_t i = 0; i < b.maximal.size() && i < reverse.size(); ++i)
        if (reverse[i]) b.maximal[i] = reversedOrientation(b.maximal[i]);
    return b;
}

int imageIndex(const GroupElement& g, const Arrangement& a, int k) {
    int i = a.indexOf(transform(g, a.group, a.maximal[k]));
    if (i < 0) throw std::invalid_argument("image is not an arrangement member");
    return i;
}

int orientationTransportSign(const GroupElement& g, const Arrangement& a, int k) {
    const Subspace& v = a.maximal[k];
    const Subspace& w = a.maximal[imageIndex(g, a, k)];
    RatMatrix m(v.dim, v.dim);
    for (int i = 0; i < v.dim; ++i) {
        RatVec c = coordinates(w, act(g, a.group, v.orientedBasis[i]));
        for (int r = 0; r < v.dim; ++r) m(r, i) = c[r];
    }
    return sgn(determinant(m));
}

IntersectionPoset intersectionPoset(const Arrangement& a) {
    IntersectionPoset p;
    auto find = [&](const Subspace& v) {
        for (std::size_t i = 0; i < p.nodes.size(); ++i)
            if (p.nodes[i] == v) return (int)i;
        return -1;
    };
    for (std::size_t i = 0; i < a.maximal.size(); ++i) {
        if (find(a.maximal[i]) >= 0) continue;
        p.nodes.push_back(a.maximal[i]);
    }
    for (std::size_t done = 0; done < p.nodes.size(); ++done)
        for (std::size_t m = 0; m < a.maximal.size(); ++m) {
            Subspace x = intersect(p.nodes[done], a.maximal[m]);
            if (find(x) < 0) p.nodes.push_back(x);
        }
    for (const auto& v : p.nodes) {
        std::set<int> g;
        for (std::size_t m = 0; m < a.maximal.size(); ++m)
            if (intersect(v, a.maximal[m]) == v) g.insert((int)m);
        p.generators.push_back(g);
    }
    auto below = [&](int x, int y) {
        return x != y && std::includes(p.generators[x].begin(), p.generators[x].end(), p.generators[y].begin(),
                                       p.generators[y].end());
    };
    int k = (int)p.nodes.size();
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            if (!below(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < k && cover; ++z)
                if (below(x, z) && below(z, y)) cover = false;
            if (cover) p.coverEdges.push_back({x, y});
        }
    return p;
}

std::set<int> stratumOf(const RatVec& point, const Arrangement& a) {
    std::set<int> s;
    for (std::size_t i = 0; i < a.maximal.size(); ++i)
        if (a.maximal[i].contains(point)) s.insert((int)i);
    return s;
}

}  // namespace obs
