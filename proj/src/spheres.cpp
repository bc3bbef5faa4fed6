#include "obs/spheres.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace obs {

static int mod(int x, int m) { return ((x % m) + m) % m; }

static int sortWithSign(std::vector<int>& v) {
    int s = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t k = 0; k + 1 < v.size() - i; ++k)
            if (v[k] > v[k + 1]) std::swap(v[k], v[k + 1]), s = -s;
    return s;
}

void addSimplex(Chain& c, std::vector<int> vertices, const Int& coeff) {
    int s = sortWithSign(vertices);
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) return;
    Int& slot = c[vertices];
    slot += s * coeff;
    if (sgn(slot) == 0) c.erase(vertices);
}

void addChain(Chain& into, const Chain& c, const Int& coeff) {
    for (const auto& [k, v] : c) addSimplex(into, k, v * coeff);
}

Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [k, v] : c) {
        if (k.size() < 2) continue;
        for (std::size_t i = 0; i < k.size(); ++i) {
            std::vector<int> face = k;
            face.erase(face.begin() + i);
            addSimplex(out, face, (i % 2 ? -1 : 1) * v);
        }
    }
    return out;
}

bool isZero(const Chain& c) { return c.empty(); }

std::string toString(const SimplexPQ& s) {
    return "sigma(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

int SimplicialSphere::vertexId(const GroupElement& g) const {
    GroupElement c = canonical(g, group);
    return c.j * 2 * n + c.a;
}

GroupElement SimplicialSphere::vertexDecomposition(int id) const {
    if (id < 0 || id >= 4 * n) throw std::out_of_range("vertex id");
    return {id % (2 * n), id / (2 * n)};
}

std::string SimplicialSphere::vertexLabel(int id) const {
    GroupElement g = vertexDecomposition(id);
    return std::string(g.j ? "b" : "a") + std::to_string(g.a + 1);
}

int SimplicialSphere::actOnVertex(const GroupElement& h, int id) const {
    return vertexId(multiply(h, vertexDecomposition(id), group));
}

std::vector<int> SimplicialSphere::vertices(const SimplexPQ& s) const {
    return {vertexId({s.p, 0}), vertexId({s.p + 1, 0}), vertexId({s.q, 1}), vertexId({s.q + 1, 1})};
}

std::vector<SimplexPQ> SimplicialSphere::simplices3() const {
    std::vector<SimplexPQ> out;
    for (int p = 0; p < 2 * n; ++p)
        for (int q = 0; q < 2 * n; ++q) out.push_back({p, q});
    return out;
}

Chain SimplicialSphere::chainOf(const SimplexPQ& s, const Int& coeff) const {
    Chain c;
    addSimplex(c, vertices(s), coeff);
    return c;
}

Chain SimplicialSphere::act(const GroupElement& h, const Chain& c) const {
    Chain out;
    for (const auto& [k, v] : c) {
        std::vector<int> img;
        for (int id : k) img.push_back(actOnVertex(h, id));
        addSimplex(out, img, v);
    }
    return out;
}

std::pair<SimplexPQ, int> SimplicialSphere::actOnSimplex(const GroupElement& h, const SimplexPQ& s) const {
    std::vector<int> img;
    for (int id : vertices(s)) img.push_back(actOnVertex(h, id));
    int m = 2 * n;
    auto lowerOfPair = [&](int copy) {
        std::vector<int> ex;
        for (int id : img)
            if (id / m == copy) ex.push_back(id % m);
        if (ex.size() != 2) throw std::logic_error("join structure violated");
        return mod(ex[1] - ex[0], m) == 1 ? ex[0] : ex[1];
    };
    SimplexPQ t{lowerOfPair(0), lowerOfPair(1)};
    std::vector<int> target = vertices(t);
    int sImg = sortWithSign(img), sT = sortWithSign(target);
    if (img != target) throw std::logic_error("image is not a join simplex");
    return {t, sImg * sT};
}

std::vector<std::vector<int>> SimplicialSphere::simplices(int k) const {
    std::set<std::vector<int>> all;
    for (const auto& s : simplices3()) {
        std::vector<int> v = vertices(s);
        std::sort(v.begin(), v.end());
        for (int mask = 0; mask < 16; ++mask) {
            if (__builtin_popcount(mask) != k + 1) continue;
            std::vector<int> f;
            for (int i = 0; i < 4; ++i)
                if (mask >> i & 1) f.push_back(v[i]);
            all.insert(f);
        }
    }
    return {all.begin(), all.end()};
}

SimplicialSphere buildJoinSphere(int n) {
    if (n < 2) throw std::invalid_argument("join sphere needs n >= 2");
    return {n, quaternion(n)};
}

IntMatrix boundaryMatrix(const SimplicialSphere& s, int k) {
    auto hi = s.simplices(k), lo = s.simplices(k - 1);
    std::map<std::vector<int>, std::size_t> row;
    for (std::size_t i = 0; i < lo.size(); ++i) row[lo[i]] = i;
    IntMatrix d(lo.size(), hi.size());
    for (std::size_t c = 0; c < hi.size(); ++c) {
        Chain one;
        addSimplex(one, hi[c], 1);
        for (const auto& [f, v] : boundary(one)) d(row.at(f), c) = v;
    }
    return d;
}

static std::size_t intRank(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::size_t r = 0;
    for (const auto& x : smithNormalForm(m).d)
        if (sgn(x) != 0) ++r;
    return r;
}

std::vector<HomologyGroup> homology(const std::vector<IntMatrix>& d, const std::vector<std::size_t>& ranks) {
    std::size_t top = ranks.size();
    std::vector<std::size_t> rk(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) rk[k] = intRank(d[k]);
    std::vector<HomologyGroup> h(top);
    for (std::size_t k = 0; k < top; ++k) {
        h[k].rank = ranks[k] - rk[k] - rk[k + 1];
        if (k + 1 < top && d[k + 1].rows > 0 && d[k + 1].cols > 0)
            for (const auto& x : smithNormalForm(d[k + 1]).d)
                if (x > 1) h[k].torsion.push_back(x);
    }
    return h;
}

GroupRingElement multiply(const GroupRingElement& x, const GroupRingElement& y, const GroupSpec& s) {
    GroupRingElement z;
    for (const auto& [g, u] : x)
        for (const auto& [h, v] : y) {
            Int& slot = z[multiply(g, h, s)];
            slot += u * v;
        }
    for (auto it = z.begin(); it != z.end();)
        it = sgn(it->second) == 0 ? z.erase(it) : std::next(it);
    return z;
}

int cellDim(Cell c) {
    switch (c) {
        case Cell::a: return 0;
        case Cell::b:
        case Cell::bp: return 1;
        case Cell::c:
        case Cell::cp: return 2;
        case Cell::e: return 3;
    }
    return -1;
}

std::string toString(Cell c) {
    switch (c) {
        case Cell::a: return "a";
        case Cell::b: return "b";
        case Cell::bp: return "b'";
        case Cell::c: return "c";
        case Cell::cp: return "c'";
        case Cell::e: return "e";
    }
    return "";
}

std::vector<Cell> EconomicComplex::cells(int dim) const {
    std::vector<Cell> out;
    for (Cell c : {Cell::a, Cell::b, Cell::bp, Cell::c, Cell::cp, Cell::e})
        if (cellDim(c) == dim) out.push_back(c);
    return out;
}

IntMatrix EconomicComplex::expandedBoundary(int dim) const {
    auto els = elements(group);
    auto hi = cells(dim), lo = cells(dim - 1);
    std::size_t G = els.size();
    auto pos = [&](const GroupElement& g) {
        return (std::size_t)(std::find(els.begin(), els.end(), g) - els.begin());
    };
    IntMatrix d(lo.size() * G, hi.size() * G);
    for (std::size_t xi = 0; xi < hi.size(); ++xi)
        for (std::size_t gi = 0; gi < G; ++gi)
            for (const auto& [r, y] : boundary.at(hi[xi])) {
                std::size_t yi = std::find(lo.begin(), lo.end(), y) - lo.begin();
                for (const auto& [h, v] : r) d(yi * G + pos(multiply(els[gi], h, group)), xi * G + gi) += v;
            }
    return d;
}

std::size_t EconomicComplex::expandedRank(int dim) const { return cells(dim).size() * elements(group).size(); }

EconomicComplex economicComplex(int n) {
    EconomicComplex e;
    e.n = n;
    e.group = quaternion(n);
    const GroupSpec& s = e.group;
    auto el = [&](int a, int j) { return canonical({a, j}, s); };
    auto gr = [&](std::initializer_list<std::pair<GroupElement, int>> terms) {
        GroupRingElement r;
        for (const auto& [g, v] : terms) r[g] += v;
        for (auto it = r.begin(); it != r.end();)
            it = sgn(it->second) == 0 ? r.erase(it) : std::next(it);
        return r;
    };
    GroupRingElement norm;
    for (int i = 0; i < n; ++i) norm[el(i, 0)] += 1;
    e.boundary[Cell::a] = {};
    e.boundary[Cell::b] = {{gr({{el(1, 0), 1}, {el(0, 0), -1}}), Cell::a}};
    e.boundary[Cell::bp] = {{gr({{el(0, 1), 1}, {el(0, 0), -1}}), Cell::a}};
    e.boundary[Cell::c] = {{norm, Cell::b}, {gr({{el(0, 1), -1}, {el(0, 0), -1}}), Cell::bp}};
    e.boundary[Cell::cp] = {{gr({{el(1, 1), 1}, {el(0, 0), 1}}), Cell::b},
                            {gr({{el(1, 0), 1}, {el(0, 0), -1}}), Cell::bp}};
    e.boundary[Cell::e] = {{gr({{el(1, 0), 1}, {el(0, 0), -1}}), Cell::c},
                           {gr({{el(1, 1), -1}, {el(0, 0), 1}}), Cell::cp}};
    return e;
}

bool boundarySquaredZero(const EconomicComplex& e) {
    for (const auto& [x, terms] : e.boundary) {
        std::map<Cell, GroupRingElement> acc;
        for (const auto& [r, y] : terms)
            for (const auto& [s, z] : e.boundary.at(y)) {
                for (const auto& [g, v] : multiply(r, s, e.group)) acc[z][g] += v;
            }
        for (const auto& [z, r] : acc)
            for (const auto& [g, v] : r)
                if (sgn(v) != 0) return false;
    }
    return true;
}

Chain chainMapLower(const SimplicialSphere& s, Cell c) {
    auto v = [&](int a, int j) { return s.vertexId({a, j}); };
    Chain out;
    switch (c) {
        case Cell::a: addSimplex(out, {v(0, 0)}, 1); break;
        case Cell::b: addSimplex(out, {v(0, 0), v(1, 0)}, 1); break;
        case Cell::bp: addSimplex(out, {v(0, 0), v(0, 1)}, 1); break;
        case Cell::c:
            for (int i = 0; i < s.n; ++i) addSimplex(out, {v(i, 0), v(i + 1, 0), v(0, 1)}, 1);
            break;
        case Cell::cp:
            addSimplex(out, {v(0, 0), v(1, 0), v(1, 1)}, 1);
            addSimplex(out, {v(0, 0), v(0, 1), v(1, 1)}, -1);
            break;
        case Cell::e: throw std::invalid_argument("top cell image is solved, not fixed");
    }
    return out;
}

Chain chainMapOf(const SimplicialSphere& s, const EconomicComplex& e, const TopChainMap& top,
                 const GroupRingElement& r, Cell c) {
    Chain base;
    if (c == Cell::e) {
        for (const auto& [sp, sign] : top.imageOfE) addChain(base, s.chainOf(sp, sign));
    } else {
        base = chainMapLower(s, c);
    }
    (void)e;
    Chain out;
    for (const auto& [g, v] : r) addChain(out, s.act(g, base), v);
    return out;
}

TopChainMap solveTopChainMap(const SimplicialSphere& s, const EconomicComplex& e) {
    Chain target;
    for (const auto& [r, y] : e.boundary.at(Cell::e)) addChain(target, chainMapOf(s, e, {}, r, y));
    std::vector<Chain> cols;
    std::set<std::vector<int>> keys;
    for (const auto& [k, v] : target) keys.insert(k);
    for (int i = 0; i < s.n; ++i) {
        cols.push_back(boundary(s.chainOf({i, 0})));
        for (const auto& [k, v] : cols.back()) keys.insert(k);
    }
    std::vector<std::vector<int>> keyList(keys.begin(), keys.end());
    RatMatrix a(keyList.size(), s.n);
    RatVec b(keyList.size());
    for (std::size_t r = 0; r < keyList.size(); ++r) {
        for (int i = 0; i < s.n; ++i) {
            auto it = cols[i].find(keyList[r]);
            if (it != cols[i].end()) a(r, i) = Rat(it->second);
        }
        auto it = target.find(keyList[r]);
        if (it != target.end()) b[r] = Rat(it->second);
    }
    auto sol = solveAffine(a, b);
    if (sol.kind != SolutionSet::UniquePoint) throw std::logic_error("top chain map not uniquely determined");
    TopChainMap t;
    for (int i = 0; i < s.n; ++i) {
        if (abs(sol.point[i]) != 1) throw std::logic_error("top chain map coefficient is not a sign");
        t.imageOfE.push_back({{i, 0}, sgn(sol.point[i])});
    }
    return t;
}

std::vector<std::pair<SimplexPQ, int>> maximalCellSimplices(int n) {
    return solveTopChainMap(buildJoinSphere(n), economicComplex(n)).imageOfE;
}

}  // namespace obs
