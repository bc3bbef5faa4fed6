#include "obs/groups.hpp"

#include <regex>
#include <stdexcept>

namespace obs {

static int mod(int x, int m) { return ((x % m) + m) % m; }

int GroupSpec::modulus() const {
    switch (family) {
        case Family::CyclicOrder2: return 1;
        case Family::Dihedral: return n;
        case Family::GeneralizedQuaternion: return 2 * n;
    }
    return n;
}

int GroupSpec::order() const { return 2 * modulus(); }

GroupSpec dihedral(int n) {
    if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
    return {Family::Dihedral, n};
}

GroupSpec quaternion(int n) {
    if (n < 2) throw std::invalid_argument("quaternion group needs n >= 2");
    return {Family::GeneralizedQuaternion, n};
}

GroupSpec cyclic2(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
    return {Family::CyclicOrder2, n};
}

GroupElement identity() { return {}; }
GroupElement epsilon(const GroupSpec& s, int p) { return canonical({p, 0}, s); }
GroupElement jay() { return {0, 1}; }

GroupElement canonical(GroupElement g, const GroupSpec& s) {
    g.a = mod(g.a, s.modulus());
    g.j = mod(g.j, 2);
    return g;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h, const GroupSpec& s) {
    if (g.j == 0) return canonical({g.a + h.a, h.j}, s);
    if (h.j == 0) return canonical({g.a - h.a, 1}, s);
    int jj = s.family == Family::GeneralizedQuaternion ? s.n : 0;
    return canonical({g.a - h.a + jj, 0}, s);
}

GroupElement inverse(const GroupElement& g, const GroupSpec& s) {
    if (g.j == 0) return canonical({-g.a, 0}, s);
    // (e^a j)^-1 = j^-1 e^-a; in Q4n j^-1 = e^n j
    for (const auto& h : elements(s))
        if (multiply(g, h, s) == identity()) return h;
    throw std::logic_error("inverse not found");
}

GroupElement power(const GroupElement& g, int k, const GroupSpec& s) {
    GroupElement base = k < 0 ? inverse(g, s) : g, r = identity();
    for (int i = 0; i < std::abs(k); ++i) r = multiply(r, base, s);
    return r;
}

std::vector<GroupElement> elements(const GroupSpec& s) {
    std::vector<GroupElement> out;
    for (int j = 0; j < 2; ++j)
        for (int a = 0; a < s.modulus(); ++a) out.push_back({a, j});
    return out;
}

GroupElement quotientToDihedral(const GroupElement& g, const GroupSpec& s) {
    if (s.family != Family::GeneralizedQuaternion) return g;
    return canonical(g, dihedral(s.n));
}

RatVec PermutationAction::apply(const RatVec& x) const {
    if ((int)x.size() != n) throw std::invalid_argument("permutation action: dimension mismatch");
    RatVec y(n);
    for (int i = 0; i < n; ++i) y[images[i]] = x[i];
    return y;
}

int PermutationAction::sign() const {
    std::vector<bool> seen(n, false);
    int s = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int k = i; !seen[k]; k = images[k]) seen[k] = true, ++len;
        if (len % 2 == 0) s = -s;
    }
    return s;
}

PermutationAction representOnRn(const GroupElement& g, const GroupSpec& s, int n) {
    if (s.family != Family::CyclicOrder2 && s.n != n)
        throw std::invalid_argument("representOnRn: dimension does not match group");
    GroupElement c = canonical(g, s);
    PermutationAction p{n, std::vector<int>(n)};
    // eps: x_k -> position k+1; j: x_k -> position n-1-k (0-based)
    for (int k = 0; k < n; ++k) {
        int t = c.j ? n - 1 - k : k;
        p.images[k] = s.family == Family::CyclicOrder2 ? t : mod(t + c.a, n);
    }
    return p;
}

RatVec act(const GroupElement& g, const GroupSpec& s, const RatVec& x) {
    return representOnRn(g, s, (int)x.size()).apply(x);
}

int detOnW(const GroupElement& g, const GroupSpec& s, int n) { return representOnRn(g, s, n).sign(); }

std::string toString(const GroupElement& g) {
    return "e^" + std::to_string(g.a) + (g.j ? "*j" : "");
}

GroupElement parseElement(const std::string& text, const GroupSpec& s) {
    static const std::regex re(R"(e\^(-?\d+)(\*j)?)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("not a group element: " + text);
    return canonical({std::stoi(m[1]), m[2].matched ? 1 : 0}, s);
}

}  // namespace obs
