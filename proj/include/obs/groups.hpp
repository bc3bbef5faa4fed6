#pragma once

#include <string>
#include <vector>

#include "obs/linalg.hpp"

namespace obs {

enum class Family { CyclicOrder2, Dihedral, GeneralizedQuaternion };

struct GroupSpec {
    Family family = Family::Dihedral;
    int n = 2;

    int modulus() const;  // range of the epsilon exponent
    int order() const;
    bool operator==(const GroupSpec&) const = default;
};

GroupSpec dihedral(int n);
GroupSpec quaternion(int n);
GroupSpec cyclic2(int n);

// eps^a j^b. For Z2 the non-trivial element is j, acting on R^n by reversal.
struct GroupElement {
    int a = 0;
    int j = 0;
    auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity();
GroupElement epsilon(const GroupSpec& s, int power = 1);
GroupElement jay();

GroupElement canonical(GroupElement g, const GroupSpec& s);
GroupElement multiply(const GroupElement& g, const GroupElement& h, const GroupSpec& s);
GroupElement inverse(const GroupElement& g, const GroupSpec& s);
GroupElement power(const GroupElement& g, int k, const GroupSpec& s);
std::vector<GroupElement> elements(const GroupSpec& s);
GroupElement quotientToDihedral(const GroupElement& g, const GroupSpec& s);

// images[i] = index that coordinate i is sent to: (g x)[images[i]] = x[i]
struct PermutationAction {
    int n = 0;
    std::vector<int> images;

    RatVec apply(const RatVec& x) const;
    int sign() const;
};

PermutationAction representOnRn(const GroupElement& g, const GroupSpec& s, int n);
RatVec act(const GroupElement& g, const GroupSpec& s, const RatVec& x);
int detOnW(const GroupElement& g, const GroupSpec& s, int n);

std::string toString(const GroupElement& g);
GroupElement parseElement(const std::string& text, const GroupSpec& s);

}  // namespace obs
