#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skewq/sign_system.hpp"

namespace skewq {

/// The point scheme of the quadric quotient is the intersection, over
/// all triples {i,j,k} with eps_ij eps_jk eps_ki = -1, of the unions
/// V(x_i) u V(x_j) u V(x_k). Distributing intersection over union makes
/// its irreducible components the coordinate subspaces V(x_s : s in S)
/// for S the inclusion-minimal transversals of the negative triples.
struct PointScheme {
    int n = 0;
    std::vector<std::array<int, 3>> neg_triangles;  // ascending triples, 1-based
    std::vector<std::vector<int>> components;       // sorted subsets; {} when no triangle
    int ell = 0;                                    // components of size n-2 (the P^1's)
};

std::vector<std::array<int, 3>> negative_triangles(const SignSystem& eps);

PointScheme point_scheme(const SignSystem& eps);  // n <= 12

/// Canonical key up to coordinate permutation: the lexicographically
/// minimal relabeling of the sorted component list, prefixed by the
/// multiset of component dimensions.
std::string point_scheme_invariant(const SignSystem& eps);

}  // namespace skewq
