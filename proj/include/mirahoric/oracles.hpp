#ifndef MIRAHORIC_ORACLES_HPP
#define MIRAHORIC_ORACLES_HPP

// Brute-force reference computations. None of these share code paths with
// the engine they are used to check.

#include <cstdint>
#include <map>
#include <vector>

#include "mirahoric/arith.hpp"

namespace mirahoric::oracle {

// Gaussian binomial [n choose k]_q from the product formula.
Integer gaussian_binomial(int n, int k, long q);

// #GL_n(F_p) by counting invertible matrices over F_p (n <= 3, small p).
std::uint64_t count_gl_n(int n, long p);

// Orbits of primitive rows over Z/p^r under x -> x b for every invertible
// upper-triangular b over Z/p^r, found by applying the whole group. Maps each
// primitive row to the smallest row (lexicographically) in its orbit.
std::map<std::vector<long>, std::vector<long>> triangular_orbits(int n, long p, int r);

}  // namespace mirahoric::oracle

#endif  // MIRAHORIC_ORACLES_HPP
