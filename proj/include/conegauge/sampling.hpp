#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conegauge/convex_core.hpp"

namespace conegauge {

/**
 * Seeded generator for reproducible rational test data.
 *
 * Draws use rejection sampling on the raw 64-bit engine output rather than
 * std::uniform_int_distribution, whose algorithm is implementation-defined,
 * so a seed produces the same sequence with every standard library.
 */
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi);

    /// Uniform over {k/64 : k = 1..4096}, i.e. [1/64, 64].
    Rational positive_value();
    RVector positive_values(std::size_t n);

    /// Uniform over {k/den : lo*den <= k <= hi*den}.
    Rational value_in(std::int64_t lo, std::int64_t hi, std::int64_t den);

    /// Strictly positive convex weights with numerators in 1..64 before normalisation.
    RVector convex_weights(std::size_t n);

    /// A random point of K with all barycentric weights positive.
    Point interior_point(const Polytope& k);

    /// Uniformly random permutation of 0..n-1 (Fisher-Yates).
    std::vector<std::size_t> permutation(std::size_t n);

    /// Full-dimensional simplex in R^dim with coordinates in {k/8 : |k| <= 32}.
    PolytopeRef simplex(std::size_t dim, std::string name = {});

    double uniform01();

private:
    std::mt19937_64 engine_;
};

}  // namespace conegauge
