#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "conegauge/report.hpp"
#include "conegauge/sampling.hpp"
#include "conegauge/scene.hpp"
#include "conegauge/spin_factor.hpp"

namespace conegauge::cli {

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
};

/// which: reversing, preserving, involution, derivative, atomicity, gauges or all.
Report run_verify(const Scene& scene, const std::string& which, const SuiteOptions& opts);

Report run_spin_verify(std::size_t dim, std::size_t pairs, double tol, std::uint64_t seed);
Report run_spin_probe(const Eigen::VectorXd& psi, const std::vector<spin::SpinElement>& family, double tol);

/// Random strictly positive spin element with lambda - |v| in [1/4, 3/2].
spin::SpinElement random_spin_element(std::size_t dim, RationalSampler& rng);

/**
 * Entry point of the conegauge executable. args excludes the program name.
 * Returns 0 (pass or measured), 1 (violated exact identity) or 2 (input error).
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conegauge::cli
