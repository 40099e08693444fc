#ifndef MULTICENTRIC_VERIFY_HPP
#define MULTICENTRIC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "multicentric/function_space.hpp"
#include "multicentric/poly.hpp"

namespace multicentric {

struct PropertyResult {
    std::string name;
    bool pass;
    double worst_error; // largest relative error seen
    long trials;
};

struct SuiteConfig {
    long delta_identity_points = 200;
    long form_equivalence_instances = 200;
    long homomorphism_instances = 500;
    long norm_instances = 50;
    long character_points = 500;
    double tol_delta = 1e-9;
    double tol_forms = 1e-12;
    double tol_homomorphism = 1e-9;
    double tol_characters = 1e-9;
    // deliberately trip one check (used to exercise failure reporting)
    bool inject_failure = false;
};

/// Property suite over user-supplied polynomials and domain.  Every check
/// is seeded and deterministic for a fixed seed.
std::vector<PropertyResult> run_property_suite(const MonicPolynomial& p1,
                                               const MonicPolynomial& p2,
                                               const DomainSpec& domain, std::uint64_t seed,
                                               const SuiteConfig& config = {});

} // namespace multicentric

#endif
