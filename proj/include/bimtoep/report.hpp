#ifndef BIMTOEP_REPORT_HPP
#define BIMTOEP_REPORT_HPP

#include "bimtoep/crossed.hpp"
#include "bimtoep/models.hpp"

#include <random>

namespace bimtoep {

using Rng = std::mt19937_64;

Vector random_coeffs(int dim, Rng& rng);
CrossSection random_section(const LadderPtr& ladder, int support_radius, Rng& rng);

/// a random right-adjointable map level from -> level to, built as a sum of
/// algebra-translated creation operators (these exhaust the adjointable maps
/// over unital coefficients)
AdjointableMap random_adjointable(const LadderPtr& ladder, int from, int to, Rng& rng);

/// the seeded property suite behind `report`; deterministic per (model, seed)
ValidationReport run_property_suite(const Model& model, std::uint64_t seed);

}  // namespace bimtoep

#endif
