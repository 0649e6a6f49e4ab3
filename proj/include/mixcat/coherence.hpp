#pragma once

// Structure maps rebuilt from their defining composites, and the validator
// that checks them against the reindexings in category.hpp.

#include "mixcat/category.hpp"
#include "mixcat/report.hpp"

#include <cstdint>
#include <vector>

namespace mixcat {

/// (phi par B^perp) . delta_{A,B,B^perp} . (A (x) coev_B)
Mor theta_via_composite(const Mor& f, Obj a, Obj b, Obj c);
/// (C par ev_{B^perp}) . delta^R_{C,B^perp,B} . (psi (x) B)
Mor theta_inv_via_composite(const Mor& g, Obj a, Obj b, Obj c);

/// theta_{C^perp}(A (x) theta^{-1}_{C^perp}(Id_{B par C}))
Mor delta_via_theta(const Model& model, Obj a, Obj b, Obj c);
/// (Id par sigma) . tau . delta_{C,B,A} . (Id (x) tau) . sigma
Mor delta_r_via_symmetries(const Model& model, Obj a, Obj b, Obj c);

/// theta_{B^perp}(A (x) mixed_ev_B)
Mor mix_via_theta(const Model& model, Obj a, Obj b);

/// Three distinct chains of distributivities and symmetries of type
/// (A par B) (x) (C par D) -> (A (x) C) par B par D; the first is the
/// standard times-rule chain.
std::vector<Mor> times_rule_chains(const Model& model, Obj a, Obj b, Obj c, Obj d);

ValidationReport validate_coherence(const Model& model, std::size_t max_rank,
                                    std::uint64_t seed = 0x5eed);

}  // namespace mixcat
