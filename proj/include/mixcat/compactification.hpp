#pragma once

// The compact envelope of a matrix model with Mix = m Id, m != 0: loops modulo
// congruence, represented by their values over the ring with m inverted.

#include "mixcat/loop.hpp"
#include "mixcat/report.hpp"

#include <cstdint>

namespace mixcat {

/// Z -> Z[1/|m|], Z[1/r] -> Z[1/(r |m|)], Q -> Q. Throws ModelNotCompactifiable if m = 0.
RingTag compact_ring(const Model& base);
/// Same mix scalar over compact_ring(base).
Model compact_model(const Model& base);

/// A morphism of the compactification of `base`; value lives over compact_model(base).
struct CompactMor {
    Model base;
    Mor value;

    Obj dom() const { return value.dom(); }
    Obj cod() const { return value.cod(); }

    friend bool operator==(const CompactMor&, const CompactMor&) = default;
};

CompactMor compact_compose(const CompactMor& g, const CompactMor& f);
CompactMor compact_tensor(const CompactMor& f, const CompactMor& g);
CompactMor compact_dual(const CompactMor& f);

/// (1/m^k) times the partial trace of the carrier over the hidden part.
CompactMor loop_value(const Loop& p);

/// The class of (f;).
CompactMor c_tr(const Mor& f);

/// The loop (m^k M; 1, ..., 1) over the base model with k minimal.
Loop realize(const CompactMor& m);

/// (mixed sigma_{A par B, A (x) B}; A, B): A par B ~> A (x) B.
Loop comix(const Model& model, Obj a, Obj b);

struct CompactnessOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 0xc0ffee;
};

/// Throws ModelNotCompactifiable if m = 0.
ValidationReport verify_compactness(const Model& model, std::size_t max_rank,
                                    const CompactnessOptions& options = {});

}  // namespace mixcat
