#pragma once

// Traces of loops: the total trace of a compact model, the induced mixed
// trace (through localization at m), and the free mixed trace computed by the
// staircase of Mix and coev maps.

#include "mixcat/loop.hpp"

#include <optional>
#include <vector>

namespace mixcat {

enum class TraceStatus { Defined, Undefined, Ambiguous };

std::string to_string(TraceStatus status);

/// Dotted arrows of a solved staircase. For stage i (0-based),
/// mix_solutions[i] solves mix_solutions[i] . (Mix (x) Id) = levels[i] and
/// levels[i + 1] = mix_solutions[i] . (coev (x) Id); levels[0] = phi'.
struct StaircaseWitness {
    std::vector<Mor> levels;
    std::vector<Mor> mix_solutions;
    Mor psi;
};

struct TraceResult {
    TraceStatus status = TraceStatus::Undefined;
    std::optional<Mor> value;
    /// Hidden order used by the free trace.
    std::optional<Permutation> alpha;
    std::optional<StaircaseWitness> witness;

    bool defined() const { return status == TraceStatus::Defined; }

    static TraceResult undefined() { return {}; }
    static TraceResult ambiguous() { return {TraceStatus::Ambiguous, {}, {}, {}}; }
    static TraceResult of(Mor value) { return {TraceStatus::Defined, std::move(value), {}, {}}; }
};

/// phi': (U1 (x) U1^perp) (x) ... (x) (Uk (x) Uk^perp) -> B par A^perp, obtained
/// from the carrier by theta_inv over Uk, ..., U1, the symmetry that pairs each
/// Ui with its dual and moves A last, and theta over A.
Mor phi_prime(const Loop& p);

/// Objects of the staircase for a hidden part U: top_level(i) is
/// (Ui (x) Ui^perp) (x) ... (x) (Uk (x) Uk^perp), 0-based.
Obj staircase_level(const std::vector<Obj>& hidden, std::size_t i);

TraceResult provisional_trace(const Loop& p, bool with_witness = false);

/// The same provisional trace computed through the dualized staircase
/// (Mix par Id, ev par Id, result (theta_A(psi^perp))^perp).
TraceResult provisional_trace_dual(const Loop& p);

struct FreeTraceOptions {
    std::size_t max_hidden = 6;
    /// Evaluate every order and report Ambiguous if two defined orders differ.
    bool exhaustive = false;
    bool with_witness = false;
};

/// Provisional trace of alpha p for the first alpha of S_k (lexicographic)
/// where it exists. Throws ResourceError if k exceeds options.max_hidden.
TraceResult free_mixed_trace(const Loop& p, const FreeTraceOptions& options = {});

/// (1/m^k) * partial trace of the carrier over the hidden part, computed over
/// Q; Defined iff every entry lies in the base ring. Throws
/// ModelNotCompactifiable if m = 0.
TraceResult induced_mixed_trace(const Loop& p);

struct HiddenTrace {
    TraceStatus status = TraceStatus::Undefined;
    std::optional<Loop> loop;
};

/// Free mixed trace over the last tail_len hidden objects, the rest hidden again.
HiddenTrace hidden_trace(const Loop& p, std::size_t tail_len,
                         const FreeTraceOptions& options = {});

/// Trace of a compact model over U of f: A (x) U -> B (x) U:
/// theta^{-1}(Mix_{B,U} . f) . (A (x) Mix^{-1}_{U,U^perp}) . (A (x) coev_U).
/// The codomain B (x) U is read as B par U through Mix_{B,U}, so the result is
/// the ordinary partial trace. Throws InputError on a non-compact model.
Mor total_trace(const Mor& f, Obj a, Obj b, Obj u);

/// Sum over u of f((b, u), (a, u)) in the ring of f.
Mor partial_trace_mor(const Mor& f, Obj a, Obj b, Obj u);

}  // namespace mixcat
