#pragma once

// Loop congruence: the equivalence generated by hidden symmetries and by
// replacing a loop with a hidden trace of it.

#include "mixcat/trace.hpp"

#include <string>
#include <vector>

namespace mixcat {

enum class CongruenceVerdict { Congruent, NotCongruent, Unknown };

std::string to_string(CongruenceVerdict v);

/// q is a defined hidden trace of p over some tail (or p of q), or q = alpha p
/// for some alpha. Throws InputError if endpoints or models differ.
bool one_step_congruent(const Loop& p, const Loop& q, const FreeTraceOptions& options = {});

struct CongruenceMode {
    enum class Kind { Semantic, Bounded };
    Kind kind = Kind::Semantic;
    std::size_t depth = 0;

    static CongruenceMode semantic() { return {}; }
    static CongruenceMode bounded(std::size_t d) { return {Kind::Bounded, d}; }
};

/// Parses "semantic" or "bounded:d".
CongruenceMode parse_congruence_mode(const std::string& text);

/// Semantic mode compares loop values (never Unknown; throws
/// ModelNotCompactifiable for m = 0). Bounded mode explores one-step moves
/// breadth first up to `depth`; un-tracing steps go to those `generators`
/// that are one-step congruent to the current loop. It answers NotCongruent
/// only when m != 0 and the loop values differ.
CongruenceVerdict congruent(const Loop& p, const Loop& q, const CongruenceMode& mode,
                            const std::vector<Loop>& generators = {});

}  // namespace mixcat
