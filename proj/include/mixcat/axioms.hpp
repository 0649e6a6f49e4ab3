#pragma once

// Seeded random testing of the mixed-trace axioms for the free and the
// induced trace of a matrix model.

#include "mixcat/trace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mixcat {

struct SuiteOptions {
    std::size_t cases = 1000;
    std::uint64_t seed = 42;
    std::size_t max_rank = 3;
    std::size_t max_hidden = 2;
};

/// A failing instance; an absent side was undefined.
struct AxiomFailure {
    std::uint64_t seed = 0;
    std::size_t case_index = 0;
    std::optional<Mor> lhs;
    std::optional<Mor> rhs;
};

struct AxiomStats {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped_undefined = 0;
    std::size_t failed = 0;
    /// The first few failures, in case order.
    std::vector<AxiomFailure> failures;
};

struct TraceSuite {
    std::string trace;  // "free" or "induced"
    std::size_t cases = 0;
    std::size_t defined = 0;
    std::vector<AxiomStats> axioms;

    bool passed() const;
};

struct SuiteReport {
    Model model;
    SuiteOptions options;
    std::vector<TraceSuite> traces;
    /// Model-level observations, e.g. a trace that is unavailable for m = 0.
    std::vector<std::string> flags;

    bool passed() const;
};

/// Axioms checked: naturality, strength and adjointability whenever Tr(p) is
/// defined; dinaturality w.r.t. hidden symmetries and adjointability in both
/// directions; vanishing whenever the nested trace Tr(Tr(q)) is defined;
/// yanking unconditionally. The free suite also checks that it never
/// disagrees with the induced trace and never turns ambiguous when m != 0.
SuiteReport run_axiom_suite(const Model& model, const SuiteOptions& options = {});

}  // namespace mixcat
