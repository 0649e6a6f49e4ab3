#pragma once

// Commutation of finite diagrams of matrices, and the contractible zig-zag
// condition: two zig-zags of f's and g's with cones into R stay a commuting
// diagram once the bottom symmetry is drawn in.

#include "mixcat/trace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mixcat {

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Mor label;
};

struct Diagram {
    Model model;
    std::vector<Obj> vertices;
    std::vector<std::string> names;  // same length as vertices; may be empty strings
    std::vector<Edge> edges;

    std::size_t add_vertex(Obj o, std::string name = {});
    void add_edge(std::size_t from, std::size_t to, Mor label);
    /// Throws InputError if an edge label does not fit its endpoints.
    void validate() const;
};

/// Two simple paths with the same endpoints and different composites.
/// Paths are lists of edge indices.
struct CounterPath {
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    Mor first_value;
    Mor second_value;
};

/// nullopt iff every pair of simple paths between distinct vertices agree.
/// Throws ResourceError once more than max_paths paths have been enumerated.
std::optional<CounterPath> diagram_commutes(const Diagram& d, std::size_t max_paths = 200000);

/// The cells of a solved staircase: level objects P_i, widened objects W_i and
/// the target B par A^perp, with edges Mix (x) Id, coev (x) Id, q_i and g_i.
/// It commutes iff the witness is a solution.
Diagram staircase_diagram(const Loop& p, const StaircaseWitness& w);

struct ZigZagInstance {
    std::size_t n = 0;
    std::vector<Obj> a;
    std::vector<Obj> b;
    std::vector<Obj> x;
    std::vector<Mor> f;  // f_i: B_i -> A_i
    std::vector<Mor> g;  // g_i: X_i -> A_i
    Permutation alpha = Permutation::identity(0);
    Obj r;
    /// Index 0 leaves the top object (x) B; index k >= 1 leaves the level
    /// X_{<k} (x) A_k (x) B_{>k}. The right column uses the alpha order.
    std::vector<Mor> left_fillers;
    std::vector<Mor> right_fillers;

    const Model& model() const { return f.front().model(); }
    /// Throws InputError on inconsistent shapes.
    void validate() const;

    friend bool operator==(const ZigZagInstance&, const ZigZagInstance&) = default;
};

/// The premise diagram; with `with_bottom` also the bottom symmetry
/// (x) X_j -> (x) X_{alpha(j)}.
Diagram zigzag_diagram(const ZigZagInstance& z, bool with_bottom);

enum class ZigZagVerdict { PremiseFails, Holds, Violated };

std::string to_string(ZigZagVerdict v);

struct ZigZagOutcome {
    ZigZagVerdict verdict = ZigZagVerdict::Holds;
    /// The diagram that was evaluated last and, unless Holds, where it fails.
    Diagram diagram;
    std::optional<CounterPath> witness;
};

ZigZagOutcome check_zigzag_instance(const ZigZagInstance& z);

struct ZigZagSearchOptions {
    std::size_t n = 1;
    std::size_t max_rank = 2;
    long entry_bound = 2;
    std::uint64_t seed = 1;
    std::size_t budget = 10000;
};

struct ZigZagSearchResult {
    std::optional<ZigZagInstance> violated;
    std::size_t samples = 0;
    std::size_t premise_fails = 0;
    std::size_t holds = 0;
};

/// Samples instances with f_i = Mix_{A_i, A_i^perp} and g_i = coev_{A_i}
/// (X_i = 1). Fillers are random, solved so that the premise commutes, or,
/// when m = 0, two independent columns under zero top fillers.
ZigZagSearchResult search_counterexample(const Model& model, const ZigZagSearchOptions& options);

}  // namespace mixcat
