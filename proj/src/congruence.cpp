#include "mixcat/congruence.hpp"

#include "mixcat/compactification.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace mixcat {

std::string to_string(CongruenceVerdict v) {
    switch (v) {
        case CongruenceVerdict::Congruent: return "CONGRUENT";
        case CongruenceVerdict::NotCongruent: return "NOT_CONGRUENT";
        case CongruenceVerdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

void require_comparable(const Loop& p, const Loop& q) {
    if (p.model() != q.model()) throw InputError("loops over different models");
    if (p.source() != q.source() || p.target() != q.target()) throw InputError("loops with different endpoints");
}

bool traces_to(const Loop& p, const Loop& q, const FreeTraceOptions& options) {
    if (q.hidden_length() > p.hidden_length()) return false;
    const std::size_t tail = p.hidden_length() - q.hidden_length();
    if (!std::equal(q.hidden().begin(), q.hidden().end(), p.hidden().begin())) return false;
    const HiddenTrace h = hidden_trace(p, tail, options);
    return h.loop && *h.loop == q;
}

bool symmetric(const Loop& p, const Loop& q, const FreeTraceOptions& options) {
    const std::size_t k = p.hidden_length();
    if (k != q.hidden_length() || k > options.max_hidden) return false;
    for (const Permutation& alpha : Permutation::all(k))
        if (hidden_symmetry(p, alpha) == q) return true;
    return false;
}

std::vector<Loop> moves(const Loop& x, const std::vector<Loop>& generators, const FreeTraceOptions& options) {
    std::vector<Loop> out;
    if (x.hidden_length() <= options.max_hidden)
        for (const Permutation& alpha : Permutation::all(x.hidden_length())) out.push_back(hidden_symmetry(x, alpha));
    for (std::size_t t = 1; t <= x.hidden_length(); ++t) {
        HiddenTrace h = hidden_trace(x, t, options);
        if (h.loop) out.push_back(std::move(*h.loop));
    }
    for (const Loop& g : generators)
        if (g.source() == x.source() && g.target() == x.target() && traces_to(g, x, options)) out.push_back(g);
    return out;
}

}  // namespace

bool one_step_congruent(const Loop& p, const Loop& q, const FreeTraceOptions& options) {
    require_comparable(p, q);
    return traces_to(p, q, options) || traces_to(q, p, options) || symmetric(p, q, options);
}

CongruenceMode parse_congruence_mode(const std::string& text) {
    if (text == "semantic") return CongruenceMode::semantic();
    const std::string prefix = "bounded:";
    if (text.rfind(prefix, 0) == 0) {
        std::size_t d = 0;
        const char* first = text.data() + prefix.size();
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, d);
        if (ec == std::errc() && ptr == last && first != last) return CongruenceMode::bounded(d);
    }
    throw InputError("congruence mode must be 'semantic' or 'bounded:<depth>', got '" + text + "'");
}

CongruenceVerdict congruent(const Loop& p, const Loop& q, const CongruenceMode& mode,
                            const std::vector<Loop>& generators) {
    require_comparable(p, q);
    const bool compactifiable = p.model().mix_value() != 0;
    if (mode.kind == CongruenceMode::Kind::Semantic) {
        if (!compactifiable) throw ModelNotCompactifiable();
        return loop_value(p) == loop_value(q) ? CongruenceVerdict::Congruent : CongruenceVerdict::NotCongruent;
    }
    if (compactifiable && loop_value(p) != loop_value(q)) return CongruenceVerdict::NotCongruent;

    constexpr std::size_t max_states = 100000;
    const FreeTraceOptions options;
    std::vector<Loop> seen{p};
    std::deque<std::pair<Loop, std::size_t>> frontier{{p, 0}};
    while (!frontier.empty()) {
        auto [x, depth] = std::move(frontier.front());
        frontier.pop_front();
        if (x == q) return CongruenceVerdict::Congruent;
        if (depth == mode.depth) continue;
        for (Loop& y : moves(x, generators, options)) {
            if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
            if (seen.size() >= max_states) throw ResourceError("bounded congruence search exceeded its state bound");
            seen.push_back(y);
            frontier.emplace_back(std::move(y), depth + 1);
        }
    }
    return CongruenceVerdict::Unknown;
}

}  // namespace mixcat
