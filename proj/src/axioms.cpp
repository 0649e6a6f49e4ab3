#include "mixcat/axioms.hpp"

#include "mixcat/random.hpp"

#include <algorithm>
#include <functional>

namespace mixcat {

bool TraceSuite::passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomStats& a) { return a.failed == 0; });
}

bool SuiteReport::passed() const {
    return std::all_of(traces.begin(), traces.end(), [](const TraceSuite& t) { return t.passed(); });
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 50;

using TraceFn = std::function<TraceResult(const Loop&)>;

/// Everything random about one case, drawn up front so that both traces see
/// identical data.
struct Case {
    Loop p;
    Mor pre;   // A' -> A
    Mor post;  // B -> B'
    Mor side;  // C -> D
    Permutation alpha;
    std::size_t split;
    Obj yank;
};

Case draw_case(const Model& model, const SuiteOptions& o, std::uint64_t seed) {
    Sampler s(seed);
    auto rank = [&](std::size_t hi) {
        if (s.coin(0.05)) return Obj{0};
        return Obj{static_cast<std::size_t>(s.uniform(1, static_cast<long>(std::max<std::size_t>(hi, 1))))};
    };
    const Obj a = rank(o.max_rank), b = rank(o.max_rank);
    const auto k = static_cast<std::size_t>(s.uniform(0, static_cast<long>(o.max_hidden)));
    std::vector<Obj> hidden;
    for (std::size_t i = 0; i < k; ++i) hidden.push_back(rank(o.max_rank));
    const Obj u = tensor_all(hidden);
    Entries carrier = s.matrix(static_cast<Index>(par(b, u).rank), static_cast<Index>(tensor(a, u).rank), 3);
    if (s.coin()) {
        for (std::size_t i = 0; i < k; ++i) carrier *= model.mix_value();
    }
    Loop p(a, b, hidden, Mor(model, tensor(a, u), par(b, u), std::move(carrier)));

    const Mor pre = s.mor(model, rank(o.max_rank), a);
    const Mor post = s.mor(model, b, rank(o.max_rank));
    const Mor side = s.mor(model, rank(2), rank(2));
    std::vector<std::size_t> images(k);
    for (std::size_t i = 0; i < k; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), s.engine());
    const auto split = static_cast<std::size_t>(s.uniform(0, static_cast<long>(k)));
    const Obj yank = rank(o.max_rank);
    return {std::move(p), pre, post, side, Permutation(std::move(images)), split, yank};
}

class Recorder {
public:
    Recorder(std::string name, std::uint64_t seed, std::size_t index, AxiomStats& stats)
        : stats_(stats), seed_(seed), index_(index) {
        stats_.name = std::move(name);
    }

    void skip() { ++stats_.skipped_undefined; }

    void compare(const TraceResult& lhs, const TraceResult& rhs) {
        ++stats_.checked;
        if (lhs.status == rhs.status && lhs.value == rhs.value) return;
        fail(lhs.value, rhs.value);
    }

    void fail(std::optional<Mor> lhs, std::optional<Mor> rhs) {
        ++stats_.failed;
        if (stats_.failures.size() < kMaxRecordedFailures)
            stats_.failures.push_back({seed_, index_, std::move(lhs), std::move(rhs)});
    }

private:
    AxiomStats& stats_;
    std::uint64_t seed_;
    std::size_t index_;
};

TraceResult defined_or_same(const TraceResult& r, const std::function<Mor(const Mor&)>& f) {
    return r.defined() ? TraceResult::of(f(*r.value)) : r;
}

enum Axiom { Naturality, Dinaturality, Strength, Vanishing, Adjointability, Yanking, Minimality, Unambiguity };

void check_case(const Case& c, const TraceFn& trace, const TraceFn* induced, bool check_unambiguity,
                std::uint64_t seed, std::size_t index, TraceSuite& suite) {
    const Model& model = c.p.model();
    auto rec = [&](Axiom a, const char* name) { return Recorder(name, seed, index, suite.axioms[a]); };
    const TraceResult tr = trace(c.p);
    ++suite.cases;
    if (tr.defined()) ++suite.defined;

    {
        Recorder r = rec(Naturality, "naturality");
        if (!tr.defined()) {
            r.skip();
        } else {
            r.compare(TraceResult::of(compose(c.post, compose(*tr.value, c.pre))),
                      trace(postcompose(c.post, precompose(c.p, c.pre))));
        }
    }
    {
        Recorder r = rec(Dinaturality, "dinaturality");
        const TraceResult moved = trace(hidden_symmetry(c.p, c.alpha));
        if (!tr.defined() && !moved.defined()) r.skip();
        else r.compare(tr, moved);
    }
    {
        Recorder r = rec(Strength, "strength");
        if (!tr.defined()) r.skip();
        else r.compare(TraceResult::of(tensor_mor(c.side, *tr.value)), trace(multiply(c.side, c.p)));
    }
    {
        Recorder r = rec(Vanishing, "vanishing");
        const Loop q = unhide_head(c.p, c.split);
        const TraceResult inner = trace(q);
        std::optional<TraceResult> nested;
        if (inner.defined()) {
            std::vector<Obj> head(c.p.hidden().begin(), c.p.hidden().begin() + static_cast<long>(c.split));
            nested = trace(Loop(c.p.source(), c.p.target(), std::move(head), *inner.value));
        }
        if (!nested || !nested->defined()) r.skip();
        else r.compare(tr, *nested);
    }
    {
        Recorder r = rec(Adjointability, "adjointability");
        const TraceResult dual = trace(loop_dual(c.p));
        if (!tr.defined() && !dual.defined()) r.skip();
        else r.compare(defined_or_same(tr, [](const Mor& f) { return dual_mor(f); }), dual);
    }
    {
        Recorder r = rec(Yanking, "yanking");
        r.compare(trace(yanking_loop(model, c.yank)), TraceResult::of(identity(model, c.yank)));
    }
    if (induced) {
        Recorder r = rec(Minimality, "minimality");
        if (!tr.defined()) r.skip();
        else r.compare(tr, (*induced)(c.p));
    }
    if (check_unambiguity) {
        Recorder r = rec(Unambiguity, "unambiguity");
        ++suite.axioms[Unambiguity].checked;
        if (tr.status == TraceStatus::Ambiguous) r.fail(std::nullopt, std::nullopt);
    }
}

}  // namespace

SuiteReport run_axiom_suite(const Model& model, const SuiteOptions& options) {
    SuiteReport report{model, options, {}, {}};
    const bool compactifiable = model.mix_value() != 0;

    FreeTraceOptions exhaustive;
    exhaustive.exhaustive = true;
    exhaustive.max_hidden = std::max<std::size_t>(options.max_hidden, 1);
    const TraceFn free = [exhaustive](const Loop& p) { return free_mixed_trace(p, exhaustive); };
    const TraceFn induced = [](const Loop& p) { return induced_mixed_trace(p); };

    TraceSuite free_suite{"free", 0, 0, std::vector<AxiomStats>(compactifiable ? 8 : 6)};
    TraceSuite induced_suite{"induced", 0, 0, std::vector<AxiomStats>(6)};
    if (!compactifiable) report.flags.push_back("induced trace unavailable: m = 0 admits no compactification");

    bool yanking_ambiguous = false;
    for (std::size_t i = 0; i < options.cases; ++i) {
        const std::uint64_t seed = derive_seed(options.seed, i);
        const Case c = draw_case(model, options, seed);
        check_case(c, free, compactifiable ? &induced : nullptr, compactifiable, seed, i, free_suite);
        if (compactifiable) check_case(c, induced, nullptr, false, seed, i, induced_suite);
        if (!compactifiable && !yanking_ambiguous && c.yank.rank > 0)
            yanking_ambiguous = free(yanking_loop(model, c.yank)).status == TraceStatus::Ambiguous;
    }
    if (yanking_ambiguous) report.flags.push_back("free trace of the yanking loop is ambiguous: m = 0");

    report.traces.push_back(std::move(free_suite));
    if (compactifiable) report.traces.push_back(std::move(induced_suite));
    return report;
}

}  // namespace mixcat
