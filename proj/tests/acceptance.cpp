// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include "mixcat/axioms.hpp"
#include "mixcat/cli.hpp"
#include "mixcat/coherence.hpp"
#include "mixcat/compactification.hpp"
#include "mixcat/congruence.hpp"
#include "mixcat/serialization.hpp"
#include "mixcat/zigzag.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mixcat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << "s";
    return o.str();
}

Obj rank_obj(Sampler& s, long lo, long hi) { return Obj{static_cast<std::size_t>(s.uniform(lo, hi))}; }

Loop loop_from(const Model& model, Sampler& s, Obj source) {
    const Obj target = rank_obj(s, 1, 2);
    std::vector<Obj> hidden;
    for (long k = s.uniform(0, 2); k > 0; --k) hidden.push_back(rank_obj(s, 1, 2));
    const Obj u = tensor_all(hidden);
    return Loop(source, target, hidden, s.mor(model, tensor(source, u), par(target, u)));
}

Outcome coherence() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Model> models;
    for (long m : {0, 1, 2, 3}) models.push_back(Model::integers(m));
    models.push_back(Model::rationals(1));
    std::size_t checks = 0;
    for (const Model& model : models) {
        const ValidationReport r = validate_coherence(model, 3);
        checks += r.checks.size();
        bool orders = false;
        for (const Check& c : r.checks) {
            if (!c.passed) out.fail(to_json(model).dump() + ": " + c.name);
            orders = orders || c.name.find("3 composition orders") != std::string::npos;
        }
        if (!orders) out.fail(to_json(model).dump() + ": composition-order check missing");
    }
    const double t = seconds_since(t0);
    if (t >= 60) out.fail("runtime " + fmt_seconds(t));
    if (out.passed) out.detail = std::to_string(checks) + " checks over 5 models in " + fmt_seconds(t);
    return out;
}

Outcome yanking() {
    Outcome out;
    std::size_t n = 0;
    for (long m : {1, 2, 3}) {
        const Model model = Model::integers(m);
        for (std::size_t r = 0; r <= 4; ++r) {
            const TraceResult t = free_mixed_trace(yanking_loop(model, Obj{r}));
            ++n;
            if (!t.defined() || *t.value != identity(model, Obj{r}))
                out.fail("m=" + std::to_string(m) + " rank " + std::to_string(r));
        }
    }
    if (out.passed) out.detail = std::to_string(n) + " loops traced to the identity";
    return out;
}

Outcome axiom_suite() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream stats;
    for (long m : {1, 2, 3}) {
        SuiteOptions o;
        o.cases = 1000;
        o.seed = 42;
        o.max_rank = 3;
        o.max_hidden = 2;
        const SuiteReport r = run_axiom_suite(Model::integers(m), o);
        if (r.traces.size() != 2) out.fail("m=" + std::to_string(m) + ": expected free and induced suites");
        for (const std::string& f : r.flags) out.fail("m=" + std::to_string(m) + " flag: " + f);
        for (const TraceSuite& t : r.traces) {
            stats << " m=" << m << "/" << t.trace << " " << t.defined << "/" << t.cases;
            if (t.defined * 10 < t.cases * 3) out.fail("m=" + std::to_string(m) + " " + t.trace + ": defined below 30%");
            for (const AxiomStats& a : t.axioms)
                if (a.failed > 0)
                    out.fail("m=" + std::to_string(m) + " " + t.trace + " " + a.name + ": " +
                             std::to_string(a.failed) + " violations");
        }
    }
    const double t = seconds_since(t0);
    if (t >= 300) out.fail("runtime " + fmt_seconds(t));
    if (out.passed) out.detail = "defined:" + stats.str() + " in " + fmt_seconds(t);
    return out;
}

Outcome gap_witness() {
    Outcome out;
    const Model z2 = Model::integers(2);
    const Loop p(Obj{1}, Obj{1}, {Obj{2}}, identity(z2, Obj{2}));
    const TraceResult induced = induced_mixed_trace(p);
    const TraceResult free = free_mixed_trace(p);
    if (!induced.defined() || *induced.value != identity(z2, Obj{1})) out.fail("induced trace is not [[1]]");
    if (free.status != TraceStatus::Undefined) out.fail("free trace is " + to_string(free.status));
    if (out.passed) out.detail = "induced DEFINED [[1]], free UNDEFINED";
    return out;
}

Outcome zigzag() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    ZigZagSearchOptions o;
    o.n = 1;
    o.max_rank = 2;
    o.budget = 10000;
    const ZigZagSearchResult degenerate = search_counterexample(Model::integers(0), o);
    if (!degenerate.violated) {
        out.fail("m=0: no violation found");
    } else {
        const std::string text = to_json(*degenerate.violated).dump(2);
        const ZigZagInstance replay = zigzag_instance_from_json(parse_json_text(text, "witness"));
        if (check_zigzag_instance(replay).verdict != ZigZagVerdict::Violated) out.fail("m=0: witness does not replay");
    }
    std::ostringstream counts;
    for (long m : {1, 2}) {
        const ZigZagSearchResult r = search_counterexample(Model::integers(m), o);
        if (r.violated) out.fail("m=" + std::to_string(m) + ": violation found");
        if (r.samples != o.budget) out.fail("m=" + std::to_string(m) + ": sampled " + std::to_string(r.samples));
        counts << ", m=" << m << " holds " << r.holds << " premise-fails " << r.premise_fails;
    }
    if (out.passed)
        out.detail = "m=0 violated after " + std::to_string(degenerate.samples) + " samples" + counts.str() + " in " +
                     fmt_seconds(seconds_since(t0));
    return out;
}

Outcome compactness() {
    Outcome out;
    std::size_t checks = 0;
    for (long m : {1, 2, 3}) {
        CompactnessOptions o;
        o.samples = 1000;
        const ValidationReport r = verify_compactness(Model::integers(m), 3, o);
        checks += r.checks.size();
        for (const Check& c : r.checks)
            if (!c.passed) out.fail("m=" + std::to_string(m) + ": " + c.name + " " + c.detail);
    }
    try {
        verify_compactness(Model::integers(0), 3);
        out.fail("m=0 did not report ModelNotCompactifiable");
    } catch (const ModelNotCompactifiable&) {
    }
    if (out.passed) out.detail = std::to_string(checks) + " checks for m=1,2,3; m=0 not compactifiable";
    return out;
}

Outcome congruence_soundness() {
    Outcome out;
    std::size_t moves_total = 0;
    for (long m : {2, 3}) {
        const Model model = Model::integers(m);
        std::size_t moves = 0;
        for (std::uint64_t c = 0; moves < 1000; ++c) {
            Sampler s(derive_seed(700 + static_cast<std::uint64_t>(m), c));
            const Loop base = testing_support::random_loop(model, s, 3, 2, 3, 1);
            Loop p = Loop(base.source(), base.target(), base.hidden(),
                          scale(model.scalar(Rational(m) * m * (s.coin() ? 1 : m)), base.carrier()));
            // One random move: a hidden-trace suffix when defined, else a symmetry.
            const auto t = static_cast<std::size_t>(s.uniform(1, static_cast<long>(std::max<std::size_t>(1, p.hidden_length()))));
            std::optional<Loop> moved;
            if (p.hidden_length() > 0 && s.coin()) moved = hidden_trace(p, t).loop;
            if (!moved) {
                const auto all = Permutation::all(p.hidden_length());
                moved = hidden_symmetry(p, all[static_cast<std::size_t>(s.uniform(0, static_cast<long>(all.size()) - 1))]);
            }
            ++moves;
            const CompactMor v = loop_value(p);
            if (loop_value(*moved) != v) out.fail("move changed the loop value, m=" + std::to_string(m));
            if (!one_step_congruent(p, *moved)) out.fail("move not recognised as one-step, m=" + std::to_string(m));

            // Preservation under the loop operations.
            const Loop q = loop_from(model, s, p.target());
            if (loop_value(loop_compose(q, p)) != loop_value(loop_compose(q, *moved))) out.fail("composition");
            if (loop_value(loop_tensor(p, q)) != loop_value(loop_tensor(*moved, q))) out.fail("tensor");
            if (loop_value(loop_tensor(q, p)) != loop_value(loop_tensor(q, *moved))) out.fail("tensor (right)");
            if (loop_value(loop_dual(p)) != loop_value(loop_dual(*moved))) out.fail("dual");
            if (loop_value(loop_par(p, q)) != loop_value(loop_par(*moved, q))) out.fail("cotensor");
        }
        moves_total += moves;
    }
    if (out.passed) out.detail = std::to_string(moves_total) + " moves and congruent pairs, m=2,3";
    return out;
}

Outcome total_trace_axioms() {
    Outcome out;
    const Model q1 = Model::rationals(1);
    auto id = [&](Obj a) { return identity(q1, a); };
    for (std::uint64_t c = 0; c < 1000; ++c) {
        Sampler s(derive_seed(808, c));
        const Obj a = rank_obj(s, 0, 3), b = rank_obj(s, 0, 3), u = rank_obj(s, 0, 3), v = rank_obj(s, 0, 3);
        const std::string at = "case " + std::to_string(c) + ": ";
        const Mor f = s.mor(q1, tensor(a, u), par(b, u));
        const Mor tr = total_trace(f, a, b, u);

        const Entries expected = oracle::contract(f.entries(), a.rank, b.rank, {u.rank}, {true});
        if (tr.entries() != expected) out.fail(at + "partial contraction");

        const Obj a2 = rank_obj(s, 0, 3), b2 = rank_obj(s, 0, 3);
        const Mor h = s.mor(q1, a2, a), g = s.mor(q1, b, b2);
        const Mor conj = compose(par_mor(g, id(u)), compose(f, tensor_mor(h, id(u))));
        if (total_trace(conj, a2, b2, u) != compose(g, compose(tr, h))) out.fail(at + "naturality");

        const Mor fv = s.mor(q1, tensor(a, u), par(b, v));
        const Mor slide = s.mor(q1, v, u);
        if (total_trace(compose(par_mor(id(b), slide), fv), a, b, u) !=
            total_trace(compose(fv, tensor_mor(id(a), slide)), a, b, v))
            out.fail(at + "dinaturality");

        const Obj c1 = rank_obj(s, 0, 2), d1 = rank_obj(s, 0, 2);
        const Mor k = s.mor(q1, c1, d1);
        if (total_trace(tensor_mor(k, f), tensor(c1, a), tensor(d1, b), u) != tensor_mor(k, tr)) out.fail(at + "strength");

        const Mor fuv = s.mor(q1, tensor(tensor(a, u), v), par(par(b, u), v));
        const Mor inner = total_trace(fuv, tensor(a, u), par(b, u), v);
        if (total_trace(fuv, a, b, tensor(u, v)) != total_trace(inner, a, b, u)) out.fail(at + "vanishing");

        const Mor plain = s.mor(q1, a, b);
        if (total_trace(plain, a, b, unit_obj()) != plain) out.fail(at + "trace over the unit");

        if (total_trace(dual_mor(f), b, a, u) != dual_mor(tr)) out.fail(at + "adjointability");

        if (total_trace(sigma(q1, a, a), a, a, a) != id(a)) out.fail(at + "yanking");
    }
    if (out.passed) out.detail = "1000 cases, 8 identities each";
    return out;
}

struct CliRun {
    int code = 0;
    std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "mixcat_acceptance";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

std::optional<std::string> run_binary(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string text;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
    if (pclose(pipe) != 0) return std::nullopt;
    return text;
}

Outcome cli_determinism() {
    Outcome out;
    const std::vector<std::vector<std::string>> suite = {
        {"validate", "--model", "zmod:2", "--max-rank", "3"},
        {"axioms", "--model", "zmod:2", "--cases", "1000", "--seed", "42"},
        {"compactify-verify", "--model", "zmod:3", "--max-rank", "2", "--seed", "42"},
        {"zigzag-search", "--model", "zmod:1", "--budget", "2000", "--seed", "42"},
        {"trace", std::string(MIXCAT_DATA_DIR) + "/order_dependent_m2.json", "--witness"},
    };
    for (const auto& args : suite) {
        const CliRun first = cli(args), second = cli(args);
        if (first.code != 0) out.fail(args[0] + " exited " + std::to_string(first.code));
        if (first.out != second.out) out.fail(args[0] + " output differs between runs");
    }

    const std::string command = std::string(MIXCAT_BINARY) + " axioms --model zmod:2 --cases 200 --seed 42";
    const auto binary = run_binary(command);
    if (!binary) out.fail("installed binary failed to run");
    else if (*binary != cli({"axioms", "--model", "zmod:2", "--cases", "200", "--seed", "42"}).out)
        out.fail("binary output differs from the in-process run");

    // Witnesses fed back in.
    const CliRun found = cli({"zigzag-search", "--model", "zmod:0", "--seed", "42"});
    const Json j = parse_json_text(found.out, "search");
    if (j.value("result", "") != "VIOLATED") out.fail("m=0 search found nothing");
    const CliRun replay = cli({"zigzag-check", write_temp("search.json", found.out), "--expect", "violated"});
    if (replay.code != 0) out.fail("zig-zag witness did not re-check");

    for (const std::string file : {"order_dependent_m2.json", "yanking_m2_rank2.json"}) {
        const CliRun t = cli({"trace", std::string(MIXCAT_DATA_DIR) + "/" + file, "--witness"});
        const Json tj = parse_json_text(t.out, "trace");
        if (!tj.contains("diagram")) {
            out.fail(file + ": no witness diagram");
            continue;
        }
        const CliRun d = cli({"zigzag-check", write_temp("diagram.json", tj["diagram"].dump(2)), "--expect", "commutes"});
        if (d.code != 0) out.fail(file + ": witness diagram does not commute");
    }
    if (out.passed) out.detail = std::to_string(suite.size()) + " commands repeated byte-identically; witnesses re-check";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"coherence suite", coherence},
        {"yanking", yanking},
        {"mixed-trace axiom suite", axiom_suite},
        {"minimality gap witness", gap_witness},
        {"zig-zag search", zigzag},
        {"compactification", compactness},
        {"congruence soundness", congruence_soundness},
        {"total trace axioms", total_trace_axioms},
        {"CLI determinism", cli_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.passed ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
        if (!o.passed) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
