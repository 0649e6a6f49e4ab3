#include "mixcat/cli.hpp"

#include "mixcat/coherence.hpp"
#include "mixcat/serialization.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <functional>

namespace mixcat {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

std::uint64_t default_seed() {
    const char* env = std::getenv("MIXCAT_SEED");
    if (!env || !*env) return 42;
    std::uint64_t seed = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, seed);
    if (ec != std::errc() || ptr != end) throw InputError(std::string("MIXCAT_SEED is not an unsigned integer: ") + env);
    return seed;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<Loop> read_generators(const std::string& path) {
    const Json j = read_json_file(path);
    const Json& list = j.is_object() && j.contains("loops") ? j["loops"] : j;
    if (!list.is_array()) throw InputError(path + ": expected an array of loops or {\"loops\": [...]}");
    std::vector<Loop> out;
    for (std::size_t i = 0; i < list.size(); ++i) out.push_back(loop_from_json(list[i], "$[" + std::to_string(i) + "]"));
    return out;
}

struct Options {
    std::string model;
    std::size_t max_rank = 3;
    std::optional<std::uint64_t> seed;
    std::string mode;
    bool witness = false;
    bool expect_defined = false;
    bool exhaustive = false;
    bool one_step = false;
    std::size_t max_hidden = 6;
    std::string expect;
    std::string generators;
    std::vector<std::string> files;
    std::size_t n = 1;
    long entry_bound = 2;
    std::size_t budget = 10000;
    std::size_t cases = 1000;
    std::size_t samples = 1000;

    std::uint64_t seed_or_default() const { return seed ? *seed : default_seed(); }
};

int cmd_validate(const Options& o, std::ostream& out) {
    const ValidationReport r = validate_coherence(parse_model_spec(o.model), o.max_rank, o.seed_or_default());
    emit(out, to_json(r));
    return r.all_passed() ? kOk : kViolation;
}

int cmd_trace(const Options& o, std::ostream& out) {
    const Loop p = loop_from_json(read_json_file(o.files.at(0)));
    TraceResult r;
    Json extra;
    if (o.mode == "induced") {
        r = induced_mixed_trace(p);
    } else {
        FreeTraceOptions options;
        options.exhaustive = o.exhaustive;
        options.with_witness = o.witness;
        options.max_hidden = o.max_hidden;
        r = free_mixed_trace(p, options);
        if (o.witness && r.witness) extra = to_json(staircase_diagram(hidden_symmetry(p, *r.alpha), *r.witness));
    }
    Json j = to_json(r);
    j["mode"] = o.mode;
    if (!extra.is_null()) j["diagram"] = std::move(extra);
    emit(out, j);
    return o.expect_defined && !r.defined() ? kViolation : kOk;
}

int cmd_congruent(const Options& o, std::ostream& out) {
    const Loop p = loop_from_json(read_json_file(o.files.at(0)));
    const Loop q = loop_from_json(read_json_file(o.files.at(1)));
    if (o.one_step) {
        const bool ok = one_step_congruent(p, q);
        emit(out, Json{{"oneStep", ok}});
        return ok ? kOk : kViolation;
    }
    const CongruenceMode mode = parse_congruence_mode(o.mode);
    const std::vector<Loop> generators = o.generators.empty() ? std::vector<Loop>{} : read_generators(o.generators);
    const CongruenceVerdict v = congruent(p, q, mode, generators);
    emit(out, Json{{"mode", o.mode}, {"verdict", to_string(v)}});
    return v == CongruenceVerdict::Congruent ? kOk : kViolation;
}

int cmd_zigzag_check(const Options& o, std::ostream& out) {
    const Json j = read_json_file(o.files.at(0));
    const bool is_instance = j.contains("instance") || j.contains("n");
    if (is_instance) {
        const ZigZagInstance z = zigzag_instance_from_json(j.contains("instance") ? j["instance"] : j,
                                                           j.contains("instance") ? "$.instance" : "$");
        const ZigZagOutcome outcome = check_zigzag_instance(z);
        emit(out, to_json(outcome));
        const std::string verdict = to_string(outcome.verdict);
        if (!o.expect.empty()) {
            std::string want = o.expect;
            for (char& c : want) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (want != "HOLDS" && want != "PREMISE_FAILS" && want != "VIOLATED")
                throw InputError("--expect for an instance must be holds, premise-fails or violated");
            return want == verdict ? kOk : kViolation;
        }
        return outcome.verdict == ZigZagVerdict::Violated ? kViolation : kOk;
    }
    const bool nested = j.contains("diagram");
    const Diagram d = diagram_from_json(nested ? j["diagram"] : j, nested ? "$.diagram" : "$");
    const auto w = diagram_commutes(d);
    Json result{{"commutes", !w.has_value()}};
    if (w) result["witness"] = to_json(*w);
    emit(out, result);
    if (!o.expect.empty()) {
        if (o.expect != "commutes" && o.expect != "fails")
            throw InputError("--expect for a diagram must be commutes or fails");
        return (o.expect == "commutes") == !w.has_value() ? kOk : kViolation;
    }
    return w ? kViolation : kOk;
}

int cmd_zigzag_search(const Options& o, std::ostream& out) {
    ZigZagSearchOptions options;
    options.n = o.n;
    options.max_rank = o.max_rank;
    options.entry_bound = o.entry_bound;
    options.budget = o.budget;
    options.seed = o.seed_or_default();
    const Model model = parse_model_spec(o.model);
    Json j = to_json(search_counterexample(model, options));
    j["model"] = to_json(model);
    j["seed"] = std::to_string(options.seed);
    emit(out, j);
    return kOk;
}

int cmd_axioms(const Options& o, std::ostream& out) {
    SuiteOptions options;
    options.cases = o.cases;
    options.seed = o.seed_or_default();
    options.max_rank = o.max_rank;
    options.max_hidden = o.max_hidden;
    const SuiteReport r = run_axiom_suite(parse_model_spec(o.model), options);
    emit(out, to_json(r));
    return r.passed() ? kOk : kViolation;
}

int cmd_compactify_verify(const Options& o, std::ostream& out) {
    const Model model = parse_model_spec(o.model);
    CompactnessOptions options;
    options.samples = o.samples;
    options.seed = o.seed_or_default();
    try {
        const ValidationReport r = verify_compactness(model, o.max_rank, options);
        emit(out, to_json(r));
        return r.all_passed() ? kOk : kViolation;
    } catch (const ModelNotCompactifiable& e) {
        emit(out, Json{{"model", to_json(model)}, {"status", "MODEL_NOT_COMPACTIFIABLE"}, {"detail", e.what()}});
        return kViolation;
    }
}

int cmd_realize(const Options& o, std::ostream& out) {
    Json j = read_json_file(o.files.at(0));
    if (!o.model.empty()) j["base"] = to_json(parse_model_spec(o.model));
    const CompactMor m = compact_from_json(j);
    emit(out, to_json(realize(m)));
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in matrix models of Mix-categories", "mixcat"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, std::ostream&)> action;

    auto model_opt = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--model", o.model, "zmod:m, q:m or zloc:r:m");
        if (required) opt->required();
    };
    auto seed_opt = [&](CLI::App* c) {
        c->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& s) { o.seed = s; },
                                              "seed (default: $MIXCAT_SEED or 42)");
    };

    auto* validate = app.add_subcommand("validate", "coherence checks of a model");
    model_opt(validate, true);
    validate->add_option("--max-rank", o.max_rank)->check(CLI::Range(1, 16));
    seed_opt(validate);
    validate->callback([&] { action = cmd_validate; });

    auto* trace = app.add_subcommand("trace", "mixed trace of a loop file");
    trace->add_option("loop", o.files, "loop JSON file")->required()->expected(1);
    o.mode = "free";
    trace->add_option("--mode", o.mode)->check(CLI::IsMember({"free", "induced"}));
    trace->add_flag("--witness", o.witness, "include the staircase and its cell diagram");
    trace->add_flag("--expect-defined", o.expect_defined, "exit 1 unless the trace is defined");
    trace->add_flag("--exhaustive", o.exhaustive, "evaluate every hidden order");
    trace->add_option("--max-hidden", o.max_hidden)->check(CLI::Range(0, 8));
    trace->callback([&] { action = cmd_trace; });

    auto* cong = app.add_subcommand("congruent", "congruence of two loop files");
    cong->add_option("loops", o.files, "two loop JSON files")->required()->expected(2);
    cong->add_option("--mode", o.mode, "semantic or bounded:d");
    cong->add_option("--generators", o.generators, "JSON file of loops used for un-tracing");
    cong->add_flag("--one-step", o.one_step, "decide one-step congruence instead");
    cong->callback([&] { action = cmd_congruent; });

    auto* zcheck = app.add_subcommand("zigzag-check", "check a zig-zag instance or a diagram file");
    zcheck->add_option("file", o.files, "instance, diagram, trace or search output")->required()->expected(1);
    zcheck->add_option("--expect", o.expect, "holds, premise-fails, violated; commutes or fails for diagrams");
    zcheck->callback([&] { action = cmd_zigzag_check; });

    auto* zsearch = app.add_subcommand("zigzag-search", "sample zig-zag instances of Mix and coev maps");
    model_opt(zsearch, true);
    zsearch->add_option("--n", o.n)->check(CLI::Range(1, 4));
    o.max_rank = 3;
    zsearch->add_option("--max-rank", o.max_rank)->check(CLI::Range(1, 4));
    zsearch->add_option("--entry-bound", o.entry_bound)->check(CLI::Range(0, 1000));
    zsearch->add_option("--budget", o.budget);
    seed_opt(zsearch);
    zsearch->callback([&] { action = cmd_zigzag_search; });

    auto* axioms = app.add_subcommand("axioms", "random mixed-trace axiom suite");
    model_opt(axioms, true);
    axioms->add_option("--cases", o.cases);
    axioms->add_option("--max-rank", o.max_rank)->check(CLI::Range(1, 4));
    axioms->add_option("--max-hidden", o.max_hidden)->check(CLI::Range(0, 4));
    seed_opt(axioms);
    axioms->callback([&] { action = cmd_axioms; });

    auto* compact = app.add_subcommand("compactify-verify", "check the localized compactification");
    model_opt(compact, true);
    compact->add_option("--max-rank", o.max_rank)->check(CLI::Range(1, 6));
    compact->add_option("--samples", o.samples);
    seed_opt(compact);
    compact->callback([&] { action = cmd_compactify_verify; });

    auto* real = app.add_subcommand("realize", "a loop representing a localized matrix");
    real->add_option("file", o.files, "compact morphism JSON file")->required()->expected(1);
    model_opt(real, false);
    real->callback([&] { action = cmd_realize; });

    // Defaults that differ per verb are applied after parsing.
    zsearch->preparse_callback([&](std::size_t) { o.max_rank = 2; });
    axioms->preparse_callback([&](std::size_t) { o.max_hidden = 2; });
    cong->preparse_callback([&](std::size_t) { o.mode = "semantic"; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    try {
        return action(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ModelNotCompactifiable& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

}  // namespace mixcat
