#include "mixcat/serialization.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mixcat {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string sub(const std::string& path, const char* key) { return path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t count_from(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const Json& array_at(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

Rational rational_from(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) fail(path, "expected a scalar string such as \"-3/4\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

Obj obj_from(const Json& j, const std::string& path) { return Obj{count_from(j, path)}; }

std::vector<Obj> objs_from(const Json& j, const std::string& path) {
    std::vector<Obj> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(obj_from(j[i], sub(path, i)));
    return out;
}

Json ranks_json(const std::vector<Obj>& objs) {
    Json out = Json::array();
    for (Obj o : objs) out.push_back(o.rank);
    return out;
}

Json entries_json(const Entries& e) {
    Json rows = Json::array();
    for (Index i = 0; i < e.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < e.cols(); ++j) row.push_back(format_rational(e(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json mors_json(const std::vector<Mor>& fs) {
    Json out = Json::array();
    for (const Mor& f : fs) out.push_back(to_json(f, false));
    return out;
}

std::vector<Mor> mors_from(const Json& j, const Model& model, const std::string& path) {
    std::vector<Mor> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(mor_from_json(j[i], &model, sub(path, i)));
    return out;
}

Json optional_mor(const std::optional<Mor>& f) { return f ? to_json(*f, false) : Json(nullptr); }

}  // namespace

Json parse_json_text(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.what() carries the line and column.
        throw InputError(source + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_json_text(text.str(), path);
}

Model parse_model_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    const std::string usage = "model spec must be zmod:m, q:m or zloc:r:m, got '" + spec + "'";
    try {
        if (parts.size() == 2 && parts[0] == "zmod") return Model(RingTag::integers(), parse_rational(parts[1]));
        if (parts.size() == 2 && parts[0] == "q") return Model(RingTag::rationals(), parse_rational(parts[1]));
        if (parts.size() == 3 && parts[0] == "zloc") {
            const Rational r = parse_rational(parts[1]);
            if (denominator(r) != 1) throw InputError(usage);
            return Model(RingTag::localized(numerator(r)), parse_rational(parts[2]));
        }
    } catch (const InputError& e) {
        throw InputError(usage + " (" + e.what() + ")");
    }
    throw InputError(usage);
}

Json to_json(const Model& model) {
    Json ring;
    switch (model.ring().kind()) {
        case RingTag::Kind::Integers: ring = "Z"; break;
        case RingTag::Kind::Rationals: ring = "Q"; break;
        case RingTag::Kind::Localized: ring = Json{{"Zloc", model.ring().localizer().str()}}; break;
    }
    return Json{{"ring", ring}, {"mix", format_rational(model.mix_value())}};
}

Model model_from_json(const Json& j, const std::string& path) {
    const Json& ring = field(j, "ring", path);
    const std::string ring_path = sub(path, "ring");
    RingTag tag = RingTag::integers();
    if (ring == "Z") {
        tag = RingTag::integers();
    } else if (ring == "Q") {
        tag = RingTag::rationals();
    } else if (ring.is_object() && ring.contains("Zloc")) {
        const Rational m = rational_from(ring["Zloc"], sub(ring_path, "Zloc"));
        if (denominator(m) != 1 || m < 1) fail(sub(ring_path, "Zloc"), "expected a positive integer");
        tag = RingTag::localized(numerator(m));
    } else {
        fail(ring_path, "expected \"Z\", \"Q\" or {\"Zloc\": m}");
    }
    const Rational mix = rational_from(field(j, "mix", path), sub(path, "mix"));
    if (!tag.contains(mix)) fail(sub(path, "mix"), format_rational(mix) + " is not an element of " + tag.to_string());
    return Model(tag, mix);
}

Json to_json(const Mor& f, bool with_model) {
    Json j;
    if (with_model) j["model"] = to_json(f.model());
    j["dom"] = f.dom().rank;
    j["cod"] = f.cod().rank;
    j["entries"] = entries_json(f.entries());
    return j;
}

Mor mor_from_json(const Json& j, const Model* context, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a morphism object");
    std::optional<Model> own;
    if (j.contains("model")) own = model_from_json(j["model"], sub(path, "model"));
    if (!own && !context) fail(path, "missing field \"model\"");
    if (own && context && *own != *context) fail(sub(path, "model"), "differs from the enclosing model");
    const Model model = own ? *own : *context;
    const Obj dom = obj_from(field(j, "dom", path), sub(path, "dom"));
    const Obj cod = obj_from(field(j, "cod", path), sub(path, "cod"));
    const std::string epath = sub(path, "entries");
    const Json& rows = array_at(field(j, "entries", path), epath);
    if (rows.size() != cod.rank) fail(epath, "expected " + std::to_string(cod.rank) + " rows, found " + std::to_string(rows.size()));
    Entries e(static_cast<Index>(cod.rank), static_cast<Index>(dom.rank));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rpath = sub(epath, i);
        const Json& row = array_at(rows[i], rpath);
        if (row.size() != dom.rank)
            fail(rpath, "expected " + std::to_string(dom.rank) + " columns, found " + std::to_string(row.size()));
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string cpath = sub(rpath, c);
            const Rational x = rational_from(row[c], cpath);
            if (!model.ring().contains(x)) fail(cpath, format_rational(x) + " is not an element of " + model.ring().to_string());
            e(static_cast<Index>(i), static_cast<Index>(c)) = x;
        }
    }
    return Mor(model, dom, cod, std::move(e));
}

Json to_json(const Loop& p) {
    return Json{{"model", to_json(p.model())},
                {"A", p.source().rank},
                {"B", p.target().rank},
                {"hidden", ranks_json(p.hidden())},
                {"carrier", to_json(p.carrier(), false)}};
}

Loop loop_from_json(const Json& j, const std::string& path) {
    const Model model = model_from_json(field(j, "model", path), sub(path, "model"));
    const Obj a = obj_from(field(j, "A", path), sub(path, "A"));
    const Obj b = obj_from(field(j, "B", path), sub(path, "B"));
    std::vector<Obj> hidden = objs_from(field(j, "hidden", path), sub(path, "hidden"));
    const Mor carrier = mor_from_json(field(j, "carrier", path), &model, sub(path, "carrier"));
    try {
        return Loop(a, b, std::move(hidden), carrier);
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

Json to_json(const Permutation& alpha) {
    Json out = Json::array();
    for (std::size_t i : alpha.images()) out.push_back(i);
    return out;
}

Permutation permutation_from_json(const Json& j, const std::string& path) {
    std::vector<std::size_t> images;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) images.push_back(count_from(j[i], sub(path, i)));
    try {
        return Permutation(std::move(images));
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

Json to_json(const StaircaseWitness& w) {
    return Json{{"levels", mors_json(w.levels)}, {"mixSolutions", mors_json(w.mix_solutions)}, {"psi", to_json(w.psi, false)}};
}

Json to_json(const TraceResult& r) {
    Json j{{"status", to_string(r.status)}};
    if (r.value) {
        j["model"] = to_json(r.value->model());
        j["value"] = to_json(*r.value, false);
    }
    if (r.alpha) j["alpha"] = to_json(*r.alpha);
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

Json to_json(const ValidationReport& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json jc{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
        if (c.counterexample) jc["counterexample"] = to_json(*c.counterexample, false);
        checks.push_back(std::move(jc));
    }
    return Json{{"model", to_json(r.model)}, {"maxRank", r.max_rank}, {"passed", r.all_passed()}, {"checks", std::move(checks)}};
}

Json to_json(const SuiteReport& r) {
    Json traces = Json::array();
    for (const TraceSuite& t : r.traces) {
        Json axioms = Json::object();
        for (const AxiomStats& a : t.axioms) {
            Json failures = Json::array();
            for (const AxiomFailure& f : a.failures)
                failures.push_back(Json{{"seed", std::to_string(f.seed)}, {"case", f.case_index}, {"lhs", optional_mor(f.lhs)}, {"rhs", optional_mor(f.rhs)}});
            axioms[a.name] = Json{{"checked", a.checked}, {"skippedUndefined", a.skipped_undefined}, {"failed", a.failed}, {"failures", std::move(failures)}};
        }
        traces.push_back(Json{{"trace", t.trace}, {"cases", t.cases}, {"defined", t.defined}, {"passed", t.passed()}, {"axioms", std::move(axioms)}});
    }
    return Json{{"model", to_json(r.model)},
                {"seed", std::to_string(r.options.seed)},
                {"cases", r.options.cases},
                {"maxRank", r.options.max_rank},
                {"maxHidden", r.options.max_hidden},
                {"passed", r.passed()},
                {"flags", r.flags},
                {"traces", std::move(traces)}};
}

Json to_json(const Diagram& d) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < d.vertices.size(); ++i) vertices.push_back(Json{{"name", d.names[i]}, {"rank", d.vertices[i].rank}});
    Json edges = Json::array();
    for (const Edge& e : d.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", to_json(e.label, false)}});
    return Json{{"model", to_json(d.model)}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Diagram diagram_from_json(const Json& j, const std::string& path) {
    Diagram d{model_from_json(field(j, "model", path), sub(path, "model")), {}, {}, {}};
    const std::string vpath = sub(path, "vertices");
    const Json& vertices = array_at(field(j, "vertices", path), vpath);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Json& v = vertices[i];
        if (v.is_object()) {
            const std::string name = v.contains("name") && v["name"].is_string() ? v["name"].get<std::string>() : "";
            d.add_vertex(obj_from(field(v, "rank", sub(vpath, i)), sub(sub(vpath, i), "rank")), name);
        } else {
            d.add_vertex(obj_from(v, sub(vpath, i)));
        }
    }
    const std::string epath = sub(path, "edges");
    const Json& edges = array_at(field(j, "edges", path), epath);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string p = sub(epath, i);
        const std::size_t from = count_from(field(edges[i], "from", p), sub(p, "from"));
        const std::size_t to = count_from(field(edges[i], "to", p), sub(p, "to"));
        d.add_edge(from, to, mor_from_json(field(edges[i], "label", p), &d.model, sub(p, "label")));
    }
    d.validate();
    return d;
}

Json to_json(const CounterPath& c) {
    return Json{{"from", c.from},
                {"to", c.to},
                {"first", c.first},
                {"second", c.second},
                {"firstValue", to_json(c.first_value, false)},
                {"secondValue", to_json(c.second_value, false)}};
}

Json to_json(const ZigZagInstance& z) {
    return Json{{"model", to_json(z.model())},
                {"n", z.n},
                {"A", ranks_json(z.a)},
                {"B", ranks_json(z.b)},
                {"X", ranks_json(z.x)},
                {"f", mors_json(z.f)},
                {"g", mors_json(z.g)},
                {"alpha", to_json(z.alpha)},
                {"R", z.r.rank},
                {"leftFillers", mors_json(z.left_fillers)},
                {"rightFillers", mors_json(z.right_fillers)}};
}

ZigZagInstance zigzag_instance_from_json(const Json& j, const std::string& path) {
    const Model model = model_from_json(field(j, "model", path), sub(path, "model"));
    ZigZagInstance z;
    z.n = count_from(field(j, "n", path), sub(path, "n"));
    z.a = objs_from(field(j, "A", path), sub(path, "A"));
    z.b = objs_from(field(j, "B", path), sub(path, "B"));
    z.x = objs_from(field(j, "X", path), sub(path, "X"));
    z.f = mors_from(field(j, "f", path), model, sub(path, "f"));
    z.g = mors_from(field(j, "g", path), model, sub(path, "g"));
    z.alpha = permutation_from_json(field(j, "alpha", path), sub(path, "alpha"));
    z.r = obj_from(field(j, "R", path), sub(path, "R"));
    z.left_fillers = mors_from(field(j, "leftFillers", path), model, sub(path, "leftFillers"));
    z.right_fillers = mors_from(field(j, "rightFillers", path), model, sub(path, "rightFillers"));
    if (z.f.empty()) fail(sub(path, "f"), "expected n >= 1 morphisms");
    try {
        z.validate();
    } catch (const InputError& e) {
        fail(path, e.what());
    }
    return z;
}

Json to_json(const ZigZagOutcome& o) {
    Json j{{"verdict", to_string(o.verdict)}};
    if (o.witness) {
        Json w = to_json(*o.witness);
        w["fromName"] = o.diagram.names[o.witness->from];
        w["toName"] = o.diagram.names[o.witness->to];
        j["witness"] = std::move(w);
    }
    j["diagram"] = to_json(o.diagram);
    return j;
}

Json to_json(const ZigZagSearchResult& r) {
    Json j{{"result", r.violated ? "VIOLATED" : "NONE_FOUND"},
           {"samples", r.samples},
           {"holds", r.holds},
           {"premiseFails", r.premise_fails}};
    if (r.violated) {
        j["instance"] = to_json(*r.violated);
        const ZigZagOutcome o = check_zigzag_instance(*r.violated);
        if (o.witness) j["witness"] = to_json(o).at("witness");
    }
    return j;
}

Json to_json(const CompactMor& m) {
    Json j = to_json(m.value, true);
    j["base"] = to_json(m.base);
    return j;
}

CompactMor compact_from_json(const Json& j, const std::string& path) {
    const Mor value = mor_from_json(j, nullptr, path);
    const Model& model = value.model();
    std::optional<Model> base;
    if (j.contains("base")) {
        base = model_from_json(j["base"], sub(path, "base"));
    } else if (model.ring().kind() == RingTag::Kind::Rationals) {
        base = model;
    } else if (model.ring().kind() == RingTag::Kind::Localized && model.mix_value() != 0 &&
               denominator(model.mix_value()) == 1 &&
               abs(numerator(model.mix_value())) == model.ring().localizer()) {
        base = Model(RingTag::integers(), model.mix_value());
    } else {
        fail(path, "cannot infer the base model; add a \"base\" field");
    }
    try {
        if (compact_model(*base) != model) fail(path, "model is not the compactification of the base model");
    } catch (const ModelNotCompactifiable&) {
        fail(sub(path, "base"), "base model has m = 0 and no compactification");
    }
    return {*base, value};
}

}  // namespace mixcat
