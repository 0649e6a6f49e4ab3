#include "mixcat/zigzag.hpp"

#include "mixcat/random.hpp"

#include <algorithm>
#include <map>

namespace mixcat {

std::size_t Diagram::add_vertex(Obj o, std::string name) {
    vertices.push_back(o);
    names.push_back(std::move(name));
    return vertices.size() - 1;
}

namespace {

void check_edge(const Diagram& d, const Edge& e, std::size_t i) {
    const std::string where = "diagram edge " + std::to_string(i);
    if (e.from >= d.vertices.size() || e.to >= d.vertices.size()) throw InputError(where + ": vertex out of range");
    if (e.label.model() != d.model) throw InputError(where + ": label over a different model");
    if (e.label.dom() != d.vertices[e.from] || e.label.cod() != d.vertices[e.to])
        throw InputError(where + ": label shape does not match its endpoints");
}

}  // namespace

void Diagram::add_edge(std::size_t from, std::size_t to, Mor label) {
    Edge e{from, to, std::move(label)};
    check_edge(*this, e, edges.size());
    edges.push_back(std::move(e));
}

void Diagram::validate() const {
    if (names.size() != vertices.size()) throw InputError("diagram: names and vertices differ in length");
    for (std::size_t i = 0; i < edges.size(); ++i) check_edge(*this, edges[i], i);
}

std::optional<CounterPath> diagram_commutes(const Diagram& d, std::size_t max_paths) {
    d.validate();
    std::vector<std::vector<std::size_t>> out(d.vertices.size());
    for (std::size_t i = 0; i < d.edges.size(); ++i) out[d.edges[i].from].push_back(i);

    std::size_t paths = 0;
    for (std::size_t s = 0; s < d.vertices.size(); ++s) {
        std::map<std::size_t, std::pair<std::vector<std::size_t>, Mor>> first_path;
        std::vector<bool> on_path(d.vertices.size(), false);
        std::vector<std::size_t> edges;
        std::optional<CounterPath> found;

        // Depth-first over simple paths, carrying the running composite.
        auto visit = [&](auto&& self, std::size_t v, const Mor& value) -> void {
            on_path[v] = true;
            for (std::size_t ei : out[v]) {
                if (found) break;
                const Edge& e = d.edges[ei];
                if (on_path[e.to]) continue;
                if (++paths > max_paths)
                    throw ResourceError("diagram has more than " + std::to_string(max_paths) + " simple paths");
                edges.push_back(ei);
                const Mor next = compose(e.label, value);
                auto it = first_path.find(e.to);
                if (it == first_path.end()) {
                    first_path.emplace(e.to, std::make_pair(edges, next));
                } else if (it->second.second != next) {
                    found = CounterPath{s, e.to, it->second.first, edges, it->second.second, next};
                }
                if (!found) self(self, e.to, next);
                edges.pop_back();
            }
            on_path[v] = false;
        };
        visit(visit, s, identity(d.model, d.vertices[s]));
        if (found) return found;
    }
    return std::nullopt;
}

Diagram staircase_diagram(const Loop& p, const StaircaseWitness& w) {
    const Model& model = p.model();
    const auto& hidden = p.hidden();
    const std::size_t k = hidden.size();
    if (w.levels.size() != k + 1 || w.mix_solutions.size() != k)
        throw InputError("staircase witness does not match the hidden length");
    Diagram d{model, {}, {}, {}};
    const std::size_t target = d.add_vertex(par(p.target(), dual(p.source())), "B par A^perp");
    std::vector<std::size_t> levels;
    for (std::size_t i = 0; i <= k; ++i) levels.push_back(d.add_vertex(staircase_level(hidden, i), "P" + std::to_string(i)));
    for (std::size_t i = 0; i <= k; ++i) d.add_edge(levels[i], target, w.levels[i]);
    for (std::size_t i = 0; i < k; ++i) {
        const Obj u = hidden[i];
        const Obj rest = staircase_level(hidden, i + 1);
        const std::size_t wide = d.add_vertex(tensor(par(u, dual(u)), rest), "W" + std::to_string(i));
        d.add_edge(levels[i], wide, tensor_mor(mix_map(model, u, dual(u)), identity(model, rest)));
        d.add_edge(levels[i + 1], wide, tensor_mor(coev(model, u), identity(model, rest)));
        d.add_edge(wide, target, w.mix_solutions[i]);
    }
    return d;
}

std::string to_string(ZigZagVerdict v) {
    switch (v) {
        case ZigZagVerdict::PremiseFails: return "PREMISE_FAILS";
        case ZigZagVerdict::Holds: return "HOLDS";
        case ZigZagVerdict::Violated: return "VIOLATED";
    }
    return "?";
}

namespace {

/// One zig-zag column in the hidden order `order`:
/// M_0 -f_1-> L_1 <-g_1- M_1 -f_2-> ... <-g_n- M_n.
struct Column {
    std::vector<Obj> m;    // M_0 .. M_n
    std::vector<Obj> l;    // L_1 .. L_n at index 0 .. n-1
    std::vector<Mor> fs;   // M_{k-1} -> L_k
    std::vector<Mor> gs;   // M_k -> L_k
};

Column build_column(const ZigZagInstance& z, const std::vector<std::size_t>& order) {
    const Model& model = z.model();
    Column c;
    auto xs = [&](std::size_t lo, std::size_t hi) {
        Obj o = unit_obj();
        for (std::size_t i = lo; i < hi; ++i) o = tensor(o, z.x[order[i]]);
        return o;
    };
    auto bs = [&](std::size_t lo, std::size_t hi) {
        Obj o = unit_obj();
        for (std::size_t i = lo; i < hi; ++i) o = tensor(o, z.b[order[i]]);
        return o;
    };
    for (std::size_t k = 0; k <= z.n; ++k) c.m.push_back(tensor(xs(0, k), bs(k, z.n)));
    for (std::size_t k = 1; k <= z.n; ++k) {
        const std::size_t i = order[k - 1];
        const Obj before = xs(0, k - 1), after = bs(k, z.n);
        c.l.push_back(tensor(tensor(before, z.a[i]), after));
        c.fs.push_back(tensor_mor(tensor_mor(identity(model, before), z.f[i]), identity(model, after)));
        c.gs.push_back(tensor_mor(tensor_mor(identity(model, before), z.g[i]), identity(model, after)));
    }
    return c;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = i;
    return o;
}

}  // namespace

void ZigZagInstance::validate() const {
    if (n == 0) throw InputError("zig-zag instance needs n >= 1");
    if (a.size() != n || b.size() != n || x.size() != n || f.size() != n || g.size() != n || alpha.size() != n)
        throw InputError("zig-zag instance: A, B, X, f, g and alpha must all have length n");
    if (left_fillers.size() != n + 1 || right_fillers.size() != n + 1)
        throw InputError("zig-zag instance: each side needs n + 1 fillers");
    const Model& m = model();
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i].model() != m || g[i].model() != m) throw InputError("zig-zag instance mixes models");
        if (f[i].dom() != b[i] || f[i].cod() != a[i])
            throw InputError("zig-zag instance: f[" + std::to_string(i) + "] must map B to A");
        if (g[i].dom() != x[i] || g[i].cod() != a[i])
            throw InputError("zig-zag instance: g[" + std::to_string(i) + "] must map X to A");
    }
    const Column left = build_column(*this, identity_order(n));
    const Column right = build_column(*this, alpha.images());
    auto check_side = [&](const std::vector<Mor>& fillers, const Column& c, const char* side) {
        for (std::size_t k = 0; k <= n; ++k) {
            const Obj src = k == 0 ? c.m[0] : c.l[k - 1];
            const Mor& h = fillers[k];
            if (h.model() != m || h.dom() != src || h.cod() != r)
                throw InputError(std::string("zig-zag instance: ") + side + " filler " + std::to_string(k) +
                                 " must map rank " + std::to_string(src.rank) + " to R");
        }
    };
    check_side(left_fillers, left, "left");
    check_side(right_fillers, right, "right");
}

Diagram zigzag_diagram(const ZigZagInstance& z, bool with_bottom) {
    z.validate();
    const Model& model = z.model();
    Diagram d{model, {}, {}, {}};
    auto add = [&](const Column& c, const std::string& prime) {
        std::vector<std::size_t> m_ids, l_ids;
        for (std::size_t k = 0; k <= z.n; ++k)
            m_ids.push_back(d.add_vertex(c.m[k], k == 0 ? "T" + prime : "M" + prime + std::to_string(k)));
        for (std::size_t k = 1; k <= z.n; ++k) l_ids.push_back(d.add_vertex(c.l[k - 1], "L" + prime + std::to_string(k)));
        for (std::size_t k = 1; k <= z.n; ++k) {
            d.add_edge(m_ids[k - 1], l_ids[k - 1], c.fs[k - 1]);
            d.add_edge(m_ids[k], l_ids[k - 1], c.gs[k - 1]);
        }
        return std::make_pair(m_ids, l_ids);
    };
    const Column left = build_column(z, identity_order(z.n));
    const Column right = build_column(z, z.alpha.images());
    const auto [lm, ll] = add(left, "");
    const auto [rm, rl] = add(right, "'");
    const std::size_t r = d.add_vertex(z.r, "R");
    auto attach = [&](const std::vector<std::size_t>& m_ids, const std::vector<std::size_t>& l_ids,
                      const std::vector<Mor>& fillers) {
        d.add_edge(m_ids[0], r, fillers[0]);
        for (std::size_t k = 1; k <= z.n; ++k) d.add_edge(l_ids[k - 1], r, fillers[k]);
    };
    attach(lm, ll, z.left_fillers);
    attach(rm, rl, z.right_fillers);
    d.add_edge(lm[0], rm[0], factor_symmetry(model, z.b, z.alpha.images()));
    if (with_bottom) d.add_edge(lm[z.n], rm[z.n], factor_symmetry(model, z.x, z.alpha.images()));
    return d;
}

ZigZagOutcome check_zigzag_instance(const ZigZagInstance& z) {
    Diagram premise = zigzag_diagram(z, false);
    if (auto w = diagram_commutes(premise)) return {ZigZagVerdict::PremiseFails, std::move(premise), std::move(w)};
    Diagram full = zigzag_diagram(z, true);
    if (auto w = diagram_commutes(full)) return {ZigZagVerdict::Violated, std::move(full), std::move(w)};
    return {ZigZagVerdict::Holds, std::move(full), std::nullopt};
}

namespace {

/// Overwrites the columns of l on the first diagonal index of A (x) A^perp so
/// that l . (coev_A (x) Id_rest) = target. l: R x (rank^2 * rest).
void fit_coev(Entries& l, const Entries& target, std::size_t rank, std::size_t rest) {
    const auto b = static_cast<Index>(rest);
    for (Index j = 0; j < b; ++j) {
        for (Index row = 0; row < l.rows(); ++row) {
            Rational sum = 0;
            for (std::size_t i = 1; i < rank; ++i) sum += l(row, static_cast<Index>(i * (rank + 1)) * b + j);
            l(row, j) = target(row, j) - sum;
        }
    }
}

enum class Strategy { Random, Solved, Independent };

/// Fillers of one column built bottom-up so that every M_k cell commutes
/// (M_0 included when the top filler is forced to 0 by m = 0).
std::vector<Entries> fit_column(const Column& c, const std::vector<std::size_t>& ranks, Index r_rank,
                                Sampler& s, long bound) {
    const std::size_t n = c.l.size();
    std::vector<Entries> fillers(n + 1);
    fillers[n] = s.matrix(r_rank, static_cast<Index>(c.l[n - 1].rank), bound);
    for (std::size_t k = n - 1; k >= 1; --k) {
        const Entries target = product(fillers[k + 1], c.fs[k].entries());
        Entries l = s.matrix(r_rank, static_cast<Index>(c.l[k - 1].rank), bound);
        fit_coev(l, target, ranks[k - 1], c.m[k].rank);
        fillers[k] = std::move(l);
    }
    fillers[0] = product(fillers[1], c.fs[0].entries());
    return fillers;
}

}  // namespace

ZigZagSearchResult search_counterexample(const Model& model, const ZigZagSearchOptions& options) {
    if (options.n == 0) throw InputError("zig-zag search needs n >= 1");
    if (options.max_rank == 0) throw InputError("zig-zag search needs max rank >= 1");
    const Rational& m = model.mix_value();
    ZigZagSearchResult result;

    for (std::size_t sample = 0; sample < options.budget; ++sample) {
        Sampler s(derive_seed(options.seed, sample));
        const std::size_t n = options.n;
        ZigZagInstance z;
        z.n = n;
        std::vector<std::size_t> ranks;
        for (std::size_t i = 0; i < n; ++i) {
            const Obj base{static_cast<std::size_t>(s.uniform(1, static_cast<long>(options.max_rank)))};
            ranks.push_back(base.rank);
            z.a.push_back(par(base, dual(base)));
            z.b.push_back(tensor(base, dual(base)));
            z.x.push_back(unit_obj());
            z.f.push_back(mix_map(model, base, dual(base)));
            z.g.push_back(coev(model, base));
        }
        std::vector<std::size_t> images = identity_order(n);
        std::shuffle(images.begin(), images.end(), s.engine());
        z.alpha = Permutation(images);
        z.r = Obj{static_cast<std::size_t>(s.uniform(1, static_cast<long>(options.max_rank)))};
        const auto r_rank = static_cast<Index>(z.r.rank);

        Strategy strategy = Strategy::Random;
        if (sample % 3 != 0) strategy = m == 0 ? Strategy::Independent : Strategy::Solved;

        // Columns are built against a provisional instance whose fillers only
        // need the right count; shapes come from build_column.
        const Column left = build_column(z, identity_order(n));
        const Column right = build_column(z, z.alpha.images());
        std::vector<std::size_t> right_ranks;
        for (std::size_t i : images) right_ranks.push_back(ranks[i]);
        std::vector<Entries> lf, rf;
        auto random_side = [&](const Column& c) {
            std::vector<Entries> out{s.matrix(r_rank, static_cast<Index>(c.m[0].rank), options.entry_bound)};
            for (const Obj& l : c.l) out.push_back(s.matrix(r_rank, static_cast<Index>(l.rank), options.entry_bound));
            return out;
        };
        switch (strategy) {
            case Strategy::Random:
                lf = random_side(left);
                rf = random_side(right);
                break;
            case Strategy::Independent:
                lf = fit_column(left, ranks, r_rank, s, options.entry_bound);
                rf = fit_column(right, right_ranks, r_rank, s, options.entry_bound);
                break;
            case Strategy::Solved: {
                rf = fit_column(right, right_ranks, r_rank, s, options.entry_bound);
                Rational lift = 1;
                for (std::size_t i = 0; i < n; ++i) lift *= m;
                for (Entries& e : rf) e *= lift;
                const Mor top = factor_symmetry(model, z.b, z.alpha.images());
                lf.resize(n + 1);
                lf[0] = product(rf[0], top.entries());
                lf[1] = lf[0] / m;
                for (std::size_t k = 1; k < n; ++k) lf[k + 1] = product(lf[k], left.gs[k - 1].entries()) / m;
                break;
            }
        }
        try {
            for (std::size_t k = 0; k <= n; ++k) {
                const Obj ls = k == 0 ? left.m[0] : left.l[k - 1];
                const Obj rs = k == 0 ? right.m[0] : right.l[k - 1];
                z.left_fillers.emplace_back(model, ls, z.r, lf[k]);
                z.right_fillers.emplace_back(model, rs, z.r, rf[k]);
            }
        } catch (const InputError&) {
            continue;  // a solved filler left the base ring; not a valid sample
        }
        ++result.samples;
        const ZigZagOutcome outcome = check_zigzag_instance(z);
        if (outcome.verdict == ZigZagVerdict::Violated) {
            result.violated = std::move(z);
            return result;
        }
        ++(outcome.verdict == ZigZagVerdict::Holds ? result.holds : result.premise_fails);
    }
    return result;
}

}  // namespace mixcat
