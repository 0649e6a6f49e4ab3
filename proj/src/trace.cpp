#include "mixcat/trace.hpp"

namespace mixcat {

std::string to_string(TraceStatus status) {
    switch (status) {
        case TraceStatus::Defined: return "DEFINED";
        case TraceStatus::Undefined: return "UNDEFINED";
        case TraceStatus::Ambiguous: return "AMBIGUOUS";
    }
    return "?";
}

Mor phi_prime(const Loop& p) {
    const Model& model = p.model();
    const auto& hidden = p.hidden();
    const std::size_t k = hidden.size();

    // Move Uk, ..., U1 out of the codomain; each lands last in the domain as a dual.
    Mor f = p.carrier();
    std::vector<Obj> dom_factors{p.source()};
    dom_factors.insert(dom_factors.end(), hidden.begin(), hidden.end());
    for (std::size_t j = k; j-- > 0;) {
        const Obj remaining = par(p.target(), tensor_all({hidden.begin(), hidden.begin() + static_cast<long>(j)}));
        f = theta_inv(f, f.dom(), dual(hidden[j]), remaining);
        dom_factors.push_back(dual(hidden[j]));
    }

    // A (x) U1..Uk (x) Uk^perp..U1^perp  ->  (U1 (x) U1^perp) (x) ... (x) A
    Dims order;
    for (std::size_t i = 0; i < k; ++i) {
        order.push_back(1 + i);
        order.push_back(1 + k + (k - 1 - i));
    }
    order.push_back(0);
    const Mor sym = factor_symmetry(model, dom_factors, order);
    const Mor regrouped = compose(f, dual_mor(sym));  // symmetries are orthogonal

    const Obj pairs = staircase_level(hidden, 0);
    return theta(regrouped, pairs, p.source(), p.target());
}

Obj staircase_level(const std::vector<Obj>& hidden, std::size_t i) {
    Obj out = unit_obj();
    for (std::size_t j = i; j < hidden.size(); ++j) out = tensor(out, tensor(hidden[j], dual(hidden[j])));
    return out;
}

namespace {

enum class StageOutcome { Solved, Unsolvable, Free };

/// Solves x * m = rhs entrywise (x . (m Id) = rhs). With m = 0 and rhs = 0 every
/// x solves it; the zero solution is returned and the stage reported Free.
StageOutcome divide_stage(const Mor& rhs, const Model& model, Obj new_dom, Obj new_cod,
                          std::optional<Mor>& out) {
    const Scalar m = model.mix();
    if (m.is_zero()) {
        if (!rhs.is_zero()) return StageOutcome::Unsolvable;
        out = zero_mor(model, new_dom, new_cod);
        return StageOutcome::Free;
    }
    Entries q(rhs.entries().rows(), rhs.entries().cols());
    for (Index i = 0; i < q.rows(); ++i) {
        for (Index j = 0; j < q.cols(); ++j) {
            auto c = scalar_exact_div(rhs.at(i, j), m);
            if (!c) return StageOutcome::Unsolvable;
            q(i, j) = c->value();
        }
    }
    out = Mor(model, new_dom, new_cod, std::move(q));
    return StageOutcome::Solved;
}

Mor ones(const Model& model, Obj dom, Obj cod) {
    return Mor(model, dom, cod,
               Entries::Ones(static_cast<Index>(cod.rank), static_cast<Index>(dom.rank)));
}

}  // namespace

TraceResult provisional_trace(const Loop& p, bool with_witness) {
    const Model& model = p.model();
    const auto& hidden = p.hidden();
    const std::size_t k = hidden.size();
    const Obj target = par(p.target(), dual(p.source()));

    StaircaseWitness witness{{phi_prime(p)}, {}, zero_mor(model, unit_obj(), target)};
    Mor level = witness.levels.front();
    bool free_stage = false;
    std::optional<Mor> last_coev_step;
    for (std::size_t i = 0; i < k; ++i) {
        const Obj rest = staircase_level(hidden, i + 1);
        const Obj widened = tensor(par(hidden[i], dual(hidden[i])), rest);
        std::optional<Mor> q;
        switch (divide_stage(level, model, widened, target, q)) {
            case StageOutcome::Unsolvable: return TraceResult::undefined();
            case StageOutcome::Free: free_stage = true; break;
            case StageOutcome::Solved: break;
        }
        const Mor coev_step = tensor_mor(coev(model, hidden[i]), identity(model, rest));
        level = compose(*q, coev_step);
        last_coev_step = coev_step;
        if (with_witness) {
            witness.mix_solutions.push_back(*q);
            witness.levels.push_back(level);
        }
    }
    if (free_stage) {
        // Once a stage is free (m = 0) every later stage is too; the last
        // filler is then arbitrary and the all-ones choice is as good as zero.
        const Mor alternative = compose(ones(model, last_coev_step->cod(), target), *last_coev_step);
        if (alternative != level) return TraceResult::ambiguous();
    }
    TraceResult result = TraceResult::of(theta_inv(level, unit_obj(), p.source(), p.target()));
    if (with_witness) {
        witness.psi = level;
        result.witness = std::move(witness);
    }
    return result;
}

TraceResult provisional_trace_dual(const Loop& p) {
    const Model& model = p.model();
    const auto& hidden = p.hidden();
    const std::size_t k = hidden.size();
    const Obj source = tensor(dual(p.target()), p.source());

    Mor level = dual_mor(phi_prime(p));
    bool free_stage = false;
    std::optional<Mor> last_ev_step;
    for (std::size_t i = 0; i < k; ++i) {
        const Obj u = hidden[i];
        const Obj rest = staircase_level(hidden, i + 1);
        const Obj widened = par(tensor(dual(u), u), rest);
        // (Mix par Id) . r = level with Mix = m Id: transpose of the primal stage.
        std::optional<Mor> r_perp;
        switch (divide_stage(dual_mor(level), model, widened, source, r_perp)) {
            case StageOutcome::Unsolvable: return TraceResult::undefined();
            case StageOutcome::Free: free_stage = true; break;
            case StageOutcome::Solved: break;
        }
        const Mor r = dual_mor(*r_perp);
        const Mor ev_step = par_mor(ev(model, dual(u)), identity(model, rest));
        level = compose(ev_step, r);
        last_ev_step = ev_step;
    }
    if (free_stage) {
        const Mor alternative = compose(*last_ev_step, ones(model, source, last_ev_step->dom()));
        if (alternative != level) return TraceResult::ambiguous();
    }
    // level = psi^perp: B^perp (x) A -> bottom
    const Mor transposed = theta(level, dual(p.target()), p.source(), bottom_obj());
    return TraceResult::of(dual_mor(transposed));
}

TraceResult free_mixed_trace(const Loop& p, const FreeTraceOptions& options) {
    const std::size_t k = p.hidden_length();
    if (k > options.max_hidden) {
        throw ResourceError("free mixed trace: hidden length " + std::to_string(k) +
                            " exceeds the permutation bound " + std::to_string(options.max_hidden));
    }
    std::optional<TraceResult> first;
    for (const Permutation& alpha : Permutation::all(k)) {
        TraceResult r = provisional_trace(hidden_symmetry(p, alpha), options.with_witness);
        if (r.status == TraceStatus::Undefined) continue;
        r.alpha = alpha;
        if (!options.exhaustive) return r;
        if (!first) {
            first = std::move(r);
            continue;
        }
        if (r.status != TraceStatus::Defined || first->status != TraceStatus::Defined ||
            *r.value != *first->value) {
            return TraceResult::ambiguous();
        }
    }
    if (first) return *first;
    return TraceResult::undefined();
}

TraceResult induced_mixed_trace(const Loop& p) {
    const Model& model = p.model();
    if (model.mix_value() == 0) throw ModelNotCompactifiable();
    Entries value = partial_trace(p.carrier().entries(), static_cast<Index>(p.target().rank),
                                  static_cast<Index>(p.source().rank), p.hidden_object().rank);
    Rational scale_by(1);
    for (std::size_t i = 0; i < p.hidden_length(); ++i) scale_by /= model.mix_value();
    value *= scale_by;
    for (Index i = 0; i < value.rows(); ++i)
        for (Index j = 0; j < value.cols(); ++j)
            if (!model.ring().contains(value(i, j))) return TraceResult::undefined();
    return TraceResult::of(Mor(model, p.source(), p.target(), std::move(value)));
}

HiddenTrace hidden_trace(const Loop& p, std::size_t tail_len, const FreeTraceOptions& options) {
    if (tail_len > p.hidden_length()) throw InputError("hidden trace tail longer than hidden part");
    const std::size_t head_len = p.hidden_length() - tail_len;
    const Loop q = unhide_head(p, head_len);
    TraceResult r = free_mixed_trace(q, options);
    if (!r.defined()) return {r.status, std::nullopt};
    std::vector<Obj> head(p.hidden().begin(), p.hidden().begin() + static_cast<long>(head_len));
    return {TraceStatus::Defined, Loop(p.source(), p.target(), std::move(head), *r.value)};
}

Mor total_trace(const Mor& f, Obj a, Obj b, Obj u) {
    const Model& model = f.model();
    if (!model.is_compact()) {
        throw InputError("total trace needs a compact model; " + model.to_string() + " is not");
    }
    if (f.dom() != tensor(a, u) || f.cod() != tensor(b, u)) {
        throw InputError("total trace expects f: A (x) U -> B (x) U");
    }
    const Mor as_par = compose(mix_map(model, b, u), f);
    const Mor opened = theta_inv(as_par, tensor(a, u), dual(u), b);
    const Scalar inv_m = model.scalar(Rational(1) / model.mix_value());
    const Mor mix_inverse = scale(inv_m, identity(model, tensor(u, dual(u))));
    const Mor unit_side = tensor_mor(identity(model, a), coev(model, u));
    return compose(opened, compose(tensor_mor(identity(model, a), mix_inverse), unit_side));
}

Mor partial_trace_mor(const Mor& f, Obj a, Obj b, Obj u) {
    if (f.dom() != tensor(a, u) || f.cod() != tensor(b, u)) {
        throw InputError("partial trace expects f: A (x) U -> B (x) U");
    }
    return Mor(f.model(), a, b,
               partial_trace(f.entries(), static_cast<Index>(b.rank), static_cast<Index>(a.rank), u.rank));
}

}  // namespace mixcat
