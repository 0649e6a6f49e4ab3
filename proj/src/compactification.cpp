#include "mixcat/compactification.hpp"

#include "check_builder.hpp"
#include "mixcat/random.hpp"
#include "mixcat/trace.hpp"

#include <boost/multiprecision/integer.hpp>

namespace mixcat {

using detail::CheckBuilder;

namespace {

Integer abs_mix(const Model& base) {
    const Rational& m = base.mix_value();
    if (m == 0) throw ModelNotCompactifiable();
    // Outside Q the mix scalar is an integer or a Z[1/r] element; only its
    // numerator needs inverting.
    Integer n = numerator(m);
    return n < 0 ? Integer(-n) : n;
}

Mor retag(const Mor& f, const Model& target) { return Mor(target, f.dom(), f.cod(), f.entries()); }

std::string rank_text(std::initializer_list<std::size_t> ranks) {
    std::string out = "ranks (";
    bool first = true;
    for (auto r : ranks) {
        out += (first ? "" : ",") + std::to_string(r);
        first = false;
    }
    return out + ")";
}

}  // namespace

RingTag compact_ring(const Model& base) {
    const Integer m = abs_mix(base);
    const RingTag& ring = base.ring();
    switch (ring.kind()) {
        case RingTag::Kind::Integers: return RingTag::localized(m);
        case RingTag::Kind::Localized: return RingTag::localized(ring.localizer() * m);
        case RingTag::Kind::Rationals: return ring;
    }
    return ring;
}

Model compact_model(const Model& base) { return Model(compact_ring(base), base.mix_value()); }

CompactMor compact_compose(const CompactMor& g, const CompactMor& f) {
    if (g.base != f.base) throw InputError("compact morphisms over different models");
    return {f.base, compose(g.value, f.value)};
}

CompactMor compact_tensor(const CompactMor& f, const CompactMor& g) {
    if (g.base != f.base) throw InputError("compact morphisms over different models");
    return {f.base, tensor_mor(f.value, g.value)};
}

CompactMor compact_dual(const CompactMor& f) { return {f.base, dual_mor(f.value)}; }

CompactMor loop_value(const Loop& p) {
    const Model target = compact_model(p.model());
    Entries value = partial_trace(p.carrier().entries(), static_cast<Index>(p.target().rank),
                                  static_cast<Index>(p.source().rank), p.hidden_object().rank);
    for (std::size_t i = 0; i < p.hidden_length(); ++i) value /= target.mix_value();
    return {p.model(), Mor(target, p.source(), p.target(), std::move(value))};
}

CompactMor c_tr(const Mor& f) { return {f.model(), retag(f, compact_model(f.model()))}; }

Loop realize(const CompactMor& m) {
    const Model& base = m.base;
    const Rational& mix = base.mix_value();
    Entries scaled = m.value.entries();
    std::size_t k = 0;
    auto integral = [&] {
        for (Index i = 0; i < scaled.rows(); ++i)
            for (Index j = 0; j < scaled.cols(); ++j)
                if (!base.ring().contains(scaled(i, j))) return false;
        return true;
    };
    // Denominators are powers of the localizer, so this terminates; the bound
    // only guards against malformed input.
    while (!integral()) {
        if (++k > 4096) throw ResourceError("realize: denominator exponent too large");
        scaled *= mix;
    }
    std::vector<Obj> hidden(k, Obj{1});
    return Loop(m.dom(), m.cod(), std::move(hidden), Mor(base, m.dom(), m.cod(), std::move(scaled)));
}

Loop comix(const Model& model, Obj a, Obj b) {
    return Loop(par(a, b), tensor(a, b), {a, b}, mixed_sigma(model, par(a, b), tensor(a, b)));
}

ValidationReport verify_compactness(const Model& model, std::size_t max_rank,
                                    const CompactnessOptions& options) {
    const Model target = compact_model(model);
    ValidationReport report{model, max_rank, {}};
    auto sample_rank = [&](Sampler& s) { return Obj{static_cast<std::size_t>(s.uniform(0, static_cast<long>(max_rank)))}; };

    {
        CheckBuilder c("comix inverts Mix");
        for (std::size_t a = 0; a <= max_rank; ++a)
            for (std::size_t b = 0; b <= max_rank; ++b) {
                const CompactMor inv = loop_value(comix(model, Obj{a}, Obj{b}));
                const CompactMor mix = c_tr(mix_map(model, Obj{a}, Obj{b}));
                const CompactMor id = c_tr(identity(model, tensor(Obj{a}, Obj{b})));
                const CompactMor left = compact_compose(inv, mix);
                const CompactMor right = compact_compose(mix, inv);
                c.expect(left == id && right == id, [&] { return rank_text({a, b}); }, left.value);
            }
        report.checks.push_back(c.finish());
    }
    {
        CheckBuilder c("c_tr preserves Mix");
        for (std::size_t a = 0; a <= max_rank; ++a)
            for (std::size_t b = 0; b <= max_rank; ++b) {
                const Mor image = c_tr(mix_map(model, Obj{a}, Obj{b})).value;
                c.expect(image == mix_map(target, Obj{a}, Obj{b}), [&] { return rank_text({a, b}); }, image);
            }
        report.checks.push_back(c.finish());
    }
    {
        CheckBuilder faithful("c_tr faithful on sampled hom-pairs");
        CheckBuilder functor("c_tr preserves composition, tensor and dual");
        for (std::size_t i = 0; i < options.samples; ++i) {
            Sampler s(derive_seed(options.seed, i));
            const Obj a = sample_rank(s), b = sample_rank(s), c = sample_rank(s);
            const Mor f = s.mor(model, a, b), g = s.mor(model, a, b), h = s.mor(model, b, c);
            faithful.expect((f == g) == (c_tr(f) == c_tr(g)), [&] { return "sample " + std::to_string(i); },
                            c_tr(f).value);
            const bool ok = c_tr(compose(h, f)) == compact_compose(c_tr(h), c_tr(f)) &&
                            c_tr(tensor_mor(f, h)) == compact_tensor(c_tr(f), c_tr(h)) &&
                            c_tr(dual_mor(f)) == compact_dual(c_tr(f));
            functor.expect(ok, [&] { return "sample " + std::to_string(i); }, f);
        }
        report.checks.push_back(faithful.finish());
        report.checks.push_back(functor.finish());
    }
    {
        CheckBuilder check("loop values respect composition, tensor and dual");
        for (std::size_t i = 0; i < options.samples; ++i) {
            Sampler s(derive_seed(options.seed ^ 0x10097, i));
            auto hidden = [&] {
                std::vector<Obj> h;
                const long k = s.uniform(0, 2);
                for (long j = 0; j < k; ++j) h.push_back(sample_rank(s));
                return h;
            };
            const Obj a = sample_rank(s), b = sample_rank(s), c = sample_rank(s);
            const auto u = hidden(), v = hidden();
            const Loop p(a, b, u, s.mor(model, tensor(a, tensor_all(u)), par(b, tensor_all(u))));
            const Loop q(b, c, v, s.mor(model, tensor(b, tensor_all(v)), par(c, tensor_all(v))));
            const bool ok =
                loop_value(loop_compose(q, p)) == compact_compose(loop_value(q), loop_value(p)) &&
                loop_value(loop_tensor(p, q)) == compact_tensor(loop_value(p), loop_value(q)) &&
                loop_value(loop_dual(p)) == compact_dual(loop_value(p));
            check.expect(ok, [&] { return "sample " + std::to_string(i); }, p.carrier());
        }
        report.checks.push_back(check.finish());
    }
    {
        CheckBuilder c("realize round-trips denominators up to m^3");
        for (std::size_t i = 0; i < options.samples; ++i) {
            Sampler s(derive_seed(options.seed ^ 0x4ea1, i));
            const Obj a = sample_rank(s), b = sample_rank(s);
            Entries e = s.matrix(static_cast<Index>(b.rank), static_cast<Index>(a.rank), 5);
            const long power = s.uniform(0, 3);
            for (long j = 0; j < power; ++j) e /= model.mix_value();
            const CompactMor m{model, Mor(target, a, b, e)};
            const Loop r = realize(m);
            bool ok = loop_value(r) == m && r.hidden_length() <= static_cast<std::size_t>(power);
            // Padding the representative with t more factors of m and t more
            // rank-1 hidden objects gives a congruent loop whose hidden trace
            // over that tail recovers the representative stage by stage.
            Entries padded = r.carrier().entries();
            std::vector<Obj> longer = r.hidden();
            for (std::size_t t = 1; ok && t <= r.hidden_length() + 1; ++t) {
                padded *= model.mix_value();
                longer.push_back(Obj{1});
                const Loop p(a, b, longer, Mor(model, a, b, padded));
                const HiddenTrace h = hidden_trace(p, t);
                ok = h.status == TraceStatus::Defined && *h.loop == r;
            }
            c.expect(ok, [&] { return "sample " + std::to_string(i); }, m.value);
        }
        report.checks.push_back(c.finish());
    }
    {
        // The rational model with the same m is compact; sending the base model
        // into it factors through the quotient with traces agreeing.
        CheckBuilder c("localization into Q factors through loop values");
        const Model rational(RingTag::rationals(), model.mix_value());
        for (std::size_t i = 0; i < options.samples; ++i) {
            Sampler s(derive_seed(options.seed ^ 0xf4c7, i));
            const Obj a = sample_rank(s), b = sample_rank(s);
            std::vector<Obj> u;
            const long k = s.uniform(0, 2);
            for (long j = 0; j < k; ++j) u.push_back(sample_rank(s));
            const Obj hidden = tensor_all(u);
            const Loop p(a, b, u, s.mor(model, tensor(a, hidden), par(b, hidden)));
            Entries unmixed = p.carrier().entries();
            for (long j = 0; j < k; ++j) unmixed /= model.mix_value();
            const Mor traced = total_trace(Mor(rational, tensor(a, hidden), tensor(b, hidden), unmixed), a, b, hidden);
            bool ok = traced.entries() == loop_value(p).value.entries();
            const TraceResult free = free_mixed_trace(p);
            if (ok && free.defined()) ok = free.value->entries() == traced.entries();
            c.expect(ok, [&] { return "sample " + std::to_string(i); }, traced);
        }
        report.checks.push_back(c.finish());
    }
    return report;
}

}  // namespace mixcat
