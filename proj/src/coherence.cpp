#include "mixcat/coherence.hpp"

#include "check_builder.hpp"

#include "mixcat/random.hpp"

#include <functional>
#include <sstream>

namespace mixcat {

Mor theta_via_composite(const Mor& f, Obj a, Obj b, Obj c) {
    const Model& model = f.model();
    const Mor unit_side = tensor_mor(identity(model, a), coev(model, b));
    const Mor distribute = delta(model, a, b, dual(b));
    const Mor apply = par_mor(f, identity(model, dual(b)));
    (void)c;
    return compose(apply, compose(distribute, unit_side));
}

Mor theta_inv_via_composite(const Mor& g, Obj a, Obj b, Obj c) {
    const Model& model = g.model();
    const Mor widen = tensor_mor(g, identity(model, b));
    const Mor distribute = delta_r(model, c, dual(b), b);
    const Mor evaluate = par_mor(identity(model, c), ev(model, dual(b)));
    (void)a;
    return compose(evaluate, compose(distribute, widen));
}

Mor delta_via_theta(const Model& model, Obj a, Obj b, Obj c) {
    const Obj bc = par(b, c);
    const Mor inner = theta_inv(identity(model, bc), bc, dual(c), b);
    const Mor widened = tensor_mor(identity(model, a), inner);
    return theta(widened, tensor(a, bc), dual(c), tensor(a, b));
}

Mor delta_r_via_symmetries(const Model& model, Obj a, Obj b, Obj c) {
    Mor m = sigma(model, par(a, b), c);
    m = compose(tensor_mor(identity(model, c), tau(model, a, b)), m);
    m = compose(delta(model, c, b, a), m);
    m = compose(tau(model, tensor(c, b), a), m);
    m = compose(par_mor(identity(model, a), sigma(model, c, b)), m);
    return m;
}

Mor mix_via_theta(const Model& model, Obj a, Obj b) {
    const Mor f = tensor_mor(identity(model, a), mixed_ev(model, b));
    return theta(f, tensor(a, b), dual(b), a);
}

std::vector<Mor> times_rule_chains(const Model& model, Obj a, Obj b, Obj c, Obj d) {
    auto id = [&](Obj x) { return identity(model, x); };
    std::vector<Mor> chains;

    // (Id par tau) . (delta par Id) . tau . delta^R . (tau (x) Id)
    {
        Mor m = tensor_mor(tau(model, a, b), id(par(c, d)));
        m = compose(delta_r(model, b, a, par(c, d)), m);
        m = compose(tau(model, b, tensor(a, par(c, d))), m);
        m = compose(par_mor(delta(model, a, c, d), id(b)), m);
        m = compose(par_mor(id(tensor(a, c)), tau(model, d, b)), m);
        chains.push_back(std::move(m));
    }
    // sigma first, then the left distributivity twice.
    {
        Mor m = sigma(model, par(a, b), par(c, d));
        m = compose(delta(model, par(c, d), a, b), m);
        m = compose(par_mor(sigma(model, par(c, d), a), id(b)), m);
        m = compose(par_mor(delta(model, a, c, d), id(b)), m);
        m = compose(par_mor(id(tensor(a, c)), tau(model, d, b)), m);
        chains.push_back(std::move(m));
    }
    // distribute over C par D first, then the right distributivity inside.
    {
        Mor m = delta(model, par(a, b), c, d);
        m = compose(par_mor(tensor_mor(tau(model, a, b), id(c)), id(d)), m);
        m = compose(par_mor(delta_r(model, b, a, c), id(d)), m);
        m = compose(par_mor(tau(model, b, tensor(a, c)), id(d)), m);
        chains.push_back(std::move(m));
    }
    return chains;
}

namespace {

using detail::CheckBuilder;

std::string ranks(std::initializer_list<Obj> objs) {
    std::ostringstream out;
    out << "ranks (";
    bool first = true;
    for (Obj o : objs) {
        out << (first ? "" : ",") << o.rank;
        first = false;
    }
    out << ")";
    return out.str();
}

}  // namespace

ValidationReport validate_coherence(const Model& model, std::size_t max_rank, std::uint64_t seed) {
    if (max_rank < 1) throw InputError("validate_coherence requires maxRank >= 1");
    ValidationReport report{model, max_rank, {}};
    Sampler sampler(seed);

    std::vector<Obj> objs;
    for (std::size_t r = 0; r <= max_rank; ++r) objs.push_back(Obj{r});
    auto id = [&](Obj x) { return identity(model, x); };

    {
        CheckBuilder c("mix coherence square");
        const Mor left = tensor_mor(mix_unit(model), id(bottom_obj()));
        const Mor right = tensor_mor(id(bottom_obj()), mix_unit(model));
        c.expect(left == right, [] { return std::string("bottom (x) bottom"); }, left);
        report.checks.push_back(c.finish());
    }
    {
        CheckBuilder c("Mix from theta(A (x) mixed ev) equals m*Id");
        for (Obj a : objs)
            for (Obj b : objs) {
                const Mor via = mix_via_theta(model, a, b);
                c.expect(via == mix_map(model, a, b), [&] { return ranks({a, b}); }, via);
            }
        report.checks.push_back(c.finish());
    }
    {
        CheckBuilder first("mix-distributivity triangle Mix = delta . (Id (x) Mix)");
        CheckBuilder second("mix-distributivity triangle Mix = (Mix par Id) . delta");
        for (Obj a : objs)
            for (Obj b : objs)
                for (Obj c : objs) {
                    const Mor lhs1 = mix_via_theta(model, tensor(a, b), c);
                    const Mor rhs1 =
                        compose(delta(model, a, b, c), tensor_mor(id(a), mix_via_theta(model, b, c)));
                    first.expect(lhs1 == rhs1, [&] { return ranks({a, b, c}); }, rhs1);
                    const Mor lhs2 = mix_via_theta(model, a, par(b, c));
                    const Mor rhs2 =
                        compose(par_mor(mix_via_theta(model, a, b), id(c)), delta(model, a, b, c));
                    second.expect(lhs2 == rhs2, [&] { return ranks({a, b, c}); }, rhs2);
                }
        report.checks.push_back(first.finish());
        report.checks.push_back(second.finish());
    }
    {
        CheckBuilder c("mixed symmetry tau . Mix = Mix . sigma");
        for (Obj a : objs)
            for (Obj b : objs) {
                const Mor m = mix_via_theta(model, a, b);
                const Mor via_tau = compose(tau(model, a, b), m);
                const Mor via_sigma = compose(mix_via_theta(model, b, a), sigma(model, a, b));
                c.expect(via_tau == via_sigma && via_tau == mixed_sigma(model, a, b),
                         [&] { return ranks({a, b}); }, via_tau);
            }
        report.checks.push_back(c.finish());
    }
    {
        CheckBuilder e("ev_{A^perp} = ev_A . sigma");
        CheckBuilder k("coev_{A^perp} = tau . coev_A");
        for (Obj a : objs) {
            const Mor ev_dual = ev(model, dual(a));
            const Mor ev_sym = compose(ev(model, a), sigma(model, dual(a), a));
            e.expect(ev_dual == ev_sym, [&] { return ranks({a}); }, ev_sym);
            const Mor coev_dual = coev(model, dual(a));
            const Mor coev_sym = compose(tau(model, a, dual(a)), coev(model, a));
            k.expect(coev_dual == coev_sym, [&] { return ranks({a}); }, coev_sym);
        }
        report.checks.push_back(e.finish());
        report.checks.push_back(k.finish());
    }
    {
        CheckBuilder fwd("theta agrees with (phi par B^perp) . delta . (A (x) coev)");
        CheckBuilder back("theta_inv agrees with (C par ev) . delta^R . (psi (x) B)");
        CheckBuilder bij("theta_inv . theta = Id");
        CheckBuilder tri("distributivity triangle theta(X (x) phi) = delta . (X (x) theta phi)");
        CheckBuilder nat_c("theta natural in C");
        CheckBuilder nat_a("theta_inv natural in A");
        for (Obj a : objs)
            for (Obj b : objs)
                for (Obj c : objs)
                    for (int sample = 0; sample < 2; ++sample) {
                        auto where = [&] { return ranks({a, b, c}); };
                        const Mor f = sampler.mor(model, tensor(a, b), c);
                        const Mor tf = theta(f, a, b, c);
                        const Mor tf_composite = theta_via_composite(f, a, b, c);
                        fwd.expect(tf == tf_composite, where, tf_composite);
                        const Mor g = sampler.mor(model, a, par(c, dual(b)));
                        const Mor tg = theta_inv(g, a, b, c);
                        const Mor tg_composite = theta_inv_via_composite(g, a, b, c);
                        back.expect(tg == tg_composite, where, tg_composite);
                        bij.expect(theta_inv(tf, a, b, c) == f && theta(tg, a, b, c) == g, where, f);

                        const Obj x = objs[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(max_rank)))];
                        const Mor lhs = theta(tensor_mor(id(x), f), tensor(x, a), b, tensor(x, c));
                        const Mor rhs = compose(delta(model, x, c, dual(b)), tensor_mor(id(x), tf));
                        tri.expect(lhs == rhs, where, rhs);

                        const Obj c2 = objs[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(max_rank)))];
                        const Mor phi = sampler.mor(model, c, c2);
                        const Mor nat_lhs = theta(compose(phi, f), a, b, c2);
                        const Mor nat_rhs = compose(par_mor(phi, id(dual(b))), tf);
                        nat_c.expect(nat_lhs == nat_rhs, where, nat_rhs);

                        const Obj a2 = objs[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(max_rank)))];
                        const Mor psi = sampler.mor(model, a2, a);
                        const Mor inv_lhs = theta_inv(compose(g, psi), a2, b, c);
                        const Mor inv_rhs = compose(tg, tensor_mor(psi, id(b)));
                        nat_a.expect(inv_lhs == inv_rhs, where, inv_rhs);
                    }
        for (auto* builder : {&fwd, &back, &bij, &tri, &nat_c, &nat_a})
            report.checks.push_back(builder->finish());
    }
    {
        CheckBuilder d("delta = theta(A (x) theta^{-1}(Id))");
        CheckBuilder dr("delta^R from delta and symmetries");
        for (Obj a : objs)
            for (Obj b : objs)
                for (Obj c : objs) {
                    const Mor via = delta_via_theta(model, a, b, c);
                    d.expect(via == delta(model, a, b, c), [&] { return ranks({a, b, c}); }, via);
                    const Mor via_r = delta_r_via_symmetries(model, a, b, c);
                    dr.expect(via_r == delta_r(model, a, b, c), [&] { return ranks({a, b, c}); },
                              via_r);
                }
        report.checks.push_back(d.finish());
        report.checks.push_back(dr.finish());
    }
    {
        CheckBuilder t("times-rule chains coincide (3 composition orders)");
        for (Obj a : objs)
            for (Obj b : objs)
                for (Obj c : objs)
                    for (Obj d : objs) {
                        const Mor expected = times_rule(model, a, b, c, d);
                        for (const Mor& chain : times_rule_chains(model, a, b, c, d))
                            t.expect(chain == expected, [&] { return ranks({a, b, c, d}); }, chain);
                    }
        report.checks.push_back(t.finish());
    }
    return report;
}

}  // namespace mixcat
