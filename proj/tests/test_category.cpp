#include "mixcat/coherence.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mixcat;
using namespace testing_support;

TEST_CASE("identity, composition and tensor examples") {
    const Model z = Model::integers(2);
    CHECK(identity(z, Obj{2}).entries() == entries({{1, 0}, {0, 1}}));
    CHECK(identity(z, Obj{0}).entries().size() == 0);
    CHECK(compose(mor(z, 1, 1, {{2}}), mor(z, 1, 1, {{3}})).entries() == entries({{6}}));
    CHECK(compose(mor(z, 2, 1, {{1, 1}}), mor(z, 1, 2, {{1}, {1}})).entries() == entries({{2}}));
    CHECK_THROWS_AS(compose(mor(z, 2, 1, {{1, 1}}), mor(z, 1, 1, {{1}})), InputError);
    CHECK_THROWS_AS(compose(mor(Model::integers(3), 1, 1, {{1}}), mor(z, 1, 1, {{1}})), InputError);
    CHECK(tensor_mor(mor(z, 1, 1, {{2}}), mor(z, 1, 1, {{3}})).entries() == entries({{6}}));
    CHECK(tensor_mor(identity(z, Obj{2}), identity(z, Obj{3})) == identity(z, Obj{6}));
    CHECK(tensor_mor(mor(z, 1, 2, {{1}, {0}}), mor(z, 1, 1, {{1}})).entries() == entries({{1}, {0}}));
    CHECK(dual_mor(mor(z, 2, 2, {{1, 2}, {3, 4}})).entries() == entries({{1, 3}, {2, 4}}));
    CHECK_THROWS_AS(Mor(z, Obj{1}, Obj{1}, entries({{Rational(1, 2)}})), InputError);
    CHECK_THROWS_AS(Mor(z, Obj{2}, Obj{1}, entries({{1}})), InputError);
    CHECK(compose(zero_mor(z, Obj{0}, Obj{2}), zero_mor(z, Obj{3}, Obj{0})) == zero_mor(z, Obj{3}, Obj{2}));
}

TEST_CASE("structure maps") {
    const Model z2 = Model::integers(2);
    CHECK(coev(z2, Obj{2}).entries() == entries({{1}, {0}, {0}, {1}}));
    CHECK(ev(z2, Obj{2}).entries() == entries({{1, 0, 0, 1}}));
    CHECK(mix_unit(z2).entries() == entries({{2}}));
    CHECK(mix_map(z2, Obj{2}, Obj{3}) == scale(z2.scalar(2), identity(z2, Obj{6})));
    CHECK(mix_via_theta(z2, Obj{2}, Obj{3}) == mix_map(z2, Obj{2}, Obj{3}));
    CHECK(mixed_sigma(z2, Obj{1}, Obj{1}).entries() == entries({{2}}));
    CHECK(mixed_sigma(z2, Obj{2}, Obj{3}) == compose(mix_map(z2, Obj{3}, Obj{2}), sigma(z2, Obj{2}, Obj{3})));
    CHECK(mixed_ev(z2, Obj{2}) == scale(z2.scalar(2), ev(z2, Obj{2})));
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b) {
            CHECK(sigma(z2, Obj{a}, Obj{b}).entries() == oracle::swap(a, b));
            CHECK(tau(z2, Obj{a}, Obj{b}).entries() == oracle::swap(a, b));
            CHECK(delta(z2, Obj{a}, Obj{b}, Obj{2}) == identity(z2, Obj{a * b * 2}));
            CHECK(delta_r(z2, Obj{a}, Obj{b}, Obj{2}) == identity(z2, Obj{a * b * 2}));
        }
    CHECK(times_rule(z2, Obj{2}, Obj{3}, Obj{2}, Obj{1}).entries() == oracle::middle_swap(2, 3, 2, 1));
    CHECK(canonical_map(z2, CanonicalKind::Coev, objs({3})) == coev(z2, Obj{3}));
    CHECK(canonical_map(z2, CanonicalKind::TimesRule, objs({1, 2, 2, 1})) == times_rule(z2, Obj{1}, Obj{2}, Obj{2}, Obj{1}));
    CHECK_THROWS_AS(canonical_map(z2, CanonicalKind::Sigma, objs({1})), InputError);
    CHECK_THROWS_AS(canonical_map(z2, CanonicalKind::Delta, objs({1, 2})), InputError);
}

TEST_CASE("theta is the stated reindexing and matches its composite") {
    const Model z = Model::integers(3);
    CHECK(theta(mor(z, 2, 1, {{5, 7}}), unit_obj(), Obj{2}, unit_obj()).entries() == entries({{5}, {7}}));
    for (std::uint64_t c = 0; c < 60; ++c) {
        Sampler s(c);
        const Obj a{static_cast<std::size_t>(s.uniform(0, 3))}, b{static_cast<std::size_t>(s.uniform(0, 3))},
            cc{static_cast<std::size_t>(s.uniform(0, 3))};
        const Mor f = s.mor(z, tensor(a, b), cc);
        const Mor t = theta(f, a, b, cc);
        CHECK(t.entries() == oracle::theta(f.entries(), a.rank, b.rank, cc.rank));
        CHECK(t == theta_via_composite(f, a, b, cc));
        CHECK(theta_inv(t, a, b, cc) == f);
        CHECK(theta_inv_via_composite(t, a, b, cc) == f);
    }
    const Mor id = identity(z, Obj{6});
    CHECK(theta(id, Obj{2}, Obj{3}, Obj{6}) == theta_via_composite(id, Obj{2}, Obj{3}, Obj{6}));
    CHECK_THROWS_AS(theta(identity(z, Obj{2}), Obj{1}, Obj{3}, Obj{2}), InputError);
}

TEST_CASE("functoriality and duality on random matrices") {
    const Model q = Model::rationals(1);
    for (std::uint64_t c = 0; c < 100; ++c) {
        Sampler s(derive_seed(3, c));
        auto r = [&] { return Obj{static_cast<std::size_t>(s.uniform(0, 3))}; };
        const Obj a = r(), b = r(), cc = r(), d = r(), e = r(), f = r();
        const Mor f1 = s.mor(q, a, b), f2 = s.mor(q, b, cc), g1 = s.mor(q, d, e), g2 = s.mor(q, e, f);
        CHECK(tensor_mor(compose(f2, f1), compose(g2, g1)) == compose(tensor_mor(f2, g2), tensor_mor(f1, g1)));
        CHECK(tensor_mor(f1, g1).entries() == oracle::kron(f1.entries(), g1.entries()));
        CHECK(dual_mor(dual_mor(f1)) == f1);
        CHECK(dual_mor(compose(f2, f1)) == compose(dual_mor(f1), dual_mor(f2)));
        CHECK(par_mor(f1, g1) == tensor_mor(f1, g1));
    }
}

TEST_CASE("times rule chains coincide") {
    const Model z = Model::integers(2);
    const auto chains = times_rule_chains(z, Obj{2}, Obj{1}, Obj{3}, Obj{2});
    REQUIRE(chains.size() >= 3);
    for (const Mor& c : chains) CHECK(c == times_rule(z, Obj{2}, Obj{1}, Obj{3}, Obj{2}));
}

TEST_CASE("coherence validator") {
    for (const Model& m : {Model::integers(2), Model::rationals(1), Model::integers(0)}) {
        const ValidationReport r = validate_coherence(m, 2);
        CHECK(r.all_passed());
        CHECK(r.checks.size() >= 10);
    }
    CHECK_THROWS_AS(validate_coherence(Model::integers(2), 0), InputError);
}
