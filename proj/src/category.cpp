#include "mixcat/category.hpp"

namespace mixcat {

Model::Model(RingTag ring, Rational mix) : ring_(std::move(ring)), mix_(std::move(mix)) {
    if (!ring_.contains(mix_)) {
        throw InputError("mix scalar " + format_rational(mix_) + " is not an element of " +
                         ring_.to_string());
    }
}

std::string Model::to_string() const {
    return "(" + ring_.to_string() + ", m=" + format_rational(mix_) + ")";
}

Mor::Mor(Model model, Obj dom, Obj cod, Entries entries)
    : model_(std::move(model)), dom_(dom), cod_(cod), entries_(std::move(entries)) {
    if (entries_.rows() != static_cast<Index>(cod_.rank) ||
        entries_.cols() != static_cast<Index>(dom_.rank)) {
        throw InputError("morphism " + std::to_string(dom_.rank) + " -> " +
                         std::to_string(cod_.rank) + " has a " + std::to_string(entries_.rows()) +
                         "x" + std::to_string(entries_.cols()) + " matrix");
    }
    for (Index i = 0; i < entries_.rows(); ++i) {
        for (Index j = 0; j < entries_.cols(); ++j) {
            if (!model_.ring().contains(entries_(i, j))) {
                throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") = " + format_rational(entries_(i, j)) +
                                 " is not an element of " + model_.ring().to_string());
            }
        }
    }
}

bool Mor::is_zero() const {
    for (Index i = 0; i < entries_.rows(); ++i)
        for (Index j = 0; j < entries_.cols(); ++j)
            if (entries_(i, j) != 0) return false;
    return true;
}

bool operator==(const Mor& a, const Mor& b) {
    return a.model_ == b.model_ && a.dom_ == b.dom_ && a.cod_ == b.cod_ &&
           a.entries_ == b.entries_;
}

namespace {

void require_same_model(const Mor& f, const Mor& g) {
    if (f.model() != g.model()) {
        throw InputError("model mismatch: " + f.model().to_string() + " vs " +
                         g.model().to_string());
    }
}

Mor from_source(const Model& model, Obj obj, const std::vector<std::size_t>& source) {
    return Mor(model, obj, obj, permutation_matrix<Rational>(source));
}

void require_arity(CanonicalKind kind, const std::vector<Obj>& params) {
    if (params.size() != arity(kind)) {
        throw InputError(to_string(kind) + " takes " + std::to_string(arity(kind)) +
                         " objects, got " + std::to_string(params.size()));
    }
}

}  // namespace

Mor identity(const Model& model, Obj a) {
    const auto n = static_cast<Index>(a.rank);
    return Mor(model, a, a, Entries::Identity(n, n));
}

Mor zero_mor(const Model& model, Obj dom, Obj cod) {
    return Mor(model, dom, cod,
               Entries::Zero(static_cast<Index>(cod.rank), static_cast<Index>(dom.rank)));
}

Mor compose(const Mor& g, const Mor& f) {
    require_same_model(f, g);
    if (f.cod() != g.dom()) {
        throw InputError("cannot compose: codomain rank " + std::to_string(f.cod().rank) +
                         " vs domain rank " + std::to_string(g.dom().rank));
    }
    return Mor(f.model(), f.dom(), g.cod(), product(g.entries(), f.entries()));
}

Mor tensor_mor(const Mor& f, const Mor& g) {
    require_same_model(f, g);
    return Mor(f.model(), tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
               kron(f.entries(), g.entries()));
}

Mor par_mor(const Mor& f, const Mor& g) {
    require_same_model(f, g);
    return Mor(f.model(), par(f.dom(), g.dom()), par(f.cod(), g.cod()),
               kron(f.entries(), g.entries()));
}

Mor dual_mor(const Mor& f) {
    return Mor(f.model(), dual(f.cod()), dual(f.dom()), f.entries().transpose());
}

Mor scale(const Scalar& c, const Mor& f) {
    if (c.ring() != f.model().ring()) throw InputError("scalar ring differs from model ring");
    return Mor(f.model(), f.dom(), f.cod(), c.value() * f.entries());
}

Mor factor_symmetry(const Model& model, const std::vector<Obj>& factors,
                    const std::vector<std::size_t>& order) {
    const Dims dims = ranks_of(factors);
    return from_source(model, tensor_all(factors), factor_permutation(dims, order));
}

std::string to_string(CanonicalKind kind) {
    switch (kind) {
        case CanonicalKind::Sigma: return "sigma";
        case CanonicalKind::Tau: return "tau";
        case CanonicalKind::Coev: return "coev";
        case CanonicalKind::Ev: return "ev";
        case CanonicalKind::MixUnit: return "mix";
        case CanonicalKind::MixedEv: return "mixedEv";
        case CanonicalKind::Mix: return "Mix";
        case CanonicalKind::MixedSigma: return "mixedSigma";
        case CanonicalKind::Delta: return "delta";
        case CanonicalKind::DeltaR: return "deltaR";
        case CanonicalKind::TimesRule: return "timesRule";
    }
    return "?";
}

std::size_t arity(CanonicalKind kind) {
    switch (kind) {
        case CanonicalKind::MixUnit: return 0;
        case CanonicalKind::Coev:
        case CanonicalKind::Ev:
        case CanonicalKind::MixedEv: return 1;
        case CanonicalKind::Sigma:
        case CanonicalKind::Tau:
        case CanonicalKind::Mix:
        case CanonicalKind::MixedSigma: return 2;
        case CanonicalKind::Delta:
        case CanonicalKind::DeltaR: return 3;
        case CanonicalKind::TimesRule: return 4;
    }
    return 0;
}

Mor canonical_map(const Model& model, CanonicalKind kind, const std::vector<Obj>& p) {
    require_arity(kind, p);
    switch (kind) {
        case CanonicalKind::Sigma: return sigma(model, p[0], p[1]);
        case CanonicalKind::Tau: return tau(model, p[0], p[1]);
        case CanonicalKind::Coev: return coev(model, p[0]);
        case CanonicalKind::Ev: return ev(model, p[0]);
        case CanonicalKind::MixUnit: return mix_unit(model);
        case CanonicalKind::MixedEv: return mixed_ev(model, p[0]);
        case CanonicalKind::Mix: return mix_map(model, p[0], p[1]);
        case CanonicalKind::MixedSigma: return mixed_sigma(model, p[0], p[1]);
        case CanonicalKind::Delta: return delta(model, p[0], p[1], p[2]);
        case CanonicalKind::DeltaR: return delta_r(model, p[0], p[1], p[2]);
        case CanonicalKind::TimesRule: return times_rule(model, p[0], p[1], p[2], p[3]);
    }
    throw InputError("unknown canonical map");
}

Mor sigma(const Model& model, Obj a, Obj b) { return factor_symmetry(model, {a, b}, {1, 0}); }

Mor tau(const Model& model, Obj a, Obj b) { return factor_symmetry(model, {a, b}, {1, 0}); }

Mor coev(const Model& model, Obj a) {
    const auto n = static_cast<Index>(a.rank);
    Entries column = Entries::Zero(n * n, 1);
    for (Index i = 0; i < n; ++i) column(i * n + i, 0) = 1;
    return Mor(model, unit_obj(), par(a, dual(a)), std::move(column));
}

Mor ev(const Model& model, Obj a) {
    const Mor c = coev(model, a);
    return Mor(model, tensor(a, dual(a)), bottom_obj(), c.entries().transpose());
}

Mor mix_unit(const Model& model) {
    Entries m(1, 1);
    m(0, 0) = model.mix_value();
    return Mor(model, bottom_obj(), unit_obj(), std::move(m));
}

Mor mixed_ev(const Model& model, Obj a) { return compose(mix_unit(model), ev(model, a)); }

Mor mix_map(const Model& model, Obj a, Obj b) {
    return scale(model.mix(), identity(model, tensor(a, b)));
}

Mor mixed_sigma(const Model& model, Obj a, Obj b) {
    return scale(model.mix(), sigma(model, a, b));
}

Mor delta(const Model& model, Obj a, Obj b, Obj c) {
    return identity(model, tensor(a, par(b, c)));
}

Mor delta_r(const Model& model, Obj a, Obj b, Obj c) {
    return identity(model, tensor(par(a, b), c));
}

Mor times_rule(const Model& model, Obj a, Obj b, Obj c, Obj d) {
    return factor_symmetry(model, {a, b, c, d}, {0, 2, 1, 3});
}

Mor theta(const Mor& f, Obj a, Obj b, Obj c) {
    if (f.dom() != tensor(a, b) || f.cod() != c) {
        throw InputError("theta expects f: A (x) B -> C with the declared ranks");
    }
    const auto ra = static_cast<Index>(a.rank);
    const auto rb = static_cast<Index>(b.rank);
    const auto rc = static_cast<Index>(c.rank);
    Entries out(rc * rb, ra);
    for (Index ci = 0; ci < rc; ++ci)
        for (Index bi = 0; bi < rb; ++bi)
            for (Index ai = 0; ai < ra; ++ai) out(ci * rb + bi, ai) = f.entries()(ci, ai * rb + bi);
    return Mor(f.model(), a, par(c, dual(b)), std::move(out));
}

Mor theta_inv(const Mor& g, Obj a, Obj b, Obj c) {
    if (g.dom() != a || g.cod() != par(c, dual(b))) {
        throw InputError("theta_inv expects g: A -> C par B^perp with the declared ranks");
    }
    const auto ra = static_cast<Index>(a.rank);
    const auto rb = static_cast<Index>(b.rank);
    const auto rc = static_cast<Index>(c.rank);
    Entries out(rc, ra * rb);
    for (Index ci = 0; ci < rc; ++ci)
        for (Index bi = 0; bi < rb; ++bi)
            for (Index ai = 0; ai < ra; ++ai) out(ci, ai * rb + bi) = g.entries()(ci * rb + bi, ai);
    return Mor(g.model(), tensor(a, b), c, std::move(out));
}

}  // namespace mixcat
