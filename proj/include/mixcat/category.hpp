#pragma once

// Strict *-autonomous Mix-categories presented as matrix categories.
//
// Objects are ranks; A (x) B and A par B both have rank(A) * rank(B) and share
// the row-major flattening, 1 and bottom have rank 1 and A^perp = A. The Mix
// structure is the single scalar m: mix = [[m]], Mix_{A,B} = m * Id.

#include "mixcat/matrix.hpp"
#include "mixcat/ring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mixcat {

using Entries = Matrix<Rational>;

class Model {
public:
    /// Throws InputError unless mix is an element of ring.
    Model(RingTag ring, Rational mix);

    static Model integers(long m) { return Model(RingTag::integers(), Rational(m)); }
    static Model rationals(long m) { return Model(RingTag::rationals(), Rational(m)); }

    const RingTag& ring() const { return ring_; }
    Scalar mix() const { return Scalar(ring_, mix_); }
    const Rational& mix_value() const { return mix_; }

    /// Mix-maps are invertible iff m is a unit of the ring.
    bool is_compact() const { return ring_.is_unit(mix_); }

    Scalar scalar(const Rational& x) const { return Scalar(ring_, x); }

    std::string to_string() const;

    friend bool operator==(const Model&, const Model&) = default;

private:
    RingTag ring_;
    Rational mix_;
};

struct Obj {
    std::size_t rank = 0;

    friend bool operator==(Obj, Obj) = default;
};

inline Obj unit_obj() { return Obj{1}; }
inline Obj bottom_obj() { return Obj{1}; }
inline Obj dual(Obj a) { return a; }
inline Obj tensor(Obj a, Obj b) { return Obj{a.rank * b.rank}; }
inline Obj par(Obj a, Obj b) { return Obj{a.rank * b.rank}; }

inline Obj tensor_all(const std::vector<Obj>& objs) {
    Obj out = unit_obj();
    for (Obj o : objs) out = tensor(out, o);
    return out;
}

inline Dims ranks_of(const std::vector<Obj>& objs) {
    Dims d;
    d.reserve(objs.size());
    for (Obj o : objs) d.push_back(o.rank);
    return d;
}

/// A morphism dom -> cod: a cod.rank x dom.rank matrix over the model's ring.
class Mor {
public:
    /// Throws InputError on a shape mismatch or an entry outside the ring.
    Mor(Model model, Obj dom, Obj cod, Entries entries);

    const Model& model() const { return model_; }
    Obj dom() const { return dom_; }
    Obj cod() const { return cod_; }
    const Entries& entries() const { return entries_; }
    Scalar at(Index row, Index col) const { return model_.scalar(entries_(row, col)); }

    bool is_zero() const;

    friend bool operator==(const Mor& a, const Mor& b);

private:
    Model model_;
    Obj dom_;
    Obj cod_;
    Entries entries_;
};

Mor identity(const Model& model, Obj a);
Mor zero_mor(const Model& model, Obj dom, Obj cod);
/// g . f
Mor compose(const Mor& g, const Mor& f);
Mor tensor_mor(const Mor& f, const Mor& g);
/// Same data as tensor_mor; only the formal role of the endpoints differs.
Mor par_mor(const Mor& f, const Mor& g);
Mor dual_mor(const Mor& f);
Mor scale(const Scalar& c, const Mor& f);

/// The symmetry dims[order[0]] (x) ... -> listing old factor order[i] at slot i.
Mor factor_symmetry(const Model& model, const std::vector<Obj>& factors,
                    const std::vector<std::size_t>& order);

enum class CanonicalKind {
    Sigma,        // sigma_{A,B}: A (x) B -> B (x) A
    Tau,          // tau_{A,B}: A par B -> B par A
    Coev,         // coev_A: 1 -> A par A^perp
    Ev,           // ev_A: A (x) A^perp -> bottom
    MixUnit,      // mix: bottom -> 1
    MixedEv,      // mixed evaluation mix . ev_A
    Mix,          // Mix_{A,B}: A (x) B -> A par B
    MixedSigma,   // tau . Mix = Mix . sigma
    Delta,        // delta_{A,B,C}: A (x) (B par C) -> (A (x) B) par C
    DeltaR,       // delta^R_{A,B,C}: (A par B) (x) C -> A par (B (x) C)
    TimesRule,    // (A par B) (x) (C par D) -> (A (x) C) par B par D
};

std::string to_string(CanonicalKind kind);
std::size_t arity(CanonicalKind kind);

/// Matrix of the named structure map. Throws InputError on an arity mismatch.
Mor canonical_map(const Model& model, CanonicalKind kind, const std::vector<Obj>& params);

Mor sigma(const Model& model, Obj a, Obj b);
Mor tau(const Model& model, Obj a, Obj b);
Mor coev(const Model& model, Obj a);
Mor ev(const Model& model, Obj a);
Mor mix_unit(const Model& model);
Mor mixed_ev(const Model& model, Obj a);
Mor mix_map(const Model& model, Obj a, Obj b);
Mor mixed_sigma(const Model& model, Obj a, Obj b);
Mor delta(const Model& model, Obj a, Obj b, Obj c);
Mor delta_r(const Model& model, Obj a, Obj b, Obj c);
Mor times_rule(const Model& model, Obj a, Obj b, Obj c, Obj d);

/// theta^{A,C}_B: Hom(A (x) B, C) -> Hom(A, C par B^perp),
/// theta(f)((c, b), a) = f(c, (a, b)).
Mor theta(const Mor& f, Obj a, Obj b, Obj c);
/// Inverse of theta: g: A -> C par B^perp to A (x) B -> C.
Mor theta_inv(const Mor& g, Obj a, Obj b, Obj c);

}  // namespace mixcat
