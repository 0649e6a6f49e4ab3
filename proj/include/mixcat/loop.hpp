#pragma once

// Loops p = (phi; U1, ..., Uk): A ~> B with carrier
// phi: A (x) U1 (x) ... (x) Uk -> B par U1 par ... par Uk.
// A loop with an empty hidden part is an ordinary morphism.

#include "mixcat/category.hpp"

#include <cstddef>
#include <vector>

namespace mixcat {

class Permutation {
public:
    /// images[i] is alpha(i); throws InputError unless a bijection of {0..k-1}.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t k);
    static Permutation reversal(std::size_t k);
    /// All of S_k in lexicographic order of the image lists.
    static std::vector<Permutation> all(std::size_t k);

    std::size_t size() const { return images_.size(); }
    std::size_t operator[](std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }
    bool is_identity() const;

    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// The permutation acting on loops as "beta, then alpha":
/// hidden_symmetry(p, product(alpha, beta)) = hidden_symmetry(hidden_symmetry(p, beta), alpha).
/// As a map, i -> beta(alpha(i)).
Permutation product(const Permutation& alpha, const Permutation& beta);

class Loop {
public:
    /// Throws InputError if the carrier shape disagrees with A, B and hidden.
    Loop(Obj a, Obj b, std::vector<Obj> hidden, Mor carrier);

    static Loop from_morphism(const Mor& f) { return Loop(f.dom(), f.cod(), {}, f); }

    const Model& model() const { return carrier_.model(); }
    Obj source() const { return a_; }
    Obj target() const { return b_; }
    const std::vector<Obj>& hidden() const { return hidden_; }
    std::size_t hidden_length() const { return hidden_.size(); }
    Obj hidden_object() const { return tensor_all(hidden_); }
    const Mor& carrier() const { return carrier_; }

    friend bool operator==(const Loop&, const Loop&) = default;

private:
    Obj a_;
    Obj b_;
    std::vector<Obj> hidden_;
    Mor carrier_;
};

Loop make_loop(const Model& model, Obj a, Obj b, std::vector<Obj> hidden, const Mor& carrier);

/// q . p for p: A ~> B and q: B ~> C; hidden part (U of p, V of q).
Loop loop_compose(const Loop& q, const Loop& p);
/// p (x) q: A (x) C ~> B (x) D; hidden part (U, V).
Loop loop_tensor(const Loop& p, const Loop& q);
/// p^perp = (phi^perp; U^perp): B^perp ~> A^perp.
Loop loop_dual(const Loop& p);
/// (p^perp (x) q^perp)^perp
Loop loop_par(const Loop& p, const Loop& q);

/// g . p = ((g par U) . phi; U)
Loop postcompose(const Mor& g, const Loop& p);
/// p . f = (phi . (f (x) U); U)
Loop precompose(const Loop& p, const Mor& f);
/// f (x) p = (delta . (f (x) phi); U)
Loop multiply(const Mor& f, const Loop& p);

/// Hid_V for p: A' (x) V ~> B' par V; B' is p.B / V. The factorization
/// A = A' (x) V is caller data. Throws InputError if ranks do not factor.
Loop hide(const Loop& p, Obj a_prime, Obj v);

/// alpha p = ((Id par tau_alpha) . phi . (Id (x) sigma_{alpha^{-1}}); alpha U)
/// with (alpha U)_i = U_{alpha(i)}.
Loop hidden_symmetry(const Loop& p, const Permutation& alpha);

/// The loop (phi; tail) : A (x) head ~> B par head viewing the first
/// `head_len` hidden objects as part of the endpoints.
Loop unhide_head(const Loop& p, std::size_t head_len);

/// The Yanking loop (mixed sigma_{A,A}; A): A ~> A.
Loop yanking_loop(const Model& model, Obj a);

}  // namespace mixcat
