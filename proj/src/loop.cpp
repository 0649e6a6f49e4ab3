#include "mixcat/loop.hpp"

#include <algorithm>
#include <numeric>

namespace mixcat {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x : images_) {
        if (x >= images_.size() || seen[x]) throw InputError("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t k) {
    std::vector<std::size_t> images(k);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
}

Permutation Permutation::reversal(std::size_t k) {
    std::vector<std::size_t> images(k);
    for (std::size_t i = 0; i < k; ++i) images[i] = k - 1 - i;
    return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(std::size_t k) {
    std::vector<Permutation> out;
    std::vector<std::size_t> images = identity(k).images_;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation product(const Permutation& alpha, const Permutation& beta) {
    if (alpha.size() != beta.size()) throw InputError("permutation sizes differ");
    std::vector<std::size_t> images(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) images[i] = beta[alpha[i]];
    return Permutation(std::move(images));
}

Loop::Loop(Obj a, Obj b, std::vector<Obj> hidden, Mor carrier)
    : a_(a), b_(b), hidden_(std::move(hidden)), carrier_(std::move(carrier)) {
    const Obj u = tensor_all(hidden_);
    if (carrier_.dom() != tensor(a_, u) || carrier_.cod() != par(b_, u)) {
        throw InputError("carrier " + std::to_string(carrier_.dom().rank) + " -> " +
                         std::to_string(carrier_.cod().rank) + " does not match A (x) U -> B par U = " +
                         std::to_string(tensor(a_, u).rank) + " -> " + std::to_string(par(b_, u).rank));
    }
}

Loop make_loop(const Model& model, Obj a, Obj b, std::vector<Obj> hidden, const Mor& carrier) {
    if (carrier.model() != model) throw InputError("carrier model differs from loop model");
    return Loop(a, b, std::move(hidden), carrier);
}

namespace {

void require_same_model(const Loop& p, const Loop& q) {
    if (p.model() != q.model()) throw InputError("loops live in different models");
}

std::vector<Obj> concat(const std::vector<Obj>& x, const std::vector<Obj>& y) {
    std::vector<Obj> out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

Entries identity_entries(Obj o) {
    const auto n = static_cast<Index>(o.rank);
    return Entries::Identity(n, n);
}

}  // namespace

Loop loop_compose(const Loop& q, const Loop& p) {
    require_same_model(p, q);
    if (p.target() != q.source()) throw InputError("loop endpoints do not match for composition");
    const Obj u = p.hidden_object();
    const Obj v = q.hidden_object();
    const Obj b = p.target();
    const Obj c = q.target();

    // (phi (x) Id_V): A (x) U (x) V -> (B par U) (x) V
    Entries m = kron(p.carrier().entries(), identity_entries(v));
    // rho: (B par U) (x) V -> (B (x) V) par U
    m = permute_rows(m, factor_permutation(Dims{b.rank, u.rank, v.rank}, Dims{0, 2, 1}));
    // (psi par Id_U): -> C par V par U
    m = product(kron(q.carrier().entries(), identity_entries(u)), m);
    // Id_C par tau: -> C par U par V
    m = permute_rows(m, factor_permutation(Dims{c.rank, v.rank, u.rank}, Dims{0, 2, 1}));

    const Obj dom = tensor(tensor(p.source(), u), v);
    const Obj cod = par(par(c, u), v);
    return Loop(p.source(), c, concat(p.hidden(), q.hidden()), Mor(p.model(), dom, cod, std::move(m)));
}

Loop loop_tensor(const Loop& p, const Loop& q) {
    require_same_model(p, q);
    const Obj a = p.source(), b = p.target(), u = p.hidden_object();
    const Obj c = q.source(), d = q.target(), v = q.hidden_object();

    Entries m = kron(p.carrier().entries(), q.carrier().entries());
    // precompose with Id_A (x) sigma_{C,U} (x) Id_V: A (x) C (x) U (x) V -> A (x) U (x) C (x) V
    m = permute_cols(m, factor_permutation(Dims{a.rank, c.rank, u.rank, v.rank}, Dims{0, 2, 1, 3}));
    // (B par U) (x) (D par V) -> (B (x) D) par U par V
    m = permute_rows(m, factor_permutation(Dims{b.rank, u.rank, d.rank, v.rank}, Dims{0, 2, 1, 3}));

    const Obj uv = tensor(u, v);
    return Loop(tensor(a, c), tensor(b, d), concat(p.hidden(), q.hidden()),
                Mor(p.model(), tensor(tensor(a, c), uv), par(tensor(b, d), uv), std::move(m)));
}

Loop loop_dual(const Loop& p) {
    std::vector<Obj> hidden;
    for (Obj o : p.hidden()) hidden.push_back(dual(o));
    return Loop(dual(p.target()), dual(p.source()), std::move(hidden), dual_mor(p.carrier()));
}

Loop loop_par(const Loop& p, const Loop& q) {
    return loop_dual(loop_tensor(loop_dual(p), loop_dual(q)));
}

Loop postcompose(const Mor& g, const Loop& p) {
    if (g.dom() != p.target()) throw InputError("postcompose: g.dom differs from loop target");
    const Mor widened = par_mor(g, identity(p.model(), p.hidden_object()));
    return Loop(p.source(), g.cod(), p.hidden(), compose(widened, p.carrier()));
}

Loop precompose(const Loop& p, const Mor& f) {
    if (f.cod() != p.source()) throw InputError("precompose: f.cod differs from loop source");
    const Mor widened = tensor_mor(f, identity(p.model(), p.hidden_object()));
    return Loop(f.dom(), p.target(), p.hidden(), compose(p.carrier(), widened));
}

Loop multiply(const Mor& f, const Loop& p) {
    const Obj u = p.hidden_object();
    const Mor distribute = delta(p.model(), f.cod(), p.target(), u);
    return Loop(tensor(f.dom(), p.source()), tensor(f.cod(), p.target()), p.hidden(),
                compose(distribute, tensor_mor(f, p.carrier())));
}

Loop hide(const Loop& p, Obj a_prime, Obj v) {
    if (v.rank == 0 || a_prime.rank * v.rank != p.source().rank ||
        p.target().rank % v.rank != 0) {
        throw InputError("hide: ranks " + std::to_string(p.source().rank) + ", " +
                         std::to_string(p.target().rank) + " do not factor through V of rank " +
                         std::to_string(v.rank));
    }
    const Obj b_prime{p.target().rank / v.rank};
    std::vector<Obj> hidden{v};
    hidden.insert(hidden.end(), p.hidden().begin(), p.hidden().end());
    return Loop(a_prime, b_prime, std::move(hidden), p.carrier());
}

Loop hidden_symmetry(const Loop& p, const Permutation& alpha) {
    if (alpha.size() != p.hidden_length()) {
        throw InputError("hidden symmetry of size " + std::to_string(alpha.size()) +
                         " on a hidden part of length " + std::to_string(p.hidden_length()));
    }
    const std::size_t k = alpha.size();
    std::vector<Obj> permuted(k);
    Dims order(k + 1);
    order[0] = 0;
    for (std::size_t i = 0; i < k; ++i) {
        permuted[i] = p.hidden()[alpha[i]];
        order[i + 1] = alpha[i] + 1;
    }
    Dims dom_dims{p.source().rank};
    Dims cod_dims{p.target().rank};
    for (Obj o : p.hidden()) {
        dom_dims.push_back(o.rank);
        cod_dims.push_back(o.rank);
    }
    // phi . sigma_{alpha^{-1}} gathers columns; tau_alpha . (...) gathers rows.
    Entries m = gather_cols(p.carrier().entries(), factor_permutation(dom_dims, order));
    m = permute_rows(m, factor_permutation(cod_dims, order));
    return Loop(p.source(), p.target(), std::move(permuted),
                Mor(p.model(), p.carrier().dom(), p.carrier().cod(), std::move(m)));
}

Loop unhide_head(const Loop& p, std::size_t head_len) {
    if (head_len > p.hidden_length()) throw InputError("head longer than the hidden part");
    std::vector<Obj> head(p.hidden().begin(), p.hidden().begin() + static_cast<long>(head_len));
    std::vector<Obj> tail(p.hidden().begin() + static_cast<long>(head_len), p.hidden().end());
    const Obj h = tensor_all(head);
    return Loop(tensor(p.source(), h), par(p.target(), h), std::move(tail), p.carrier());
}

Loop yanking_loop(const Model& model, Obj a) {
    return Loop(a, a, {a}, mixed_sigma(model, a, a));
}

}  // namespace mixcat
