#pragma once

// Independent reference computations for the tests. Everything here works on
// raw index tuples with nested loops, never through the library's reindexing
// helpers, so agreement is a real cross-check.

#include "mixcat/category.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace oracle {

using mixcat::Entries;
using mixcat::Index;
using mixcat::Rational;

inline std::size_t flat(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
    std::size_t f = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) f = f * dims[i] + idx[i];
    return f;
}

/// Odometer over all index tuples of dims; calls fn(tuple).
template <class Fn>
void for_each_index(const std::vector<std::size_t>& dims, Fn&& fn) {
    for (std::size_t d : dims)
        if (d == 0) return;
    std::vector<std::size_t> idx(dims.size(), 0);
    while (true) {
        fn(idx);
        std::size_t pos = dims.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < dims[pos]) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (dims.empty()) return;
    }
}

/// Contracts the hidden positions listed in `traced` of a carrier
/// A (x) U1..Uk -> B par U1..Uk. The result keeps the untraced hidden factors
/// in their original order: rows (b, kept u), cols (a, kept u).
inline Entries contract(const Entries& carrier, std::size_t a, std::size_t b,
                        const std::vector<std::size_t>& hidden, const std::vector<bool>& traced) {
    std::vector<std::size_t> kept_dims;
    for (std::size_t i = 0; i < hidden.size(); ++i)
        if (!traced[i]) kept_dims.push_back(hidden[i]);
    std::size_t kept = 1;
    for (auto d : kept_dims) kept *= d;
    Entries out = Entries::Zero(static_cast<Index>(b * kept), static_cast<Index>(a * kept));

    std::vector<std::size_t> full_dims{b};
    full_dims.insert(full_dims.end(), hidden.begin(), hidden.end());
    std::vector<std::size_t> col_dims{a};
    col_dims.insert(col_dims.end(), hidden.begin(), hidden.end());

    std::vector<std::size_t> all{b, a};
    for (auto h : hidden) all.push_back(h);  // row index of each hidden
    for (std::size_t i = 0; i < hidden.size(); ++i)
        if (!traced[i]) all.push_back(hidden[i]);  // column index of kept hidden
    for_each_index(all, [&](const std::vector<std::size_t>& t) {
        std::vector<std::size_t> row{t[0]}, col{t[1]}, out_row{t[0]}, out_col{t[1]};
        std::size_t extra = 2 + hidden.size();
        for (std::size_t i = 0; i < hidden.size(); ++i) {
            const std::size_t u = t[2 + i];
            row.push_back(u);
            if (traced[i]) {
                col.push_back(u);
            } else {
                const std::size_t v = t[extra++];
                col.push_back(v);
                out_row.push_back(u);
                out_col.push_back(v);
            }
        }
        std::vector<std::size_t> out_row_dims{b}, out_col_dims{a};
        out_row_dims.insert(out_row_dims.end(), kept_dims.begin(), kept_dims.end());
        out_col_dims.insert(out_col_dims.end(), kept_dims.begin(), kept_dims.end());
        out(static_cast<Index>(flat(out_row, out_row_dims)), static_cast<Index>(flat(out_col, out_col_dims))) +=
            carrier(static_cast<Index>(flat(row, full_dims)), static_cast<Index>(flat(col, col_dims)));
    });
    return out;
}

inline bool integral(const Entries& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (denominator(m(i, j)) != 1) return false;
    return true;
}

enum class Outcome { Defined, Undefined, Ambiguous };

struct Provisional {
    Outcome outcome;
    Entries value;
};

/// Provisional trace in the integer model, contracting the hidden factors in
/// the given order. Stage i requires the carrier, divided by m^i and contracted
/// over the first i factors of the order, to be divisible by m.
inline Provisional provisional(const Entries& carrier, std::size_t a, std::size_t b,
                               const std::vector<std::size_t>& hidden,
                               const std::vector<std::size_t>& order, long m) {
    const std::size_t k = hidden.size();
    std::vector<bool> traced(k, false);
    if (m == 0) {
        if (k == 0) return {Outcome::Defined, carrier};
        if (!carrier.isZero()) return {Outcome::Undefined, {}};
        if (hidden[order.back()] > 0 && a * b > 0) return {Outcome::Ambiguous, {}};
        return {Outcome::Defined, Entries::Zero(static_cast<Index>(b), static_cast<Index>(a))};
    }
    Rational scale(1);
    for (std::size_t i = 0; i < k; ++i) {
        Entries stage = contract(carrier, a, b, hidden, traced) * scale;
        stage /= Rational(m);
        if (!integral(stage)) return {Outcome::Undefined, {}};
        traced[order[i]] = true;
        scale /= Rational(m);
    }
    return {Outcome::Defined, contract(carrier, a, b, hidden, traced) * scale};
}

}  // namespace oracle

namespace oracle {

inline Entries kron(const Entries& a, const Entries& b) {
    Entries out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// sigma_{A,B}: basis (a, b) of A (x) B goes to (b, a) of B (x) A.
inline Entries swap(std::size_t ra, std::size_t rb) {
    Entries out = Entries::Zero(static_cast<Index>(ra * rb), static_cast<Index>(ra * rb));
    for (std::size_t a = 0; a < ra; ++a)
        for (std::size_t b = 0; b < rb; ++b) out(static_cast<Index>(b * ra + a), static_cast<Index>(a * rb + b)) = 1;
    return out;
}

/// theta(f)[(c, b), a] = f[c, (a, b)].
inline Entries theta(const Entries& f, std::size_t ra, std::size_t rb, std::size_t rc) {
    Entries out(static_cast<Index>(rc * rb), static_cast<Index>(ra));
    for (std::size_t a = 0; a < ra; ++a)
        for (std::size_t b = 0; b < rb; ++b)
            for (std::size_t c = 0; c < rc; ++c)
                out(static_cast<Index>(c * rb + b), static_cast<Index>(a)) = f(static_cast<Index>(c), static_cast<Index>(a * rb + b));
    return out;
}

/// (a, b, c, d) -> (a, c, b, d) on the flattened index.
inline Entries middle_swap(std::size_t ra, std::size_t rb, std::size_t rc, std::size_t rd) {
    const std::size_t n = ra * rb * rc * rd;
    Entries out = Entries::Zero(static_cast<Index>(n), static_cast<Index>(n));
    for_each_index({ra, rb, rc, rd}, [&](const std::vector<std::size_t>& t) {
        out(static_cast<Index>(flat({t[0], t[2], t[1], t[3]}, {ra, rc, rb, rd})),
            static_cast<Index>(flat(t, {ra, rb, rc, rd}))) = 1;
    });
    return out;
}

}  // namespace oracle

namespace oracle {

/// Carrier of q . p with hidden part (U, V); u and v are the flattened hidden ranks.
inline Entries loop_compose(const Entries& phi, const Entries& psi, std::size_t a, std::size_t b, std::size_t c,
                            std::size_t u, std::size_t v) {
    Entries out = Entries::Zero(static_cast<Index>(c * u * v), static_cast<Index>(a * u * v));
    for_each_index({c, u, v, a, u, v, b}, [&](const std::vector<std::size_t>& t) {
        const auto [ci, uo, vo, ai, ui, vi, bi] = std::tuple{t[0], t[1], t[2], t[3], t[4], t[5], t[6]};
        out(static_cast<Index>(flat({ci, uo, vo}, {c, u, v})), static_cast<Index>(flat({ai, ui, vi}, {a, u, v}))) +=
            phi(static_cast<Index>(bi * u + uo), static_cast<Index>(ai * u + ui)) *
            psi(static_cast<Index>(ci * v + vo), static_cast<Index>(bi * v + vi));
    });
    return out;
}

/// Carrier of p (x) q: (A (x) C) (x) U (x) V -> (B (x) D) par U par V.
inline Entries loop_tensor(const Entries& phi, const Entries& psi, std::size_t a, std::size_t b, std::size_t c,
                           std::size_t d, std::size_t u, std::size_t v) {
    Entries out(static_cast<Index>(b * d * u * v), static_cast<Index>(a * c * u * v));
    for_each_index({b, d, u, v, a, c, u, v}, [&](const std::vector<std::size_t>& t) {
        out(static_cast<Index>(flat({t[0], t[1], t[2], t[3]}, {b, d, u, v})),
            static_cast<Index>(flat({t[4], t[5], t[6], t[7]}, {a, c, u, v}))) =
            phi(static_cast<Index>(t[0] * u + t[2]), static_cast<Index>(t[4] * u + t[6])) *
            psi(static_cast<Index>(t[1] * v + t[3]), static_cast<Index>(t[5] * v + t[7]));
    });
    return out;
}

/// Carrier of alpha p, whose i-th hidden factor is the old factor alpha(i).
inline Entries hidden_symmetry(const Entries& phi, std::size_t a, std::size_t b, const std::vector<std::size_t>& hidden,
                               const std::vector<std::size_t>& alpha) {
    Entries out(phi.rows(), phi.cols());
    std::vector<std::size_t> moved(hidden.size());
    for (std::size_t i = 0; i < hidden.size(); ++i) moved[i] = hidden[alpha[i]];
    std::vector<std::size_t> dims{b, a};
    dims.insert(dims.end(), hidden.begin(), hidden.end());
    dims.insert(dims.end(), hidden.begin(), hidden.end());
    const std::size_t k = hidden.size();
    for_each_index(dims, [&](const std::vector<std::size_t>& t) {
        std::vector<std::size_t> row{t[0]}, col{t[1]}, new_row{t[0]}, new_col{t[1]};
        for (std::size_t i = 0; i < k; ++i) {
            row.push_back(t[2 + i]);
            col.push_back(t[2 + k + i]);
        }
        for (std::size_t i = 0; i < k; ++i) {
            new_row.push_back(row[1 + alpha[i]]);
            new_col.push_back(col[1 + alpha[i]]);
        }
        std::vector<std::size_t> old_r{b}, old_c{a}, new_r{b}, new_c{a};
        old_r.insert(old_r.end(), hidden.begin(), hidden.end());
        old_c.insert(old_c.end(), hidden.begin(), hidden.end());
        new_r.insert(new_r.end(), moved.begin(), moved.end());
        new_c.insert(new_c.end(), moved.begin(), moved.end());
        out(static_cast<Index>(flat(new_row, new_r)), static_cast<Index>(flat(new_col, new_c))) =
            phi(static_cast<Index>(flat(row, old_r)), static_cast<Index>(flat(col, old_c)));
    });
    return out;
}

}  // namespace oracle
