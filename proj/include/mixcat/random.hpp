#pragma once

#include "mixcat/category.hpp"

#include <cstdint>
#include <random>

namespace mixcat {

/// splitmix64 step; turns (seed, case index) into independent case seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Entries matrix(Index rows, Index cols, long bound) {
        Entries m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) m(i, j) = Rational(uniform(-bound, bound));
        return m;
    }

    /// Integer-entried morphism; integers lie in every supported ring.
    Mor mor(const Model& model, Obj dom, Obj cod, long bound = 3) {
        return Mor(model, dom, cod,
                   matrix(static_cast<Index>(cod.rank), static_cast<Index>(dom.rank), bound));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace mixcat
