#pragma once

#include "mixcat/loop.hpp"
#include "mixcat/random.hpp"

#include <initializer_list>
#include <vector>

namespace testing_support {

using namespace mixcat;

inline Entries entries(std::initializer_list<std::initializer_list<Rational>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    Entries m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline Mor mor(const Model& model, std::size_t dom, std::size_t cod,
               std::initializer_list<std::initializer_list<Rational>> rows) {
    return Mor(model, Obj{dom}, Obj{cod}, entries(rows));
}

inline std::vector<Obj> objs(std::initializer_list<std::size_t> ranks) {
    std::vector<Obj> out;
    for (auto r : ranks) out.push_back(Obj{r});
    return out;
}

inline Loop random_loop(const Model& model, Sampler& s, std::size_t max_rank, std::size_t max_hidden,
                        long bound = 3, std::size_t min_rank = 0) {
    auto rank = [&] { return static_cast<std::size_t>(s.uniform(static_cast<long>(min_rank), static_cast<long>(max_rank))); };
    const Obj a{rank()}, b{rank()};
    std::vector<Obj> hidden;
    const auto k = static_cast<std::size_t>(s.uniform(0, static_cast<long>(max_hidden)));
    for (std::size_t i = 0; i < k; ++i) hidden.push_back(Obj{rank()});
    const Obj u = tensor_all(hidden);
    return Loop(a, b, hidden, s.mor(model, tensor(a, u), par(b, u), bound));
}

}  // namespace testing_support
