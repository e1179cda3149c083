#pragma once

#include <initializer_list>
#include <vector>

#include "setconj/polyhedron.hpp"

namespace setconj::testing {

inline RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

inline RatVec rvq(std::initializer_list<const char*> xs) {
    RatVec v;
    for (auto* x : xs) v.push_back(parse_rat(x));
    return v;
}

inline Constraint le(std::initializer_list<int> normal, int bound) {
    return Constraint{rv(normal), Rat(bound), false};
}

inline Constraint lt(std::initializer_list<int> normal, int bound) {
    return Constraint{rv(normal), Rat(bound), true};
}

inline Polyhedron poly(std::size_t dim, std::vector<Constraint> cs) {
    return Polyhedron(dim, std::move(cs));
}

} // namespace setconj::testing
