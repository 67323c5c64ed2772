#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "rzcert/unipoly.hpp"

// Small constructors for hand-written expected values.
inline rz::BigRational Q(std::string_view s) { return rz::BigRational::parse(s); }

inline rz::UniPoly P(std::initializer_list<long> ints) {
    std::vector<rz::BigRational> c;
    for (long v : ints) c.emplace_back(v);
    return rz::UniPoly::from_coeffs(std::move(c));
}

inline rz::UniPoly PQ(std::string_view canonical) { return rz::UniPoly::parse(canonical); }
