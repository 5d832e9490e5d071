#pragma once

#include "qfloer/chain/graded_space.hpp"

#include <optional>

namespace qfloer {

// Some H of the given degree with f = d_target H + H d_source, where
// f: source -> target and H: source -> target. Only entries of degree
// `h_degree` are allowed to be nonzero.
std::optional<RationalMatrix> solve_homotopy(const RationalMatrix& f, const GradedSpace& source,
                                             const RationalMatrix& d_source, const GradedSpace& target,
                                             const RationalMatrix& d_target, long long h_degree);

// Some x with d x = v.
std::optional<RationalVector> primitive(const RationalMatrix& d, const RationalVector& v);

// Some functional h with g = h d (g, h row vectors); used for cocycle
// checks on linear forms.
std::optional<RationalVector> coprimitive(const RationalMatrix& d, const RationalVector& g);

}  // namespace qfloer
