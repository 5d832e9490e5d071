#pragma once

#include "qfloer/chain/chain_model.hpp"

namespace qfloer {

// Inserts a zero tensor for every operation and object tuple that is not
// yet defined.
void define_all(ChainModel& m);

// One object V with CF(V, V) = K[x]/x^(k+1), deg x^i = i n / k, zero
// differential, mu2 the product and mu3 = 0. The closed sector has basis
// y (-1), e (0), b (1) with d = 0 and delta(b) = e. phi0(e) = e_V,
// phi0(b) = 0, phi1(b, x^i) = (i/k) x^i, phi0_dual(e, x^k) = 1,
// e_V^v(x^k) = 1, c_V = 0, and phi2, hvee, kvee vanish.
// Requires k = 1 or n/k even. Basis labels are e, f for k = 1 and
// 1, h, h2, ... otherwise.
//
// With acyclic_pair, CF(V, V) also contains p (degree n) and q (degree
// n + 1) with mu1(p) = q, e_V acting as identity on them, all other
// products with them zero, and phi1(b, .) = 1/2 on both. Cohomology is
// unchanged, but hvee, kvee, mu3 and phi2 gain slots of the right degree.
ChainModel truncated_polynomial_model(long long n, long long k, bool acyclic_pair = false);

// k = 1 case: CF(V, V) = H(S^n).
ChainModel sphere_model(long long n, bool acyclic_pair = false);

}  // namespace qfloer
