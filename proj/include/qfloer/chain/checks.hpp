#pragma once

#include "qfloer/chain/chain_model.hpp"
#include "qfloer/chain/report.hpp"

#include <vector>

namespace qfloer {

// Each checker evaluates one structural identity on every basis tuple and
// records the nonzero residuals. Missing tensors raise MissingTensor.

// d^2 = 0 on the closed sector and (mu1)^2 = 0 on every CF(L0, L1).
Report check_differentials(const ChainModel& m);
Report check_mu2_leibniz(const ChainModel& m, const Objects& objs);   // {L0,L1,L2}
Report check_mu3_homotopy(const ChainModel& m, const Objects& objs);           // {L0,L1,L2,L3}
Report check_phi0_chain_map(const ChainModel& m, const Objects& objs);  // {L}
// phi0_dual(d z, a) + (-1)^|z| phi0_dual(z, mu1 a) = 0.
Report check_phi0_dual_chain_map(const ChainModel& m, const Objects& objs);  // {L}
Report check_phi1_homotopy(const ChainModel& m, const Objects& objs);          // {L0,L1}
Report check_phi2_homotopy(const ChainModel& m, const Objects& objs);          // {L0,L1,L2}
Report check_hvee(const ChainModel& m, const Objects& objs);          // {L0,L1}
Report check_kvee(const ChainModel& m, const Objects& objs);          // {L}
Report check_dilation(const ChainModel& m);
// d e = 0, delta e exact and delta^2 null-homotopic.
Report check_closed_unit(const ChainModel& m);
Report check_equivariance(const ChainModel& m, const Objects& objs);  // {L}
// Cocycle and cohomology-level unit conditions for e_L.
Report check_units(const ChainModel& m, const Objects& objs);  // {L}
// mu2(e_L1, .) and mu2(., e_L0) are homotopic to the identity on CF(L0, L1).
Report check_unit_homotopy(const ChainModel& m, const Objects& objs);  // {L0,L1}
Report check_tilde_phi1_chain_map(const ChainModel& m, const Objects& objs);  // {L0,L1}
// Tilde-phi1 is a derivation of mu2 on cohomology.
Report check_derivation(const ChainModel& m, const Objects& objs);  // {L0,L1,L2}

// Runs every checker on every object tuple. Checkers whose tensors are
// absent are reported as skipped; derived checkers are skipped when the
// model carries no equivariant structure.
std::vector<Report> check_all(const ChainModel& m);

}  // namespace qfloer
