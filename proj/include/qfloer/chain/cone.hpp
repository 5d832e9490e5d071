#pragma once

#include "qfloer/chain/chain_model.hpp"
#include "qfloer/chain/report.hpp"
#include "qfloer/equivariant_table.hpp"

#include <string>

namespace qfloer {

// T(L0, L1) = CF(L0, L1) + Hom(CF(V, L0), CF(V, L1))[-1] relative to V.
// Coordinates: CF(L0, L1) first, then E_{w,v} (v in CF(V, L0), w in
// CF(V, L1)) at position cf_dim + w * source.dim() + v. E_{w,v} has natural
// degree |w| - |v| and sits in degree |w| - |v| + 1 of T.
struct ConeComplex {
  std::string v;
  Objects pair;
  GradedSpace cf;      // CF(L0, L1)
  GradedSpace source;  // CF(V, L0)
  GradedSpace target;  // CF(V, L1)
  GradedSpace space;
  RationalMatrix differential;

  std::size_t hom_index(std::size_t w, std::size_t v) const { return cf.dim() + w * source.dim() + v; }
  // Split an element of T into its CF part and its Hom part as a matrix.
  std::pair<RationalVector, RationalMatrix> split(const RationalVector& x) const;
  RationalVector join(const RationalVector& a, const RationalMatrix& alpha) const;
};

// Throws IdentityError if the assembled differential does not square to zero.
ConeComplex build_cone(const ChainModel& m, const std::string& v, const Objects& pair);

enum class Side { left, right };

// left: triple {L0, L1, L2}, lhs in CF(L1, L2), rhs in T(L0, L1).
// right: triple {L0, L1, L2}, lhs in T(L1, L2), rhs in CF(L0, L1).
// The result lies in T(L0, L2).
RationalVector cone_mu2(const ChainModel& m, const std::string& v, Side side, const Objects& triple,
                        const RationalVector& lhs, const RationalVector& rhs);

// Chain-map property of cone_mu2 on every basis pair, for both sides.
Report check_cone_mu2(const ChainModel& m, const std::string& v, const Objects& triple);

// phi1_T(x) - mu2_T(c_L1, x) + mu2_T(x, c_L0) on T(L0, L1). Requires
// c_V = 0 and phi0_V(b) = 0 (NotEquivariant otherwise) and equivariant
// L0, L1; throws IdentityError if the result does not commute with mu1_T.
MultiOp build_tilde_phi1T(const ChainModel& m, const std::string& v, const Objects& pair);

// Table of H(T(L0, L1)) with the induced tilde phi1_T.
EquivariantTable cone_table(const ChainModel& m, const std::string& v, const Objects& pair);

// Table of Hom(HF(V, L0), HF(V, L1)) with alpha -> Phi1 alpha - alpha Phi0,
// graded by natural degree.
EquivariantTable hom_table(const ChainModel& m, const std::string& v, const Objects& pair);

}  // namespace qfloer
