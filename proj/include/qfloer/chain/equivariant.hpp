#pragma once

#include "qfloer/chain/chain_model.hpp"
#include "qfloer/equivariant_table.hpp"

#include <map>

namespace qfloer {

// Phi~1(a) = phi1(b, a) - mu2(c_L1, a) + mu2(a, c_L0) on CF(L0, L1).
// Throws NotEquivariant unless mu1 c_L = phi0_L(b) for both objects, and
// IdentityError if the result fails to commute with mu1.
MultiOp build_tilde_phi1(const ChainModel& m, const Objects& pair);
// The same formula without the equivariance and chain-map checks.
MultiOp assemble_tilde_phi1(const ChainModel& m, const Objects& pair);
// Throws NotEquivariant unless c_L is a degree-0 solution of mu1 c_L = phi0_L(b).
void require_equivariant(const ChainModel& m, const std::string& label);

// phi~2(a2, a1) = phi2(b, a2, a1) - mu3(c_L2, a2, a1) + mu3(a2, c_L1, a1)
// - mu3(a2, a1, c_L0) on {L0, L1, L2}.
MultiOp build_tilde_phi2(const ChainModel& m, const Objects& triple);

// Cohomology of a graded complex.
class Cohomology {
 public:
  Cohomology() = default;
  Cohomology(GradedSpace chains, RationalMatrix differential);

  const GradedSpace& chains() const { return chains_; }
  const RationalMatrix& differential() const { return d_; }
  // Basis of H: one class per representative, labelled by the chain label
  // of its leading coordinate.
  const GradedSpace& space() const { return space_; }
  // Representative cycles, aligned with space().
  const std::vector<RationalVector>& representatives() const { return reps_; }
  std::map<long long, std::size_t> dims() const { return space_.dims(); }

  bool is_cycle(const RationalVector& v) const;
  bool is_boundary(const RationalVector& v) const;
  // Coordinates of the class of a cycle in the representative basis.
  // Throws IdentityError if v is not a cycle.
  RationalVector class_of(const RationalVector& v) const;

  // Induced map on cohomology of a degree-preserving chain map
  // chains -> target.chains(). Throws IdentityError if the map does not
  // send cycles to cycles and boundaries to boundaries.
  RationalMatrix induced(const RationalMatrix& chain_map, const Cohomology& target) const;
  RationalMatrix induced(const RationalMatrix& chain_endomorphism) const { return induced(chain_endomorphism, *this); }

 private:
  GradedSpace chains_;
  RationalMatrix d_;
  GradedSpace space_;
  std::vector<RationalVector> reps_;
  struct Slice {
    std::vector<RationalVector> boundaries;  // basis of im d in this degree
    std::vector<std::size_t> classes;        // indices into reps_
  };
  std::map<long long, Slice> slices_;
};

struct FloerCohomology {
  Cohomology h;
  RationalMatrix endomorphism;                    // induced Phi~1 on space()
  std::map<long long, RationalMatrix> per_degree;  // blocks of endomorphism
};

// HF(L0, L1) with the induced Phi~1.
FloerCohomology cohomology(const ChainModel& m, const Objects& pair);

// Bigraded table of HF(L0, L1) and its generalized eigenvalues.
EquivariantTable floer_table(const ChainModel& m, const Objects& pair);

// Splits a block-diagonal endomorphism of a graded space into its
// per-degree blocks.
std::map<long long, RationalMatrix> degree_blocks(const GradedSpace& space, const RationalMatrix& endo);

}  // namespace qfloer
