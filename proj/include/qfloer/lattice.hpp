#pragma once

#include "qfloer/dense_matrix.hpp"
#include "qfloer/qlaurent.hpp"

#include <string>
#include <vector>

namespace qfloer {

using QMatrix = DenseMatrix<QLaurent>;
using LatticeVector = std::vector<QLaurent>;

// Free module over Q[q^Q] spanned by Lagrangian classes, with the
// q-intersection pairing extended bilinearly. Entry (i, j) of the pairing
// is L_i .q L_j.
class QLattice {
 public:
  // Throws SizeMismatch on inconsistent sizes and LatticeInvariantError when
  // a sphere diagonal or the duality relation fails.
  QLattice(long long n, std::vector<std::string> labels, QMatrix pairing, std::vector<bool> spheres);

  long long n() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const QMatrix& pairing() const { return pairing_; }
  const std::vector<bool>& spheres() const { return spheres_; }
  bool is_sphere(std::size_t i) const { return i < spheres_.size() && spheres_[i]; }

  LatticeVector basis_vector(std::size_t i) const;

 private:
  long long n_;
  std::vector<std::string> labels_;
  QMatrix pairing_;
  std::vector<bool> spheres_;
};

// 1 + (-1)^n q, the self-pairing of a sphere.
QLaurent sphere_self_pairing(long long n);

// f(q) -> (-1)^n q f(1/q); pairing(j, i) is this transform of pairing(i, j).
QLaurent duality_transform(const QLaurent& f, long long n);

// (-1)^{n+1} q^{-1}, the coefficient in the twist formula.
QLaurent twist_coefficient(long long n);

struct TwistLetter {
  std::size_t sphere;
  int exponent;  // +1 or -1
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
  friend auto operator<=>(const TwistLetter&, const TwistLetter&) = default;
};
using TwistWord = std::vector<TwistLetter>;

// Throws NotASphere for indices that are out of range or not twistable, and
// SchemaError for exponents other than +1 / -1.
void validate_word(const QLattice& lat, const TwistWord& w);

// Letters reversed and exponents negated.
TwistWord inverse_word(const TwistWord& w);

QLaurent pair(const QLattice& lat, const LatticeVector& x, const LatticeVector& y);

// Matrices acting on coordinate column vectors.
QMatrix twist_operator(const QLattice& lat, std::size_t v);
QMatrix inverse_twist_operator(const QLattice& lat, std::size_t v);

// Single letter applied directly, without forming the matrix.
LatticeVector apply_letter(const QLattice& lat, const TwistLetter& letter, const LatticeVector& x);

// The first letter of w acts first.
LatticeVector apply_word(const QLattice& lat, const TwistWord& w, const LatticeVector& x);
QMatrix word_matrix(const QLattice& lat, const TwistWord& w);

// Chain of m spheres; weights are pinned only in dimension 3.
QLattice build_Am(std::size_t m, long long n);
QLattice build_affine_A1(long long n = 3);

// tau_v(L_i) .q L_j - L_i .q L_j.
QLaurent les_defect(const QLattice& lat, std::size_t v, std::size_t i, std::size_t j);

struct BraidReport {
  std::size_t i = 0;
  std::size_t j = 0;
  QMatrix difference;  // T_i T_j T_i - T_j T_i T_j
  bool braid_holds = false;
  bool commute = false;  // T_i T_j == T_j T_i
};

BraidReport braid_probe(const QLattice& lat, std::size_t i, std::size_t j);

}  // namespace qfloer
