#include "qfloer/lattice.hpp"

#include "qfloer/errors.hpp"

namespace qfloer {

QLaurent sphere_self_pairing(long long n) {
  return QLaurent(1) + QLaurent::monomial(sign_power(n), 1);
}

QLaurent duality_transform(const QLaurent& f, long long n) {
  QLaurent g = QLaurent::q() * f.invert_variable();
  return n % 2 == 0 ? g : -g;
}

QLaurent twist_coefficient(long long n) { return QLaurent::monomial(sign_power(n + 1), -1); }

QLattice::QLattice(long long n, std::vector<std::string> labels, QMatrix pairing, std::vector<bool> spheres)
    : n_(n), labels_(std::move(labels)), pairing_(std::move(pairing)), spheres_(std::move(spheres)) {
  const std::size_t k = labels_.size();
  if (pairing_.rows() != k || pairing_.cols() != k) {
    throw SizeMismatch("pairing matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  if (spheres_.size() != k) throw SizeMismatch("sphere flags must have one entry per label");
  const QLaurent diag = sphere_self_pairing(n_);
  for (std::size_t i = 0; i < k; ++i) {
    if (spheres_[i] && !(pairing_(i, i) == diag)) {
      throw LatticeInvariantError("sphere " + labels_[i] + " has self-pairing " + pairing_(i, i).str() +
                                  ", expected " + diag.str());
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!(pairing_(j, i) == duality_transform(pairing_(i, j), n_))) {
        throw LatticeInvariantError("duality fails for (" + labels_[i] + ", " + labels_[j] + ")");
      }
    }
  }
}

LatticeVector QLattice::basis_vector(std::size_t i) const {
  if (i >= size()) throw SizeMismatch("basis index " + std::to_string(i) + " out of range");
  LatticeVector e(size());
  e[i] = 1;
  return e;
}

void validate_word(const QLattice& lat, const TwistWord& w) {
  for (const auto& letter : w) {
    if (!lat.is_sphere(letter.sphere)) {
      throw NotASphere("index " + std::to_string(letter.sphere) + " is not a sphere of the lattice");
    }
    if (letter.exponent != 1 && letter.exponent != -1) {
      throw SchemaError("twist exponent must be +1 or -1, got " + std::to_string(letter.exponent));
    }
  }
}

TwistWord inverse_word(const TwistWord& w) {
  TwistWord inv(w.rbegin(), w.rend());
  for (auto& letter : inv) letter.exponent = -letter.exponent;
  return inv;
}

QLaurent pair(const QLattice& lat, const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != lat.size() || y.size() != lat.size()) throw SizeMismatch("pair: vector length mismatch");
  QLaurent out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || lat.pairing()(i, j).is_zero()) continue;
      out += x[i] * y[j] * lat.pairing()(i, j);
    }
  }
  return out;
}

namespace {

void require_sphere(const QLattice& lat, std::size_t v) {
  if (!lat.is_sphere(v)) throw NotASphere("index " + std::to_string(v) + " is not a sphere of the lattice");
}

// I + c * e_v (x) pair(., e_v)
QMatrix rank_one_update(const QLattice& lat, std::size_t v, const QLaurent& c) {
  QMatrix m = QMatrix::identity(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) m(v, i) += c * lat.pairing()(i, v);
  return m;
}

}  // namespace

QMatrix twist_operator(const QLattice& lat, std::size_t v) {
  require_sphere(lat, v);
  return rank_one_update(lat, v, twist_coefficient(lat.n()));
}

QMatrix inverse_twist_operator(const QLattice& lat, std::size_t v) {
  require_sphere(lat, v);
  return rank_one_update(lat, v, QLaurent(-1));
}

LatticeVector apply_letter(const QLattice& lat, const TwistLetter& letter, const LatticeVector& x) {
  require_sphere(lat, letter.sphere);
  if (x.size() != lat.size()) throw SizeMismatch("apply_letter: vector length mismatch");
  QLaurent c = letter.exponent > 0 ? twist_coefficient(lat.n()) : QLaurent(-1);
  LatticeVector y = x;
  QLaurent along;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) along += x[i] * lat.pairing()(i, letter.sphere);
  }
  y[letter.sphere] += c * along;
  return y;
}

LatticeVector apply_word(const QLattice& lat, const TwistWord& w, const LatticeVector& x) {
  validate_word(lat, w);
  LatticeVector y = x;
  for (const auto& letter : w) y = apply_letter(lat, letter, y);
  return y;
}

QMatrix word_matrix(const QLattice& lat, const TwistWord& w) {
  validate_word(lat, w);
  QMatrix m = QMatrix::identity(lat.size());
  for (const auto& letter : w) {
    QMatrix t = letter.exponent > 0 ? twist_operator(lat, letter.sphere) : inverse_twist_operator(lat, letter.sphere);
    m = t * m;
  }
  return m;
}

QLattice build_Am(std::size_t m, long long n) {
  if (m < 1) throw SizeMismatch("build_Am needs at least one sphere");
  if (n != 3) {
    throw UnsupportedDimension("A_m weights are only pinned down in dimension 3, got n=" + std::to_string(n));
  }
  QMatrix p(m, m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("L" + std::to_string(i + 1));
    p(i, i) = sphere_self_pairing(n);
    if (i + 1 < m) {
      // HF^1(L_i, L_{i+1}) one-dimensional with weight 1/3.
      p(i, i + 1) = QLaurent::monomial(-1, Rational(1, 3));
      p(i + 1, i) = duality_transform(p(i, i + 1), n);
    }
  }
  return QLattice(n, std::move(labels), std::move(p), std::vector<bool>(m, true));
}

QLattice build_affine_A1(long long n) {
  if (n != 3) {
    throw UnsupportedDimension("affine A_1 weights are only pinned down in dimension 3, got n=" +
                               std::to_string(n));
  }
  QMatrix p(2, 2);
  p(0, 0) = p(1, 1) = sphere_self_pairing(n);
  // HF^k(L_0, L_1) one-dimensional for k = 1, 2 with weight k/3.
  p(0, 1) = QLaurent::monomial(-1, Rational(1, 3)) + QLaurent::monomial(1, Rational(2, 3));
  p(1, 0) = duality_transform(p(0, 1), n);
  return QLattice(n, {"L0", "L1"}, std::move(p), {true, true});
}

QLaurent les_defect(const QLattice& lat, std::size_t v, std::size_t i, std::size_t j) {
  require_sphere(lat, v);
  if (i >= lat.size() || j >= lat.size()) throw SizeMismatch("les_defect: index out of range");
  return twist_coefficient(lat.n()) * lat.pairing()(i, v) * lat.pairing()(v, j);
}

BraidReport braid_probe(const QLattice& lat, std::size_t i, std::size_t j) {
  QMatrix ti = twist_operator(lat, i);
  QMatrix tj = twist_operator(lat, j);
  BraidReport r;
  r.i = i;
  r.j = j;
  r.difference = ti * tj * ti - tj * ti * tj;
  r.braid_holds = r.difference.is_zero();
  r.commute = (ti * tj - tj * ti).is_zero();
  return r;
}

}  // namespace qfloer
