#pragma once

#include "adlv/types.hpp"

namespace adlv {

// Smith-type diagonalisation U*A*V = diag(d_0..d_{k-1},0..) of an integer d x n
// matrix (columns are generators of a sublattice L of Z^d).  Only the row
// transform is kept; it is enough to read off Z^d / L.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;
  LatticeQuotient(int dim, const std::vector<IVec>& generators);

  int dim() const { return dim_; }
  // number of coordinates of a normal form
  int size() const { return static_cast<int>(kept_.size()); }
  // modulus of each normal-form coordinate, 0 for a free coordinate
  const std::vector<int>& moduli() const { return moduli_; }
  bool finite() const;
  long long order() const;  // -1 if infinite

  LamElt normal_form(const IVec& v) const;
  LamElt add(const LamElt& a, const LamElt& b) const;
  LamElt neg(const LamElt& a) const;
  LamElt reduce(const LamElt& a) const;
  // some lattice vector with the given normal form
  IVec lift(const LamElt& a) const;
  // all elements of a finite quotient, in lexicographic order of coordinates
  std::vector<LamElt> elements() const;

 private:
  int dim_ = 0;
  std::vector<std::vector<long long>> U_, Uinv_;
  std::vector<int> kept_;    // rows of U that survive (diag != 1)
  std::vector<int> moduli_;  // per kept row
};

using QMat = std::vector<std::vector<Q>>;

// Some solution of A c = b over Q, or nothing if inconsistent.
bool solve_q(const QMat& A, const std::vector<Q>& b, std::vector<Q>& c);
int rank_q(QMat A);

}  // namespace adlv
