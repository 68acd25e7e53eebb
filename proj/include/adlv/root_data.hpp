#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "adlv/lattice.hpp"
#include "adlv/types.hpp"

namespace adlv {

enum class Variant { SimplyConnected, Adjoint, GL };

Variant parse_variant(const std::string& s);
std::string variant_name(Variant v);

using WMat = std::array<int, kMaxDim * kMaxDim>;

// Root datum of a split reductive group on a lattice X_*(A) = Z^dim.
//
// Roots are stored as integer covectors, coroots as integer vectors.  Positive
// roots come first, ordered by height and then by lexicographically decreasing
// coefficient vector, so the simple roots occupy indices 0..rank-1; the
// negative of root b sits at b + num_pos().  Weyl group elements are ordered by
// length and then by their lexicographically smallest reduced word; index 0 is
// the identity.
//
// Affine generators: index 0 is the affine reflection of the first irreducible
// component, 1..rank are the finite simple reflections, rank+1.. the affine
// reflections of further components (only Levi sub-data have those).
class RootDatum : public std::enable_shared_from_this<RootDatum> {
 public:
  static std::shared_ptr<const RootDatum> build(const std::string& type, int rank, Variant v);

  // Sub-datum on the same lattice whose roots are the given parent roots
  // (closed and symmetric); its positive system is the set of parent-positive
  // roots among them.  The parent must outlive the result.
  std::shared_ptr<const RootDatum> levi(const std::vector<int>& parent_roots) const;

  const std::string& type() const { return type_; }
  int type_rank() const { return type_rank_; }
  Variant variant() const { return variant_; }
  std::string label() const;

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_pos() const { return npos_; }
  bool positive(int b) const { return b < npos_; }
  int neg(int b) const { return b < npos_ ? b + npos_ : b - npos_; }
  const IVec& root(int b) const { return roots_[b]; }
  const IVec& coroot(int b) const { return coroots_[b]; }
  const std::vector<int>& coeffs(int b) const { return coeffs_[b]; }
  int height(int b) const;
  int find_root(const IVec& covector) const;
  int cartan(int i, int j) const { return cartan_[i][j]; }

  int pair(int b, const IVec& lam) const {
    int s = 0;
    for (int i = 0; i < dim_; ++i) s += roots_[b][i] * lam[i];
    return s;
  }
  Q pair(int b, const QVec& lam) const;
  int pair_two_rho(const IVec& lam) const;
  Q pair_two_rho(const QVec& lam) const;
  const IVec& two_rho() const { return two_rho_; }

  // Weyl group
  int wsize() const { return static_cast<int>(wmat_.size()); }
  int wmul(int a, int b) const { return wmul_[a * wsize() + b]; }
  int winv(int a) const { return winv_[a]; }
  int wlen(int a) const { return wlen_[a]; }
  const std::vector<int>& wword(int a) const { return wword_[a]; }
  int wroot(int w, int b) const { return wroot_[w * num_roots() + b]; }
  const WMat& wmat(int w) const { return wmat_[w]; }
  IVec wact(int w, const IVec& lam) const;
  QVec wact(int w, const QVec& lam) const;
  int simple_refl(int i) const { return simple_refl_[i]; }
  int refl(int b) const { return refl_[b]; }
  int w0() const { return wsize() - 1; }
  int worder(int w) const;
  int find_w(const WMat& m) const;

  // affine structure
  int ncomp() const { return static_cast<int>(theta_.size()); }
  int ngen() const { return rank_ + ncomp(); }
  int theta(int c) const { return theta_[c]; }
  int comp_of_simple(int i) const { return comp_[i]; }
  bool gen_affine(int g) const { return g == 0 ? ncomp() > 0 : g > rank_; }
  int gen_simple(int g) const { return g - 1; }
  int gen_comp(int g) const { return g == 0 ? 0 : g - rank_; }
  Q bary(int b) const { return bary_[b]; }
  int coxeter_number() const { return coxeter_; }

  const LatticeQuotient& fundamental_group() const { return lambda_; }
  // X_* / (Q^vee + central cocharacters): finite
  const LatticeQuotient& center_quotient() const { return lambda_center_; }
  LamElt kappa_of(const IVec& lam) const { return lambda_.normal_form(lam); }

  const RootDatum* parent() const { return parent_; }
  int parent_w(int w) const { return parent_w_[w]; }
  int parent_root(int b) const { return parent_root_[b]; }

  // display coordinates
  int display_dim() const { return static_cast<int>(disp_.size()); }
  std::vector<Q> display(const IVec& lam) const;
  std::vector<Q> display(const QVec& lam) const;
  IVec from_display(const std::vector<Q>& v) const;  // throws if not in X_*
  QVec from_display_q(const std::vector<Q>& v) const;

 private:
  RootDatum() = default;
  void init(int dim, const std::vector<IVec>& simple_roots, const std::vector<IVec>& simple_coroots);

  std::string type_;
  int type_rank_ = 0;
  Variant variant_ = Variant::SimplyConnected;
  int dim_ = 0, rank_ = 0, npos_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<IVec> roots_, coroots_;
  std::vector<std::vector<int>> coeffs_;
  std::map<IVec, int> root_index_;
  IVec two_rho_{};

  std::vector<WMat> wmat_;
  std::map<WMat, int> wmat_index_;
  std::vector<int> wmul_, winv_, wlen_, wroot_, simple_refl_, refl_;
  std::vector<std::vector<int>> wword_;

  std::vector<int> comp_, theta_;
  std::vector<Q> bary_;
  int coxeter_ = 0;

  LatticeQuotient lambda_, lambda_center_;

  const RootDatum* parent_ = nullptr;
  std::vector<int> parent_w_, parent_root_;

  std::vector<std::vector<Q>> disp_;    // display_dim x dim
  std::vector<std::vector<Q>> undisp_;  // dim x display_dim, left inverse

  mutable std::mutex levi_mu_;
  mutable std::map<std::vector<bool>, std::shared_ptr<const RootDatum>> levi_cache_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

}  // namespace adlv
