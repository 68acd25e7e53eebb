#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/affine_weyl.hpp"

namespace adlv {

// integer polynomial in q, coefficient of q^i at index i, no trailing zeros
using Poly = std::vector<long long>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
int poly_deg(const Poly& p);  // -1 for the zero polynomial
std::string poly_str(const Poly& p);

// element of the Iwahori-Hecke algebra of W~ over Z[q], in the basis T_x
struct HeckeElt {
  std::unordered_map<Elt, Poly, EltHash> terms;

  static HeckeElt basis(const Elt& x);
  void add(const Elt& x, const Poly& p);
  Poly coeff(const Elt& x) const;
  // terms sorted by element for deterministic output
  std::vector<std::pair<Elt, Poly>> sorted() const;
  bool operator==(const HeckeElt& o) const;
};

HeckeElt mul_right_gen(const RootDatum& R, const HeckeElt& h, int g);
HeckeElt mul_right_basis(const RootDatum& R, const HeckeElt& h, const Elt& z);
HeckeElt hecke_mul(const RootDatum& R, const HeckeElt& a, const HeckeElt& b);
std::string hecke_str(const RootDatum& R, const HeckeElt& h);

// products T_x T_z for a fixed x, memoized along prefixes of reduced words of z
class PrefixProducts {
 public:
  PrefixProducts(const RootDatum& R, const Elt& x) : R_(R), x_(x) {}
  const HeckeElt& times(const Elt& z);
  size_t memo_size() const { return memo_.size(); }

 private:
  const RootDatum& R_;
  Elt x_;
  std::unordered_map<Elt, HeckeElt, EltHash> memo_;
};

// coefficient C(x,y,z) of T_z in T_x T_y, and its q-degree (nothing if zero)
Poly structure_constant(const RootDatum& R, const Elt& x, const Elt& y, const Elt& z);
std::optional<int> structure_deg(const RootDatum& R, const Elt& x, const Elt& y, const Elt& z);

// support of T_{x_1} ... T_{x_r}; computed without coefficients, which is
// exact because all structure constants are nonnegative
std::set<Elt> double_coset_product_support(const RootDatum& R, const std::vector<Elt>& xs);
// right multiplication of a support set by T_z
std::set<Elt> support_mul_right(const RootDatum& R, const std::set<Elt>& s, const Elt& z);

}  // namespace adlv
