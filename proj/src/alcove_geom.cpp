#include "adlv/alcove_geom.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace adlv {

bool root_in_span(const RootDatum& R, int b, unsigned J) {
  const auto& c = R.coeffs(b);
  for (int k = 0; k < R.rank(); ++k)
    if (c[k] != 0 && !(J >> k & 1u)) return false;
  return true;
}

Parabolic make_parabolic(const RootDatum& R, int u, unsigned J) {
  Parabolic P;
  P.u = u;
  P.J = J;
  const int nr = R.num_roots();
  P.in_m.assign(nr, 0);
  P.in_n.assign(nr, 0);
  const int ui = R.winv(u);
  std::vector<int> mroots;
  for (int b = 0; b < nr; ++b) {
    int pre = R.wroot(ui, b);
    if (root_in_span(R, pre, J)) {
      P.in_m[b] = 1;
      mroots.push_back(b);
    } else if (R.positive(pre)) {
      P.in_n[b] = 1;
    }
  }
  P.levi = R.levi(mroots);
  P.to_levi_w.assign(R.wsize(), -1);
  for (int w = 0; w < P.levi->wsize(); ++w) P.to_levi_w[P.levi->parent_w(w)] = w;
  return P;
}

Parabolic standard_parabolic(const RootDatum& R, unsigned J) { return make_parabolic(R, 0, J); }

const std::vector<Parabolic>& semistandard_parabolics(const RootDatum& R) {
  static std::mutex mu;
  static std::map<const RootDatum*, std::pair<DatumPtr, std::vector<Parabolic>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&R);
  if (it != cache.end()) return it->second.second;
  std::vector<unsigned> Js;
  for (unsigned J = 0; J < (1u << R.rank()); ++J) Js.push_back(J);
  std::stable_sort(Js.begin(), Js.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) > __builtin_popcount(b); });
  std::vector<Parabolic> out;
  for (unsigned J : Js)
    for (int u = 0; u < R.wsize(); ++u) {
      bool minimal = true;
      for (int j = 0; j < R.rank(); ++j)
        if ((J >> j & 1u) && !R.positive(R.wroot(u, j))) minimal = false;
      if (minimal) out.push_back(make_parabolic(R, u, J));
    }
  auto& slot = cache[&R];
  slot = {R.shared_from_this(), std::move(out)};
  return slot.second;
}

std::string parabolic_label(const RootDatum& R, const Parabolic& P) {
  std::string s;
  if (P.u != 0) s += "^{" + finite_word_text(R, P.u) + "}";
  s += "P_{";
  bool first = true;
  for (int j = 0; j < R.rank(); ++j)
    if (P.J >> j & 1u) s += (first ? "" : ",") + std::to_string(j + 1), first = false;
  return s + "}";
}

IVec two_rho_N(const RootDatum& R, const Parabolic& P) {
  IVec r{};
  for (int b = 0; b < R.num_roots(); ++b)
    if (P.in_n[b])
      for (int k = 0; k < R.dim(); ++k) r[k] += R.root(b)[k];
  return r;
}

bool in_levi(const Parabolic& P, const Elt& x) { return P.to_levi_w[x.w] >= 0; }

Elt to_levi(const Parabolic& P, const Elt& x) {
  int lw = P.to_levi_w[x.w];
  if (lw < 0) throw std::invalid_argument("element is not in the Levi subgroup");
  return Elt{x.lam, lw};
}

Elt from_levi(const Parabolic& P, const Elt& x) { return Elt{x.lam, P.levi->parent_w(x.w)}; }

int length_M(const Parabolic& P, const Elt& x) { return length(*P.levi, to_levi(P, x)); }

LamElt eta_M(const Parabolic& P, const Elt& x) {
  if (!in_levi(P, x)) throw std::invalid_argument("eta_M: element is not in the Levi subgroup");
  return P.levi->kappa_of(x.lam);
}

LamElt eta_M_lattice(const Parabolic& P, const IVec& lam) { return P.levi->kappa_of(lam); }

AlcoveReport is_P_alcove(const RootDatum& R, const Elt& x, const Parabolic& P, bool strict) {
  AlcoveReport rep;
  rep.in_levi = in_levi(P, x);
  rep.verdict = rep.in_levi;
  for (int b = 0; b < R.num_roots(); ++b) {
    if (!P.in_n[b]) continue;
    int kx = k_alpha(R, b, x), ka = R.positive(b) ? 1 : 0;
    bool ok = strict ? kx > ka : kx >= ka;
    if (!ok) {
      rep.verdict = false;
      rep.witnesses.push_back({b, kx, ka});
    }
  }
  return rep;
}

bool acute_cone_contains(const RootDatum& R, const Elt& x, int w) {
  // intersection of the w-positive half-spaces containing a
  const int wi = R.winv(w);
  for (int b = 0; b < R.num_roots(); ++b)
    if (R.positive(R.wroot(wi, b)) && k_alpha(R, b, x) < (R.positive(b) ? 1 : 0)) return false;
  return true;
}

bool in_region_P(const RootDatum& R, const Elt& x, const Parabolic& P) {
  for (int b = 0; b < R.num_roots(); ++b)
    if (P.in_n[b] && k_alpha(R, b, x) < (R.positive(b) ? 1 : 0)) return false;
  return true;
}

bool in_acute_union(const RootDatum& R, const Elt& x, const Parabolic& P) {
  for (int w = 0; w < R.wsize(); ++w) {
    const int wi = R.winv(w);
    bool contains_N = true;
    for (int b = 0; b < R.num_roots() && contains_N; ++b)
      if (P.in_n[b] && !R.positive(R.wroot(wi, b))) contains_N = false;
    if (contains_N && acute_cone_contains(R, x, w)) return true;
  }
  return false;
}

bool is_shrunken(const RootDatum& R, const Elt& x) {
  for (int b = 0; b < R.num_pos(); ++b)
    if (k_alpha(R, b, x) == 1) return false;
  return true;
}

std::vector<int> eta2_all(const RootDatum& R, const Elt& x) {
  std::vector<int> out;
  for (int u = 0; u < R.wsize(); ++u) {
    bool ok = true;
    for (int b = 0; b < R.num_pos() && ok; ++b)
      if (k_alpha(R, R.wroot(u, b), x) < 1) ok = false;
    if (ok) out.push_back(u);
  }
  return out;
}

int eta2(const RootDatum& R, const Elt& x) {
  auto all = eta2_all(R, x);
  if (all.size() != 1) throw std::logic_error("eta2 is not single-valued");
  return all[0];
}

MinimalLevis minimal_levis(const RootDatum& R, const Elt& x) {
  const auto& ps = semistandard_parabolics(R);
  MinimalLevis out;
  out.m_minus.assign(R.num_roots(), 1);
  for (const auto& P : ps)
    if (in_levi(P, x))
      for (int b = 0; b < R.num_roots(); ++b) out.m_minus[b] &= P.in_m[b];
  bool found = false;
  for (const auto& P : ps)
    if (P.in_m == out.m_minus) found = true;
  if (!found) throw std::logic_error("intersection of Levi subgroups is not a Levi subgroup");
  int best = -1;
  for (const auto& P : ps) {
    bool contains = true;
    for (int b = 0; b < R.num_roots(); ++b)
      if (out.m_minus[b] && !P.in_m[b]) contains = false;
    if (!contains || !is_P_alcove(R, x, P).verdict) continue;
    int sz = static_cast<int>(std::count(P.in_m.begin(), P.in_m.end(), 1));
    if (best < 0 || sz < best) {
      best = sz;
      out.m_plus = P.in_m;
      out.p_plus.clear();
    }
    if (sz == best && P.in_m == out.m_plus) out.p_plus.push_back(P);
  }
  return out;
}

bool is_fundamental_P_alcove(const RootDatum& R, const Elt& x, const Parabolic& P) {
  return in_levi(P, x) && length_M(P, x) == 0 && is_P_alcove(R, x, P).verdict;
}

QVec average_translation(const RootDatum& R, const Elt& x) {
  const int n = R.worder(x.w);
  IVec sum{};
  IVec cur = x.lam;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < R.dim(); ++k) sum[k] += cur[k];
    cur = R.wact(x.w, cur);
  }
  QVec r;
  for (int k = 0; k < kMaxDim; ++k) r[k] = Q(sum[k], n);
  return r;
}

QVec nu_x(const RootDatum& R, const Elt& x, const Parabolic& P) {
  if (!in_levi(P, x) || length_M(P, x) != 0) throw std::invalid_argument("nu_x: element is not in Omega_M");
  return average_translation(R, x);
}

}  // namespace adlv
