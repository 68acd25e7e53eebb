#include "adlv/sigma_classes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adlv {

namespace {

bool is_dominant(const RootDatum& R, const QVec& v) {
  for (int i = 0; i < R.rank(); ++i)
    if (R.pair(i, v) < Q(0)) return false;
  return true;
}

bool integral(const QVec& v) {
  for (const auto& x : v)
    if (x.denominator() != 1) return false;
  return true;
}

IVec to_ivec(const QVec& v) {
  IVec r{};
  for (int i = 0; i < kMaxDim; ++i) r[i] = static_cast<int>(v[i].numerator());
  return r;
}

Q abs_q(const Q& x) { return x < Q(0) ? -x : x; }

Q det_q(QMat A) {
  const int n = static_cast<int>(A.size());
  Q d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (A[i][c] != Q(0)) {
        p = i;
        break;
      }
    if (p < 0) return Q(0);
    if (p != c) std::swap(A[p], A[c]), d = -d;
    d *= A[c][c];
    for (int i = c + 1; i < n; ++i) {
      Q f = A[i][c] / A[c][c];
      for (int j = c; j < n; ++j) A[i][j] -= f * A[c][j];
    }
  }
  return d;
}

int kappa_window(const RootDatum& R) { return std::max(1, R.dim() - 1); }

}  // namespace

QVec dominant_conjugate(const RootDatum& R, const QVec& v) {
  for (int w = 0; w < R.wsize(); ++w) {
    QVec u = R.wact(w, v);
    if (is_dominant(R, u)) return u;
  }
  throw std::logic_error("no dominant conjugate");
}

std::vector<QVec> weyl_orbit(const RootDatum& R, const QVec& v) {
  std::set<QVec> seen;
  std::vector<QVec> out;
  for (int w = 0; w < R.wsize(); ++w) {
    QVec u = R.wact(w, v);
    if (seen.insert(u).second) out.push_back(u);
  }
  return out;
}

QVec levi_average(const RootDatum& L, const IVec& lam) {
  IVec sum{};
  for (int w = 0; w < L.wsize(); ++w) {
    IVec u = L.wact(w, lam);
    for (int k = 0; k < L.dim(); ++k) sum[k] += u[k];
  }
  QVec r;
  for (int k = 0; k < kMaxDim; ++k) r[k] = Q(sum[k], L.wsize());
  return r;
}

std::vector<IVec> central_characters(const RootDatum& R) {
  // null space of the simple coroot matrix, scaled to integers
  const int d = R.dim();
  QMat A(R.rank(), std::vector<Q>(d));
  for (int i = 0; i < R.rank(); ++i)
    for (int k = 0; k < d; ++k) A[i][k] = Q(R.coroot(i)[k]);
  std::vector<IVec> out;
  // row-reduce and read off the null space
  QMat Rm = A;
  std::vector<int> piv;
  {
    int r = 0;
    for (int c = 0; c < d && r < static_cast<int>(Rm.size()); ++c) {
      int p = -1;
      for (int i = r; i < static_cast<int>(Rm.size()); ++i)
        if (Rm[i][c] != Q(0)) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(Rm[p], Rm[r]);
      Q inv = Q(1) / Rm[r][c];
      for (auto& v : Rm[r]) v *= inv;
      for (int i = 0; i < static_cast<int>(Rm.size()); ++i)
        if (i != r && Rm[i][c] != Q(0)) {
          Q f = Rm[i][c];
          for (int j = 0; j < d; ++j) Rm[i][j] -= f * Rm[r][j];
        }
      piv.push_back(c);
      ++r;
    }
  }
  for (int fcol = 0; fcol < d; ++fcol) {
    if (std::find(piv.begin(), piv.end(), fcol) != piv.end()) continue;
    std::vector<Q> v(d, Q(0));
    v[fcol] = Q(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -Rm[i][fcol];
    long long l = 1;
    for (const auto& x : v) l = std::lcm(l, x.denominator());
    IVec c{};
    for (int k = 0; k < d; ++k) c[k] = static_cast<int>((v[k] * Q(l)).numerator());
    out.push_back(c);
  }
  return out;
}

QVec newton_point(const RootDatum& R, const Elt& x) { return dominant_conjugate(R, average_translation(R, x)); }

std::vector<IVec> basic_lifts(const RootDatum& L, const QVec& nu) {
  for (int b = 0; b < L.num_roots(); ++b)
    if (L.pair(b, nu) != Q(0)) throw std::invalid_argument("basic_lifts: vector is not central in the Levi");
  const int k = L.rank();
  std::vector<IVec> out;
  if (k == 0) {
    if (integral(nu)) out.push_back(to_ivec(nu));
    return out;
  }
  QMat C(k, std::vector<Q>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) C[i][j] = Q(L.cartan(i, j));
  const long long D = std::llabs(det_q(C).numerator());
  std::set<LamElt> seen;
  std::vector<int> a(k, 0);
  while (true) {
    std::vector<Q> rhs(k), c;
    for (int i = 0; i < k; ++i) rhs[i] = Q(a[i]);
    solve_q(C, rhs, c);
    QVec lam = nu;
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < L.dim(); ++t) lam[t] += c[j] * Q(L.coroot(j)[t]);
    if (integral(lam)) {
      IVec il = to_ivec(lam);
      if (seen.insert(L.kappa_of(il)).second) out.push_back(il);
    }
    int p = 0;
    while (p < k && ++a[p] == D) a[p++] = 0;
    if (p == k) break;
  }
  return out;
}

namespace {

SigmaClass class_from_lift(const RootDatum& R, const Parabolic& P, const IVec& lam, const QVec& nu) {
  SigmaClass c;
  c.nu = nu;
  c.kappa = R.kappa_of(lam);
  c.J = P.J;
  c.lambda_M = P.levi->kappa_of(lam);
  c.std_rep = from_levi(P, omega_element(*P.levi, c.lambda_M));
  return c;
}

}  // namespace

SigmaClass make_class(const RootDatum& R, const QVec& nu, const LamElt& kappa) {
  if (!is_dominant(R, nu)) throw std::invalid_argument("Newton point is not dominant");
  unsigned J = 0;
  for (int i = 0; i < R.rank(); ++i)
    if (R.pair(i, nu) == Q(0)) J |= 1u << i;
  Parabolic P = standard_parabolic(R, J);
  const LamElt k = R.fundamental_group().reduce(kappa);
  for (const IVec& lam : basic_lifts(*P.levi, nu))
    if (R.kappa_of(lam) == k) return class_from_lift(R, P, lam, nu);
  throw std::invalid_argument("no sigma-conjugacy class with this Newton point and kappa");
}

SigmaClass classify(const RootDatum& R, const Elt& x) { return make_class(R, newton_point(R, x), eta(R, x)); }

std::vector<SigmaClass> enumerate_classes(const RootDatum& R, int bound) {
  const auto chis = central_characters(R);
  const int window = kappa_window(R);
  std::vector<std::pair<std::pair<Q, std::string>, SigmaClass>> found;
  std::set<std::string> keys;
  for (unsigned J = 0; J < (1u << R.rank()); ++J) {
    Parabolic P = standard_parabolic(R, J);
    const auto& LQ = P.levi->fundamental_group();
    const auto& mods = LQ.moduli();
    std::vector<int> fr, tr;
    for (int i = 0; i < LQ.size(); ++i) (mods[i] == 0 ? fr : tr).push_back(i);
    // functionals bounding the free coordinates
    std::vector<IVec> rows;
    std::vector<Q> caps;
    for (int i = 0; i < R.rank(); ++i)
      if (!(J >> i & 1u)) rows.push_back(R.root(i)), caps.push_back(Q(bound));
    for (const auto& chi : chis) rows.push_back(chi), caps.push_back(Q(window));
    const int f = static_cast<int>(fr.size());
    if (static_cast<int>(rows.size()) != f) throw std::logic_error("unexpected rank of Lambda_M");
    QMat F(f, std::vector<Q>(f));
    for (int c = 0; c < f; ++c) {
      LamElt e(LQ.size(), 0);
      e[fr[c]] = 1;
      QVec v = levi_average(*P.levi, LQ.lift(e));
      for (int r = 0; r < f; ++r) {
        Q s(0);
        for (int t = 0; t < R.dim(); ++t) s += Q(rows[r][t]) * v[t];
        F[r][c] = s;
      }
    }
    std::vector<long long> box(f, 0);
    for (int r = 0; r < f; ++r) {
      std::vector<Q> e(f, Q(0)), col;
      e[r] = Q(1);
      if (!solve_q(F, e, col)) throw std::logic_error("singular coordinate system on Lambda_M");
      for (int c = 0; c < f; ++c) box[c] += ceil_q(abs_q(col[c]) * caps[r]);
    }
    std::vector<int> cur(LQ.size(), 0);
    for (int c = 0; c < f; ++c) cur[fr[c]] = static_cast<int>(-box[c]);
    while (true) {
      IVec lam = LQ.lift(cur);
      QVec nu = levi_average(*P.levi, lam);
      bool ok = R.pair_two_rho(nu) <= Q(bound);
      for (int i = 0; i < R.rank() && ok; ++i)
        if (!(J >> i & 1u) && R.pair(i, nu) <= Q(0)) ok = false;
      for (const auto& chi : chis) {
        int s = 0;
        for (int t = 0; t < R.dim(); ++t) s += chi[t] * lam[t];
        if (std::abs(s) > window) ok = false;
      }
      if (ok) {
        SigmaClass c = class_from_lift(R, P, lam, nu);
        std::string key = class_key(R, c);
        if (!keys.insert(key).second) throw std::logic_error("duplicate class " + key);
        found.push_back({{R.pair_two_rho(nu), key}, c});
      }
      // odometer over free coordinates in the box and torsion residues
      int p = 0;
      for (; p < LQ.size(); ++p) {
        int i = p;
        bool is_free = mods[i] == 0;
        int hi = is_free ? static_cast<int>(box[std::find(fr.begin(), fr.end(), i) - fr.begin()]) : mods[i] - 1;
        int lo = is_free ? -hi : 0;
        if (cur[i] < hi) {
          ++cur[i];
          break;
        }
        cur[i] = lo;
      }
      if (p == LQ.size()) break;
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SigmaClass> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

FundamentalRep fundamental_representative(const RootDatum& R, const SigmaClass& c) {
  const auto& ps = semistandard_parabolics(R);
  for (int w = 0; w < R.wsize(); ++w) {
    Elt y = conj(R, finite(w), c.std_rep);
    for (const auto& P : ps)
      if (is_fundamental_P_alcove(R, y, P)) return {y, P};
  }
  throw std::logic_error("no fundamental P-alcove among the conjugates of the standard representative");
}

int fixed_space_dim(const RootDatum& R, int w) {
  const int d = R.dim();
  QMat A(d, std::vector<Q>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A[i][j] = Q(R.wmat(w)[i * kMaxDim + j] - (i == j ? 1 : 0));
  return d - rank_q(A);
}

int defect(const RootDatum& R, const SigmaClass& c) { return R.dim() - fixed_space_dim(R, c.std_rep.w); }

bool grassmannian_nonempty(const RootDatum& R, const IVec& mu, const SigmaClass& c) {
  if (R.kappa_of(mu) != c.kappa) return false;
  QMat A(R.dim(), std::vector<Q>(R.rank()));
  std::vector<Q> rhs(R.dim()), coef;
  for (int t = 0; t < R.dim(); ++t) {
    for (int i = 0; i < R.rank(); ++i) A[t][i] = Q(R.coroot(i)[t]);
    rhs[t] = Q(mu[t]) - c.nu[t];
  }
  if (!solve_q(A, rhs, coef)) return false;
  for (const auto& x : coef)
    if (x < Q(0)) return false;
  return true;
}

Q grassmannian_dim_basic(const RootDatum& R, const IVec& mu, const SigmaClass& c) {
  if (!c.basic(R)) throw std::invalid_argument("class is not basic");
  return Q(R.pair_two_rho(mu), 2) - Q(defect(R, c), 2);
}

std::string kappa_text(const LamElt& k) {
  if (k.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

std::string class_key(const RootDatum& R, const SigmaClass& c) {
  auto d = R.display(c.nu);
  std::string s = "nu=[";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + q_str(d[i]);
  return s + "];kappa=" + kappa_text(c.kappa);
}

SigmaClass parse_class(const RootDatum& R, const std::string& text) {
  if (text.rfind("elt:", 0) == 0) return classify(R, parse_elt(R, text.substr(4)));
  size_t a = text.find("nu=[");
  size_t b = text.find(']', a == std::string::npos ? 0 : a);
  if (a == std::string::npos || b == std::string::npos)
    throw std::invalid_argument("class key must look like nu=[...];kappa=k");
  QVec nu = R.from_display_q(parse_qvec(text.substr(a + 4, b - a - 4)));
  LamElt kappa(R.fundamental_group().size(), 0);
  size_t k = text.find("kappa=");
  if (k != std::string::npos) {
    std::vector<int> vals;
    std::stringstream ss(text.substr(k + 6));
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
    if (kappa.empty()) {
      if (vals.size() != 1 || vals[0] != 0) throw std::invalid_argument("Lambda_G is trivial; kappa must be 0");
    } else {
      if (vals.size() != kappa.size()) throw std::invalid_argument("kappa has the wrong number of coordinates");
      kappa = vals;
    }
  }
  return make_class(R, nu, kappa);
}

}  // namespace adlv
