#include "adlv/root_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace adlv {

namespace {

using QMat = std::vector<std::vector<Q>>;

QMat q_inverse(QMat a) {
  const int n = static_cast<int>(a.size());
  QMat inv(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == Q(0)) ++p;
    if (p == n) throw std::logic_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Q piv = a[c][c];
    for (int j = 0; j < n; ++j) a[c][j] /= piv, inv[c][j] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == Q(0)) continue;
      Q f = a[r][c];
      for (int j = 0; j < n; ++j) a[r][j] -= f * a[c][j], inv[r][j] -= f * inv[c][j];
    }
  }
  return inv;
}

QMat q_mul(const QMat& a, const QMat& b) {
  QMat r(a.size(), std::vector<Q>(b.empty() ? 0 : b[0].size(), Q(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

QMat q_transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat r(a[0].size(), std::vector<Q>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

// Z-basis of {v in Z^d : <s, v> = 0 for all rows s}
std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, int d) {
  std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(d));
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < d; ++j) m[i][j] = rows[i][j];
  std::vector<std::vector<long long>> v(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i) v[i][i] = 1;
  auto col_sub = [&](int j, int k, long long q) {  // col j -= q col k
    for (auto& row : m) row[j] -= q * row[k];
    for (auto& row : v) row[j] -= q * row[k];
  };
  auto col_swap = [&](int j, int k) {
    for (auto& row : m) std::swap(row[j], row[k]);
    for (auto& row : v) std::swap(row[j], row[k]);
  };
  int p = 0;
  for (size_t i = 0; i < m.size() && p < d; ++i) {
    while (true) {
      int best = -1;
      for (int j = p; j < d; ++j)
        if (m[i][j] != 0 && (best < 0 || std::llabs(m[i][j]) < std::llabs(m[i][best]))) best = j;
      if (best < 0) break;
      col_swap(p, best);
      bool done = true;
      for (int j = p + 1; j < d; ++j) {
        col_sub(j, p, m[i][j] / m[i][p]);
        if (m[i][j] != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  std::vector<IVec> ker;
  for (int j = p; j < d; ++j) {
    IVec k{};
    for (int i = 0; i < d; ++i) k[i] = static_cast<int>(v[i][j]);
    ker.push_back(k);
  }
  return ker;
}

WMat wmat_mul(const WMat& a, const WMat& b, int d) {
  WMat r{};
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      int x = a[i * kMaxDim + k];
      if (x == 0) continue;
      for (int j = 0; j < d; ++j) r[i * kMaxDim + j] += x * b[k * kMaxDim + j];
    }
  return r;
}

std::vector<std::vector<int>> cartan_of(const std::string& t, int r) {
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  if (t == "G") {
    a[0][1] = -1;
    a[1][0] = -3;
    return a;
  }
  if (t == "D") {
    for (int i = 0; i + 2 < r; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    a[r - 3][r - 1] = a[r - 1][r - 3] = -1;
    return a;
  }
  for (int i = 0; i + 1 < r; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  if (t == "B") a[r - 2][r - 1] = -2;
  if (t == "C") a[r - 1][r - 2] = -2;
  return a;
}

// coroots of the simple roots in the usual ambient coordinates
std::vector<std::vector<Q>> ambient_coroots(const std::string& t, int r) {
  if (t == "G") {
    std::vector<std::vector<Q>> c(2, std::vector<Q>(2, Q(0)));
    c[0][0] = c[1][1] = 1;
    return c;
  }
  int n = t == "A" ? r + 1 : r;
  std::vector<std::vector<Q>> c(r, std::vector<Q>(n, Q(0)));
  for (int k = 0; k + 1 < r; ++k) c[k][k] = 1, c[k][k + 1] = -1;
  if (t == "A") c[r - 1][r - 1] = 1, c[r - 1][r] = -1;
  if (t == "B") c[r - 1][r - 1] = 2;
  if (t == "C") c[r - 1][r - 1] = 1;
  if (t == "D") c[r - 1][r - 2] = 1, c[r - 1][r - 1] = 1;
  return c;
}

}  // namespace

Variant parse_variant(const std::string& s) {
  if (s == "sc" || s == "simply-connected" || s == "SL" || s == "simply_connected") return Variant::SimplyConnected;
  if (s == "ad" || s == "adjoint" || s == "PGL") return Variant::Adjoint;
  if (s == "GL") return Variant::GL;
  throw std::invalid_argument("unknown lattice variant '" + s + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::SimplyConnected: return "sc";
    case Variant::Adjoint: return "adjoint";
    case Variant::GL: return "GL";
  }
  return "?";
}

std::string RootDatum::label() const {
  if (type_ == "GL") return "GL" + std::to_string(type_rank_);
  if (type_ == "levi") {
    std::string s = "levi(";
    for (int i = 0; i < rank_; ++i) s += (i ? "," : "") + std::to_string(parent_root_[i]);
    return s + ")";
  }
  return type_ + std::to_string(type_rank_) + "/" + variant_name(variant_);
}

int RootDatum::height(int b) const {
  int h = 0;
  for (int c : coeffs_[b]) h += c;
  return h;
}

int RootDatum::find_root(const IVec& cov) const {
  auto it = root_index_.find(cov);
  return it == root_index_.end() ? -1 : it->second;
}

Q RootDatum::pair(int b, const QVec& lam) const {
  Q s(0);
  for (int i = 0; i < dim_; ++i)
    if (roots_[b][i]) s += Q(roots_[b][i]) * lam[i];
  return s;
}

int RootDatum::pair_two_rho(const IVec& lam) const {
  int s = 0;
  for (int i = 0; i < dim_; ++i) s += two_rho_[i] * lam[i];
  return s;
}

Q RootDatum::pair_two_rho(const QVec& lam) const {
  Q s(0);
  for (int i = 0; i < dim_; ++i)
    if (two_rho_[i]) s += Q(two_rho_[i]) * lam[i];
  return s;
}

IVec RootDatum::wact(int w, const IVec& lam) const {
  const WMat& m = wmat_[w];
  IVec r{};
  for (int i = 0; i < dim_; ++i) {
    int s = 0;
    for (int j = 0; j < dim_; ++j) s += m[i * kMaxDim + j] * lam[j];
    r[i] = s;
  }
  return r;
}

QVec RootDatum::wact(int w, const QVec& lam) const {
  const WMat& m = wmat_[w];
  QVec r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (m[i * kMaxDim + j]) r[i] += Q(m[i * kMaxDim + j]) * lam[j];
  return r;
}

int RootDatum::worder(int w) const {
  int k = 1, cur = w;
  while (cur != 0) cur = wmul(cur, w), ++k;
  return k;
}

int RootDatum::find_w(const WMat& m) const {
  auto it = wmat_index_.find(m);
  return it == wmat_index_.end() ? -1 : it->second;
}

std::vector<Q> RootDatum::display(const IVec& lam) const { return display(to_q(lam)); }

std::vector<Q> RootDatum::display(const QVec& lam) const {
  std::vector<Q> r(disp_.size(), Q(0));
  for (size_t i = 0; i < disp_.size(); ++i)
    for (int j = 0; j < dim_; ++j) r[i] += disp_[i][j] * lam[j];
  return r;
}

QVec RootDatum::from_display_q(const std::vector<Q>& v) const {
  if (static_cast<int>(v.size()) != display_dim())
    throw std::invalid_argument("expected " + std::to_string(display_dim()) + " coordinates");
  QVec lam;
  for (auto& x : lam) x = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < display_dim(); ++j) lam[i] += undisp_[i][j] * v[j];
  if (display(lam) != v) throw std::invalid_argument("vector is not in the span of X_*(A)");
  return lam;
}

IVec RootDatum::from_display(const std::vector<Q>& v) const {
  QVec q = from_display_q(v);
  IVec lam{};
  for (int i = 0; i < dim_; ++i) {
    if (q[i].denominator() != 1) throw std::invalid_argument("vector is not in X_*(A)");
    lam[i] = static_cast<int>(q[i].numerator());
  }
  return lam;
}

void RootDatum::init(int dim, const std::vector<IVec>& sroots, const std::vector<IVec>& scoroots) {
  dim_ = dim;
  rank_ = static_cast<int>(sroots.size());
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  auto dot = [&](const IVec& a, const IVec& b) {
    int s = 0;
    for (int i = 0; i < dim_; ++i) s += a[i] * b[i];
    return s;
  };
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) cartan_[i][j] = dot(sroots[i], scoroots[j]);

  // root closure under simple reflections
  struct Raw {
    IVec cov, cor;
    std::vector<int> c;
  };
  std::vector<Raw> raw;
  std::map<IVec, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < rank_; ++i) {
    Raw r{sroots[i], scoroots[i], std::vector<int>(rank_, 0)};
    r.c[i] = 1;
    seen[r.cov] = static_cast<int>(raw.size());
    queue.push_back(static_cast<int>(raw.size()));
    raw.push_back(r);
  }
  while (!queue.empty()) {
    Raw cur = raw[queue.front()];
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      int n = dot(cur.cov, scoroots[i]);
      int m = dot(sroots[i], cur.cor);
      Raw nx = cur;
      for (int k = 0; k < dim_; ++k) nx.cov[k] -= n * sroots[i][k], nx.cor[k] -= m * scoroots[i][k];
      nx.c[i] -= n;
      if (seen.count(nx.cov)) continue;
      seen[nx.cov] = static_cast<int>(raw.size());
      queue.push_back(static_cast<int>(raw.size()));
      raw.push_back(nx);
    }
  }
  std::vector<Raw> pos;
  for (auto& r : raw)
    if (std::all_of(r.c.begin(), r.c.end(), [](int x) { return x >= 0; })) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const Raw& a, const Raw& b) {
    int ha = std::accumulate(a.c.begin(), a.c.end(), 0), hb = std::accumulate(b.c.begin(), b.c.end(), 0);
    if (ha != hb) return ha < hb;
    return a.c > b.c;
  });
  npos_ = static_cast<int>(pos.size());
  if (2 * npos_ != static_cast<int>(raw.size())) throw std::logic_error("root system closure failed");
  roots_.clear();
  coroots_.clear();
  coeffs_.clear();
  for (auto& r : pos) roots_.push_back(r.cov), coroots_.push_back(r.cor), coeffs_.push_back(r.c);
  for (auto& r : pos) {
    IVec nc{}, nr{};
    std::vector<int> c(rank_);
    for (int k = 0; k < dim_; ++k) nc[k] = -r.cov[k], nr[k] = -r.cor[k];
    for (int k = 0; k < rank_; ++k) c[k] = -r.c[k];
    roots_.push_back(nc), coroots_.push_back(nr), coeffs_.push_back(c);
  }
  root_index_.clear();
  for (int b = 0; b < num_roots(); ++b) root_index_[roots_[b]] = b;
  two_rho_ = IVec{};
  for (int b = 0; b < npos_; ++b)
    for (int k = 0; k < dim_; ++k) two_rho_[k] += roots_[b][k];

  // components of the Dynkin diagram
  comp_.assign(rank_, -1);
  theta_.clear();
  int nc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (comp_[i] >= 0) continue;
    std::vector<int> stack{i};
    comp_[i] = nc;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < rank_; ++b)
        if (comp_[b] < 0 && cartan_[a][b] != 0) comp_[b] = nc, stack.push_back(b);
    }
    ++nc;
  }
  for (int c = 0; c < nc; ++c) {
    int best = -1;
    for (int b = 0; b < npos_; ++b) {
      bool inside = true;
      for (int k = 0; k < rank_; ++k)
        if (coeffs_[b][k] != 0 && comp_[k] != c) inside = false;
      if (inside && (best < 0 || height(b) > height(best))) best = b;
    }
    theta_.push_back(best);
  }
  coxeter_ = 0;
  for (int t : theta_) coxeter_ = std::max(coxeter_, height(t) + 1);
  std::vector<int> comp_rank(nc, 0);
  for (int i = 0; i < rank_; ++i) ++comp_rank[comp_[i]];
  bary_.assign(num_roots(), Q(0));
  for (int b = 0; b < num_roots(); ++b) {
    Q s(0);
    for (int k = 0; k < rank_; ++k) {
      if (!coeffs_[b][k]) continue;
      int c = comp_[k];
      s += Q(coeffs_[b][k], coeffs_[theta_[c]][k] * (comp_rank[c] + 1));
    }
    bary_[b] = s;
  }

  // Weyl group as matrices on X_*
  std::vector<WMat> sm(rank_);
  for (int i = 0; i < rank_; ++i) {
    WMat m{};
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b) m[a * kMaxDim + b] = (a == b) - scoroots[i][a] * sroots[i][b];
    sm[i] = m;
  }
  WMat id{};
  for (int a = 0; a < dim_; ++a) id[a * kMaxDim + a] = 1;
  std::vector<WMat> mats{id};
  std::map<WMat, int> idx{{id, 0}};
  for (size_t q = 0; q < mats.size(); ++q)
    for (int i = 0; i < rank_; ++i) {
      WMat n = wmat_mul(sm[i], mats[q], dim_);
      if (!idx.count(n)) idx[n] = static_cast<int>(mats.size()), mats.push_back(n);
    }
  const int nw = static_cast<int>(mats.size());
  auto covec_times = [&](const IVec& cov, const WMat& m) {
    IVec r{};
    for (int c = 0; c < dim_; ++c) {
      int s = 0;
      for (int a = 0; a < dim_; ++a) s += cov[a] * m[a * kMaxDim + c];
      r[c] = s;
    }
    return r;
  };
  // beta o w = w^{-1}(beta)
  auto inv_image = [&](int w, int b) { return root_index_.at(covec_times(roots_[b], mats[w])); };
  std::vector<int> len(nw, 0);
  for (int w = 0; w < nw; ++w)
    for (int b = 0; b < npos_; ++b)
      if (!positive(inv_image(w, b))) ++len[w];
  std::vector<int> order(nw);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return len[a] < len[b]; });
  std::vector<std::vector<int>> word(nw);
  for (int w : order) {
    if (len[w] == 0) continue;
    for (int i = 0; i < rank_; ++i) {
      if (positive(inv_image(w, i))) continue;
      int sw = idx.at(wmat_mul(sm[i], mats[w], dim_));
      word[w] = {i};
      word[w].insert(word[w].end(), word[sw].begin(), word[sw].end());
      break;
    }
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return word[a] < word[b];
  });
  wmat_.resize(nw);
  wlen_.resize(nw);
  wword_.resize(nw);
  wmat_index_.clear();
  for (int k = 0; k < nw; ++k) {
    wmat_[k] = mats[order[k]];
    wlen_[k] = len[order[k]];
    wword_[k] = word[order[k]];
    wmat_index_[wmat_[k]] = k;
  }
  wmul_.assign(nw * nw, 0);
  winv_.assign(nw, 0);
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b) {
      int c = wmat_index_.at(wmat_mul(wmat_[a], wmat_[b], dim_));
      wmul_[a * nw + b] = c;
      if (c == 0) winv_[a] = b;
    }
  wroot_.assign(nw * num_roots(), 0);
  for (int w = 0; w < nw; ++w)
    for (int b = 0; b < num_roots(); ++b)
      wroot_[w * num_roots() + b] = root_index_.at(covec_times(roots_[b], wmat_[winv_[w]]));
  simple_refl_.resize(rank_);
  for (int i = 0; i < rank_; ++i) simple_refl_[i] = wmat_index_.at(sm[i]);
  refl_.resize(num_roots());
  for (int b = 0; b < num_roots(); ++b) {
    WMat m{};
    for (int a = 0; a < dim_; ++a)
      for (int c = 0; c < dim_; ++c) m[a * kMaxDim + c] = (a == c) - coroots_[b][a] * roots_[b][c];
    refl_[b] = wmat_index_.at(m);
  }

  std::vector<IVec> cor(scoroots.begin(), scoroots.end());
  lambda_ = LatticeQuotient(dim_, cor);
  std::vector<IVec> gens = cor;
  for (auto& k : integer_kernel(sroots, dim_)) gens.push_back(k);
  lambda_center_ = LatticeQuotient(dim_, gens);
}

std::shared_ptr<const RootDatum> RootDatum::build(const std::string& type, int rank, Variant v) {
  auto fail = [&]() {
    throw std::invalid_argument("unsupported root datum " + type + std::to_string(rank) + "/" + variant_name(v));
  };
  std::shared_ptr<RootDatum> rd(new RootDatum());
  rd->type_ = type;
  rd->type_rank_ = rank;
  rd->variant_ = v;
  if (type == "GL") {
    if (rank < 1 || rank > 5) fail();
    rd->variant_ = Variant::GL;
    std::vector<IVec> s, c;
    for (int i = 0; i + 1 < rank; ++i) {
      IVec a{};
      a[i] = 1, a[i + 1] = -1;
      s.push_back(a), c.push_back(a);
    }
    rd->init(rank, s, c);
    rd->disp_.assign(rank, std::vector<Q>(rank, Q(0)));
    for (int i = 0; i < rank; ++i) rd->disp_[i][i] = 1;
  } else {
    bool ok = (type == "A" && rank >= 1 && rank <= 4) || (type == "B" && (rank == 2 || rank == 3)) ||
              (type == "C" && (rank == 2 || rank == 3)) || (type == "D" && rank == 4) || (type == "G" && rank == 2);
    if (!ok || v == Variant::GL) fail();
    auto a = cartan_of(type, rank);
    std::vector<IVec> s(rank), c(rank);
    for (int i = 0; i < rank; ++i) {
      s[i] = IVec{}, c[i] = IVec{};
      for (int k = 0; k < rank; ++k) {
        if (v == Variant::SimplyConnected) {
          s[i][k] = a[i][k];
          c[i][k] = (i == k);
        } else {
          s[i][k] = (i == k);
          c[i][k] = a[k][i];
        }
      }
    }
    rd->init(rank, s, c);
    auto amb = ambient_coroots(type, rank);
    const int n = static_cast<int>(amb[0].size());
    QMat dsc(n, std::vector<Q>(rank, Q(0)));
    for (int k = 0; k < rank; ++k)
      for (int j = 0; j < n; ++j) dsc[j][k] = amb[k][j];
    if (v == Variant::Adjoint && type != "G") {
      QMat aq(rank, std::vector<Q>(rank));
      for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k) aq[i][k] = a[i][k];
      rd->disp_ = q_mul(dsc, q_inverse(aq));
    } else {
      rd->disp_ = dsc;
    }
  }
  QMat dt = q_transpose(rd->disp_);
  rd->undisp_ = rd->dim_ ? q_mul(q_inverse(q_mul(dt, rd->disp_)), dt) : QMat{};
  rd->parent_w_.resize(rd->wsize());
  std::iota(rd->parent_w_.begin(), rd->parent_w_.end(), 0);
  rd->parent_root_.resize(rd->num_roots());
  std::iota(rd->parent_root_.begin(), rd->parent_root_.end(), 0);
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::levi(const std::vector<int>& parent_roots) const {
  std::vector<bool> key(num_roots(), false);
  for (int b : parent_roots) key[b] = true;
  {
    std::lock_guard<std::mutex> lock(levi_mu_);
    auto it = levi_cache_.find(key);
    if (it != levi_cache_.end()) return it->second;
  }
  std::vector<int> pos;
  for (int b = 0; b < npos_; ++b)
    if (key[b]) {
      if (!key[neg(b)]) throw std::invalid_argument("Levi root set is not symmetric");
      pos.push_back(b);
    }
  std::vector<IVec> s, c;
  std::vector<int> simple_idx;
  for (int b : pos) {
    bool decomposable = false;
    for (int b1 : pos) {
      IVec rest{};
      for (int k = 0; k < dim_; ++k) rest[k] = roots_[b][k] - roots_[b1][k];
      int b2 = find_root(rest);
      if (b2 >= 0 && b2 < npos_ && key[b2]) decomposable = true;
    }
    if (!decomposable) s.push_back(roots_[b]), c.push_back(coroots_[b]), simple_idx.push_back(b);
  }
  std::shared_ptr<RootDatum> rd(new RootDatum());
  rd->type_ = "levi";
  rd->type_rank_ = static_cast<int>(s.size());
  rd->variant_ = variant_;
  rd->init(dim_, s, c);
  if (rd->num_roots() != static_cast<int>(parent_roots.size()))
    throw std::invalid_argument("Levi root set is not a closed subsystem");
  rd->parent_ = this;
  rd->disp_ = disp_;
  rd->undisp_ = undisp_;
  rd->parent_root_.resize(rd->num_roots());
  for (int b = 0; b < rd->num_roots(); ++b) rd->parent_root_[b] = find_root(rd->roots_[b]);
  rd->parent_w_.resize(rd->wsize());
  for (int w = 0; w < rd->wsize(); ++w) rd->parent_w_[w] = find_w(rd->wmat_[w]);
  std::lock_guard<std::mutex> lock(levi_mu_);
  levi_cache_[key] = rd;
  return rd;
}

}  // namespace adlv
