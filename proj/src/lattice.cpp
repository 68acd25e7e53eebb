#include "adlv/lattice.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace adlv {

std::string q_str(const Q& x) {
  std::ostringstream os;
  os << x.numerator();
  if (x.denominator() != 1) os << '/' << x.denominator();
  return os.str();
}

std::string ivec_str(const IVec& v, int d) {
  std::ostringstream os;
  for (int i = 0; i < d; ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string qvec_str(const QVec& v, int d) {
  std::string s;
  for (int i = 0; i < d; ++i) s += (i ? "," : "") + q_str(v[i]);
  return s;
}

namespace {

long long pos_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

LatticeQuotient::LatticeQuotient(int dim, const std::vector<IVec>& gens) : dim_(dim) {
  const int n = static_cast<int>(gens.size());
  std::vector<std::vector<long long>> a(dim, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < dim; ++i) a[i][j] = gens[j][i];
  U_.assign(dim, std::vector<long long>(dim, 0));
  Uinv_ = U_;
  for (int i = 0; i < dim; ++i) U_[i][i] = Uinv_[i][i] = 1;

  auto swap_rows = [&](int r, int s) {
    if (r == s) return;
    std::swap(a[r], a[s]);
    std::swap(U_[r], U_[s]);
    for (int i = 0; i < dim; ++i) std::swap(Uinv_[i][r], Uinv_[i][s]);
  };
  auto row_sub = [&](int r, int t, long long q) {  // row r -= q * row t
    if (q == 0) return;
    for (int j = 0; j < n; ++j) a[r][j] -= q * a[t][j];
    for (int j = 0; j < dim; ++j) U_[r][j] -= q * U_[t][j];
    for (int i = 0; i < dim; ++i) Uinv_[i][t] += q * Uinv_[i][r];
  };

  std::vector<long long> diag;
  for (int t = 0; t < std::min(dim, n); ++t) {
    while (true) {
      int br = -1, bc = -1;
      for (int i = t; i < dim; ++i)
        for (int j = t; j < n; ++j)
          if (a[i][j] != 0 && (br < 0 || std::llabs(a[i][j]) < std::llabs(a[br][bc]))) br = i, bc = j;
      if (br < 0) break;
      swap_rows(t, br);
      if (bc != t)
        for (int i = 0; i < dim; ++i) std::swap(a[i][t], a[i][bc]);
      bool clean = true;
      for (int i = t + 1; i < dim; ++i) {
        row_sub(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        long long q = a[t][j] / a[t][t];
        if (q != 0)
          for (int i = 0; i < dim; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[t][t] == 0) break;
    if (a[t][t] < 0) {
      for (int j = 0; j < n; ++j) a[t][j] = -a[t][j];
      for (int j = 0; j < dim; ++j) U_[t][j] = -U_[t][j];
      for (int i = 0; i < dim; ++i) Uinv_[i][t] = -Uinv_[i][t];
    }
    diag.push_back(a[t][t]);
  }
  for (int i = 0; i < dim; ++i) {
    if (i < static_cast<int>(diag.size())) {
      if (diag[i] == 1) continue;
      kept_.push_back(i);
      moduli_.push_back(static_cast<int>(diag[i]));
    } else {
      kept_.push_back(i);
      moduli_.push_back(0);
    }
  }
}

bool LatticeQuotient::finite() const {
  for (int m : moduli_)
    if (m == 0) return false;
  return true;
}

long long LatticeQuotient::order() const {
  long long o = 1;
  for (int m : moduli_) {
    if (m == 0) return -1;
    o *= m;
  }
  return o;
}

LamElt LatticeQuotient::normal_form(const IVec& v) const {
  LamElt r(kept_.size());
  for (size_t k = 0; k < kept_.size(); ++k) {
    long long s = 0;
    for (int j = 0; j < dim_; ++j) s += U_[kept_[k]][j] * v[j];
    r[k] = static_cast<int>(moduli_[k] ? pos_mod(s, moduli_[k]) : s);
  }
  return r;
}

LamElt LatticeQuotient::reduce(const LamElt& a) const {
  LamElt r(a);
  for (size_t k = 0; k < r.size(); ++k)
    if (moduli_[k]) r[k] = static_cast<int>(pos_mod(r[k], moduli_[k]));
  return r;
}

LamElt LatticeQuotient::add(const LamElt& a, const LamElt& b) const {
  LamElt r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return reduce(r);
}

LamElt LatticeQuotient::neg(const LamElt& a) const {
  LamElt r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
  return reduce(r);
}

IVec LatticeQuotient::lift(const LamElt& a) const {
  if (a.size() != kept_.size()) throw std::invalid_argument("lattice element of wrong size");
  IVec v{};
  for (int i = 0; i < dim_; ++i) {
    long long s = 0;
    for (size_t k = 0; k < kept_.size(); ++k) s += Uinv_[i][kept_[k]] * a[k];
    v[i] = static_cast<int>(s);
  }
  return v;
}

std::vector<LamElt> LatticeQuotient::elements() const {
  if (!finite()) throw std::logic_error("elements() of an infinite quotient");
  std::vector<LamElt> out;
  LamElt cur(kept_.size(), 0);
  while (true) {
    out.push_back(cur);
    int k = static_cast<int>(cur.size()) - 1;
    while (k >= 0 && ++cur[k] == moduli_[k]) cur[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace adlv

namespace adlv {

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMat& A, int ncols) {
  std::vector<int> piv;
  int r = 0;
  const int m = static_cast<int>(A.size());
  for (int c = 0; c < ncols && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (A[i][c] != Q(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[r]);
    Q inv = Q(1) / A[r][c];
    for (auto& v : A[r]) v *= inv;
    for (int i = 0; i < m; ++i)
      if (i != r && A[i][c] != Q(0)) {
        Q f = A[i][c];
        for (size_t j = 0; j < A[i].size(); ++j) A[i][j] -= f * A[r][j];
      }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

bool solve_q(const QMat& A, const std::vector<Q>& b, std::vector<Q>& c) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  QMat aug = A;
  for (int i = 0; i < m; ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug, n);
  for (int i = static_cast<int>(piv.size()); i < m; ++i)
    if (aug[i][n] != Q(0)) return false;
  c.assign(n, Q(0));
  for (size_t i = 0; i < piv.size(); ++i) c[piv[i]] = aug[i][n];
  return true;
}

int rank_q(QMat A) {
  const int n = A.empty() ? 0 : static_cast<int>(A[0].size());
  return static_cast<int>(rref(A, n).size());
}

}  // namespace adlv
