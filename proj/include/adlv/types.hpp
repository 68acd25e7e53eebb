#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace adlv {

constexpr int kMaxDim = 5;

using IVec = std::array<int, kMaxDim>;
using Q = boost::rational<long long>;
using QVec = std::array<Q, kMaxDim>;

// A Lambda_M element in Smith coordinates (torsion entries reduced, free entries raw).
using LamElt = std::vector<int>;

inline IVec zero_ivec() { return IVec{}; }

inline QVec to_q(const IVec& v) {
  QVec r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = Q(v[i]);
  return r;
}

inline long long ceil_q(const Q& x) {
  long long n = x.numerator(), d = x.denominator();
  long long f = n / d;
  if (n % d != 0 && n > 0) ++f;
  return f;
}

std::string q_str(const Q& x);
std::string ivec_str(const IVec& v, int d);
std::string qvec_str(const QVec& v, int d);

struct IVecHash {
  size_t operator()(const IVec& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<size_t>(static_cast<unsigned>(x))) * 1099511628211ull;
    return h;
  }
};

}  // namespace adlv
