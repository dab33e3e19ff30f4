#pragma once

// Test-only scalar reference for the LSTM: flat parameter vector, its own
// forward pass and its own generator, trained with central finite-difference
// gradients. Shares nothing with include/npfree/lstm.hpp except the
// mathematical definition, so it can serve as an oracle for it.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <quadmath.h>

namespace reference {

using quad = __float128;

inline double rexp(double x) { return std::exp(x); }
inline long double rexp(long double x) { return std::exp(x); }
inline quad rexp(quad x) { return expq(x); }
inline double rtanh(double x) { return std::tanh(x); }
inline long double rtanh(long double x) { return std::tanh(x); }
inline quad rtanh(quad x) { return tanhq(x); }

constexpr int H = 10;

// Flat layout, matching the documented parameter order:
//   [input weights 4*H][recurrent 4*H*H][gate bias 4*H][readout H][readout bias 1]
constexpr int kInW = 0;
constexpr int kRecW = kInW + 4 * H;
constexpr int kBias = kRecW + 4 * H * H;
constexpr int kOutW = kBias + 4 * H;
constexpr int kOutB = kOutW + H;
constexpr int kCount = kOutB + 1;

template <typename Real>
Real in_w(const std::vector<Real>& p, int gate, int u) { return p[kInW + gate * H + u]; }
template <typename Real>
Real rec_w(const std::vector<Real>& p, int gate, int u, int v) { return p[kRecW + (gate * H + u) * H + v]; }
template <typename Real>
Real bias(const std::vector<Real>& p, int gate, int u) { return p[kBias + gate * H + u]; }

inline std::uint64_t splitmix_next(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::vector<double> init(std::uint64_t seed) {
  std::vector<double> p(kCount, 0.0);
  std::uint64_t s = seed;
  auto draw = [&s](double bound) {
    const double u = std::ldexp(static_cast<double>(splitmix_next(s) >> 11), -53);
    return bound * (2.0 * u - 1.0);
  };
  for (int k = 0; k < 4 * H; ++k) p[kInW + k] = draw(std::sqrt(6.0 / 11.0));
  for (int k = 0; k < 4 * H * H; ++k) p[kRecW + k] = draw(std::sqrt(6.0 / 20.0));
  for (int k = 0; k < H; ++k) p[kOutW + k] = draw(std::sqrt(6.0 / 11.0));
  return p;
}

/// Readouts at every step of a zero-state run over `xs`. `Real` may be wider
/// than double (long double, quad) to push finite-difference roundoff far
/// below the size of the smallest gradient entries.
template <typename Real>
std::vector<Real> run(const std::vector<Real>& p, const std::vector<Real>& xs) {
  std::vector<Real> h(H, 0), c(H, 0), ys;
  for (Real x : xs) {
    std::vector<Real> hn(H), cn(H);
    for (int u = 0; u < H; ++u) {
      Real pre[4];
      for (int g = 0; g < 4; ++g) {
        pre[g] = in_w(p, g, u) * x + bias(p, g, u);
        for (int v = 0; v < H; ++v) pre[g] += rec_w(p, g, u, v) * h[v];
      }
      const Real ig = 1 / (1 + rexp(-pre[0]));
      const Real fg = 1 / (1 + rexp(-pre[1]));
      const Real gg = rtanh(pre[2]);
      const Real og = 1 / (1 + rexp(-pre[3]));
      cn[u] = fg * c[u] + ig * gg;
      hn[u] = og * rtanh(cn[u]);
    }
    h = hn;
    c = cn;
    Real y = p[kOutB];
    for (int u = 0; u < H; ++u) y += p[kOutW + u] * h[u];
    ys.push_back(y);
  }
  return ys;
}

template <typename Real>
Real loss(const std::vector<Real>& p, Real d0, Real d1, Real d2) {
  const auto ys = run<Real>(p, {d0, d1});
  return (ys[0] - d1) * (ys[0] - d1) + (ys[1] - d2) * (ys[1] - d2);
}

/// Central difference of the training loss in parameter `k`, evaluated in `Real`.
template <typename Real>
double fd_entry(std::vector<Real>& p, int k, Real x0, Real x1, Real x2, double h) {
  const Real keep = p[k];
  p[k] = keep + static_cast<Real>(h);
  const Real up = loss<Real>(p, x0, x1, x2);
  p[k] = keep - static_cast<Real>(h);
  const Real down = loss<Real>(p, x0, x1, x2);
  p[k] = keep;
  return static_cast<double>((up - down) / (2 * static_cast<Real>(h)));
}

/// Central differences of the training loss, evaluated in `Real`.
template <typename Real = double>
std::vector<double> fd_gradient(const std::vector<double>& params, double d0, double d1, double d2,
                                double h = 1e-5) {
  std::vector<Real> p(params.begin(), params.end());
  std::vector<double> g(kCount);
  for (int k = 0; k < kCount; ++k) g[k] = fd_entry<Real>(p, k, d0, d1, d2, h);
  return g;
}

/// Central differences in long double; entries whose quotient is within a
/// factor 1e5 of the long double resolution (eps * loss / h) are redone in
/// quad precision, where that resolution is ~1e-27.
inline std::vector<double> fd_gradient_precise(const std::vector<double>& params, double d0, double d1, double d2,
                                               double h = 1e-5) {
  using ld = long double;
  std::vector<ld> p(params.begin(), params.end());
  const ld L = loss<ld>(p, d0, d1, d2);
  const double resolution = static_cast<double>(std::numeric_limits<ld>::epsilon() * (1 + fabsl(L)) / h);
  std::vector<quad> pq;
  std::vector<double> g(kCount);
  for (int k = 0; k < kCount; ++k) {
    g[k] = fd_entry<ld>(p, k, d0, d1, d2, h);
    if (std::abs(g[k]) < 1e5 * resolution) {
      if (pq.empty()) pq.assign(params.begin(), params.end());
      g[k] = fd_entry<quad>(pq, k, d0, d1, d2, h);
    }
  }
  return g;
}

/// 50 epochs of gradient descent at rate 0.005 from init(140), using
/// finite-difference gradients.
inline std::vector<double> train(double d0, double d1, double d2) {
  auto p = init(140);
  for (int epoch = 0; epoch < 50; ++epoch) {
    const auto g = fd_gradient(p, d0, d1, d2);
    for (int k = 0; k < kCount; ++k) p[k] -= 0.005 * g[k];
  }
  return p;
}

inline double predict(const std::vector<double>& p, double d0, double d1, double d2) {
  return run<double>(p, {d0, d1, d2}).back();
}

}  // namespace reference
