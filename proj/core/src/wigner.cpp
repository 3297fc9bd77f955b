#include "coldscat/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace coldscat {

namespace {

// log(n!) for n = 0..kMaxFact-1, filled once at startup.
constexpr int kMaxFact = 512;

struct LogFactTable {
  std::array<long double, kMaxFact> v{};
  LogFactTable() {
    v[0] = 0.0L;
    for (int n = 1; n < kMaxFact; ++n)
      v[n] = v[n - 1] + std::log(static_cast<long double>(n));
  }
};

const LogFactTable g_logfact;

inline long double lf(int n) { return g_logfact.v[n]; }

inline int parity_sign(int n) { return (n & 1) ? -1 : 1; }

// Triangle rule on twice-values; also requires an integral perimeter.
inline bool triangle_ok(int ta, int tb, int tc) {
  if ((ta + tb + tc) % 2 != 0) return false;
  return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

inline bool valid_jm(int tj, int tm) {
  if (tj < 0) return false;
  if ((tj + tm) % 2 != 0) return false;  // j and m must share half-integerness
  return std::abs(tm) <= tj;
}

// Racah triangle coefficient, log of Delta(abc) (twice-value arguments).
inline long double log_delta(int ta, int tb, int tc) {
  int x1 = (ta + tb - tc) / 2;
  int x2 = (ta - tb + tc) / 2;
  int x3 = (-ta + tb + tc) / 2;
  int x4 = (ta + tb + tc) / 2 + 1;
  return lf(x1) + lf(x2) + lf(x3) - lf(x4);
}

}  // namespace

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt m1, HalfInt m2, HalfInt m3) {
  const int tj1 = j1.twice(), tj2 = j2.twice(), tj3 = j3.twice();
  const int tm1 = m1.twice(), tm2 = m2.twice(), tm3 = m3.twice();

  if (!valid_jm(tj1, tm1) || !valid_jm(tj2, tm2) || !valid_jm(tj3, tm3))
    return 0.0;
  if (tm1 + tm2 + tm3 != 0) return 0.0;
  if (!triangle_ok(tj1, tj2, tj3)) return 0.0;

  // Analytic zero: all projections zero and odd total angular momentum.
  const int perim = (tj1 + tj2 + tj3) / 2;
  if (tm1 == 0 && tm2 == 0 && tm3 == 0 && (perim & 1)) return 0.0;

  // Racah sum; all factorial arguments are integers here.
  const int a1 = (tj1 + tj2 - tj3) / 2;
  const int a2 = (tj1 - tm1) / 2;
  const int a3 = (tj2 + tm2) / 2;
  const int b1 = (tj3 - tj2 + tm1) / 2;  // k + b1 >= 0
  const int b2 = (tj3 - tj1 - tm2) / 2;  // k + b2 >= 0

  const int kmin = std::max({0, -b1, -b2});
  const int kmax = std::min({a1, a2, a3});
  if (kmin > kmax) return 0.0;

  const long double logpre =
      0.5L * (log_delta(tj1, tj2, tj3) +
              lf((tj1 + tm1) / 2) + lf((tj1 - tm1) / 2) +
              lf((tj2 + tm2) / 2) + lf((tj2 - tm2) / 2) +
              lf((tj3 + tm3) / 2) + lf((tj3 - tm3) / 2));

  long double sum = 0.0L;
  for (int k = kmin; k <= kmax; ++k) {
    long double lt = logpre - lf(k) - lf(a1 - k) - lf(a2 - k) - lf(a3 - k) -
                     lf(b1 + k) - lf(b2 + k);
    sum += parity_sign(k) * std::exp(lt);
  }

  const int phase_exp = (tj1 - tj2 - tm3) / 2;
  return static_cast<double>(parity_sign(std::abs(phase_exp)) * sum);
}

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6) {
  const int t1 = j1.twice(), t2 = j2.twice(), t3 = j3.twice();
  const int t4 = j4.twice(), t5 = j5.twice(), t6 = j6.twice();
  if (t1 < 0 || t2 < 0 || t3 < 0 || t4 < 0 || t5 < 0 || t6 < 0) return 0.0;

  if (!triangle_ok(t1, t2, t3) || !triangle_ok(t1, t5, t6) ||
      !triangle_ok(t4, t2, t6) || !triangle_ok(t4, t5, t3))
    return 0.0;

  const long double logpre =
      0.5L * (log_delta(t1, t2, t3) + log_delta(t1, t5, t6) +
              log_delta(t4, t2, t6) + log_delta(t4, t5, t3));

  const int a1 = (t1 + t2 + t3) / 2;
  const int a2 = (t1 + t5 + t6) / 2;
  const int a3 = (t4 + t2 + t6) / 2;
  const int a4 = (t4 + t5 + t3) / 2;
  const int b1 = (t1 + t2 + t4 + t5) / 2;
  const int b2 = (t2 + t3 + t5 + t6) / 2;
  const int b3 = (t3 + t1 + t6 + t4) / 2;

  const int tmin = std::max({a1, a2, a3, a4});
  const int tmax = std::min({b1, b2, b3});
  if (tmin > tmax) return 0.0;

  long double sum = 0.0L;
  for (int t = tmin; t <= tmax; ++t) {
    long double lt = logpre + lf(t + 1) - lf(t - a1) - lf(t - a2) -
                     lf(t - a3) - lf(t - a4) - lf(b1 - t) - lf(b2 - t) -
                     lf(b3 - t);
    sum += parity_sign(t) * std::exp(lt);
  }
  return static_cast<double>(sum);
}

double wigner9j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6,
                HalfInt j7, HalfInt j8, HalfInt j9) {
  const int t1 = j1.twice(), t2 = j2.twice(), t3 = j3.twice();
  const int t4 = j4.twice(), t5 = j5.twice(), t6 = j6.twice();
  const int t7 = j7.twice(), t8 = j8.twice(), t9 = j9.twice();

  if (!triangle_ok(t1, t2, t3) || !triangle_ok(t4, t5, t6) ||
      !triangle_ok(t7, t8, t9) || !triangle_ok(t1, t4, t7) ||
      !triangle_ok(t2, t5, t8) || !triangle_ok(t3, t6, t9))
    return 0.0;

  // Contraction over products of three 6j symbols.
  const int txmin = std::max({std::abs(t1 - t9), std::abs(t2 - t6),
                              std::abs(t4 - t8)});
  const int txmax = std::min({t1 + t9, t2 + t6, t4 + t8});

  long double sum = 0.0L;
  for (int tx = txmin; tx <= txmax; tx += 2) {
    HalfInt x(tx);
    long double p =
        static_cast<long double>(wigner6j(j1, j2, j3, j6, j9, x)) *
        static_cast<long double>(wigner6j(j4, j5, j6, j2, x, j8)) *
        static_cast<long double>(wigner6j(j7, j8, j9, x, j1, j4));
    sum += parity_sign(tx) * (tx + 1) * p;
  }
  return static_cast<double>(sum);
}

double wigner3j_i(int j1, int j2, int j3, int m1, int m2, int m3) {
  return wigner3j(HalfInt::from_int(j1), HalfInt::from_int(j2),
                  HalfInt::from_int(j3), HalfInt::from_int(m1),
                  HalfInt::from_int(m2), HalfInt::from_int(m3));
}

double wigner6j_i(int j1, int j2, int j3, int j4, int j5, int j6) {
  return wigner6j(HalfInt::from_int(j1), HalfInt::from_int(j2),
                  HalfInt::from_int(j3), HalfInt::from_int(j4),
                  HalfInt::from_int(j5), HalfInt::from_int(j6));
}

double wigner9j_i(int j1, int j2, int j3, int j4, int j5, int j6,
                  int j7, int j8, int j9) {
  return wigner9j(HalfInt::from_int(j1), HalfInt::from_int(j2),
                  HalfInt::from_int(j3), HalfInt::from_int(j4),
                  HalfInt::from_int(j5), HalfInt::from_int(j6),
                  HalfInt::from_int(j7), HalfInt::from_int(j8),
                  HalfInt::from_int(j9));
}

namespace {

// Pack small non-negative integer arguments into one 64-bit key.
inline uint64_t pack6(int a, int b, int c, int d, int e, int f) {
  uint64_t k = 0;
  for (int v : {a, b, c, d, e, f}) k = (k << 10) | static_cast<uint64_t>(v);
  return k;
}

inline uint64_t pack9(int a, int b, int c, int d, int e, int f, int g, int h,
                      int i) {
  uint64_t k = 0;
  for (int v : {a, b, c, d, e, f, g, h, i})
    k = (k << 7) | static_cast<uint64_t>(v);
  return k;
}

}  // namespace

double wigner6j_cached(int j1, int j2, int j3, int j4, int j5, int j6) {
  thread_local std::unordered_map<uint64_t, double> cache;
  const uint64_t key = pack6(j1, j2, j3, j4, j5, j6);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  double v = wigner6j_i(j1, j2, j3, j4, j5, j6);
  cache.emplace(key, v);
  return v;
}

double wigner9j_cached(int j1, int j2, int j3, int j4, int j5, int j6,
                       int j7, int j8, int j9) {
  thread_local std::unordered_map<uint64_t, double> cache;
  const uint64_t key = pack9(j1, j2, j3, j4, j5, j6, j7, j8, j9);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  double v = wigner9j_i(j1, j2, j3, j4, j5, j6, j7, j8, j9);
  cache.emplace(key, v);
  return v;
}

}  // namespace coldscat
