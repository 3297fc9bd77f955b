// Wigner 3j, 6j and 9j symbols.
//
// Evaluated from the Racah closed-form sums over a precomputed
// log-factorial table, with long-double accumulation of the alternating
// series. Selection-rule violations return 0 rather than throwing.
#pragma once

#include "coldscat/half_int.hpp"

namespace coldscat {

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt m1, HalfInt m2, HalfInt m3);

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6);

double wigner9j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6,
                HalfInt j7, HalfInt j8, HalfInt j9);

// Integer-argument conveniences used by the coupling code.
double wigner3j_i(int j1, int j2, int j3, int m1, int m2, int m3);
double wigner6j_i(int j1, int j2, int j3, int j4, int j5, int j6);
double wigner9j_i(int j1, int j2, int j3, int j4, int j5, int j6,
                  int j7, int j8, int j9);

// Memoized variants. The cache is thread_local, so concurrent workers
// never contend and results are identical to the uncached path.
double wigner6j_cached(int j1, int j2, int j3, int j4, int j5, int j6);
double wigner9j_cached(int j1, int j2, int j3, int j4, int j5, int j6,
                       int j7, int j8, int j9);

}  // namespace coldscat
