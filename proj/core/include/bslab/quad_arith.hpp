#pragma once

#include "bslab/numeric.hpp"

namespace bslab {

inline constexpr long long kDiscriminantCap = 10'000'000;

// Squarefree part of d (sign preserved); d != 0.
long long squarefree_kernel(long long d);

// Fundamental discriminant attached to Q(sqrt(d)): the squarefree kernel k
// if k = 1 mod 4, else 4k. Rejects d whose kernel is 1 (or d = 0).
long long fundamental_discriminant(long long d);

bool is_fundamental(long long D);

// Kronecker symbol (a/n) for n >= 0, fully general in a.
int kronecker(long long a, unsigned long long n);

// Exact class number by reduced binary quadratic forms:
//   D < 0: count of reduced forms (a,b,c);
//   D > 0: number of cycles of reduced indefinite forms under the reduction
//          operator.
// Requires fundamental D with |D| <= kDiscriminantCap.
long long class_number(long long D);

// Fundamental unit (x + y sqrt(D))/2 of the maximal order, x^2 - D y^2 = +-4,
// from the continued fraction of (D mod 2 + sqrt(D))/2.
struct PellUnit {
  Int x, y;
  int norm_sign; // x^2 - D y^2 = 4 * norm_sign
};
PellUnit fundamental_unit(long long D); // D > 0 fundamental

// log of the fundamental unit for D > 0; exactly 1 for D < 0 (rank zero).
Real regulator(long long D);

struct FieldInvariants {
  long long D = 0;
  int n_K = 2;
  int r1 = 0, r2 = 0;
  long long h = 0;
  Real R;   // 1 for imaginary fields
  int mu = 2;
  Real g;   // log sqrt|D|
  Real rho; // 2^r1 (2pi)^r2 h R / (mu sqrt|D|)
};

FieldInvariants field_invariants(long long D);

// log(h R) / g
Real bs_ratio(const FieldInvariants& inv);

struct BiquadraticInvariants {
  long long D1 = 0, D2 = 0, D3 = 0;
  Int disc;  // |D1 D2 D3| (conductor-discriminant)
  int r1 = 0, r2 = 0;
  Real g;    // log sqrt(disc)
  Real rho;  // L(1,chi_D1) L(1,chi_D2) L(1,chi_D3)
};

BiquadraticInvariants biquadratic_invariants(long long D1, long long D2);

// Discriminant of the third quadratic subfield of the compositum.
long long third_discriminant(long long D1, long long D2);

} // namespace bslab
