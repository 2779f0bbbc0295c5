// Part of the lc project.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

namespace lc {

// Machine-sized naturals: program inputs, fuels, indices.
using Nat = std::uint64_t;

// Program codes. Codes of even small terms overflow machine words fast,
// so the whole coding layer runs on arbitrary precision integers.
using Code = mpz_class;

inline Code code_of(Nat n) { return Code(static_cast<unsigned long>(n)); }

inline bool fits_nat(const Code& c) { return c.fits_ulong_p(); }

inline Nat to_nat(const Code& c) {
  if (!c.fits_ulong_p()) throw std::overflow_error("code does not fit a machine natural");
  return static_cast<Nat>(c.get_ui());
}

// Cantor pairing <x,y> = (x+y)(x+y+1)/2 + y, a bijection N*N <-> N.

inline Code pair_code(const Code& x, const Code& y) {
  Code s = x + y;
  return s * (s + 1) / 2 + y;
}

inline std::pair<Code, Code> unpair_code(const Code& n) {
  // s = floor((sqrt(8n+1)-1)/2), then y = n - s(s+1)/2, x = s - y.
  Code t = 8 * n + 1;
  Code r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  Code s = (r - 1) / 2;
  Code tri = s * (s + 1) / 2;
  Code y = n - tri;
  Code x = s - y;
  return {x, y};
}

inline Nat pair_nat(Nat x, Nat y) {
  unsigned __int128 s = static_cast<unsigned __int128>(x) + y;
  unsigned __int128 v = s * (s + 1) / 2 + y;
  if (v > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::overflow_error("pair_nat overflow");
  return static_cast<Nat>(v);
}

inline std::pair<Nat, Nat> unpair_nat(Nat n) {
  // Integer sqrt of 8n+1 via floating seed plus exact fixup.
  unsigned __int128 t = static_cast<unsigned __int128>(n) * 8 + 1;
  Nat r = static_cast<Nat>(__builtin_sqrtl(static_cast<long double>(t)));
  while (static_cast<unsigned __int128>(r) * r > t) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= t) ++r;
  Nat s = (r - 1) / 2;
  Nat tri = s * (s + 1) / 2;
  Nat y = n - tri;
  Nat x = s - y;
  return {x, y};
}

}  // namespace lc
