#pragma once

#include <random>

#include "orthoweave/exactnum.hpp"

namespace testutil {

inline orthoweave::Rat random_rat(std::mt19937_64& rng, int range = 50) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return orthoweave::Rat(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline orthoweave::QuadExt random_quad(std::mt19937_64& rng, int range = 50) {
  return {random_rat(rng, range), random_rat(rng, range)};
}

inline orthoweave::QuadExt q(long a, long b = 0) { return {orthoweave::Rat(a), orthoweave::Rat(b)}; }
inline orthoweave::QuadExt q(orthoweave::Rat a, orthoweave::Rat b = orthoweave::Rat(0)) { return {a, b}; }
inline orthoweave::Rat r(long n, long d = 1) { return orthoweave::Rat(mpz_class(n), mpz_class(d)); }

}  // namespace testutil
