#pragma once

#include "kodaira/rational.hpp"

namespace kodaira {

/**
 * A local classification context: residue characteristic p and absolute
 * ramification index e = v_K(p) of the field over which the model is read.
 * Residue characteristic 2 and 3 are out of scope everywhere.
 */
struct LocalContext {
  Integer p;
  long e;

  LocalContext(Integer prime, long ram) : p(std::move(prime)), e(ram) {
    if (p < 5 || !is_prime(p))
      throw std::domain_error("context prime must be a prime >= 5");
    if (e < 1) throw std::domain_error("ramification index must be >= 1");
  }
};

}  // namespace kodaira
