#pragma once

#include <cstdint>
#include <vector>

#include "minram/bigint.hpp"

namespace minram {

enum class Primality { composite, prime, probable_prime };

// Three-valued primality. Deterministic (Miller-Rabin over a fixed base set
// proven complete below 2^64) for inputs < 2^64; BPSW above, reported as
// probable_prime. n <= 1 is a domain error.
Primality classify_prime(const BigInt& n);

inline bool is_prime_or_probable(Primality p) { return p != Primality::composite; }

const char* to_string(Primality p);

// Shared sieve of all primes <= 1'000'000 (ascending).
const std::vector<std::uint32_t>& small_primes();

// Primes <= bound, ascending; bound may exceed the shared sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace minram
