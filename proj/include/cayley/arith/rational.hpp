#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace cayley {

/// Exact rational scalar. gmpxx keeps values in lowest terms with a positive
/// denominator as long as they are produced by arithmetic or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/4", "+2". Throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// q^e for any integer e; throws InputError for 0^e with e < 0.
Rational pow(const Rational& q, long e);

/// Uniform integer in [lo, hi] as a Rational.
Rational random_integer(std::mt19937_64& rng, long lo, long hi);

/// Random nonzero rational num/den with |num| <= max_num, 1 <= den <= max_den.
Rational random_nonzero_rational(std::mt19937_64& rng, long max_num, long max_den);

/// 64-bit FNV-1a; used for basis and input fingerprints.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t v);

}  // namespace cayley
