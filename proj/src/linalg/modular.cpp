#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>

#include "cayley/errors.hpp"
#include "cayley/linalg/matrix.hpp"

namespace cayley {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kMaxPrimes = 1024;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes just below 2^62, descending.
const std::vector<u64>& prime_table() {
  static const std::vector<u64> table = [] {
    std::vector<u64> t;
    for (u64 c = (1ULL << 62) - 1; t.size() < kMaxPrimes; c -= 2) {
      if (is_prime(c)) t.push_back(c);
    }
    return t;
  }();
  return table;
}

u64 reduce(const Integer& z, u64 p) {
  return static_cast<u64>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

u64 det_mod(const std::vector<Integer>& a, std::size_t n, u64 p) {
  std::vector<u64> m(n * n);
  for (std::size_t k = 0; k < n * n; ++k) m[k] = reduce(a[k], p);
  u64 d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && m[sel * n + k] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[sel * n + j]);
      d = (p - d) % p;
    }
    const u64 piv = m[k * n + k];
    d = mul_mod(d, piv, p);
    const u64 inv = pow_mod(piv, p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 f = mul_mod(m[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) {
        const u64 sub = mul_mod(f, m[k * n + j], p);
        m[i * n + j] = m[i * n + j] >= sub ? m[i * n + j] - sub : m[i * n + j] + p - sub;
      }
    }
  }
  return d;
}

}  // namespace

Rational det_multimodular(const QMatrix& m) {
  if (!m.is_square()) throw InputError("det_multimodular of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  std::vector<Integer> a(n * n);
  Integer scale = 1;
  Integer hadamard_sq = 1;  // product of squared row norms bounds det^2
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    Integer norm_sq = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = m(i, j);
      a[i * n + j] = q.get_num() * (l / q.get_den());
      norm_sq += a[i * n + j] * a[i * n + j];
    }
    hadamard_sq *= norm_sq;
  }
  if (hadamard_sq == 0) return 0;

  // Need modulus M with M^2 > 4 * hadamard_sq so the symmetric residue is exact.
  const auto& primes = prime_table();
  Integer modulus = 1;
  std::size_t needed = 0;
  while (needed < primes.size() && modulus * modulus <= 4 * hadamard_sq) {
    modulus *= Integer(std::to_string(primes[needed]));
    ++needed;
  }
  if (modulus * modulus <= 4 * hadamard_sq) return det(m);

  std::vector<u64> residues(needed);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(needed, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < needed; k += workers) residues[k] = det_mod(a, n, primes[k]);
    }));
  }
  for (auto& j : jobs) j.get();

  // Incremental CRT.
  Integer value = 0;
  Integer mod = 1;
  for (std::size_t k = 0; k < needed; ++k) {
    const Integer p(std::to_string(primes[k]));
    const Integer r(std::to_string(residues[k]));
    // value + mod * t == r (mod p)
    Integer diff = r - value;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
    Integer t = (diff * inv) % p;
    if (t < 0) t += p;
    value += mod * t;
    mod *= p;
  }
  if (2 * value > mod) value -= mod;
  Rational d(value, scale);
  d.canonicalize();
  return d;
}

}  // namespace cayley
