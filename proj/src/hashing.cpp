#include "voteflow/hashing.hpp"

#include <cmath>
#include <stdexcept>

namespace voteflow {

int floor_prob_exponent(double p) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("probability must be in (0,1]");
  int k = 0;
  while (std::ldexp(1.0, -k) > p) ++k;
  return k;
}

double floor_prob_to_power_of_two(double p) { return std::ldexp(1.0, -floor_prob_exponent(p)); }

bool low_space_select(int log2m, Rng& rng) {
  if (log2m < 0) throw std::invalid_argument("log2m must be nonnegative");
  bool any = false;
  for (int i = 0; i < log2m; ++i) any |= rng.next_bit();
  return !any;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::uint64_t next_prime(std::uint64_t x) {
  if (x <= 2) return 2;
  if (x > (1ULL << 62)) throw std::invalid_argument("domain too large");
  std::uint64_t n = x | 1;  // first odd >= x
  while (!is_prime(n)) n += 2;
  return n;
}

std::uint64_t HashFn::operator()(std::uint64_t x) const {
  std::uint64_t h = (mulmod(a, x % prime, prime) + b) % prime;
  return h % range + 1;
}

HashFn draw_universal_hash(std::uint64_t domain, std::uint64_t range, Rng& rng) {
  if (domain < 1 || range < 1) throw std::invalid_argument("domain and range must be positive");
  HashFn h;
  h.prime = next_prime(domain);
  h.range = range;
  h.a = 1 + rng.below(h.prime - 1);  // in [1, p-1]
  h.b = rng.below(h.prime);          // in [0, p-1]
  return h;
}

}  // namespace voteflow
