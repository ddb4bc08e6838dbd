#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "dsing/polynomial.hpp"

namespace dsing {

std::vector<unsigned> divisors(unsigned n) {
  if (n == 0) throw PreconditionError("divisors: argument must be >= 1");
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned euler_totient(unsigned d) {
  if (d == 0) throw PreconditionError("euler_totient: argument must be >= 1");
  unsigned result = d;
  unsigned m = d;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

namespace {

class CyclotomicTable {
 public:
  const IntPolynomial& get(unsigned d) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(d); it != table_.end()) return *it->second;
    }
    // Build the proper divisors first; each get() takes the lock on its own.
    IntPolynomial denominator = IntPolynomial::constant(BigInt(1));
    for (unsigned e : divisors(d))
      if (e < d) denominator = denominator * get(e);

    auto q = exact_quotient(denominator, IntPolynomial::x_pow_minus_one(d));
    if (!q) throw Error("cyclotomic: x^d - 1 not divisible by lower cyclotomics");

    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(d, std::make_unique<IntPolynomial>(std::move(*q)));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<unsigned, std::unique_ptr<const IntPolynomial>> table_;
};

CyclotomicTable& table() {
  static CyclotomicTable instance;
  return instance;
}

}  // namespace

const IntPolynomial& cyclotomic(unsigned d) {
  if (d == 0) throw PreconditionError("cyclotomic: index must be >= 1");
  return table().get(d);
}

}  // namespace dsing
