#include "dsing/circulant.hpp"

namespace dsing {

CyclotomicCertificate circulant_singularity(const IntPolynomial& psi, std::size_t n) {
  if (n == 0) throw PreconditionError("circulant_singularity: n must be >= 1");
  if (psi.degree() >= static_cast<int>(n))
    throw NotReducedError("circulant_singularity: degree " + std::to_string(psi.degree()) +
                          " is not below n = " + std::to_string(n));

  CyclotomicCertificate cert;
  cert.n = n;
  cert.tested = psi;
  for (unsigned d : divisors(static_cast<unsigned>(n))) {
    if (!divides(cyclotomic(d), psi)) continue;
    cert.dividing.push_back(d);
    cert.nullity += euler_totient(d);
  }
  return cert;
}

}  // namespace dsing
