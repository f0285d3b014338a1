#include "pqvol/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "pqvol/errors.hpp"
#include "pqvol/matching.hpp"

namespace pqvol {

namespace {

void require_nonnegative(const IntPolynomial& p, const char* op) {
  for (const auto& c : p.coeffs())
    if (c < 0)
      throw InternalError(std::string(op) + ": negative coefficient " + c.get_str() +
                          " in the result; the decomposition identity was violated");
}

const IntPolynomial& one_poly() {
  static const IntPolynomial one = IntPolynomial::constant(BigInt(1));
  return one;
}

}  // namespace

IntPolynomial hstar_pq_join(const std::vector<Graph>& parts) {
  const std::size_t s = parts.size();
  if (s < 2)
    throw std::invalid_argument("hstar_pq_join: the join decomposition needs s >= 2 parts, got " +
                                std::to_string(s));
  int m = 0;
  for (const auto& g : parts) {
    if (g.vertex_count() < 1) throw std::invalid_argument("hstar_pq_join: empty part");
    m += g.vertex_count();
  }
  IntPolynomial acc;
  for (const auto& g : parts) {
    const int fill = m - g.vertex_count() - 1;
    const Graph base = fill > 0 ? join({g, make_complete(fill)}) : g;
    acc += pms_polynomial(to_graph(bipartite_double(base)));
  }
  acc -= BigInt(static_cast<long>(s) - 1) * narayana_square_poly(m);
  require_nonnegative(acc, "hstar_pq_join");
  return acc;
}

IntPolynomial f_poly(long ell, long m) {
  if (ell < 1 || m < 1)
    throw std::invalid_argument("f_poly: need ell >= 1 and m >= 1, got ell = " +
                                std::to_string(ell) + ", m = " + std::to_string(m));
  std::vector<BigInt> coeffs(static_cast<std::size_t>(ell + m), BigInt(0));
  for (long k = 0; k <= ell + m - 1; ++k) {
    BigInt total(0);
    for (long alpha = 0; alpha <= k; ++alpha) {
      const BigInt outer = binomial(ell - 1, k - alpha) * binomial(m, alpha);
      if (outer == 0) continue;
      BigInt inner(0);
      for (long beta = alpha; beta <= k; ++beta)
        inner += binomial(ell + alpha - 1, beta) * binomial(m - alpha, k - beta);
      total += outer * inner;
    }
    coeffs[static_cast<std::size_t>(k)] = total;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial hstar_complete_multipartite(const std::vector<int>& parts) {
  const std::size_t s = parts.size();
  if (s < 2)
    throw std::invalid_argument(
        "hstar_complete_multipartite: need s >= 2 parts, got " + std::to_string(s));
  long m = 0;
  for (int mi : parts) {
    if (mi < 1)
      throw std::invalid_argument("hstar_complete_multipartite: part size must be >= 1, got " +
                                  std::to_string(mi));
    m += mi;
  }
  IntPolynomial acc;
  for (int mi : parts) acc += f_poly(m - mi, mi);
  acc -= BigInt(static_cast<long>(s) - 1) * narayana_square_poly(m);
  require_nonnegative(acc, "hstar_complete_multipartite");
  return acc;
}

IntPolynomial gamma_poly(long n) {
  if (n < 0) throw std::invalid_argument("gamma_poly: negative index");
  if (n == 0) return one_poly();
  const IntPolynomial two_x = IntPolynomial::monomial(BigInt(2), 1);
  IntPolynomial prev = IntPolynomial::constant(BigInt(2));  // a_0
  IntPolynomial cur = one_poly();                           // a_1
  for (long t = 2; t <= n; ++t) {
    IntPolynomial next = cur + two_x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (n % 2 == 0) cur -= IntPolynomial::monomial(BigInt(2), static_cast<std::size_t>(n / 2));
  return cur;
}

IntPolynomial hstar_wheel(long n) {
  if (n < 3) throw std::invalid_argument("hstar_wheel: need n >= 3, got " + std::to_string(n));

  IntPolynomial sum;
  for (long k = 0; k <= n; ++k)
    sum += binomial(n, k) * (gamma_poly(n - k) * IntPolynomial::monomial(BigInt(1), static_cast<std::size_t>(k)));

  // Independent closed form from the two linear recurrences with
  // characteristic equations t^2 = (1+2x) t - (x^2-x) and
  // t^2 = 2x t - (x^2-x).
  const IntPolynomial x2_minus_x =
      IntPolynomial::monomial(BigInt(1), 2) - IntPolynomial::monomial(BigInt(1), 1);
  const IntPolynomial one_plus_2x = one_poly() + IntPolynomial::monomial(BigInt(2), 1);
  const IntPolynomial two_x = IntPolynomial::monomial(BigInt(2), 1);
  IntPolynomial b_prev = IntPolynomial::constant(BigInt(2)), b_cur = one_plus_2x;
  IntPolynomial c_prev = IntPolynomial::constant(BigInt(2)), c_cur = two_x;
  for (long t = 2; t <= n; ++t) {
    IntPolynomial b_next = one_plus_2x * b_cur - x2_minus_x * b_prev;
    b_prev = std::move(b_cur);
    b_cur = std::move(b_next);
    IntPolynomial c_next = two_x * c_cur - x2_minus_x * c_prev;
    c_prev = std::move(c_cur);
    c_cur = std::move(c_next);
  }
  const IntPolynomial closed =
      b_cur + IntPolynomial::monomial(BigInt(1), static_cast<std::size_t>(n)) - c_cur;
  if (sum != closed)
    throw InternalError("hstar_wheel: binomial-gamma sum and recurrence closed form disagree at n = " +
                        std::to_string(n));
  require_nonnegative(sum, "hstar_wheel");
  return sum;
}

}  // namespace pqvol
