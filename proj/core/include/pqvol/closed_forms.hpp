#pragma once

#include <vector>

#include "pqvol/graph.hpp"
#include "pqvol/polynomial.hpp"

namespace pqvol {

/// h*-polynomial of the PQ-type adjacency polytope of the join
/// G_1 + ... + G_s (s >= 2), via the decomposition
///   sum_i p(D(G_i + K_{m - m_i - 1}), x) - (s-1) sum_k C(m-1, k)^2 x^k.
/// A negative coefficient in the result would falsify the implementation
/// and raises InternalError; it is never clamped.
IntPolynomial hstar_pq_join(const std::vector<Graph>& parts);

/// f_{l,m}(x): the h*-polynomial of the PQ-type adjacency polytope of
/// K_l + E_m, as the exact triple binomial sum
///   sum_k sum_{a=0}^{k} C(l-1, k-a) C(m, a)
///         sum_{b=a}^{k} C(l+a-1, b) C(m-a, k-b) x^k.
IntPolynomial f_poly(long ell, long m);

/// h*-polynomial of the PQ-type adjacency polytope of the complete
/// multipartite graph K_{m_1,...,m_s} (s >= 2):
///   sum_i f_{m - m_i, m_i}(x) - (s-1) sum_k C(m-1, k)^2 x^k.
IntPolynomial hstar_complete_multipartite(const std::vector<int>& parts);

/// gamma(n, x): 1 for n = 0; otherwise a_n, minus 2x^{n/2} when n is even,
/// where a_0 = 2, a_1 = 1, a_t = a_{t-1} + 2x a_{t-2}. The recurrence has
/// characteristic roots (1 +- sqrt(1+8x))/2, so for n >= 3 this equals
/// g(C_n, 2x) (minus the even correction).
IntPolynomial gamma_poly(long n);

/// h*-polynomial of the PQ-type adjacency polytope of the wheel W_n
/// (n >= 3): sum_{k=0}^{n} C(n, k) gamma(n-k, x) x^k. Cross-checked
/// internally against the closed form b_n + x^n - c_n, where
///   b_0 = 2, b_1 = 1+2x, b_t = (1+2x) b_{t-1} - (x^2-x) b_{t-2},
///   c_0 = 2, c_1 = 2x,   c_t = 2x c_{t-1} - (x^2-x) c_{t-2};
/// a mismatch raises InternalError. Value at 1 is 3^n - 2^n + 1.
IntPolynomial hstar_wheel(long n);

}  // namespace pqvol
