#ifndef VOABIM_IDENTITIES_HPP
#define VOABIM_IDENTITIES_HPP

#include "voabim/laurent.hpp"

#include <vector>

namespace voabim {

// Closed-form combinatorial identities behind the product/span machinery.
// Each verifier evaluates its identity as an exact Laurent polynomial (no
// truncation is involved) and reports whether it holds.

// sum_{i=0}^{m} (-1)^i C(n+i,i) (1+z)^{n+1} z^{-n-i-1}
//   - sum_{i=0}^{n} (-1)^m C(m+i,i) (1+z)^i z^{-m-i-1}  ==  1
bool verify_kernel_identity(int m, int n);

// sum_{i=0}^{n} (-1)^i C(m+i,i) *
//   ( sum_{j=0}^{n-i} (-1)^j C(-m-i-1,j) sum_{l=0}^{i} C(i,l) z2^{j+l} z1^{-j-i}
//     - z1^{-i} )  ==  0
bool verify_bivariate_kernel_vanishing(int n, int m);

// sum_{j=0}^{k+1-l} (-1)^j C(-l,j) sum_{i=0}^{k+1-l-j} (-1)^i C(l+i+j-1,i)
//   z^{-(i+j+l)}  ==  z^{-l}     (requires k+1-l >= 0 and l >= 1)
bool verify_inverse_power_expansion(int k, int l);

// sum_{i=0}^{k} C(n+m-p+i, i) C(-(n+m-p)-i-1, k-i)  ==  0   for 1 <= k <= p
bool verify_vandermonde_vanishing(int n, int m, int p, int k);

// Grid drivers. Each returns the list of parameter tuples that failed
// (empty = identity held everywhere on the grid).
std::vector<std::vector<int>> kernel_identity_grid(int max_m, int max_n);
std::vector<std::vector<int>> bivariate_kernel_grid(int max_n, int max_m);
std::vector<std::vector<int>> inverse_power_grid(int max_k, int max_l);
std::vector<std::vector<int>> vandermonde_grid(int max_n, int max_m, int max_p);

} // namespace voabim

#endif
