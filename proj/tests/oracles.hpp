#pragma once

// Reference computations used only by the tests. None of them calls into
// the library's combinatorics; they are slow, direct and easy to read.

#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// N_d: rational plane curves of degree d through 3d-1 points, by
// Kontsevich's recursion.
mpz_class kontsevich(int d);

// Littlewood-Richardson coefficients from the product of Schur polynomials
// in nvars variables, expanded monomial by monomial and peeled off by
// leading terms. Only nu with at most nvars rows appear.
std::map<std::vector<int>, mpz_class> schur_product(const std::vector<int>& lambda,
                                                    const std::vector<int>& mu, int nvars);

// det[ binom(n, lambda_i + j - i) ] by rational Gaussian elimination.
mpq_class giambelli_binomial(const std::vector<int>& lambda, int n);

// Intersection number of sigma_lambda, sigma_mu, sigma_nu on Gr(k, m) from
// the polynomial oracle: coefficient of the complement of nu in s_lambda s_mu.
mpz_class grassmannian_triple(int k, int m, const std::vector<int>& lambda,
                              const std::vector<int>& mu, const std::vector<int>& nu);

}  // namespace oracle
