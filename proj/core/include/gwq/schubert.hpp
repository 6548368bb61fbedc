#pragma once

#include <climits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gwq/partition.hpp"
#include "gwq/rational.hpp"

namespace gwq {

struct Box {
  int rows;
  int cols;
};

inline constexpr int kUnboundedCols = INT_MAX;

// All mu containing lambda with |mu| = |lambda| + p such that mu/lambda is a
// horizontal strip and mu fits in the box. Sorted, no duplicates.
std::vector<Partition> pieri(const Partition& lambda, int p, Box box);

using LrMap = std::map<Partition, Integer>;

// Littlewood-Richardson coefficients c^nu_{lambda,mu} restricted to nu with at
// most max_rows rows. Expands s_mu by Jacobi-Trudi and applies iterated Pieri.
LrMap lr_coeffs(const Partition& lambda, const Partition& mu, int max_rows);

// Same coefficients by enumerating Littlewood-Richardson tableaux of shape
// nu/lambda and content mu (lattice reading words). Slower; kept as a check
// on lr_coeffs.
LrMap lr_coeffs_by_tableaux(const Partition& lambda, const Partition& mu, int max_rows);

struct DegCoefficient {
  Integer value;
  int m = 0;
  int n = 0;
};

/// Degree of the degeneracy locus pulled back from sigma_lambda on
/// Gr(m-n, C^m) to P(Hom(C^m, C^n)):
///
///   d(lambda) = det[ c_{lambda_i + j - i}((1-H)^{-(n + i - lambda_i)}) ]
///
/// where c_p((1-H)^{-q}) = binom(q + p - 1, p). For a one-row partition
/// (k) this is binom(n, k). Returns 0 when lambda is outside the
/// (m-n) x n box; throws ParameterError unless 0 < n < m.
DegCoefficient dlambda(const Partition& lambda, int m, int n);

struct QuantumTerm {
  Partition shape;
  int degree = 0;
  auto operator<=>(const QuantumTerm&) const = default;
  bool operator==(const QuantumTerm&) const = default;
};

// Element of QH*(Gr(k,m)) in the Schubert basis: sum of coeff * q^degree * sigma_shape.
using QuantumMap = std::map<QuantumTerm, Integer>;

struct RimHookReduction {
  Partition core;
  int hooks = 0;  // number of m-rim hooks removed (the power of q)
  int sign = 1;
};

// Strips m-rim hooks from nu (at most k rows) until it fits the k x (m-k)
// box. Each removed hook of height h contributes (-1)^(k-h). Returns nullopt
// when nu gets stuck outside the box.
std::optional<RimHookReduction> reduce_rim_hooks(const Partition& nu, int k, int m);

// Quantum product sigma_lambda * sigma_mu in QH*(Gr(k,m)).
QuantumMap quantum_lr(int k, int m, const Partition& lambda, const Partition& mu);

// Bilinear extension of quantum_lr.
QuantumMap quantum_multiply(int k, int m, const QuantumMap& a, const QuantumMap& b);

// <sigma_lambda, sigma_mu, sigma_nu>_d on Gr(k,m); zero unless
// |lambda| + |mu| + |nu| = k(m-k) + m d.
Integer quantum_3point(int k, int m, const Partition& lambda, const Partition& mu,
                       const Partition& nu, int d);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer integer_determinant(std::vector<std::vector<Integer>> a);

}  // namespace gwq
