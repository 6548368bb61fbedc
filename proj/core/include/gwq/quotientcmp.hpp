#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwq/cohmodel.hpp"
#include "gwq/gwengine.hpp"
#include "gwq/partition.hpp"
#include "gwq/rational.hpp"

namespace gwq {

enum class FamilyKind {
  // C* acting on P^{m+n+1} with weights (+1 on z, -1 on w); quotient P^m x P^n.
  TorusPair,
  // SL_n acting on P(Hom(C^m, C^n)); quotient Gr(m-n, C^m) via A -> ker A.
  GrassmannQuot,
};

struct QuotientFamily {
  FamilyKind kind{};
  int m = 0;
  int n = 0;
  RingModel upstairs;    // X
  RingModel downstairs;  // X//G
  int dim_G = 0;
  BasisClass slice;      // zeta, the class of a rational slice of X^ss -> X//G

  std::string id() const;  // "torus:1,1", "grass:3,2"
};

QuotientFamily make_family(FamilyKind kind, int m, int n);

// phi_* of the degree-d class upstairs: (d,d) for the torus family, n*d for
// the Grassmannian family.
CurveClass pushforward_class(const QuotientFamily& family, long d);

// Correspondence pullback of a downstairs basis class:
// H1^a H2^b -> H^{a+b}, sigma_lambda -> d(lambda) H^{|lambda|}.
ClassVector pullback_class(const QuotientFamily& family, const BasisClass& cls);

struct DimensionLedger {
  long D_hat = 0;                    // exp. dim of M_{g,k}(X//G, phi_* A)
  long D_minus_dimG = 0;             // exp. dim of M_{g,k}(X, A) minus dim G
  long gap = 0;                      // D_hat - D_minus_dimG, equal to g * dim G
  std::optional<long> real_dim_2D;   // torus families only
};

DimensionLedger dimension_ledger(const QuotientFamily& family, int g, int k, long d);

// k = sum |lambda_j| - m n d - n (m - n) + 3
long grassmann_k_formula(const std::vector<Partition>& lambdas, int m, int n, long d);

struct ComparisonOptions {
  std::size_t slice_slot = 0;  // insertion that carries zeta
  bool probe_all_slots = false;
  EnginePool* pool = nullptr;  // default_pool() when null
};

struct ComparisonReport {
  Rational lhs;  // GW on X//G
  Rational rhs;  // GW on X with zeta-corrected insertions
  bool equal = false;
  bool lhs_dim_ok = false;
  bool rhs_dim_ok = false;
  DimensionLedger ledger;
  std::size_t slice_slot = 0;
  // With probe_all_slots: the right-hand side with zeta moved to each slot.
  std::vector<Rational> rhs_by_slot;
  std::optional<bool> slots_agree;
  std::vector<std::string> warnings;
};

/// Computes both sides of
///
///   GW_{X//G, phi_* A}(a_1, ..., a_k) = GW_{X, A}(f^* a_1 * zeta, f^* a_2, ..., f^* a_k)
///
/// exactly. For the Grassmannian family the left side is a rim-hook
/// three-point invariant when k = 3 and a WDVV invariant of P^{m-1} when the
/// Grassmannian is a projective space; other configurations throw
/// UnsupportedError. Requires d >= 1.
ComparisonReport verify_comparison(const QuotientFamily& family, long d,
                                   const std::vector<BasisClass>& insertions,
                                   const ComparisonOptions& options = {});

}  // namespace gwq
