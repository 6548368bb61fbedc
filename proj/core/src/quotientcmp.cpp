#include "gwq/quotientcmp.hpp"

#include <algorithm>
#include <numeric>

#include "gwq/errors.hpp"
#include "gwq/schubert.hpp"

namespace gwq {

std::string QuotientFamily::id() const {
  return std::string(kind == FamilyKind::TorusPair ? "torus:" : "grass:") + std::to_string(m) + "," +
         std::to_string(n);
}

QuotientFamily make_family(FamilyKind kind, int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("family parameters must be positive");
  if (kind == FamilyKind::TorusPair) {
    return QuotientFamily{kind,
                          m,
                          n,
                          RingModel::projective(m + n + 1),
                          RingModel::product(m, n),
                          1,
                          BasisClass{{1}}};
  }
  if (n >= m) {
    throw ParameterError("Grassmannian family needs n < m, got m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
  }
  return QuotientFamily{kind,
                        m,
                        n,
                        RingModel::projective(m * n - 1),
                        RingModel::grassmannian(m - n, m),
                        n * n - 1,
                        BasisClass{{n * n - 1}}};
}

CurveClass pushforward_class(const QuotientFamily& family, long d) {
  if (d < 0) throw ParameterError("degree must be non-negative");
  if (family.kind == FamilyKind::TorusPair) return CurveClass{d, d};
  return CurveClass{family.n * d};
}

ClassVector pullback_class(const QuotientFamily& family, const BasisClass& cls) {
  family.downstairs.index_of(cls);
  if (family.kind == FamilyKind::TorusPair) return ClassVector(BasisClass{{cls.codim()}});
  const Integer coeff = dlambda(cls.partition(), family.m, family.n).value;
  return ClassVector(BasisClass{{cls.codim()}}, Rational(coeff));
}

DimensionLedger dimension_ledger(const QuotientFamily& family, int g, int k, long d) {
  if (g < 0 || k < 0) throw ParameterError("genus and number of points must be non-negative");
  DimensionLedger led;
  const CurveClass up{d};
  led.D_hat = family.downstairs.expected_dim(g, k, pushforward_class(family, d));
  led.D_minus_dimG = family.upstairs.expected_dim(g, k, up) - family.dim_G;
  led.gap = led.D_hat - led.D_minus_dimG;
  if (led.gap != static_cast<long>(g) * family.dim_G) {
    throw std::logic_error("expected-dimension gap " + std::to_string(led.gap) + " differs from g*dim G");
  }
  if (family.kind == FamilyKind::TorusPair) {
    // Fixed domain curve of genus g, rank-r torus: 2(1-g)(n-r) + 2 c1.B + 2k.
    const long n = family.upstairs.complex_dimension();
    led.real_dim_2D = 2L * (1 - g) * (n - family.dim_G) + 2 * family.upstairs.c1_dot(up) + 2L * k;
  }
  return led;
}

long grassmann_k_formula(const std::vector<Partition>& lambdas, int m, int n, long d) {
  long total = 0;
  for (const auto& l : lambdas) total += l.weight();
  return total - static_cast<long>(m) * n * d - static_cast<long>(n) * (m - n) + 3;
}

namespace {

// Gr(1,m) and Gr(m-1,m) are P^{m-1}: sigma_(j) resp. sigma_(1^j) is H^j.
bool grassmannian_is_projective(const QuotientFamily& family) {
  const int k = family.m - family.n;
  return k == 1 || k == family.m - 1;
}

Rational quotient_side(const QuotientFamily& family, long d, const std::vector<BasisClass>& insertions,
                       EnginePool& pool) {
  const CurveClass A_hat = pushforward_class(family, d);
  if (family.kind == FamilyKind::TorusPair) {
    return pool.get(family.downstairs).gw0(A_hat, insertions);
  }
  const int k = family.m - family.n;
  if (grassmannian_is_projective(family)) {
    const RingModel proj = RingModel::projective(family.m - 1);
    std::vector<BasisClass> mapped;
    for (const auto& b : insertions) mapped.push_back(BasisClass{{b.codim()}});
    return pool.get(proj).gw0(A_hat, mapped);
  }
  if (insertions.size() != 3) {
    throw UnsupportedError("Gr(" + std::to_string(k) + "," + std::to_string(family.m) +
                           ") invariants are only available with three insertions");
  }
  return gw0_grassmannian_3pt(k, family.m, insertions[0].partition(), insertions[1].partition(),
                              insertions[2].partition(), static_cast<int>(A_hat.components[0]));
}

Rational ambient_side(const QuotientFamily& family, long d, const std::vector<BasisClass>& insertions,
                      std::size_t slot, EnginePool& pool) {
  std::vector<ClassVector> pulled;
  for (const auto& b : insertions) pulled.push_back(pullback_class(family, b));
  pulled[slot] = family.upstairs.cup(pulled[slot], ClassVector(family.slice));
  return pool.get(family.upstairs).gw0(CurveClass{d}, pulled);
}

}  // namespace

ComparisonReport verify_comparison(const QuotientFamily& family, long d,
                                   const std::vector<BasisClass>& insertions,
                                   const ComparisonOptions& options) {
  if (d < 1) throw ParameterError("comparison needs degree d >= 1");
  if (insertions.empty()) throw ParameterError("comparison needs at least one insertion");
  if (options.slice_slot >= insertions.size()) throw ParameterError("slice slot out of range");
  for (const auto& b : insertions) family.downstairs.index_of(b);
  EnginePool& pool = options.pool ? *options.pool : default_pool();

  ComparisonReport rep;
  rep.slice_slot = options.slice_slot;
  const int k = static_cast<int>(insertions.size());
  rep.ledger = dimension_ledger(family, 0, k, d);

  long codims = 0;
  for (const auto& b : insertions) codims += b.codim();
  rep.lhs_dim_ok = codims == rep.ledger.D_hat;
  rep.rhs_dim_ok = codims + family.slice.codim() == family.upstairs.expected_dim(0, k, CurveClass{d});

  if (family.kind == FamilyKind::GrassmannQuot) {
    std::vector<Partition> lambdas;
    for (const auto& b : insertions) lambdas.push_back(b.partition());
    const long balanced = grassmann_k_formula(lambdas, family.m, family.n, d);
    if (balanced != k) {
      rep.warnings.push_back("k=" + std::to_string(k) + " but the dimension constraint gives k=" +
                             std::to_string(balanced));
    }
  }

  rep.lhs = quotient_side(family, d, insertions, pool);
  rep.rhs = ambient_side(family, d, insertions, options.slice_slot, pool);
  rep.equal = rep.lhs == rep.rhs;

  if (options.probe_all_slots) {
    for (std::size_t s = 0; s < insertions.size(); ++s) {
      rep.rhs_by_slot.push_back(s == options.slice_slot ? rep.rhs
                                                        : ambient_side(family, d, insertions, s, pool));
    }
    rep.slots_agree = std::all_of(rep.rhs_by_slot.begin(), rep.rhs_by_slot.end(),
                                  [&](const Rational& r) { return r == rep.rhs; });
  }
  return rep;
}

}  // namespace gwq
