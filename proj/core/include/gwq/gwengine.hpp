#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#if GWQ_THREAD_SAFE_CACHE
#include <shared_mutex>
#endif

#include "gwq/cohmodel.hpp"
#include "gwq/partition.hpp"
#include "gwq/rational.hpp"

namespace gwq {

// Canonical key of a genus-0 invariant inside one model's memo table:
// the curve class and the insertions as sorted basis indices. The table
// carries the model id.
struct InvariantKey {
  CurveClass A;
  std::vector<std::uint16_t> insertions;

  bool operator==(const InvariantKey&) const = default;
};

struct InvariantKeyHash {
  std::size_t operator()(const InvariantKey& k) const noexcept;
};

// Pure-function cache. Values are never overwritten: the first writer wins
// and later writers of the same key are expected to carry the same value.
class MemoTable {
 public:
  std::optional<Rational> find(const InvariantKey& key) const;
  void insert(const InvariantKey& key, const Rational& value);
  std::size_t size() const;
  std::vector<std::pair<InvariantKey, Rational>> snapshot() const;

 private:
#if GWQ_THREAD_SAFE_CACHE
  mutable std::shared_mutex mutex_;
#endif
  std::unordered_map<InvariantKey, Rational, InvariantKeyHash> table_;
};

struct EngineOptions {
  // Eager strips divisor insertions with the divisor axiom as soon as they
  // appear. Deferred keeps them inside the WDVV recursion for as long as
  // three non-divisor insertions remain, which gives a second evaluation
  // path for the same invariants.
  enum class DivisorStrategy { Eager, Deferred };
  DivisorStrategy divisors = DivisorStrategy::Eager;
};

struct MemoLoadResult {
  bool accepted = false;
  std::size_t entries = 0;
  std::string warning;  // empty when accepted
};

/// Genus-0 Gromov-Witten invariants of a divisor-generated model (P^N or
/// P^m x P^n) by WDVV reconstruction.
///
/// Invariants with at most two non-divisor insertions come from the
/// three-point invariants of the small quantum ring (H_i^{N_i+1} = q_i,
/// factorwise); everything else is reduced with the divisor axiom and the
/// WDVV relation, splitting the lowest-codimension insertion as delta * eps.
/// Arithmetic is exact and results are memoized on canonical keys.
class GwEngine {
 public:
  explicit GwEngine(RingModel model, EngineOptions options = {});

  const RingModel& model() const { return model_; }
  const EngineOptions& options() const { return options_; }

  // Multilinear in every insertion. Throws UnsupportedError for
  // Grassmannian models and ParameterError for a bad curve class, a class
  // outside the basis, or A = 0 with fewer than three insertions.
  Rational gw0(const CurveClass& A, const std::vector<ClassVector>& insertions) const;
  Rational gw0(const CurveClass& A, const std::vector<BasisClass>& insertions) const;

  // Left minus right side of the WDVV relation for the split {a,b}|{c,d}
  // against {a,c}|{b,d} with the extra insertions R. Always zero.
  Rational wdvv_residual(const CurveClass& A, const BasisClass& a, const BasisClass& b,
                         const BasisClass& c, const BasisClass& d,
                         const std::vector<BasisClass>& R) const;

  // Three-point invariant read off the small quantum ring, bypassing the
  // recursion.
  Rational three_point_closed_form(const CurveClass& A, const BasisClass& a,
                                   const BasisClass& b, const BasisClass& c) const;

  const MemoTable& memo() const { return memo_; }

  // Flat text form: a header line "# gwq-memo v1 <model> <checksum>" followed
  // by one "key<TAB>p/q" line per entry, key = "<model>|<A>|<c1,c2,...>".
  void save_memo(std::ostream& out) const;
  // All-or-nothing: a malformed line, a foreign model or a checksum mismatch
  // rejects the whole stream and leaves the table untouched.
  MemoLoadResult load_memo(std::istream& in);

  std::string format_key(const InvariantKey& key) const;

 private:
  using Index = std::uint16_t;
  using Insertions = std::vector<Index>;

  Rational eval(const CurveClass& A, Insertions ins) const;
  Rational reconstruct(const CurveClass& A, const Insertions& ins) const;
  Rational base_case(const CurveClass& A, const Insertions& ins) const;
  Rational wdvv_side(const CurveClass& A, Index a, Index b, Index c, Index d,
                     const Insertions& rest, bool skip_target) const;
  Rational closed_form(const CurveClass& A, const Insertions& ins) const;
  long expected_dim(const CurveClass& A, std::size_t k) const;
  Index divisor_for(std::size_t component) const;
  void require_supported() const;

  RingModel model_;
  EngineOptions options_;
  std::vector<int> codim_;
  std::vector<std::pair<Index, Index>> split_;  // delta, eps with delta * eps = class
  std::vector<std::vector<std::pair<Index, Rational>>> dual_;  // nonzero g^{mu nu}
  std::vector<std::vector<Index>> by_codim_;
  mutable MemoTable memo_;
};

// <sigma_lambda, sigma_mu, sigma_nu>_d on Gr(k,m) from the rim-hook quantum
// product.
Rational gw0_grassmannian_3pt(int k, int m, const Partition& lambda, const Partition& mu,
                              const Partition& nu, int d);

// One engine per model id, created on first use and shared by every caller.
class EnginePool {
 public:
  explicit EnginePool(EngineOptions options = {}) : options_(options) {}

  GwEngine& get(const RingModel& model);
  std::vector<GwEngine*> engines();

 private:
  EngineOptions options_;
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<GwEngine>> engines_;
};

EnginePool& default_pool();

}  // namespace gwq
