#include "gwq/gwengine.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gwq/class_syntax.hpp"
#include "gwq/errors.hpp"
#include "gwq/schubert.hpp"

namespace gwq {

// ---------------------------------------------------------------------------
// MemoTable

std::size_t InvariantKeyHash::operator()(const InvariantKey& k) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (long c : k.A.components) mix(static_cast<std::size_t>(c));
  mix(0xffff);
  for (auto i : k.insertions) mix(i);
  return h;
}

std::optional<Rational> MemoTable::find(const InvariantKey& key) const {
#if GWQ_THREAD_SAFE_CACHE
  std::shared_lock lock(mutex_);
#endif
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::insert(const InvariantKey& key, const Rational& value) {
#if GWQ_THREAD_SAFE_CACHE
  std::unique_lock lock(mutex_);
#endif
  table_.try_emplace(key, value);
}

std::size_t MemoTable::size() const {
#if GWQ_THREAD_SAFE_CACHE
  std::shared_lock lock(mutex_);
#endif
  return table_.size();
}

std::vector<std::pair<InvariantKey, Rational>> MemoTable::snapshot() const {
#if GWQ_THREAD_SAFE_CACHE
  std::shared_lock lock(mutex_);
#endif
  return {table_.begin(), table_.end()};
}

// ---------------------------------------------------------------------------
// GwEngine

GwEngine::GwEngine(RingModel model, EngineOptions options)
    : model_(std::move(model)), options_(options) {
  const std::size_t n = model_.size();
  codim_.resize(n);
  by_codim_.resize(static_cast<std::size_t>(model_.complex_dimension()) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    codim_[i] = model_.at(i).codim();
    by_codim_[static_cast<std::size_t>(codim_[i])].push_back(static_cast<Index>(i));
  }
  dual_.resize(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      const auto& g = model_.inverse_pairing()[mu][nu];
      if (g != 0) dual_[mu].emplace_back(static_cast<Index>(nu), g);
    }
  }
  if (!model_.divisor_generated()) return;
  // delta * eps factorizations: peel H (or H1 when its exponent is positive, else H2).
  split_.assign(n, {0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    if (codim_[i] < 2) continue;
    BasisClass delta = model_.at(i);
    BasisClass eps = delta;
    const std::size_t f = eps.tag[0] > 0 ? 0 : 1;
    std::fill(delta.tag.begin(), delta.tag.end(), 0);
    delta.tag[f] = 1;
    eps.tag[f] -= 1;
    split_[i] = {static_cast<Index>(model_.index_of(delta)), static_cast<Index>(model_.index_of(eps))};
  }
}

void GwEngine::require_supported() const {
  if (!model_.divisor_generated()) {
    throw UnsupportedError("WDVV reconstruction needs a divisor-generated model; " + model_.id() +
                           " is not");
  }
}

long GwEngine::expected_dim(const CurveClass& A, std::size_t k) const {
  long c1 = 0;
  const auto& p = model_.params();
  for (std::size_t f = 0; f < A.components.size(); ++f) {
    const int N = model_.kind() == ModelKind::Projective ? p[0] : p[f];
    c1 += (N + 1) * A.components[f];
  }
  return model_.complex_dimension() - 3 + c1 + static_cast<long>(k);
}

GwEngine::Index GwEngine::divisor_for(std::size_t component) const {
  BasisClass b = model_.fundamental();
  b.tag[component] = 1;
  return static_cast<Index>(model_.index_of(b));
}

Rational GwEngine::closed_form(const CurveClass& A, const Insertions& ins) const {
  // Small quantum ring of P^{N_1} x ... : three-point invariants factor and
  // each factor is 1 exactly when the exponents add up to N + (N+1) d.
  const auto& p = model_.params();
  for (std::size_t f = 0; f < A.components.size(); ++f) {
    const long N = model_.kind() == ModelKind::Projective ? p[0] : p[f];
    long s = 0;
    for (auto i : ins) s += model_.at(i).tag[f];
    if (s != N + (N + 1) * A.components[f]) return 0;
  }
  return 1;
}

Rational GwEngine::three_point_closed_form(const CurveClass& A, const BasisClass& a,
                                           const BasisClass& b, const BasisClass& c) const {
  require_supported();
  model_.check_curve_class(A);
  return closed_form(A, {static_cast<Index>(model_.index_of(a)), static_cast<Index>(model_.index_of(b)),
                         static_cast<Index>(model_.index_of(c))});
}

Rational GwEngine::eval(const CurveClass& A, Insertions ins) const {
  if (!A.effective()) return 0;
  std::sort(ins.begin(), ins.end());
  const std::size_t k = ins.size();
  long total = 0;
  for (auto i : ins) total += codim_[i];
  if (total != expected_dim(A, k)) return 0;

  if (A.is_zero()) {
    if (k != 3) return 0;
    for (const auto& [ab, cab] : model_.cup_indices(ins[0], ins[1])) {
      for (const auto& [abc, c] : model_.cup_indices(ab, ins[2])) {
        if (abc == model_.point_index()) return Rational(cab * c);
      }
    }
    return 0;
  }
  if (ins.front() == model_.fundamental_index()) return 0;

  const auto divisors = static_cast<std::size_t>(
      std::count_if(ins.begin(), ins.end(), [&](Index i) { return codim_[i] == 1; }));
  const bool strip = divisors > 0 && (options_.divisors == EngineOptions::DivisorStrategy::Eager ||
                                      k - divisors < 3);
  if (strip) {
    // Sorted by codimension, so the divisors lead.
    const Index delta = ins.front();
    const long deg = model_.divisor_degree(delta, A);
    if (deg == 0) return 0;
    ins.erase(ins.begin());
    return deg * eval(A, std::move(ins));
  }

  InvariantKey key{A, ins};
  if (auto hit = memo_.find(key)) return *hit;
  const Rational value = k < 3 ? base_case(A, ins) : reconstruct(A, ins);
  memo_.insert(key, value);
  return value;
}

Rational GwEngine::base_case(const CurveClass& A, const Insertions& ins) const {
  // Pad with divisors D (D.A = a != 0) up to three points: <ins, D..> = a^j <ins>.
  std::size_t f = 0;
  while (A.components[f] == 0) ++f;
  const Index D = divisor_for(f);
  Insertions padded = ins;
  Rational scale = 1;
  while (padded.size() < 3) {
    padded.push_back(D);
    scale *= A.components[f];
  }
  return closed_form(A, padded) / scale;
}

Rational GwEngine::reconstruct(const CurveClass& A, const Insertions& ins) const {
  // The three lowest-codimension non-divisor insertions g1, g2, g3; the rest
  // (including any deferred divisors) ride along in R.
  std::vector<Index> picked;
  Insertions rest;
  for (auto i : ins) {
    if (codim_[i] >= 2 && picked.size() < 3) {
      picked.push_back(i);
    } else {
      rest.push_back(i);
    }
  }
  const auto [delta, eps] = split_[picked[0]];
  // WDVV with (a,b,c,d) = (delta, eps, g2, g3): the A1 = 0, R1 = {} term on
  // the left is the unknown <delta*eps, g2, g3, R>_A with coefficient one.
  const Rational right = wdvv_side(A, delta, picked[1], eps, picked[2], rest, false);
  const Rational left = wdvv_side(A, delta, eps, picked[1], picked[2], rest, true);
  return right - left;
}

Rational GwEngine::wdvv_side(const CurveClass& A, Index a, Index b, Index c, Index d,
                             const Insertions& rest, bool skip_target) const {
  // sum_{A1+A2=A} sum_{R1+R2=R} sum_{mu,nu} <a,b,R1,T_mu>_{A1} g^{mu nu} <T_nu,c,d,R2>_{A2}
  std::vector<std::pair<Index, int>> groups;
  for (auto i : rest) {
    if (!groups.empty() && groups.back().first == i) {
      ++groups.back().second;
    } else {
      groups.emplace_back(i, 1);
    }
  }
  const std::size_t rank = A.components.size();
  Rational total = 0;

  CurveClass A1(std::vector<long>(rank, 0));
  CurveClass A2 = A;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    // Enumerate sub-multisets R1 of R for this A1.
    std::fill(take.begin(), take.end(), 0);
    while (true) {
      Integer weight = 1;
      Insertions left{a, b};
      Insertions right{0, c, d};
      long left_codim = codim_[a] + codim_[b];
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto [cls, count] = groups[g];
        weight *= binomial(count, take[g]);
        left.insert(left.end(), static_cast<std::size_t>(take[g]), cls);
        right.insert(right.end(), static_cast<std::size_t>(count - take[g]), cls);
        left_codim += static_cast<long>(take[g]) * codim_[cls];
      }
      const std::size_t r1 = left.size() - 2;
      const std::size_t r2 = right.size() - 3;
      const bool target = skip_target && A1.is_zero() && r1 == 0;
      const bool dead = (A1.is_zero() && r1 > 0) || (A2.is_zero() && r2 > 0);
      if (!target && !dead) {
        const long need = expected_dim(A1, r1 + 3) - left_codim;
        if (need >= 0 && need < static_cast<long>(by_codim_.size())) {
          left.push_back(0);
          for (Index mu : by_codim_[static_cast<std::size_t>(need)]) {
            left.back() = mu;
            const Rational v1 = eval(A1, left);
            if (v1 == 0) continue;
            for (const auto& [nu, g] : dual_[mu]) {
              right[0] = nu;
              const Rational v2 = eval(A2, right);
              if (v2 != 0) total += weight * v1 * g * v2;
            }
          }
        }
      }
      std::size_t g = 0;
      while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
      if (g == groups.size()) break;
      ++take[g];
    }
    // Next A1 in the box [0, A].
    std::size_t f = 0;
    while (f < rank && A1.components[f] == A.components[f]) {
      A1.components[f] = 0;
      A2.components[f] = A.components[f];
      ++f;
    }
    if (f == rank) break;
    ++A1.components[f];
    --A2.components[f];
  }
  return total;
}

Rational GwEngine::gw0(const CurveClass& A, const std::vector<ClassVector>& insertions) const {
  require_supported();
  model_.check_curve_class(A);
  if (A.is_zero() && insertions.size() < 3) {
    throw ParameterError("degree-zero invariants need at least three insertions");
  }
  // Expand multilinearly, one insertion slot at a time.
  std::vector<std::vector<std::pair<Index, Rational>>> slots;
  for (const auto& v : insertions) {
    auto& slot = slots.emplace_back();
    for (const auto& [b, c] : v.terms()) slot.emplace_back(static_cast<Index>(model_.index_of(b)), c);
    if (slot.empty()) return 0;
  }
  Rational total = 0;
  std::vector<std::size_t> pos(slots.size(), 0);
  Insertions ins(slots.size());
  while (true) {
    Rational coeff = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      ins[s] = slots[s][pos[s]].first;
      coeff *= slots[s][pos[s]].second;
    }
    total += coeff * eval(A, ins);
    std::size_t s = 0;
    while (s < slots.size() && pos[s] + 1 == slots[s].size()) pos[s++] = 0;
    if (s == slots.size()) break;
    ++pos[s];
  }
  return total;
}

Rational GwEngine::gw0(const CurveClass& A, const std::vector<BasisClass>& insertions) const {
  std::vector<ClassVector> v(insertions.begin(), insertions.end());
  return gw0(A, v);
}

Rational GwEngine::wdvv_residual(const CurveClass& A, const BasisClass& a, const BasisClass& b,
                                 const BasisClass& c, const BasisClass& d,
                                 const std::vector<BasisClass>& R) const {
  require_supported();
  model_.check_curve_class(A);
  auto idx = [&](const BasisClass& x) { return static_cast<Index>(model_.index_of(x)); };
  Insertions rest;
  for (const auto& r : R) rest.push_back(idx(r));
  std::sort(rest.begin(), rest.end());
  return wdvv_side(A, idx(a), idx(b), idx(c), idx(d), rest, false) -
         wdvv_side(A, idx(a), idx(c), idx(b), idx(d), rest, false);
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string GwEngine::format_key(const InvariantKey& key) const {
  std::string s = model_.id() + "|" + key.A.to_string() + "|";
  for (std::size_t i = 0; i < key.insertions.size(); ++i) {
    if (i) s += ',';
    s += format_class(model_, model_.at(key.insertions[i]));
  }
  return s;
}

void GwEngine::save_memo(std::ostream& out) const {
  std::vector<std::string> lines;
  for (const auto& [key, value] : memo_.snapshot()) lines.push_back(format_key(key) + "\t" + to_string(value));
  std::sort(lines.begin(), lines.end());
  std::string body;
  for (const auto& l : lines) body += l + "\n";
  out << "# gwq-memo v1 " << model_.id() << " " << hex64(fnv1a(body)) << "\n" << body;
}

MemoLoadResult GwEngine::load_memo(std::istream& in) {
  MemoLoadResult result;
  auto reject = [&](const std::string& why) {
    result.accepted = false;
    result.entries = 0;
    result.warning = "ignoring memo cache for " + model_.id() + ": " + why;
    return result;
  };
  std::string header;
  if (!std::getline(in, header)) return reject("empty file");
  std::istringstream hs(header);
  std::string hash, tag, version, model_id, checksum;
  hs >> hash >> tag >> version >> model_id >> checksum;
  if (hash != "#" || tag != "gwq-memo" || version != "v1") return reject("bad header");
  if (model_id != model_.id()) return reject("file belongs to model " + model_id);

  std::string body;
  std::vector<std::pair<InvariantKey, Rational>> entries;
  std::string line;
  while (std::getline(in, line)) {
    body += line + "\n";
    const auto tab = line.find('\t');
    if (tab == std::string::npos) return reject("line without a tab");
    const std::string key_text = line.substr(0, tab);
    const auto bar1 = key_text.find('|');
    const auto bar2 = key_text.find('|', bar1 == std::string::npos ? 0 : bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos) return reject("malformed key");
    if (key_text.substr(0, bar1) != model_.id()) return reject("key for another model");
    try {
      InvariantKey key;
      key.A = parse_curve_class(model_, key_text.substr(bar1 + 1, bar2 - bar1 - 1));
      for (const auto& b : parse_class_list(model_, key_text.substr(bar2 + 1))) {
        key.insertions.push_back(static_cast<Index>(model_.index_of(b)));
      }
      if (!std::is_sorted(key.insertions.begin(), key.insertions.end())) return reject("unsorted key");
      entries.emplace_back(std::move(key), parse_rational(line.substr(tab + 1)));
    } catch (const ParameterError& e) {
      return reject(e.what());
    }
  }
  if (hex64(fnv1a(body)) != checksum) return reject("checksum mismatch");
  for (const auto& [k, v] : entries) memo_.insert(k, v);
  result.accepted = true;
  result.entries = entries.size();
  return result;
}

// ---------------------------------------------------------------------------

Rational gw0_grassmannian_3pt(int k, int m, const Partition& lambda, const Partition& mu,
                              const Partition& nu, int d) {
  return Rational(quantum_3point(k, m, lambda, mu, nu, d));
}

GwEngine& EnginePool::get(const RingModel& model) {
#if GWQ_THREAD_SAFE_CACHE
  std::lock_guard lock(mutex_);
#endif
  auto& slot = engines_[model.id()];
  if (!slot) slot = std::make_unique<GwEngine>(model, options_);
  return *slot;
}

std::vector<GwEngine*> EnginePool::engines() {
#if GWQ_THREAD_SAFE_CACHE
  std::lock_guard lock(mutex_);
#endif
  std::vector<GwEngine*> out;
  for (auto& [id, e] : engines_) out.push_back(e.get());
  return out;
}

EnginePool& default_pool() {
  static EnginePool pool;
  return pool;
}

}  // namespace gwq
