#include "gwq/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gwq/errors.hpp"

namespace gwq {

namespace {

void check_grassmannian(int k, int m) {
  if (k <= 0 || k >= m) {
    throw ParameterError("Grassmannian needs 0 < k < m, got k=" + std::to_string(k) +
                         " m=" + std::to_string(m));
  }
}

// cur holds lambda's rows plus one trailing zero row; each level restores
// its row before returning.
void grow_strip(const Partition& lambda, int row, int remaining, Box box,
                std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (row >= box.rows || row > lambda.length()) return;
  const int base = lambda.part(row);
  const int cap = row == 0 ? box.cols : std::min(box.cols, lambda.part(row - 1));
  const int room = cap - base;
  auto& slot = cur[static_cast<std::size_t>(row)];
  for (int add = std::min(room, remaining); add >= 0; --add) {
    slot = base + add;
    grow_strip(lambda, row + 1, remaining - add, box, cur, out);
  }
  slot = base;
}

LrMap apply_h(const LrMap& in, int p, int max_rows) {
  LrMap out;
  if (p < 0) return out;
  for (const auto& [shape, c] : in) {
    for (auto& nu : pieri(shape, p, Box{max_rows, kUnboundedCols})) out[nu] += c;
  }
  return out;
}

void drop_zeros(LrMap& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

// Reading word of an LR filling: rows top to bottom, each right to left.
bool is_lattice(const std::vector<std::vector<int>>& rows, int labels) {
  std::vector<int> count(static_cast<std::size_t>(labels) + 2, 0);
  for (const auto& row : rows) {
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const auto v = static_cast<std::size_t>(*it);
      ++count[v];
      if (v > 1 && count[v] > count[v - 1]) return false;
    }
  }
  return true;
}

void enumerate_lr(const Partition& shape, const Partition& mu, int label,
                  std::vector<std::vector<int>>& fill, int max_rows, LrMap& out) {
  if (label > mu.length()) {
    if (is_lattice(fill, mu.length())) out[shape] += 1;
    return;
  }
  for (const auto& next : pieri(shape, mu.part(label - 1), Box{max_rows, kUnboundedCols})) {
    auto saved = fill;
    fill.resize(static_cast<std::size_t>(next.length()));
    for (int r = 0; r < next.length(); ++r) {
      for (int c = shape.part(r); c < next.part(r); ++c) fill[static_cast<std::size_t>(r)].push_back(label);
    }
    enumerate_lr(next, mu, label + 1, fill, max_rows, out);
    fill = std::move(saved);
  }
}

}  // namespace

std::vector<Partition> pieri(const Partition& lambda, int p, Box box) {
  std::vector<Partition> out;
  if (p < 0 || !lambda.fits(box.rows, box.cols)) return out;
  std::vector<int> cur(lambda.parts());
  cur.push_back(0);
  grow_strip(lambda, 0, p, box, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LrMap lr_coeffs(const Partition& lambda, const Partition& mu, int max_rows) {
  LrMap result;
  if (lambda.length() > max_rows || mu.length() > max_rows) return result;
  const int ell = mu.length();
  if (ell == 0) {
    result[lambda] = 1;
    return result;
  }
  // s_mu = det[h_{mu_i - i + j}] = sum_w sgn(w) prod_i h_{mu_i - i + w(i)}.
  // The h's commute, so products are cached on the sorted multiset of indices.
  std::map<std::vector<int>, LrMap> cache;
  std::vector<int> perm(static_cast<std::size_t>(ell));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> hs;
    bool vanishes = false;
    for (int i = 0; i < ell; ++i) {
      const int p = mu.part(i) - i + perm[static_cast<std::size_t>(i)];
      if (p < 0) {
        vanishes = true;
        break;
      }
      if (p > 0) hs.push_back(p);
    }
    if (vanishes) continue;
    std::sort(hs.begin(), hs.end());
    auto it = cache.find(hs);
    if (it == cache.end()) {
      LrMap cur{{lambda, Integer(1)}};
      for (int p : hs) cur = apply_h(cur, p, max_rows);
      it = cache.emplace(hs, std::move(cur)).first;
    }
    const int sign = permutation_sign(perm);
    for (const auto& [nu, c] : it->second) result[nu] += sign * c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  drop_zeros(result);
  return result;
}

LrMap lr_coeffs_by_tableaux(const Partition& lambda, const Partition& mu, int max_rows) {
  LrMap out;
  if (lambda.length() > max_rows || mu.length() > max_rows) return out;
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(lambda.length()));
  enumerate_lr(lambda, mu, 1, fill, max_rows, out);
  return out;
}

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

DegCoefficient dlambda(const Partition& lambda, int m, int n) {
  if (n <= 0 || n >= m) {
    throw ParameterError("d(lambda) needs 0 < n < m, got m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
  }
  DegCoefficient out{0, m, n};
  if (!lambda.fits(m - n, n)) return out;
  const int ell = lambda.length();
  std::vector<std::vector<Integer>> mat(static_cast<std::size_t>(ell),
                                        std::vector<Integer>(static_cast<std::size_t>(ell)));
  for (int i = 1; i <= ell; ++i) {
    const long q = n + i - lambda.part(i - 1);  // >= 1 inside the box
    for (int j = 1; j <= ell; ++j) {
      const long p = lambda.part(i - 1) + j - i;
      mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          p < 0 ? Integer(0) : binomial(q + p - 1, p);
    }
  }
  out.value = integer_determinant(std::move(mat));
  return out;
}

std::optional<RimHookReduction> reduce_rim_hooks(const Partition& nu, int k, int m) {
  check_grassmannian(k, m);
  if (nu.length() > k) return std::nullopt;
  // Beta numbers nu_i + k - i; removing an m-rim hook slides one bead down by m.
  std::vector<int> beads(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) beads[static_cast<std::size_t>(i)] = nu.part(i) + (k - 1 - i);
  RimHookReduction red;
  auto first_part = [&] { return beads.front() - (k - 1); };
  while (first_part() > m - k) {
    const std::set<int> occupied(beads.begin(), beads.end());
    bool moved = false;
    for (auto& b : beads) {
      const int target = b - m;
      if (target < 0 || occupied.count(target)) continue;
      int between = 0;
      for (int other : beads) between += (other > target && other < b);
      const int height = between + 1;
      if ((k - height) % 2 != 0) red.sign = -red.sign;
      b = target;
      moved = true;
      break;
    }
    if (!moved) return std::nullopt;
    std::sort(beads.begin(), beads.end(), std::greater<>());
    ++red.hooks;
  }
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = beads[static_cast<std::size_t>(i)] - (k - 1 - i);
  red.core = Partition(std::move(parts));
  return red;
}

QuantumMap quantum_lr(int k, int m, const Partition& lambda, const Partition& mu) {
  check_grassmannian(k, m);
  if (!lambda.fits(k, m - k) || !mu.fits(k, m - k)) {
    throw ParameterError("Schubert class outside the " + std::to_string(k) + "x" +
                         std::to_string(m - k) + " box");
  }
  QuantumMap out;
  for (const auto& [nu, c] : lr_coeffs(lambda, mu, k)) {
    auto red = reduce_rim_hooks(nu, k, m);
    if (!red) continue;
    out[QuantumTerm{red->core, red->hooks}] += red->sign * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

QuantumMap quantum_multiply(int k, int m, const QuantumMap& a, const QuantumMap& b) {
  QuantumMap out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      for (const auto& [t, c] : quantum_lr(k, m, ta.shape, tb.shape)) {
        out[QuantumTerm{t.shape, t.degree + ta.degree + tb.degree}] += ca * cb * c;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer quantum_3point(int k, int m, const Partition& lambda, const Partition& mu,
                       const Partition& nu, int d) {
  check_grassmannian(k, m);
  if (!nu.fits(k, m - k)) throw ParameterError("Schubert class outside the box");
  if (d < 0) return 0;
  if (lambda.weight() + mu.weight() + nu.weight() != k * (m - k) + m * d) return 0;
  const auto product = quantum_lr(k, m, lambda, mu);
  auto it = product.find(QuantumTerm{nu.complement(k, m - k), d});
  return it == product.end() ? Integer(0) : it->second;
}

}  // namespace gwq
