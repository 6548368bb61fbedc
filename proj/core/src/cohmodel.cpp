#include "gwq/cohmodel.hpp"

#include <algorithm>
#include <numeric>

#include "gwq/errors.hpp"
#include "gwq/schubert.hpp"

namespace gwq {

int BasisClass::codim() const { return std::accumulate(tag.begin(), tag.end(), 0); }

bool CurveClass::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](long c) { return c == 0; });
}

bool CurveClass::effective() const {
  return std::all_of(components.begin(), components.end(), [](long c) { return c >= 0; });
}

std::string CurveClass::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(components[i]);
  }
  return s;
}

ClassVector::ClassVector(BasisClass b, Rational coeff) { add(b, coeff); }

void ClassVector::add(const BasisClass& b, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ClassVector::coefficient(const BasisClass& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

ClassVector& ClassVector::operator+=(const ClassVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

ClassVector& ClassVector::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

namespace {

bool graded_less(const BasisClass& a, const BasisClass& b) {
  if (a.codim() != b.codim()) return a.codim() < b.codim();
  return a.tag < b.tag;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular pairing matrix");
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

}  // namespace

RingModel RingModel::finish(Data d) {
  std::sort(d.basis.begin(), d.basis.end(), graded_less);
  for (std::size_t i = 0; i < d.basis.size(); ++i) d.index.emplace(d.basis[i], i);
  const std::size_t n = d.basis.size();
  d.cup.assign(n * n, {});
  const bool monomial = d.kind != ModelKind::Grassmannian;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& out = d.cup[i * n + j];
      if (monomial) {
        BasisClass sum = d.basis[i];
        bool inside = true;
        for (std::size_t f = 0; f < sum.tag.size(); ++f) {
          sum.tag[f] += d.basis[j].tag[f];
          if (sum.tag[f] > d.params[d.kind == ModelKind::Projective ? 0 : f]) inside = false;
        }
        if (inside) out.emplace_back(d.index.at(sum), 1);
      } else {
        const int k = d.params[0];
        const int cols = d.params[1] - k;
        for (const auto& [nu, c] :
             lr_coeffs(d.basis[i].partition(), d.basis[j].partition(), k)) {
          if (nu.fits(k, cols)) out.emplace_back(d.index.at(BasisClass{nu.parts()}), c);
        }
        std::sort(out.begin(), out.end());
      }
    }
  }
  d.pairing.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [idx, c] : d.cup[i * n + j]) {
        if (idx == n - 1) d.pairing[i][j] = static_cast<int>(c.get_si());
      }
    }
  }
  d.inverse_pairing = invert(d.pairing);
  return RingModel(std::make_shared<const Data>(std::move(d)));
}

RingModel RingModel::projective(int N) {
  if (N < 1) throw ParameterError("P^N needs N >= 1, got " + std::to_string(N));
  Data d;
  d.kind = ModelKind::Projective;
  d.params = {N};
  d.id = "P" + std::to_string(N);
  d.dim = N;
  for (int a = 0; a <= N; ++a) d.basis.push_back(BasisClass{{a}});
  d.c1 = ClassVector(BasisClass{{1}}, N + 1);
  d.c1_weights = {N + 1};
  return finish(std::move(d));
}

RingModel RingModel::product(int m, int n) {
  if (m < 1 || n < 1) {
    throw ParameterError("P^m x P^n needs m, n >= 1, got " + std::to_string(m) + "," +
                         std::to_string(n));
  }
  Data d;
  d.kind = ModelKind::Product;
  d.params = {m, n};
  d.id = "P" + std::to_string(m) + "xP" + std::to_string(n);
  d.dim = m + n;
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; b <= n; ++b) d.basis.push_back(BasisClass{{a, b}});
  }
  d.c1 = ClassVector(BasisClass{{1, 0}}, m + 1) + ClassVector(BasisClass{{0, 1}}, n + 1);
  d.c1_weights = {m + 1, n + 1};
  return finish(std::move(d));
}

RingModel RingModel::grassmannian(int k, int m) {
  if (k <= 0 || k >= m) {
    throw ParameterError("Gr(k,m) needs 0 < k < m, got " + std::to_string(k) + "," +
                         std::to_string(m));
  }
  Data d;
  d.kind = ModelKind::Grassmannian;
  d.params = {k, m};
  d.id = "Gr(" + std::to_string(k) + "," + std::to_string(m) + ")";
  d.dim = k * (m - k);
  for (const auto& p : partitions_in_box(k, m - k)) d.basis.push_back(BasisClass{p.parts()});
  d.c1 = ClassVector(BasisClass{{1}}, m);
  d.c1_weights = {m};
  return finish(std::move(d));
}

RingModel make_model(ModelKind kind, const std::vector<int>& params) {
  const std::size_t want = kind == ModelKind::Projective ? 1 : 2;
  if (params.size() != want) throw ParameterError("wrong number of model parameters");
  switch (kind) {
    case ModelKind::Projective:
      return RingModel::projective(params[0]);
    case ModelKind::Product:
      return RingModel::product(params[0], params[1]);
    case ModelKind::Grassmannian:
      return RingModel::grassmannian(params[0], params[1]);
  }
  throw ParameterError("unknown model kind");
}

std::optional<std::size_t> RingModel::find(const BasisClass& b) const {
  auto it = data_->index.find(b);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t RingModel::index_of(const BasisClass& b) const {
  if (auto i = find(b)) return *i;
  std::string tag;
  for (int t : b.tag) tag += (tag.empty() ? "" : ",") + std::to_string(t);
  throw ParameterError("class (" + tag + ") is not in the basis of " + id());
}

ClassVector RingModel::cup(const BasisClass& a, const BasisClass& b) const {
  ClassVector out;
  for (const auto& [idx, c] : cup_indices(index_of(a), index_of(b))) out.add(at(idx), Rational(c));
  return out;
}

ClassVector RingModel::cup(const ClassVector& a, const ClassVector& b) const {
  ClassVector out;
  for (const auto& [ba, ca] : a.terms()) {
    const auto ia = index_of(ba);
    for (const auto& [bb, cb] : b.terms()) {
      for (const auto& [idx, c] : cup_indices(ia, index_of(bb))) out.add(at(idx), ca * cb * c);
    }
  }
  return out;
}

Rational RingModel::pairing(const ClassVector& u, const ClassVector& v) const {
  Rational total = 0;
  for (const auto& [bu, cu] : u.terms()) {
    const auto iu = index_of(bu);
    for (const auto& [bv, cv] : v.terms()) {
      const int g = data_->pairing[iu][index_of(bv)];
      if (g != 0) total += cu * cv * g;
    }
  }
  return total;
}

void RingModel::check_curve_class(const CurveClass& A) const {
  if (static_cast<int>(A.components.size()) != curve_class_rank()) {
    throw ParameterError("curve class " + A.to_string() + " has the wrong rank for " + id());
  }
  if (!A.effective()) throw ParameterError("curve class " + A.to_string() + " is not effective");
}

long RingModel::c1_dot(const CurveClass& A) const {
  check_curve_class(A);
  long s = 0;
  for (std::size_t i = 0; i < A.components.size(); ++i) s += data_->c1_weights[i] * A.components[i];
  return s;
}

long RingModel::expected_dim(int g, int k, const CurveClass& A) const {
  return static_cast<long>(3 - complex_dimension()) * (g - 1) + c1_dot(A) + k;
}

long RingModel::divisor_degree(std::size_t divisor, const CurveClass& A) const {
  const auto& tag = at(divisor).tag;
  if (kind() == ModelKind::Product) return tag[0] == 1 ? A.components[0] : A.components[1];
  return A.components[0];
}

}  // namespace gwq
