#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwq/partition.hpp"
#include "gwq/rational.hpp"

namespace gwq {

enum class ModelKind { Projective, Product, Grassmannian };

// A basis element. The tag is the exponent tuple (a) or (a,b) for the
// monomial models and the partition parts for Grassmannians, so in every
// case the codimension is the sum of the tag.
struct BasisClass {
  std::vector<int> tag;

  int codim() const;
  Partition partition() const { return Partition(tag); }

  auto operator<=>(const BasisClass&) const = default;
  bool operator==(const BasisClass&) const = default;
};

// Effective curve class: one component for P^N and Gr(k,m), two for P^m x P^n.
struct CurveClass {
  std::vector<long> components;

  CurveClass() = default;
  explicit CurveClass(std::vector<long> c) : components(std::move(c)) {}
  CurveClass(std::initializer_list<long> c) : components(c) {}

  bool is_zero() const;
  bool effective() const;
  std::string to_string() const;  // "2" or "1,1"

  auto operator<=>(const CurveClass&) const = default;
  bool operator==(const CurveClass&) const = default;
};

// Finite formal combination of basis classes with rational coefficients.
class ClassVector {
 public:
  ClassVector() = default;
  ClassVector(BasisClass b, Rational coeff = 1);  // NOLINT: a class is a vector

  void add(const BasisClass& b, const Rational& coeff);
  const std::map<BasisClass, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BasisClass& b) const;

  ClassVector& operator+=(const ClassVector& other);
  ClassVector& operator*=(const Rational& s);
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator*(const Rational& s, ClassVector v) { return v *= s; }
  bool operator==(const ClassVector&) const = default;

 private:
  std::map<BasisClass, Rational> terms_;
};

// Finite model of H*(X) for X = P^N, P^m x P^n or Gr(k,m). Immutable; copies
// share the underlying tables.
class RingModel {
 public:
  static RingModel projective(int N);
  static RingModel product(int m, int n);
  static RingModel grassmannian(int k, int m);

  ModelKind kind() const { return data_->kind; }
  const std::vector<int>& params() const { return data_->params; }
  // "P3", "P1xP2", "Gr(2,4)".
  const std::string& id() const { return data_->id; }
  int complex_dimension() const { return data_->dim; }
  int curve_class_rank() const { return data_->kind == ModelKind::Product ? 2 : 1; }
  // Cohomology generated by divisors: true for P^N and P^m x P^n.
  bool divisor_generated() const { return data_->kind != ModelKind::Grassmannian; }

  const std::vector<BasisClass>& basis() const { return data_->basis; }
  std::size_t size() const { return data_->basis.size(); }
  const BasisClass& at(std::size_t i) const { return data_->basis[i]; }
  std::optional<std::size_t> find(const BasisClass& b) const;
  std::size_t index_of(const BasisClass& b) const;  // throws ParameterError
  std::size_t fundamental_index() const { return 0; }
  std::size_t point_index() const { return size() - 1; }
  const BasisClass& fundamental() const { return at(fundamental_index()); }
  const BasisClass& point() const { return at(point_index()); }

  const std::vector<std::vector<int>>& pairing_matrix() const { return data_->pairing; }
  const std::vector<std::vector<Rational>>& inverse_pairing() const { return data_->inverse_pairing; }
  const ClassVector& c1() const { return data_->c1; }

  // Structure constants of the cup product on basis indices.
  const std::vector<std::pair<std::size_t, Integer>>& cup_indices(std::size_t i, std::size_t j) const {
    return data_->cup[i * size() + j];
  }
  ClassVector cup(const BasisClass& a, const BasisClass& b) const;
  ClassVector cup(const ClassVector& a, const ClassVector& b) const;
  Rational pairing(const ClassVector& u, const ClassVector& v) const;

  // Throws ParameterError unless A has the right rank and is effective.
  void check_curve_class(const CurveClass& A) const;
  long c1_dot(const CurveClass& A) const;
  // (3 - dim X)(g - 1) + c1(X).A + k
  long expected_dim(int g, int k, const CurveClass& A) const;
  // delta.A for a codimension-one basis class.
  long divisor_degree(std::size_t divisor, const CurveClass& A) const;

  bool operator==(const RingModel& other) const { return id() == other.id(); }

 private:
  struct Data {
    ModelKind kind{};
    std::vector<int> params;
    std::string id;
    int dim = 0;
    std::vector<BasisClass> basis;
    std::map<BasisClass, std::size_t> index;
    std::vector<std::vector<std::pair<std::size_t, Integer>>> cup;
    std::vector<std::vector<int>> pairing;
    std::vector<std::vector<Rational>> inverse_pairing;
    ClassVector c1;
    std::vector<long> c1_weights;  // c1 . A = sum weights[i] * A[i]
  };

  explicit RingModel(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static RingModel finish(Data d);

  std::shared_ptr<const Data> data_;
};

RingModel make_model(ModelKind kind, const std::vector<int>& params);

}  // namespace gwq
