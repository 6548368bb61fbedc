// Acceptance checks, one line per criterion. Exit status is non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gwq/class_syntax.hpp"
#include "gwq/gwengine.hpp"
#include "gwq/quotientcmp.hpp"
#include "gwq/schubert.hpp"

using namespace gwq;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail.clear();
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& s) {
    if (ok) detail = s;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (s > limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::printf("criterion %d: %s  %s [%.3f s] %s\n", id, o.ok ? "PASS" : "FAIL", title, s, o.detail.c_str());
  std::fflush(stdout);
}

std::string q(const Rational& r) { return to_string(r); }

// Balanced lists of codim >= 2 classes on the quotient at degree d with at
// least two distinct classes, highest codimension first.
std::vector<std::vector<BasisClass>> mixed_lists(const QuotientFamily& f, long d, int max_k) {
  const RingModel& X = f.downstairs;
  CurveClass A = pushforward_class(f, d);
  std::vector<BasisClass> cls;
  for (const auto& b : X.basis())
    if (b.codim() >= 2) cls.push_back(b);
  std::sort(cls.begin(), cls.end(), [](const auto& a, const auto& b) {
    return a.codim() != b.codim() ? a.codim() > b.codim() : a < b;
  });
  std::vector<std::vector<BasisClass>> out;
  std::vector<BasisClass> cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t from, long codim) {
    if (!cur.empty() && codim == X.expected_dim(0, static_cast<int>(cur.size()), A) &&
        std::adjacent_find(cur.begin(), cur.end(), std::not_equal_to<>()) != cur.end())
      out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_k) return;
    for (std::size_t i = from; i < cls.size(); ++i) {
      cur.push_back(cls[i]);
      rec(i, codim + cls[i].codim());
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

QuantumMap basis_element(const Partition& p) { return QuantumMap{{QuantumTerm{p, 0}, 1}}; }

}  // namespace

int main() {
  criterion(1, "d(lambda) binomial law, 1<=k<=n<=6, n<m<=8", 1.0, [](Outcome& o) {
    int checked = 0;
    for (int n = 1; n <= 6; ++n)
      for (int m = n + 1; m <= 8; ++m)
        for (int k = 1; k <= n; ++k) {
          if (k > m - n) continue;  // (k) must fit the (m-n) x n box
          ++checked;
          auto v = dlambda(Partition{k}, m, n).value;
          if (v != binomial(n, k))
            o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " got " + to_string(v));
        }
    o.note(std::to_string(checked) + " cases");
  });

  criterion(2, "torus family identity, (1,1) pt^(4d-1) d=1,2; (1,2),(2,2) d=1 mixed", 300.0, [](Outcome& o) {
    std::ostringstream note;
    for (long d = 1; d <= 2; ++d) {
      EnginePool pool;
      ComparisonOptions opt;
      opt.pool = &pool;
      auto f = make_family(FamilyKind::TorusPair, 1, 1);
      auto t0 = Clock::now();
      auto r = verify_comparison(f, d, std::vector<BasisClass>(static_cast<std::size_t>(4 * d - 1),
                                                                f.downstairs.point()),
                                 opt);
      double s = std::chrono::duration<double>(Clock::now() - t0).count();
      note << "d=" << d << " lhs=" << q(r.lhs) << " rhs=" << q(r.rhs) << "; ";
      if (!r.equal) o.fail("torus:1,1 d=" + std::to_string(d) + " lhs=" + q(r.lhs) + " rhs=" + q(r.rhs));
      if (d == 1 && s > 1.0) o.fail("torus:1,1 d=1 over 1 s");
    }
    for (auto [m, n] : {std::pair{1, 2}, {2, 2}}) {
      auto f = make_family(FamilyKind::TorusPair, m, n);
      int total = 0, equal = 0;
      std::string first_bad;
      for (const auto& list : mixed_lists(f, 1, f.downstairs.complex_dimension() + 2)) {
        auto r = verify_comparison(f, 1, list);
        ++total;
        if (r.equal) ++equal;
        else if (first_bad.empty())
          first_bad = format_class_list(f.downstairs, list) + " lhs=" + q(r.lhs) + " rhs=" + q(r.rhs);
      }
      note << f.id() << " " << equal << "/" << total << " equal; ";
      if (total == 0) o.fail(f.id() + " no balanced mixed lists");
      if (equal != total)
        o.fail(f.id() + " " + std::to_string(total - equal) + "/" + std::to_string(total) +
               " unequal, e.g. " + first_bad);
    }
    o.note(note.str());
  });

  criterion(3, "GrassmannQuot(3,2) d=1 sigma_2^5: lhs = rhs = 1", 60.0, [](Outcome& o) {
    auto f = make_family(FamilyKind::GrassmannQuot, 3, 2);
    auto r = verify_comparison(f, 1, parse_class_list(f.downstairs, "s[2]*5"));
    if (!(r.lhs == 1 && r.rhs == 1 && r.equal)) o.fail("lhs=" + q(r.lhs) + " rhs=" + q(r.rhs));
    o.note("lhs=" + q(r.lhs) + " rhs=" + q(r.rhs));
  });

  criterion(4, "GrassmannQuot(4,2) d=1 sigma_{2,2}^3: lhs = rhs = 1", 1.0, [](Outcome& o) {
    auto f = make_family(FamilyKind::GrassmannQuot, 4, 2);
    auto r = verify_comparison(f, 1, parse_class_list(f.downstairs, "s[2,2]*3"));
    if (!(r.lhs == 1 && r.rhs == 1 && r.equal)) o.fail("lhs=" + q(r.lhs) + " rhs=" + q(r.rhs));
    o.note("lhs=" + q(r.lhs) + " rhs=" + q(r.rhs));
  });

  criterion(5, "engine pins: N_1..N_4, P3 lines^4 = sigma_1^4 = 2, P1xP1 (1,1) pt^3 = 1", 120.0, [](Outcome& o) {
    GwEngine p2(RingModel::projective(2));
    const long want[] = {1, 1, 12, 620};
    std::string got;
    for (int d = 1; d <= 4; ++d) {
      auto v = p2.gw0(CurveClass{d}, std::vector<BasisClass>(3 * d - 1, p2.model().point()));
      got += (d > 1 ? "," : "") + q(v);
      if (v != want[d - 1]) o.fail("N_" + std::to_string(d) + " = " + q(v));
    }
    GwEngine p3(RingModel::projective(3));
    auto lines = p3.gw0(CurveClass{1}, parse_class_list(p3.model(), "H^2*4"));
    QuantumMap acc = basis_element(Partition{});
    for (int i = 0; i < 4; ++i) acc = quantum_multiply(2, 4, acc, basis_element(Partition{1}));
    Integer s14 = acc[QuantumTerm{Partition{2, 2}, 0}];
    if (lines != 2 || Rational(s14) != lines) o.fail("lines=" + q(lines) + " sigma_1^4=" + to_string(s14));
    GwEngine quad(RingModel::product(1, 1));
    auto conic = quad.gw0(CurveClass{1, 1}, parse_class_list(quad.model(), "pt*3"));
    if (conic != 1) o.fail("(1,1) pt^3 = " + q(conic));
    o.note("N=" + got + " lines=" + q(lines) + " sigma_1^4=" + to_string(s14) + " (1,1)=" + q(conic));
  });

  criterion(6, "dimension ledger gap = g dim G, g<=5, m,n<=4, d<=3", 1.0, [](Outcome& o) {
    int checked = 0;
    std::vector<QuotientFamily> fams;
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        fams.push_back(make_family(FamilyKind::TorusPair, m, n));
        if (n < m) fams.push_back(make_family(FamilyKind::GrassmannQuot, m, n));
      }
    for (const auto& f : fams)
      for (int g = 0; g <= 5; ++g)
        for (long d = 0; d <= 3; ++d)
          for (int k = 0; k <= 6; ++k) {
            ++checked;
            auto l = dimension_ledger(f, g, k, d);
            if (l.gap != static_cast<long>(g) * f.dim_G || l.D_hat - l.D_minus_dimG != l.gap)
              o.fail(f.id() + " g=" + std::to_string(g) + " gap=" + std::to_string(l.gap));
          }
    o.note(std::to_string(checked) + " ledgers");
  });

  criterion(7, "WDVV residual, permutation invariance, divisor two-path, QH associativity", 300.0, [](Outcome& o) {
    std::mt19937 rng(1729);
    int wdvv = 0, perms = 0, paths = 0, assoc = 0;
    EngineOptions deferred;
    deferred.divisors = EngineOptions::DivisorStrategy::Deferred;
    for (const auto& X : {RingModel::projective(2), RingModel::projective(3), RingModel::product(1, 1),
                          RingModel::product(1, 2)}) {
      GwEngine e(X), lazy(X, deferred), fresh(X);
      std::vector<CurveClass> As;
      for (long a = 0; a <= 3; ++a) {
        if (X.curve_class_rank() == 1) As.push_back(CurveClass{a});
        else
          for (long b = 0; a + b <= 3; ++b) As.push_back(CurveClass{a, b});
      }
      auto pick = [&] { return X.at(rng() % X.size()); };
      auto complete = [&](const CurveClass& A, std::vector<BasisClass>& ins, int extra) {
        long need = X.expected_dim(0, static_cast<int>(ins.size()) + extra, A);
        for (const auto& b : ins) need -= b.codim();
        std::vector<BasisClass> fits;
        for (const auto& b : X.basis())
          if (b.codim() == need) fits.push_back(b);
        if (fits.empty()) return false;
        ins.push_back(fits[rng() % fits.size()]);
        return true;
      };
      for (int count = 0, tries = 0; count < 200 && tries < 100000; ++tries) {
        CurveClass A = As[rng() % As.size()];
        std::vector<BasisClass> R;
        for (int i = static_cast<int>(rng() % 4); i > 0; --i) R.push_back(pick());
        std::vector<BasisClass> abc{pick(), pick(), pick()};
        std::vector<BasisClass> all = abc;
        all.insert(all.end(), R.begin(), R.end());
        if (!complete(A, all, 1)) continue;
        BasisClass d = all.back();
        ++count;
        ++wdvv;
        auto res = e.wdvv_residual(A, abc[0], abc[1], abc[2], d, R);
        if (res != 0) o.fail(X.id() + " WDVV residual " + q(res) + " at A=" + A.to_string());
      }
      for (int count = 0, tries = 0; count < 50 && tries < 100000; ++tries) {
        CurveClass A = As[rng() % As.size()];
        if (A.is_zero()) continue;
        std::vector<BasisClass> ins;
        for (int i = 0; i < 4; ++i) ins.push_back(pick());
        if (!complete(A, ins, 0)) continue;
        ++count;
        Rational v = e.gw0(A, ins);
        for (int p = 0; p < 4; ++p) {
          std::shuffle(ins.begin(), ins.end(), rng);
          ++perms;
          if (fresh.gw0(A, std::vector<ClassVector>(ins.begin(), ins.end())) != v)
            o.fail(X.id() + " permutation changed " + format_class_list(X, ins));
        }
        ++paths;
        if (lazy.gw0(A, ins) != v) o.fail(X.id() + " divisor paths differ on " + format_class_list(X, ins));
      }
    }
    for (auto [k, m] : {std::pair{2, 4}, {2, 5}}) {
      auto box = partitions_in_box(k, m - k);
      for (const auto& a : box)
        for (const auto& b : box)
          for (const auto& c : box) {
            ++assoc;
            auto left = quantum_multiply(k, m, quantum_lr(k, m, a, b), basis_element(c));
            auto right = quantum_multiply(k, m, basis_element(a), quantum_lr(k, m, b, c));
            if (left != right)
              o.fail("Gr(" + std::to_string(k) + "," + std::to_string(m) + ") not associative at " +
                     a.to_string() + b.to_string() + c.to_string());
          }
    }
    o.note(std::to_string(wdvv) + " WDVV, " + std::to_string(perms) + " permutations, " +
           std::to_string(paths) + " two-path, " + std::to_string(assoc) + " associativity triples");
  });

  criterion(8, "rim-hook calibration in QH*(Gr(2,4)): s1*s21 = s22 + q and s2*s2 = s22 + q", 10.0, [](Outcome& o) {
    QuantumMap want{{QuantumTerm{Partition{2, 2}, 0}, 1}, {QuantumTerm{Partition{}, 1}, 1}};
    auto show = [](const QuantumMap& m) {
      std::string s;
      for (const auto& [t, c] : m) {
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*s" + t.shape.to_string() + (t.degree ? "*q^" + std::to_string(t.degree) : "");
      }
      return s.empty() ? std::string("0") : s;
    };
    auto a = quantum_lr(2, 4, Partition{1}, Partition{2, 1});
    auto b = quantum_lr(2, 4, Partition{2}, Partition{2});
    if (a != want) o.fail("s1*s21 = " + show(a));
    if (b != want) o.fail("s2*s2 = " + show(b));
    o.note("s1*s21 = " + show(a) + ", s2*s2 = " + show(b));
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
