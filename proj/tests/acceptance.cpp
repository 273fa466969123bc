// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ellcov/graph.hpp"
#include "ellcov/hurwitz.hpp"
#include "ellcov/integrals.hpp"
#include "ellcov/propagator.hpp"
#include "ellcov/quasimodular.hpp"
#include "ellcov/tropical.hpp"
#include "fixtures.hpp"

using namespace ellcov;

namespace {

// Collects mismatches; a criterion passes when none were recorded.
class Checks {
 public:
  template <class A, class B>
  void equal(const std::string& what, const A& got, const B& want) {
    ++count_;
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures_.push_back(os.str());
    }
  }
  void expect(const std::string& what, bool ok) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }
  int count() const { return count_; }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

void golden_session(Checks& c) {
  c.equal("propagator d=0", rational_form(propagator_coeff(2, 0, 1, 0)),
          std::string("(x(1)^2*x(2)^2)/(x(1)^4-2*x(1)^2*x(2)^2+x(2)^4)"));
  c.equal("propagator d=3", rational_form(propagator_coeff(2, 0, 1, 3)),
          std::string("(3*x(1)^12+x(1)^8*x(2)^4+x(1)^4*x(2)^8+3*x(2)^12)/(x(1)^6*x(2)^6)"));

  const auto g = fixtures::raupe();
  const BranchType a{0, 0, 0, 0, 1, 1};
  const auto order = fixtures::order({3, 1, 2, 4});
  // Constant term in x3, then x1. The Singular answer
  // 2x4^6/(x2^6-2x2^4x4^2+x2^2x4^4) expands as 2 sum (m+1) x2^{2m-2} x4^{2-2m}.
  const int W = 8;
  Laurent p = Laurent::constant(4, Rational(1));
  for (std::size_t k = 0; k < 6; ++k) p = p * edge_factor(g, k, a[k], order, W).expansion;
  const auto chain = p.coeff_in(2, 0).coeff_in(0, 0);
  bool on_ray = true;
  for (const auto& [m, coeff] : chain.terms()) {
    on_ray = on_ray && m[0] == 0 && m[2] == 0 && m[1] + m[3] == 0 && m[1] >= -2;
  }
  c.expect("computeConstant chain stays on the |x2|<|x4| expansion", on_ray);
  for (int k = 0; k < W - 1; ++k) {
    Monomial m;
    m[1] = 2 * k - 2;
    m[3] = 2 - 2 * k;
    c.equal("computeConstant chain coefficient m=" + std::to_string(k), chain.coeff(m),
            Rational(2 * (k + 1)));
  }

  c.equal("evaluateIntegral x3<x1<x2<x4", integral_coeff(g, a, order), Rational(4));
  Rational by_orders(0);
  for (const auto& o : VertexOrder::all(4)) by_orders += integral_coeff(g, a, o);
  c.equal("gromovWitten(P)", by_orders, Rational(8));
  c.equal("gromovWitten(Gamma, (0,0,0,0,1,1))", gromov_witten_a(g, a), Integer(8));
  c.equal("gromovWitten(Gamma, 2)", gromov_witten_d(g, 2), Integer(32));
  c.equal("generatingFunction(Gamma, 2)", to_singular_string(generating_function(g, 2)),
          std::string("8*q(1)^2+8*q(2)*q(3)+8*q(4)^2+8*q(5)*q(6)"));
  c.equal("generatingFunction(theta, 3)",
          to_singular_string(generating_function(fixtures::theta(), 3)),
          std::string("24*q(1)^3+20*q(1)^2*q(2)+20*q(1)*q(2)^2+24*q(2)^3+20*q(1)^2*q(3)"
                      "+20*q(2)^2*q(3)+20*q(1)*q(3)^2+20*q(2)*q(3)^2+24*q(3)^3"
                      "+4*q(1)^2+4*q(1)*q(2)+4*q(2)^2+4*q(1)*q(3)+4*q(2)*q(3)+4*q(3)^2"));
}

void refined_counts(Checks& c) {
  const auto g = fixtures::raupe();
  const BranchType a{0, 2, 1, 0, 0, 1};
  Rational integral_total(0);
  Integer tropical_total(0);
  for (const auto& o : VertexOrder::all(4)) {
    const bool special = o == fixtures::order({1, 3, 4, 2}) || o == fixtures::order({2, 4, 3, 1});
    const auto want = special ? 128 : 0;
    const auto vi = integral_coeff(g, a, o);
    const auto vt = count_covers(g, a, o);
    c.equal("integral " + o.to_string(), vi, Rational(want));
    c.equal("tropical " + o.to_string(), vt, Integer(want));
    integral_total += vi;
    tropical_total += vt;
  }
  c.equal("integral total", integral_total, Rational(256));
  c.equal("tropical total", tropical_total, Integer(256));
}

void series(Checks& c) {
  c.equal("I_Gamma1", i_gamma_series(fixtures::raupe(), 6).to_string(),
          std::string("32*q^4+1792*q^6+25344*q^8+182272*q^10+886656*q^12+O(q^13)"));
  c.equal("I_Gamma2", i_gamma_series(fixtures::k4(), 6).to_string(),
          std::string("1152*q^6+20736*q^8+165888*q^10+843264*q^12+O(q^13)"));
}

std::string vec_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

void quasimodular(Checks& c) {
  auto scaled = [](long num, std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.push_back(Rational(Integer(num * x), Integer(1492992)));
    return out;
  };
  const auto s1 = i_gamma_series(fixtures::raupe(), 8);
  const auto s2 = i_gamma_series(fixtures::k4(), 8);
  // Square systems use q^0..q^12 (7 unknowns); the full series adds two rows.
  const auto r1 = fit(s1.truncated(13), 3);
  const auto r2 = fit(s2.truncated(13), 3);
  c.equal("fit(I_Gamma1)", vec_string(r1.coeffs),
          vec_string(scaled(16, {4, 4, -12, -3, 4, 6, -3})));
  c.equal("fit(I_Gamma2)", vec_string(r2.coeffs),
          vec_string(scaled(24, {0, 3, 0, -9, 0, 9, -3})));
  c.expect("overdetermined fit of I_Gamma1 consistent and unchanged", fit(s1, 3) == r1);
  c.expect("overdetermined fit of I_Gamma2 consistent and unchanged", fit(s2, 3) == r2);
  c.expect("eval_rep round trip I_Gamma1", eval_rep(r1, s1.precision()) == s1);
  c.expect("eval_rep round trip I_Gamma2", eval_rep(r2, s2.precision()) == s2);
}

void cross_oracle(Checks& c) {
  const std::vector<std::pair<int, int>> cases{{1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};
  const auto f2 = f_g(2, 3);
  const auto f3 = f_g(3, 3);
  for (auto [d, g] : cases) {
    const auto sym = hurwitz_count(d, g);
    const auto& f = g == 2 ? f2 : f3;
    c.equal("N_{" + std::to_string(d) + "," + std::to_string(g) + "} sym vs F_g", sym,
            f[static_cast<std::size_t>(2 * d)]);
  }
  c.equal("N_{2,3}", hurwitz_count(2, 3), Rational(2));
}

void properties(Checks& c) {
  for (int genus = 2; genus <= 3; ++genus) {
    for (const auto& g : enumerate_genus(genus)) {
      const bool bridged = has_bridge(g);
      const auto name = edge_list_string(g);
      Integer total(0);
      for (int d = 1; d <= 3; ++d) {
        for (const auto& a : compositions(d, g.edge_count())) {
          const auto n = gromov_witten_a(g, a);
          total += n;
          if (bridged) c.equal("bridged " + name + " vanishes", n, Integer(0));
          if (bridged) continue;
          Rational per_order(0);
          for (const auto& o : VertexOrder::all(g.vertex_count())) {
            const auto v = integral_coeff(g, a, o);
            per_order += v;
            c.equal("order reversal " + name, integral_coeff(g, a, o.reversed()), v);
            IntegralOptions wide;
            wide.w_max = d + 3;
            c.equal("truncation robustness " + name, integral_coeff(g, a, o, wide), v);
          }
          c.equal("sum over orders " + name, per_order, Rational(n));
        }
      }
      if (!bridged) c.expect("bridgeless " + name + " contributes", total > 0);
    }
  }
  for (const auto& g : {fixtures::raupe(), fixtures::k4(), fixtures::theta()}) {
    c.equal("q^0 coefficient " + edge_list_string(g), i_gamma_series(g, 4)[0], Rational(0));
  }
  for (int genus = 2; genus <= 4; ++genus) {
    for (const auto& g : enumerate_genus(genus)) {
      bool found = false;
      try {
        found = is_balanced(g, balanced_orientation(g));
      } catch (const Error&) {
        found = false;
      }
      c.equal("balanced orientation exists iff bridgeless " + edge_list_string(g), found,
              !has_bridge(g));
    }
  }
  for (int w : {0, 2, 4, 6, 12, 18}) {
    for (const auto& m : weight_basis(w)) {
      c.equal("weight of " + monomial_string(m), 2 * m[0] + 4 * m[1] + 6 * m[2], w);
    }
  }
  for (const auto& g : {fixtures::raupe(), fixtures::k4()}) {
    for (const auto& m : fit(i_gamma_series(g, 8), 3).basis) {
      c.equal("fit homogeneity " + monomial_string(m), 2 * m[0] + 4 * m[1] + 6 * m[2], 12);
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Checks&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1 golden Singular session values", golden_session},
      {"2 refined count N_(0,2,1,0,0,1) via integrals and tuples", refined_counts},
      {"3 I_Gamma series for both genus 3 graphs", series},
      {"4 quasimodular fits and overdetermined consistency", quasimodular},
      {"5 monodromy counts equal F_g coefficients", cross_oracle},
      {"6 property suites", properties},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && c.failures().empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << crit.name << "  (" << c.count()
              << " checks, " << secs << " s)\n";
    if (!error.empty()) std::cout << "      exception: " << error << '\n';
    for (const auto& f : c.failures()) std::cout << "      " << f << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
