#include <catch_amalgamated.hpp>

#include <random>

#include "ellcov/hurwitz.hpp"

using namespace ellcov;

namespace {

Permutation cyc(std::size_t d, const std::string& s) { return Permutation::from_cycles(d, s); }

Permutation random_perm(std::size_t d, std::mt19937& rng) {
  auto p = Permutation::identity(d).image();
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto p = cyc(4, "(1 3)(2 4)");
  CHECK(p.to_string() == "(1 3)(2 4)");
  CHECK(p(0) == 2);
  CHECK(cyc(4, "(2,3,4)").to_string() == "(2 3 4)");
  CHECK(cyc(3, "").is_identity());
  CHECK(cyc(3, "()").to_string() == "()");
  CHECK(cyc(4, "(1 2)").is_transposition());
  CHECK_FALSE(cyc(4, "(1 2 3)").is_transposition());
  CHECK_FALSE(p.is_transposition());
  CHECK(cyc(5, "(1 2 3)(4 5)").cycle_type() == std::vector<int>{3, 2});
  CHECK(cyc(4, "(1 2)").cycle_type() == std::vector<int>{2, 1, 1});
  // Right to left: (1 2) o (2 3) sends 2 -> 3, 3 -> 2 -> 1, 1 -> 2.
  CHECK((cyc(3, "(1 2)") * cyc(3, "(2 3)")).to_string() == "(1 2 3)");
  const auto q = cyc(5, "(1 4 2)(3 5)");
  CHECK((q * q.inverse()).is_identity());
  CHECK_THROWS_AS(cyc(3, "(1 4)"), Error);
  CHECK_THROWS_AS(cyc(3, "(1 2"), Error);
  CHECK_THROWS_AS(cyc(3, "(1 1)"), Error);
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
}

TEST_CASE("the worked monodromy tuple") {
  const std::vector<Permutation> taus{cyc(4, "(1 3)"), cyc(4, "(2 4)"), cyc(4, "(1 2)"),
                                      cyc(4, "(1 3)")};
  const auto alpha = cyc(4, "(2 3 4)");
  const auto sigma = cyc(4, "(2 3)");
  auto lhs = sigma;
  for (const auto& t : taus) lhs = t * lhs;
  CHECK(lhs.to_string() == "(3 4)");
  CHECK(verify_tuple(taus, alpha, sigma));
}

TEST_CASE("verify_tuple rejects each broken condition") {
  const auto alpha = cyc(4, "(2 3 4)");
  const auto sigma = cyc(4, "(2 3)");
  // Not a transposition.
  CHECK_FALSE(verify_tuple({cyc(4, "(1 3 2)"), cyc(4, "(2 4)")}, alpha, sigma));
  // Relation fails.
  CHECK_FALSE(verify_tuple({cyc(4, "(1 3)"), cyc(4, "(2 4)"), cyc(4, "(1 2)"), cyc(4, "(1 2)")},
                           alpha, sigma));
  // Relation holds but the action is not transitive.
  CHECK_FALSE(verify_tuple({cyc(4, "(1 2)"), cyc(4, "(1 2)")}, Permutation::identity(4),
                           Permutation::identity(4)));
  CHECK(verify_tuple({cyc(2, "(1 2)"), cyc(2, "(1 2)")}, Permutation::identity(2),
                     Permutation::identity(2)));
  // Mixed sizes are not a tuple.
  CHECK_FALSE(verify_tuple({cyc(3, "(1 2)")}, Permutation::identity(2), Permutation::identity(2)));
}

TEST_CASE("small Hurwitz numbers") {
  CHECK(hurwitz_count(2, 3) == 2);
  CHECK(hurwitz_count(1, 2) == 0);
  CHECK(hurwitz_count(1, 3) == 0);
  CHECK(hurwitz_count(2, 2) == 2);
  CHECK(hurwitz_count(3, 2) == 16);
  CHECK(hurwitz_count(3, 3) == 160);
}

TEST_CASE("class reduction agrees with the naive count") {
  HurwitzOptions naive;
  naive.class_reduction = false;
  for (auto [d, g] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}}) {
    CHECK(hurwitz_count(d, g) == hurwitz_count(d, g, naive));
  }
}

TEST_CASE("brute-force count over all tuples with verify_tuple") {
  // d = 3, g = 2: every (tau1, tau2, alpha, sigma) checked directly.
  const auto group = Permutation::all(3);
  std::vector<Permutation> ts;
  for (const auto& p : group) {
    if (p.is_transposition()) ts.push_back(p);
  }
  long count = 0;
  for (const auto& t1 : ts)
    for (const auto& t2 : ts)
      for (const auto& a : group)
        for (const auto& s : group) count += verify_tuple({t1, t2}, a, s) ? 1 : 0;
  CHECK(Rational(count, 6) == hurwitz_count(3, 2));
}

TEST_CASE("class sizes sum to d!") {
  for (int d = 1; d <= 7; ++d) {
    Integer sum(0);
    for (const auto& type : detail::partitions(d)) {
      sum += detail::class_size(type);
      CHECK(detail::cycle_representative(type).cycle_type() == type);
    }
    CHECK(sum == detail::factorial_int(static_cast<std::size_t>(d)));
  }
}

TEST_CASE("simultaneous conjugation preserves validity") {
  std::mt19937 rng(31337);
  const std::size_t d = 4;
  std::vector<Permutation> ts;
  for (const auto& p : Permutation::all(d)) {
    if (p.is_transposition()) ts.push_back(p);
  }
  int valid_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto alpha = random_perm(d, rng);
    const auto sigma = random_perm(d, rng);
    std::vector<Permutation> taus{ts[rng() % ts.size()]};
    // Close the relation with the last transposition when possible.
    const auto target = alpha * sigma * alpha.inverse() * sigma.inverse();
    const auto last = target * taus[0].inverse();
    taus.push_back(last.is_transposition() ? last : ts[rng() % ts.size()]);
    const bool ok = verify_tuple(taus, alpha, sigma);
    valid_seen += ok ? 1 : 0;
    const auto c = random_perm(d, rng);
    const auto ci = c.inverse();
    std::vector<Permutation> conj;
    for (const auto& t : taus) conj.push_back(c * t * ci);
    CHECK(verify_tuple(conj, c * alpha * ci, c * sigma * ci) == ok);
  }
  CHECK(valid_seen > 0);
}

TEST_CASE("work budget") {
  HurwitzOptions tiny;
  tiny.work_budget = 10;
  try {
    hurwitz_count(3, 3, tiny);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  CHECK_THROWS_AS(hurwitz_count(0, 2), Error);
  CHECK_THROWS_AS(hurwitz_count(2, 1), Error);
}
