#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "vml/core.hpp"

using namespace vml;

TEST_CASE("ExtVal arithmetic and order") {
  const ExtVal inf = ExtVal::inf();
  CHECK((ExtVal::finite(2) + ExtVal::finite(3)) == ExtVal::finite(5));
  CHECK((ExtVal::finite(2) + inf).is_inf());
  CHECK((inf + inf).is_inf());
  CHECK(ExtVal::finite(7) < inf);
  CHECK(min(ExtVal::finite(4), inf) == ExtVal::finite(4));
  CHECK(min(inf, inf).is_inf());
  CHECK(ExtVal().is_inf());
  CHECK_THROWS_AS(ExtVal::finite(1) - inf, InputError);
  CHECK_THROWS_AS(ExtVal::finite(INT64_MAX) + ExtVal::finite(1), InputError);
  CHECK((ExtVal::real(0.5) + ExtVal::finite(1)).to_double() == doctest::Approx(1.5));
}

TEST_CASE("tropical distributivity on random finite values") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const ExtVal x = ExtVal::finite(d(gen)), y = ExtVal::finite(d(gen)), z = ExtVal::finite(d(gen));
    CHECK(min(x + z, y + z) == min(x, y) + z);
    CHECK((x + y) == (y + x));
    CHECK(((x + y) + z) == (x + (y + z)));
  }
}

TEST_CASE("ge_tol is exact on integers and relative on reals") {
  CHECK(ge_tol(ExtVal::finite(3), ExtVal::finite(3)));
  CHECK_FALSE(ge_tol(ExtVal::finite(2), ExtVal::finite(3)));
  CHECK(ge_tol(ExtVal::inf(), ExtVal::inf()));
  CHECK_FALSE(ge_tol(ExtVal::finite(2), ExtVal::inf()));
  CHECK(ge_tol(ExtVal::real(1.0 - 1e-12), ExtVal::real(1.0)));
  CHECK_FALSE(ge_tol(ExtVal::real(0.9), ExtVal::real(1.0)));
}

TEST_CASE("GroundSet labels") {
  const GroundSet g({"a", "b", "c"});
  CHECK(g.size() == 3);
  CHECK(g.index_of("c") == 2);
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InputError);
  CHECK_THROWS_AS(g.concat(GroundSet({"c"})), InputError);
  CHECK(g.concat(GroundSet({"x"})).labels() == std::vector<std::string>{"a", "b", "c", "x"});
  CHECK(GroundSet::numbered(2, "c").labels() == std::vector<std::string>{"c1", "c2"});
}

TEST_CASE("enumerate_subsets") {
  const GroundSet abc({"a", "b", "c"});
  CHECK(enumerate_subsets(abc, 0) == std::vector<Subset>{Subset()});
  CHECK(enumerate_subsets(abc, 2) == std::vector<Subset>{Subset::of({0, 1}), Subset::of({0, 2}), Subset::of({1, 2})});
  CHECK(enumerate_subsets(4, 2).size() == oracle::masks(4, 2).size());
  CHECK_THROWS_AS(enumerate_subsets(abc, 4), InputError);
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto subsets = enumerate_subsets(n, k);
      CHECK(subsets.size() == binomial(n, k));
      CHECK(std::is_sorted(subsets.begin(), subsets.end()));
      std::set<std::uint64_t> masks;
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        masks.insert(subsets[i].mask());
        CHECK(subsets[i].size() == k);
      }
      CHECK(masks.size() == subsets.size());
    }
}

TEST_CASE("colex rank is a bijection onto [0, C(n,k))") {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      std::set<std::uint64_t> ranks;
      for (Subset s : enumerate_subsets(n, k)) ranks.insert(colex_rank(s));
      CHECK(ranks.size() == binomial(n, k));
      if (!ranks.empty()) CHECK(*ranks.rbegin() == binomial(n, k) - 1);
    }
}

TEST_CASE("enumerate_multi_indices") {
  const GroundSet ab({"a", "b"});
  CHECK(enumerate_multi_indices(ab, 2) ==
        std::vector<MultiIndex>{MultiIndex({2, 0}), MultiIndex({1, 1}), MultiIndex({0, 2})});
  CHECK(enumerate_multi_indices(GroundSet({"a"}), 5) == std::vector<MultiIndex>{MultiIndex({5})});
  CHECK(enumerate_multi_indices(3, 2).size() == oracle::compositions(3, 2).size());
  CHECK_THROWS_AS(enumerate_multi_indices(ab, -1), InputError);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 5; ++k) {
      const auto all = enumerate_multi_indices(n, k);
      CHECK(all.size() == binomial(k + n - 1, k));
      CHECK(all.size() == simplex_size(n, k));
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(simplex_rank(all[i]) == i);
      CHECK(std::is_sorted(all.rbegin(), all.rend()));
      // The 0/1 points appear in enumerate_subsets order.
      std::vector<MultiIndex> zero_one;
      for (const auto& a : all)
        if (a.is_zero_one()) zero_one.push_back(a);
      std::vector<MultiIndex> expected;
      if (k <= n)
        for (Subset s : enumerate_subsets(n, k)) expected.push_back(MultiIndex::indicator(n, s));
      CHECK(zero_one == expected);
    }
}

TEST_CASE("multi_index_factorial") {
  CHECK(multi_index_factorial(MultiIndex({0, 0, 0})) == 1);
  CHECK(multi_index_factorial(MultiIndex({2, 1})) == 2);
  CHECK(multi_index_factorial(MultiIndex({3, 2, 1})) == 12);
}

TEST_CASE("binomials") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial_big(60, 30) == BigInt("118264581564861424"));
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == static_cast<std::uint64_t>(oracle::binom(n, k)));
}

TEST_CASE("q_power") {
  const QScalar half = QScalar::exact(Rational(1, 2));
  CHECK(q_power(half, ExtVal::inf()) == 0);
  CHECK(q_power(half, ExtVal::finite(0)) == 1);
  CHECK(q_power(half, ExtVal::finite(-2)) == 4);
  CHECK(q_power(half, ExtVal::finite(3)) == Rational(1, 8));
  CHECK_THROWS_AS(q_power(half, ExtVal::real(0.5)), ModeError);
  const QScalar one = QScalar::exact(1);
  for (int v = -5; v <= 5; ++v) CHECK(q_power(one, ExtVal::finite(v)) == 1);
  const QScalar q = QScalar::exact(Rational(3, 4));
  for (int v = -5; v < 5; ++v) CHECK(q_power(q, ExtVal::finite(v)) > q_power(q, ExtVal::finite(v + 1)));
  CHECK(q_power_relaxed(QScalar::relaxed(0.5), ExtVal::real(0.5)) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("QScalar parsing") {
  CHECK(QScalar::parse("3/4").value() == Rational(3, 4));
  CHECK(QScalar::parse("1").value() == 1);
  CHECK(QScalar::parse("2/4").to_string() == "1/2");
  CHECK_THROWS_AS(QScalar::parse("0"), InputError);
  CHECK_THROWS_AS(QScalar::parse("3/2"), InputError);
  CHECK_THROWS_AS(QScalar::parse("0.5"), InputError);
  CHECK_THROWS_AS(QScalar::parse("1/0"), InputError);
  CHECK(QScalar::parse("0.5", NumericMode::relaxed).approx() == 0.5);
  CHECK(QScalar::parse("0.5", NumericMode::relaxed).mode() == NumericMode::relaxed);
}

TEST_CASE("Subset order is lexicographic on sorted members") {
  CHECK(Subset::of({0, 3}) < Subset::of({1, 2}));
  CHECK(Subset::of({0, 1}) < Subset::of({0, 2}));
  CHECK(Subset::of({0}) < Subset::of({0, 1}));
  CHECK(format_subset(GroundSet({"a", "b", "c"}), Subset::of({0, 2})) == "{a,c}");
}
