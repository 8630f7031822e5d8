#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vml/matroid.hpp"

using namespace vml;
using namespace helpers;

namespace {

const std::vector<std::string> k1234{"1", "2", "3", "4"};

PlueckerVector three_bases() {
  return matroid({"1", "2", "3"}, 2, {{{"1", "2"}, fin(5)}, {{"1", "3"}, fin(2)}, {{"2", "3"}, fin(7)}});
}

}  // namespace

TEST_CASE("exchange checker examples") {
  CHECK(check_valuated_exchange(uniform(4, 2)).pass);

  const PlueckerVector two = matroid(k1234, 2, {{{"1", "2"}, fin(0)}, {{"3", "4"}, fin(0)}});
  const CheckReport r = check_valuated_exchange(two);
  CHECK_FALSE(r.pass);
  CHECK(r.axiom == "exchange");
  REQUIRE(r.sets.size() == 2);
  CHECK(r.sets[0] == Subset::of({0, 1}));
  CHECK(r.sets[1] == Subset::of({2, 3}));
  CHECK(r.elements == std::vector<int>{0});

  const PlueckerVector ones = PlueckerVector::from_function(GroundSet(k1234), 2, [](Subset s) {
    return (s == Subset::of({0, 1}) || s == Subset::of({2, 3})) ? fin(0) : fin(1);
  });
  const CheckReport r2 = check_valuated_exchange(ones);
  CHECK_FALSE(r2.pass);
  CHECK(r2.sets[0] == Subset::of({0, 1}));
  CHECK(r2.sets[1] == Subset::of({2, 3}));

  const std::vector<std::int64_t> w{0, 1, 2, 3};
  const PlueckerVector additive = PlueckerVector::from_function(GroundSet(k1234), 2, [&](Subset s) {
    std::int64_t v = 0;
    for (int i : s.members()) v += w[i];
    return fin(v);
  });
  CHECK(check_valuated_exchange(additive).pass);
}

TEST_CASE("all-infinite map is rejected") {
  CHECK_THROWS_AS(matroid(k1234, 2, {}), InputError);
  CHECK_THROWS_AS(matroid(k1234, 2, {{{"1"}, fin(0)}}), InputError);
}

TEST_CASE("exchange checker agrees with the brute-force oracle") {
  // Random maps on small ground sets, values in {0,1,2,∞}.
  Rng rng({5, 0});
  int pass = 0;
  int fail = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    const int r = static_cast<int>(rng.uniform_int(1, n - 1));
    std::vector<std::pair<Subset, ExtVal>> entries;
    for (Subset s : enumerate_subsets(n, r)) {
      const auto v = rng.uniform_int(0, 3);
      entries.emplace_back(s, v == 3 ? inf() : fin(v));
    }
    if (std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.second.is_finite(); })) continue;
    const PlueckerVector p(GroundSet::numbered(n), r, entries);
    const CheckReport rep = check_valuated_exchange(p);
    CHECK(rep.pass == oracle::exchange_holds(p));
    (rep.pass ? pass : fail) += 1;
    if (!rep.pass) {
      // The witness re-evaluates to a genuine violation.
      const Subset s = rep.sets[0], t = rep.sets[1];
      const int e = rep.elements[0];
      CHECK(s.contains(e));
      CHECK_FALSE(t.contains(e));
      const ExtVal lhs = p.value(s) + p.value(t);
      for (int x : (t - s).members()) CHECK(lhs < p.value(s.without(e).with(x)) + p.value(t.without(x).with(e)));
    }
  }
  CHECK(pass > 20);
  CHECK(fail > 20);
}

TEST_CASE("witness does not depend on the thread count") {
  Rng rng({6, 0});
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<Subset, ExtVal>> entries;
    for (Subset s : enumerate_subsets(6, 3)) {
      const auto v = rng.uniform_int(0, 4);
      entries.emplace_back(s, v == 4 ? inf() : fin(v));
    }
    const PlueckerVector p(GroundSet::numbered(6), 3, entries);
    const CheckReport a = check_valuated_exchange(p, {kDefaultTolerance, 1});
    const CheckReport b = check_valuated_exchange(p, {kDefaultTolerance, 4});
    CHECK(a.pass == b.pass);
    CHECK(a.sets == b.sets);
    CHECK(a.elements == b.elements);
  }
}

TEST_CASE("independent_valuation examples") {
  const PlueckerVector u12 = matroid({"a", "b"}, 1, {{{"a"}, fin(1)}, {{"b"}, fin(0)}});
  const IndepValuation iv = independent_valuation(u12);
  CHECK(iv.value(Subset()) == fin(0));
  CHECK(iv.value(Subset::of({0})) == fin(1));
  CHECK(iv.value(Subset::of({1})) == fin(0));
  CHECK(check_independence_axioms(iv).pass);

  const IndepValuation t = independent_valuation(three_bases());
  CHECK(t.value(Subset()) == fin(2));
  CHECK(t.value(Subset::of({0})) == fin(2));
  CHECK(t.value(Subset::of({1})) == fin(5));
  CHECK(t.value(Subset::of({2})) == fin(2));
}

TEST_CASE("trivial valuation gives 0 exactly on independent sets") {
  const PlueckerVector fano = classical_matroid("fano");
  const IndepValuation iv = independent_valuation(fano);
  for (int k = 0; k <= 3; ++k)
    for (Subset s : enumerate_subsets(7, k)) {
      const auto expected = oracle::nu_tilde(fano, s.mask());
      CHECK(iv.value(s) == (expected ? fin(*expected) : inf()));
    }
}

TEST_CASE("independence axiom failures") {
  const IndepValuation bad2(GroundSet({"a"}), 1, {{Subset(), fin(1)}, {Subset::of({0}), fin(0)}});
  const CheckReport r2 = check_independence_axioms(bad2);
  CHECK(r2.axiom == "2");
  CHECK(r2.sets == std::vector<Subset>{Subset(), Subset::of({0})});

  const IndepValuation bad1(GroundSet({"a", "b"}), 2, {{Subset(), fin(0)}, {Subset::of({0}), fin(0)}});
  CHECK(check_independence_axioms(bad1).axiom == "1");
}

TEST_CASE("independence valuation round trip on random matroids") {
  for (std::uint64_t i = 0; i < 120; ++i) {
    const PlueckerVector p = random_matroid(21, i, 7, 4);
    REQUIRE(check_valuated_exchange(p).pass);
    const IndepValuation iv = independent_valuation(p);
    CHECK(check_independence_axioms(iv).pass);
    for (Subset s : enumerate_subsets(p.ground(), p.rank())) CHECK(iv.value(s) == p.value(s));
    for (int k = 0; k <= p.rank(); ++k)
      for (Subset s : enumerate_subsets(p.ground(), k)) {
        const auto expected = oracle::nu_tilde(p, s.mask());
        CHECK(iv.value(s) == (expected ? fin(*expected) : inf()));
      }
  }
}

TEST_CASE("restrict_rank") {
  const PlueckerVector p = three_bases();
  CHECK(restrict_rank(p, 2) == p);
  const PlueckerVector r1 = restrict_rank(p, 1);
  CHECK(r1.value(Subset::of({0})) == fin(2));
  CHECK(r1.value(Subset::of({1})) == fin(5));
  CHECK(r1.value(Subset::of({2})) == fin(2));
  CHECK(restrict_rank(uniform(3, 2), 1) == uniform(3, 1));
  CHECK_THROWS_AS(restrict_rank(p, 3), InputError);

  for (std::uint64_t i = 0; i < 60; ++i) {
    const PlueckerVector m = random_matroid(22, i, 8, 4);
    for (int rho = 0; rho <= m.rank(); ++rho) {
      const PlueckerVector a = restrict_rank(m, rho);
      CHECK(check_valuated_exchange(a).pass);
      for (int rho2 = 0; rho2 <= rho; ++rho2) CHECK(restrict_rank(a, rho2) == restrict_rank(m, rho2));
    }
  }
}

TEST_CASE("generic extension") {
  const PlueckerVector u12 = uniform(2, 1);
  const PlueckerVector ext = generic_extension(relabel(u12, GroundSet({"a", "b"})), GroundSet({"x"}));
  CHECK(ext == relabel(uniform(3, 1), GroundSet({"x", "a", "b"})));
  CHECK(generic_extension(u12, GroundSet()) == u12);
  CHECK_THROWS_AS(generic_extension(u12, GroundSet({"1"})), InputError);

  const PlueckerVector e = generic_extension(three_bases(), GroundSet({"x"}));
  const GroundSet& g = e.ground();
  auto v = [&](std::vector<std::string> l) { return e.value(labels_to_subset(g, l)); };
  CHECK(v({"x", "1"}) == fin(2));
  CHECK(v({"x", "2"}) == fin(5));
  CHECK(v({"x", "3"}) == fin(2));
  CHECK(v({"1", "2"}) == fin(5));
  CHECK(v({"1", "3"}) == fin(2));
  CHECK(v({"2", "3"}) == fin(7));

  for (std::uint64_t i = 0; i < 80; ++i) {
    const PlueckerVector m = random_matroid(23, i, 6, 3);
    const PlueckerVector ext2 = generic_extension(m, GroundSet({"q1", "q2"}));
    CHECK(check_valuated_exchange(ext2).pass);
    CHECK(oracle::exchange_holds(ext2));
  }
}

TEST_CASE("normalize") {
  const PlueckerVector n = normalize(three_bases());
  CHECK(n.value(Subset::of({0, 1})) == fin(3));
  CHECK(n.value(Subset::of({0, 2})) == fin(0));
  CHECK(n.value(Subset::of({1, 2})) == fin(5));
  CHECK(normalize(uniform(4, 2)) == uniform(4, 2));
  const PlueckerVector neg = matroid({"a", "b"}, 1, {{{"a"}, fin(-1)}});
  CHECK(normalize(neg).value(Subset::of({0})) == fin(0));
  CHECK(normalize(neg).value(Subset::of({1})).is_inf());
  CHECK(normalize(normalize(three_bases())) == normalize(three_bases()));

  // normalize commutes with generic_extension.
  for (std::uint64_t i = 0; i < 30; ++i) {
    const PlueckerVector m = random_matroid(24, i, 6, 3);
    const PlueckerVector shifted = PlueckerVector::from_function(m.ground(), m.rank(), [&](Subset s) { return m.value(s) + fin(4); });
    CHECK(normalize(generic_extension(shifted, GroundSet({"q"}))) == generic_extension(normalize(shifted), GroundSet({"q"})));
  }
}

TEST_CASE("rank 0") {
  const PlueckerVector p(GroundSet({"a", "b"}), 0, {{Subset(), fin(3)}});
  CHECK(check_valuated_exchange(p).pass);
  CHECK(independent_valuation(p).value(Subset()) == fin(3));
}

TEST_CASE("relaxed valuations") {
  const PlueckerVector p = matroid({"a", "b"}, 1, {{{"a"}, ExtVal::real(0.5)}, {{"b"}, ExtVal::real(0.25)}});
  CHECK(check_valuated_exchange(p).pass);
  CHECK_FALSE(p.all_integer());
  CHECK(independent_valuation(p).value(Subset()).to_double() == doctest::Approx(0.25));
}
