#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vml/sequences.hpp"

using namespace vml;
using namespace helpers;

namespace {

PositiveSequence seq(std::vector<Rational> t) { return PositiveSequence::exact(std::move(t)); }

}  // namespace

TEST_CASE("ik_matroid examples") {
  const PlueckerVector fano = classical_matroid("fano");
  const PositiveSequence s = ik_matroid(fano, QScalar::exact(1));
  CHECK(s.exact_terms() == std::vector<Rational>{1, 7, 21, 28});
  const auto counts = oracle::independent_counts(fano);
  for (std::size_t k = 0; k < counts.size(); ++k) CHECK(s.exact_terms()[k] == Rational(BigInt(std::to_string(counts[k]))));

  const PlueckerVector u12 = matroid({"a", "b"}, 1, {{{"a"}, fin(1)}, {{"b"}, fin(0)}});
  CHECK(ik_matroid(u12, QScalar::exact(Rational(1, 2))).exact_terms() == std::vector<Rational>{1, Rational(3, 2)});

  for (const char* name : {"vamos", "nonpappus"}) {
    const PlueckerVector p = classical_matroid(name);
    const auto c = oracle::independent_counts(p);
    const auto t = ik_matroid(p, QScalar::exact(1)).exact_terms();
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(t[k] == Rational(BigInt(std::to_string(c[k]))));
  }
}

TEST_CASE("ik_matroid matches the oracle on random matroids") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    const PlueckerVector p = random_matroid(51, i, 7, 4);
    for (const Rational& q : {Rational(1), Rational(1, 2), Rational(3, 4), Rational(7, 11)})
      CHECK(ik_matroid(p, QScalar::exact(q)).exact_terms() == oracle::ik(p, q));
  }
}

TEST_CASE("ik_polymatroid examples") {
  const MConvexMap zero = MConvexMap::from_function(GroundSet({"a", "b"}), 2, [](const MultiIndex&) { return fin(0); });
  CHECK(ik_polymatroid(zero, QScalar::exact(1)).exact_terms() == std::vector<Rational>{1, 2, 2});
  const MConvexMap single = mconvex({"a"}, 2, {{{2}, fin(0)}});
  CHECK(ik_polymatroid(single, QScalar::exact(1)).exact_terms() == std::vector<Rational>{1, 1, Rational(1, 2)});

  Rng rng({52, 0});
  for (int i = 0; i < 60; ++i) {
    SeparableParams sp;
    sp.n = static_cast<int>(rng.uniform_int(1, 4));
    sp.r = static_cast<int>(rng.uniform_int(0, 4));
    const MConvexMap f = random_separable_mconvex(sp, rng);
    CHECK(ik_polymatroid(f, QScalar::exact(Rational(2, 5))).exact_terms() == oracle::ik_poly(f, Rational(2, 5)));
  }
}

TEST_CASE("rk_bimatroid examples") {
  const MinorMap zero = stiefel_bimatroid(TropicalMatrix::from_rows({{fin(0), fin(0)}, {fin(0), fin(0)}}));
  CHECK(rk_bimatroid(zero, QScalar::exact(Rational(1, 2))).exact_terms() == std::vector<Rational>{1, 4, 1});
  const MinorMap inf11(GroundSet({"e"}), GroundSet({"f"}), {});
  CHECK(rk_bimatroid(inf11, QScalar::exact(Rational(1, 2))).exact_terms() == std::vector<Rational>{1, 0});
  CHECK(rk_bimatroid(zero, QScalar::exact(1)).context().ground == 2);
}

TEST_CASE("check_strengthened_lc examples") {
  CHECK(check_strengthened_lc(seq({1, 7, 21, 28})).pass);
  CHECK(check_strengthened_lc(seq({1, 2, 2})).pass);
  const CheckReport r = check_strengthened_lc(seq({1, 1, 10}));
  CHECK_FALSE(r.pass);
  CHECK(r.axiom == "strengthened-lc");
  CHECK(r.k == 1);
  CHECK(r.lhs == "1");
  CHECK(r.rhs == "20");
  CHECK(check_strengthened_lc(seq({})).pass);
  CHECK(check_strengthened_lc(seq({5, 0})).pass);
}

TEST_CASE("check_ulc examples") {
  CHECK(check_ulc(seq({1, 7, 21, 28}), 7).pass);
  for (int n = 2; n <= 12; ++n) {
    std::vector<Rational> b;
    for (int k = 0; k <= n; ++k) b.emplace_back(BigInt(std::to_string(oracle::binom(n, k))));
    CHECK(check_ulc(seq(b), n).pass);
  }
  const CheckReport r = check_ulc(seq({1, 1, 10}), 2);
  CHECK_FALSE(r.pass);
  CHECK(r.k == 1);
  CHECK_THROWS_AS(check_ulc(seq({1, 2, 3, 4}), 2), InputError);
  // internal zero with positive neighbours fails
  CHECK_FALSE(check_ulc(seq({1, 0, 1}), 2).pass);
  CHECK(check_ulc(seq({1, 0, 0}), 2).pass);
}

TEST_CASE("exact verdicts agree with direct rational evaluation") {
  Rng rng({53, 0});
  int ulc_fail = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int len = static_cast<int>(rng.uniform_int(1, 7));
    std::vector<Rational> t;
    for (int k = 0; k < len; ++k) t.emplace_back(BigInt(std::to_string(rng.uniform_int(0, 30))), BigInt(std::to_string(rng.uniform_int(1, 6))));
    for (auto& x : t) x.canonicalize();
    const int n = len - 1 + static_cast<int>(rng.uniform_int(0, 3));
    const bool ulc = check_ulc(seq(t), n).pass;
    CHECK(ulc == oracle::ulc(t, n));
    CHECK(check_strengthened_lc(seq(t)).pass == oracle::strengthened_lc(t));
    // ULC at N implies ULC at every larger N and strengthened LC.
    if (ulc) {
      CHECK(check_ulc(seq(t), n + 1).pass);
      CHECK(check_ulc(seq(t), n + 5).pass);
      CHECK(check_strengthened_lc(seq(t)).pass);
    } else {
      ++ulc_fail;
    }
  }
  CHECK(ulc_fail > 50);
}

TEST_CASE("relaxed sequences") {
  const PositiveSequence r = PositiveSequence::relaxed({1.0, 7.0, 21.0, 28.0});
  CHECK(check_ulc(r, 7).pass);
  CHECK(check_strengthened_lc(r).pass);
  // Equality cases survive rounding noise within the tolerance.
  const PositiveSequence noisy = PositiveSequence::relaxed({1.0, 2.0 * (1 - 1e-12), 1.0});
  CHECK(check_ulc(noisy, 2).pass);
  CHECK_FALSE(check_ulc(PositiveSequence::relaxed({1.0, 1.0, 10.0}), 2).pass);

  const PlueckerVector p = matroid({"a", "b"}, 1, {{{"a"}, ExtVal::real(0.5)}, {{"b"}, fin(0)}});
  CHECK_THROWS_AS(ik_matroid(p, QScalar::exact(Rational(1, 2))), ModeError);
  const PositiveSequence s = ik_matroid(p, QScalar::parse("1/2", NumericMode::relaxed));
  CHECK(s.mode() == NumericMode::relaxed);
  CHECK(s.approx(1) == doctest::Approx(1 + std::sqrt(0.5)));
}

TEST_CASE("conjecture probe classification") {
  CHECK(is_conjecture_probe(SequenceKind::ik_matroid, "ulc"));
  CHECK_FALSE(is_conjecture_probe(SequenceKind::ik_polymatroid, "ulc"));
  CHECK_FALSE(is_asserted(SequenceKind::ik_polymatroid, "ulc"));
  CHECK(is_asserted(SequenceKind::ik_polymatroid, "strengthened-lc"));
  CHECK(is_asserted(SequenceKind::rk_bimatroid, "ulc"));
  CHECK_FALSE(is_asserted(SequenceKind::ik_matroid, "ulc"));
  CHECK_FALSE(is_conjecture_probe(SequenceKind::rk_bimatroid, "ulc"));
  CHECK_FALSE(is_conjecture_probe(SequenceKind::ik_matroid, "strengthened-lc"));
  CHECK(sequence_kind_from_string(to_string(SequenceKind::rk_bimatroid)) == SequenceKind::rk_bimatroid);
  CHECK_THROWS_AS(sequence_kind_from_string("nope"), InputError);
}

TEST_CASE("theorem checks on small random corpora") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const PlueckerVector p = random_matroid(54, i, 8, 4);
    for (const Rational& q : {Rational(1), Rational(1, 2), Rational(3, 4)})
      CHECK(check_strengthened_lc(ik_matroid(p, QScalar::exact(q))).pass);
  }
  Rng rng({55, 0});
  for (int i = 0; i < 40; ++i) {
    const int rows = static_cast<int>(rng.uniform_int(1, 4));
    const int cols = static_cast<int>(rng.uniform_int(1, 4));
    const MinorMap mu = stiefel_bimatroid(random_tropical_matrix(rows, cols, 0, 9, 0.25, rng));
    const PositiveSequence r = rk_bimatroid(mu, QScalar::exact(Rational(1, 3)));
    CHECK(check_ulc(r, std::min(rows, cols)).pass);
  }
}
