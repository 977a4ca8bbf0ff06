#include <doctest.h>

#include <random>
#include <sstream>

#include "gdens/density.hpp"
#include "gdens/errors.hpp"
#include "gdens/verdict.hpp"
#include "oracle.hpp"

using namespace gdens;

namespace {

const WindowFamily kClassical = WindowFamily::classical_prefix();
const WindowFamily kFactorial = WindowFamily::factorial_blocks();

}  // namespace

TEST_CASE("mu examples") {
  CHECK(mu(kClassical, 5, IntegerSet::from_elements({2, 4})) == Rational(2, 5));
  CHECK(mu(kFactorial, 7, IntegerSet()) == 0);
  const auto truncated = union_of_windows(kFactorial, 9).set;
  for (Index n = 1; n <= 9; ++n) CHECK(mu(kFactorial, n, truncated) == 1);
}

TEST_CASE("mu trajectory examples") {
  const auto t = mu_trajectory(kClassical, IntegerSet::interval(1, 10), 1, 12);
  REQUIRE(t.samples.size() == 12);
  for (int i = 0; i < 10; ++i) CHECK(t.samples[i].value == 1);
  CHECK(t.samples[10].value == Rational(10, 11));
  CHECK(t.samples[11].value == Rational(10, 12));
  for (const auto& s : mu_trajectory(kClassical, IntegerSet(), 1, 30).samples) CHECK(s.value == 0);
  for (const auto& s : mu_trajectory(kFactorial, window_union_set(kFactorial), 1, 20).samples) {
    CHECK(s.value == 1);
  }
}

TEST_CASE("phi examples") {
  const auto ten = phi(kClassical, IntegerSet::from_elements({10}));
  CHECK(ten.value == Rational(1, 10));
  CHECK(ten.exactness == Exactness::Exact);
  CHECK(*ten.argmax == 10);

  const auto empty = phi(kClassical, IntegerSet());
  CHECK(empty.value == 0);
  CHECK(empty.exactness == Exactness::Exact);

  const auto nine = phi(kClassical, IntegerSet::interval(1, 9));
  CHECK(nine.value == 1);
  // F_0 = F_1 = {1}, so the least maximizing index is 0.
  CHECK(*nine.argmax == 0);
  CHECK(mu(kClassical, 1, IntegerSet::interval(1, 9)) == 1);

  // A set missing every window still gets an exact zero.
  const auto miss = phi(kFactorial, IntegerSet::from_elements({5, 11}));
  CHECK(miss.value == 0);
  CHECK(miss.exactness == Exactness::Exact);

  const auto horizon = phi(kClassical, squares(), PhiScan{1000});
  CHECK(horizon.exactness == Exactness::LowerBoundAtHorizon);
  CHECK(horizon.n_used == 1000);
  CHECK(horizon.value == 1);
}

TEST_CASE("phi scan cap") {
  PhiScan scan{1000, 100};
  CHECK_THROWS_AS(phi(kClassical, squares(), scan), CapExceeded);
}

TEST_CASE("upper density examples") {
  CHECK(upper_density(kClassical, arithmetic(0, 2), 100, 200) == Rational(1, 2));
  CHECK(upper_density(kClassical, IntegerSet(), 100, 200) == 0);
  CHECK(upper_density(kFactorial, window_union_set(kFactorial), 5, 40) == 1);
  CHECK_THROWS_AS(windowed_max(kClassical, squares(), 5, 4), InvalidArgument);
  const auto w = windowed_max(kClassical, squares(), 16, 31);
  CHECK(w.value == Rational(1, 4));
  CHECK(w.argmax == 16);
}

TEST_CASE("exh examples") {
  const auto t = exh_trajectory(kClassical, IntegerSet::interval(1, 10), {0, 5, 10, 20});
  CHECK(t.samples[0].value == 1);
  CHECK(t.samples[2].value == 0);
  CHECK(t.samples[3].value == 0);
  for (const auto& s : t.samples) CHECK(s.exact);

  const auto six = union_of_windows(kFactorial, 6).set;
  const auto u = exh_trajectory(kFactorial, six, {100});
  CHECK(u.samples[0].value == 1);

  for (const auto& s : exh_trajectory(kFactorial, IntegerSet(), {0, 1, 100}).samples) CHECK(s.value == 0);
  CHECK_THROWS_AS(exh_trajectory(kClassical, IntegerSet(), {5, 5}), InvalidArgument);
}

TEST_CASE("trajectory csv") {
  std::ostringstream out;
  write_trajectory_csv(out, mu_trajectory(kClassical, IntegerSet::from_elements({1}), 1, 3));
  CHECK(out.str() == "index,numerator,denominator,decimal\n1,1,1,1\n2,1,2,0.5\n3,1,3,0.333333\n");
}

TEST_CASE("file families are always horizon-limited") {
  std::istringstream in("1 2\n3 4 5\n6 7 8 9\n");
  const auto f = WindowFamily::from_stream(in, "file:x");
  const auto v = phi(f, IntegerSet::from_elements({3}));
  CHECK(v.value == Rational(1, 3));
  CHECK(v.exactness == Exactness::LowerBoundAtHorizon);
}

TEST_CASE("member verdict examples") {
  for (const auto& fam : {kClassical, kFactorial}) {
    const auto v = member_verdict(fam, IntegerSet::interval(1, 1000));
    CHECK(v.kind == VerdictKind::MemberExact);
  }
  const auto blocks = member_verdict(kFactorial, window_union_set(kFactorial));
  CHECK(blocks.kind == VerdictKind::NonMemberExact);
  CHECK(blocks.delta == 1);
  CHECK(blocks.spot_checks.size() == 5);

  const auto sq = member_verdict(kClassical, squares());
  CHECK(sq.kind == VerdictKind::TrendMember);
  REQUIRE(sq.windows.size() == 13);
  CHECK(sq.windows.front().value == Rational(1, 4));
  CHECK(sq.windows[3].value == Rational(11, 128));
  CHECK(sq.windows.back().value == Rational(1, 256));

  const auto evens = member_verdict(kClassical, arithmetic(0, 2));
  CHECK(evens.kind == VerdictKind::TrendNonMember);

  const auto cofinite = member_verdict(kClassical, IntegerSet::ray(50));
  CHECK(cofinite.kind == VerdictKind::NonMemberExact);
  CHECK(cofinite.delta == Rational(1, 2));

  const auto cof_fac = member_verdict(kFactorial, IntegerSet::ray(1000));
  CHECK(cof_fac.kind == VerdictKind::NonMemberExact);
}

TEST_CASE("blocks under the classical family decay") {
  const auto v = member_verdict(kClassical, window_union_set(kFactorial));
  CHECK(v.kind == VerdictKind::TrendMember);
  REQUIRE(v.windows.size() == 13);
  const Rational frozen[] = {{1, 2},   {13, 32},   {13, 64},   {19, 128},  {19, 256},   {19, 512},  {13, 512},
                             {13, 1024}, {34, 5047}, {17, 4096}, {17, 8192}, {43, 40328}, {43, 65536}};
  for (std::size_t i = 0; i < 13; ++i) CHECK(v.windows[i].value == frozen[i]);
}

TEST_CASE("verdict record is one stable line") {
  const auto r1 = verdict_record(member_verdict(kClassical, squares()));
  const auto r2 = verdict_record(member_verdict(kClassical, squares()));
  CHECK(r1 == r2);
  CHECK(r1.find('\n') == std::string::npos);
  CHECK(r1.rfind("{\"kind\":\"TrendMember\"", 0) == 0);
}

TEST_CASE("inconclusive verdicts") {
  // Windows shrink to a single trend window.
  TrendPolicy p;
  p.k_from = 4;
  p.k_to = 4;
  CHECK(member_verdict(kClassical, squares(), p).kind == VerdictKind::Inconclusive);
  // A predicate set whose horizon stops the scan.
  const auto pred = predicate_set("odd", [](const Natural& x) { return x % 2 == 1; }, 100);
  const auto v = member_verdict(kClassical, pred);
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.rule == "diagnostic");
}

TEST_CASE("property: measure axioms and locality") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const bool fac = iter % 2;
    const auto& fam = fac ? kFactorial : kClassical;
    const auto ofam = fac ? oracle::Fam::Factorial : oracle::Fam::Classical;
    const Index n = std::uniform_int_distribution<Index>(0, fac ? 60 : 300)(rng);
    const auto av = oracle::random_set(rng, ofam, 30, n + 2);
    const auto a = IntegerSet::from_elements(av);
    const auto b = set_difference(IntegerSet::from_elements(oracle::random_set(rng, ofam, 30, n + 2)), a);
    const Rational ma = mu(fam, n, a);
    CHECK(ma == oracle::mu(ofam, n, av));
    CHECK(ma >= 0);
    CHECK(ma <= 1);
    CHECK(mu(fam, n, set_union(a, b)) == ma + mu(fam, n, b));
    CHECK(mu(fam, n, set_intersection(a, fam.window(n).as_set())) == ma);
    CHECK(mu(fam, n, set_union(a, fam.window(n).as_set())) == 1);
  }
}

TEST_CASE("property: monotone and subadditive") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    const bool fac = iter % 2;
    const auto& fam = fac ? kFactorial : kClassical;
    const auto ofam = fac ? oracle::Fam::Factorial : oracle::Fam::Classical;
    const auto a = IntegerSet::from_elements(oracle::random_set(rng, ofam, 20, 12));
    const auto b = IntegerSet::from_elements(oracle::random_set(rng, ofam, 20, 12));
    const auto ab = set_union(a, b);
    CHECK(phi(fam, a).value <= phi(fam, ab).value);
    CHECK(phi(fam, ab).value <= phi(fam, a).value + phi(fam, b).value);
    const Index lo = std::uniform_int_distribution<Index>(0, 8)(rng);
    const Index hi = lo + std::uniform_int_distribution<Index>(0, 4)(rng);
    CHECK(upper_density(fam, a, lo, hi) <= upper_density(fam, ab, lo, hi));
    CHECK(upper_density(fam, ab, lo, hi) <= upper_density(fam, a, lo, hi) + upper_density(fam, b, lo, hi));
    for (Index n = lo; n <= hi; ++n) CHECK(mu(fam, n, ab) <= mu(fam, n, a) + mu(fam, n, b));
  }
}

TEST_CASE("property: lower semicontinuity and tail monotonicity") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    const auto av = oracle::random_set(rng, oracle::Fam::Classical, 20, 150);
    const auto a = IntegerSet::from_elements(av);
    Rational prev = 0;
    const Natural top = av.empty() ? Natural(0) : av.back();
    for (Natural m = 0; m <= top + 3; m += 7) {
      const Rational v = phi(kClassical, restrict(a, m)).value;
      CHECK(v >= prev);
      prev = v;
    }
    CHECK(phi(kClassical, restrict(a, top)).value == phi(kClassical, a).value);

    std::vector<Natural> ms;
    for (Natural m = 0; m <= top + 10; m += 9) ms.push_back(m);
    const auto t = exh_trajectory(kClassical, a, ms);
    for (std::size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i].value <= t.samples[i - 1].value);
  }
}

TEST_CASE("property: exact phi matches a brute-force scan") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 60; ++iter) {
    const bool fac = iter % 2;
    const auto& fam = fac ? kFactorial : kClassical;
    const auto ofam = fac ? oracle::Fam::Factorial : oracle::Fam::Classical;
    const auto av = oracle::random_set(rng, ofam, 40, fac ? 10 : 200);
    const auto v = phi(fam, IntegerSet::from_elements(av));
    REQUIRE(v.exactness == Exactness::Exact);
    const Index nb = v.value == 0 ? (fac ? 30 : 400) : oracle::big_n(ofam, av.size(), v.value);
    CHECK(v.value == oracle::max_mu(ofam, av, nb));
  }
}

TEST_CASE("values beat 64-bit") {
  const Natural f = oracle::fact(25);
  const auto a = IntegerSet::interval(f, f + 12);
  CHECK(mu(kFactorial, 25, a) == Rational(13, 26));
}
