#include <doctest.h>

#include <random>
#include <sstream>

#include "gdens/errors.hpp"
#include "gdens/ideal_ops.hpp"
#include "oracle.hpp"

using namespace gdens;

namespace {

const WindowFamily kClassical = WindowFamily::classical_prefix();
const WindowFamily kFactorial = WindowFamily::factorial_blocks();

}  // namespace

TEST_CASE("exceedance examples") {
  const auto r = exceedance_set(RealSequence::reciprocal(), 0, Rational(1, 10), Natural(100));
  CHECK(canonical(r).runs == IntervalList{{0, 9}});
  const auto unbounded = exceedance_set(RealSequence::reciprocal(), 0, Rational(1, 10));
  CHECK(unbounded.finite_support());
  CHECK(unbounded.cardinality() == 10);

  const auto a = IntegerSet::from_elements({3, 8, 200});
  const auto c = exceedance_set(RealSequence::characteristic(a), 0, Rational(1, 2), Natural(100));
  CHECK(enumerate_up_to(c, 1000) == std::vector<Natural>{3, 8});

  CHECK(exceedance_set(RealSequence::constant(0), 0, Rational(1, 3), Natural(50)).cardinality() == 0);
  CHECK(exceedance_set(RealSequence::constant(1), 0, Rational(1, 3), Natural(50)).cardinality() == 51);
  CHECK_THROWS_AS(exceedance_set(RealSequence::reciprocal(), 0, 0), InvalidArgument);
}

TEST_CASE("exceedance with a general limit") {
  // |1/(k+1) - 1/4| >= 1/8  iff  k + 1 <= 2 or k + 1 >= 8.
  const auto s = exceedance_set(RealSequence::reciprocal(), Rational(1, 4), Rational(1, 8), Natural(20));
  CHECK(canonical(s).runs == IntervalList{{0, 1}, {7, 20}});
}

TEST_CASE("file-backed sequences never pad") {
  const auto x = RealSequence::from_values({1, Rational(1, 2), 0});
  CHECK(x.at(1) == Rational(1, 2));
  CHECK_THROWS_AS(x.at(3), OutOfRange);
  CHECK_THROWS_AS(exceedance_set(x, 0, Rational(1, 2), Natural(5)), OutOfRange);
  CHECK(exceedance_set(x, 0, Rational(1, 2)).cardinality() == 2);
}

TEST_CASE("seq parsing and round trip") {
  std::istringstream in("1\n1/2\n-3/4\n0\n");
  const auto x = parse_seq(in);
  CHECK(*x.last_index() == 3);
  CHECK(x.at(2) == Rational(-3, 4));
  std::istringstream bad("1\nx\n");
  CHECK_THROWS_AS(parse_seq(bad), ParseError);

  std::mt19937_64 rng(41);
  std::vector<Rational> values;
  for (int i = 0; i < 200; ++i) {
    const long long p = std::uniform_int_distribution<long long>(-1000000, 1000000)(rng);
    const long long q = std::uniform_int_distribution<long long>(1, 1000000)(rng);
    values.push_back(Rational(Natural(p), Natural(q)));
  }
  std::stringstream io;
  write_seq(io, values);
  const auto back = parse_seq(io);
  REQUIRE(*back.last_index() == values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(back.at(i) == values[i]);
}

TEST_CASE("convergence cases") {
  const std::vector<Rational> eps{Rational(1, 2), Rational(1, 10), Rational(1, 1000)};
  for (const auto& fam : {kClassical, kFactorial}) {
    const auto r = i_converges(fam, RealSequence::reciprocal(), 0, eps);
    CHECK(r.overall == Convergence::Converges);
    for (const auto& e : r.per_eps) CHECK(e.verdict.kind == VerdictKind::MemberExact);
    CHECK_FALSE(r.bottleneck);
  }

  const auto blocks = RealSequence::characteristic(window_union_set(kFactorial));
  const auto nc = i_converges(kFactorial, blocks, 0, {Rational(1, 2)});
  CHECK(nc.overall == Convergence::DoesNotConverge);
  CHECK(nc.per_eps[0].verdict.kind == VerdictKind::NonMemberExact);
  CHECK(*nc.bottleneck == Rational(1, 2));

  const auto stat = i_converges(kClassical, blocks, 0, eps);
  CHECK(stat.overall == Convergence::Converges);
  for (const auto& e : stat.per_eps) CHECK(e.verdict.kind == VerdictKind::TrendMember);

  const auto evens = RealSequence::characteristic(arithmetic(0, 2));
  CHECK(i_converges(kClassical, evens, 0, {Rational(1, 2)}).overall == Convergence::DoesNotConverge);

  // Exact constants: never any exceedance at small eps, everything at large.
  CHECK(i_converges(kClassical, RealSequence::constant(Rational(1, 3)), Rational(1, 3), eps).overall ==
        Convergence::Converges);
}

TEST_CASE("pseudo-union examples") {
  PseudoUnionConfig half;
  half.tolerance = [](std::size_t) { return Rational(1, 2); };
  const std::vector<IntegerSet> finite{IntegerSet::interval(1, 10), IntegerSet::interval(5, 20)};
  const auto pu = pseudo_union(kClassical, finite, half);
  REQUIRE(pu.thresholds.size() == 2);
  for (std::size_t i = 0; i < finite.size(); ++i) {
    const auto rest = set_difference(finite[i], pu.set);
    CHECK(rest.finite_support());
    if (rest.cardinality() > 0) CHECK(*rest.support_max() <= pu.thresholds[i]);
  }

  const auto sc = pseudo_union(kClassical, {squares(), cubes()});
  CHECK(sc.thresholds.size() == 2);
  const auto traj = exh_trajectory(kClassical, sc.set, {pow2(14)});
  CHECK(traj.samples[0].value < Rational(1, 20));

  CHECK_THROWS_AS(pseudo_union(kFactorial, {window_union_set(kFactorial)}), PseudoUnionFailure);
  try {
    pseudo_union(kFactorial, {squares(), window_union_set(kFactorial)});
  } catch (const PseudoUnionFailure& e) {
    CHECK(e.member() == 1);
  }
}

TEST_CASE("property: pseudo-union postcondition and tolerance monotonicity") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<IntegerSet> members;
    const int count = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < count; ++i) {
      members.push_back(IntegerSet::from_elements(oracle::random_set(rng, oracle::Fam::Classical, 30, 400)));
    }
    members.push_back(squares());
    PseudoUnionConfig tight;
    tight.scan.horizon = 4096;
    PseudoUnionConfig loose = tight;
    loose.tolerance = [](std::size_t i) { return Rational(Natural(1), pow2(static_cast<unsigned>(i > 1 ? i - 1 : 1))); };
    const auto pt = pseudo_union(kClassical, members, tight);
    const auto pl = pseudo_union(kClassical, members, loose);
    for (std::size_t i = 0; i < members.size(); ++i) {
      CHECK(pl.thresholds[i] <= pt.thresholds[i]);
      const auto rest = set_difference(restrict(members[i], pt.thresholds[i] + 1000), pt.set);
      CHECK(same_elements(rest, set_difference(restrict(members[i], pt.thresholds[i]), pt.set)));
    }
  }
}

TEST_CASE("property: characteristic sequences match membership") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 100; ++iter) {
    const bool fac = iter % 2;
    const auto& fam = fac ? kFactorial : kClassical;
    const auto a = IntegerSet::from_elements(
        oracle::random_set(rng, fac ? oracle::Fam::Factorial : oracle::Fam::Classical, 30, fac ? 10 : 300));
    const Rational eps(std::uniform_int_distribution<int>(1, 10)(rng), 10);
    const auto r = i_converges(fam, RealSequence::characteristic(a), 0, {eps});
    const auto v = member_verdict(fam, a);
    CHECK(r.per_eps[0].verdict.kind == v.kind);
    CHECK(verdict_record(r.per_eps[0].verdict) == verdict_record(v));
  }
}

TEST_CASE("separating witness") {
  const auto w = separating_witness();
  CHECK(canonical(restrict(w.set, 30)).runs == IntervalList{{1, 4}, {6, 9}, {24, 28}});
  CHECK(w.mu_b_identically_one);
  CHECK(w.mu_b.samples.size() == 20);
  CHECK(w.mu_b.samples[14].value == 1);
  REQUIRE(w.densities_a.size() == 10);
  CHECK(w.densities_a[6].big_n == 5040);
  CHECK(w.densities_a[6].value == Rational(27, 5040));
  CHECK(w.densities_strictly_decreasing_from_3);
  for (const auto& d : w.densities_a) CHECK(d.value == oracle::blocks_density(d.big_n));
}
