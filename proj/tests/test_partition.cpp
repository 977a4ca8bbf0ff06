#include <doctest.h>

#include <sstream>

#include "gdens/errors.hpp"
#include "gdens/partition.hpp"
#include "oracle.hpp"

using namespace gdens;

namespace {

const WindowFamily kClassical = WindowFamily::classical_prefix();
const WindowFamily kFactorial = WindowFamily::factorial_blocks();

Natural horizon_for(const WindowFamily& f, Index k_max) { return f.window(k_max).max_element(); }

}  // namespace

TEST_CASE("slice examples") {
  const auto s0 = slice_interval(kFactorial, 4, 0);
  CHECK(s0.lo == 23);
  CHECK(s0.hi == Rational(51, 2));
  CHECK(*s0.members == ClosedInterval{23, 25});
  const auto s1 = slice_interval(kFactorial, 4, 1);
  CHECK(s1.lo == Rational(51, 2));
  CHECK(s1.hi == Rational(107, 4));
  CHECK(*s1.members == ClosedInterval{26, 26});
  const auto c = slice_interval(kClassical, 8, 0);
  CHECK(*c.members == ClosedInterval{0, 4});
  // [1 - 1/4, 1 - 1/8] holds no integer.
  CHECK_FALSE(slice_interval(kClassical, 1, 2).members);
}

TEST_CASE("property: consecutive slices share one endpoint") {
  for (const auto* fam : {&kClassical, &kFactorial}) {
    for (Index k = 0; k <= 18; ++k) {
      for (unsigned n = 0; n < 6; ++n) {
        const auto a = slice_interval(*fam, k, n);
        const auto b = slice_interval(*fam, k, n + 1);
        CHECK(a.lo == b.lo - (Rational(fam->window(k).size(), pow2(n + 1))));
        CHECK(a.hi == b.lo);
        if (a.members && b.members) CHECK(b.members->lo >= a.members->hi);
      }
    }
  }
}

TEST_CASE("factorial blocks follow the right-end slices") {
  for (auto mode : {PartitionMode::Literal, PartitionMode::Disjointified}) {
    const auto r = build_partition(kFactorial, 2, 6, horizon_for(kFactorial, 6), mode);
    CHECK(r.check.pairwise_disjoint);
    CHECK(r.check.covers);
    // F_6 = [720, 726]; n = 1 slice [722.5, 724.25] -> {723, 724}.
    const auto g1 = set_intersection(r.blocks[1], kFactorial.window(6).as_set());
    CHECK(canonical(g1).runs == IntervalList{{723, 724}});
    const auto g2 = set_intersection(r.blocks[2], kFactorial.window(6).as_set());
    CHECK(canonical(g2).runs == IntervalList{{725, 725}});
  }
}

TEST_CASE("classical literal construction degenerates") {
  const auto r = build_partition(kClassical, 2, 64, 64, PartitionMode::Literal);
  CHECK(r.degeneracy.degenerate);
  CHECK(*r.degeneracy.p0_initial_segment_end == 32);
  CHECK(restrict(r.levels[1], 32).cardinality() == 0);
  CHECK(canonical(r.levels[0]).runs == IntervalList{{0, 32}});
  CHECK(canonical(r.levels[1]).runs == IntervalList{{33, 48}});
  CHECK(canonical(r.levels[2]).runs == IntervalList{{3, 32}, {49, 56}});
  CHECK_FALSE(r.check.pairwise_disjoint);
  CHECK(*r.check.overlap_witness == 3);
  CHECK_FALSE(r.slices_separated);

  const auto d = build_partition(kClassical, 2, 64, 64, PartitionMode::Disjointified);
  CHECK(d.check.pairwise_disjoint);
  CHECK(d.check.covers);
  CHECK(d.degeneracy.degenerate);
}

TEST_CASE("single level absorbs everything") {
  for (const auto* fam : {&kClassical, &kFactorial}) {
    const auto r = build_partition(*fam, 0, 5, Natural(1000), PartitionMode::Disjointified);
    REQUIRE(r.blocks.size() == 1);
    CHECK(canonical(r.blocks[0]).runs == IntervalList{{0, 1000}});
    CHECK_FALSE(r.degeneracy.degenerate);
  }
}

TEST_CASE("hand-built blocks") {
  const auto c = verify_partition({IntegerSet::interval(0, 1), IntegerSet::interval(1, 2)}, 2);
  CHECK_FALSE(c.pairwise_disjoint);
  CHECK(*c.overlap_witness == 1);
  CHECK(c.covers);
  const auto g = verify_partition({IntegerSet::interval(0, 1), IntegerSet::interval(3, 4)}, 4);
  CHECK(g.pairwise_disjoint);
  CHECK_FALSE(g.covers);
  CHECK(*g.gap_witness == 2);
  CHECK_THROWS_AS(verify_partition({squares()}, 4), InvalidArgument);
}

TEST_CASE("horizon consistency") {
  CHECK_THROWS_AS(build_partition(kFactorial, 2, 6, 100, PartitionMode::Disjointified), InvalidArgument);
  const auto r = build_partition(kFactorial, 2, 6, horizon_for(kFactorial, 6), PartitionMode::Disjointified);
  CHECK_THROWS_AS(block_norm_report(kFactorial, r, 2, 7), HorizonExceeded);
}

TEST_CASE("block norms") {
  const Natural h = oracle::fact(20) + 20;
  const auto r = build_partition(kFactorial, 4, 20, h, PartitionMode::Disjointified);
  const auto norms = block_norm_report(kFactorial, r, 10, 20);
  CHECK(norms.block_norms[1] >= Rational(1, 5));
  CHECK(norms.block_norms[1] <= Rational(3, 10));
  CHECK(norms.block_norms[1] == Rational(3, 11));
  for (std::size_t n = 1; n < norms.tail_norms.size(); ++n) CHECK(norms.tail_norms[n] < norms.tail_norms[n - 1]);
  CHECK(norms.tail_norms.back() == 0);

  std::ostringstream csv;
  write_partition_csv(csv, norms);
  CHECK(csv.str().rfind("n,block_size,window_lo,window_hi,norm_num,norm_den,tail_num,tail_den\n", 0) == 0);

  // An empty block has norm zero.
  const auto flat = build_partition(kFactorial, 6, 3, Natural(9), PartitionMode::Disjointified);
  const auto fn = block_norm_report(kFactorial, flat, 0, 3);
  for (std::size_t n = 0; n < flat.blocks.size(); ++n) {
    if (flat.blocks[n].cardinality() == 0) CHECK(fn.block_norms[n] == 0);
  }
}

TEST_CASE("modes coincide on separated slices") {
  // Windows far apart and large enough that slices never clash across k.
  std::ostringstream fam;
  for (int k = 0; k < 6; ++k) {
    const int lo = 1000 * k + 100;
    for (int x = lo; x < lo + 64 + 16 * k; ++x) fam << x << (x + 1 < lo + 64 + 16 * k ? ' ' : '\n');
  }
  std::istringstream in(fam.str());
  const auto f = WindowFamily::from_stream(in, "file:separated");
  const Natural h = f.window(5).max_element();
  const auto lit = build_partition(f, 4, 5, h, PartitionMode::Literal);
  const auto dis = build_partition(f, 4, 5, h, PartitionMode::Disjointified);
  REQUIRE(lit.slices_separated);
  for (std::size_t n = 0; n < lit.blocks.size(); ++n) CHECK(same_elements(lit.blocks[n], dis.blocks[n]));
  CHECK(lit.check.pairwise_disjoint);
  CHECK(lit.check.covers);
}

TEST_CASE("property: disjointified output is always a partition") {
  for (const auto* fam : {&kClassical, &kFactorial}) {
    for (unsigned n_max = 0; n_max <= 5; ++n_max) {
      for (Index k_max = 0; k_max <= (fam == &kFactorial ? 12u : 80u); k_max += 3) {
        const auto r = build_partition(*fam, n_max, k_max, horizon_for(*fam, k_max) + 5,
                                       PartitionMode::Disjointified);
        CHECK(r.check.pairwise_disjoint);
        CHECK(r.check.covers);
      }
    }
  }
}

TEST_CASE("literal factorial partition stays disjoint at tested scales") {
  for (Index k_max = 2; k_max <= 16; ++k_max) {
    const auto r = build_partition(kFactorial, 4, k_max, horizon_for(kFactorial, k_max),
                                   PartitionMode::Literal);
    CHECK(r.check.pairwise_disjoint);
    CHECK(r.check.covers);
  }
}
