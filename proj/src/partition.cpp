#include "gdens/partition.hpp"

#include <algorithm>
#include <ostream>

#include "gdens/errors.hpp"

namespace gdens {

std::string_view to_string(PartitionMode mode) {
  return mode == PartitionMode::Literal ? "Literal" : "Disjointified";
}

SliceInterval slice_interval(const WindowFamily& family, Index k, unsigned n) {
  const Window w = family.window(k);
  SliceInterval s;
  s.k = k;
  s.n = n;
  s.lo = Rational(w.max_element()) - Rational(w.size(), pow2(n));
  s.hi = Rational(w.max_element()) - Rational(w.size(), pow2(n + 1));
  Natural first = ceil_of(s.lo);
  if (first < 0) first = 0;
  const Natural last = floor_of(s.hi);
  if (first <= last) s.members = ClosedInterval{first, last};
  return s;
}

namespace {

IntervalList level_slices(const WindowFamily& family, unsigned n, Index k_max, const Natural& horizon) {
  IntervalList runs;
  for (Index k = 0; k <= k_max; ++k) {
    const auto s = slice_interval(family, k, n);
    if (s.members && s.members->lo <= horizon) {
      runs.push_back({s.members->lo, std::min(s.members->hi, horizon)});
    }
  }
  return normalize(std::move(runs));
}

Degeneracy measure_degeneracy(const WindowFamily& family, const IntervalList& p0, unsigned n_max, Index k_max) {
  Degeneracy d;
  if (!p0.empty() && p0.front().lo == 0) d.p0_initial_segment_end = p0.front().hi;
  const Natural threshold = pow2(n_max + 1);
  const IntegerSet p0_set = IntegerSet::from_intervals(p0);
  for (Index k = 0; k <= k_max && n_max >= 1; ++k) {
    const Window w = family.window(k);
    if (w.size() < threshold) continue;
    if (intersect_card(p0_set, w) == w.size()) d.swallowed_windows.push_back(k);
  }
  d.degenerate = !d.swallowed_windows.empty();
  return d;
}

IntervalList runs_of(const IntegerSet& s) {
  if (!s.finite_support()) throw InvalidArgument("partition blocks must have finite support");
  return canonical(s).runs;
}

}  // namespace

PartitionReport build_partition(const WindowFamily& family, unsigned n_max, Index k_max, const Natural& horizon,
                                PartitionMode mode) {
  for (Index k = 0; k <= k_max; ++k) {
    const Window w = family.window(k);
    if (w.max_element() > horizon) {
      throw InvalidArgument("inconsistent horizons: max F_" + std::to_string(k) + " = " + w.max_element().str() +
                            " exceeds H = " + horizon.str());
    }
  }

  PartitionReport report;
  report.mode = mode;
  report.n_max = n_max;
  report.k_max = k_max;
  report.horizon = horizon;

  std::vector<IntervalList> levels;
  IntervalList covered;
  for (unsigned n = 0; n <= n_max; ++n) {
    const IntervalList slices = level_slices(family, n, k_max, horizon);
    IntervalList level;
    if (mode == PartitionMode::Literal) {
      level = n == 0 ? slices : subtract(slices, levels.back());
    } else {
      level = subtract(slices, covered);
    }
    covered = unite(covered, level);
    levels.push_back(std::move(level));
  }

  const IntervalList residual = subtract(IntervalList{{0, horizon}}, covered);
  for (unsigned n = 0; n <= n_max; ++n) {
    report.levels.push_back(IntegerSet::from_intervals(levels[n]));
    report.blocks.push_back(n == 0 ? IntegerSet::from_intervals(unite(levels[0], residual))
                                   : report.levels.back());
  }
  report.check = verify_partition(report.blocks, horizon);
  report.degeneracy = measure_degeneracy(family, levels[0], n_max, k_max);
  report.slices_separated = slices_separated(family, n_max, k_max);
  return report;
}

PartitionCheck verify_partition(const std::vector<IntegerSet>& blocks, const Natural& horizon) {
  IntervalList all;
  for (const auto& b : blocks) {
    const IntervalList runs = runs_of(b);
    all.insert(all.end(), runs.begin(), runs.end());
  }
  std::sort(all.begin(), all.end(), [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });

  PartitionCheck check;
  for (std::size_t i = 1, j = 0; i < all.size(); ++i) {
    // all[j] is the run with the largest hi among all[0..i).
    if (all[i].lo <= all[j].hi) {
      check.pairwise_disjoint = false;
      check.overlap_witness = all[i].lo;
      break;
    }
    if (all[i].hi > all[j].hi) j = i;
  }

  const IntervalList gaps = subtract(IntervalList{{0, horizon}}, normalize(all));
  if (!gaps.empty()) {
    check.covers = false;
    check.gap_witness = gaps.front().lo;
  }
  return check;
}

bool slices_separated(const WindowFamily& family, unsigned n_max, Index k_max) {
  std::vector<SliceInterval> slices;
  for (Index k = 0; k <= k_max; ++k) {
    for (unsigned n = 0; n <= n_max; ++n) {
      auto s = slice_interval(family, k, n);
      if (s.members) slices.push_back(std::move(s));
    }
  }
  for (std::size_t i = 0; i < slices.size(); ++i) {
    for (std::size_t j = i + 1; j < slices.size(); ++j) {
      const auto& a = *slices[i].members;
      const auto& b = *slices[j].members;
      const Natural lo = std::max(a.lo, b.lo);
      const Natural hi = std::min(a.hi, b.hi);
      if (lo > hi) continue;
      const bool neighbours = slices[i].k == slices[j].k &&
                              (slices[i].n + 1 == slices[j].n || slices[j].n + 1 == slices[i].n);
      if (!neighbours || hi > lo) return false;
    }
  }
  return true;
}

BlockNorms block_norm_report(const WindowFamily& family, const PartitionReport& report, Index k_lo, Index k_hi) {
  if (k_lo > k_hi) throw InvalidArgument("empty k window");
  if (family.window(k_hi).max_element() > report.horizon) {
    throw HorizonExceeded("window F_" + std::to_string(k_hi) + " reaches past the partition horizon " +
                          report.horizon.str());
  }
  BlockNorms norms;
  norms.k_lo = k_lo;
  norms.k_hi = k_hi;
  const std::size_t count = report.blocks.size();
  std::vector<IntegerSet> tails(count);
  IntegerSet acc;
  for (std::size_t n = count; n-- > 0;) {
    tails[n] = acc;  // ⋃_{n < j <= n_max} G_j
    acc = set_union(acc, report.blocks[n]);
  }
  for (std::size_t n = 0; n < count; ++n) {
    norms.block_sizes.push_back(report.blocks[n].cardinality());
    norms.block_norms.push_back(windowed_max(family, report.blocks[n], k_lo, k_hi).value);
    norms.tail_norms.push_back(windowed_max(family, tails[n], k_lo, k_hi).value);
  }
  return norms;
}

void write_partition_csv(std::ostream& out, const BlockNorms& norms) {
  out << "n,block_size,window_lo,window_hi,norm_num,norm_den,tail_num,tail_den\n";
  for (std::size_t n = 0; n < norms.block_norms.size(); ++n) {
    out << n << ',' << norms.block_sizes[n] << ',' << norms.k_lo << ',' << norms.k_hi << ','
        << numerator(norms.block_norms[n]) << ',' << denominator(norms.block_norms[n]) << ','
        << numerator(norms.tail_norms[n]) << ',' << denominator(norms.tail_norms[n]) << '\n';
  }
}

}  // namespace gdens
