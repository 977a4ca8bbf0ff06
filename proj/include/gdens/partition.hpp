#ifndef GDENS_PARTITION_HPP
#define GDENS_PARTITION_HPP

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "gdens/density.hpp"

namespace gdens {

/// The closed real interval [max F_k - |F_k|/2^n, max F_k - |F_k|/2^(n+1)]
/// and the integers it contains (⌈lo⌉..⌊hi⌋, clipped to ω).
struct SliceInterval {
  Index k = 0;
  unsigned n = 0;
  Rational lo;
  Rational hi;
  std::optional<ClosedInterval> members;
};

SliceInterval slice_interval(const WindowFamily& family, Index k, unsigned n);

enum class PartitionMode {
  /// P_n = S_n ∖ P_(n-1): only the immediately preceding level is removed.
  Literal,
  /// P_n = S_n ∖ (P_0 ∪ ... ∪ P_(n-1)).
  Disjointified,
};

std::string_view to_string(PartitionMode mode);

struct PartitionCheck {
  bool pairwise_disjoint = true;
  bool covers = true;
  /// Least integer lying in two blocks.
  std::optional<Natural> overlap_witness;
  /// Least integer of [0, H] lying in no block.
  std::optional<Natural> gap_witness;
};

/// P_0 swallowing whole windows F_k that are large enough for every level
/// 1..n_max to own a nonempty slice inside them (|F_k| >= 2^(n_max+1)).
struct Degeneracy {
  bool degenerate = false;
  /// End a of the initial segment [0, a] ⊆ P_0, if P_0 contains 0.
  std::optional<Natural> p0_initial_segment_end;
  std::vector<Index> swallowed_windows;
};

struct PartitionReport {
  PartitionMode mode = PartitionMode::Disjointified;
  unsigned n_max = 0;
  Index k_max = 0;
  Natural horizon;
  /// P_0..P_(n_max) restricted to [0, H].
  std::vector<IntegerSet> levels;
  /// G_0 = P_0 ∪ ([0, H] ∖ ⋃ P_n), G_n = P_n.
  std::vector<IntegerSet> blocks;
  PartitionCheck check;
  Degeneracy degeneracy;
  /// Slices only meet at consecutive-level boundary points of one window.
  bool slices_separated = false;
};

PartitionReport build_partition(const WindowFamily& family, unsigned n_max, Index k_max, const Natural& horizon,
                                PartitionMode mode = PartitionMode::Disjointified);

/// Exact disjointness and coverage of [0, H]; blocks must have finite support.
PartitionCheck verify_partition(const std::vector<IntegerSet>& blocks, const Natural& horizon);

/// True when distinct slices (k, n) ≠ (k', n') with k ≤ k_max, n ≤ n_max
/// share integers only if k = k' and |n - n'| = 1, and then at most one.
bool slices_separated(const WindowFamily& family, unsigned n_max, Index k_max);

struct BlockNorms {
  Index k_lo = 0;
  Index k_hi = 0;
  std::vector<Natural> block_sizes;
  /// max_{k_lo <= k <= k_hi} μ_k(G_n).
  std::vector<Rational> block_norms;
  /// max_{k_lo <= k <= k_hi} μ_k(G_(n+1) ∪ ... ∪ G_(n_max)).
  std::vector<Rational> tail_norms;
};

BlockNorms block_norm_report(const WindowFamily& family, const PartitionReport& report, Index k_lo, Index k_hi);

/// "n,block_size,window_lo,window_hi,norm_num,norm_den,tail_num,tail_den".
void write_partition_csv(std::ostream& out, const BlockNorms& norms);

}  // namespace gdens

#endif
