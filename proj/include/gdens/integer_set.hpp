#ifndef GDENS_INTEGER_SET_HPP
#define GDENS_INTEGER_SET_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdens/numeric.hpp"

namespace gdens {

struct ClosedInterval {
  Natural lo;
  Natural hi;

  Natural size() const { return hi - lo + 1; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Sorted, pairwise disjoint, non-adjacent closed intervals.
using IntervalList = std::vector<ClosedInterval>;

IntervalList normalize(IntervalList runs);
bool is_normalized(const IntervalList& runs);
IntervalList unite(const IntervalList& a, const IntervalList& b);
IntervalList subtract(const IntervalList& a, const IntervalList& b);
IntervalList intersect(const IntervalList& a, const IntervalList& b);
IntervalList clip(const IntervalList& runs, const Natural& lo, const Natural& hi);
Natural cardinality(const IntervalList& runs);

/// Marks a set that contains every window F_n of the named family, possibly
/// with everything at or below `at_most` removed.
struct WindowUnionTag {
  std::string family_key;
  std::optional<Natural> at_most;
};

/// Membership oracle behind a GeneratorBacked set.
///
/// Only `describe` and `contains` are required; the structured queries fall
/// back to scanning `contains`, which is why predicate-only generators must
/// certify a finite horizon. Horizon checks are done by IntegerSet before any
/// of these are called.
class Generator {
 public:
  virtual ~Generator() = default;

  virtual std::string describe() const = 0;
  virtual bool contains(const Natural& x) const = 0;

  /// Largest element for which answers are certified; nullopt means all of ω.
  virtual std::optional<Natural> horizon() const { return std::nullopt; }

  /// Members in [lo, hi] as normalized runs.
  virtual IntervalList runs_in(const Natural& lo, const Natural& hi) const;

  /// |A ∩ [lo, hi]|.
  virtual Natural count_in(const Natural& lo, const Natural& hi) const;

  /// True when count_in costs no more than a few arithmetic operations.
  virtual bool fast_count() const { return false; }

  virtual std::optional<WindowUnionTag> window_union() const { return std::nullopt; }
};

enum class SetKind { ExplicitFinite, IntervalUnion, GeneratorBacked };

/// A subset of ω = {0, 1, 2, ...}.
///
/// Values are immutable and cheap to copy (generators are shared). Every
/// query that touches elements above a generator's horizon throws
/// HorizonExceeded.
class IntegerSet {
 public:
  IntegerSet();

  /// Strictly increasing list; throws InvalidArgument otherwise.
  static IntegerSet from_sorted(std::vector<Natural> values);
  /// Any order, duplicates allowed.
  static IntegerSet from_elements(std::vector<Natural> values);
  /// Any runs; normalized on construction. `ray_from` appends [ray_from, ∞).
  static IntegerSet from_intervals(IntervalList runs, std::optional<Natural> ray_from = {});
  static IntegerSet interval(const Natural& lo, const Natural& hi);
  static IntegerSet ray(const Natural& from);
  static IntegerSet everything();
  static IntegerSet from_generator(std::shared_ptr<const Generator> gen);

  SetKind kind() const;
  bool is_empty_explicitly() const;
  bool finite_support() const;
  std::optional<Natural> horizon() const;
  /// Largest element of a finite-support set; nullopt when empty.
  std::optional<Natural> support_max() const;
  Natural cardinality() const;

  bool contains(const Natural& x) const;
  Natural count_in(const Natural& lo, const Natural& hi) const;
  /// |A ∩ [lo, ∞)| for finite-support sets.
  Natural count_from(const Natural& lo) const;
  IntervalList runs_in(const Natural& lo, const Natural& hi) const;
  bool fast_count() const;
  std::optional<WindowUnionTag> window_union() const;

  std::string describe() const;

  // Representation access; each throws std::logic_error on the wrong kind.
  const std::vector<Natural>& elements() const;
  const IntervalList& intervals() const;
  const std::optional<Natural>& ray_start() const;
  const std::shared_ptr<const Generator>& generator() const;

 private:
  struct Explicit {
    std::vector<Natural> values;
  };
  struct Intervals {
    IntervalList runs;
    std::vector<Natural> prefix;  // prefix[i] = total size of runs[0..i)
    std::optional<Natural> ray;
  };
  struct Generated {
    std::shared_ptr<const Generator> gen;
  };

  explicit IntegerSet(Explicit e) : rep_(std::move(e)) {}
  explicit IntegerSet(Intervals i) : rep_(std::move(i)) {}
  explicit IntegerSet(Generated g) : rep_(std::move(g)) {}

  void check_horizon(const Natural& hi) const;
  Natural count_upto(const Natural& x) const;  // |A ∩ [0, x]|, non-generator only

  std::variant<Explicit, Intervals, Generated> rep_;
};

/// Bounded runs plus an optional ray; the canonical form of a non-generator set.
struct CanonicalForm {
  IntervalList runs;
  std::optional<Natural> ray;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical(const IntegerSet& a);

/// Element-wise equality for non-generator sets.
bool same_elements(const IntegerSet& a, const IntegerSet& b);

/// A ∖ [0, m]: the elements strictly greater than m.
IntegerSet tail(const IntegerSet& a, const Natural& m);
IntegerSet set_union(const IntegerSet& a, const IntegerSet& b);
IntegerSet set_intersection(const IntegerSet& a, const IntegerSet& b);
IntegerSet set_difference(const IntegerSet& a, const IntegerSet& b);
IntegerSet complement(const IntegerSet& a);
/// A ∩ [0, h]; always finite support.
IntegerSet restrict(const IntegerSet& a, const Natural& h);
std::vector<Natural> enumerate_up_to(const IntegerSet& a, const Natural& h);

/// Materializes A ∩ [lo, hi] when A has no fast counting path; otherwise
/// returns A unchanged. Counting results on [lo, hi] are identical.
IntegerSet localized(const IntegerSet& a, const Natural& lo, const Natural& hi);

// Closed-form generators.
IntegerSet squares();
IntegerSet cubes();
/// {start + step * j : j >= 0}; step == 0 gives {start}.
IntegerSet arithmetic(const Natural& start, const Natural& step);
/// Predicate-only generators must certify a finite horizon.
IntegerSet predicate_set(std::string name, std::function<bool(const Natural&)> pred,
                         const Natural& horizon);

}  // namespace gdens

#endif
