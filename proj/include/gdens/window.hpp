#ifndef GDENS_WINDOW_HPP
#define GDENS_WINDOW_HPP

#include <vector>

#include "gdens/integer_set.hpp"

namespace gdens {

/// A nonempty finite subset of ω, stored as normalized runs so that windows
/// such as {1, ..., 2^17} or [20!, 20!+20] cost O(1) space.
class Window {
 public:
  explicit Window(IntervalList runs);
  static Window from_elements(const std::vector<Natural>& sorted_elements);
  static Window range(const Natural& lo, const Natural& hi);

  const IntervalList& runs() const { return runs_; }
  const Natural& size() const { return size_; }
  const Natural& min_element() const { return runs_.front().lo; }
  const Natural& max_element() const { return runs_.back().hi; }
  std::vector<Natural> elements() const;
  IntegerSet as_set() const { return IntegerSet::from_intervals(runs_); }

  friend bool operator==(const Window& a, const Window& b) { return a.runs_ == b.runs_; }

 private:
  IntervalList runs_;
  Natural size_;
};

/// |A ∩ W|, exact. Throws HorizonExceeded when W reaches past A's horizon.
Natural intersect_card(const IntegerSet& a, const Window& w);

}  // namespace gdens

#endif
