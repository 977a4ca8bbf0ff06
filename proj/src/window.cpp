#include "gdens/window.hpp"

#include "gdens/errors.hpp"

namespace gdens {

Window::Window(IntervalList runs) : runs_(normalize(std::move(runs))) {
  if (runs_.empty()) throw InvalidArgument("empty window");
  size_ = cardinality(runs_);
}

Window Window::from_elements(const std::vector<Natural>& sorted_elements) {
  IntervalList runs;
  for (std::size_t i = 0; i < sorted_elements.size(); ++i) {
    const Natural& v = sorted_elements[i];
    if (i > 0 && !(sorted_elements[i - 1] < v)) {
      throw InvalidArgument("window elements not strictly increasing");
    }
    if (!runs.empty() && runs.back().hi + 1 == v) {
      runs.back().hi = v;
    } else {
      runs.push_back({v, v});
    }
  }
  return Window(std::move(runs));
}

Window Window::range(const Natural& lo, const Natural& hi) { return Window({{lo, hi}}); }

std::vector<Natural> Window::elements() const {
  std::vector<Natural> out;
  for (const auto& r : runs_) {
    for (Natural x = r.lo; x <= r.hi; ++x) out.push_back(x);
  }
  return out;
}

Natural intersect_card(const IntegerSet& a, const Window& w) {
  Natural total = 0;
  for (const auto& r : w.runs()) total += a.count_in(r.lo, r.hi);
  return total;
}

}  // namespace gdens
