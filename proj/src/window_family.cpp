#include "gdens/window_family.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "gdens/errors.hpp"
#include "gdens/iset_io.hpp"

namespace gdens {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ClassicalPrefix:
      return "ClassicalPrefix";
    case FamilyKind::FactorialBlocks:
      return "FactorialBlocks";
    case FamilyKind::FileBacked:
      return "FileBacked";
    default:
      return "Custom";
  }
}

WindowFamily WindowFamily::classical_prefix() {
  Definition def;
  def.key = "classical";
  def.kind = FamilyKind::ClassicalPrefix;
  // n = 0 maps to {1} so that every window is nonempty.
  def.window = [](Index n) { return Window::range(1, Natural(std::max<Index>(n, 1))); };
  def.size_lower_bound = [](Index n) { return Natural(std::max<Index>(n, 1)); };
  def.min_element_lower_bound = [](Index) { return Natural(1); };
  def.disjoint_blocks = false;
  def.windows_escape = false;
  def.default_scan = Index{1} << 17;
  return custom(std::move(def));
}

WindowFamily WindowFamily::factorial_blocks() {
  Definition def;
  def.key = "factorial";
  def.kind = FamilyKind::FactorialBlocks;
  def.window = [](Index n) {
    const Natural start = factorial(n);
    return Window::range(start, start + n);
  };
  def.size_lower_bound = [](Index n) { return Natural(n + 1); };
  def.min_element_lower_bound = [](Index n) { return factorial(n); };
  def.disjoint_blocks = true;
  def.windows_escape = true;
  def.default_scan = 64;
  return custom(std::move(def));
}

WindowFamily WindowFamily::from_stream(std::istream& in, const std::string& key) {
  auto windows = std::make_shared<std::vector<Window>>();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const bool comment_only = line.find('#') != std::string::npos &&
                              text::split_ws(text::strip_comment(line)).empty();
    if (comment_only) continue;
    const auto tokens = text::split_ws(text::strip_comment(line));
    if (tokens.empty()) throw ParseError(key, lineno, "empty window");
    std::vector<Natural> values;
    values.reserve(tokens.size());
    for (auto tok : tokens) {
      try {
        values.push_back(parse_natural(tok));
      } catch (const InvalidArgument& e) {
        throw ParseError(key, lineno, e.what());
      }
      if (values.size() > 1 && !(values[values.size() - 2] < values.back())) {
        throw ParseError(key, lineno, "window elements not strictly increasing");
      }
    }
    windows->push_back(Window::from_elements(values));
  }
  if (windows->empty()) throw ParseError(key, lineno, "family file has no windows");

  const std::size_t count = windows->size();
  auto lower = std::make_shared<std::vector<Natural>>(count);
  auto min_lower = std::make_shared<std::vector<Natural>>(count);
  // Right-to-left running minima: certificates over the indices the file defines.
  for (std::size_t i = count; i-- > 0;) {
    const auto& w = (*windows)[i];
    (*lower)[i] = i + 1 < count ? std::min(w.size(), (*lower)[i + 1]) : w.size();
    (*min_lower)[i] = i + 1 < count ? std::min(w.min_element(), (*min_lower)[i + 1]) : w.min_element();
  }

  Definition def;
  def.key = key;
  def.kind = FamilyKind::FileBacked;
  def.max_index = static_cast<Index>(count - 1);
  def.window = [windows](Index n) { return (*windows)[n]; };
  def.size_lower_bound = [lower](Index n) { return (*lower)[n]; };
  def.min_element_lower_bound = [min_lower](Index n) { return (*min_lower)[n]; };
  def.default_scan = static_cast<Index>(count - 1);

  IntervalList all;
  Natural total = 0;
  for (const auto& w : *windows) {
    all = unite(all, w.runs());
    total += w.size();
  }
  def.disjoint_blocks = cardinality(all) == total;
  if (count > 1 && !(windows->back().size() > windows->front().size())) {
    def.warnings.push_back("window sizes do not grow across the file; |F_n| -> infinity cannot be observed");
  }
  return custom(std::move(def));
}

WindowFamily WindowFamily::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open family file '" + path.string() + "'");
  return from_stream(in, "file:" + path.string());
}

WindowFamily WindowFamily::custom(Definition def) {
  if (!def.window || !def.size_lower_bound || !def.min_element_lower_bound) {
    throw InvalidArgument("family definition is missing a window or certificate function");
  }
  if (def.max_index) def.default_scan = std::min(def.default_scan, *def.max_index);
  return WindowFamily(std::make_shared<const Definition>(std::move(def)));
}

void WindowFamily::check_index(Index n) const {
  if (def_->max_index && n > *def_->max_index) {
    throw OutOfRange("window index " + std::to_string(n) + " beyond last index " +
                     std::to_string(*def_->max_index) + " of family '" + def_->key + "'");
  }
}

Window WindowFamily::window(Index n) const {
  check_index(n);
  return def_->window(n);
}

Natural WindowFamily::size_lower_bound(Index n) const {
  check_index(n);
  return def_->size_lower_bound(n);
}

Natural WindowFamily::min_element_lower_bound(Index n) const {
  check_index(n);
  return def_->min_element_lower_bound(n);
}

Index WindowFamily::clamp(Index n) const {
  return def_->max_index ? std::min(n, *def_->max_index) : n;
}

WindowFamily parse_family_spec(std::string_view spec) {
  if (spec == "classical") return WindowFamily::classical_prefix();
  if (spec == "factorial") return WindowFamily::factorial_blocks();
  if (spec.substr(0, 5) == "file:") return WindowFamily::from_file(std::string(spec.substr(5)));
  throw InvalidArgument("unknown family '" + std::string(spec) + "'");
}

WindowUnion union_of_windows(const WindowFamily& family, Index n_max) {
  IntervalList all;
  for (Index n = 0; n <= n_max; ++n) all = unite(all, family.window(n).runs());
  return {IntegerSet::from_intervals(std::move(all)), n_max, true};
}

namespace {

/// ⋃_n F_n for families whose windows escape to infinity (M(n) -> ∞).
class WindowUnionGenerator final : public Generator {
 public:
  explicit WindowUnionGenerator(WindowFamily family) : family_(std::move(family)) {}

  std::string describe() const override { return "blocks(" + family_.key() + ")"; }

  bool contains(const Natural& x) const override { return !runs_in(x, x).empty(); }

  IntervalList runs_in(const Natural& lo, const Natural& hi) const override {
    IntervalList out;
    for (Index n = 0; family_.min_element_lower_bound(n) <= hi; ++n) {
      out = unite(out, clip(family_.window(n).runs(), lo, hi));
    }
    return out;
  }

  Natural count_in(const Natural& lo, const Natural& hi) const override {
    return cardinality(runs_in(lo, hi));
  }

  // Logarithmically many windows start below any bound.
  bool fast_count() const override { return true; }

  std::optional<WindowUnionTag> window_union() const override {
    return WindowUnionTag{family_.key(), std::nullopt};
  }

 private:
  WindowFamily family_;
};

}  // namespace

IntegerSet window_union_set(const WindowFamily& family) {
  if (family.kind() == FamilyKind::ClassicalPrefix) return IntegerSet::ray(1);
  if (family.truncated()) return union_of_windows(family, *family.max_index()).set;
  if (family.windows_escape()) {
    return IntegerSet::from_generator(std::make_shared<WindowUnionGenerator>(family));
  }
  throw InvalidArgument("no closed form for the window union of family '" + family.key() + "'");
}

void write_family(std::ostream& out, const WindowFamily& family, Index n_max) {
  for (Index n = 0; n <= n_max; ++n) {
    const auto w = family.window(n);
    bool first = true;
    for (const auto& r : w.runs()) {
      for (Natural x = r.lo; x <= r.hi; ++x) {
        out << (first ? "" : " ") << x;
        first = false;
      }
    }
    out << '\n';
  }
}

}  // namespace gdens
