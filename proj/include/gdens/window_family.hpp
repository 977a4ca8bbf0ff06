#ifndef GDENS_WINDOW_FAMILY_HPP
#define GDENS_WINDOW_FAMILY_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdens/window.hpp"

namespace gdens {

enum class FamilyKind { ClassicalPrefix, FactorialBlocks, FileBacked, Custom };

std::string_view to_string(FamilyKind kind);

/// The window sequence F = (F_n), n = 0, 1, 2, ...
///
/// Besides the windows themselves a family carries two certificates that
/// make suprema over all n finitely decidable:
///   size_lower_bound(n) = L(n) with |F_m| >= L(n) for every m >= n,
///   min_element_lower_bound(n) = M(n) with min F_m >= M(n) for every m >= n.
/// Both are nondecreasing; L(n) -> ∞ is the standing hypothesis on F.
class WindowFamily {
 public:
  struct Definition {
    std::string key;
    FamilyKind kind = FamilyKind::Custom;
    std::function<Window(Index)> window;
    std::function<Natural(Index)> size_lower_bound;
    std::function<Natural(Index)> min_element_lower_bound;
    std::optional<Index> max_index;  // set for truncated (file-backed) families
    bool disjoint_blocks = false;
    /// True when M(n) -> ∞, i.e. windows eventually leave every bounded set.
    bool windows_escape = false;
    /// Default last index for horizon-mode scans.
    Index default_scan = 1024;
    std::vector<std::string> warnings;
  };

  static WindowFamily classical_prefix();
  static WindowFamily factorial_blocks();
  static WindowFamily from_file(const std::filesystem::path& path);
  static WindowFamily from_stream(std::istream& in, const std::string& key);
  static WindowFamily custom(Definition def);

  /// Throws OutOfRange for n beyond max_index().
  Window window(Index n) const;
  Natural size_lower_bound(Index n) const;
  Natural min_element_lower_bound(Index n) const;

  const std::string& key() const { return def_->key; }
  FamilyKind kind() const { return def_->kind; }
  std::optional<Index> max_index() const { return def_->max_index; }
  bool truncated() const { return def_->max_index.has_value(); }
  bool disjoint_blocks() const { return def_->disjoint_blocks; }
  bool windows_escape() const { return def_->windows_escape; }
  Index default_scan() const { return def_->default_scan; }
  const std::vector<std::string>& warnings() const { return def_->warnings; }

  /// Clamp an index range end to the family's range.
  Index clamp(Index n) const;

 private:
  explicit WindowFamily(std::shared_ptr<const Definition> def) : def_(std::move(def)) {}
  void check_index(Index n) const;

  std::shared_ptr<const Definition> def_;
};

/// "classical", "factorial", or "file:<path>".
WindowFamily parse_family_spec(std::string_view spec);

struct WindowUnion {
  IntegerSet set;
  Index n_max = 0;
  /// Always true: the union over n <= n_max truncates the union over all n.
  bool truncated = true;
};

/// ⋃_{n <= n_max} F_n, normalized.
WindowUnion union_of_windows(const WindowFamily& family, Index n_max);

/// The full union ⋃_n F_n. Closed form for the builtin families (a ray for
/// the classical prefixes, a structured generator for the factorial blocks);
/// the finite union for file-backed families.
IntegerSet window_union_set(const WindowFamily& family);

/// Writes windows 0..n_max in ".fam" format.
void write_family(std::ostream& out, const WindowFamily& family, Index n_max);

}  // namespace gdens

#endif
