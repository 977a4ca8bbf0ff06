#include <doctest.h>

#include <sstream>

#include "gdens/errors.hpp"
#include "gdens/window_family.hpp"
#include "oracle.hpp"

using namespace gdens;

TEST_CASE("classical prefix windows") {
  const auto f = WindowFamily::classical_prefix();
  CHECK(f.window(5) == Window::range(1, 5));
  CHECK(f.window(1) == Window::range(1, 1));
  CHECK(f.window(0) == Window::range(1, 1));
  CHECK(f.size_lower_bound(10) == 10);
  CHECK_FALSE(f.truncated());
}

TEST_CASE("factorial block windows") {
  const auto f = WindowFamily::factorial_blocks();
  CHECK(f.window(3) == Window::range(6, 9));
  CHECK(f.window(1) == Window::range(1, 2));
  CHECK(f.window(4).size() == 5);
  CHECK(f.window(25).min_element() == oracle::fact(25));
  CHECK(f.windows_escape());
}

TEST_CASE("file family") {
  std::istringstream in("1 2 3\n4 5\n6 7 8 9\n");
  const auto f = WindowFamily::from_stream(in, "file:t.fam");
  CHECK(f.window(1) == Window::from_elements({4, 5}));
  CHECK(f.size_lower_bound(0) == 2);
  CHECK(f.size_lower_bound(2) == 4);
  CHECK(f.truncated());
  CHECK(*f.max_index() == 2);
  CHECK_THROWS_AS(f.window(3), OutOfRange);
  CHECK(f.disjoint_blocks());
  CHECK(f.warnings().empty());
}

TEST_CASE("file family rejects malformed windows") {
  std::istringstream unsorted("3 2\n");
  CHECK_THROWS_AS(WindowFamily::from_stream(unsorted, "x"), ParseError);
  std::istringstream blank("1 2\n\n3 4\n");
  CHECK_THROWS_AS(WindowFamily::from_stream(blank, "x"), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(WindowFamily::from_stream(empty, "x"), ParseError);
  std::istringstream shrinking("1 2 3\n4\n");
  CHECK_FALSE(WindowFamily::from_stream(shrinking, "x").warnings().empty());
}

TEST_CASE("union_of_windows examples") {
  const auto fac = WindowFamily::factorial_blocks();
  CHECK(canonical(union_of_windows(fac, 3).set).runs == IntervalList{{1, 4}, {6, 9}});
  CHECK(canonical(union_of_windows(fac, 1).set).runs == IntervalList{{1, 2}});
  const auto cls = WindowFamily::classical_prefix();
  CHECK(canonical(union_of_windows(cls, 4).set).runs == IntervalList{{1, 4}});
  CHECK(union_of_windows(cls, 4).truncated);
}

TEST_CASE("family spec parsing") {
  CHECK(parse_family_spec("classical").key() == "classical");
  CHECK(parse_family_spec("factorial").key() == "factorial");
  CHECK_THROWS_AS(parse_family_spec("bogus"), InvalidArgument);
  CHECK_THROWS(parse_family_spec("file:/nonexistent/x.fam"));
}

TEST_CASE("property: builtin windows match their formulas") {
  for (auto [fam, ofam] : {std::pair{WindowFamily::classical_prefix(), oracle::Fam::Classical},
                           std::pair{WindowFamily::factorial_blocks(), oracle::Fam::Factorial}}) {
    for (Index n = 0; n <= 1000; ++n) {
      const Window w = fam.window(n);
      const auto [lo, hi] = oracle::window(ofam, n);
      CHECK(w.min_element() == lo);
      CHECK(w.max_element() == hi);
      CHECK(w.size() == hi - lo + 1);
      CHECK(is_normalized(w.runs()));
    }
  }
}

TEST_CASE("property: size lower bound certificate") {
  for (const auto& fam : {WindowFamily::classical_prefix(), WindowFamily::factorial_blocks()}) {
    for (Index n = 0; n <= 1000; n += 37) {
      const Natural l = fam.size_lower_bound(n);
      CHECK(l <= fam.window(n).size());
      if (n > 0) CHECK(fam.size_lower_bound(n - 1) <= l);
      for (Index m = n; m <= n + 200; ++m) {
        CHECK(fam.window(m).size() >= l);
        CHECK(fam.window(m).min_element() >= fam.min_element_lower_bound(n));
      }
    }
  }
}

TEST_CASE("property: factorial windows pairwise disjoint from n = 2") {
  const auto f = WindowFamily::factorial_blocks();
  for (Index n = 2; n <= 20; ++n) {
    for (Index m = n + 1; m <= 20; ++m) CHECK(f.window(n).max_element() < f.window(m).min_element());
  }
}

TEST_CASE("property: fam round trip") {
  for (const auto& fam : {WindowFamily::classical_prefix(), WindowFamily::factorial_blocks()}) {
    std::stringstream io;
    write_family(io, fam, 12);
    const auto back = WindowFamily::from_stream(io, "round-trip");
    REQUIRE(*back.max_index() == 12);
    for (Index n = 0; n <= 12; ++n) CHECK(back.window(n) == fam.window(n));
  }
}
