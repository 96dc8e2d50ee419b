#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "fortcad/fort.hpp"

using namespace fortcad;

namespace {

IntegerCell cell2(Entry a, Entry b) { return IntegerCell({a, b}); }

// The Figure-2-style reference fort: base (0,4), heights 1,2,3,3,4,5,1.
Fort sample_fort_2d() {
  return Fort::extend(Fort::interval(4), std::vector<int>{1, 2, 3, 3, 4, 5, 1});
}

// Independent oracle: enumerate every fort of the given length with at most
// max_cells cells by brute recursion over (n, heights...), returning cell
// sets. Used to cross-check validate_fort and the library enumerator.
void oracle_forts(int length, long max_cells, const std::function<void(const Fort&)>& fn) {
  if (length == 1) {
    for (int n = 1; 2L * n - 1 <= max_cells; ++n) fn(Fort::interval(n));
    return;
  }
  oracle_forts(length - 1, max_cells, [&](const Fort& base) {
    long m = base.cell_count();
    if (m > max_cells) return;
    std::vector<int> h(static_cast<size_t>(m), 1);
    std::function<void(size_t, long)> rec = [&](size_t i, long used) {
      if (i == h.size()) {
        fn(Fort::extend(base, h));
        return;
      }
      for (int v = 1;; ++v) {
        long add = 2L * v - 1;
        long rest = static_cast<long>(h.size() - i - 1);  // minimum for remaining cells
        if (used + add + rest > max_cells) break;
        h[i] = v;
        rec(i + 1, used + add);
      }
      h[i] = 1;
    };
    rec(0, 0);
  });
}

Fort random_fort(std::mt19937_64& rng, int length, int max_height) {
  std::uniform_int_distribution<int> w(1, 3), hdist(1, max_height);
  Fort f = Fort::interval(w(rng));
  for (int l = 1; l < length; ++l) {
    std::vector<int> hs(static_cast<size_t>(f.cell_count()));
    for (auto& h : hs) h = hdist(rng);
    f = Fort::extend(f, hs);
  }
  return f;
}

}  // namespace

TEST_CASE("length-1 forts") {
  CHECK(Fort::interval(1).cell_count() == 1);
  CHECK(Fort::interval(1).cells() == std::vector<IntegerCell>{IntegerCell({Entry::open(0)})});

  auto c3 = Fort::interval(3).cells();
  REQUIRE(c3.size() == 5);
  CHECK(c3[0] == IntegerCell({Entry::open(0)}));
  CHECK(c3[1] == IntegerCell({Entry::point(1)}));
  CHECK(c3[2] == IntegerCell({Entry::open(1)}));
  CHECK(c3[3] == IntegerCell({Entry::point(2)}));
  CHECK(c3[4] == IntegerCell({Entry::open(2)}));

  // 2n-1 formula vs direct enumeration
  CHECK(Fort::interval(5).cell_count() == 9);
  CHECK(Fort::interval(5).cells().size() == 9);

  CHECK_THROWS_AS(Fort::interval(0), FortError);
}

TEST_CASE("extend and the reference fort") {
  Fort f = sample_fort_2d();
  CHECK(f.length() == 2);
  CHECK(f.cell_count() == 31);
  CHECK(f.cells().size() == 31);

  // unit square
  Fort sq = Fort::extend(Fort::interval(1), std::vector<int>{1});
  CHECK(sq.cell_count() == 1);
  CHECK(sq == Fort::unit(2));

  // wrong-sized height vector rejected
  CHECK_THROWS_AS(Fort::extend(Fort::interval(2), std::vector<int>{1}), FortError);
  // map keyed off the wrong cells rejected
  std::map<IntegerCell, int> wrong;
  wrong[IntegerCell({Entry::open(0)})] = 1;
  CHECK_THROWS_AS(Fort::extend(Fort::interval(2), wrong), FortError);
  // zero heights rejected
  CHECK_THROWS_AS(Fort::extend(Fort::interval(1), std::vector<int>{0}), FortError);
}

TEST_CASE("projection and fibers on the reference fort") {
  Fort f = sample_fort_2d();
  CHECK(f.project(1) == Fort::interval(4));

  // column over (1,2) is (0,3)
  CHECK(f.fiber(IntegerCell({Entry::open(1)})) == Fort::interval(3));
  // column over {3} is (0,5)
  CHECK(f.fiber(IntegerCell({Entry::point(3)})) == Fort::interval(5));

  // product fort: fiber over any base cell is the second factor
  Fort b = Fort::interval(3);
  Fort prod = Fort::extend(b, std::vector<int>(5, 4));  // (0,3) x (0,4)
  for (const IntegerCell& c : b.cells()) CHECK(prod.fiber(c) == Fort::interval(4));

  // project(extend(b,h), l-1) == b
  CHECK(prod.project(1) == b);

  CHECK_THROWS_AS(f.project(0), FortError);
  CHECK_THROWS_AS(f.project(2), FortError);
  CHECK_THROWS_AS(f.fiber(IntegerCell({Entry::open(17)})), FortError);
}

TEST_CASE("width/height round trip preserves cell sets") {
  Fort f = sample_fort_2d();
  Fort w = f.to_width_form();
  CHECK(w.is_width_form());
  // columns read off the heights
  REQUIRE(w.children().size() == 7);
  int expect[] = {1, 2, 3, 3, 4, 5, 1};
  for (size_t i = 0; i < 7; ++i) CHECK(w.children()[i].width() == expect[i]);

  Fort h = w.to_height_form();
  CHECK(h.is_height_form());
  CHECK(h.cells() == f.cells());
  CHECK(h == f);

  // length-1 forts convert to themselves
  CHECK(Fort::interval(4).to_width_form() == Fort::interval(4));
  CHECK(Fort::interval(4).to_height_form() == Fort::interval(4));
}

TEST_CASE("round trip on random length-3 forts") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Fort f = random_fort(rng, 3, 3);
    if (f.cell_count() > 120) continue;
    Fort round = f.to_width_form().to_height_form();
    CHECK(round == f);
    CHECK(round.cells() == f.cells());
    Fort round2 = f.to_height_form().to_width_form();
    CHECK(round2 == f);
  }
}

TEST_CASE("subdivide_set") {
  // (0,1)^2 scaled by 2 is (0,2)^2 with 9 cells
  Fort sq = Fort::unit(2);
  Fort s = sq.subdivide_set(2);
  CHECK(s.cell_count() == 9);
  CHECK(s == Fort::extend(Fort::interval(2), std::vector<int>{2, 2, 2}));

  // d = 1 is the identity
  Fort f = sample_fort_2d();
  CHECK(f.subdivide_set(1) == f);

  // (0,1) scaled by 3 is (0,3)
  CHECK(Fort::interval(1).subdivide_set(3) == Fort::interval(3));

  // |cells(d * unit cell)| = (2d-1)^l
  for (int l = 1; l <= 3; ++l) {
    for (int d = 1; d <= 4; ++d) {
      long expect = 1;
      for (int i = 0; i < l; ++i) expect *= 2L * d - 1;
      CHECK(Fort::unit(l).subdivide_set(d).cell_count() == expect);
    }
  }

  // scaling commutes with cell enumeration on the reference fort
  Fort fs = f.subdivide_set(2);
  CHECK(fs.cell_count() == [&] {
    long n = 0;
    for (const IntegerCell& c : f.cells()) {
      long k = 1;
      for (const Entry& e : c.entries()) k *= e.interval ? (2 * 2 - 1) : 1;
      n += k;
    }
    return n;
  }());
}

TEST_CASE("validate_fort accepts exactly fort cell sets") {
  // the reference fort round-trips through raw cells
  Fort f = sample_fort_2d();
  FortCheck chk = validate_fort(f.cells());
  REQUIRE(chk.ok());
  CHECK(*chk.fort == f);

  // a lone point column is rejected: x2 must start with (0,1)
  FortCheck bad = validate_fort({cell2(Entry::open(0), Entry::point(1))});
  CHECK(!bad.ok());
  CHECK(bad.error.find("0 < x") != std::string::npos);

  // pair missing its interval floor
  FortCheck bad2 = validate_fort({cell2(Entry::open(0), Entry::open(0)),
                                  cell2(Entry::open(0), Entry::point(2))});
  CHECK(!bad2.ok());

  // duplicate cells
  FortCheck dup = validate_fort({cell2(Entry::open(0), Entry::open(0)),
                                 cell2(Entry::open(0), Entry::open(0))});
  CHECK(!dup.ok());
  CHECK(dup.error.find("duplicate") != std::string::npos);

  // empty input
  CHECK(!validate_fort({}).ok());

  // base gap: columns over (0,1) and (1,2) but none over {1}
  FortCheck gap = validate_fort({cell2(Entry::open(0), Entry::open(0)),
                                 cell2(Entry::open(1), Entry::open(0))});
  CHECK(!gap.ok());
}

TEST_CASE("validate_fort against the generate-and-compare oracle") {
  // collect every length-2 fort with <= 9 cells
  std::vector<std::vector<IntegerCell>> all;
  oracle_forts(2, 9, [&](const Fort& f) { all.push_back(f.cells()); });
  for (auto& cs : all) std::sort(cs.begin(), cs.end());

  auto is_fort_oracle = [&](std::vector<IntegerCell> cs) {
    std::sort(cs.begin(), cs.end());
    return std::find(all.begin(), all.end(), cs) != all.end();
  };

  // random soups of cells with entries in a small range
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> anchor(0, 2), kind(0, 1), sz(1, 6);
  int accepted = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<IntegerCell> soup;
    int n = sz(rng);
    for (int i = 0; i < n; ++i) {
      Entry a = kind(rng) ? Entry::open(anchor(rng)) : Entry::point(anchor(rng) + 1);
      Entry b = kind(rng) ? Entry::open(anchor(rng)) : Entry::point(anchor(rng) + 1);
      soup.push_back(cell2(a, b));
    }
    std::sort(soup.begin(), soup.end());
    soup.erase(std::unique(soup.begin(), soup.end()), soup.end());
    FortCheck chk = validate_fort(soup);
    CHECK(chk.ok() == is_fort_oracle(soup));
    if (chk.ok()) {
      ++accepted;
      auto cs = chk.fort->cells();
      std::sort(cs.begin(), cs.end());
      CHECK(cs == soup);
    }
  }
  // the oracle and soup generator overlap: some accepts and some rejects
  CHECK(accepted > 0);
  CHECK(accepted < 400);
}

TEST_CASE("containing cell is unique and exact") {
  Fort f = sample_fort_2d();
  // a point in (1,2) x (0,1)
  FortPoint p{{rat(3, 2), rat(1, 2)}};
  auto c = f.containing_cell(p);
  REQUIRE(c.has_value());
  CHECK(*c == cell2(Entry::open(1), Entry::open(0)));

  // a point on the grid line x1 = 1, x2 in (1,2): cell {1} x (1,2)
  FortPoint q{{Rat(1), rat(3, 2)}};
  auto cq = f.containing_cell(q);
  REQUIRE(cq.has_value());
  CHECK(*cq == cell2(Entry::point(1), Entry::open(1)));

  // outside: column over (3,4) has height 1
  FortPoint r{{rat(7, 2), rat(3, 2)}};
  CHECK(!f.containing_cell(r).has_value());
  CHECK(!f.contains_point(r));

  // exactly one containing cell among all cells (disjointness)
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(1, 15), den(4, 8);
  for (int t = 0; t < 100; ++t) {
    FortPoint s{{rat(num(rng), den(rng)), rat(num(rng), den(rng))}};
    int members = 0;
    for (const IntegerCell& cell : f.cells()) members += cell.contains(s.coords) ? 1 : 0;
    CHECK(members == (f.contains_point(s) ? 1 : 0));
  }
}

TEST_CASE("cell_index agrees with cells() order") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Fort f = random_fort(rng, 3, 3);
    auto cs = f.cells();
    for (size_t i = 0; i < cs.size(); ++i) {
      auto idx = f.cell_index(cs[i]);
      REQUIRE(idx.has_value());
      CHECK(*idx == i);
    }
    CHECK(!f.cell_index(IntegerCell({Entry::open(99), Entry::open(0), Entry::open(0)})));
  }
}

TEST_CASE("cell cap reports overflow") {
  size_t old = fort_cell_cap();
  set_fort_cell_cap(10);
  CHECK_THROWS_AS(Fort::interval(6), BudgetError);
  CHECK_THROWS_AS(Fort::extend(Fort::interval(2), std::vector<int>{4, 4, 4}), BudgetError);
  set_fort_cell_cap(old);
  CHECK(Fort::interval(6).cell_count() == 11);
}

TEST_CASE("fiber constancy at rational sample points") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Fort f = random_fort(rng, 3, 3);
    Fort base = f.project(2);
    for (const IntegerCell& c : base.cells()) {
      Fort fib = f.fiber(c);
      // the fiber read off the cells at two sample points of c coincides
      for (int s = 0; s < 2; ++s) {
        std::vector<Rat> pt;
        for (const Entry& e : c.entries())
          pt.push_back(e.interval ? Rat(e.k) + rat(1 + s, 3) : Rat(e.k));
        std::vector<IntegerCell> got;
        for (const IntegerCell& cell : f.cells()) {
          if (cell.prefix(2).contains(pt)) got.push_back(cell.suffix(2));
        }
        FortCheck chk = validate_fort(got);
        REQUIRE(chk.ok());
        CHECK(*chk.fort == fib);
      }
    }
  }
}
