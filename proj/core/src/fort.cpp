#include "fortcad/fort.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

namespace fortcad {

IntegerCell::IntegerCell(std::vector<Entry> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw FortError("IntegerCell: empty entry list");
  for (const Entry& e : e_)
    if (e.k < 0) throw FortError("IntegerCell: negative anchor");
}

std::vector<int> IntegerCell::type() const {
  std::vector<int> t(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) t[i] = e_[i].interval ? 1 : 0;
  return t;
}

int IntegerCell::dim() const {
  int d = 0;
  for (const Entry& e : e_) d += e.interval ? 1 : 0;
  return d;
}

IntegerCell IntegerCell::prefix(size_t len) const {
  if (len == 0 || len > e_.size()) throw FortError("IntegerCell::prefix: bad length");
  return IntegerCell(std::vector<Entry>(e_.begin(), e_.begin() + len));
}

IntegerCell IntegerCell::suffix(size_t from) const {
  if (from >= e_.size()) throw FortError("IntegerCell::suffix: bad index");
  return IntegerCell(std::vector<Entry>(e_.begin() + from, e_.end()));
}

IntegerCell operator*(const IntegerCell& a, const IntegerCell& b) {
  std::vector<Entry> e = a.e_;
  e.insert(e.end(), b.e_.begin(), b.e_.end());
  return IntegerCell(std::move(e));
}

IntegerCell IntegerCell::translated_x1(int32_t offset) const {
  std::vector<Entry> e = e_;
  e[0].k += offset;
  return IntegerCell(std::move(e));
}

bool IntegerCell::contains(const std::vector<Rat>& p) const {
  if (p.size() != e_.size()) return false;
  for (size_t i = 0; i < e_.size(); ++i) {
    const Entry& e = e_[i];
    if (e.interval) {
      if (!(Rat(e.k) < p[i] && p[i] < Rat(e.k + 1))) return false;
    } else {
      if (p[i] != Rat(e.k)) return false;
    }
  }
  return true;
}

std::string IntegerCell::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << "x";
    if (e_[i].interval) os << "(" << e_[i].k << "," << e_[i].k + 1 << ")";
    else os << "{" << e_[i].k << "}";
  }
  return os.str();
}

namespace {
std::atomic<size_t> g_cell_cap{1000000};
}

size_t fort_cell_cap() { return g_cell_cap.load(); }
void set_fort_cell_cap(size_t cap) { g_cell_cap.store(cap); }

struct Fort::Node {
  enum Kind { kLen1, kHeight, kWidth } kind;
  int length;
  int width;        // n: sup of the first coordinate
  long cell_count;
  Fort base;                  // kHeight
  std::vector<int> heights;   // kHeight, aligned with base.cells()
  std::vector<Fort> children; // kWidth, aligned with the cells of (0, width)
};

namespace {
void check_cap(long count) {
  if (count < 0 || static_cast<size_t>(count) > fort_cell_cap())
    throw BudgetError("fort cell count exceeds configured cap (" +
                      std::to_string(fort_cell_cap()) + ")");
}
}  // namespace

namespace {
std::mutex g_interval_cache_mutex;
}

Fort Fort::interval(int n) {
  if (n < 1) throw FortError("Fort::interval: n must be >= 1");
  // length-1 forts are shared; conversions touch them constantly
  static std::vector<Fort> cache;
  if (n <= 4096) {
    std::lock_guard<std::mutex> lock(g_interval_cache_mutex);
    if (static_cast<size_t>(n) > cache.size()) {
      for (int k = static_cast<int>(cache.size()) + 1; k <= n; ++k) {
        auto node = std::make_shared<Node>();
        node->kind = Node::kLen1;
        node->length = 1;
        node->width = k;
        node->cell_count = 2L * k - 1;
        cache.push_back(Fort(std::move(node)));
      }
    }
    check_cap(2L * n - 1);
    return cache[static_cast<size_t>(n) - 1];
  }
  auto node = std::make_shared<Node>();
  node->kind = Node::kLen1;
  node->length = 1;
  node->width = n;
  node->cell_count = 2L * n - 1;
  check_cap(node->cell_count);
  return Fort(std::move(node));
}

Fort Fort::extend(const Fort& base, std::vector<int> heights) {
  if (!base.valid()) throw FortError("Fort::extend: invalid base");
  if (static_cast<long>(heights.size()) != base.cell_count())
    throw FortError("Fort::extend: heights size must equal base cell count");
  long count = 0;
  for (int h : heights) {
    if (h < 1) throw FortError("Fort::extend: heights must be >= 1");
    count += 2L * h - 1;
  }
  check_cap(count);
  auto node = std::make_shared<Node>();
  node->kind = Node::kHeight;
  node->length = base.length() + 1;
  node->width = base.width();
  node->cell_count = count;
  node->base = base;
  node->heights = std::move(heights);
  return Fort(std::move(node));
}

Fort Fort::extend(const Fort& base, const std::map<IntegerCell, int>& heights) {
  std::vector<IntegerCell> cs = base.cells();
  if (heights.size() != cs.size())
    throw FortError("Fort::extend: height map must key exactly the base cells");
  std::vector<int> h;
  h.reserve(cs.size());
  for (const IntegerCell& c : cs) {
    auto it = heights.find(c);
    if (it == heights.end())
      throw FortError("Fort::extend: missing height for base cell " + c.str());
    h.push_back(it->second);
  }
  return extend(base, std::move(h));
}

Fort Fort::join(int n, std::vector<Fort> children) {
  if (n < 1) throw FortError("Fort::join: n must be >= 1");
  if (static_cast<long>(children.size()) != 2L * n - 1)
    throw FortError("Fort::join: need exactly 2n-1 children");
  int child_len = children.front().length();
  long count = 0;
  for (const Fort& c : children) {
    if (!c.valid() || c.length() != child_len)
      throw FortError("Fort::join: children must be forts of equal length");
    count += c.cell_count();
  }
  check_cap(count);
  auto node = std::make_shared<Node>();
  node->kind = Node::kWidth;
  node->length = child_len + 1;
  node->width = n;
  node->cell_count = count;
  node->children = std::move(children);
  return Fort(std::move(node));
}

Fort Fort::unit(int length) {
  if (length < 1) throw FortError("Fort::unit: length must be >= 1");
  Fort f = interval(1);
  for (int i = 1; i < length; ++i) f = extend(f, std::vector<int>(f.cell_count(), 1));
  return f;
}

int Fort::length() const {
  if (!node_) throw FortError("Fort: empty handle");
  return node_->length;
}

long Fort::cell_count() const {
  if (!node_) throw FortError("Fort: empty handle");
  return node_->cell_count;
}

int Fort::width() const {
  if (!node_) throw FortError("Fort: empty handle");
  return node_->width;
}

bool Fort::is_height_form() const {
  return node_ && (node_->kind == Node::kHeight || node_->kind == Node::kLen1);
}
bool Fort::is_width_form() const {
  return node_ && (node_->kind == Node::kWidth || node_->kind == Node::kLen1);
}

const Fort& Fort::base() const {
  if (!node_ || node_->kind != Node::kHeight) throw FortError("Fort::base: not height form");
  return node_->base;
}
const std::vector<int>& Fort::heights() const {
  if (!node_ || node_->kind != Node::kHeight) throw FortError("Fort::heights: not height form");
  return node_->heights;
}
const std::vector<Fort>& Fort::children() const {
  if (!node_ || node_->kind != Node::kWidth) throw FortError("Fort::children: not width form");
  return node_->children;
}

namespace {

void emit_cells(const Fort& f, std::vector<Entry>& prefix, std::vector<IntegerCell>& out);

void emit_len1(int n, std::vector<Entry>& prefix, std::vector<IntegerCell>& out) {
  for (int k = 0; k < n; ++k) {
    prefix.push_back(Entry::open(k));
    out.emplace_back(prefix);
    prefix.pop_back();
    if (k + 1 < n) {
      prefix.push_back(Entry::point(k + 1));
      out.emplace_back(prefix);
      prefix.pop_back();
    }
  }
}

void emit_column(int h, std::vector<Entry>& prefix, std::vector<IntegerCell>& out) {
  emit_len1(h, prefix, out);
}

void emit_cells(const Fort& f, std::vector<Entry>& prefix, std::vector<IntegerCell>& out) {
  if (f.length() == 1) {
    emit_len1(f.width(), prefix, out);
    return;
  }
  if (f.is_height_form()) {
    // base cells in order, then columns; base-major order is lexicographic
    std::vector<IntegerCell> base_cells = f.base().cells();
    const std::vector<int>& hs = f.heights();
    for (size_t i = 0; i < base_cells.size(); ++i) {
      size_t keep = prefix.size();
      prefix.insert(prefix.end(), base_cells[i].entries().begin(), base_cells[i].entries().end());
      emit_column(hs[i], prefix, out);
      prefix.resize(keep);
    }
    return;
  }
  const std::vector<Fort>& ch = f.children();
  int n = f.width();
  size_t idx = 0;
  for (int k = 0; k < n; ++k) {
    prefix.push_back(Entry::open(k));
    emit_cells(ch[idx++], prefix, out);
    prefix.pop_back();
    if (k + 1 < n) {
      prefix.push_back(Entry::point(k + 1));
      emit_cells(ch[idx++], prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<IntegerCell> Fort::cells() const {
  if (!node_) throw FortError("Fort: empty handle");
  std::vector<IntegerCell> out;
  out.reserve(static_cast<size_t>(cell_count()));
  std::vector<Entry> prefix;
  prefix.reserve(static_cast<size_t>(length()));
  emit_cells(*this, prefix, out);
  return out;
}

Fort Fort::to_height_form() const {
  if (!node_) throw FortError("Fort: empty handle");
  if (node_->kind == Node::kLen1) return *this;
  if (node_->kind == Node::kHeight) {
    Fort b = node_->base.to_height_form();
    if (b.node_ == node_->base.node_) return *this;
    return extend(b, node_->heights);
  }
  // width form
  const std::vector<Fort>& ch = node_->children;
  if (node_->length == 2) {
    std::vector<int> hs;
    hs.reserve(ch.size());
    for (const Fort& c : ch) hs.push_back(c.width());
    return extend(interval(node_->width), std::move(hs));
  }
  // convert children to height form, lift their bases, concatenate heights
  std::vector<Fort> child_bases;
  child_bases.reserve(ch.size());
  std::vector<int> heights;
  for (const Fort& c : ch) {
    Fort hch = c.to_height_form();
    child_bases.push_back(hch.base());
    const std::vector<int>& hh = hch.heights();
    heights.insert(heights.end(), hh.begin(), hh.end());
  }
  Fort base = join(node_->width, std::move(child_bases)).to_height_form();
  return extend(base, std::move(heights));
}

Fort Fort::to_width_form() const {
  if (!node_) throw FortError("Fort: empty handle");
  if (node_->kind == Node::kLen1) return *this;
  if (node_->kind == Node::kWidth) {
    std::vector<Fort> ch;
    ch.reserve(node_->children.size());
    bool changed = false;
    for (const Fort& c : node_->children) {
      Fort w = c.to_width_form();
      changed = changed || w.node_ != c.node_;
      ch.push_back(std::move(w));
    }
    if (!changed) return *this;
    return join(node_->width, std::move(ch));
  }
  // height form
  const Fort& b = node_->base;
  if (node_->length == 2) {
    std::vector<Fort> ch;
    ch.reserve(node_->heights.size());
    for (int h : node_->heights) ch.push_back(interval(h));
    return join(b.width(), std::move(ch));
  }
  Fort bw = b.to_width_form();
  const std::vector<Fort>& bch = bw.children();
  std::vector<Fort> ch;
  ch.reserve(bch.size());
  size_t off = 0;
  for (const Fort& bc : bch) {
    size_t n = static_cast<size_t>(bc.cell_count());
    std::vector<int> slice(node_->heights.begin() + off, node_->heights.begin() + off + n);
    off += n;
    ch.push_back(extend(bc, std::move(slice)).to_width_form());
  }
  return join(bw.width(), std::move(ch));
}

Fort Fort::project(int i) const {
  if (i < 1 || i >= length()) throw FortError("Fort::project: index out of range");
  Fort f = to_height_form();
  while (f.length() > i) f = f.base().to_height_form();
  return f;
}

Fort Fort::fiber(const IntegerCell& base_cell) const {
  size_t i = base_cell.length();
  if (i < 1 || static_cast<int>(i) >= length())
    throw FortError("Fort::fiber: base cell length out of range");
  Fort proj = project(static_cast<int>(i));
  if (!proj.cell_index(base_cell))
    throw FortError("Fort::fiber: not a cell of the projection: " + base_cell.str());
  std::vector<IntegerCell> fib;
  for (const IntegerCell& c : cells()) {
    if (c.prefix(i) == base_cell) fib.push_back(c.suffix(i));
  }
  FortCheck chk = validate_fort(std::move(fib));
  if (!chk.ok()) throw FortError("Fort::fiber: fiber is not a fort: " + chk.error);
  return *chk.fort;
}

Fort Fort::subdivide_set(int d) const {
  if (d < 1) throw FortError("Fort::subdivide_set: d must be >= 1");
  if (d == 1) return *this;
  Fort f = to_height_form();
  if (f.length() == 1) return interval(f.width() * d);
  Fort base = f.base().to_height_form();
  Fort sbase = base.subdivide_set(d);
  // height over a subdivided cell is d times the height over its parent
  std::vector<IntegerCell> scells = sbase.cells();
  std::vector<int> sh;
  sh.reserve(scells.size());
  for (const IntegerCell& sc : scells) {
    std::vector<Entry> parent(sc.entries());
    for (Entry& e : parent) {
      if (!e.interval && e.k % d == 0) e.k /= d;
      else e = Entry::open(e.k / d);
    }
    auto idx = base.cell_index(IntegerCell(std::move(parent)));
    if (!idx) throw FortError("Fort::subdivide_set: internal parent lookup failed");
    sh.push_back(f.heights()[*idx] * d);
  }
  return extend(sbase, std::move(sh));
}

std::optional<size_t> Fort::cell_index(const IntegerCell& c) const {
  if (static_cast<int>(c.length()) != length()) return std::nullopt;
  Fort f = to_height_form();
  if (f.length() == 1) {
    const Entry& e = c.entry(0);
    if (e.interval) {
      if (e.k < 0 || e.k >= f.width()) return std::nullopt;
      return static_cast<size_t>(2 * e.k);
    }
    if (e.k < 1 || e.k >= f.width()) return std::nullopt;
    return static_cast<size_t>(2 * e.k - 1);
  }
  auto bidx = f.base().cell_index(c.prefix(c.length() - 1));
  if (!bidx) return std::nullopt;
  const std::vector<int>& hs = f.heights();
  long off = 0;
  for (size_t j = 0; j < *bidx; ++j) off += 2L * hs[j] - 1;
  const Entry& e = c.last();
  int h = hs[*bidx];
  if (e.interval) {
    if (e.k < 0 || e.k >= h) return std::nullopt;
    return static_cast<size_t>(off + 2 * e.k);
  }
  if (e.k < 1 || e.k >= h) return std::nullopt;
  return static_cast<size_t>(off + 2 * e.k - 1);
}

std::optional<IntegerCell> Fort::containing_cell(const FortPoint& p) const {
  if (static_cast<int>(p.length()) != length()) return std::nullopt;
  std::vector<Entry> entries;
  entries.reserve(p.length());
  for (const Rat& x : p.coords) {
    if (x <= 0) return std::nullopt;
    Int fl = rat_floor(x);
    long k = fl.get_si();
    if (Rat(fl) == x) entries.push_back(Entry::point(static_cast<int32_t>(k)));
    else entries.push_back(Entry::open(static_cast<int32_t>(k)));
  }
  IntegerCell c(std::move(entries));
  if (!cell_index(c)) return std::nullopt;
  return c;
}

bool Fort::contains_point(const FortPoint& p) const { return containing_cell(p).has_value(); }

namespace {
bool height_equal(const Fort& a, const Fort& b) {
  if (a.length() != b.length()) return false;
  if (a.length() == 1) return a.width() == b.width();
  return a.heights() == b.heights() && height_equal(a.base().to_height_form(), b.base().to_height_form());
}
}  // namespace

bool operator==(const Fort& a, const Fort& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  if (a.length() != b.length() || a.cell_count() != b.cell_count() || a.width() != b.width())
    return false;
  return height_equal(a.to_height_form(), b.to_height_form());
}

std::string Fort::str() const {
  if (!node_) return "<empty>";
  if (length() == 1) return "interval(" + std::to_string(width()) + ")";
  Fort f = to_height_form();
  std::ostringstream os;
  os << "fort(base=" << f.base().str() << ", heights=[";
  const auto& hs = f.heights();
  for (size_t i = 0; i < hs.size(); ++i) {
    if (i) os << ",";
    os << hs[i];
  }
  os << "])";
  return os.str();
}

FortCheck validate_fort(std::vector<IntegerCell> cs) {
  FortCheck out;
  if (cs.empty()) {
    out.error = "empty cell set (forts are nonempty)";
    return out;
  }
  size_t len = cs.front().length();
  for (const IntegerCell& c : cs) {
    if (c.length() != len) {
      out.error = "mixed cell lengths at " + c.str();
      return out;
    }
  }
  std::sort(cs.begin(), cs.end());
  for (size_t i = 1; i < cs.size(); ++i) {
    if (cs[i] == cs[i - 1]) {
      out.error = "duplicate cell (non-disjoint input) at " + cs[i].str();
      return out;
    }
  }
  if (len == 1) {
    // must be exactly (0,1),{1},(1,2),...,(n-1,n)
    if (!(cs.front().entry(0) == Entry::open(0))) {
      out.error = "first coordinate must start with the cell (0,1); found " + cs.front().str();
      return out;
    }
    int n = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
      Entry want = (i % 2 == 0) ? Entry::open(static_cast<int32_t>(i / 2))
                                : Entry::point(static_cast<int32_t>(i / 2 + 1));
      if (!(cs[i].entry(0) == want)) {
        out.error = "column gap: expected " + IntegerCell({want}).str() + ", found " + cs[i].str();
        return out;
      }
      if (i % 2 == 0) n = static_cast<int>(i / 2) + 1;
    }
    if (cs.size() % 2 == 0) {
      out.error = "column gap: first coordinate ends with a point cell " + cs.back().str();
      return out;
    }
    out.fort = Fort::interval(n);
    return out;
  }
  // group by base prefix (sorted order keeps groups contiguous)
  std::vector<IntegerCell> base_cells;
  std::vector<int> heights;
  size_t i = 0;
  while (i < cs.size()) {
    IntegerCell pre = cs[i].prefix(len - 1);
    size_t j = i;
    while (j < cs.size() && cs[j].prefix(len - 1) == pre) ++j;
    // last entries of cs[i..j) must be exactly the cells of (0,h)
    size_t m = j - i;
    if (m % 2 == 0) {
      out.error = "column over " + pre.str() + " ends with a point cell";
      return out;
    }
    for (size_t t = 0; t < m; ++t) {
      Entry want = (t % 2 == 0) ? Entry::open(static_cast<int32_t>(t / 2))
                                : Entry::point(static_cast<int32_t>(t / 2 + 1));
      if (!(cs[i + t].last() == want)) {
        out.error = "column over " + pre.str() + " violates 0 < x < h: found " + cs[i + t].str();
        return out;
      }
    }
    base_cells.push_back(std::move(pre));
    heights.push_back(static_cast<int>(m / 2) + 1);
    i = j;
  }
  FortCheck basechk = validate_fort(std::move(base_cells));
  if (!basechk.ok()) {
    out.error = "base: " + basechk.error;
    return out;
  }
  out.fort = Fort::extend(*basechk.fort, std::move(heights));
  return out;
}

}  // namespace fortcad
