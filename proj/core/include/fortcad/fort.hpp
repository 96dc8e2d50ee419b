#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fortcad/rational.hpp"

namespace fortcad {

/// One axis of an integer cell: the point {k} or the open interval (k, k+1).
/// Entries order by (anchor, kind), which coincides with the order of the
/// cells on the real line.
struct Entry {
  int32_t k = 0;
  bool interval = false;

  static Entry point(int32_t k) { return {k, false}; }
  static Entry open(int32_t k) { return {k, true}; }

  friend bool operator==(const Entry&, const Entry&) = default;
  friend auto operator<=>(const Entry& a, const Entry& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    return (a.interval ? 1 : 0) <=> (b.interval ? 1 : 0);
  }
};

/// Product of length-1 integer cells. Anchors are >= 0 throughout this
/// library (forts live in the positive orthant).
class IntegerCell {
 public:
  IntegerCell() = default;
  explicit IntegerCell(std::vector<Entry> entries);

  size_t length() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  const Entry& entry(size_t i) const { return e_[i]; }
  const Entry& last() const { return e_.back(); }

  /// 0 for a point axis, 1 for an interval axis.
  std::vector<int> type() const;
  int dim() const;

  IntegerCell prefix(size_t len) const;
  IntegerCell suffix(size_t from) const;
  friend IntegerCell operator*(const IntegerCell& a, const IntegerCell& b);
  IntegerCell translated_x1(int32_t offset) const;

  bool contains(const std::vector<Rat>& p) const;

  std::string str() const;

  friend bool operator==(const IntegerCell&, const IntegerCell&) = default;
  friend auto operator<=>(const IntegerCell& a, const IntegerCell& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::vector<Entry> e_;
};

/// Exact rational point, used for fiber operations and containment queries.
struct FortPoint {
  std::vector<Rat> coords;
  size_t length() const { return coords.size(); }
};

/// Work cap for fort construction; cell counts beyond this raise
/// BudgetError instead of exhausting memory.
size_t fort_cell_cap();
void set_fort_cell_cap(size_t cap);

/// A fort: a finite union of integer cells closed under the cylindrical
/// axioms. Two equivalent inductive representations are kept:
///
///  - height form: a fort of length l-1 and a positive integer height per
///    base cell, the column over each base cell being (0, h);
///  - width form: a length-1 fort (0, n) and a fort of length l-1 over
///    each of its 2n-1 cells.
///
/// Values are immutable and cheap to copy (shared structure).
class Fort {
 public:
  Fort() = default;  // empty handle; every factory returns a valid fort

  /// Length-1 fort (0, n), n >= 1.
  static Fort interval(int n);
  /// Height form over cells(base), heights aligned with base.cells().
  static Fort extend(const Fort& base, std::vector<int> heights);
  /// Height form with heights keyed by base cell; keys must match exactly.
  static Fort extend(const Fort& base, const std::map<IntegerCell, int>& heights);
  /// Width form: children aligned with the 2n-1 cells of (0, n), all of
  /// equal length.
  static Fort join(int n, std::vector<Fort> children);
  /// The unit cube (0,1)^l.
  static Fort unit(int length);

  bool valid() const { return node_ != nullptr; }
  int length() const;
  /// Number of integer cells.
  long cell_count() const;
  /// sup of the first coordinate (the n of the width form).
  int width() const;

  bool is_height_form() const;
  bool is_width_form() const;

  /// Base fort and heights of the height form (length >= 2, height rep).
  const Fort& base() const;
  const std::vector<int>& heights() const;
  const std::vector<Fort>& children() const;

  /// The cells, sorted lexicographically by axis entries (base-major).
  std::vector<IntegerCell> cells() const;

  /// Representation conversions; the underlying point set and cell set are
  /// unchanged. Length-1 forts convert to themselves.
  Fort to_height_form() const;
  Fort to_width_form() const;

  /// pi_i, a fort of length i (1 <= i < length).
  Fort project(int i) const;
  /// The fiber fort over a cell of project(i); constant on the cell.
  Fort fiber(const IntegerCell& base_cell) const;
  /// The fort d*F = {d x : x in F}.
  Fort subdivide_set(int d) const;

  std::optional<IntegerCell> containing_cell(const FortPoint& p) const;
  /// Flat index of a cell in cells() order, or nullopt.
  std::optional<size_t> cell_index(const IntegerCell& c) const;
  bool contains_point(const FortPoint& p) const;

  /// Cell-set equality (representation independent).
  friend bool operator==(const Fort& a, const Fort& b);

  std::string str() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit Fort(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

/// Outcome of validating a raw cell set against the fort axioms.
struct FortCheck {
  std::optional<Fort> fort;
  std::string error;  // first violated axiom, with a witness cell
  bool ok() const { return fort.has_value(); }
};

/// Accepts exactly the cell sets of the form cells(F); on success returns F.
FortCheck validate_fort(std::vector<IntegerCell> cells);

}  // namespace fortcad
