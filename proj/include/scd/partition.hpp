#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "scd/ffield.hpp"

namespace scd {

enum class Family { D, C, B };

const char* to_string(Family f);
Family family_from_string(const std::string& s);

/// The signed ground set 1 < ... < n < -n < ... < -1 (with 0 in the middle for
/// family B). Positions are 1-based.
class SignedOrder {
 public:
  SignedOrder(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  /// Number of points: 2n, or 2n+1 for family B.
  int size() const { return size_; }

  bool contains(int v) const;
  int pos(int v) const;
  int value_at(int pos) const;
  /// Position of -v given the position of v.
  int mirror_pos(int pos) const { return size_ + 1 - pos; }

 private:
  Family family_;
  int n_;
  int size_;
};

/// A labelled arc i -a- j with i before j in the signed order and a != 0.
struct Arc {
  int i;
  int j;
  Code label;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Violation {
  enum class Kind { out_of_range, bad_order, zero_label, forbidden_arc, mirror, shared_left, shared_right };
  Kind kind;
  Arc first;
  Arc second;  // equals first when a single arc is at fault
  std::string message;
};

/// A labelled set partition of [+-n] for one family: a mirror-symmetric set of
/// labelled arcs with at most one arc leaving and one arc entering each point.
/// Only the positive half (arcs (i,j) with i > 0 and i < |j|, or j = -i for
/// family C, or j = 0 for family B) is stored; the mirror half is derived.
class LabelledPartition {
 public:
  /// Empty partition of [+-n].
  LabelledPartition(Family family, int n, FieldPtr field);

  /// Builds the mirror half and validates; throws invalid_partition.
  static LabelledPartition from_plus(Family family, int n, FieldPtr field, std::vector<Arc> plus);

  struct Validation;
  /// Validates a full arc set (both halves).
  static Validation validate(Family family, int n, FieldPtr field, std::vector<Arc> arcs);

  Family family() const { return family_; }
  int n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  SignedOrder order() const { return SignedOrder(family_, n_); }

  std::span<const Arc> plus() const { return plus_; }
  /// Full arc set in canonical order (sorted by positions of the endpoints).
  std::vector<Arc> arcs() const;
  /// Arc (i, j, a) -> (-j, -i, -a).
  Arc mirror(const Arc& a) const;
  bool is_plus(const Arc& a) const;

  bool empty() const { return plus_.empty(); }
  std::size_t pair_count() const { return plus_.size(); }
  std::size_t arc_count() const;

  /// Same arcs, seen as a partition of [+-n'] with n' >= n (signed labels are kept).
  LabelledPartition widened(int n_new) const;

  /// A(this) is a subset of A(other).
  bool arcs_subset_of(const LabelledPartition& other) const;

  std::string to_string() const;

  friend bool operator==(const LabelledPartition& a, const LabelledPartition& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.plus_ == b.plus_;
  }
  /// Orders by n, then lexicographically on the canonical plus list compared
  /// by (position of i, position of j, label).
  friend std::strong_ordering operator<=>(const LabelledPartition& a, const LabelledPartition& b);

 private:
  LabelledPartition(Family family, int n, FieldPtr field, std::vector<Arc> plus, bool);
  void canonicalize();

  Family family_;
  int n_;
  FieldPtr field_;
  std::vector<Arc> plus_;
};

struct LabelledPartition::Validation {
  std::vector<Violation> violations;
  std::vector<LabelledPartition> partition;  // exactly one entry when valid

  bool ok() const { return violations.empty(); }
  const LabelledPartition& value() const;
};

/// Visits every valid partition of (family, n) exactly once in lexicographic
/// order of the canonical plus lists.
void enumerate_partitions(Family family, int n, const FieldPtr& field,
                          const std::function<void(const LabelledPartition&)>& visit);
std::vector<LabelledPartition> enumerate_partitions(Family family, int n, const FieldPtr& field);
std::uint64_t count_partitions(Family family, int n, const FieldPtr& field);

/// Visits every valid partition containing all arcs of `base` whose additional
/// arcs (given by their plus representative, as positions) pass `allow`.
void extend_partition(const LabelledPartition& base, const std::function<bool(int pos_i, int pos_j)>& allow,
                      const std::function<void(const LabelledPartition&)>& visit);

/// All valid mu with A(lambda) a subset of A(mu), each exactly once.
std::vector<LabelledPartition> superset_closure(const LabelledPartition& lambda);

/// Subsets of [n] are bit masks: bit k-1 set means k is in A.
using Subset = std::uint32_t;

std::vector<int> subset_elements(Subset a, int n);

struct Restriction {
  LabelledPartition first;   // st_A(lambda|_A)
  LabelledPartition second;  // st_{A^c}(lambda|_{A^c})
  bool splits_cleanly;
};

/// lambda|_A restricted to +-A and relabelled order-preservingly onto [+-|A|],
/// likewise for the complement. Families D and C.
Restriction restrict_standardize(const LabelledPartition& lambda, Subset a);

/// The arcs of lambda with both endpoints in +-A, not relabelled (ground set [+-n]).
LabelledPartition restrict_unstandardized(const LabelledPartition& lambda, Subset a);

/// mu over [+-m] shifted into the middle block of [+-(k+m)]: v -> sign(v)(k+|v|).
LabelledPartition shift_up(const LabelledPartition& mu, int k);

/// lambda over [+-k] disjoint union mu shifted up by k.
LabelledPartition concat(const LabelledPartition& lambda, const LabelledPartition& mu);

/// Connected components of [n] under the arcs of lambda (identifying v and -v).
int component_count(const LabelledPartition& lambda);

}  // namespace scd
