#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scd/cyclotomic.hpp"
#include "scd/matrix.hpp"
#include "scd/partition.hpp"

namespace scd {

/// Default ceiling on brute-force enumeration sizes; SCD_BUDGET overrides it.
constexpr std::uint64_t default_budget = 1'000'000;
std::uint64_t budget_from_env(std::uint64_t fallback = default_budget);

/// U^D_{2n}(q) listed element by element, with its superclass census once
/// superclass_partition has run.
struct GroupTable {
  Family family = Family::D;
  int n = 0;
  FieldPtr field;
  std::vector<UTMatrix> elements;

  std::vector<std::size_t> class_of;         // element index -> label index
  std::vector<LabelledPartition> labels;     // canonical order
  std::vector<std::uint64_t> class_sizes;    // per label
  std::vector<std::size_t> representatives;  // first element of each class

  std::uint64_t order() const { return elements.size(); }
  bool classified() const { return !labels.empty(); }
  /// Throws malformed_input for an unknown label.
  std::size_t label_index(const LabelledPartition& lambda) const;

 private:
  std::map<LabelledPartition, std::size_t> index_;
  friend void superclass_partition(GroupTable& table);
};

/// Every element of U^D_{2n}(q) from the (P, Q) parametrization. Refuses when
/// q^{n(n-1)} exceeds the budget.
GroupTable enumerate_group(int n, const FieldPtr& field, std::uint64_t budget = default_budget);

/// The superclass label of x in U^D: the partition read off verge_reduce(x_to_y(x)).
/// Throws invalid_partition if the reduced form is not a valid D-partition.
LabelledPartition classify(const UTMatrix& x, int n);

/// Fills class_of / labels / class_sizes.
void superclass_partition(GroupTable& table);

/// A function on U^D_{2n}(q) constant on superclasses, stored by label.
struct ClassFunction {
  Family family = Family::D;
  int n = 0;
  FieldPtr field;
  std::map<LabelledPartition, CycValue> values;

  const CycValue& at(const LabelledPartition& lambda) const;
};

/// kappa_lambda over the table's label set.
ClassFunction indicator(const GroupTable& table, const LabelledPartition& lambda);

/// (1/|G|) sum_lambda |K_lambda| f(lambda) conj(g(lambda)).
CycValue inner_product(const ClassFunction& f, const ClassFunction& g, const GroupTable& table);

/// A function on U^D_{2|A|} x U^D_{2|A^c|} recorded against pairs of labels.
struct PairClassFunction {
  std::map<std::pair<LabelledPartition, LabelledPartition>, CycValue> values;
  /// False when two elements of one product superclass received different values.
  bool constant_on_classes = true;
};

/// For every element (u1, u2) of the product group: its pair of factor labels and
/// the superclass label of its embedding in U^D_{2n}. Independent of f, so it
/// can be shared across many restrictions.
struct RestrictionMap {
  int n = 0;
  Subset a = 0;
  std::vector<std::pair<std::pair<LabelledPartition, LabelledPartition>, LabelledPartition>> images;
};

RestrictionMap restriction_map(Subset a, int n, const GroupTable& left, const GroupTable& right);

/// Res(f)(u) = f(st_J^{-1}(u)): f is evaluated on the block embedding of every
/// element u = (u1, u2) of the product group, grouped by the product superclass.
PairClassFunction restrict_eval(const ClassFunction& f, Subset a, const GroupTable& left, const GroupTable& right);
PairClassFunction restrict_eval(const ClassFunction& f, const RestrictionMap& map);

/// Embeds (u1, u2) into U^D_{2n} through st_J^{-1} for J = (A | A^c).
UTMatrix embed_block_pair(const UTMatrix& u1, const UTMatrix& u2, Subset a, int n);

/// Brute-force two-sided orbits of U_s(q) acting on u_s(q), explored lazily by
/// BFS under the elementary generators I + t e_{i,i+1} (t over an F_p-basis).
class OrbitCensus {
 public:
  OrbitCensus(FieldPtr field, int size, std::uint64_t state_budget);

  struct Orbit {
    std::uint64_t size = 0;
    std::vector<UTMatrix> arc_forms;
  };

  /// Orbit containing m (explored on first use). The reference is valid until
  /// the next exploration.
  const Orbit& orbit_of(const UTMatrix& m);
  std::size_t orbit_count() const { return orbits_.size(); }
  std::uint64_t states_visited() const { return visited_; }
  /// Explores every orbit of u_s(q).
  void explore_all();

  std::uint64_t encode(const UTMatrix& m) const;
  UTMatrix decode(std::uint64_t index) const;

 private:
  std::uint32_t explore(std::uint64_t start);

  FieldPtr field_;
  int size_;
  std::vector<std::pair<int, int>> cells_;  // strictly-upper positions in digit order
  std::vector<std::uint64_t> weight_;       // q^k per cell
  std::vector<int> cell_index_;             // (r, c) -> digit index or -1
  std::uint64_t states_ = 0;
  std::vector<std::uint32_t> orbit_id_;     // 0 = unexplored
  std::vector<Orbit> orbits_;
  std::uint64_t visited_ = 0;
};

}  // namespace scd
