#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "scd/cyclotomic.hpp"
#include "scd/oracle.hpp"
#include "scd/partition.hpp"

namespace scd {

/// How the exponent N in the value formula counts nestings: every mu+ arc
/// nested under some lambda+ arc once, or every (lambda+ arc, mu+ arc) nesting pair.
enum class NestingCount { distinct_arcs, pairs };

/// Exponent e with chi^lambda(1) = q^e: the sum of pos(j) - pos(i) - 1 over lambda+.
unsigned degree_exponent(const LabelledPartition& lambda);
mpz_class degree(const LabelledPartition& lambda);

/// The vanishing condition, quantified over lambda+ arcs.
bool chi_vanishes(const LabelledPartition& lambda, const LabelledPartition& mu);
/// The same condition quantified over every arc of lambda.
bool chi_vanishes_full(const LabelledPartition& lambda, const LabelledPartition& mu);

/// Number of mu+ arcs (or nesting pairs) strictly inside some lambda+ arc.
unsigned nesting_count(const LabelledPartition& lambda, const LabelledPartition& mu, NestingCount mode);

/// chi^lambda(x_mu). Family D only.
CycValue chi_value(const LabelledPartition& lambda, const LabelledPartition& mu,
                   NestingCount mode = NestingCount::distinct_arcs);

/// The single-pair pieces lambda_ij = {i-a-j, -j-(-a)-(-i)} of lambda.
std::vector<LabelledPartition> arc_pairs(const LabelledPartition& lambda);

struct CharTable {
  Family family = Family::D;
  int n = 0;
  FieldPtr field;
  std::vector<LabelledPartition> labels;
  std::vector<std::vector<CycValue>> values;  // values[row = lambda][column = mu]
  std::vector<std::uint64_t> class_sizes;     // empty until attached

  std::size_t size() const { return labels.size(); }
};

/// Refuses (budget_exceeded) when the number of cells exceeds the budget.
CharTable char_table(Family family, int n, const FieldPtr& field, std::uint64_t budget = default_budget,
                     NestingCount mode = NestingCount::distinct_arcs);

/// Copies class sizes from a classified group table; the label sets must agree.
void attach_class_sizes(CharTable& table, const GroupTable& group);

/// Row lambda of the table as a class function on the group's superclasses.
ClassFunction row_function(const CharTable& table, std::size_t row);

struct DegreeProduct {
  mpz_class lhs;           // chi^lambda(1) chi^mu(1)
  mpz_class rhs;           // q^{2 m alpha} chi^{lambda ++ mu}(1)
  unsigned alpha = 0;      // lambda+ arcs ending on the negative side
  mpz_class concatenated;  // chi^{lambda ++ mu}(1)

  bool holds() const { return lhs == rhs; }
  /// chi^{lambda ++ mu}(1) = q^{2 m alpha} chi^lambda(1) chi^mu(1).
  bool reversed_holds(unsigned q, int m) const;
};

DegreeProduct degree_product_check(const LabelledPartition& lambda, const LabelledPartition& mu);

}  // namespace scd
