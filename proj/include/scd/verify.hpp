#pragma once

#include <cstdint>

#include "scd/ffield.hpp"
#include "scd/oracle.hpp"
#include "scd/partition.hpp"
#include "scd/report.hpp"
#include "scd/superchar.hpp"

namespace scd {

/// Exhaustive Hopf-axiom checks over every basis symbol (pair, triple) whose
/// total grade is at most n_max, in both bases.
Report verify_bialgebra(Family family, int n_max, const FieldPtr& field);

/// Oracle superclass labels versus enumeration, class-size sum, identity class.
Report indexing_suite(int n, const FieldPtr& field, std::uint64_t budget = default_budget);

/// Orthogonality, norms, degree regularity and the structural table checks.
Report axioms_suite(int n, const FieldPtr& field, std::uint64_t budget = default_budget,
                    NestingCount mode = NestingCount::distinct_arcs);

struct CanonicalFormOptions {
  std::uint64_t seed = 1;
  int exhaustive_size = 4;     // every matrix of u_s(q)
  int random_size = 6;         // seeded sample of u_s(q)
  int random_count = 1000;
  int translates = 10;         // random g M h per sample
  int max_generators = 10;     // elementary factors per translate
  std::uint64_t state_budget = 20'000'000;
};

/// verge_reduce against BFS orbit closure, idempotence and orbit invariance.
Report canonical_form_suite(const FieldPtr& field, const CanonicalFormOptions& opts = {});

/// The (A | A^c) part of Delta(kappa_lambda) against the group-level
/// restriction, for every lambda in D_{2n}(q) and every A.
Report coproduct_restriction_suite(int n, const FieldPtr& field, std::uint64_t budget = default_budget);

/// Degree product identity over all pairs of total grade <= n_max, and the
/// degree-one characterization.
Report degree_suite(int n_max, const FieldPtr& field);

/// Enumeration, product, coproduct and the bialgebra checks for family C.
Report family_c_suite(int n_max, const FieldPtr& field);

/// Everything above sized by (n_max, q); what `scd verify` runs.
Report verify_bundle(int n_max, const FieldPtr& field, std::uint64_t seed, std::uint64_t budget);

}  // namespace scd
