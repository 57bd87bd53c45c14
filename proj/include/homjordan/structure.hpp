#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homjordan/algebra.hpp"

namespace homjordan {

// ---------------------------------------------------------------------------
// Ideal arithmetic
// ---------------------------------------------------------------------------

// span{ mu(u_i, w_j) } over basis pairs of the two subspaces.
Subspace subspace_product(const HomAlgebra& a, const Subspace& u, const Subspace& w);

// Twist-stable two-sided ideal test: alpha(W) <= W and mu(W, V) <= W.
bool is_hom_ideal(const HomAlgebra& a, const Subspace& w);

// Plain-algebra ideal test (no twist condition): mu(W, V) <= W.
bool is_product_ideal(const HomAlgebra& a, const Subspace& w);

// Least twist-stable ideal containing the generators: fixed point of
// W -> W + alpha(W) + mu(W, V). Terminates in at most dim V steps.
Subspace ideal_closure(const HomAlgebra& a, const std::vector<Vec>& generators);

// Least product ideal (no twist condition) containing the generators.
Subspace product_ideal_closure(const HomAlgebra& a, const std::vector<Vec>& generators);

// ---------------------------------------------------------------------------
// Derived series and solvability
// ---------------------------------------------------------------------------

struct DerivedSeries {
  std::vector<Subspace> terms;  // terms[0] = V, terms[k] = V^(k)
  bool solvable = false;        // last term is zero
};

DerivedSeries derived_series(const HomAlgebra& a);
bool is_solvable(const HomAlgebra& a);

// Builds the twist of a plain algebra by an automorphism, computes both
// derived series, and checks the transfer law term by term: the twisted
// series equals alpha^k applied to the plain series, and the two solvability
// verdicts coincide.
struct SolvabilityTransferReport {
  DerivedSeries plain;
  DerivedSeries twisted;
  bool termwise_transfer = true;   // twisted^(k) == alpha^k(plain^(k)) for all k
  bool verdicts_match = true;
};
SolvabilityTransferReport solvability_transfer_check(const HomAlgebra& j, const Mat& alpha);

// ---------------------------------------------------------------------------
// Trace form, radical, semisimple decomposition (plain algebras over Q)
// ---------------------------------------------------------------------------

// Gram matrix G(i,j) = trace(L_{mu(e_i, e_j)}). Characteristic zero only.
Mat trace_form_gram(const HomAlgebra& j);
// Kernel of the trace form; zero iff semisimple (characteristic zero).
Subspace radical(const HomAlgebra& j);

struct DecompositionResult {
  std::vector<Subspace> ideals;  // pairwise annihilating, direct sum = V
  bool certified = false;
  // Filled by twist-orbit analysis: orbit_partition groups indices of
  // `ideals`; transitive means one orbit covering everything.
  std::vector<std::vector<int>> orbit_partition;
  bool transitive = false;
};

struct StructureOptions {
  std::uint64_t trial_limit = 64;
  std::uint64_t enumeration_budget = 1ull << 16;
};

// Splits a radical-free plain algebra over Q into minimal ideals by seeded
// random ideal closures and trace-orthogonal complements, then certifies the
// result (each piece an ideal, pairwise products zero, direct exhaustive
// sum). CertificationError marks an internal inconsistency and must never
// fire; RadicalNonzeroError when the precondition fails.
DecompositionResult decompose_semisimple(const HomAlgebra& j, std::uint64_t seed,
                                         const StructureOptions& opts = {});

// ---------------------------------------------------------------------------
// Simplicity / semisimplicity decisions
// ---------------------------------------------------------------------------

enum class SimpleVerdict { Simple, NotSimple, Unsupported };

struct SimplicityResult {
  SimpleVerdict verdict = SimpleVerdict::Unsupported;
  std::optional<Subspace> witness;  // proper nonzero twist-stable ideal
  std::string reason;
  // Orbit data when the structure path ran (field Q).
  std::optional<DecompositionResult> induced_decomposition;
};

// Decision procedure: kernel and surjectivity gates first; over Q the
// induced-algebra route (radical must vanish, minimal ideals must form one
// twist orbit, plus a randomized refutation sweep); over GF(p) within budget
// a direct exhaustive ideal enumeration; Unsupported otherwise.
SimplicityResult is_simple(const HomAlgebra& a, std::uint64_t seed = 0,
                           const StructureOptions& opts = {});

struct SemisimplicityResult {
  bool semisimple = false;
  std::string reason;  // when not semisimple
  std::vector<Subspace> summands;  // simple twist-stable ideals
  DecompositionResult induced;     // induced decomposition with orbit data
};

SemisimplicityResult is_semisimple(const HomAlgebra& a, std::uint64_t seed = 0,
                                   const StructureOptions& opts = {});

// ---------------------------------------------------------------------------
// Brute force oracle (small finite fields)
// ---------------------------------------------------------------------------

// Visits every subspace of F_p^n as a canonical RREF basis.
void enumerate_subspaces(const FieldDescriptor& f, Index n,
                         const std::function<void(const Subspace&)>& visit);
std::uint64_t count_points(const FieldDescriptor& f, Index n);  // p^n, saturating

// All twist-stable ideals by exhaustive subspace enumeration
// (BudgetExceededError when p^n exceeds the budget). Ground truth for tests.
std::vector<Subspace> brute_force_hom_ideals(const HomAlgebra& a,
                                             std::uint64_t budget = 1ull << 16);

// Restriction of the algebra to a product- and twist-closed subspace,
// expressed in the subspace's basis.
HomAlgebra restrict_to_subspace(const HomAlgebra& a, const Subspace& s);

}  // namespace homjordan
