#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homjordan/algebra.hpp"
#include "homjordan/structure.hpp"

namespace homjordan {

// ---------------------------------------------------------------------------
// Representations. Only left actions are stored; the right action is the
// left action read through the swap, which builds the first bimodule axiom
// into the data. lambda[i] is the matrix of w -> e_i . w on the module
// space, extended linearly to arbitrary algebra elements.
// ---------------------------------------------------------------------------

struct BimoduleRep {
  HomAlgebra algebra;
  Index m = 0;              // module dimension
  Mat alpha_w;              // m x m structure map of the module space
  std::vector<Mat> lambda;  // one m x m action matrix per algebra basis index
};

struct JordanModuleRep {
  HomAlgebra algebra;  // plain (jordan_mode)
  Index m = 0;
  std::vector<Mat> lambda_prime;
  std::optional<Mat> alpha_w;  // carried through transports when available
};

BimoduleRep make_bimodule(HomAlgebra algebra, Mat alpha_w, std::vector<Mat> lambda);
JordanModuleRep make_jordan_module(HomAlgebra algebra, std::vector<Mat> lambda_prime,
                                   std::optional<Mat> alpha_w = std::nullopt);

// z . w for an algebra coordinate vector z and module vector w.
Vec act(const std::vector<Mat>& lambda, const Vec& z, const Vec& w);

// The two twisted compatibility conditions, checked exactly on all basis
// quadruples (they are multilinear, so this decides them). Witnesses carry
// (a, b, c, w) and both sides.
CheckResult check_bimodule_cyclic(const BimoduleRep& r);       // condition on cyclic sums
CheckResult check_bimodule_associator(const BimoduleRep& r);   // mixed condition
VerificationReport check_bimodule(const BimoduleRep& r);

// Both sides of each condition at a concrete point, for re-validating
// reported witnesses. a, b, c are algebra coordinates, w module coordinates.
std::pair<Vec, Vec> bimodule_cyclic_sides(const BimoduleRep& r, const Vec& a, const Vec& b,
                                          const Vec& c, const Vec& w);
std::pair<Vec, Vec> bimodule_associator_sides(const BimoduleRep& r, const Vec& a, const Vec& b,
                                              const Vec& c, const Vec& w);

// The algebra acting on itself: lambda[i] = L_{e_i}, alpha_w = alpha.
BimoduleRep regular_bimodule(const HomAlgebra& a);

// alpha_w(w . a) = alpha_w(w) . alpha(a), as matrix identities per basis a.
CheckResult check_equivariance(const BimoduleRep& r);
CheckResult check_equivariance(const std::vector<Mat>& lambda, const Mat& alpha_w,
                               const Mat& alpha, const FieldDescriptor& f);

// Plain module axioms for the two compositions (multilinear; basis
// quadruples decide them). The triple product a o c o b associates left.
VerificationReport check_jordan_module(const JordanModuleRep& r);

// Transport a bimodule with invertible, equivariant alpha_w to a module of
// the induced plain algebra: w .' a = alpha_w^{-1}(w . a). The output is
// certified against the plain module axioms.
JordanModuleRep bimodule_to_module(const BimoduleRep& r);

// Reverse transport: a module of a plain algebra plus a compatible alpha_w
// gives a bimodule of the twist of that algebra by alpha, with action
// a . w = alpha_w(a .' w). Certified against the bimodule axioms.
BimoduleRep module_to_bimodule(const JordanModuleRep& r, const Mat& alpha_w, const Mat& alpha);

// ---------------------------------------------------------------------------
// Submodules and irreducibility
// ---------------------------------------------------------------------------

Subspace submodule_closure(const BimoduleRep& r, const std::vector<Vec>& generators);
bool is_submodule(const BimoduleRep& r, const Subspace& u);

enum class Irreducibility { Irreducible, Reducible, ProbablyIrreducible };

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::ProbablyIrreducible;
  std::optional<Subspace> witness;  // proper nonzero submodule
  bool exhaustive = false;          // definite (enumerated) answer
};

// Exhaustive over small finite fields (p^m within budget); over Q, random
// closures give Reducible with witness or ProbablyIrreducible (one-sided),
// except m == 1 which is definite.
IrreducibilityResult is_irreducible(const BimoduleRep& r, std::uint64_t seed = 0,
                                    const StructureOptions& opts = {});
// Same question for a plain module (closure under the actions only).
IrreducibilityResult is_module_irreducible(const JordanModuleRep& r, std::uint64_t seed = 0,
                                           const StructureOptions& opts = {});

// ---------------------------------------------------------------------------
// Kernel / image of the module structure map
// ---------------------------------------------------------------------------

// For an equivariant bimodule: Ker(alpha_w) and Im(alpha_w) are submodules,
// and alpha_w induces a bijection W/Ker -> Im interwining the structure
// maps; the action intertwining is twisted by alpha (the map sends the class
// of a.w to alpha(a).alpha_w(w)). All three facts are verified and reported.
struct KernelImageReport {
  Subspace ker, im;
  bool ker_is_submodule = false;
  bool im_is_submodule = false;
  Mat induced_map;  // (W/Ker) -> Im in the quotient/image bases
  bool bijective = false;
  bool intertwines_actions = false;  // twisted by alpha, see above
  bool intertwines_alpha_w = false;
};
KernelImageReport kernel_image_analysis(const BimoduleRep& r);

// ---------------------------------------------------------------------------
// Irreducibility transfer for bimodules over simple algebras
// ---------------------------------------------------------------------------

struct IrreducibilityTransferReport {
  IrreducibilityResult bimodule;
  std::optional<IrreducibilityResult> module;  // when alpha_w is invertible
  bool alpha_w_invertible = false;
  // module irreducible (definite) must force bimodule irreducible.
  bool transfer_consistent = true;
  // bimodule irreducible (definite) must force alpha_w invertible.
  bool invertibility_consistent = true;
  std::string notes;
};
IrreducibilityTransferReport irreducibility_transfer_check(const BimoduleRep& r,
                                                           std::uint64_t seed = 0,
                                                           const StructureOptions& opts = {});

}  // namespace homjordan
