#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freepi/algebra.hpp"
#include "freepi/exactla.hpp"
#include "freepi/freealg.hpp"
#include "freepi/random.hpp"

namespace freepi {

/// Largest total degree the identity machinery accepts by default. The
/// work grows like |d|!, so larger requests fail with DegreeCapExceeded.
inline constexpr unsigned kDefaultDegreeCap = 6;

/// Throws DegreeCapExceeded when |d| > cap.
void check_degree_cap(const MultiDegree& d, unsigned cap);

struct Witness {
  std::vector<Element> args;
  Element value;  // f(args), nonzero
};

/// Outcome of the randomized screen. A witness is always genuine; its
/// absence only means no witness was found.
struct RandomizedVerdict {
  std::optional<Witness> witness;
  bool probably_identity() const { return !witness.has_value(); }
};

/// Evaluates f at `trials` tuples whose coordinates are uniform integers in
/// [-3, 3].
RandomizedVerdict is_identity_randomized(const Polynomial& f, const StructureAlgebra& a,
                                         unsigned trials, std::uint64_t seed = 0);

/// Exact decision: every multihomogeneous component must vanish under
/// generic evaluation.
bool is_identity_exact(const Polynomial& f, const StructureAlgebra& a,
                       unsigned cap = kDefaultDegreeCap);

/// Multidegrees of the components of f that are not identities of A.
std::vector<MultiDegree> failing_components(const Polynomial& f, const StructureAlgebra& a,
                                            unsigned cap = kDefaultDegreeCap);

/// Full linearization of a multihomogeneous f: x_i of degree d_i becomes
/// d_i fresh variables and the part linear in every fresh variable is
/// kept. Copies of x_1 are numbered first, then copies of x_2, and so on,
/// giving variables 1..|d|. Throws NotMultihomogeneous.
Polynomial multilinearize(const Polynomial& f);

/// For a multilinear f: whether it vanishes on every tuple of basis
/// elements. Throws std::invalid_argument if f is not multilinear.
bool vanishes_on_basis_tuples(const Polynomial& f, const StructureAlgebra& a);

/// Independent identity test: multilinearize each component and evaluate
/// on all basis tuples.
bool is_identity_by_multilinearization(const Polynomial& f, const StructureAlgebra& a,
                                       unsigned cap = kDefaultDegreeCap);

/// dim (F<X>^(d) ∩ Id(A)) computed through multilinearization and basis
/// tuples rather than generic evaluation.
std::size_t identity_dimension_by_multilinearization(const StructureAlgebra& a,
                                                     const MultiDegree& d,
                                                     unsigned cap = kDefaultDegreeCap);

/// Basis of F<X>^(d) ∩ Id(A) in monomial coordinates.
struct IdentityComponentBasis {
  MultiDegree multidegree;
  std::vector<Monomial> monomials;
  Matrix basis;  // monomials.size() rows, one column per basis identity

  std::size_t dimension() const { return basis.cols(); }
  Polynomial polynomial(std::size_t column) const;
  std::vector<Polynomial> polynomials() const;
};

IdentityComponentBasis identity_component_basis(const StructureAlgebra& a, const MultiDegree& d,
                                                unsigned cap = kDefaultDegreeCap);

/// index is the least n with x1...xn an identity; nullopt means none up to
/// `bound`.
struct NilpotencyReport {
  std::optional<unsigned> index;
  unsigned bound = 0;
};

/// Tracks the powers A^k = span of all k-fold basis products; A^n = 0 is
/// exactly x1...xn vanishing on every basis tuple.
NilpotencyReport nilpotency_index(const StructureAlgebra& a, unsigned bound);

/// x1 x2 ... xn
Polynomial product_monomial(unsigned n);

struct TIdealSampleParams {
  unsigned summands = 2;
  /// Variables available to substituted polynomials and outer factors.
  unsigned num_vars = 3;
  unsigned subst_max_terms = 2;
  unsigned subst_max_degree = 2;
  /// Outer factors u, v in u * f(g) * v have length at most this; each is
  /// present with probability 1/2.
  unsigned outer_max_degree = 1;
  unsigned max_total_degree = kDefaultDegreeCap;
};

/// Random element sum_i c_i u_i f_i(g_1, ..., g_m) v_i of the T-ideal
/// generated by `generators`. Substitution degrees shrink as needed so the
/// result stays within max_total_degree.
Polynomial t_ideal_sample(std::span<const Polynomial> generators, Rng& rng,
                          const TIdealSampleParams& params = {});
Polynomial t_ideal_sample(std::span<const Polynomial> generators, std::uint64_t seed,
                          const TIdealSampleParams& params = {});

/// Nonzero evaluation of f, searched over random tuples with coordinates in
/// [-3, 3] and then [-1000, 1000]. nullopt when none is found.
std::optional<Witness> find_witness(const Polynomial& f, const StructureAlgebra& a,
                                    std::uint64_t seed = 0, unsigned trials = 200);

}  // namespace freepi
