#ifndef NETKIT_GRADED_HPP
#define NETKIT_GRADED_HPP

#include "netkit/multimap.hpp"
#include "netkit/tensor.hpp"

namespace netkit {

/// Largest arity any graded operation will produce unless told otherwise.
/// Dense storage grows as dim^arity.
inline constexpr std::size_t kDefaultArityCap = 4;

/// P o_bar Q = sum_k P o_k Q for P, Q in Hom((x)^{*} V, V).
MultiMap circ(const MultiMap& p, const MultiMap& q, std::size_t arityCap = kDefaultArityCap);

/// [P, Q]_B = P o_bar Q - (-1)^{pq} Q o_bar P, degrees p = arity(P) - 1,
/// q = arity(Q) - 1.
MultiMap balavoine(const MultiMap& p, const MultiMap& q, std::size_t arityCap = kDefaultArityCap);

/// [omega, omega]_B = 0, i.e. omega is a Leibniz product.
Report mcLeibnizCheck(const MultiMap& omega);

/// The hemisemidirect structure mu_g (+) rho and the embedded bracket mu_h,
/// both as arity-2 maps on g (+) h (g basis first).
struct GradedContext {
  ActionMap action;
  MultiMap muG;
  MultiMap muH;

  std::size_t gDim() const { return action.source().dim(); }
  std::size_t hDim() const { return action.target().dim(); }
};

GradedContext makeGradedContext(const ActionMap& action);

/// [mu_g(+)rho, mu_g(+)rho]_B = 0, [mu_h, mu_h]_B = 0, [mu_g(+)rho, mu_h]_B = 0.
Report checkGradedContext(const GradedContext& ctx);

/// Zero-extension of theta : (x)^p h -> g to (x)^p (g (+) h) -> g (+) h.
MultiMap embedHG(const MultiMap& theta, std::size_t gDim, std::size_t hDim);
/// Restriction of F on g (+) h to h-arguments and g-values.
MultiMap restrictHG(const MultiMap& f, std::size_t gDim, std::size_t hDim);

/// (d_M f)(v_1..v_{n+1}) = sum_{i<j} (-1)^{n-1+i} f(.., ^v_i, .., [v_i, v_j]_h, ..),
/// the bracket taking the place of v_j.
MultiMap dM(const MultiMap& f, const ActionMap& action, std::size_t arityCap = kDefaultArityCap);

/// Graded bracket on Hom((x)^* h, g) by direct evaluation of its three
/// shuffle sums.
MultiMap derivedBracket(const MultiMap& theta, const MultiMap& phi, const ActionMap& action,
                        std::size_t arityCap = kDefaultArityCap);

/// The same bracket as (-1)^{m-1} [[mu_g(+)rho, theta~]_B, phi~]_B computed on
/// g (+) h, returned unrestricted.
MultiMap derivedBracketViaBalavoine(const MultiMap& theta, const MultiMap& phi, const GradedContext& ctx,
                                    std::size_t arityCap = kDefaultArityCap);

/// d_M T + 1/2 [[T, T]] as an arity-2 map h (x) h -> g.
MultiMap mcNETResidual(const TensorMap& t);
/// Passes iff mcNETResidual vanishes; one violation per nonzero basis pair.
Report mcNETCheck(const TensorMap& t);

/// d_T f = d_M f + [[T, f]]. Throws NotAnEmbeddingTensor.
MultiMap dT(const TensorMap& t, const MultiMap& f, std::size_t arityCap = kDefaultArityCap);

/// d_T T' + 1/2 [[T', T']] = 0. Throws NotAnEmbeddingTensor for the base.
Report mcDeformCheck(const TensorMap& t, const Matrix& tPrime);

} // namespace netkit

#endif
