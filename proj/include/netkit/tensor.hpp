#ifndef NETKIT_TENSOR_HPP
#define NETKIT_TENSOR_HPP

#include "netkit/algebra.hpp"

#include <atomic>
#include <span>
#include <vector>

namespace netkit {

/// Candidate action rho: g -> gl(h), one dim(h) x dim(h) matrix per basis
/// vector of g. Only shapes are validated here; see checkCoherentAction.
class ActionMap {
public:
  ActionMap() = default;
  ActionMap(AlgebraSC source, AlgebraSC target, std::vector<Matrix> rho);

  /// The acting Lie algebra g.
  const AlgebraSC& source() const { return source_; }
  /// The Lie algebra h being acted on.
  const AlgebraSC& target() const { return target_; }
  const std::vector<Matrix>& rho() const { return rho_; }
  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  Matrix rho(std::span<const Rational> x) const;

private:
  AlgebraSC source_;
  AlgebraSC target_;
  std::vector<Matrix> rho_;
};

/// The adjoint action of a Lie algebra on itself.
ActionMap adjointAction(const AlgebraSC& g);

/// Candidate tensor T: h -> g as a dim(g) x dim(h) matrix whose column j is
/// T e_j. The embedding-tensor verdict is computed at most once and cached.
class TensorMap {
public:
  TensorMap() = default;
  TensorMap(ActionMap action, Matrix matrix);
  TensorMap(const TensorMap& o) : action_(o.action_), matrix_(o.matrix_), verified_(o.verified_.load()) {}
  TensorMap& operator=(const TensorMap& o) {
    action_ = o.action_;
    matrix_ = o.matrix_;
    verified_.store(o.verified_.load());
    return *this;
  }

  const ActionMap& action() const { return action_; }
  const Matrix& matrix() const { return matrix_; }
  const AlgebraSC& g() const { return action_.source(); }
  const AlgebraSC& h() const { return action_.target(); }

  Vector apply(std::span<const Rational> u) const { return matrix_.apply(u); }
  Vector image(std::size_t j) const { return matrix_.column(j); }

  /// Cached result of checkNET(*this).passed().
  bool isEmbeddingTensor() const;
  /// Throws NotAnEmbeddingTensor unless isEmbeddingTensor().
  void requireEmbeddingTensor(const char* operation) const;

private:
  ActionMap action_;
  Matrix matrix_;
  // -1 unknown, 0 no, 1 yes. Racing writers store the same value.
  mutable std::atomic<signed char> verified_{-1};
};

/// rho(e_i) is a derivation of h; rho is a Lie homomorphism into gl(h);
/// coherence [rho(x)u, v]_h = 0.
Report checkCoherentAction(const ActionMap& a);

/// Residual [Te_i, Te_j]_g - T(rho(Te_i)e_j + [e_i, e_j]_h) on every ordered
/// basis pair; the report lists all nonzero residuals.
Report checkNET(const TensorMap& t);

/// (phiG, phiH) as a homomorphism from tSource (T') to tTarget (T):
/// both Lie endomorphisms, T phiH = phiG T', phiH rho(x)u = rho(phiG x) phiH u.
Report checkNETHomomorphism(const TensorMap& tTarget, const TensorMap& tSource, const Matrix& phiG,
                            const Matrix& phiH);

/// The Leibniz bracket [x+u, y+v] = [x,y]_g + rho(x)v + [u,v]_h on g (+) h,
/// g basis first.
AlgebraSC hemisemidirect(const ActionMap& a);

/// Whether the graph {Tu + u} is a Leibniz subalgebra of the hemisemidirect
/// product.
Report graphSubalgebraCheck(const TensorMap& t);

/// [u,v]_T = rho(Tu)v + [u,v]_h on h. Throws NotAnEmbeddingTensor.
AlgebraSC descendent(const TensorMap& t);

/// T = pr : Der'(h) (+) h -> Der'(h) with rho(A)(B + v) = Av, where Der'(h) is
/// the coherent derivation algebra on its echelon basis.
TensorMap projectionNET(const AlgebraSC& h);

} // namespace netkit

#endif
