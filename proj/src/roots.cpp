#include "mdcalc/errors.hpp"
#include "mdcalc/operator.hpp"
#include "mdcalc/star.hpp"

namespace mdcalc {

namespace {

void require_unipotent(const Operator& p, const char* what) {
  Order o = order(p);
  if (!o.finite() || o.value != 0) {
    throw Error(ErrorKind::BadPrincipalSymbol, std::string(what) + " needs an order-0 operator");
  }
  if (!(p.component(0) == HomogeneousSymbol::constant(p.nvars(), Scalar(1)))) {
    throw Error(ErrorKind::BadPrincipalSymbol,
                std::string(what) + " needs sigma_0 = 1, got " + p.component(0).to_string());
  }
}

void require_floor(const Operator& p, int target_floor) {
  if (p.floor() && *p.floor() > target_floor) {
    throw Error(ErrorKind::InsufficientFloor, "input reliable only down to " +
                                                  std::to_string(*p.floor()) + ", asked for " +
                                                  std::to_string(target_floor));
  }
}

}  // namespace

Operator self_adjoint_sqrt(const Operator& p, int target_floor) {
  require_unipotent(p, "square root");
  require_floor(p, target_floor);
  const Operator target = p.trimmed().truncated(target_floor);
  if (!agree_to(adjoint(target), target, target_floor)) {
    throw Error(ErrorKind::NotSelfAdjoint, "operator is not self-adjoint to degree " +
                                               std::to_string(target_floor));
  }
  // Q <- Q - (1/4)(Q^{-1} E + (Q^{-1} E)*), E = Q^2 - P. Each step keeps Q
  // self-adjoint and lowers the order of E.
  const Scalar quarter = -Scalar::rational(1, 4);
  Operator q = Operator::one(p.context()).truncated(target_floor);
  for (int round = 0; round <= -target_floor + 2; ++round) {
    Operator error = (compose(q, q) - target).truncated(target_floor);
    if (error.components().empty()) return q;
    Operator x = compose(invert(q, target_floor), error).truncated(target_floor);
    q = (q + (x + adjoint(x)) * quarter).truncated(target_floor);
  }
  throw Error(ErrorKind::NotSelfAdjoint, "square-root iteration failed to converge");
}

Operator unitarize(const Operator& p0, int target_floor) {
  require_unipotent(p0, "unitarize");
  require_floor(p0, target_floor);
  const Operator lead = p0.trimmed().truncated(target_floor);
  const Operator gram = compose(lead, adjoint(lead)).truncated(target_floor);
  const Operator root = self_adjoint_sqrt(gram, target_floor);
  return compose(invert(root, target_floor), lead).truncated(target_floor);
}

}  // namespace mdcalc
