#include "rackoh/cochain/coeff_module.hpp"

#include "rackoh/errors.hpp"

namespace rackoh {

CoeffModule::CoeffModule(Ring ring, std::size_t dim, std::vector<DenseMatrix> action, ModuleKind kind)
    : ring_(ring), dim_(dim), action_(std::move(action)), kind_(kind) {
  inverse_.reserve(action_.size());
  for (std::size_t x = 0; x < action_.size(); ++x) {
    try {
      inverse_.push_back(action_[x].inverse());
    } catch (const PreconditionError&) {
      throw PreconditionError("action matrix of rack element " + std::to_string(x) + " is not invertible over " +
                              ring_.name());
    }
  }
}

CoeffModule CoeffModule::checked(const RackTable& rack, Ring ring, std::size_t dim, std::vector<DenseMatrix> action,
                                 ModuleKind kind) {
  const std::size_t n = rack.size();
  if (action.size() != n) {
    throw InputError("module needs one action matrix per rack element: got " + std::to_string(action.size()) +
                     ", expected " + std::to_string(n));
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto& a = action[x];
    if (a.rows() != dim || a.cols() != dim) {
      throw InputError("action matrix of rack element " + std::to_string(x) + " is not " + std::to_string(dim) + "x" +
                       std::to_string(dim));
    }
    if (a.ring() != ring) throw InputError("action matrix ring differs from the module ring");
  }
  CoeffModule out(ring, dim, std::move(action), kind);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (out.action_[x] * out.action_[y] != out.action_[rack.op(x, y)] * out.action_[x]) {
        throw InputError("module action violates A_x A_y = A_{x|>y} A_x at (x,y) = (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
      }
    }
  }
  return out;
}

CoeffModule CoeffModule::custom(const RackTable& rack, Ring ring, std::vector<DenseMatrix> action) {
  const std::size_t dim = action.empty() ? 0 : action.front().rows();
  return checked(rack, ring, dim, std::move(action), ModuleKind::Custom);
}

CoeffModule CoeffModule::trivial(const RackTable& rack, Ring ring, std::size_t dim) {
  return CoeffModule(ring, dim, std::vector<DenseMatrix>(rack.size(), DenseMatrix::identity(ring, dim)),
                     ModuleKind::Trivial);
}

CoeffModule CoeffModule::jordan(const RackTable& rack, Ring ring, const Rational& t, std::size_t k) {
  if (k == 0) throw InputError("Jordan block size must be positive");
  DenseMatrix block(ring, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    block.set(i, i, t);
    if (i > 0) block.set(i, i - 1, 1);
  }
  CoeffModule out(ring, k, std::vector<DenseMatrix>(rack.size(), block), ModuleKind::Jordan);
  out.eigenvalue_ = ring.reduce(t);
  return out;
}

CoeffModule CoeffModule::same_operator(const RackTable& rack, DenseMatrix a) {
  if (a.rows() != a.cols()) throw InputError("operator must be square");
  const Ring ring = a.ring();
  const std::size_t dim = a.rows();
  // A single operator satisfies A A = A A, so only invertibility needs checking.
  return CoeffModule(ring, dim, std::vector<DenseMatrix>(rack.size(), std::move(a)), ModuleKind::SameOperator);
}

CoeffModule CoeffModule::functions_on_rack(const RackTable& rack, Ring ring) {
  const std::size_t n = rack.size();
  std::vector<DenseMatrix> action;
  action.reserve(n);
  for (Element y = 0; y < n; ++y) {
    DenseMatrix a(ring, n, n);
    // row z is the image of delta_z, which is delta at the preimage of z under phi_y
    for (Element x = 0; x < n; ++x) a.set(rack.op(y, x), x, 1);
    action.push_back(std::move(a));
  }
  return checked(rack, ring, n, std::move(action), ModuleKind::FunctionsOnX);
}

CoeffModule CoeffModule::tensor(const CoeffModule& m, const CoeffModule& n) {
  if (m.ring() != n.ring()) throw InputError("tensor factors must share a ring");
  if (m.rack_size() != n.rack_size()) throw InputError("tensor factors belong to racks of different sizes");
  const std::size_t km = m.dim();
  const std::size_t kn = n.dim();
  std::vector<DenseMatrix> action;
  for (std::size_t x = 0; x < m.rack_size(); ++x) {
    DenseMatrix a(m.ring(), km * kn, km * kn);
    const auto& am = m.action(static_cast<Element>(x));
    const auto& an = n.action(static_cast<Element>(x));
    for (std::size_t i = 0; i < km; ++i) {
      for (std::size_t j = 0; j < km; ++j) {
        if (am(i, j) == 0) continue;
        for (std::size_t p = 0; p < kn; ++p) {
          for (std::size_t q = 0; q < kn; ++q) a.set(i * kn + p, j * kn + q, am(i, j) * an(p, q));
        }
      }
    }
    action.push_back(std::move(a));
  }
  // Compatibility is inherited from both factors.
  const ModuleKind kind = m.is_trivial() && n.is_trivial() ? ModuleKind::Trivial : ModuleKind::Tensor;
  return CoeffModule(m.ring(), km * kn, std::move(action), kind);
}

bool CoeffModule::is_trivial() const {
  for (const auto& a : action_) {
    if (!a.is_identity()) return false;
  }
  return true;
}

CoeffModule CoeffModule::in_ring(const RackTable& rack, Ring ring) const {
  std::vector<DenseMatrix> action;
  action.reserve(action_.size());
  for (const auto& a : action_) {
    DenseMatrix b(ring, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) b.set(i, j, a(i, j));
    }
    action.push_back(std::move(b));
  }
  CoeffModule out = checked(rack, ring, dim_, std::move(action), kind_);
  if (eigenvalue_) out.eigenvalue_ = ring.reduce(*eigenvalue_);
  return out;
}

std::string CoeffModule::describe() const {
  const std::string over = ring_.name();
  switch (kind_) {
    case ModuleKind::Trivial:
      return "trivial " + over + "^" + std::to_string(dim_);
    case ModuleKind::Jordan:
      return "jordan(t=" + eigenvalue_->get_str() + ",k=" + std::to_string(dim_) + ") over " + over;
    case ModuleKind::SameOperator:
      return "same operator on " + over + "^" + std::to_string(dim_);
    case ModuleKind::FunctionsOnX:
      return "Fun(X," + over + ")";
    case ModuleKind::Tensor:
      return "tensor product over " + over + " of rank " + std::to_string(dim_);
    case ModuleKind::Custom:
      break;
  }
  return "custom " + over + "^" + std::to_string(dim_);
}

}  // namespace rackoh
