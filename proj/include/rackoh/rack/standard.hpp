#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rackoh/cochain/coeff_module.hpp"
#include "rackoh/rack/rack_table.hpp"
#include "rackoh/rack/table_group.hpp"

namespace rackoh {

/// x |> y = y.
RackTable make_trivial(std::size_t n);
/// x |> y = 2x - y mod n.
RackTable make_dihedral(std::size_t n);
/// x |> y = y + 1 mod n.
RackTable make_cyclic(std::size_t n);
/// x |> y = x y x^{-1} on a conjugation-invariant subset of the group (the whole
/// group when `subset` is empty). Rack element i is the i-th listed group
/// element. Throws InputError unless g S g^{-1} = S for every group element g.
RackTable make_conjugation(const TableGroup& group, const std::vector<std::size_t>& subset = {});

enum class StandardKind { Trivial, Dihedral, Cyclic, Conjugation };

struct StandardParams {
  std::size_t n = 0;                   // trivial, dihedral, cyclic
  std::optional<TableGroup> group;     // conjugation
  std::vector<std::size_t> subset;     // conjugation, optional
};

RackTable make_standard(StandardKind kind, const StandardParams& params);

/// X x N with (x,n) |> (y,m) = (x|>y, n(1 - (x|>y)^{-1}) + m x^{-1}) for a
/// module N = F_p^k. The pair (x, n) has index x * p^k + sum_i n_i p^{k-1-i}.
/// Throws PreconditionError unless the module ring is a prime field, and
/// ResourceError when |X| p^k exceeds `max_size`.
RackTable make_semidirect(const RackTable& rack, const CoeffModule& module, std::size_t max_size = 1 << 12);

/// Index of (x, n) in make_semidirect's output.
std::size_t semidirect_index(const CoeffModule& module, Element x, const std::vector<std::uint64_t>& n);

}  // namespace rackoh
