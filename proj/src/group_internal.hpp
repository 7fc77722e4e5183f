#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "agroup/group.hpp"

namespace agroup::detail {

inline constexpr ElementId kNoElement = std::numeric_limits<ElementId>::max();

class Composer {
 public:
  virtual ~Composer() = default;
  virtual ElementId compose(ElementId a, ElementId b) const = 0;
  virtual ElementId invert(ElementId a) const = 0;
};

struct GroupData {
  std::size_t order = 0;
  std::vector<ElementId> generators;
  std::string name;
  GroupOrigin origin = GroupOrigin::Construction;
  std::unique_ptr<Composer> composer;
  std::vector<ElementId> cayley;
  std::vector<ElementId> inverse;

  std::shared_ptr<const ConstructionNode> node;
  std::vector<std::uint32_t> code_of_id;
  std::vector<ElementId> id_of_code;

  std::optional<FiniteGroup> parent;
  std::vector<ElementId> to_parent;
  std::vector<ElementId> from_parent;

  mutable std::once_flag orders_once;
  mutable std::vector<std::uint32_t> orders;

  /// Fills the inverse table (and the Cayley table for small orders) and wraps.
  static FiniteGroup finish(std::shared_ptr<GroupData> data);
  static const GroupData& of(const FiniteGroup& g) { return *g.impl_; }
};

/// Quotient whose ids are cosets ordered by their minimal parent id.
FiniteGroup make_quotient(const FiniteGroup& parent, std::vector<ElementId> coset_of,
                          std::vector<ElementId> representatives,
                          std::vector<ElementId> generators, std::string name);

/// Re-indexes a subgroup (sorted parent ids, containing 0) as a group.
FiniteGroup make_view(const FiniteGroup& parent, std::vector<ElementId> sorted_ids,
                      const std::vector<ElementId>& parent_generators, std::string name);

/// Breadth-first enumeration from generators given as tuple codes of the tree.
FiniteGroup enumerate_codes(std::shared_ptr<const ConstructionNode> tree,
                            const std::vector<std::uint32_t>& gen_codes, const Limits& limits,
                            std::string name);

}  // namespace agroup::detail
