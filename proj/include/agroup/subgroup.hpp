#pragma once

#include <span>
#include <vector>

#include "agroup/bitset.hpp"
#include "agroup/group.hpp"

namespace agroup {

/// A subgroup of an ambient FiniteGroup: sorted element ids, a generating list and a
/// membership mask. Built by the algorithms in subgroup_algorithms.hpp.
class Subgroup {
 public:
  /// `sorted_elements` must be closed under the group law and contain the identity;
  /// verify_subgroup() checks this.
  Subgroup(FiniteGroup group, std::vector<ElementId> sorted_elements,
           std::vector<ElementId> generators);

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  const Bitset& members() const { return members_; }
  bool contains(ElementId id) const { return members_.test(id); }

  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == group_.order(); }
  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& l, const Subgroup& r) {
    return l.group_.same_as(r.group_) && l.members_ == r.members_;
  }

 private:
  FiniteGroup group_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
  Bitset members_;
};

/// Throws Error(UnknownElement) unless the subgroup contains the identity, is closed under
/// products with its generators and under inverses, its generators generate it, and its
/// size divides the ambient order.
void verify_subgroup(const Subgroup& s);

}  // namespace agroup
