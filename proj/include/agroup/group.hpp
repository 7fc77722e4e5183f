#pragma once

// Black-box finite groups with dense element ids.
//
// A FiniteGroup is an immutable, cheaply copyable handle. Element ids run
// 0..order()-1 with id 0 the identity. Groups come from three sources:
// enumeration of a construction tree, quotients by normal subgroups, and
// subgroups re-indexed as groups in their own right.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "agroup/error.hpp"
#include "agroup/finite_field.hpp"

namespace agroup {

using ElementId = std::uint32_t;

namespace detail {
struct GroupData;
}

/// Tagged tree mirroring a group's construction tree.
class GroupElement {
 public:
  struct CyclicLeaf {
    std::uint64_t residue;
    std::uint64_t modulus;
  };
  struct FieldLeaf {
    FieldElement value;
  };
  struct Pair {
    std::shared_ptr<const GroupElement> left;
    std::shared_ptr<const GroupElement> right;
  };

  static GroupElement cyclic(std::uint64_t residue, std::uint64_t modulus);
  static GroupElement field(FieldElement value);
  static GroupElement pair(GroupElement left, GroupElement right);

  bool is_cyclic() const { return std::holds_alternative<CyclicLeaf>(node_); }
  bool is_field() const { return std::holds_alternative<FieldLeaf>(node_); }
  bool is_pair() const { return std::holds_alternative<Pair>(node_); }

  const CyclicLeaf& as_cyclic() const;
  const FieldLeaf& as_field() const;
  const GroupElement& left() const;
  const GroupElement& right() const;

  std::string to_string() const;

  friend bool operator==(const GroupElement& l, const GroupElement& r);

 private:
  explicit GroupElement(std::variant<CyclicLeaf, FieldLeaf, Pair> node) : node_(std::move(node)) {}
  std::variant<CyclicLeaf, FieldLeaf, Pair> node_;
};

struct ConstructionNode;
class Action;

enum class GroupOrigin { Construction, Quotient, SubgroupView };

class FiniteGroup {
 public:
  /// Groups at or below this order keep a full Cayley table.
  static constexpr std::size_t kCayleyCacheOrder = 1024;

  std::size_t order() const;
  static constexpr ElementId identity() { return 0; }

  ElementId compose(ElementId a, ElementId b) const;
  ElementId invert(ElementId a) const;
  ElementId power(ElementId a, std::int64_t k) const;
  /// g x g^-1
  ElementId conjugate(ElementId g, ElementId x) const;
  /// g^-1 h^-1 g h
  ElementId commutator(ElementId g, ElementId h) const;

  const std::vector<ElementId>& generators() const;
  /// Least k >= 1 with a^k = 1.
  std::uint32_t element_order(ElementId a) const;
  /// Element orders for every id, computed once on first use.
  const std::vector<std::uint32_t>& element_orders() const;
  bool is_abelian() const;

  const std::string& name() const;
  GroupOrigin origin() const;

  /// Construction tree, or nullptr for quotients and subgroup views.
  const ConstructionNode* construction() const;
  std::shared_ptr<const ConstructionNode> construction_ptr() const;
  GroupElement element(ElementId id) const;
  /// Throws Error(UnknownElement) when the element does not belong to the group.
  ElementId id_of(const GroupElement& e) const;

  /// Parent group of a quotient or subgroup view.
  const FiniteGroup& parent() const;
  /// View: the parent id. Quotient: the canonical (minimal-id) coset representative.
  ElementId to_parent(ElementId id) const;
  /// Quotient: the coset containing a parent element. View: the local id (throws if absent).
  ElementId from_parent(ElementId parent_id) const;

  bool same_as(const FiniteGroup& other) const { return impl_ == other.impl_; }

 private:
  friend struct detail::GroupData;
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::GroupData> impl_;
};

struct CyclicNode {
  std::uint64_t n;
};
struct FieldAddNode {
  FieldSpec field;
};
struct DirectNode {
  FiniteGroup left;
  FiniteGroup right;
};
struct SemidirectNode {
  FiniteGroup kernel;
  FiniteGroup quotient;
  std::shared_ptr<const Action> action;
};

/// Node of a construction tree. Children of product nodes are enumerated groups.
struct ConstructionNode {
  std::variant<CyclicNode, FieldAddNode, DirectNode, SemidirectNode> kind;

  /// Product of leaf orders.
  std::uint64_t predicted_order() const;
  std::string describe() const;
};

/// Action of a group Gamma on a kernel group H by automorphisms, tabulated over ids.
class Action {
 public:
  using Fn = std::function<ElementId(ElementId gamma, ElementId h)>;

  static Action tabulate(const FiniteGroup& kernel, const FiniteGroup& acting, const Fn& fn);

  ElementId apply(ElementId gamma, ElementId h) const {
    return table_[static_cast<std::size_t>(gamma) * kernel_order_ + h];
  }
  std::size_t kernel_order() const { return kernel_order_; }
  std::size_t acting_order() const { return acting_order_; }

  /// Checks that each apply(gamma, .) is an automorphism and that gamma -> apply(gamma, .)
  /// is a homomorphism. Exhaustive over all elements when |Gamma| * |H| <= exhaustive_limit,
  /// otherwise over generator pairs. Throws Error(InvalidAction).
  void validate(const FiniteGroup& kernel, const FiniteGroup& acting,
                std::size_t exhaustive_limit = 1'000'000) const;

  bool is_trivial() const;

 private:
  std::size_t kernel_order_ = 0;
  std::size_t acting_order_ = 0;
  std::vector<ElementId> table_;
};

/// Breadth-first closure of a construction tree from generators (given in tree form).
/// Ids are discovery ranks; right multiplication by generators in list order.
FiniteGroup enumerate(std::shared_ptr<const ConstructionNode> tree,
                      const std::vector<GroupElement>& generators, const Limits& limits = {},
                      std::string name = {});

}  // namespace agroup
