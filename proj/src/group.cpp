#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "agroup/number_theory.hpp"
#include "group_internal.hpp"

namespace agroup {

using detail::GroupData;
using detail::kNoElement;

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::cyclic(std::uint64_t residue, std::uint64_t modulus) {
  return GroupElement(CyclicLeaf{residue, modulus});
}

GroupElement GroupElement::field(FieldElement value) {
  return GroupElement(FieldLeaf{std::move(value)});
}

GroupElement GroupElement::pair(GroupElement left, GroupElement right) {
  return GroupElement(Pair{std::make_shared<const GroupElement>(std::move(left)),
                           std::make_shared<const GroupElement>(std::move(right))});
}

const GroupElement::CyclicLeaf& GroupElement::as_cyclic() const {
  if (!is_cyclic()) throw Error(ErrorCode::UnknownElement, "element is not a cyclic leaf");
  return std::get<CyclicLeaf>(node_);
}

const GroupElement::FieldLeaf& GroupElement::as_field() const {
  if (!is_field()) throw Error(ErrorCode::UnknownElement, "element is not a field leaf");
  return std::get<FieldLeaf>(node_);
}

const GroupElement& GroupElement::left() const {
  if (!is_pair()) throw Error(ErrorCode::UnknownElement, "element is not a pair");
  return *std::get<Pair>(node_).left;
}

const GroupElement& GroupElement::right() const {
  if (!is_pair()) throw Error(ErrorCode::UnknownElement, "element is not a pair");
  return *std::get<Pair>(node_).right;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  if (is_cyclic()) {
    os << as_cyclic().residue;
  } else if (is_field()) {
    os << "[";
    const auto& c = as_field().value.coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
  } else {
    os << "(" << left().to_string() << ", " << right().to_string() << ")";
  }
  return os.str();
}

bool operator==(const GroupElement& l, const GroupElement& r) {
  if (l.node_.index() != r.node_.index()) return false;
  if (l.is_cyclic()) {
    return l.as_cyclic().residue == r.as_cyclic().residue &&
           l.as_cyclic().modulus == r.as_cyclic().modulus;
  }
  if (l.is_field()) return l.as_field().value == r.as_field().value;
  return l.left() == r.left() && l.right() == r.right();
}

// ---------------------------------------------------------------------------
// Construction tree

std::uint64_t ConstructionNode::predicted_order() const {
  return std::visit(
      [](const auto& n) -> std::uint64_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CyclicNode>) {
          return n.n;
        } else if constexpr (std::is_same_v<T, FieldAddNode>) {
          return n.field.size();
        } else if constexpr (std::is_same_v<T, DirectNode>) {
          return static_cast<std::uint64_t>(n.left.order()) * n.right.order();
        } else {
          return static_cast<std::uint64_t>(n.kernel.order()) * n.quotient.order();
        }
      },
      kind);
}

std::string ConstructionNode::describe() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CyclicNode>) {
          return "C" + std::to_string(n.n);
        } else if constexpr (std::is_same_v<T, FieldAddNode>) {
          return "F" + std::to_string(n.field.size()) + "+";
        } else if constexpr (std::is_same_v<T, DirectNode>) {
          return "(" + n.left.name() + " x " + n.right.name() + ")";
        } else {
          return "(" + n.kernel.name() + " : " + n.quotient.name() + ")";
        }
      },
      kind);
}

namespace {

std::uint32_t digit_add(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned digits) {
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < digits; ++i) {
    const std::uint32_t s = (a % p + b % p) % p;
    out += s * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

std::uint32_t digit_neg(std::uint32_t a, std::uint32_t p, unsigned digits) {
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < digits; ++i) {
    out += ((p - a % p) % p) * scale;
    scale *= p;
    a /= p;
  }
  return out;
}

/// Structural composition on tuple codes of one construction node.
class CodeOps {
 public:
  explicit CodeOps(const ConstructionNode& node) : node_(node) {}

  std::uint32_t compose(std::uint32_t a, std::uint32_t b) const {
    switch (node_.kind.index()) {
      case 0: {
        const auto n = std::get<CyclicNode>(node_.kind).n;
        return static_cast<std::uint32_t>((std::uint64_t{a} + b) % n);
      }
      case 1: {
        const auto& f = std::get<FieldAddNode>(node_.kind).field;
        return digit_add(a, b, f.characteristic(), f.degree());
      }
      case 2: {
        const auto& d = std::get<DirectNode>(node_.kind);
        const auto nr = static_cast<std::uint32_t>(d.right.order());
        const ElementId l = d.left.compose(a / nr, b / nr);
        const ElementId r = d.right.compose(a % nr, b % nr);
        return l * nr + r;
      }
      default: {
        const auto& s = std::get<SemidirectNode>(node_.kind);
        const auto nq = static_cast<std::uint32_t>(s.quotient.order());
        const ElementId k1 = a / nq, q1 = a % nq, k2 = b / nq, q2 = b % nq;
        const ElementId k = s.kernel.compose(k1, s.action->apply(q1, k2));
        const ElementId q = s.quotient.compose(q1, q2);
        return k * nq + q;
      }
    }
  }

  std::uint32_t invert(std::uint32_t a) const {
    switch (node_.kind.index()) {
      case 0: {
        const auto n = std::get<CyclicNode>(node_.kind).n;
        return static_cast<std::uint32_t>((n - a) % n);
      }
      case 1: {
        const auto& f = std::get<FieldAddNode>(node_.kind).field;
        return digit_neg(a, f.characteristic(), f.degree());
      }
      case 2: {
        const auto& d = std::get<DirectNode>(node_.kind);
        const auto nr = static_cast<std::uint32_t>(d.right.order());
        return d.left.invert(a / nr) * nr + d.right.invert(a % nr);
      }
      default: {
        const auto& s = std::get<SemidirectNode>(node_.kind);
        const auto nq = static_cast<std::uint32_t>(s.quotient.order());
        const ElementId q_inv = s.quotient.invert(a % nq);
        const ElementId k = s.action->apply(q_inv, s.kernel.invert(a / nq));
        return k * nq + q_inv;
      }
    }
  }

  GroupElement element(std::uint32_t code) const {
    switch (node_.kind.index()) {
      case 0: return GroupElement::cyclic(code, std::get<CyclicNode>(node_.kind).n);
      case 1: return GroupElement::field(std::get<FieldAddNode>(node_.kind).field.from_code(code));
      case 2: {
        const auto& d = std::get<DirectNode>(node_.kind);
        const auto nr = static_cast<std::uint32_t>(d.right.order());
        return GroupElement::pair(d.left.element(code / nr), d.right.element(code % nr));
      }
      default: {
        const auto& s = std::get<SemidirectNode>(node_.kind);
        const auto nq = static_cast<std::uint32_t>(s.quotient.order());
        return GroupElement::pair(s.kernel.element(code / nq), s.quotient.element(code % nq));
      }
    }
  }

  std::uint32_t code(const GroupElement& e) const {
    switch (node_.kind.index()) {
      case 0: {
        const auto n = std::get<CyclicNode>(node_.kind).n;
        const auto& leaf = e.as_cyclic();
        if (leaf.modulus != n || leaf.residue >= n) {
          throw Error(ErrorCode::UnknownElement, "residue does not belong to C" + std::to_string(n));
        }
        return static_cast<std::uint32_t>(leaf.residue);
      }
      case 1: {
        const auto& f = std::get<FieldAddNode>(node_.kind).field;
        try {
          return static_cast<std::uint32_t>(f.code(e.as_field().value));
        } catch (const Error&) {
          throw Error(ErrorCode::UnknownElement, "field element of the wrong shape");
        }
      }
      case 2: {
        const auto& d = std::get<DirectNode>(node_.kind);
        const auto nr = static_cast<std::uint32_t>(d.right.order());
        return d.left.id_of(e.left()) * nr + d.right.id_of(e.right());
      }
      default: {
        const auto& s = std::get<SemidirectNode>(node_.kind);
        const auto nq = static_cast<std::uint32_t>(s.quotient.order());
        return s.kernel.id_of(e.left()) * nq + s.quotient.id_of(e.right());
      }
    }
  }

 private:
  const ConstructionNode& node_;
};

class TreeComposer final : public detail::Composer {
 public:
  TreeComposer(const GroupData& data) : data_(data), ops_(*data.node) {}

  ElementId compose(ElementId a, ElementId b) const override {
    const auto c = ops_.compose(data_.code_of_id[a], data_.code_of_id[b]);
    return lookup(c);
  }

  ElementId invert(ElementId a) const override { return lookup(ops_.invert(data_.code_of_id[a])); }

 private:
  ElementId lookup(std::uint32_t code) const {
    const ElementId id = data_.id_of_code[code];
    if (id == kNoElement) throw Error(ErrorCode::UnknownElement, "composition left the table");
    return id;
  }

  const GroupData& data_;
  CodeOps ops_;
};

class QuotientComposer final : public detail::Composer {
 public:
  explicit QuotientComposer(const GroupData& data) : data_(data) {}

  ElementId compose(ElementId a, ElementId b) const override {
    const FiniteGroup& parent = *data_.parent;
    return data_.from_parent[parent.compose(data_.to_parent[a], data_.to_parent[b])];
  }

  ElementId invert(ElementId a) const override {
    return data_.from_parent[data_.parent->invert(data_.to_parent[a])];
  }

 private:
  const GroupData& data_;
};

class ViewComposer final : public detail::Composer {
 public:
  explicit ViewComposer(const GroupData& data) : data_(data) {}

  ElementId compose(ElementId a, ElementId b) const override {
    return local(data_.parent->compose(data_.to_parent[a], data_.to_parent[b]));
  }

  ElementId invert(ElementId a) const override {
    return local(data_.parent->invert(data_.to_parent[a]));
  }

 private:
  ElementId local(ElementId parent_id) const {
    const ElementId id = data_.from_parent[parent_id];
    if (id == kNoElement) throw Error(ErrorCode::UnknownElement, "product left the subgroup");
    return id;
  }

  const GroupData& data_;
};

}  // namespace

// ---------------------------------------------------------------------------
// GroupData

FiniteGroup GroupData::finish(std::shared_ptr<GroupData> data) {
  const std::size_t n = data->order;
  data->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->inverse[i] = data->composer->invert(static_cast<ElementId>(i));
  }
  if (n <= FiniteGroup::kCayleyCacheOrder) {
    data->cayley.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        data->cayley[i * n + j] =
            data->composer->compose(static_cast<ElementId>(i), static_cast<ElementId>(j));
      }
    }
  }
  return FiniteGroup(std::move(data));
}

namespace detail {

FiniteGroup make_quotient(const FiniteGroup& parent, std::vector<ElementId> coset_of,
                          std::vector<ElementId> representatives,
                          std::vector<ElementId> generators, std::string name) {
  auto data = std::make_shared<GroupData>();
  data->order = representatives.size();
  data->generators = std::move(generators);
  data->name = std::move(name);
  data->origin = GroupOrigin::Quotient;
  data->parent = parent;
  data->to_parent = std::move(representatives);
  data->from_parent = std::move(coset_of);
  data->composer = std::make_unique<QuotientComposer>(*data);
  return GroupData::finish(std::move(data));
}

FiniteGroup make_view(const FiniteGroup& parent, std::vector<ElementId> sorted_ids,
                      const std::vector<ElementId>& parent_generators, std::string name) {
  auto data = std::make_shared<GroupData>();
  data->order = sorted_ids.size();
  data->name = std::move(name);
  data->origin = GroupOrigin::SubgroupView;
  data->parent = parent;
  data->from_parent.assign(parent.order(), kNoElement);
  for (std::size_t i = 0; i < sorted_ids.size(); ++i) {
    data->from_parent[sorted_ids[i]] = static_cast<ElementId>(i);
  }
  for (ElementId g : parent_generators) data->generators.push_back(data->from_parent.at(g));
  data->to_parent = std::move(sorted_ids);
  data->composer = std::make_unique<ViewComposer>(*data);
  return GroupData::finish(std::move(data));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FiniteGroup

std::size_t FiniteGroup::order() const { return impl_->order; }

ElementId FiniteGroup::compose(ElementId a, ElementId b) const {
  const GroupData& d = *impl_;
  if (!d.cayley.empty()) return d.cayley[static_cast<std::size_t>(a) * d.order + b];
  return d.composer->compose(a, b);
}

ElementId FiniteGroup::invert(ElementId a) const { return impl_->inverse[a]; }

ElementId FiniteGroup::power(ElementId a, std::int64_t k) const {
  ElementId base = a;
  if (k < 0) {
    base = invert(a);
    k = -k;
  }
  ElementId result = identity();
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

ElementId FiniteGroup::conjugate(ElementId g, ElementId x) const {
  return compose(compose(g, x), invert(g));
}

ElementId FiniteGroup::commutator(ElementId g, ElementId h) const {
  return compose(compose(invert(g), invert(h)), compose(g, h));
}

const std::vector<ElementId>& FiniteGroup::generators() const { return impl_->generators; }

const std::vector<std::uint32_t>& FiniteGroup::element_orders() const {
  const GroupData& d = *impl_;
  std::call_once(d.orders_once, [&] {
    d.orders.assign(d.order, 0);
    for (std::size_t i = 0; i < d.order; ++i) {
      if (d.orders[i] != 0) continue;
      // walk the cyclic subgroup once and label every power x^j with ord(x)/gcd(j, ord(x))
      std::vector<ElementId> powers{identity()};
      ElementId x = static_cast<ElementId>(i);
      ElementId cur = x;
      while (cur != identity()) {
        powers.push_back(cur);
        cur = compose(cur, x);
      }
      const std::uint32_t n = static_cast<std::uint32_t>(powers.size());
      for (std::uint32_t j = 0; j < n; ++j) d.orders[powers[j]] = n / std::gcd(j, n);
    }
  });
  return d.orders;
}

std::uint32_t FiniteGroup::element_order(ElementId a) const { return element_orders()[a]; }

bool FiniteGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    }
  }
  return true;
}

const std::string& FiniteGroup::name() const { return impl_->name; }

GroupOrigin FiniteGroup::origin() const { return impl_->origin; }

const ConstructionNode* FiniteGroup::construction() const { return impl_->node.get(); }

std::shared_ptr<const ConstructionNode> FiniteGroup::construction_ptr() const {
  return impl_->node;
}

GroupElement FiniteGroup::element(ElementId id) const {
  const GroupData& d = *impl_;
  if (!d.node) throw Error(ErrorCode::UnknownElement, "group has no construction tree");
  if (id >= d.order) throw Error(ErrorCode::UnknownElement, "id out of range");
  return CodeOps(*d.node).element(d.code_of_id[id]);
}

ElementId FiniteGroup::id_of(const GroupElement& e) const {
  const GroupData& d = *impl_;
  if (!d.node) throw Error(ErrorCode::UnknownElement, "group has no construction tree");
  const std::uint32_t code = CodeOps(*d.node).code(e);
  if (code >= d.id_of_code.size() || d.id_of_code[code] == kNoElement) {
    throw Error(ErrorCode::UnknownElement, "element not in table");
  }
  return d.id_of_code[code];
}

const FiniteGroup& FiniteGroup::parent() const {
  if (!impl_->parent) throw Error(ErrorCode::UnknownElement, "group has no parent");
  return *impl_->parent;
}

ElementId FiniteGroup::to_parent(ElementId id) const {
  if (!impl_->parent) throw Error(ErrorCode::UnknownElement, "group has no parent");
  return impl_->to_parent.at(id);
}

ElementId FiniteGroup::from_parent(ElementId parent_id) const {
  if (!impl_->parent) throw Error(ErrorCode::UnknownElement, "group has no parent");
  const ElementId id = impl_->from_parent.at(parent_id);
  if (id == kNoElement) throw Error(ErrorCode::UnknownElement, "parent element not in subgroup");
  return id;
}

// ---------------------------------------------------------------------------
// Action

Action Action::tabulate(const FiniteGroup& kernel, const FiniteGroup& acting, const Fn& fn) {
  Action a;
  a.kernel_order_ = kernel.order();
  a.acting_order_ = acting.order();
  a.table_.resize(a.kernel_order_ * a.acting_order_);
  for (std::size_t g = 0; g < a.acting_order_; ++g) {
    for (std::size_t h = 0; h < a.kernel_order_; ++h) {
      const ElementId image = fn(static_cast<ElementId>(g), static_cast<ElementId>(h));
      if (image >= a.kernel_order_) throw Error(ErrorCode::InvalidAction, "image out of range");
      a.table_[g * a.kernel_order_ + h] = image;
    }
  }
  return a;
}

bool Action::is_trivial() const {
  for (std::size_t g = 0; g < acting_order_; ++g) {
    for (std::size_t h = 0; h < kernel_order_; ++h) {
      if (table_[g * kernel_order_ + h] != h) return false;
    }
  }
  return true;
}

void Action::validate(const FiniteGroup& kernel, const FiniteGroup& acting,
                      std::size_t exhaustive_limit) const {
  if (kernel.order() != kernel_order_ || acting.order() != acting_order_) {
    throw Error(ErrorCode::InvalidAction, "action tabulated for different groups");
  }
  const bool exhaustive = kernel_order_ * acting_order_ <= exhaustive_limit;

  std::vector<ElementId> gammas;
  std::vector<ElementId> hs;
  if (exhaustive) {
    for (std::size_t g = 0; g < acting_order_; ++g) gammas.push_back(static_cast<ElementId>(g));
    for (std::size_t h = 0; h < kernel_order_; ++h) hs.push_back(static_cast<ElementId>(h));
  } else {
    gammas = acting.generators();
    hs = kernel.generators();
    hs.push_back(FiniteGroup::identity());
  }

  for (ElementId h = 0; h < kernel_order_; ++h) {
    if (apply(FiniteGroup::identity(), h) != h) {
      throw Error(ErrorCode::InvalidAction, "identity does not act trivially");
    }
  }
  for (ElementId g : gammas) {
    if (exhaustive) {
      std::vector<bool> hit(kernel_order_, false);
      for (ElementId h : hs) {
        const ElementId img = apply(g, h);
        if (hit[img]) throw Error(ErrorCode::InvalidAction, "action is not bijective");
        hit[img] = true;
      }
    }
    // f(h s) = f(h) f(s) over kernel generators s makes f a homomorphism
    for (ElementId h : hs) {
      for (ElementId s : kernel.generators()) {
        if (apply(g, kernel.compose(h, s)) != kernel.compose(apply(g, h), apply(g, s))) {
          throw Error(ErrorCode::InvalidAction, "action is not an automorphism");
        }
      }
    }
  }
  // apply(g t, h) = apply(g, apply(t, h)) over acting generators t
  for (ElementId g : gammas) {
    for (ElementId t : acting.generators()) {
      for (ElementId h : hs) {
        if (apply(acting.compose(g, t), h) != apply(g, apply(t, h))) {
          throw Error(ErrorCode::InvalidAction, "action is not a homomorphism");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

FiniteGroup enumerate_codes(std::shared_ptr<const ConstructionNode> tree,
                            const std::vector<std::uint32_t>& gen_codes, const Limits& limits,
                            std::string name) {
  const std::uint64_t predicted = tree->predicted_order();
  if (predicted > limits.element_cap || predicted > kNoElement) {
    throw Error(ErrorCode::SizeCapExceeded, "predicted order " + std::to_string(predicted) +
                                                " exceeds cap " +
                                                std::to_string(limits.element_cap));
  }

  auto data = std::make_shared<GroupData>();
  data->node = tree;
  data->name = name.empty() ? tree->describe() : std::move(name);
  data->origin = GroupOrigin::Construction;

  CodeOps ops(*tree);
  data->id_of_code.assign(predicted, kNoElement);
  data->code_of_id.reserve(predicted);
  data->id_of_code[0] = 0;
  data->code_of_id.push_back(0);
  for (std::size_t next = 0; next < data->code_of_id.size(); ++next) {
    const std::uint32_t cur = data->code_of_id[next];
    for (std::uint32_t g : gen_codes) {
      const std::uint32_t c = ops.compose(cur, g);
      if (data->id_of_code[c] == kNoElement) {
        data->id_of_code[c] = static_cast<ElementId>(data->code_of_id.size());
        data->code_of_id.push_back(c);
      }
    }
  }
  if (data->code_of_id.size() != predicted) {
    throw Error(ErrorCode::GeneratorsDoNotGenerate,
                "closure has " + std::to_string(data->code_of_id.size()) +
                    " elements, expected " + std::to_string(predicted));
  }
  data->order = predicted;
  for (std::uint32_t c : gen_codes) {
    const ElementId id = data->id_of_code[c];
    if (id != 0 && std::find(data->generators.begin(), data->generators.end(), id) ==
                       data->generators.end()) {
      data->generators.push_back(id);
    }
  }
  data->composer = std::make_unique<TreeComposer>(*data);
  return GroupData::finish(std::move(data));
}

}  // namespace detail

FiniteGroup enumerate(std::shared_ptr<const ConstructionNode> tree,
                      const std::vector<GroupElement>& generators, const Limits& limits,
                      std::string name) {
  CodeOps ops(*tree);
  std::vector<std::uint32_t> gen_codes;
  for (const auto& g : generators) gen_codes.push_back(ops.code(g));
  return detail::enumerate_codes(std::move(tree), gen_codes, limits, std::move(name));
}

}  // namespace agroup
