#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bcp {

/// Thrown by FiniteGroup::from_table when the table fails a group axiom.
/// The witness triple (a, b, c) points at the offending entries.
struct NotAGroup : std::runtime_error {
    std::string reason;
    int a = -1, b = -1, c = -1;
    NotAGroup(std::string why, int a_ = -1, int b_ = -1, int c_ = -1);
};

/// Finite group as an index-based multiplication table. The identity is
/// always element 0 (tables are relabeled on construction if needed) and
/// groups are immutable once validated.
class FiniteGroup {
  public:
    /// Empty placeholder; every usable instance comes from a factory below.
    FiniteGroup() = default;

    static FiniteGroup from_table(const std::vector<std::vector<int>> &mult,
                                  std::vector<std::string> labels = {});

    int order() const { return order_; }
    int mul(int a, int b) const { return mult_[a * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string &label(int a) const { return labels_[a]; }
    const std::vector<std::string> &labels() const { return labels_; }

    /// Order of the cyclic subgroup generated by a.
    int element_order(int a) const;

    bool same_table(const FiniteGroup &other) const {
        return order_ == other.order_ && mult_ == other.mult_;
    }

  private:
    int order_ = 0;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

/// Subgroup of a parent group, carrying its own FiniteGroup view and the
/// index translation both ways. `elements` is sorted ascending, so the
/// subgroup identity (parent index 0) sits at local index 0.
struct Subgroup {
    const FiniteGroup *parent = nullptr;
    std::vector<int> elements;        // local index -> parent index
    std::vector<int> local_of;        // parent index -> local index or -1
    FiniteGroup group;                // the subgroup as a group of its own

    int order() const { return static_cast<int>(elements.size()); }
    int to_parent(int local) const { return elements[local]; }
    int from_parent(int p) const { return local_of[p]; }
    bool contains(int p) const { return local_of[p] >= 0; }
};

Subgroup subgroup_closure(const FiniteGroup &g, const std::vector<int> &generators);

/// Conjugacy classes as a partition of 0..order-1, each class sorted and
/// the classes ordered by minimal element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup &g);

/// Cyclic group of order n, labels "0".."n-1".
FiniteGroup cyclic_group(int n);

/// Group generated by permutations of {0..n-1} (images given one-line).
/// Element labels are the one-line notations.
FiniteGroup permutation_group(int n, const std::vector<std::vector<int>> &generators);

/// Full symmetric group on n points.
FiniteGroup symmetric_group(int n);

} // namespace bcp
