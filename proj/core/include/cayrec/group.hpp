#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cayrec/checks.hpp"
#include "cayrec/grid.hpp"

namespace cayrec {

/// A group element: canonical integer index plus a presentation-only name.
struct Element {
    int index = 0;
    std::string display_name;
};

/// A permutation of [0, n), used to enumerate group elements along one axis
/// of a Cayley matrix.
class Enumeration {
  public:
    /// Throws std::invalid_argument unless perm is a permutation of [0, n).
    explicit Enumeration(std::vector<int> perm);
    static Enumeration identity(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    int operator[](int i) const { return perm_[i]; }
    const std::vector<int>& perm() const { return perm_; }

    bool operator==(const Enumeration&) const = default;

  private:
    std::vector<int> perm_;
};

/// A finite group of order n as an explicit operation table over element
/// indices [0, n), with identity and precomputed inverses.
///
/// Construction verifies the group axioms and throws on violation; instances
/// are immutable and safe to share across threads.
class GroupTable {
  public:
    GroupTable(std::string name, int order, std::vector<int> op, int identity,
               std::vector<std::string> element_names = {});

    int order() const { return order_; }
    int op(int x, int y) const { return op_[static_cast<std::size_t>(x) * order_ + y]; }
    int identity() const { return identity_; }
    int inverse(int x) const { return inverse_[x]; }
    const std::string& name() const { return name_; }
    Element element(int i) const { return {i, element_names_[i]}; }
    const std::vector<std::string>& element_names() const { return element_names_; }

    /// The raw operation table as a Matrix (rows/columns in index order).
    Matrix op_matrix() const;

  private:
    std::string name_;
    int order_;
    std::vector<int> op_;
    int identity_;
    std::vector<int> inverse_;
    std::vector<std::string> element_names_;
};

/// Builds a catalog group from its text descriptor:
///
///   c<n>              cyclic of order n (n >= 1)
///   d<k>              dihedral of order 2k (k >= 2)
///   s<k>              symmetric on k letters (k <= 4)
///   q8                quaternion group of order 8
///   prod:<a>,<b>      direct product (right-associative, nestable)
///
/// Unsupported descriptors are rejected with std::invalid_argument.
GroupTable make_group(std::string_view spec);

/// Checks the group axioms for an operation table with the claimed identity:
/// Latin rows/columns, identity, associativity, inverses — in that order,
/// reporting the first violation with a witness.
CheckVerdict verify_group(const Matrix& table, int identity);

/// The Cayley matrix m[i][j] = op(rows[i], cols[j]).
Matrix cayley_matrix_of(const GroupTable& g, const Enumeration& rows, const Enumeration& cols);

}  // namespace cayrec
