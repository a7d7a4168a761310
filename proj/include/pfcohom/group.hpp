#pragma once

#include "pfcohom/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace pfc {

// Multiplication-table group.  The group law (associativity, identity,
// inverses) and the conjugacy-class partition are verified on construction.
class FiniteGroupData {
  public:
    FiniteGroupData(std::string name, std::vector<std::vector<int>> mult_table,
                    std::vector<std::string> element_names);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int mult(int g, int h) const { return table_[g][h]; }
    int identity() const { return identity_; }
    int inverse(int g) const { return inverse_[g]; }
    int element_order(int g) const { return elt_order_[g]; }
    int exponent() const { return exponent_; }
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int g) const { return class_index_[g]; }
    const std::string& element_name(int g) const { return names_[g]; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    std::vector<int> center() const;

  private:
    std::string name_;
    int order_;
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    int identity_;
    std::vector<int> inverse_;
    std::vector<int> elt_order_;
    int exponent_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroupData>;

// Element of the group algebra; coefficients indexed by group element.
struct GroupAlgebraElement {
    GroupPtr group;
    std::vector<Cyclo> coeffs;

    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(GroupPtr g)
        : group(std::move(g)), coeffs(group->order(), Cyclo()) {}
    static GroupAlgebraElement unit(GroupPtr g) {
        GroupAlgebraElement e(std::move(g));
        e.coeffs[e.group->identity()] = Cyclo(Rat(1));
        return e;
    }
    static GroupAlgebraElement basis(GroupPtr g, int elt) {
        GroupAlgebraElement e(std::move(g));
        e.coeffs[elt] = Cyclo(Rat(1));
        return e;
    }
    bool is_zero() const;
};

GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement algebra_sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
// Convolution product.
GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement algebra_scale(const Cyclo& c, const GroupAlgebraElement& a);
// a_g -> conj(a_{g^{-1}}), the involution induced by group inversion.
GroupAlgebraElement algebra_involution(const GroupAlgebraElement& a);

using AlgebraMat = std::vector<std::vector<GroupAlgebraElement>>;

AlgebraMat algebra_mat(GroupPtr g, std::size_t rows, std::size_t cols);
AlgebraMat algebra_mat_identity(GroupPtr g, std::size_t n);
AlgebraMat algebra_mat_mul(const AlgebraMat& a, const AlgebraMat& b);
AlgebraMat algebra_mat_scale(const Cyclo& c, const AlgebraMat& a);
// Entrywise involution of the transpose (conjugate-transpose over the group ring).
AlgebraMat algebra_mat_conj_transpose(const AlgebraMat& a);
bool algebra_mat_equal(const AlgebraMat& a, const AlgebraMat& b);

// Left regular representation of one algebra element as a rational matrix,
// acting on the column space spanned by the group elements.
RatMat regular_matrix(const GroupAlgebraElement& a);
// Rational expansion of a free module map given by an algebra matrix, with the
// Q-basis of Q[G]^n ordered basis-major: (j, g) -> j*|G| + g.
RatMat rationalize(const AlgebraMat& a);

}  // namespace pfc
