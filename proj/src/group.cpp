#include "pfcohom/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pfc {

FiniteGroupData::FiniteGroupData(std::string name, std::vector<std::vector<int>> mult_table,
                                 std::vector<std::string> element_names)
    : name_(std::move(name)), table_(std::move(mult_table)), names_(std::move(element_names)) {
    order_ = static_cast<int>(table_.size());
    if (order_ == 0) throw precondition_error("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != order_)
            throw precondition_error("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= order_) throw precondition_error("table entry out of range");
    }
    if (names_.empty()) {
        for (int i = 0; i < order_; ++i) names_.push_back("g" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != order_)
        throw precondition_error("element name list has the wrong length");

    // identity
    identity_ = -1;
    for (int e = 0; e < order_; ++e) {
        bool ok = true;
        for (int g = 0; g < order_ && ok; ++g)
            ok = table_[e][g] == g && table_[g][e] == g;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw precondition_error("no identity element");

    // inverses
    inverse_.assign(order_, -1);
    for (int g = 0; g < order_; ++g) {
        for (int h = 0; h < order_; ++h)
            if (table_[g][h] == identity_ && table_[h][g] == identity_) {
                inverse_[g] = h;
                break;
            }
        if (inverse_[g] < 0) throw precondition_error("missing inverse");
    }

    // associativity (desk scale: cubic scan)
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw precondition_error("multiplication table is not associative");

    // element orders and exponent
    elt_order_.assign(order_, 0);
    exponent_ = 1;
    for (int g = 0; g < order_; ++g) {
        int x = g, n = 1;
        while (x != identity_) {
            x = table_[x][g];
            ++n;
        }
        elt_order_[g] = n;
        exponent_ = static_cast<int>(std::lcm(exponent_, n));
    }

    // conjugacy classes, ordered by minimal element
    class_index_.assign(order_, -1);
    for (int g = 0; g < order_; ++g) {
        if (class_index_[g] >= 0) continue;
        std::set<int> cls;
        for (int h = 0; h < order_; ++h) cls.insert(table_[table_[h][g]][inverse_[h]]);
        std::vector<int> v(cls.begin(), cls.end());
        int ci = static_cast<int>(classes_.size());
        for (int x : v) class_index_[x] = ci;
        classes_.push_back(std::move(v));
    }
}

std::vector<int> FiniteGroupData::center() const {
    std::vector<int> z;
    for (int g = 0; g < order_; ++g) {
        bool central = true;
        for (int h = 0; h < order_ && central; ++h) central = table_[g][h] == table_[h][g];
        if (central) z.push_back(g);
    }
    return z;
}

bool GroupAlgebraElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclo& c) { return c.is_zero(); });
}

namespace {
void check_same_group(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.group.get() != b.group.get()) throw precondition_error("group mismatch");
}
}  // namespace

GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_same_group(a, b);
    GroupAlgebraElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

GroupAlgebraElement algebra_sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_same_group(a, b);
    GroupAlgebraElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_same_group(a, b);
    GroupAlgebraElement r(a.group);
    int n = a.group->order();
    for (int g = 0; g < n; ++g) {
        if (a.coeffs[g].is_zero()) continue;
        for (int h = 0; h < n; ++h) {
            if (b.coeffs[h].is_zero()) continue;
            r.coeffs[a.group->mult(g, h)] += a.coeffs[g] * b.coeffs[h];
        }
    }
    return r;
}

GroupAlgebraElement algebra_scale(const Cyclo& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

GroupAlgebraElement algebra_involution(const GroupAlgebraElement& a) {
    GroupAlgebraElement r(a.group);
    for (int g = 0; g < a.group->order(); ++g) r.coeffs[a.group->inverse(g)] = a.coeffs[g].conj();
    return r;
}

AlgebraMat algebra_mat(GroupPtr g, std::size_t rows, std::size_t cols) {
    return AlgebraMat(rows, std::vector<GroupAlgebraElement>(cols, GroupAlgebraElement(g)));
}

AlgebraMat algebra_mat_identity(GroupPtr g, std::size_t n) {
    AlgebraMat m = algebra_mat(g, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = GroupAlgebraElement::unit(g);
    return m;
}

AlgebraMat algebra_mat_mul(const AlgebraMat& a, const AlgebraMat& b) {
    std::size_t r = a.size(), k = b.size(), c = b[0].size();
    AlgebraMat m = algebra_mat(a[0][0].group, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j)
                m[i][j] = algebra_add(m[i][j], algebra_mul(a[i][t], b[t][j]));
        }
    return m;
}

AlgebraMat algebra_mat_scale(const Cyclo& c, const AlgebraMat& a) {
    AlgebraMat m = a;
    for (auto& row : m)
        for (auto& x : row) x = algebra_scale(c, x);
    return m;
}

AlgebraMat algebra_mat_conj_transpose(const AlgebraMat& a) {
    std::size_t r = a.size(), c = a[0].size();
    AlgebraMat m = algebra_mat(a[0][0].group, c, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m[j][i] = algebra_involution(a[i][j]);
    return m;
}

bool algebra_mat_equal(const AlgebraMat& a, const AlgebraMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!algebra_sub(a[i][j], b[i][j]).is_zero()) return false;
    }
    return true;
}

RatMat regular_matrix(const GroupAlgebraElement& a) {
    int n = a.group->order();
    RatMat m(n, n);
    // x -> x*lambda on Q[G]; column g holds the coefficients of g*lambda.
    // Left-module maps rationalize blockwise through this right-multiplication
    // matrix, and composition of the rational blocks matches composition of
    // the module maps.
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k) {
            if (a.coeffs[k].is_zero()) continue;
            m.at(a.group->mult(g, k), g) += a.coeffs[k].to_rational();
        }
    return m;
}

RatMat rationalize(const AlgebraMat& a) {
    const GroupPtr& g = a[0][0].group;
    int n = g->order();
    std::size_t r = a.size(), c = a[0].size();
    RatMat m(r * n, c * n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (a[i][j].is_zero()) continue;
            RatMat blk = regular_matrix(a[i][j]);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) m.at(i * n + x, j * n + y) = blk.at(x, y);
        }
    return m;
}

}  // namespace pfc
