#pragma once

#include "pfcohom/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pfc {

template <class F>
int field_sign(const F& x);
template <>
inline int field_sign<Rat>(const Rat& x) {
    return rat_sign(x);
}
template <>
inline int field_sign<Cyclo>(const Cyclo& x) {
    return sign_of_real(x);
}

enum class FormFlavor { symmetric, alternating, hermitian };

template <class F>
struct FormGram {
    Mat<F> gram;
    FormFlavor flavor = FormFlavor::symmetric;

    bool consistent() const {
        switch (flavor) {
            case FormFlavor::symmetric: return gram.is_symmetric();
            case FormFlavor::alternating: return gram.is_alternating();
            case FormFlavor::hermitian: return gram.is_hermitian();
        }
        return false;
    }
    bool nondegenerate() const { return !FieldOps<F>::is_zero(det(gram)); }
};

// Signed perfect-matching expansion; the independent oracle for small dimensions.
template <class F>
F pfaffian_matchings(const Mat<F>& a) {
    std::size_t n = a.rows();
    if (n == 0) return FieldOps<F>::one();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    // pf(A) = sum_{j>0} (-1)^j A[i0][ij] pf(A without i0,ij)
    struct Rec {
        const Mat<F>& a;
        F run(std::vector<std::size_t> rows) {
            if (rows.empty()) return FieldOps<F>::one();
            F acc = FieldOps<F>::zero();
            std::size_t i0 = rows[0];
            for (std::size_t j = 1; j < rows.size(); ++j) {
                const F& v = a.at(i0, rows[j]);
                if (FieldOps<F>::is_zero(v)) continue;
                std::vector<std::size_t> rest;
                for (std::size_t k = 1; k < rows.size(); ++k)
                    if (k != j) rest.push_back(rows[k]);
                F sub = run(std::move(rest));
                F term = v * sub;
                if (j % 2 == 0) term = term * FieldOps<F>::from_rat(Rat(-1));
                acc += term;
            }
            return acc;
        }
    } rec{a};
    return rec.run(idx);
}

// Skew-symmetric elimination: congruence updates with unit determinant keep the
// Pfaffian fixed, transpositions flip its sign.
template <class F>
F pfaffian_elimination(Mat<F> a) {
    std::size_t n = a.rows();
    if (n % 2) return FieldOps<F>::zero();
    F result = FieldOps<F>::one();
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t p = k + 1;
        while (p < n && FieldOps<F>::is_zero(a.at(k, p))) ++p;
        if (p == n) return FieldOps<F>::zero();
        if (p != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k + 1, j), a.at(p, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, k + 1), a.at(i, p));
            result = result * FieldOps<F>::from_rat(Rat(-1));
        }
        F pivot = a.at(k, k + 1);
        result = result * pivot;
        F inv = FieldOps<F>::one() / pivot;
        for (std::size_t i = k + 2; i < n; ++i) {
            // clear column k with row k+1, then column k+1 with row k
            F f = a.at(i, k) * inv;
            if (!FieldOps<F>::is_zero(f)) {
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k + 1, j);
                for (std::size_t j = 0; j < n; ++j) a.at(j, i) = a.at(j, i) - f * a.at(j, k + 1);
            }
            F g = a.at(i, k + 1) * inv;
            if (!FieldOps<F>::is_zero(g)) {
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) = a.at(i, j) + g * a.at(k, j);
                for (std::size_t j = 0; j < n; ++j) a.at(j, i) = a.at(j, i) + g * a.at(j, k);
            }
        }
    }
    return result;
}

template <class F>
F pfaffian(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw precondition_error("pfaffian: non-square matrix");
    if (a.rows() % 2) throw precondition_error("pfaffian: odd dimension");
    if (!a.is_alternating()) throw precondition_error("pfaffian: matrix is not alternating");
    return pfaffian_elimination(a);
}

// Hyperbolic basis {u_1,u_1',...,u_n,u_n'} for a nondegenerate alternating gram:
// h(u_i,u_j)=0=h(u_i',u_j'), h(u_i,u_j')=delta_ij.  Columns of the result,
// interleaved pair order.
template <class F>
Mat<F> hyperbolic_basis(const Mat<F>& gram) {
    if (!gram.is_alternating()) throw precondition_error("hyperbolic_basis: not alternating");
    std::size_t n = gram.rows();
    if (n % 2) throw precondition_error("hyperbolic_basis: odd dimension");
    // Work with an explicit list of remaining basis vectors of the ambient space.
    std::vector<Mat<F>> rem;
    for (std::size_t j = 0; j < n; ++j) rem.push_back(Mat<F>::identity(n).col(j));
    auto pair_val = [&](const Mat<F>& x, const Mat<F>& y) {
        return (x.transpose() * gram * y).at(0, 0);
    };
    Mat<F> out(n, n);
    std::size_t placed = 0;
    while (!rem.empty()) {
        Mat<F> u = rem.front();
        rem.erase(rem.begin());
        // find a partner with nonzero pairing
        std::size_t pi = rem.size();
        for (std::size_t j = 0; j < rem.size(); ++j)
            if (!FieldOps<F>::is_zero(pair_val(u, rem[j]))) {
                pi = j;
                break;
            }
        if (pi == rem.size()) throw precondition_error("hyperbolic_basis: degenerate form");
        Mat<F> v = rem[pi];
        rem.erase(rem.begin() + pi);
        F c = pair_val(u, v);
        v = v.scaled(FieldOps<F>::one() / c);  // h(u, v) = 1
        // project the rest onto the orthogonal complement of span(u, v)
        for (auto& w : rem) {
            F a = pair_val(u, w);
            F b = pair_val(v, w);
            // w := w - a*v' ... w - h(u,w) v + h(v,w) u keeps pairings with u, v zero
            w = w - v.scaled(a) + u.scaled(b);
        }
        for (std::size_t i = 0; i < n; ++i) {
            out.at(i, placed) = u.at(i, 0);
            out.at(i, placed + 1) = v.at(i, 0);
        }
        placed += 2;
    }
    return out;
}

// Value of the functional Pf_h on the wedge of the given basis columns, under
// the convention h(x)(y) = h(y,x): the pfaffian of the gram in that basis.
template <class F>
F pf_functional(const Mat<F>& gram, const Mat<F>& basis) {
    if (basis.rows() != gram.rows() || basis.cols() != gram.cols())
        throw precondition_error("pf_functional: wedge is not a basis of the space");
    if (FieldOps<F>::is_zero(det(basis)))
        throw precondition_error("pf_functional: wedge vectors are dependent");
    Mat<F> g = basis.transpose() * gram * basis;
    return pfaffian(g);
}

// Pfaffian pf(A) of a kappa-self-adjoint automorphism: Pf_{h'} = pf(A) Pf_h for
// h'(x,y) = h(Ax,y); computed as pfaffian(A^T K)/pfaffian(K).
template <class F>
F pfaffian_selfadjoint(const Mat<F>& a, const Mat<F>& kappa) {
    if (!kappa.is_alternating()) throw precondition_error("pfaffian_selfadjoint: kappa not alternating");
    if (a.transpose() * kappa != kappa * a)
        throw precondition_error("pfaffian_selfadjoint: matrix is not self-adjoint for kappa");
    F denom = pfaffian(kappa);
    if (FieldOps<F>::is_zero(denom)) throw precondition_error("pfaffian_selfadjoint: degenerate kappa");
    Mat<F> g = a.transpose() * kappa;
    if (!g.is_alternating()) throw precondition_error("pfaffian_selfadjoint: A^T K not alternating");
    return pfaffian(g) / denom;
}

// Exact Sylvester signature of a symmetric gram with real (sign-determinable)
// entries.  Zero diagonals with nonzero off-diagonal go through the 2x2
// hyperbolic pivot.  Throws on degenerate input.
template <class F>
std::pair<int, int> signature(Mat<F> s) {
    if (!s.is_symmetric()) throw precondition_error("signature: not symmetric");
    int np = 0, nm = 0;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < s.rows(); ++i) live.push_back(i);
    while (!live.empty()) {
        std::size_t di = live.size();
        for (std::size_t t = 0; t < live.size(); ++t)
            if (!FieldOps<F>::is_zero(s.at(live[t], live[t]))) {
                di = t;
                break;
            }
        if (di < live.size()) {
            std::size_t i = live[di];
            const F piv = s.at(i, i);
            (field_sign(piv) > 0 ? np : nm)++;
            live.erase(live.begin() + di);
            F inv = FieldOps<F>::one() / piv;
            for (auto k : live)
                for (auto l : live) s.at(k, l) = s.at(k, l) - s.at(k, i) * inv * s.at(i, l);
        } else {
            // all diagonal zero: find an off-diagonal hyperbolic pivot
            std::size_t bi = live.size(), bj = live.size();
            for (std::size_t t = 0; t < live.size() && bi == live.size(); ++t)
                for (std::size_t u = t + 1; u < live.size(); ++u)
                    if (!FieldOps<F>::is_zero(s.at(live[t], live[u]))) {
                        bi = t;
                        bj = u;
                        break;
                    }
            if (bi == live.size()) throw precondition_error("signature: degenerate form");
            std::size_t i = live[bi], j = live[bj];
            np++;
            nm++;
            live.erase(live.begin() + bj);
            live.erase(live.begin() + bi);
            F inv = FieldOps<F>::one() / s.at(i, j);
            for (auto k : live)
                for (auto l : live)
                    s.at(k, l) =
                        s.at(k, l) - (s.at(k, i) * s.at(j, l) + s.at(k, j) * s.at(i, l)) * inv;
        }
    }
    return {np, nm};
}

// Hyp(V) = V + V^D with the evaluation pairing; gram [[0,I],[I,0]].
template <class F>
Mat<F> make_hyp_gram(std::size_t dim) {
    Mat<F> g(2 * dim, 2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        g.at(i, dim + i) = FieldOps<F>::one();
        g.at(dim + i, i) = FieldOps<F>::one();
    }
    return g;
}

// Action of g on Hyp(V) when g acts on V: block diag(rho(g), rho(g^{-1})^T).
template <class F>
Mat<F> hyp_action(const Mat<F>& rho_g, const Mat<F>& rho_ginv) {
    return Mat<F>::block_diag(rho_g, rho_ginv.transpose());
}

// G-stable complement of the column space of `sub` inside the column space of
// `ambient`, via a Reynolds-averaged projection.  `action` holds the ambient
// action matrices (may be empty for the non-equivariant case).
template <class F>
Mat<F> stable_complement(const Mat<F>& ambient, const Mat<F>& sub,
                         const std::vector<Mat<F>>& action) {
    std::size_t n = ambient.cols(), k = sub.cols();
    if (k == 0) return ambient;
    // coordinates of sub in the ambient basis
    Mat<F> sub_in_amb = solve(ambient, sub);
    // any projection p0 onto sub_in_amb: complete to a basis, project
    Mat<F> comp_cols;
    {
        Mat<F> probe = sub_in_amb;
        std::vector<std::size_t> extra;
        for (std::size_t j = 0; j < n && probe.cols() < n; ++j) {
            Mat<F> cand = Mat<F>::hstack(probe, Mat<F>::identity(n).col(j));
            if (rank(cand) > probe.cols()) {
                probe = cand;
                extra.push_back(j);
            }
        }
        comp_cols = Mat<F>::identity(n).cols_subset(extra);
    }
    Mat<F> basis = Mat<F>::hstack(sub_in_amb, comp_cols);
    Mat<F> binv = inverse(basis);
    Mat<F> p0(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            F acc = FieldOps<F>::zero();
            for (std::size_t t = 0; t < k; ++t) acc += basis.at(i, t) * binv.at(t, j);
            p0.at(i, j) = acc;
        }
    Mat<F> p = p0;
    if (!action.empty()) {
        // restrict each ambient action to ambient coordinates and average
        Mat<F> acc(n, n);
        for (const auto& g : action) {
            Mat<F> g_amb = solve(ambient, g * ambient);
            acc = acc + g_amb * p0 * inverse(g_amb);
        }
        p = acc.scaled(FieldOps<F>::one() / FieldOps<F>::from_rat(Rat(static_cast<long>(action.size()))));
    }
    Mat<F> kerp = kernel_basis(p);
    if (kerp.cols() != n - k) throw std::logic_error("stable_complement: averaged projection rank off");
    return ambient * kerp;
}

template <class F>
struct HypDecomposition {
    Mat<F> basis;          // columns: [W | W'' | U]; W'' completes W to Hyp(W)
    Mat<F> hyp_gram;       // gram on (W, W'') block
    Mat<F> complement_gram;  // gram on U, the realization of W_perp/W
};

// V = Hyp(W) + W_perp/W for an isotropic (G-stable) subspace W (Lemma-27 shape).
template <class F>
HypDecomposition<F> hyp_decompose(const Mat<F>& gram, const Mat<F>& w,
                                  const std::vector<Mat<F>>& action = {}) {
    std::size_t n = gram.rows(), k = w.cols();
    if (!((w.transpose() * gram * w).is_zero()))
        throw precondition_error("hyp_decompose: subspace is not isotropic");
    for (const auto& g : action) {
        Mat<F> gw = g * w;
        Mat<F> joint = Mat<F>::hstack(w, gw);
        if (rank(joint) != rank(w)) throw precondition_error("hyp_decompose: subspace not G-stable");
    }
    // W_perp = ker(w^T gram)
    Mat<F> wperp = kernel_basis(w.transpose() * gram);
    // U: stable complement of W inside W_perp
    Mat<F> u = stable_complement(wperp, w, action);
    // W': stable complement of W_perp inside V
    Mat<F> wprime = stable_complement(Mat<F>::identity(n), wperp, action);
    if (wprime.cols() != k) throw precondition_error("hyp_decompose: degenerate ambient form");
    // kill the pairing of W' against U:  W'' = W' - U (S_U)^{-1} (U^T S W')
    if (u.cols() > 0) {
        Mat<F> su = u.transpose() * gram * u;
        Mat<F> corr = solve(su, u.transpose() * gram * wprime);
        wprime = wprime - u * corr;
    }
    // kill the self-pairing of W'':  w'' := w'' - (1/2) W B^{-T} (W''^T S W'')
    {
        Mat<F> b = w.transpose() * gram * wprime;  // k x k, invertible by duality
        Mat<F> selfp = wprime.transpose() * gram * wprime;
        Mat<F> corr = solve(b.transpose(), selfp.scaled(FieldOps<F>::from_rat(rat(1, 2))));
        wprime = wprime - w * corr;
    }
    HypDecomposition<F> out;
    out.basis = Mat<F>::hstack(Mat<F>::hstack(w, wprime), u);
    Mat<F> wpair = Mat<F>::hstack(w, wprime);
    out.hyp_gram = wpair.transpose() * gram * wpair;
    out.complement_gram = u.transpose() * gram * u;
    // the (W, W'') block must be exactly hyperbolic off-diagonal
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!FieldOps<F>::is_zero(out.hyp_gram.at(i, j)))
                throw std::logic_error("hyp_decompose: W self-pairing survived");
            if (!FieldOps<F>::is_zero(out.hyp_gram.at(k + i, k + j)))
                throw std::logic_error("hyp_decompose: W'' self-pairing survived");
        }
    return out;
}

}  // namespace pfc
