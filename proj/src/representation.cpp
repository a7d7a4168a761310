#include "pfcohom/representation.hpp"

#include <algorithm>

namespace pfc {

RepresentationData make_representation(GroupPtr g, std::vector<CycMat> matrices,
                                       std::string label) {
    RepresentationData rep;
    rep.group = std::move(g);
    rep.matrices = std::move(matrices);
    rep.label = std::move(label);
    if (static_cast<int>(rep.matrices.size()) != rep.group->order())
        throw precondition_error("representation: one matrix per element required");
    rep.degree = static_cast<int>(rep.matrices[0].rows());
    for (const auto& m : rep.matrices)
        if (m.rows() != m.cols() || static_cast<int>(m.rows()) != rep.degree)
            throw precondition_error("representation: inconsistent matrix sizes");
    if (rep.matrices[rep.group->identity()] != CycMat::identity(rep.degree))
        throw precondition_error("representation: identity image is not the identity matrix");
    int n = rep.group->order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rep.matrices[a] * rep.matrices[b] != rep.matrices[rep.group->mult(a, b)])
                throw precondition_error("representation '" + rep.label +
                                         "': homomorphism property fails");
    return rep;
}

long CharacterData::degree() const {
    Rat d = values[group->class_of(group->identity())].to_rational();
    if (d.get_den() != 1) throw precondition_error("character degree is not an integer");
    return d.get_num().get_si();
}

CharacterData character_of(const RepresentationData& rep) {
    CharacterData chi;
    chi.group = rep.group;
    chi.label = rep.label;
    for (const auto& cls : rep.group->conjugacy_classes()) {
        Cyclo tr;
        for (int i = 0; i < rep.degree; ++i) tr += rep.matrices[cls[0]].at(i, i);
        chi.values.push_back(tr);
    }
    return chi;
}

Cyclo character_inner(const CharacterData& a, const CharacterData& b) {
    if (a.group.get() != b.group.get()) throw precondition_error("group mismatch");
    Cyclo acc;
    for (int g = 0; g < a.group->order(); ++g) acc += a.value_at(g) * b.value_at(g).conj();
    return acc / Cyclo(Rat(a.group->order()));
}

int frobenius_schur(const CharacterData& chi) {
    Cyclo acc;
    const auto& g = *chi.group;
    for (int x = 0; x < g.order(); ++x) acc += chi.value_at(g.mult(x, x));
    Cyclo ind = acc / Cyclo(Rat(g.order()));
    Rat v = ind.to_rational();
    if (v != -1 && v != 0 && v != 1)
        throw precondition_error("Frobenius-Schur indicator outside {-1,0,1}: not a character?");
    return static_cast<int>(v.get_num().get_si());
}

CycMat apply_rep(const RepresentationData& rep, const GroupAlgebraElement& a) {
    if (rep.group.get() != a.group.get()) throw precondition_error("group mismatch");
    CycMat m(rep.degree, rep.degree);
    for (int g = 0; g < rep.group->order(); ++g) {
        if (a.coeffs[g].is_zero()) continue;
        m = m + rep.matrices[g].scaled(a.coeffs[g]);
    }
    return m;
}

CycMat apply_rep_blocks(const RepresentationData& rep, const AlgebraMat& mat) {
    std::size_t r = mat.size(), c = mat[0].size();
    int d = rep.degree;
    CycMat out(r * d, c * d);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            CycMat blk = apply_rep(rep, mat[i][j]);
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y) out.at(i * d + x, j * d + y) = blk.at(x, y);
        }
    return out;
}

Cyclo det_character(const RepresentationData& rep, const AlgebraMat& m) {
    return det(apply_rep_blocks(rep, m));
}

std::vector<CycMat> invariant_bilinear_forms(const RepresentationData& rep, int sign) {
    int d = rep.degree;
    int nv = d * d;
    // rows: invariance equations for every element plus the (anti)symmetry constraint
    std::vector<std::vector<Cyclo>> rows;
    auto var = [d](int a, int b) { return a * d + b; };
    for (int g = 0; g < rep.group->order(); ++g) {
        const CycMat& r = rep.matrices[g];
        // (rho^T K rho - K)_{ab} = sum_{c,e} rho_{ca} K_{ce} rho_{eb} - K_{ab}
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                std::vector<Cyclo> row(nv);
                for (int c = 0; c < d; ++c)
                    for (int e = 0; e < d; ++e) row[var(c, e)] += r.at(c, a) * r.at(e, b);
                row[var(a, b)] -= Cyclo(Rat(1));
                rows.push_back(std::move(row));
            }
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            std::vector<Cyclo> row(nv);
            row[var(a, b)] += Cyclo(Rat(1));
            row[var(b, a)] -= Cyclo(Rat(sign));
            rows.push_back(std::move(row));
        }
    CycMat sys(rows.size(), nv);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < nv; ++j) sys.at(i, j) = rows[i][j];
    CycMat ker = kernel_basis(sys);
    std::vector<CycMat> out;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        CycMat f(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) f.at(a, b) = ker.at(var(a, b), k);
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog groups.

namespace {

GroupPtr build_cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    }
    return std::make_shared<FiniteGroupData>("C" + std::to_string(n), std::move(t),
                                             std::move(names));
}

// Dihedral of order 2n; indices: r^k -> k, r^k s -> n + k.
GroupPtr build_dihedral(int n, const std::string& name) {
    int o = 2 * n;
    std::vector<std::vector<int>> t(o, std::vector<int>(o));
    auto idx = [n](int k, bool flip) { return (k % n + n) % n + (flip ? n : 0); };
    for (int a = 0; a < o; ++a)
        for (int b = 0; b < o; ++b) {
            int ka = a % n;
            bool fa = a >= n;
            int kb = b % n;
            bool fb = b >= n;
            // (r^ka s^fa)(r^kb s^fb) = r^(ka + kb * (fa ? -1 : 1)) s^(fa xor fb)
            int k = fa ? ka - kb : ka + kb;
            t[a][b] = idx(k, fa != fb);
        }
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : "r^" + std::to_string(k));
    for (int k = 0; k < n; ++k)
        names.push_back(k == 0 ? "s" : "r^" + std::to_string(k) + "s");
    return std::make_shared<FiniteGroupData>(name, std::move(t), std::move(names));
}

// Q8 = {1,-1,i,-i,j,-j,k,-k}; index = 2*axis + (negative ? 1 : 0), axes 1,i,j,k.
GroupPtr build_q8() {
    auto mulq = [](int a, int b) {
        int ax = a / 2, bx = b / 2;
        int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
        // axis products in {1,i,j,k}, 0..3
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        int cx = axis[ax][bx];
        sign *= sgn[ax][bx];
        return 2 * cx + (sign < 0 ? 1 : 0);
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mulq(a, b);
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return std::make_shared<FiniteGroupData>("Q8", std::move(t), std::move(names));
}

CycMat one_by_one(const Cyclo& v) {
    CycMat m(1, 1);
    m.at(0, 0) = v;
    return m;
}

std::vector<RepresentationData> cyclic_irreps(const GroupPtr& g, int n) {
    std::vector<RepresentationData> reps;
    for (int j = 0; j < n; ++j) {
        std::vector<CycMat> ms;
        for (int k = 0; k < n; ++k) ms.push_back(one_by_one(Cyclo::zeta(n, static_cast<long>(j) * k)));
        reps.push_back(make_representation(g, std::move(ms), "chi" + std::to_string(j)));
    }
    return reps;
}

std::vector<RepresentationData> dihedral_irreps(const GroupPtr& g, int n) {
    std::vector<RepresentationData> reps;
    int o = 2 * n;
    auto one_dim = [&](int rv, int sv, const std::string& label) {
        std::vector<CycMat> ms(o);
        for (int a = 0; a < o; ++a) {
            int k = a % n;
            bool flip = a >= n;
            int v = (rv < 0 && k % 2) ? -1 : 1;
            if (flip && sv < 0) v = -v;
            ms[a] = one_by_one(Cyclo(Rat(v)));
        }
        reps.push_back(make_representation(g, std::move(ms), label));
    };
    one_dim(1, 1, "triv");
    one_dim(1, -1, "sgn");
    if (n % 2 == 0) {
        one_dim(-1, 1, "psi_a");
        one_dim(-1, -1, "psi_b");
    }
    int two_dim_count = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    for (int j = 1; j <= two_dim_count; ++j) {
        std::vector<CycMat> ms(o);
        CycMat swap2(2, 2);
        swap2.at(0, 1) = Cyclo(Rat(1));
        swap2.at(1, 0) = Cyclo(Rat(1));
        for (int a = 0; a < o; ++a) {
            int k = a % n;
            bool flip = a >= n;
            CycMat rot(2, 2);
            rot.at(0, 0) = Cyclo::zeta(n, static_cast<long>(j) * k);
            rot.at(1, 1) = Cyclo::zeta(n, -static_cast<long>(j) * k);
            ms[a] = flip ? rot * swap2 : rot;
        }
        reps.push_back(make_representation(g, std::move(ms), "rho" + std::to_string(j)));
    }
    return reps;
}

std::vector<RepresentationData> q8_irreps(const GroupPtr& g) {
    std::vector<RepresentationData> reps;
    // one-dimensionals factor through Q8/{+-1}
    auto one_dim = [&](int vi, int vj, const std::string& label) {
        std::vector<CycMat> ms(8);
        int vk = vi * vj;
        int vals[4] = {1, vi, vj, vk};
        for (int a = 0; a < 8; ++a) ms[a] = one_by_one(Cyclo(Rat(vals[a / 2])));
        reps.push_back(make_representation(g, std::move(ms), label));
    };
    one_dim(1, 1, "triv");
    one_dim(1, -1, "chi_i");
    one_dim(-1, 1, "chi_j");
    one_dim(-1, -1, "chi_k");
    // the symplectic 2-dimensional
    Cyclo z4 = Cyclo::zeta(4);
    CycMat mi(2, 2), mj(2, 2);
    mi.at(0, 0) = z4;
    mi.at(1, 1) = -z4;
    mj.at(0, 1) = Cyclo(Rat(-1));
    mj.at(1, 0) = Cyclo(Rat(1));
    std::vector<CycMat> ms(8);
    CycMat id = CycMat::identity(2);
    ms[0] = id;
    ms[1] = id.scaled(Cyclo(Rat(-1)));  // -1 = i^2
    ms[2] = mi;
    ms[3] = mi.scaled(Cyclo(Rat(-1)));
    ms[4] = mj;
    ms[5] = mj.scaled(Cyclo(Rat(-1)));
    ms[6] = mi * mj;  // k = ij
    ms[7] = (mi * mj).scaled(Cyclo(Rat(-1)));
    reps.push_back(make_representation(g, std::move(ms), "theta"));
    return reps;
}

}  // namespace

CatalogGroup catalog_group(const std::string& name, int n) {
    std::string kind = name;
    // allow the parameter inside the name, e.g. "C6", "D4"
    if (name.size() > 1 && (name[0] == 'C' || name[0] == 'D') &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        kind = name.substr(0, 1);
        n = std::stoi(name.substr(1));
    }
    CatalogGroup cg;
    if (kind == "C") {
        if (n < 1) throw precondition_error("Cn requires n >= 1");
        cg.group = build_cyclic(n);
        cg.irreps = cyclic_irreps(cg.group, n);
    } else if (kind == "D") {
        if (n < 3) throw precondition_error("Dn requires n >= 3");
        cg.group = build_dihedral(n, "D" + std::to_string(n));
        cg.irreps = dihedral_irreps(cg.group, n);
    } else if (kind == "Q8") {
        cg.group = build_q8();
        cg.irreps = q8_irreps(cg.group);
    } else if (kind == "S3") {
        // realized on the dihedral table of order 6: r = (123), s = (12)
        cg.group = build_dihedral(3, "S3");
        cg.irreps = dihedral_irreps(cg.group, 3);
    } else {
        throw precondition_error("unknown catalog group '" + name + "'");
    }
    // catalog sanity: sum of squared degrees is |G|
    long sq = 0;
    for (const auto& r : cg.irreps) sq += static_cast<long>(r.degree) * r.degree;
    if (sq != cg.group->order()) throw std::logic_error("catalog irreducibles incomplete");
    return cg;
}

namespace {

RepresentationData contragredient_rep(const RepresentationData& rep) {
    std::vector<CycMat> ms(rep.matrices.size());
    for (int g = 0; g < rep.group->order(); ++g)
        ms[g] = rep.matrices[rep.group->inverse(g)].transpose();
    return make_representation(rep.group, std::move(ms), rep.label + "_star");
}

RepresentationData block_sum(const RepresentationData& a, const RepresentationData& b,
                             const std::string& label) {
    std::vector<CycMat> ms;
    for (int g = 0; g < a.group->order(); ++g)
        ms.push_back(CycMat::block_diag(a.matrices[g], b.matrices[g]));
    return make_representation(a.group, std::move(ms), label);
}

CharacterData sum_characters(const CharacterData& a, const CharacterData& b,
                             const std::string& label) {
    CharacterData c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
    c.label = label;
    return c;
}

}  // namespace

std::vector<SymplecticBasisItem> symplectic_character_basis(const CatalogGroup& cg) {
    std::vector<SymplecticBasisItem> items;
    std::vector<CharacterData> chars;
    for (const auto& r : cg.irreps) chars.push_back(character_of(r));
    std::vector<bool> used(cg.irreps.size(), false);

    for (std::size_t i = 0; i < cg.irreps.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        int fs = frobenius_schur(chars[i]);
        SymplecticBasisItem item;
        if (fs == -1) {
            item.kind = SymplKind::symplectic_irreducible;
            item.rep = cg.irreps[i];
            item.theta = chars[i];
            auto forms = invariant_bilinear_forms(item.rep, -1);
            if (forms.empty())
                throw std::logic_error("no invariant alternating form on an FS=-1 irreducible");
            item.kappa = forms[0];
        } else if (fs == 1) {
            item.kind = SymplKind::doubled_orthogonal;
            item.rep = block_sum(cg.irreps[i], cg.irreps[i], "2*" + cg.irreps[i].label);
            item.theta = sum_characters(chars[i], chars[i], "2*" + chars[i].label);
            auto bs = invariant_bilinear_forms(cg.irreps[i], +1);
            if (bs.empty()) throw std::logic_error("no invariant symmetric form on an FS=+1 irreducible");
            const CycMat& b = bs[0];
            int d = cg.irreps[i].degree;
            CycMat kappa(2 * d, 2 * d);
            for (int a = 0; a < d; ++a)
                for (int c = 0; c < d; ++c) {
                    kappa.at(a, d + c) = b.at(a, c);
                    kappa.at(d + a, c) = -b.at(a, c);
                }
            item.kappa = kappa;
        } else {
            // find the contragredient partner
            item.kind = SymplKind::conjugate_pair;
            std::size_t partner = i;
            for (std::size_t j = 0; j < cg.irreps.size(); ++j) {
                if (j == i || used[j]) continue;
                bool match = true;
                for (std::size_t c = 0; c < chars[i].values.size() && match; ++c)
                    match = chars[j].values[c] == chars[i].values[c].conj();
                if (match) {
                    partner = j;
                    break;
                }
            }
            if (partner == i) throw std::logic_error("missing contragredient partner for FS=0");
            used[partner] = true;
            RepresentationData star = contragredient_rep(cg.irreps[i]);
            item.rep = block_sum(cg.irreps[i], star, cg.irreps[i].label + "+" + cg.irreps[i].label + "bar");
            item.theta = sum_characters(chars[i], chars[partner],
                                        chars[i].label + "+" + chars[partner].label);
            int d = cg.irreps[i].degree;
            CycMat kappa(2 * d, 2 * d);
            // kappa((v,f),(v',f')) = f'(v) - f(v')
            for (int a = 0; a < d; ++a) {
                kappa.at(a, d + a) = Cyclo(Rat(1));
                kappa.at(d + a, a) = Cyclo(Rat(-1));
            }
            item.kappa = kappa;
        }
        if (!item.kappa.is_alternating()) throw std::logic_error("kappa not alternating");
        if (FieldOps<Cyclo>::is_zero(det(item.kappa)))
            throw std::logic_error("kappa degenerate");
        for (int g = 0; g < cg.group->order(); ++g) {
            const CycMat& r = item.rep.matrices[g];
            if (r.transpose() * item.kappa * r != item.kappa)
                throw std::logic_error("kappa not G-invariant");
        }
        item.hyp_basis = hyperbolic_basis(item.kappa);
        items.push_back(std::move(item));
    }
    return items;
}

}  // namespace pfc
