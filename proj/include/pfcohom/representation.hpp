#pragma once

#include "pfcohom/forms.hpp"
#include "pfcohom/group.hpp"

#include <string>
#include <vector>

namespace pfc {

// Matrix representation over Q(zeta); the homomorphism property and the
// identity image are verified on construction.
struct RepresentationData {
    GroupPtr group;
    int degree = 0;
    std::vector<CycMat> matrices;  // indexed by group element
    std::string label;
};

RepresentationData make_representation(GroupPtr g, std::vector<CycMat> matrices,
                                       std::string label);

struct CharacterData {
    GroupPtr group;
    std::vector<Cyclo> values;  // indexed by conjugacy class
    std::string label;

    const Cyclo& value_at(int elt) const { return values[group->class_of(elt)]; }
    // Degree theta(1), asserted to be a rational integer.
    long degree() const;
};

CharacterData character_of(const RepresentationData& rep);
// <chi, psi> = |G|^{-1} sum over g of chi(g) conj(psi(g)).
Cyclo character_inner(const CharacterData& a, const CharacterData& b);
// |G|^{-1} sum over g of chi(g^2); must land in {-1, 0, +1}.
int frobenius_schur(const CharacterData& chi);

// sum_g a_g rho(g)
CycMat apply_rep(const RepresentationData& rep, const GroupAlgebraElement& a);
// Blockwise apply_rep of a group-algebra matrix.
CycMat apply_rep_blocks(const RepresentationData& rep, const AlgebraMat& m);
// Det(lambda)(character of rep) = det of the blockwise image.
Cyclo det_character(const RepresentationData& rep, const AlgebraMat& m);

// Solves rho(g)^T K rho(g) = K over all g together with K^T = sign*K; returns
// a basis of the solution space as d*d matrices.
std::vector<CycMat> invariant_bilinear_forms(const RepresentationData& rep, int sign);

enum class SymplKind { symplectic_irreducible, doubled_orthogonal, conjugate_pair };

// One W_m of the symplectic basis: character, realized representation,
// invariant alternating gram and a hyperbolic basis for it.
struct SymplecticBasisItem {
    CharacterData theta;
    RepresentationData rep;
    CycMat kappa;
    CycMat hyp_basis;  // columns u_1, u_1', u_2, u_2', ...
    SymplKind kind;
};

struct CatalogGroup {
    GroupPtr group;
    std::vector<RepresentationData> irreps;
};

// Verified catalog groups with hardcoded irreducible matrices:
//   "Cn" (n >= 1), "Dn" (dihedral of order 2n, n >= 3), "Q8", "S3".
// Either encode n in the name ("C4", "D4") or pass it separately.
CatalogGroup catalog_group(const std::string& name, int n = 0);

std::vector<SymplecticBasisItem> symplectic_character_basis(const CatalogGroup& cg);

}  // namespace pfc
