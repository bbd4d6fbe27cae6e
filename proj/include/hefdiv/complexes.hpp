#ifndef HEFDIV_COMPLEXES_HPP
#define HEFDIV_COMPLEXES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hefdiv/multilinear.hpp"
#include "hefdiv/poly.hpp"

namespace hefdiv {

enum class ComplexKind { Koszul, BuchsbaumRim, EagonNorthcott, Generic };
enum class ComplexFlavor { Homogeneous, Affine };

std::string kind_name(ComplexKind k);
std::string flavor_name(ComplexFlavor f);

// Basis label of a level: exterior part (subset of {1..m}) and symmetric part
// (multiset over {1..r}). Level 0 uses sym = {i} for the frame epsilon_i,
// level 1 uses lambda = {j} for e_j. The det E_0^* factor is a formal tag on
// the level, not a basis dimension (it contributes no line-bundle degree).
struct BasisLabel {
    LambdaIndex lambda;
    SymIndex sym;
    bool operator==(const BasisLabel& o) const { return lambda == o.lambda && sym == o.sym; }
};

struct GradedLevel {
    int rank = 0;
    std::vector<BasisLabel> labels;
    std::vector<int> twists; // d_k^i per label
    bool det_tag = false;    // carries the formal det E_0^* factor

    bool operator==(const GradedLevel& o) const {
        return rank == o.rank && labels == o.labels && twists == o.twists && det_tag == o.det_tag;
    }
};

/**
 * Graded complex of twisted free modules with maps f_k: level k -> level k-1.
 * Homogeneous flavor: entries in n+1 variables, entry (i,j) of f_k exactly
 * (d_{k-1}^i - d_k^j)-homogeneous. Affine flavor: entries in n variables with
 * the twist differences as degree caps. f_k o f_{k+1} = 0 always, exactly.
 */
struct GradedComplex {
    ComplexKind kind = ComplexKind::Generic;
    ComplexFlavor flavor = ComplexFlavor::Homogeneous;
    int n = 0; // projective dimension: entries live in n+1 (hom) or n (affine) vars
    std::vector<GradedLevel> levels;
    std::vector<PolyMatrix> maps; // maps[k-1] = f_k, k = 1..N

    int length() const { return static_cast<int>(maps.size()); } // N
    const GradedLevel& level(int k) const { return levels[k]; }
    const PolyMatrix& f(int k) const { return maps[k - 1]; }
    int poly_vars() const { return flavor == ComplexFlavor::Homogeneous ? n + 1 : n; }

    // Exact checks; throw ComplexInvariantError on violation.
    void check_composition() const;
    void check_grading() const;
};

// The paper's rank count for Buchsbaum-Rim level k >= 2 is binom(m, k+r-1)
// times dim S^{k-2}(C^r) = binom(r+k-3, k-2).
long br_rank(int m, int r, int k);

GradedComplex build_buchsbaum_rim(const PolyMatrix& P, int n, std::uint64_t seed = 424242);
GradedComplex build_koszul(const PolyMatrix& P, int n, std::uint64_t seed = 424242);
GradedComplex build_eagon_northcott(const PolyMatrix& P, int n, std::uint64_t seed = 424242);

GradedComplex affine_slice(const GradedComplex& C);

// True iff some random rational sample (coordinates from a fixed small
// integer box) gives rank(P(point)) = r. False is a value, not an error.
bool generic_surjectivity_check(const PolyMatrix& P, int trials, std::uint64_t seed = 424242);

// Full contraction of e_I (|I| = r) by the rows of P applied row 1 first:
// the coefficients of p_1 ^ ... ^ p_r on the lambda_subsets(m, r) basis.
// Up to the documented sign convention these are the maximal minors.
std::vector<Poly> wedge_rows(const PolyMatrix& P);

// Contraction of e_I by row `a` of P (the single-step delta_{p_a}).
std::vector<ContractionTerm> contract_row(const PolyMatrix& P, int a, const LambdaIndex& I);

} // namespace hefdiv

#endif
