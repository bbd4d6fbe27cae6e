#ifndef HEFDIV_MULTILINEAR_HPP
#define HEFDIV_MULTILINEAR_HPP

#include <functional>
#include <map>
#include <vector>

#include "hefdiv/poly.hpp"

namespace hefdiv {

// Strictly increasing subset of {1..m}; basis label of an exterior power.
using LambdaIndex = std::vector<int>;
// Non-decreasing multiset over {1..r}; basis label of a symmetric power.
using SymIndex = std::vector<int>;

std::vector<LambdaIndex> lambda_subsets(int m, int k); // lex order
std::vector<SymIndex> sym_multisets(int r, int s);     // lex order

// Removes j from I, reporting the sign (-1)^{pos-1} with positions counted
// from the left of the sorted index. Returns false if j is absent.
bool lambda_remove(const LambdaIndex& I, int j, LambdaIndex& out, int& sign);

// Interior multiplication of the basis vector e_I by the covector row p
// (p[j-1] is the coefficient of e_j^*): all (I \ {j}, p_j, sign) triples.
struct ContractionTerm {
    LambdaIndex remaining;
    Poly factor;
    int sign; // +1 or -1
};
std::vector<ContractionTerm> wedge_contract(const std::vector<Poly>& p_row,
                                            const LambdaIndex& idx);

/**
 * Variable layout of two-point polynomials in (zeta, z).
 *
 * affine      (projective == false): nvars = 2n,   [zeta_1..zeta_n, z_1..z_n]
 * projective  (projective == true):  nvars = 2n+1, [zeta_0..zeta_n, z_1..z_n]
 *
 * z is always the affine point (1, z'). Differential indices (the dzeta_j
 * slots of forms) run over 1..n in the affine layout and 0..n in the
 * projective one.
 */
struct VarLayout {
    int n = 0;
    bool projective = false;

    int nvars() const { return projective ? 2 * n + 1 : 2 * n; }
    int zeta_var(int i) const { return projective ? i : i - 1; } // dzeta index -> poly var
    int z_var(int i) const { return projective ? n + i : n - 1 + i; } // i in 1..n
    int diff_lo() const { return projective ? 0 : 1; }
    int diff_hi() const { return n; } // inclusive
    bool operator==(const VarLayout& o) const { return n == o.n && projective == o.projective; }

    // Embeds a single-point polynomial (n affine vars, or n+1 homogeneous vars
    // when projective) into the two-point layout, on the zeta or z side.
    Poly embed_zeta(const Poly& p) const;
    Poly embed_z(const Poly& p) const; // affine single-point input only
};

/**
 * A (s,0)-form with Poly coefficients: map from a strictly increasing
 * differential multi-index J to the coefficient of dzeta_J. Signs are
 * normalized into coefficients at insertion.
 */
struct Form {
    int degree = 0;
    std::map<std::vector<int>, Poly> terms;

    static Form zero(int degree) { return Form{degree, {}}; }
    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& J, const Poly& c);
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form operator*(const Rat& c) const;
    bool operator==(const Form& o) const;

    // Maximum total degree over coefficients; nullopt when zero.
    std::optional<int> coeff_degree() const;
    int tau() const; // common tau of the coefficients (0 when zero)
};

// Wedge with shuffle sign; zero when multi-indices intersect.
Form wedge(const Form& a, const Form& b);

// Contraction against a vector field whose dzeta_j component is factor(j);
// each removed slot multiplies by factor(j), applies the position sign, and
// shifts tau by tau_shift (the 2*pi*i of the field lives in tau).
Form contract(const Form& f, const std::function<Poly(int)>& factor, int tau_shift);

/**
 * A (form degree s)-valued morphism between complex levels: rows x cols grid
 * of Forms, source level src_level (k), target level dst_level (l).
 *
 * Composition is graded: for A o B the Koszul sign (-1)^{parity(A) * s_B}
 * multiplies each product, where parity(A) = (k - l) mod 2 is the bundle
 * parity of A and s_B the form degree of B. With this product the Hefer
 * tower relation holds in exactly the shape the propositions state it.
 */
struct FormMap {
    int src_level = 0, dst_level = 0;
    int form_degree = 0;
    int rows = 0, cols = 0;
    VarLayout layout;
    std::vector<Form> entries;

    FormMap() = default;
    FormMap(int src, int dst, int s, int r, int c, VarLayout lay);

    Form& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Form& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    static FormMap identity(int level, int rank, VarLayout lay);

    bool is_zero() const;
    FormMap operator+(const FormMap& o) const;
    FormMap operator-(const FormMap& o) const;
    bool operator==(const FormMap& o) const;
};

FormMap graded_compose(const FormMap& a, const FormMap& b);

// Single interior-multiplication step by a (1,0)-form-valued row h (Koszul
// setting: h maps E_1 -> E_0, entries h_1..h_m): Lambda^j -> Lambda^{j-1}.
FormMap delta_h_step(const std::vector<Form>& h, int m, int level_j, VarLayout lay);

// Iterated interior multiplication (delta_h)^power o target. power 0 returns
// target; exhausting the exterior slots yields the zero map.
FormMap delta_form(const std::vector<Form>& h, int m, int power, const FormMap& target);

} // namespace hefdiv

#endif
