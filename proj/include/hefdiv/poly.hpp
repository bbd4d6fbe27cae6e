#ifndef HEFDIV_POLY_HPP
#define HEFDIV_POLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hefdiv/errors.hpp"
#include "hefdiv/rat.hpp"

namespace hefdiv {

using Exponents = std::vector<int>;
using Cplx = std::complex<double>;

/**
 * Sparse multivariate polynomial over Q, together with a tracked power of the
 * constant 2*pi*i: the stored value represents terms * (2*pi*i)^tau.
 *
 * Variable convention: in an (n+1)-variable homogeneous context, index 0 is
 * the homogenizing variable zeta_0; affine polynomials in n variables store
 * z_1..z_n (equivalently zeta_1..zeta_n) at indices 0..n-1.
 *
 * Invariants: no zero coefficients stored, all exponent vectors have length
 * nvars, and the zero polynomial has tau = 0. Adding polynomials with
 * different tau throws TauMismatchError; callers normalize first.
 */
class Poly {
public:
    Poly() : nvars_(0), tau_(0) {}
    explicit Poly(int nvars, int tau = 0) : nvars_(nvars), tau_(tau) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rat& c, int tau = 0);
    static Poly variable(int nvars, int index, int tau = 0);
    static Poly monomial(int nvars, Exponents exps, const Rat& c, int tau = 0);

    int nvars() const { return nvars_; }
    int tau() const { return tau_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    // Shifts the tracked power of 2*pi*i; no-op on the zero polynomial.
    Poly with_tau_shift(int delta) const;

    // Degree of the zero polynomial is the distinguished sentinel nullopt.
    std::optional<int> degree() const;
    std::optional<int> degree_in(int lo, int hi) const; // vars lo..hi-1
    int degree_or(int fallback) const { return degree().value_or(fallback); }

    bool is_homogeneous(int d) const;
    // Homogeneity in the variable block [lo, hi): every term has block-degree d.
    bool is_homogeneous_in(int lo, int hi, int d) const;

    Rat coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rat& c); // tau of caller's choosing is kept

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // zeta_0^rho * phi(zeta'/zeta_0): a new variable is inserted at index 0.
    // Throws DegreeCapError if rho < deg(phi).
    Poly homogenize(int rho) const;

    // Substitutes variable 0 := 1 and drops it.
    Poly dehomogenize() const;

    // Homogenizes the variable block [lo, hi) to degree d using the existing
    // variable at index pad: every term gets pad-exponent += d - blockdeg.
    // Throws DegreeCapError if some term has block degree > d.
    Poly homogenize_block(int lo, int hi, int pad, int d) const;

    // Reindexes variables: exponent of old var i moves to index_map[i].
    // index_map values must be distinct and < new_nvars.
    Poly map_vars(int new_nvars, const std::vector<int>& index_map) const;

    // Substitutes variable `index` := 1 and drops the slot (general form of
    // dehomogenize, any position).
    Poly eval_var_one(int index) const;

    Poly derivative(int index) const;

    // Numeric evaluation; the tau power is applied as (2*pi*i)^tau.
    Cplx eval(std::span<const Cplx> point) const;
    Rat eval_rat(std::span<const Rat> point) const; // ignores tau; exact probe

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    void normalize_zero_tau() { if (terms_.empty()) tau_ = 0; }

    int nvars_;
    int tau_;
    std::map<Exponents, Rat> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

/**
 * Dense r x m grid of polynomials with declared per-column degree caps
 * d_1 >= d_2 >= ... >= d_m. Entries in column j satisfy deg <= d_j; in the
 * homogeneous flavor builders additionally enforce exact d_j-homogeneity.
 */
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0), nvars_(0) {}
    PolyMatrix(int rows, int cols, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    Poly& at(int i, int j);
    const Poly& at(int i, int j) const;

    std::vector<int>& col_degrees() { return col_degrees_; }
    const std::vector<int>& col_degrees() const { return col_degrees_; }

    // Checks entry degrees against the declared caps (and their sortedness).
    void validate() const;

    PolyMatrix multiply(const PolyMatrix& o) const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;

    // Entrywise column homogenization to the declared caps.
    PolyMatrix homogenize_columns() const;
    // Entrywise dehomogenization (zeta_0 := 1).
    PolyMatrix dehomogenize() const;

    std::vector<Cplx> eval(std::span<const Cplx> point) const; // row-major values

private:
    int rows_, cols_, nvars_;
    std::vector<Poly> entries_;
    std::vector<int> col_degrees_;
};

// ---- free functions on Poly (the poly_core operations) ----

Poly homogenize(const Poly& phi, int rho);
Poly dehomogenize(const Poly& p);
bool is_homogeneous(const Poly& p, int d);

// Enumerates all exponent vectors in `nvars` variables of total degree <= cap,
// in graded-lex order (degree first, then lexicographic). Deterministic; this
// ordering is part of the solver tie-break contract.
std::vector<Exponents> monomials_up_to(int nvars, int cap);

} // namespace hefdiv

#endif
