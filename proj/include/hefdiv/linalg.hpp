#ifndef HEFDIV_LINALG_HPP
#define HEFDIV_LINALG_HPP

#include <optional>
#include <vector>

#include "hefdiv/rat.hpp"

namespace hefdiv::linalg {

// Kernel selection. Serial is the reference implementation; Parallel runs the
// elimination row updates under OpenMP. Both produce identical results
// (exact arithmetic, fixed pivot order), which the tests assert.
enum class Exec { Serial, Parallel };

// Process-wide default used by the solver entry points; set from the
// HEFDIV_THREADS environment variable by the CLI (0 threads = serial).
Exec default_exec();
void set_default_exec(Exec e);

// Dense rational matrix, row-major.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}
    Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Solves A x = b exactly over Q by fraction-free (Bareiss) elimination on the
// denominator-cleared augmented system. Pivoting: columns are visited left to
// right, the pivot row is the first row with a nonzero entry; free variables
// are set to zero. Returns nullopt when the system is inconsistent.
//
// The column order is therefore part of the contract: callers arrange their
// unknowns in the tie-break order they want before calling.
std::optional<std::vector<Rat>> solve(const RatMatrix& A, const std::vector<Rat>& b, Exec exec);
std::optional<std::vector<Rat>> solve(const RatMatrix& A, const std::vector<Rat>& b);

} // namespace hefdiv::linalg

#endif
