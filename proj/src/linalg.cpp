#include "hefdiv/linalg.hpp"

#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hefdiv::linalg {

namespace {
Exec g_default = Exec::Parallel;
}

Exec default_exec() { return g_default; }
void set_default_exec(Exec e) { g_default = e; }

namespace {

// One Bareiss update of row i against the pivot row: row_i := (pivot*row_i -
// lead*row_piv) / prev, starting at column `from`. The division is exact
// (Sylvester identity); entries stay minors of the input matrix.
void bareiss_row_update(mpz_class* wi, const mpz_class* wp, const mpz_class& pivot,
                        const mpz_class& lead, const mpz_class& prev, int from, int width) {
    for (int j = from; j < width; ++j) {
        mpz_class num = pivot * wi[j] - lead * wp[j];
        assert(prev != 0 && num % prev == 0);
        wi[j] = num / prev;
    }
}

} // namespace

std::optional<std::vector<Rat>> solve(const RatMatrix& A, const std::vector<Rat>& b, Exec exec) {
    const int m = A.rows;
    const int n = A.cols;
    assert(static_cast<int>(b.size()) == m);
    const int width = n + 1;

    // Clear denominators row by row; [A|b] becomes an integer matrix.
    std::vector<mpz_class> w(static_cast<std::size_t>(m) * width);
    for (int i = 0; i < m; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, A.at(i, j).get_den());
        l = lcm(l, b[i].get_den());
        for (int j = 0; j < n; ++j) {
            mpq_class scaled = A.at(i, j) * l;
            w[static_cast<std::size_t>(i) * width + j] = scaled.get_num();
        }
        mpq_class scaled = b[i] * l;
        w[static_cast<std::size_t>(i) * width + n] = scaled.get_num();
    }
    auto row = [&](int i) { return w.data() + static_cast<std::size_t>(i) * width; };

    std::vector<std::pair<int, int>> pivots; // (row, col)
    mpz_class prev = 1;
    int prow = 0;
    for (int col = 0; col < n && prow < m; ++col) {
        int sel = -1;
        for (int i = prow; i < m; ++i) {
            if (row(i)[col] != 0) { sel = i; break; }
        }
        if (sel < 0) continue; // free column
        if (sel != prow)
            for (int j = 0; j < width; ++j) std::swap(row(sel)[j], row(prow)[j]);
        const mpz_class pivot = row(prow)[col];

        // Every row below the pivot gets the full update, including lead == 0
        // rows (they are rescaled by pivot/prev); anything less breaks the
        // exactness of later divisions.
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (int i = prow + 1; i < m; ++i) {
                mpz_class lead = row(i)[col];
                row(i)[col] = 0;
                bareiss_row_update(row(i), row(prow), pivot, lead, prev, col + 1, width);
            }
        } else {
            for (int i = prow + 1; i < m; ++i) {
                mpz_class lead = row(i)[col];
                row(i)[col] = 0;
                bareiss_row_update(row(i), row(prow), pivot, lead, prev, col + 1, width);
            }
        }
        pivots.emplace_back(prow, col);
        prev = pivot;
        ++prow;
    }

    for (int i = prow; i < m; ++i)
        if (row(i)[n] != 0) return std::nullopt; // 0 = nonzero: inconsistent

    // Back substitution over Q; free variables stay zero.
    std::vector<Rat> x(n, Rat(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [pi, pc] = *it;
        Rat acc(row(pi)[n]);
        for (int j = pc + 1; j < n; ++j) {
            if (row(pi)[j] == 0 || rat_is_zero(x[j])) continue;
            acc -= Rat(row(pi)[j]) * x[j];
        }
        Rat piv(row(pi)[pc]);
        x[pc] = acc / piv;
    }
    return x;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& A, const std::vector<Rat>& b) {
    return solve(A, b, g_default);
}

} // namespace hefdiv::linalg
