#include "hefdiv/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace hefdiv {

namespace {

int total_deg(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

int block_deg(const Exponents& e, int lo, int hi) {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += e[i];
    return d;
}

} // namespace

Poly Poly::constant(int nvars, const Rat& c, int tau) {
    Poly p(nvars, tau);
    if (!rat_is_zero(c)) p.terms_[Exponents(nvars, 0)] = c;
    p.normalize_zero_tau();
    return p;
}

Poly Poly::variable(int nvars, int index, int tau) {
    assert(index >= 0 && index < nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e), Rat(1), tau);
}

Poly Poly::monomial(int nvars, Exponents exps, const Rat& c, int tau) {
    assert(static_cast<int>(exps.size()) == nvars);
    Poly p(nvars, tau);
    if (!rat_is_zero(c)) p.terms_[std::move(exps)] = c;
    p.normalize_zero_tau();
    return p;
}

Poly Poly::with_tau_shift(int delta) const {
    Poly p = *this;
    if (!p.terms_.empty()) p.tau_ += delta;
    return p;
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_deg(e));
    return d;
}

std::optional<int> Poly::degree_in(int lo, int hi) const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, block_deg(e, lo, hi));
    return d;
}

bool Poly::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
        if (total_deg(e) != d) return false;
    return true; // zero polynomial is homogeneous of every degree
}

bool Poly::is_homogeneous_in(int lo, int hi, int d) const {
    for (const auto& [e, c] : terms_)
        if (block_deg(e, lo, hi) != d) return false;
    return true;
}

Rat Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    assert(static_cast<int>(e.size()) == nvars_);
    if (rat_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (rat_is_zero(it->second)) terms_.erase(it);
    }
    normalize_zero_tau();
}

Poly Poly::operator-() const {
    Poly p(nvars_, tau_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (tau_ != o.tau_)
        throw TauMismatchError("Poly add: tau " + std::to_string(tau_) + " vs " +
                               std::to_string(o.tau_));
    Poly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    p.normalize_zero_tau();
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly p(nvars_, tau_ + o.tau_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    p.normalize_zero_tau();
    return p;
}

Poly Poly::operator*(const Rat& c) const {
    if (rat_is_zero(c)) return Poly::zero(nvars_);
    Poly p(nvars_, tau_);
    for (const auto& [e, q] : terms_) p.terms_[e] = q * c;
    return p;
}

bool Poly::operator==(const Poly& o) const {
    if (is_zero() && o.is_zero()) return nvars_ == o.nvars_;
    return nvars_ == o.nvars_ && tau_ == o.tau_ && terms_ == o.terms_;
}

Poly Poly::homogenize(int rho) const {
    int d = degree_or(0);
    if (!is_zero() && d > rho)
        throw DegreeCapError("homogenize: rho=" + std::to_string(rho) +
                             " below degree " + std::to_string(d));
    Poly p(nvars_ + 1, tau_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(nvars_ + 1);
        ne[0] = rho - total_deg(e);
        std::copy(e.begin(), e.end(), ne.begin() + 1);
        p.terms_[std::move(ne)] = c;
    }
    return p;
}

Poly Poly::dehomogenize() const { return eval_var_one(0); }

Poly Poly::homogenize_block(int lo, int hi, int pad, int d) const {
    Poly p(nvars_, tau_);
    for (const auto& [e, c] : terms_) {
        int bd = block_deg(e, lo, hi);
        if (bd > d)
            throw DegreeCapError("homogenize_block: block degree " + std::to_string(bd) +
                                 " exceeds " + std::to_string(d));
        Exponents ne = e;
        ne[pad] += d - bd;
        p.add_term(ne, c);
    }
    return p;
}

Poly Poly::map_vars(int new_nvars, const std::vector<int>& index_map) const {
    assert(static_cast<int>(index_map.size()) == nvars_);
    Poly p(new_nvars, tau_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) {
            assert(e[i] == 0 || (index_map[i] >= 0 && index_map[i] < new_nvars));
            if (e[i] != 0) ne[index_map[i]] += e[i];
        }
        p.add_term(ne, c);
    }
    return p;
}

Poly Poly::eval_var_one(int index) const {
    Poly p(nvars_ - 1, tau_);
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != index) ne.push_back(e[i]);
        p.add_term(ne, c);
    }
    p.normalize_zero_tau();
    return p;
}

Poly Poly::derivative(int index) const {
    Poly p(nvars_, tau_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents ne = e;
        ne[index] -= 1;
        p.add_term(ne, c * Rat(e[index]));
    }
    p.normalize_zero_tau();
    return p;
}

Cplx Poly::eval(std::span<const Cplx> point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Cplx acc = 0.0;
    for (const auto& [e, c] : terms_) {
        Cplx t(c.get_d(), 0.0);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    if (tau_ != 0) {
        const Cplx two_pi_i(0.0, 2.0 * M_PI);
        acc *= std::pow(two_pi_i, static_cast<double>(tau_));
    }
    return acc;
}

Rat Poly::eval_rat(std::span<const Rat> point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (i < static_cast<int>(var_names.size())) os << var_names[i];
            else os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    if (tau_ != 0) os << " [tau " << tau_ << "]";
    return os.str();
}

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<std::size_t>(rows) * cols, Poly::zero(nvars)),
      col_degrees_(cols, 0) {}

Poly& PolyMatrix::at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const Poly& PolyMatrix::at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void PolyMatrix::validate() const {
    for (int j = 1; j < cols_; ++j)
        if (col_degrees_[j - 1] < col_degrees_[j])
            throw Error("PolyMatrix: column degrees not sorted non-increasing");
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j).degree_or(0) > col_degrees_[j])
                throw DegreeCapError("PolyMatrix: entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") exceeds declared column degree");
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& o) const {
    assert(cols_ == o.rows_ && nvars_ == o.nvars_);
    PolyMatrix out(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Poly acc = Poly::zero(nvars_);
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && nvars_ == o.nvars_ &&
           col_degrees_ == o.col_degrees_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::homogenize_columns() const {
    PolyMatrix out(rows_, cols_, nvars_ + 1);
    out.col_degrees_ = col_degrees_;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j).homogenize(col_degrees_[j]);
    return out;
}

PolyMatrix PolyMatrix::dehomogenize() const {
    PolyMatrix out(rows_, cols_, nvars_ - 1);
    out.col_degrees_ = col_degrees_;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j).dehomogenize();
    return out;
}

std::vector<Cplx> PolyMatrix::eval(std::span<const Cplx> point) const {
    std::vector<Cplx> vals;
    vals.reserve(entries_.size());
    for (const auto& p : entries_) vals.push_back(p.eval(point));
    return vals;
}

Poly homogenize(const Poly& phi, int rho) { return phi.homogenize(rho); }
Poly dehomogenize(const Poly& p) { return p.dehomogenize(); }
bool is_homogeneous(const Poly& p, int d) { return p.is_homogeneous(d); }

std::vector<Exponents> monomials_up_to(int nvars, int cap) {
    std::vector<Exponents> out;
    if (cap < 0) return out;
    Exponents e(nvars, 0);
    for (int d = 0; d <= cap; ++d) {
        // lexicographic enumeration of compositions of d into nvars parts
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (pos == nvars - 1) {
                e[pos] = rem;
                out.push_back(e);
                return;
            }
            for (int v = d; v >= 0; --v) {
                if (v > rem) continue;
                e[pos] = v;
                rec(pos + 1, rem - v);
            }
        };
        if (nvars == 0) {
            if (d == 0) out.push_back(e);
            continue;
        }
        rec(0, d);
    }
    return out;
}

} // namespace hefdiv
