#include "hefdiv/multilinear.hpp"

#include <algorithm>
#include <cassert>

namespace hefdiv {

std::vector<LambdaIndex> lambda_subsets(int m, int k) {
    std::vector<LambdaIndex> out;
    if (k < 0 || k > m) return out;
    LambdaIndex cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int j = next; j <= m; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<SymIndex> sym_multisets(int r, int s) {
    std::vector<SymIndex> out;
    if (s < 0) return out;
    SymIndex cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        for (int j = next; j <= r; ++j) {
            cur.push_back(j);
            rec(j);
            cur.pop_back();
        }
    };
    if (r >= 1 || s == 0) rec(1);
    return out;
}

bool lambda_remove(const LambdaIndex& I, int j, LambdaIndex& out, int& sign) {
    auto it = std::find(I.begin(), I.end(), j);
    if (it == I.end()) return false;
    int pos = static_cast<int>(it - I.begin()); // 0-based
    sign = (pos % 2 == 0) ? 1 : -1;
    out.clear();
    out.reserve(I.size() - 1);
    for (int v : I)
        if (v != j) out.push_back(v);
    return true;
}

std::vector<ContractionTerm> wedge_contract(const std::vector<Poly>& p_row,
                                            const LambdaIndex& idx) {
    std::vector<ContractionTerm> out;
    out.reserve(idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
        int j = idx[t];
        assert(j >= 1 && j <= static_cast<int>(p_row.size()));
        LambdaIndex rem;
        rem.reserve(idx.size() - 1);
        for (std::size_t u = 0; u < idx.size(); ++u)
            if (u != t) rem.push_back(idx[u]);
        out.push_back({std::move(rem), p_row[j - 1], (t % 2 == 0) ? 1 : -1});
    }
    return out;
}

Poly VarLayout::embed_zeta(const Poly& p) const {
    int expect = projective ? n + 1 : n;
    assert(p.nvars() == expect);
    (void)expect;
    std::vector<int> map(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) map[i] = i; // zeta block is a prefix either way
    return p.map_vars(nvars(), map);
}

Poly VarLayout::embed_z(const Poly& p) const {
    assert(p.nvars() == n);
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[i] = z_var(i + 1);
    return p.map_vars(nvars(), map);
}

void Form::add(const std::vector<int>& J, const Poly& c) {
    assert(static_cast<int>(J.size()) == degree);
    if (c.is_zero()) return;
    auto it = terms.find(J);
    if (it == terms.end()) {
        terms[J] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Form Form::operator+(const Form& o) const {
    assert(degree == o.degree);
    Form out = *this;
    for (const auto& [J, c] : o.terms) out.add(J, c);
    return out;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
    Form out{degree, {}};
    for (const auto& [J, c] : terms) out.terms[J] = -c;
    return out;
}

Form Form::operator*(const Rat& c) const {
    Form out{degree, {}};
    if (rat_is_zero(c)) return out;
    for (const auto& [J, p] : terms) out.terms[J] = p * c;
    return out;
}

bool Form::operator==(const Form& o) const { return degree == o.degree && terms == o.terms; }

std::optional<int> Form::coeff_degree() const {
    std::optional<int> d;
    for (const auto& [J, c] : terms) {
        auto cd = c.degree();
        if (cd && (!d || *cd > *d)) d = cd;
    }
    return d;
}

int Form::tau() const {
    for (const auto& [J, c] : terms) return c.tau();
    return 0;
}

namespace {

// Merge two strictly increasing multi-indices; sign counts the inversions.
// Returns false on overlap.
bool merge_indices(const std::vector<int>& a, const std::vector<int>& b,
                   std::vector<int>& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    int inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

} // namespace

Form wedge(const Form& a, const Form& b) {
    Form out{a.degree + b.degree, {}};
    std::vector<int> J;
    int sign;
    for (const auto& [Ja, ca] : a.terms) {
        for (const auto& [Jb, cb] : b.terms) {
            if (!merge_indices(Ja, Jb, J, sign)) continue;
            Poly c = ca * cb;
            out.add(J, sign > 0 ? c : -c);
        }
    }
    return out;
}

Form contract(const Form& f, const std::function<Poly(int)>& factor, int tau_shift) {
    Form out{f.degree - 1, {}};
    assert(f.degree >= 1);
    std::vector<int> rem;
    for (const auto& [J, c] : f.terms) {
        for (std::size_t t = 0; t < J.size(); ++t) {
            rem.clear();
            for (std::size_t u = 0; u < J.size(); ++u)
                if (u != t) rem.push_back(J[u]);
            Poly term = (c * factor(J[t])).with_tau_shift(tau_shift);
            if (t % 2 == 1) term = -term;
            out.add(rem, term);
        }
    }
    return out;
}

FormMap::FormMap(int src, int dst, int s, int r, int c, VarLayout lay)
    : src_level(src), dst_level(dst), form_degree(s), rows(r), cols(c), layout(lay),
      entries(static_cast<std::size_t>(r) * c, Form::zero(s)) {}

FormMap FormMap::identity(int level, int rank, VarLayout lay) {
    FormMap m(level, level, 0, rank, rank, lay);
    for (int i = 0; i < rank; ++i)
        m.at(i, i).add({}, Poly::constant(lay.nvars(), Rat(1)));
    return m;
}

bool FormMap::is_zero() const {
    for (const auto& f : entries)
        if (!f.is_zero()) return false;
    return true;
}

FormMap FormMap::operator+(const FormMap& o) const {
    assert(rows == o.rows && cols == o.cols && form_degree == o.form_degree);
    FormMap out = *this;
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.entries[i] = out.entries[i] + o.entries[i];
    return out;
}

FormMap FormMap::operator-(const FormMap& o) const {
    assert(rows == o.rows && cols == o.cols && form_degree == o.form_degree);
    FormMap out = *this;
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.entries[i] = out.entries[i] - o.entries[i];
    return out;
}

bool FormMap::operator==(const FormMap& o) const {
    return src_level == o.src_level && dst_level == o.dst_level &&
           form_degree == o.form_degree && rows == o.rows && cols == o.cols &&
           layout == o.layout && entries == o.entries;
}

FormMap graded_compose(const FormMap& a, const FormMap& b) {
    assert(a.cols == b.rows);
    assert(a.layout == b.layout);
    FormMap out(b.src_level, a.dst_level, a.form_degree + b.form_degree, a.rows, b.cols,
                a.layout);
    const int parity_a = ((a.src_level - a.dst_level) % 2 + 2) % 2;
    const bool flip = (parity_a * b.form_degree) % 2 != 0;
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < b.cols; ++j) {
            Form acc = Form::zero(out.form_degree);
            for (int k = 0; k < a.cols; ++k) {
                const Form& fa = a.at(i, k);
                const Form& fb = b.at(k, j);
                if (fa.is_zero() || fb.is_zero()) continue;
                acc = acc + wedge(fa, fb);
            }
            out.at(i, j) = flip ? -acc : acc;
        }
    }
    return out;
}

FormMap delta_h_step(const std::vector<Form>& h, int m, int level_j, VarLayout lay) {
    auto src = lambda_subsets(m, level_j);
    auto dst = lambda_subsets(m, level_j - 1);
    std::map<LambdaIndex, int> dst_pos;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_pos[dst[i]] = static_cast<int>(i);

    FormMap out(level_j, level_j - 1, 1, static_cast<int>(dst.size()),
                static_cast<int>(src.size()), lay);
    for (std::size_t b = 0; b < src.size(); ++b) {
        const LambdaIndex& J = src[b];
        for (std::size_t t = 0; t < J.size(); ++t) {
            LambdaIndex rem;
            for (std::size_t u = 0; u < J.size(); ++u)
                if (u != t) rem.push_back(J[u]);
            const Form& hj = h[J[t] - 1];
            Form term = (t % 2 == 0) ? hj : -hj;
            int row = dst_pos.at(rem);
            out.at(row, static_cast<int>(b)) = out.at(row, static_cast<int>(b)) + term;
        }
    }
    return out;
}

FormMap delta_form(const std::vector<Form>& h, int m, int power, const FormMap& target) {
    assert(power >= 0);
    FormMap acc = target;
    for (int step = 0; step < power; ++step) {
        int j = acc.dst_level;
        if (j - 1 < 0 || j > m) {
            // exterior slots exhausted: the zero map, not an error
            return FormMap(target.src_level, acc.dst_level - (power - step), 0, 0, target.cols,
                           target.layout);
        }
        acc = graded_compose(delta_h_step(h, m, j, acc.layout), acc);
    }
    return acc;
}

} // namespace hefdiv
