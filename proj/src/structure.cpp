#include "lietk/structure.hpp"

#include "lietk/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lietk {

const char *to_string(SubspaceKind kind) {
    switch (kind) {
    case SubspaceKind::Subspace: return "subspace";
    case SubspaceKind::Subalgebra: return "subalgebra";
    case SubspaceKind::Ideal: return "ideal";
    }
    return "unknown";
}

namespace {

void require_ambient(const LieAlgebra &L, const Subspace &s) {
    if (s.ambient_dim() != L.dim())
        fail(ErrorKind::DimensionMismatch, "subspace of Q^" + std::to_string(s.ambient_dim()) +
                                               " in an algebra of dimension " +
                                               std::to_string(L.dim()));
}

/// [b_i, v] as a dense vector.
Vector bracket_with_basis(const LieAlgebra &L, std::size_t i, const Vector &v) {
    Vector out(L.dim());
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero())
            L.accumulate(i, j, v[j], out);
    return out;
}

/// First (basis index, space row) pair with [b_i, s] outside the space.
std::optional<std::pair<std::size_t, std::size_t>> first_escape(const LieAlgebra &L, const Subspace &s) {
    const auto &rows = s.basis();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (!s.contains(bracket_with_basis(L, i, rows[r])))
                return std::make_pair(i, r);
    return std::nullopt;
}

void require_ideal(const LieAlgebra &L, const LieSubspace &I, const char *what) {
    require_ambient(L, I.space);
    if (I.is_ideal())
        return;
    if (auto esc = first_escape(L, I.space))
        fail(ErrorKind::NotIdeal, std::string(what) + " is not an ideal: [" +
                                      L.basis_names()[esc->first] + ", basis vector " +
                                      std::to_string(esc->second) + "] leaves it");
}

} // namespace

SubspaceKind classify_subspace(const LieAlgebra &L, const Subspace &s) {
    require_ambient(L, s);
    if (!first_escape(L, s))
        return SubspaceKind::Ideal;
    const auto &rows = s.basis();
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b)
            if (!s.contains(L.bracket(rows[a], rows[b])))
                return SubspaceKind::Subspace;
    return SubspaceKind::Subalgebra;
}

LieSubspace lie_subspace(const LieAlgebra &L, Subspace s) {
    auto kind = classify_subspace(L, s);
    return LieSubspace{std::move(s), kind};
}

LieSubspace top(const LieAlgebra &L) { return {Subspace::full(L.dim()), SubspaceKind::Ideal}; }

LieSubspace bottom(const LieAlgebra &L) { return {Subspace(L.dim()), SubspaceKind::Ideal}; }

LieSubspace ideal_bracket(const LieAlgebra &L, const LieSubspace &I, const LieSubspace &N) {
    require_ideal(L, I, "left factor");
    require_ideal(L, N, "right factor");
    Subspace out(L.dim());
    for (const auto &x : I.space.basis())
        for (const auto &y : N.space.basis())
            out.absorb(L.bracket(x, y));
    return {std::move(out), SubspaceKind::Ideal};
}

LieSubspace ideal_closure(const LieAlgebra &L, const Subspace &s) {
    require_ambient(L, s);
    Subspace acc = s;
    std::vector<Vector> frontier = s.basis();
    while (!frontier.empty() && !acc.is_full()) {
        std::vector<Vector> next;
        for (const auto &f : frontier)
            for (std::size_t i = 0; i < L.dim() && !acc.is_full(); ++i) {
                Vector w = bracket_with_basis(L, i, f);
                if (acc.absorb(w))
                    next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return {std::move(acc), SubspaceKind::Ideal};
}

LieSubspace subalgebra_closure(const LieAlgebra &L, const Subspace &s) {
    require_ambient(L, s);
    Subspace acc = s;
    std::vector<Vector> gens = s.basis();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            Vector w = L.bracket(gens[b], gens[a]);
            if (acc.absorb(w))
                gens.push_back(std::move(w));
        }
    return lie_subspace(L, std::move(acc));
}

std::vector<std::size_t> SeriesReport::dims() const {
    std::vector<std::size_t> d;
    for (const auto &t : terms)
        d.push_back(t.dim());
    return d;
}

namespace {

template <class Step>
SeriesReport run_series(Subspace start, std::size_t max_k, Step step) {
    SeriesReport rep;
    rep.terms.push_back(std::move(start));
    for (std::size_t k = 0; k < max_k; ++k) {
        Subspace next = step(rep.terms.back());
        if (next == rep.terms.back())
            break;
        rep.terms.push_back(std::move(next));
    }
    rep.stabilised_at = rep.terms.size() - 1;
    rep.reaches_bottom = rep.terms.back().is_zero();
    return rep;
}

} // namespace

SeriesReport derived_series(const LieAlgebra &L, const LieSubspace &I, std::size_t max_k) {
    require_ideal(L, I, "series start");
    return run_series(I.space, max_k, [&L](const Subspace &t) {
        LieSubspace term{t, SubspaceKind::Ideal};
        return ideal_bracket(L, term, term).space;
    });
}

SeriesReport derived_series(const LieAlgebra &L) { return derived_series(L, top(L), L.dim() + 1); }

SeriesReport lower_central_series(const LieAlgebra &L, std::size_t max_k) {
    const LieSubspace all = top(L);
    return run_series(all.space, max_k, [&L, &all](const Subspace &t) {
        return ideal_bracket(L, all, LieSubspace{t, SubspaceKind::Ideal}).space;
    });
}

SeriesReport lower_central_series(const LieAlgebra &L) { return lower_central_series(L, L.dim() + 1); }

Witness is_solvable(const LieAlgebra &L) {
    auto s = derived_series(L);
    return {s.reaches_bottom, s.terms.size() - 1};
}

Witness is_nilpotent(const LieAlgebra &L) {
    auto s = lower_central_series(L);
    return {s.reaches_bottom, s.terms.size() - 1};
}

bool is_abelian(const LieAlgebra &L) { return L.constants().empty(); }

LieSubspace center(const LieAlgebra &L) { return {centralizer(L, Subspace::full(L.dim())), SubspaceKind::Ideal}; }

Subspace normalizer(const LieAlgebra &L, const Subspace &S) {
    require_ambient(L, S);
    const std::size_t n = L.dim();
    std::vector<Vector> rows;
    for (const auto &s : S.basis()) {
        // column i holds the part of [b_i, s] outside S
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < n; ++i)
            cols.push_back(S.reduce(bracket_with_basis(L, i, s)));
        Matrix blk = Matrix::from_columns(cols, n);
        for (std::size_t r = 0; r < n; ++r)
            if (!is_zero(blk.row(r)))
                rows.push_back(blk.row_vector(r));
    }
    if (rows.empty())
        return Subspace::full(n);
    return kernel(Matrix::from_rows(rows, n));
}

Subspace centralizer(const LieAlgebra &L, const Subspace &S) {
    require_ambient(L, S);
    const std::size_t n = L.dim();
    std::vector<Vector> rows;
    for (const auto &s : S.basis()) {
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < n; ++i)
            cols.push_back(bracket_with_basis(L, i, s));
        Matrix blk = Matrix::from_columns(cols, n);
        for (std::size_t r = 0; r < n; ++r)
            if (!is_zero(blk.row(r)))
                rows.push_back(blk.row_vector(r));
    }
    if (rows.empty())
        return Subspace::full(n);
    return kernel(Matrix::from_rows(rows, n));
}

Matrix killing_form(const LieAlgebra &L) {
    const std::size_t n = L.dim();
    // cols[i][m] = [b_i, b_m], i.e. column m of ad(b_i)
    std::vector<std::vector<SparseVec>> cols(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
            cols[i][m] = L.bracket_basis(i, m);
    auto coeff = [](const SparseVec &v, std::size_t m) -> const Rational * {
        auto it = std::lower_bound(v.begin(), v.end(), m,
                                   [](const auto &p, std::size_t key) { return p.first < key; });
        return it != v.end() && it->first == m ? &it->second : nullptr;
    };
    Matrix K(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational t;
            for (std::size_t m = 0; m < n; ++m)
                for (const auto &[k, c] : cols[i][m])
                    if (const Rational *d = coeff(cols[j][k], m))
                        t += c * *d;
            K(i, j) = t;
            K(j, i) = t;
        }
    return K;
}

LieSubspace radical(const LieAlgebra &L) {
    const std::size_t n = L.dim();
    const LieSubspace derived = ideal_bracket(L, top(L), top(L));
    const Matrix K = killing_form(L);
    std::vector<Vector> rows;
    for (const auto &d : derived.space.basis())
        rows.push_back(K.transpose().apply(d));
    Subspace rad = rows.empty() ? Subspace::full(n) : kernel(Matrix::from_rows(rows, n));
    if (first_escape(L, rad))
        fail(ErrorKind::InternalDefect, "computed radical is not an ideal");
    LieSubspace out{std::move(rad), SubspaceKind::Ideal};
    if (!derived_series(L, out, n + 1).reaches_bottom)
        fail(ErrorKind::InternalDefect, "computed radical is not solvable");
    return out;
}

bool is_semisimple(const LieAlgebra &L) { return radical(L).space.is_zero(); }

bool is_simple(const LieAlgebra &L) {
    if (is_abelian(L) || !is_semisimple(L))
        return false;
    // Only basis vectors are tried, so a semisimple algebra in a basis whose
    // every vector straddles two factors would slip through.
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        if (!ideal_closure(L, Subspace::span(n, {unit_vector(n, i)})).space.is_full())
            return false;
    return true;
}

LieAlgebra direct_sum(const LieAlgebra &L1, const LieAlgebra &L2) {
    const std::size_t n1 = L1.dim();
    std::vector<std::string> names;
    std::set<std::string> seen(L1.basis_names().begin(), L1.basis_names().end());
    bool clash = std::any_of(L2.basis_names().begin(), L2.basis_names().end(),
                             [&seen](const std::string &s) { return seen.count(s) > 0; });
    for (const auto &s : L1.basis_names())
        names.push_back(clash ? s + "_1" : s);
    for (const auto &s : L2.basis_names())
        names.push_back(clash ? s + "_2" : s);
    BracketTable table = L1.constants();
    for (const auto &[key, vec] : L2.constants()) {
        SparseVec shifted;
        for (const auto &[k, c] : vec)
            shifted.emplace_back(k + n1, c);
        table.emplace(std::make_pair(key.first + n1, key.second + n1), std::move(shifted));
    }
    LieAlgebra out(std::move(names), std::move(table));
    return L1.verified() && L2.verified() ? assume_verified(out) : out;
}

Quotient quotient(const LieAlgebra &L, const LieSubspace &I) {
    require_ideal(L, I, "quotient kernel");
    const std::size_t n = L.dim();
    std::vector<bool> pivot(n, false);
    for (auto p : I.space.pivots())
        pivot[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < n; ++c)
        if (!pivot[c])
            keep.push_back(c);
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t q = 0; q < keep.size(); ++q)
        pos[keep[q]] = q;
    auto project = [&](const Vector &v) {
        Vector r = I.space.reduce(v);
        Vector out(keep.size());
        for (std::size_t q = 0; q < keep.size(); ++q)
            out[q] = r[keep[q]];
        return out;
    };
    Matrix P(keep.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector col = project(unit_vector(n, j));
        for (std::size_t q = 0; q < keep.size(); ++q)
            P(q, j) = col[q];
    }
    std::vector<std::string> names;
    for (auto c : keep)
        names.push_back(L.basis_names()[c]);
    BracketTable table;
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            Vector w = project(to_dense(L.bracket_basis(keep[a], keep[b]), n));
            SparseVec s = to_sparse(w);
            if (!s.empty())
                table.emplace(std::make_pair(a, b), std::move(s));
        }
    LieAlgebra Q(std::move(names), std::move(table));
    return {L.verified() ? assume_verified(Q) : Q, std::move(P)};
}

LieAlgebra restrict(const LieAlgebra &L, const LieSubspace &S) {
    require_ambient(L, S.space);
    if (!S.is_subalgebra() && classify_subspace(L, S.space) == SubspaceKind::Subspace)
        fail(ErrorKind::NotClosed, "cannot restrict to a subspace that is not closed under the bracket");
    const auto &rows = S.space.basis();
    std::vector<std::string> names;
    for (auto p : S.space.pivots())
        names.push_back(L.basis_names()[p]);
    BracketTable table;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            Vector w = L.bracket(rows[a], rows[b]);
            if (!S.space.contains(w))
                fail(ErrorKind::NotClosed, "bracket of basis vectors " + std::to_string(a) + " and " +
                                               std::to_string(b) + " leaves the subspace");
            SparseVec s = to_sparse(S.space.coordinates(w));
            if (!s.empty())
                table.emplace(std::make_pair(a, b), std::move(s));
        }
    LieAlgebra R(std::move(names), std::move(table));
    return L.verified() ? assume_verified(R) : R;
}

} // namespace lietk
