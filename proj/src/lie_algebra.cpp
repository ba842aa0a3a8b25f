#include "lietk/lie_algebra.hpp"

#include "lietk/error.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lietk {

SparseVec to_sparse(const Vector &v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            s.emplace_back(i, v[i]);
    return s;
}

Vector to_dense(const SparseVec &v, std::size_t n) {
    Vector d(n);
    for (const auto &[i, c] : v)
        d.at(i) = c;
    return d;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, BracketTable constants) {
    auto d = std::make_shared<Data>();
    const std::size_t n = basis_names.size();
    d->names = std::move(basis_names);
    d->table = std::move(constants);
    d->lookup.assign(n * n, nullptr);
    for (auto it = d->table.begin(); it != d->table.end();) {
        auto [i, j] = it->first;
        if (i >= j || j >= n) {
            std::ostringstream os;
            os << "bracket key (" << i << "," << j << ") must satisfy i < j < " << n;
            fail(ErrorKind::InvalidArgument, os.str());
        }
        const auto &vec = it->second;
        for (std::size_t t = 0; t < vec.size(); ++t) {
            if (vec[t].first >= n || vec[t].second.is_zero() ||
                (t > 0 && vec[t - 1].first >= vec[t].first)) {
                std::ostringstream os;
                os << "bracket (" << i << "," << j
                   << ") needs strictly increasing in-range indices and nonzero coefficients";
                fail(ErrorKind::InvalidArgument, os.str());
            }
        }
        if (vec.empty()) {
            it = d->table.erase(it);
            continue;
        }
        d->lookup[i * n + j] = &it->second;
        ++it;
    }
    data_ = std::move(d);
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    return assume_verified(LieAlgebra(std::move(names), {}));
}

const SparseVec *LieAlgebra::basis_bracket(std::size_t i, std::size_t j, bool &negate) const {
    const std::size_t n = dim();
    if (i == j)
        return nullptr;
    if (i < j) {
        negate = false;
        return data_->lookup[i * n + j];
    }
    negate = true;
    return data_->lookup[j * n + i];
}

void LieAlgebra::accumulate(std::size_t i, std::size_t j, const Rational &coeff, Vector &acc) const {
    bool neg = false;
    const SparseVec *v = basis_bracket(i, j, neg);
    if (!v || coeff.is_zero())
        return;
    Rational c = neg ? -coeff : coeff;
    for (const auto &[k, x] : *v)
        acc[k] += c * x;
}

Vector LieAlgebra::bracket(const Vector &x, const Vector &y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n)
        fail(ErrorKind::DimensionMismatch, "bracket arguments must have length " + std::to_string(n));
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || y[j].is_zero())
                continue;
            accumulate(i, j, x[i] * y[j], out);
        }
    }
    return out;
}

SparseVec LieAlgebra::bracket(const SparseVec &x, const SparseVec &y) const {
    SparseVec terms;
    for (const auto &[i, a] : x)
        for (const auto &[j, b] : y) {
            bool neg = false;
            const SparseVec *v = basis_bracket(i, j, neg);
            if (!v)
                continue;
            Rational c = neg ? -(a * b) : a * b;
            for (const auto &[k, s] : *v)
                terms.emplace_back(k, c * s);
        }
    std::sort(terms.begin(), terms.end(),
              [](const auto &l, const auto &r) { return l.first < r.first; });
    SparseVec out;
    for (auto &[k, c] : terms) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, std::move(c));
        if (out.back().second.is_zero())
            out.pop_back();
    }
    return out;
}

SparseVec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    bool neg = false;
    const SparseVec *v = basis_bracket(i, j, neg);
    if (!v)
        return {};
    if (!neg)
        return *v;
    SparseVec out = *v;
    for (auto &[k, c] : out)
        c = -c;
    return out;
}

namespace {

SparseVec add(const SparseVec &a, const SparseVec &b, const Rational &sb = 1) {
    SparseVec out;
    std::size_t p = 0, q = 0;
    while (p < a.size() || q < b.size()) {
        if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
            out.push_back(a[p++]);
        } else if (p == a.size() || b[q].first < a[p].first) {
            out.emplace_back(b[q].first, sb * b[q].second);
            ++q;
        } else {
            Rational s = a[p].second + sb * b[q].second;
            if (!s.is_zero())
                out.emplace_back(a[p].first, s);
            ++p;
            ++q;
        }
    }
    return out;
}

SparseVec unit(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

TripleVerdict evaluate_triple(const LieAlgebra &L, std::size_t i, std::size_t j, std::size_t k) {
    const SparseVec x = unit(i), y = unit(j), z = unit(k);
    // Each term is evaluated on its own so the three verdicts stay independent.
    SparseVec yz = L.bracket(y, z);
    SparseVec xy = L.bracket(x, y);
    SparseVec xz = L.bracket(x, z);
    SparseVec zx = L.bracket(z, x);
    SparseVec x_yz = L.bracket(x, yz);
    SparseVec xy_z = L.bracket(xy, z);
    SparseVec y_xz = L.bracket(y, xz);
    SparseVec y_zx = L.bracket(y, zx);
    SparseVec z_xy = L.bracket(z, xy);

    TripleVerdict v;
    v.i = i;
    v.j = j;
    v.k = k;
    v.leibniz = x_yz == add(xy_z, y_xz);
    v.jacobi = add(add(x_yz, y_zx), z_xy).empty();
    v.normal_form = xy_z == add(x_yz, y_xz, Rational(-1));
    return v;
}

void record(AxiomReport &rep, const TripleVerdict &v) {
    ++rep.triples_checked;
    if (v.leibniz != v.jacobi || v.jacobi != v.normal_form)
        rep.forms_agree = false;
    if (!v.leibniz || !v.jacobi || !v.normal_form) {
        rep.ok = false;
        rep.failures.push_back(v);
    }
}

} // namespace

AxiomReport check_axioms(const LieAlgebra &L, CheckMode mode, std::uint64_t seed, std::size_t samples) {
    const std::size_t n = L.dim();
    AxiomReport rep;
    bool full = mode == CheckMode::Full || (mode == CheckMode::Automatic && n <= 64);
    if (full) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    record(rep, evaluate_triple(L, i, j, k));
        return rep;
    }
    rep.sampled = true;
    if (n == 0)
        return rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        record(rep, evaluate_triple(L, i, j, k));
    }
    return rep;
}

LieAlgebra verify(const LieAlgebra &L) {
    if (L.verified())
        return L;
    auto rep = check_axioms(L, CheckMode::Full);
    if (!rep.ok) {
        const auto &f = rep.failures.front();
        const auto &nm = L.basis_names();
        fail(ErrorKind::NotClosed, "Jacobi identity fails on basis triple (" + nm[f.i] + ", " +
                                       nm[f.j] + ", " + nm[f.k] + ")");
    }
    return assume_verified(L);
}

LieAlgebra assume_verified(const LieAlgebra &L) {
    LieAlgebra out = L;
    out.verified_ = true;
    return out;
}

Matrix ad(const LieAlgebra &L, const Vector &x) {
    const std::size_t n = L.dim();
    if (x.size() != n)
        fail(ErrorKind::DimensionMismatch, "ad argument must have length " + std::to_string(n));
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            bool neg = false;
            const SparseVec *v = L.basis_bracket(i, j, neg);
            if (!v)
                continue;
            Rational c = neg ? -x[i] : x[i];
            for (const auto &[k, s] : *v)
                m(k, j) += c * s;
        }
    }
    return m;
}

Matrix ad_basis(const LieAlgebra &L, std::size_t i) { return ad(L, unit_vector(L.dim(), i)); }

} // namespace lietk
