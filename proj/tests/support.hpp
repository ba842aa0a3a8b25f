#pragma once

// Shared generators and independent oracles for the test suites. Nothing in
// here calls the library routine it is used to check.

#include "lietk/cartan.hpp"
#include "lietk/free_lie.hpp"
#include "lietk/lie_algebra.hpp"
#include "lietk/matrix_lie.hpp"
#include "lietk/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace lietk::test {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

    /// Small rationals, zero about a third of the time.
    Rational scalar(long range = 5) {
        long num = integer(-range, range);
        long den = integer(1, 3);
        return Rational(num, den);
    }

    Vector vector(std::size_t n, long range = 5) {
        Vector v(n);
        for (auto &x : v)
            x = scalar(range);
        return v;
    }

    Matrix matrix(std::size_t r, std::size_t c, long range = 5) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = scalar(range);
        return m;
    }

    Matrix invertible(std::size_t n) {
        while (true) {
            Matrix m = matrix(n, n, 3);
            if (!determinant(m).is_zero())
                return m;
        }
    }

    std::mt19937_64 &engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

/// [b_i, b_j] read straight from the stored constants, no skew handling in the library.
inline Vector raw_basis_bracket(const LieAlgebra &L, std::size_t i, std::size_t j) {
    Vector out(L.dim());
    if (i == j)
        return out;
    const bool swap = i > j;
    auto it = L.constants().find({std::min(i, j), std::max(i, j)});
    if (it == L.constants().end())
        return out;
    for (const auto &[k, c] : it->second)
        out[k] = swap ? -c : c;
    return out;
}

/// Bilinear extension of raw_basis_bracket.
inline Vector raw_bracket(const LieAlgebra &L, const Vector &x, const Vector &y) {
    Vector out(L.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero())
                continue;
            Vector b = raw_basis_bracket(L, i, j);
            for (std::size_t k = 0; k < b.size(); ++k)
                out[k] += x[i] * y[j] * b[k];
        }
    }
    return out;
}

/// Brute-force Jacobi over every basis triple.
inline bool brute_jacobi(const LieAlgebra &L) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector ei(n), ej(n), ek(n);
                ei[i] = ej[j] = ek[k] = Rational(1);
                Vector s = raw_bracket(L, ei, raw_bracket(L, ej, ek));
                Vector t = raw_bracket(L, ej, raw_bracket(L, ek, ei));
                Vector u = raw_bracket(L, ek, raw_bracket(L, ei, ej));
                for (std::size_t m = 0; m < n; ++m)
                    if (!(s[m] + t[m] + u[m]).is_zero())
                        return false;
            }
    return true;
}

/// Structure constants in a matrix basis, solved by plain Gaussian elimination
/// on the flattened basis (independent of MatrixLieAlgebra::coordinates).
inline LieAlgebra algebra_from_matrices(const std::vector<Matrix> &basis, const std::vector<std::string> &names) {
    const std::size_t d = basis.size(), nn = basis.front().rows() * basis.front().cols();
    BracketTable table;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Matrix c = basis[a] * basis[b] - basis[b] * basis[a];
            // columns: flattened basis matrices; rhs: flattened commutator
            Matrix sys(nn, d + 1);
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t e = 0; e < nn; ++e)
                    sys(e, k) = basis[k].entries()[e];
            for (std::size_t e = 0; e < nn; ++e)
                sys(e, d) = c.entries()[e];
            auto red = rref(sys);
            SparseVec v;
            for (std::size_t r = 0; r < red.rank; ++r) {
                if (red.pivot_cols[r] == d)
                    throw std::runtime_error("commutator outside the span");
                if (!red.reduced(r, d).is_zero())
                    v.emplace_back(red.pivot_cols[r], red.reduced(r, d));
            }
            std::sort(v.begin(), v.end(), [](auto &x, auto &y) { return x.first < y.first; });
            if (!v.empty())
                table.emplace(std::make_pair(a, b), v);
        }
    return LieAlgebra(names, table);
}

/// Heisenberg algebra: [x, y] = z.
inline LieAlgebra heisenberg() {
    BracketTable t;
    t[{0, 1}] = {{2, Rational(1)}};
    return LieAlgebra({"x", "y", "z"}, t);
}

inline LieAlgebra classical_abstract(Family f, std::size_t n) { return to_abstract(classical(f, n)); }

/// Root count by closing the simple roots under simple reflections
/// s_i(a) = a - <a, alpha_i^vee> alpha_i, with <a, alpha_i^vee> = sum_j a_j A_ij.
inline std::size_t reflection_closure_count(const CartanMatrix &A) {
    const std::size_t l = A.rank();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> stack;
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<int> r(l, 0);
        r[i] = 1;
        seen.insert(r);
        stack.push_back(r);
    }
    while (!stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < l; ++i) {
            int p = 0;
            for (std::size_t j = 0; j < l; ++j)
                p += a[j] * A(i, j);
            auto b = a;
            b[i] -= p;
            if (seen.insert(b).second)
                stack.push_back(b);
        }
        if (seen.size() > 100000)
            throw std::runtime_error("reflection closure does not terminate");
    }
    return seen.size();
}

/// Lyndon words by brute force: primitive words strictly smaller than all rotations.
inline std::vector<Word> brute_lyndon(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    Word w(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t s = 1; s < n && ok; ++s) {
            Word rot(w.begin() + s, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + s);
            if (!(w < rot))
                ok = false;
        }
        if (ok)
            out.push_back(w);
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == k - 1)
            w[--pos] = 0;
        if (pos == 0)
            break;
        ++w[pos - 1];
    }
    return out;
}

/// Witt numbers from k^n = sum_{d | n} d W(d), without the Moebius function.
inline std::vector<mpz_class> witt_by_recursion(std::size_t k, std::size_t nmax) {
    std::vector<mpz_class> W(nmax + 1, 0);
    for (std::size_t n = 1; n <= nmax; ++n) {
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), k, n);
        for (std::size_t d = 1; d < n; ++d)
            if (n % d == 0)
                total -= mpz_class(static_cast<unsigned long>(d)) * W[d];
        W[n] = total / static_cast<unsigned long>(n);
    }
    return W;
}

/// Free associative expansion of an arbitrary bracket tree given as nested
/// letters, used to check free_bracket against the rewriting it promises.
inline AssocPoly commutator_poly(const AssocPoly &p, const AssocPoly &q) {
    AssocPoly out;
    auto add = [&](const Word &w, const Rational &c) {
        auto &slot = out[w];
        slot += c;
        if (slot.is_zero())
            out.erase(w);
    };
    for (const auto &[u, a] : p)
        for (const auto &[v, b] : q) {
            Word uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            add(uv, a * b);
            add(vu, -(a * b));
        }
    return out;
}

inline Vector unit(std::size_t n, std::size_t i) { return unit_vector(n, i); }

inline LieSubspace span_of_units(const LieAlgebra &L, const std::vector<std::size_t> &idx) {
    std::vector<Vector> v;
    for (auto i : idx)
        v.push_back(unit_vector(L.dim(), i));
    return lie_subspace(L, Subspace::span(L.dim(), v));
}

} // namespace lietk::test
