#include "lietk/weights.hpp"

#include "lietk/error.hpp"

#include <algorithm>
#include <map>

namespace lietk {

namespace {

void trim(Poly &p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

int degree(const Poly &p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly &p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(Rational(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

// Returns quotient; r becomes the remainder.
Poly divide(Poly &r, const Poly &d) {
    trim(r);
    if (d.empty())
        fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly q(std::max(0, degree(r) - degree(d) + 1));
    while (!r.empty() && degree(r) >= degree(d)) {
        const std::size_t shift = static_cast<std::size_t>(degree(r) - degree(d));
        Rational c = r.back() / d.back();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i)
            r[i + shift] -= c * d[i];
        trim(r);
    }
    return q;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = a;
        divide(r, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto &c : a)
            c /= lead;
    }
    return a;
}

Rational evaluate(const Poly &p, const Rational &x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            factors.emplace_back(p, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (const auto &[p, e] : factors) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Combination of algebra basis names, e.g. "h1 + 2*h2".
std::string describe(const LieAlgebra &L, const Vector &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        if (!s.empty())
            s += v[i].sign() < 0 ? " - " : " + ";
        else if (v[i].sign() < 0)
            s += "-";
        Rational mag = v[i].sign() < 0 ? -v[i] : v[i];
        if (!mag.is_one())
            s += mag.str() + "*";
        s += L.basis_names()[i];
    }
    return s.empty() ? "0" : s;
}

bool chi_less(const WeightFunction &a, const WeightFunction &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

Poly charpoly(const Matrix &m) {
    if (!m.is_square())
        fail(ErrorKind::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix h = m;
    // similarity transform to upper Hessenberg form
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h(piv, j).is_zero())
            ++piv;
        if (piv == n)
            continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(h(piv, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r)
                std::swap(h(r, piv), h(r, j + 1));
        }
        const Rational p = h(j + 1, j);
        for (std::size_t k = j + 2; k < n; ++k) {
            if (h(k, j).is_zero())
                continue;
            const Rational f = h(k, j) / p;
            for (std::size_t c = 0; c < n; ++c)
                if (!h(j + 1, c).is_zero())
                    h(k, c) -= f * h(j + 1, c);
            for (std::size_t r = 0; r < n; ++r)
                if (!h(r, k).is_zero())
                    h(r, j + 1) += f * h(r, k);
        }
    }
    // p_k = (x - h_kk) p_(k-1) - sum_i h_ik (h_(i+1,i) ... h_(k,k-1)) p_(i-1), 1-based
    std::vector<Poly> p{Poly{Rational(1)}};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly next(k + 1);
        const Poly &prev = p[k - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            next[d + 1] += prev[d];
            next[d] -= h(k - 1, k - 1) * prev[d];
        }
        Rational prod(1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (prod.is_zero())
                break;
            const Rational c = h(i - 1, k - 1) * prod;
            if (!c.is_zero())
                for (std::size_t d = 0; d < p[i - 1].size(); ++d)
                    next[d] -= c * p[i - 1][d];
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

RationalSpectrum rational_roots(const Poly &poly) {
    Poly p = poly;
    trim(p);
    if (p.empty())
        fail(ErrorKind::InvalidArgument, "the zero polynomial has no finite root set");
    RationalSpectrum out;
    Poly rem = p;
    Poly s = divide(rem, gcd(p, derivative(p)));
    if (s.size() > 1 && s[0].is_zero()) {
        out.eigenvalues.push_back(Rational(0));
        s.erase(s.begin());
    }
    const int want = degree(s);
    if (want > 0) {
        mpz_class den = 1;
        for (const auto &c : s)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
        const Rational scale(mpq_class(den, 1));
        const mpz_class a0 = (s.front() * scale).numerator(), an = (s.back() * scale).numerator();
        const auto dp = divisors(a0), dq = divisors(an);
        int found = 0;
        for (const auto &u : dp)
            for (const auto &v : dq) {
                if (gcd(u, v) != 1)
                    continue;
                for (int sign : {1, -1}) {
                    Rational r(mpq_class(sign * u, v));
                    if (evaluate(s, r).is_zero()) {
                        out.eigenvalues.push_back(r);
                        ++found;
                    }
                }
            }
        out.split = found == want;
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

RationalSpectrum rational_spectrum(const Matrix &m) { return rational_roots(charpoly(m)); }

Subspace generalized_eigenspace(const Matrix &f, const Rational &lambda) {
    if (!f.is_square())
        fail(ErrorKind::DimensionMismatch, "generalised eigenspace of a non-square matrix");
    const std::size_t n = f.rows();
    Matrix g = f;
    for (std::size_t i = 0; i < n; ++i)
        g(i, i) -= lambda;
    Subspace K(n);
    while (true) {
        // {v : g v in K} is the kernel of ann(K) * g
        Subspace next = kernel(K.annihilator().basis_matrix() * g);
        if (next.dim() == K.dim())
            return K;
        K = std::move(next);
    }
}

Subspace pre_weight_space(const Representation &rep, const std::vector<Vector> &H_basis,
                          const WeightFunction &chi) {
    if (chi.size() != H_basis.size())
        fail(ErrorKind::DimensionMismatch, "weight has " + std::to_string(chi.size()) +
                                               " values for " + std::to_string(H_basis.size()) +
                                               " basis vectors of H");
    Subspace acc = Subspace::full(rep.module_dim());
    for (std::size_t k = 0; k < H_basis.size() && !acc.is_zero(); ++k)
        acc = intersect(acc, generalized_eigenspace(rep.act(H_basis[k]), chi[k]));
    return acc;
}

void require_nilpotent_subalgebra(const LieAlgebra &L, const LieSubspace &H) {
    if (H.space.ambient_dim() != L.dim())
        fail(ErrorKind::DimensionMismatch, "subalgebra lives in a space of the wrong dimension");
    if (!is_nilpotent(restrict(L, H)))
        fail(ErrorKind::NotNilpotent, "the acting subalgebra is not nilpotent");
}

namespace {

void certify_stable(const Representation &rep, const std::vector<Vector> &H_basis, const Subspace &space) {
    for (const auto &h : H_basis) {
        Matrix a = rep.act(h);
        for (const auto &v : space.basis())
            if (!space.contains(a.apply(v)))
                fail(ErrorKind::InternalDefect, "weight space is not stable under H");
    }
}

} // namespace

WeightSpaceResult weight_space(const Representation &rep, const LieSubspace &H, const WeightFunction &chi) {
    require_nilpotent_subalgebra(rep.algebra(), H);
    const auto &Hb = H.space.basis();
    WeightSpaceResult r{chi, pre_weight_space(rep, Hb, chi), false};
    certify_stable(rep, Hb, r.space);
    r.is_weight = !r.space.is_zero();
    return r;
}

std::vector<WeightSpaceResult> weight_decomposition(const Representation &rep, const LieSubspace &H) {
    const LieAlgebra &L = rep.algebra();
    require_nilpotent_subalgebra(L, H);
    const auto &Hb = H.space.basis();
    const std::size_t m = rep.module_dim();

    std::vector<std::vector<std::pair<Rational, Subspace>>> eig(Hb.size());
    for (std::size_t k = 0; k < Hb.size(); ++k) {
        Matrix a = rep.act(Hb[k]);
        RationalSpectrum spec = rational_spectrum(a);
        if (!spec.split)
            fail(ErrorKind::NonSplit, "action of " + describe(L, Hb[k]) +
                                          " has eigenvalues outside the rationals");
        for (const auto &lambda : spec.eigenvalues)
            eig[k].emplace_back(lambda, generalized_eigenspace(a, lambda));
    }

    std::vector<WeightSpaceResult> partial{{WeightFunction{}, Subspace::full(m), m > 0}};
    for (std::size_t k = 0; k < Hb.size(); ++k) {
        std::vector<WeightSpaceResult> next;
        for (const auto &w : partial)
            for (const auto &[lambda, space] : eig[k]) {
                Subspace s = intersect(w.space, space);
                if (s.is_zero())
                    continue;
                WeightFunction chi = w.chi;
                chi.push_back(lambda);
                next.push_back({std::move(chi), std::move(s), true});
            }
        partial = std::move(next);
    }
    std::sort(partial.begin(), partial.end(),
              [](const auto &a, const auto &b) { return chi_less(a.chi, b.chi); });
    std::size_t total = 0;
    for (const auto &w : partial) {
        certify_stable(rep, Hb, w.space);
        total += w.space.dim();
    }
    if (total != m)
        fail(ErrorKind::InternalDefect, "weight spaces do not add up to the module");
    return partial;
}

std::vector<WeightSpaceResult> root_spaces(const LieAlgebra &L, const LieSubspace &H) {
    return weight_decomposition(Representation::adjoint(L), H);
}

RootProductReport root_product_check(const LieAlgebra &L, const LieSubspace &H, const WeightFunction &chi1,
                                     const WeightFunction &chi2) {
    const Representation ad = Representation::adjoint(L);
    if (chi1.size() != chi2.size())
        fail(ErrorKind::DimensionMismatch, "weights of different lengths");
    const auto s1 = weight_space(ad, H, chi1), s2 = weight_space(ad, H, chi2);
    const auto s3 = weight_space(ad, H, chi1 + chi2);
    RootProductReport rep;
    for (const auto &x : s1.space.basis())
        for (const auto &y : s2.space.basis()) {
            ++rep.pairs_checked;
            Vector z = L.bracket(x, y);
            if (!s3.space.contains(z)) {
                rep.ok = false;
                rep.failures.push_back("[" + describe(L, x) + ", " + describe(L, y) + "] = " + describe(L, z) +
                                       " leaves the weight space of the sum");
            }
        }
    return rep;
}

} // namespace lietk
