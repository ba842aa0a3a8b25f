#pragma once

#include "lietk/lie_algebra.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lietk {

/// Letters are alphabet indices; 0 prints as 'a'.
using Word = std::vector<unsigned>;

bool is_lyndon(const Word &w);

/// Lyndon words of exactly `degree` letters over `alphabet_size` letters, sorted.
std::vector<Word> lyndon_words(std::size_t alphabet_size, std::size_t degree);

/// Witt number (1/n) sum_{d | n} mu(d) k^(n/d).
mpz_class graded_dimension(std::size_t alphabet_size, std::size_t degree);

/// "aab"
std::string word_string(const Word &w);
/// Standard bracketing, e.g. "[a,[a,b]]".
std::string bracketing_string(const Word &w);

/// Longest proper Lyndon suffix v of w = uv; returns the split point |u|.
std::size_t standard_split(const Word &w);

struct FreeLieElement {
    std::size_t alphabet_size = 0;
    std::size_t truncation = 0;
    /// Lyndon words; no zero coefficients, no word longer than truncation.
    std::map<Word, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const FreeLieElement &) const = default;
};

/// Noncommutative polynomial over Q.
using AssocPoly = std::map<Word, Rational>;

/// The free Lie algebra on `alphabet_size` letters truncated at degree
/// `truncation`, realised on the Lyndon basis. Associative expansions of the
/// standard bracketings are precomputed at construction.
class FreeLieAlgebra {
  public:
    explicit FreeLieAlgebra(std::size_t alphabet_size, std::size_t truncation = 8);

    std::size_t alphabet_size() const { return k_; }
    std::size_t truncation() const { return n_; }

    FreeLieElement zero() const { return {k_, n_, {}}; }
    FreeLieElement letter(unsigned i) const;
    /// Basis element for a Lyndon word.
    FreeLieElement basis(const Word &w) const;

    FreeLieElement add(const FreeLieElement &x, const FreeLieElement &y) const;
    FreeLieElement scale(const Rational &c, const FreeLieElement &x) const;
    /// Throws InvalidArgument on alphabet or truncation mismatch.
    FreeLieElement bracket(const FreeLieElement &x, const FreeLieElement &y) const;

    /// Expansion of the standard bracketing of a Lyndon word.
    const AssocPoly &expansion(const Word &w) const;
    /// Expansion of an arbitrary element.
    AssocPoly expand(const FreeLieElement &x) const;
    /// Inverse of expand on Lie polynomials; throws InternalDefect if p is not one.
    FreeLieElement rewrite(AssocPoly p) const;

    /// Terms joined by " + " / " - ", each "c*[..]" (coefficient 1 omitted), or "0".
    std::string format(const FreeLieElement &x) const;
    /// Grammar:
    ///   element := ["-"] term (("+" | "-") term)*
    ///   term    := [rational ("*" | "·")] lie
    ///   lie     := letter | "[" lie "," lie "]"
    /// Brackets need not be standard; they are evaluated with bracket().
    FreeLieElement parse(std::string_view text) const;

  private:
    void check_same(const FreeLieElement &x) const;

    std::size_t k_;
    std::size_t n_;
    std::map<Word, AssocPoly> expansions_;
};

/// Evaluates each Lyndon word's standard bracketing in L with letter i sent
/// to assignment[i], extended linearly.
Vector lift(const std::vector<Vector> &assignment, const LieAlgebra &L, const FreeLieElement &x);

} // namespace lietk
