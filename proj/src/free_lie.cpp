#include "lietk/free_lie.hpp"

#include "lietk/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace lietk {

bool is_lyndon(const Word &w) {
    if (w.empty())
        return false;
    for (std::size_t s = 1; s < w.size(); ++s)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + s, w.end()))
            return false;
    return true;
}

std::vector<Word> lyndon_words(std::size_t alphabet_size, std::size_t degree) {
    if (alphabet_size < 1 || degree < 1)
        fail(ErrorKind::InvalidArgument, "lyndon_words needs alphabet size and degree >= 1");
    // Duval's generator visits every Lyndon word of length <= degree in lex order.
    std::vector<Word> out;
    std::vector<long> w{-1};
    const long top = static_cast<long>(alphabet_size) - 1;
    while (!w.empty()) {
        ++w.back();
        const std::size_t m = w.size();
        if (m == degree)
            out.emplace_back(w.begin(), w.end());
        while (w.size() < degree)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == top)
            w.pop_back();
    }
    return out;
}

namespace {

int mobius(std::size_t n) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

} // namespace

mpz_class graded_dimension(std::size_t alphabet_size, std::size_t degree) {
    if (alphabet_size < 1 || degree < 1)
        fail(ErrorKind::InvalidArgument, "graded_dimension needs alphabet size and degree >= 1");
    mpz_class sum = 0;
    for (std::size_t d = 1; d <= degree; ++d) {
        if (degree % d)
            continue;
        int mu = mobius(d);
        if (mu == 0)
            continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), alphabet_size, degree / d);
        sum += mu * p;
    }
    return sum / static_cast<unsigned long>(degree);
}

std::string word_string(const Word &w) {
    std::string s;
    for (unsigned c : w)
        s.push_back(static_cast<char>('a' + c));
    return s;
}

std::size_t standard_split(const Word &w) {
    if (w.size() < 2)
        fail(ErrorKind::InvalidArgument, "standard factorisation needs a word of length >= 2");
    for (std::size_t s = 1; s < w.size(); ++s)
        if (is_lyndon(Word(w.begin() + s, w.end())))
            return s;
    return w.size() - 1; // last letter is always Lyndon
}

std::string bracketing_string(const Word &w) {
    if (w.size() == 1)
        return word_string(w);
    std::size_t s = standard_split(w);
    return "[" + bracketing_string(Word(w.begin(), w.begin() + s)) + "," +
           bracketing_string(Word(w.begin() + s, w.end())) + "]";
}

namespace {

Word concat(const Word &a, const Word &b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

void add_term(AssocPoly &p, const Word &w, const Rational &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = p.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

// acc += c * (p q - q p)
void add_commutator(AssocPoly &acc, const AssocPoly &p, const AssocPoly &q, const Rational &c) {
    for (const auto &[u, cu] : p)
        for (const auto &[v, cv] : q) {
            Rational t = c * cu * cv;
            add_term(acc, concat(u, v), t);
            add_term(acc, concat(v, u), -t);
        }
}

bool shortlex_less(const Word &a, const Word &b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

} // namespace

FreeLieAlgebra::FreeLieAlgebra(std::size_t alphabet_size, std::size_t truncation)
    : k_(alphabet_size), n_(truncation) {
    if (k_ < 1 || k_ > 26)
        fail(ErrorKind::InvalidArgument, "alphabet size must be between 1 and 26");
    if (n_ < 1)
        fail(ErrorKind::InvalidArgument, "truncation degree must be >= 1");
    for (std::size_t d = 1; d <= n_; ++d)
        for (const Word &w : lyndon_words(k_, d)) {
            AssocPoly p;
            if (d == 1) {
                p.emplace(w, Rational(1));
            } else {
                std::size_t s = standard_split(w);
                add_commutator(p, expansions_.at(Word(w.begin(), w.begin() + s)),
                               expansions_.at(Word(w.begin() + s, w.end())), Rational(1));
            }
            expansions_.emplace(w, std::move(p));
        }
}

void FreeLieAlgebra::check_same(const FreeLieElement &x) const {
    if (x.alphabet_size != k_ || x.truncation != n_)
        fail(ErrorKind::InvalidArgument,
             "element over " + std::to_string(x.alphabet_size) + " letters truncated at " +
                 std::to_string(x.truncation) + " used in the free Lie algebra on " +
                 std::to_string(k_) + " letters truncated at " + std::to_string(n_));
}

FreeLieElement FreeLieAlgebra::letter(unsigned i) const {
    if (i >= k_)
        fail(ErrorKind::InvalidArgument, "letter index out of range");
    return basis(Word{i});
}

FreeLieElement FreeLieAlgebra::basis(const Word &w) const {
    if (!expansions_.count(w))
        fail(ErrorKind::InvalidArgument, "\"" + word_string(w) + "\" is not a Lyndon word within the truncation");
    FreeLieElement e = zero();
    e.terms.emplace(w, Rational(1));
    return e;
}

FreeLieElement FreeLieAlgebra::add(const FreeLieElement &x, const FreeLieElement &y) const {
    check_same(x);
    check_same(y);
    FreeLieElement r = x;
    for (const auto &[w, c] : y.terms)
        add_term(r.terms, w, c);
    return r;
}

FreeLieElement FreeLieAlgebra::scale(const Rational &c, const FreeLieElement &x) const {
    check_same(x);
    FreeLieElement r = zero();
    if (c.is_zero())
        return r;
    for (const auto &[w, cw] : x.terms)
        r.terms.emplace(w, c * cw);
    return r;
}

const AssocPoly &FreeLieAlgebra::expansion(const Word &w) const {
    auto it = expansions_.find(w);
    if (it == expansions_.end())
        fail(ErrorKind::InvalidArgument, "\"" + word_string(w) + "\" is not a Lyndon word within the truncation");
    return it->second;
}

AssocPoly FreeLieAlgebra::expand(const FreeLieElement &x) const {
    check_same(x);
    AssocPoly p;
    for (const auto &[w, c] : x.terms)
        for (const auto &[u, cu] : expansion(w))
            add_term(p, u, c * cu);
    return p;
}

FreeLieElement FreeLieAlgebra::rewrite(AssocPoly p) const {
    // P_w = w + (lexicographically larger words of the same length), so the
    // smallest word left in p names the next basis element to peel off.
    FreeLieElement r = zero();
    while (!p.empty()) {
        auto [w, c] = *p.begin();
        auto it = expansions_.find(w);
        if (it == expansions_.end())
            fail(ErrorKind::InternalDefect, "polynomial is not a Lie polynomial (leading word \"" +
                                                word_string(w) + "\")");
        r.terms.emplace(w, c);
        for (const auto &[u, cu] : it->second)
            add_term(p, u, -c * cu);
    }
    return r;
}

FreeLieElement FreeLieAlgebra::bracket(const FreeLieElement &x, const FreeLieElement &y) const {
    check_same(x);
    check_same(y);
    AssocPoly acc;
    for (const auto &[u, cu] : x.terms)
        for (const auto &[v, cv] : y.terms)
            if (u.size() + v.size() <= n_)
                add_commutator(acc, expansion(u), expansion(v), cu * cv);
    return rewrite(std::move(acc));
}

std::string FreeLieAlgebra::format(const FreeLieElement &x) const {
    check_same(x);
    if (x.terms.empty())
        return "0";
    std::vector<std::pair<Word, Rational>> sorted(x.terms.begin(), x.terms.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto &a, const auto &b) { return shortlex_less(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto &[w, c] : sorted) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (!mag.is_one())
            out += mag.str() + "*";
        out += bracketing_string(w);
    }
    return out;
}

namespace {

class ElementParser {
  public:
    ElementParser(const FreeLieAlgebra &F, std::string_view text) : F_(F), s_(text) {}

    FreeLieElement parse() {
        skip();
        FreeLieElement acc = F_.zero();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            FreeLieElement t = term();
            acc = F_.add(acc, negate ? F_.scale(Rational(-1), t) : t);
            skip();
            if (pos_ == s_.size())
                break;
            if (peek() == '+')
                negate = false;
            else if (peek() == '-')
                negate = true;
            else
                error("expected '+' or '-'");
            ++pos_;
        }
        return acc;
    }

  private:
    [[noreturn]] void error(const std::string &what) {
        fail(ErrorKind::Parse, "free Lie element, column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    FreeLieElement term() {
        skip();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            Rational c;
            try {
                c = Rational::parse(s_.substr(start, pos_ - start));
            } catch (const LieError &e) {
                if (e.kind() == ErrorKind::DivisionByZero)
                    throw;
                pos_ = start;
                error("bad coefficient");
            }
            skip();
            if (s_.substr(pos_, 1) == "*")
                pos_ += 1;
            else if (s_.substr(pos_, 2) == "\xC2\xB7")
                pos_ += 2;
            else
                error("expected '*' after coefficient");
            return F_.scale(c, lie());
        }
        return lie();
    }

    FreeLieElement lie() {
        char c = peek();
        if (c == '[') {
            ++pos_;
            FreeLieElement x = lie();
            if (peek() != ',')
                error("expected ','");
            ++pos_;
            FreeLieElement y = lie();
            if (peek() != ']')
                error("expected ']'");
            ++pos_;
            return F_.bracket(x, y);
        }
        if (c >= 'a' && c <= 'z') {
            unsigned i = static_cast<unsigned>(c - 'a');
            if (i >= F_.alphabet_size())
                error(std::string("letter '") + c + "' outside the alphabet");
            ++pos_;
            return F_.letter(i);
        }
        error(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
    }

    const FreeLieAlgebra &F_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

FreeLieElement FreeLieAlgebra::parse(std::string_view text) const {
    return ElementParser(*this, text).parse();
}

Vector lift(const std::vector<Vector> &assignment, const LieAlgebra &L, const FreeLieElement &x) {
    if (assignment.size() != x.alphabet_size)
        fail(ErrorKind::DimensionMismatch, "lift needs " + std::to_string(x.alphabet_size) +
                                               " assigned vectors, got " +
                                               std::to_string(assignment.size()));
    for (const auto &v : assignment)
        if (v.size() != L.dim())
            fail(ErrorKind::DimensionMismatch, "assigned vector length " + std::to_string(v.size()) +
                                                   " for an algebra of dimension " +
                                                   std::to_string(L.dim()));
    if (!L.verified())
        fail(ErrorKind::InvalidArgument, "lift needs a verified target algebra");
    std::map<Word, Vector> memo;
    std::function<const Vector &(const Word &)> eval = [&](const Word &w) -> const Vector & {
        auto it = memo.find(w);
        if (it != memo.end())
            return it->second;
        Vector v;
        if (w.size() == 1) {
            v = assignment[w[0]];
        } else {
            std::size_t s = standard_split(w);
            Vector a = eval(Word(w.begin(), w.begin() + s));
            v = L.bracket(a, eval(Word(w.begin() + s, w.end())));
        }
        return memo.emplace(w, std::move(v)).first->second;
    };
    Vector out = zero_vector(L.dim());
    for (const auto &[w, c] : x.terms)
        axpy(out, c, eval(w));
    return out;
}

} // namespace lietk
