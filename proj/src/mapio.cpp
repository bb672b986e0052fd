#include "nonproper/mapio.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace nonproper {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
{
}

namespace {

class Parser {
public:
    Parser(std::string text, int line, int offset) : s_(std::move(text)), line_(line), offset_(offset) {}

    Poly poly()
    {
        skip();
        Poly out;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = get() == '-';
            skip();
        }
        out = term(neg);
        for (;;) {
            skip();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            const std::size_t op = pos_;
            get();
            skip();
            if (at_end()) fail_at(op, std::string("expected term after '") + c + "'");
            out = out + term(c == '-');
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const
    {
        throw ParseError(line_, offset_ + static_cast<int>(pos) + 1, what);
    }

    bool is_var(char c) const { return c == 'u' || c == 'v'; }

    std::string digits()
    {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        return d;
    }

    mpz_class integer()
    {
        std::string d = digits();
        if (d.empty()) fail("expected integer");
        return mpz_class(d);
    }

    // rational ('/' integer)? 'i'?   or a bare 'i'
    GaussRat number()
    {
        if (peek() == 'i') {
            get();
            return GaussRat::imag_unit();
        }
        mpq_class q(integer());
        skip();
        if (peek() == '/') {
            get();
            skip();
            const std::size_t at = pos_;
            mpz_class d = integer();
            if (d == 0) fail_at(at, "zero denominator");
            q /= mpq_class(d);
        }
        if (peek() == 'i') {
            get();
            return GaussRat(0, q);
        }
        return GaussRat(q);
    }

    GaussRat paren()
    {
        get();
        skip();
        GaussRat out;
        bool first = true;
        for (;;) {
            skip();
            if (peek() == ')') {
                if (first) fail("empty parentheses");
                get();
                return out;
            }
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = get() == '-';
                skip();
            } else if (!first) {
                fail("expected '+', '-' or ')'");
            }
            if (at_end()) fail("unterminated '('");
            if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != 'i') fail("expected number");
            GaussRat x = number();
            out += neg ? -x : x;
            first = false;
        }
    }

    LatticePoint monomial()
    {
        LatticePoint e{0, 0};
        bool any = false;
        for (;;) {
            skip();
            std::size_t save = pos_;
            if (any && peek() == '*') {
                get();
                skip();
                if (!is_var(peek())) fail("expected 'u' or 'v'");
            }
            if (!is_var(peek())) {
                pos_ = save;
                break;
            }
            const char var = get();
            long long exp = 1;
            skip();
            if (peek() == '^') {
                get();
                skip();
                mpz_class k = integer();
                if (!k.fits_slong_p()) fail("exponent too large");
                exp = k.get_si();
            }
            (var == 'u' ? e.x : e.y) += exp;
            any = true;
        }
        return e;
    }

    Poly term(bool neg)
    {
        skip();
        GaussRat coef(1);
        const char c = peek();
        if (c == '(') {
            coef = paren();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
            coef = number();
        } else if (!is_var(c)) {
            fail("expected term");
        } else {
            return Poly::monomial(neg ? GaussRat(-1) : GaussRat(1), monomial());
        }
        skip();
        if (peek() == '*') {
            get();
            skip();
            if (!is_var(peek())) fail("expected 'u' or 'v'");
        }
        LatticePoint e = is_var(peek()) ? monomial() : LatticePoint{0, 0};
        return Poly::monomial(neg ? -coef : coef, e);
    }

    std::string s_;
    std::size_t pos_ = 0;
    int line_;
    int offset_;
};

}  // namespace

Poly parse_poly(const std::string& text)
{
    Parser p(text, 1, 0);
    return p.poly();
}

PolyMap parse_map(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<Poly> comp[2];
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (line.compare(pos, 2, "f1") != 0 && line.compare(pos, 2, "f2") != 0)
            throw ParseError(lineno, static_cast<int>(pos) + 1, "expected 'f1' or 'f2'");
        const int idx = line[pos + 1] - '1';
        if (comp[idx]) throw ParseError(lineno, static_cast<int>(pos) + 1, std::string("duplicate f") + line[pos + 1]);
        pos = line.find_first_not_of(" \t", pos + 2);
        if (pos == std::string::npos || line[pos] != '=')
            throw ParseError(lineno, static_cast<int>(pos == std::string::npos ? line.size() : pos) + 1, "expected '='");
        Parser p(line.substr(pos + 1), lineno, static_cast<int>(pos) + 1);
        Poly poly = p.poly();
        if (poly.is_zero()) throw ParseError(lineno, static_cast<int>(pos) + 2, "f" + std::to_string(idx + 1) + " is the zero polynomial");
        comp[idx] = std::move(poly);
    }
    for (int i = 0; i < 2; ++i)
        if (!comp[i]) throw ParseError(lineno + 1, 1, "missing f" + std::to_string(i + 1));
    return PolyMap{*comp[0], *comp[1]};
}

std::string format_poly(const Poly& p) { return p.str('u', 'v'); }

std::string format_map(const PolyMap& f) { return "f1 = " + format_poly(f.f1) + "\nf2 = " + format_poly(f.f2) + "\n"; }

}  // namespace nonproper
