#include "spoq/expr.hpp"

#include <cctype>
#include <sstream>

namespace spoq {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::vector<std::string>& warnings)
        : s_(text), warnings_(warnings) {}

    SuperFn parse() {
        SuperFn v = expression();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    SuperFn expression() {
        SuperFn v = unary();
        for (;;) {
            skip_ws();
            if (match('+'))
                v += unary();
            else if (match('-'))
                v -= unary();
            else
                return v;
        }
    }

    SuperFn unary() {
        skip_ws();
        if (match('-')) return -unary();
        return product();
    }

    SuperFn product() {
        SuperFn v = factor();
        for (;;) {
            skip_ws();
            if (match('*'))
                v = v * factor();
            else
                return v;
        }
    }

    SuperFn factor() {
        SuperFn base = atom();
        skip_ws();
        if (!match('^')) return base;
        skip_ws();
        size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a natural exponent after '^'");
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 64) fail("exponent too large");
            ++pos_;
        }
        if (e >= 2 && base.even_part().is_zero() && !base.is_zero()) {
            // every purely odd element squares to zero
            warnings_.push_back("power " + std::to_string(e) + " of an odd factor vanishes (position " +
                                std::to_string(at) + ")");
        }
        SuperFn v = SuperFn::one();
        for (long i = 0; i < e; ++i) v = v * base;
        return v;
    }

    SuperFn atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SuperFn v = expression();
            skip_ws();
            if (!match(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (c == 'x') {
            ++pos_;
            return SuperFn::x();
        }
        if (c == 't') {
            if (pos_ + 1 < s_.size() && (s_[pos_ + 1] == '1' || s_[pos_ + 1] == '2')) {
                char which = s_[pos_ + 1];
                pos_ += 2;
                return which == '1' ? SuperFn::theta1() : SuperFn::theta2();
            }
            fail("expected t1 or t2");
        }
        fail("unexpected character");
        return {};
    }

    SuperFn rational_literal() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t save = pos_++;
            size_t den_start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == den_start) {
                pos_ = save;  // '/' belonged to something else; there is no division
                fail("expected digits after '/' in a rational literal");
            }
        }
        auto r = Rational::parse(s_.substr(start, pos_ - start));
        if (!r) fail("invalid rational literal");
        return SuperFn::constant(*r);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool match(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

    std::string_view s_;
    size_t pos_ = 0;
    std::vector<std::string>& warnings_;
};

}  // namespace

ParseResult parse_superfn(std::string_view text) {
    ParseResult res;
    Parser p(text, res.warnings);
    res.value = p.parse();
    return res;
}

namespace {

Rational rat_abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// One printable addend: sign and body without sign.
struct Piece {
    bool negative;
    std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += pieces[i].negative ? "-" : "";
        else
            out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].body;
    }
    return out;
}

std::string monomial_body(const Rational& coeff_abs, int deg) {
    std::string xs = deg == 0 ? "" : (deg == 1 ? "x" : "x^" + std::to_string(deg));
    if (xs.empty()) return coeff_abs.str();
    if (coeff_abs == Rational(1)) return xs;
    return coeff_abs.str() + "*" + xs;
}

void poly_pieces(const Poly& p, std::vector<Piece>& out) {
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        out.push_back({c.sign() < 0, monomial_body(rat_abs(c), i)});
    }
}

int nonzero_count(const Poly& p) {
    int n = 0;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) ++n;
    return n;
}

void component_pieces(const Poly& p, const std::string& suffix, std::vector<Piece>& out) {
    if (p.is_zero()) return;
    if (nonzero_count(p) == 1) {
        int i = p.degree();
        while (p.coeff(i).is_zero()) --i;
        Rational c = p.coeff(i);
        std::string body = monomial_body(rat_abs(c), i);
        if (body == "1")
            body = suffix;
        else
            body += "*" + suffix;
        out.push_back({c.sign() < 0, body});
    } else {
        out.push_back({false, "(" + format(p) + ")*" + suffix});
    }
}

}  // namespace

std::string format(const Poly& p) {
    std::vector<Piece> pieces;
    poly_pieces(p, pieces);
    return join(pieces);
}

std::string format(const SuperFn& f) {
    std::vector<Piece> pieces;
    poly_pieces(f.f0, pieces);
    component_pieces(f.f1, "t1", pieces);
    component_pieces(f.f2, "t2", pieces);
    component_pieces(f.f12, "t1*t2", pieces);
    return join(pieces);
}

std::string format(const VectorField& X) {
    auto wrap = [](const SuperFn& c) { return "(" + format(c) + ")"; };
    std::vector<std::string> parts;
    if (!X.a.is_zero()) parts.push_back(wrap(X.a) + "*dx");
    if (!X.b1.is_zero()) parts.push_back(wrap(X.b1) + "*dt1");
    if (!X.b2.is_zero()) parts.push_back(wrap(X.b2) + "*dt2");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

namespace {

std::string op_word(const OpKey& k) {
    std::vector<std::string> w;
    if (k.l == 1) w.push_back("dx");
    if (k.l > 1) w.push_back("dx^" + std::to_string(k.l));
    if (k.m) w.push_back("Db1");
    if (k.n) w.push_back("Db2");
    if (w.empty()) return "";
    std::string out = w[0];
    for (size_t i = 1; i < w.size(); ++i) out += "*" + w[i];
    return out;
}

}  // namespace

std::string format(const DiffOp& D) {
    if (D.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [k, c] : D.terms()) {
        std::string word = op_word(k);
        std::string cs;
        if (c == SuperFn::one())
            cs = word.empty() ? "1" : "";
        else if (c == -SuperFn::one())
            cs = word.empty() ? "-1" : "-";
        else
            cs = "(" + format(c) + ")" + (word.empty() ? "" : "*");
        parts.push_back(cs + word);
    }
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

std::string format(const Symbol& S) {
    return "deg " + S.degree().str() + ": (" + format(S.F1()) + ", " + format(S.F2()) + ")";
}

std::string format(const GradedSymbol& S) {
    if (S.parts().empty()) return "0";
    std::string out;
    for (auto it = S.parts().rbegin(); it != S.parts().rend(); ++it) {
        if (!out.empty()) out += " ; ";
        out += format(it->second);
    }
    return out;
}

SpoMatrix parse_matrix(std::string_view text) {
    SpoMatrix m;
    std::string row;
    std::stringstream rows{std::string(text)};
    int r = 0;
    while (std::getline(rows, row, ';')) {
        if (r >= 4) throw ParseError("matrix has more than 4 rows", 0);
        for (char& ch : row)
            if (ch == ',') ch = ' ';
        std::stringstream entries(row);
        std::string tok;
        int c = 0;
        while (entries >> tok) {
            if (c >= 4) throw ParseError("matrix row has more than 4 entries", 0);
            auto v = Rational::parse(tok);
            if (!v) throw ParseError("invalid matrix entry '" + tok + "'", 0);
            m.at(r, c) = *v;
            ++c;
        }
        if (c != 4) throw ParseError("matrix row needs 4 entries", 0);
        ++r;
    }
    if (r != 4) throw ParseError("matrix needs 4 rows", 0);
    return m;
}

std::string format(const SpoMatrix& m) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (i) out += "; ";
        for (int j = 0; j < 4; ++j) {
            if (j) out += ", ";
            out += m.at(i, j).str();
        }
    }
    return out;
}

HalfInt parse_halfint(std::string_view text) {
    auto r = Rational::parse(text);
    if (!r) throw ParseError("invalid half-integer", 0);
    Rational two_k = *r * Rational(2);
    if (!two_k.is_integer() || two_k.sign() < 0 || two_k.numerator() > 1000)
        throw ParseError("expected a small nonnegative integer or half-integer", 0);
    return HalfInt{static_cast<int>(two_k.numerator().get_si())};
}

}  // namespace spoq
