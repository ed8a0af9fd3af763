// textio.cpp
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#include "luna/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace luna {

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
      line(l), col(c) {}

SemanticError::SemanticError(ValidationReport r)
    : std::runtime_error("invalid system\n" + r.summary()), report(std::move(r)) {}

namespace {

enum class Tok { Ident, Number, String, LBrace, RBrace, Colon, Semi, Comma, Plus, End };

struct Token {
    Tok kind;
    std::string text;
    long long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(current_.line, current_.col, msg);
    }

private:
    void advance() {
        skip_ws();
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text = "<end of input>";
            return;
        }
        char c = text_[pos_];
        if (c == '{') { one(Tok::LBrace, c); return; }
        if (c == '}') { one(Tok::RBrace, c); return; }
        if (c == ':') { one(Tok::Colon, c); return; }
        if (c == ';') { one(Tok::Semi, c); return; }
        if (c == ',') { one(Tok::Comma, c); return; }
        if (c == '+') { one(Tok::Plus, c); return; }
        if (c == '"') {
            bump();
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
                s += text_[pos_];
                bump();
            }
            if (pos_ >= text_.size() || text_[pos_] != '"')
                throw ParseError(current_.line, current_.col, "unterminated string");
            bump();
            current_.kind = Tok::String;
            current_.text = std::move(s);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            std::string s;
            if (c == '-') { s += c; bump(); }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                bump();
            }
            current_.kind = Tok::Number;
            current_.text = s;
            current_.value = std::stoll(s);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                bump();
            }
            current_.kind = Tok::Ident;
            current_.text = std::move(s);
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void one(Tok k, char c) {
        current_.kind = k;
        current_.text = std::string(1, c);
        bump();
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;
};

struct Parser {
    Lexer lex;

    explicit Parser(std::string_view text) : lex(text) {}

    Token expect(Tok kind, const std::string& what) {
        if (lex.peek().kind != kind)
            lex.fail("expected " + what + ", got '" + lex.peek().text + "'");
        return lex.take();
    }

    Token expect_keyword(const std::string& word) {
        Token t = expect(Tok::Ident, "'" + word + "'");
        if (t.text != word)
            throw ParseError(t.line, t.col, "expected '" + word + "', got '" + t.text + "'");
        return t;
    }

    int simple_root_index(const Token& t, int n) {
        if (t.text.size() < 2 || t.text[0] != 'a' ||
            !std::all_of(t.text.begin() + 1, t.text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(t.line, t.col, "expected simple root token a<i>, got '" + t.text + "'");
        int i = std::stoi(t.text.substr(1));
        if (i < 1 || i > n)
            throw ParseError(t.line, t.col, "simple root " + t.text + " out of range 1.." +
                                                std::to_string(n));
        return i;
    }

    Weight combo(const RootSystem& rs) {
        Weight w(rs.rank());
        for (;;) {
            long long k = 1;
            if (lex.peek().kind == Tok::Number) {
                Token t = lex.take();
                if (t.value <= 0)
                    throw ParseError(t.line, t.col, "coefficients must be positive");
                k = t.value;
            }
            Token a = expect(Tok::Ident, "simple root token a<i>");
            w.at(simple_root_index(a, rs.rank())) += k;
            if (lex.peek().kind != Tok::Plus) break;
            lex.take();
        }
        return w;
    }
};

} // namespace

Weight parse_combo(std::string_view text, const RootSystem& rs) {
    Parser p(text);
    Weight w = p.combo(rs);
    if (p.lex.peek().kind != Tok::End) p.lex.fail("trailing input after combo");
    return w;
}

ParsedSystem parse_system(std::string_view text) {
    Parser p(text);
    p.expect_keyword("system");
    std::string name = p.expect(Tok::String, "quoted name").text;
    p.expect(Tok::LBrace, "'{'");

    p.expect_keyword("group");
    p.expect(Tok::Colon, "':'");
    std::vector<DynkinFactor> factors;
    for (;;) {
        Token t = p.expect(Tok::Ident, "group factor");
        // Factor tokens look like "A5"; a lone "x" separates factors.
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(t.text[0])));
        if (c < 'A' || c > 'G' || t.text.size() < 2 ||
            !std::all_of(t.text.begin() + 1, t.text.end(),
                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw ParseError(t.line, t.col, "bad group factor '" + t.text + "'");
        int rank = std::stoi(t.text.substr(1));
        try {
            factors.emplace_back(static_cast<TypeLetter>(c - 'A'), rank);
        } catch (const std::invalid_argument& e) {
            throw ParseError(t.line, t.col, e.what());
        }
        if (p.lex.peek().kind == Tok::Ident && (p.lex.peek().text == "x" || p.lex.peek().text == "X")) {
            p.lex.take();
            continue;
        }
        break;
    }
    p.expect(Tok::Semi, "';'");
    RootSystem rs(std::move(factors));

    p.expect_keyword("sp");
    p.expect(Tok::Colon, "':'");
    p.expect(Tok::LBrace, "'{'");
    std::set<int> sp;
    if (p.lex.peek().kind != Tok::RBrace) {
        for (;;) {
            Token t = p.expect(Tok::Ident, "simple root token a<i>");
            sp.insert(p.simple_root_index(t, rs.rank()));
            if (p.lex.peek().kind != Tok::Comma) break;
            p.lex.take();
        }
    }
    p.expect(Tok::RBrace, "'}'");
    p.expect(Tok::Semi, "';'");

    p.expect_keyword("sigma");
    p.expect(Tok::Colon, "':'");
    p.expect(Tok::LBrace, "'{'");
    std::vector<std::string> sigma_names;
    std::map<std::string, int> sigma_pos;
    std::vector<Weight> sigma;
    while (p.lex.peek().kind == Tok::Ident) {
        Token t = p.lex.take();
        if (sigma_pos.count(t.text))
            throw ParseError(t.line, t.col, "duplicate sigma name " + t.text);
        p.expect(Tok::Colon, "':'");
        Weight w = p.combo(rs);
        sigma_pos[t.text] = static_cast<int>(sigma.size());
        sigma_names.push_back(t.text);
        sigma.push_back(std::move(w));
        p.expect(Tok::Semi, "';'");
    }
    p.expect(Tok::RBrace, "'}'");
    p.expect(Tok::Semi, "';'");

    std::vector<AColor> acolors;
    if (p.lex.peek().kind == Tok::Ident && p.lex.peek().text == "acolors") {
        p.lex.take();
        p.expect(Tok::Colon, "':'");
        p.expect(Tok::LBrace, "'{'");
        while (p.lex.peek().kind == Tok::Ident) {
            Token t = p.lex.take();
            AColor c{t.text, std::vector<long long>(sigma.size(), 0)};
            p.expect(Tok::Colon, "':'");
            p.expect(Tok::LBrace, "'{'");
            if (p.lex.peek().kind != Tok::RBrace) {
                for (;;) {
                    Token s = p.expect(Tok::Ident, "sigma name");
                    auto it = sigma_pos.find(s.text);
                    if (it == sigma_pos.end())
                        throw ParseError(s.line, s.col, "unknown sigma name " + s.text);
                    p.expect(Tok::Colon, "':'");
                    Token v = p.expect(Tok::Number, "integer");
                    c.row[it->second] = v.value;
                    if (p.lex.peek().kind != Tok::Comma) break;
                    p.lex.take();
                }
            }
            p.expect(Tok::RBrace, "'}'");
            p.expect(Tok::Semi, "';'");
            acolors.push_back(std::move(c));
        }
        p.expect(Tok::RBrace, "'}'");
        p.expect(Tok::Semi, "';'");
    }

    p.expect(Tok::RBrace, "'}'");
    if (p.lex.peek().kind != Tok::End) p.lex.fail("trailing input after system");

    SphericalSystem sys = [&] {
        try {
            return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma),
                                   std::move(acolors));
        } catch (const NotASphericalRoot& e) {
            ValidationReport rep;
            rep.errors.push_back(std::string("sigma clause: ") + e.what());
            throw SemanticError(std::move(rep));
        } catch (const std::invalid_argument& e) {
            ValidationReport rep;
            rep.errors.push_back(e.what());
            throw SemanticError(std::move(rep));
        }
    }();
    ValidationReport rep = validate(sys);
    if (!rep.errors.empty()) throw SemanticError(std::move(rep));
    return ParsedSystem{std::move(name), std::move(sys)};
}

std::string format_weight(const Weight& w) {
    std::string s;
    for (int i = 1; i <= w.size(); ++i) {
        long long c = w.coeffs[i - 1];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (c != 1) s += std::to_string(c) + " ";
        s += "a" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

std::string print_system(const SphericalSystem& sys, std::string_view name) {
    const auto& sigma = sys.sigma();
    int k = sys.card_sigma();

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return sigma[a].weight.coeffs < sigma[b].weight.coeffs;
    });

    std::vector<std::vector<long long>> rows;
    for (const AColor& c : sys.acolors()) {
        std::vector<long long> row(k);
        for (int j = 0; j < k; ++j) row[j] = c.row[order[j]];
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());

    std::ostringstream out;
    out << "system \"" << name << "\" {\n";
    out << "  group: " << sys.root_system().spec_string() << ";\n";
    out << "  sp: {";
    bool first = true;
    for (int i : sys.sp()) {
        out << (first ? " " : ", ") << "a" << i;
        first = false;
    }
    out << (first ? "};\n" : " };\n");
    if (k == 0) {
        out << "  sigma: {};\n";
    } else {
        out << "  sigma: {\n";
        for (int j = 0; j < k; ++j)
            out << "    s" << (j + 1) << ": " << format_weight(sigma[order[j]].weight) << ";\n";
        out << "  };\n";
    }
    if (!rows.empty()) {
        out << "  acolors: {\n";
        for (size_t d = 0; d < rows.size(); ++d) {
            out << "    D" << (d + 1) << ": {";
            bool f = true;
            for (int j = 0; j < k; ++j) {
                if (rows[d][j] == 0) continue;
                out << (f ? " " : ", ") << "s" << (j + 1) << ": " << rows[d][j];
                f = false;
            }
            out << (f ? "};\n" : " };\n");
        }
        out << "  };\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace luna
