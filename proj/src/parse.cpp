#include "ncg/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ncg {

namespace {

enum class Tok { End, Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    Lexer(const std::string& text, std::size_t line0)
        : text_(text), line_(line0) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) return t;
        char ch = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            t.kind = Tok::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            t.kind = Tok::Int;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        switch (ch) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Star; break;
            case '/': t.kind = Tok::Slash; break;
            case '^': t.kind = Tok::Caret; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'",
                                 line_, col_);
        }
        t.text = ch;
        advance();
        return t;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_ = 1;

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                break;
            }
        }
    }
};

class PolyParser {
public:
    PolyParser(const std::string& text, std::size_t line0, const Alphabet* alphabet,
               ParamSetPtr params, OrderPtr ord)
        : lex_(text, line0), alphabet_(alphabet), params_(std::move(params)),
          ord_(std::move(ord)) {
        cur_ = lex_.next();
    }

    NcPoly parse() {
        NcPoly p = expr();
        expect_end();
        return p;
    }

private:
    Lexer lex_;
    Token cur_;
    const Alphabet* alphabet_;
    ParamSetPtr params_;
    OrderPtr ord_;

    void bump() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, cur_.line, cur_.col);
    }

    void expect_end() const {
        if (cur_.kind != Tok::End) fail("trailing input '" + cur_.text + "'");
    }

    NcPoly expr() {
        bool neg = false;
        if (cur_.kind == Tok::Minus) {
            neg = true;
            bump();
        }
        NcPoly acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            bump();
            NcPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    NcPoly term() {
        NcPoly acc = factor();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            bool divide = cur_.kind == Tok::Slash;
            Token at = cur_;
            bump();
            NcPoly f = factor();
            if (divide) {
                Scalar s = as_scalar(f, at);
                if (s.is_zero())
                    throw ParseError("division by zero", at.line, at.col);
                acc = acc.scaled(s.inverse());
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

    NcPoly factor() {
        NcPoly base = atom();
        if (cur_.kind == Tok::Caret) {
            bump();
            if (cur_.kind != Tok::Int) fail("exponent must be a nonnegative integer");
            long e = 0;
            try {
                e = std::stol(cur_.text);
            } catch (...) {
                fail("exponent out of range");
            }
            if (e > 1000) fail("exponent out of range");
            bump();
            NcPoly acc = NcPoly::term(ord_, params_, Scalar::one(params_), {});
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    NcPoly atom() {
        switch (cur_.kind) {
            case Tok::Int: {
                Rational r{BigInt(cur_.text)};
                bump();
                return NcPoly::term(ord_, params_, Scalar::rational(r), {});
            }
            case Tok::Ident: {
                std::string name = cur_.text;
                int g = alphabet_ ? alphabet_->index_of(name) : -1;
                if (g >= 0) {
                    bump();
                    return NcPoly::term(ord_, params_, Scalar::one(params_),
                                        Word{static_cast<Gen>(g)});
                }
                if (params_->index_of(name) >= 0) {
                    bump();
                    return NcPoly::term(ord_, params_, Scalar::param(params_, name), {});
                }
                if (name == "j" && params_->field == BaseField::QZeta7) {
                    bump();
                    return NcPoly::term(
                        ord_, params_,
                        Scalar::base(params_, BaseValue::cyclo(Cyclo7::root_power(1))),
                        {});
                }
                fail("unknown name '" + name + "'");
            }
            case Tok::LParen: {
                bump();
                NcPoly p = expr();
                if (cur_.kind != Tok::RParen) fail("expected ')'");
                bump();
                return p;
            }
            default:
                fail("expected a value, found '" +
                     (cur_.kind == Tok::End ? std::string("end of input") : cur_.text) +
                     "'");
        }
    }

    Scalar as_scalar(const NcPoly& p, const Token& at) const {
        if (p.is_zero()) return Scalar::zero(params_);
        if (p.term_count() == 1 && p.terms().begin()->first.empty())
            return p.terms().begin()->second;
        throw ParseError("divisor must be a scalar value", at.line, at.col);
    }
};

OrderPtr scalar_dummy_order() {
    static OrderPtr ord = std::make_shared<GradedLexOrder>(std::vector<std::int64_t>{});
    return ord;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<std::int64_t> parse_tuple(const std::string& text, std::size_t line) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected a tuple like (1,0)", line, 1);
    std::vector<std::int64_t> vals;
    std::string item;
    for (std::size_t i = 1; i + 1 <= s.size() - 1; ++i) {
        if (s[i] == ',') {
            if (item.empty()) throw ParseError("empty tuple entry", line, 1);
            vals.push_back(std::stoll(item));
            item.clear();
        } else if (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-') {
            item += s[i];
        } else {
            throw ParseError("bad tuple entry", line, 1);
        }
    }
    if (item.empty()) throw ParseError("empty tuple entry", line, 1);
    vals.push_back(std::stoll(item));
    return vals;
}

} // namespace

NcPoly parse_poly(const std::string& text, const Alphabet& alphabet,
                  ParamSetPtr params, OrderPtr ord) {
    PolyParser p(text, 1, &alphabet, std::move(params), std::move(ord));
    return p.parse();
}

Scalar parse_scalar(const std::string& text, ParamSetPtr params) {
    PolyParser p(text, 1, nullptr, params, scalar_dummy_order());
    NcPoly poly = p.parse();
    if (poly.is_zero()) return Scalar::zero(params);
    if (poly.term_count() == 1 && poly.terms().begin()->first.empty())
        return poly.terms().begin()->second;
    throw ParseError("expected a scalar value", 1, 1);
}

Presentation parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    std::string name;
    BaseField field = BaseField::Q;
    bool field_seen = false;
    std::vector<std::string> param_names;
    std::vector<std::string> gen_names;
    std::vector<std::int64_t> gen_weights;
    std::vector<std::pair<std::string, std::vector<std::int64_t>>> zr_lines;
    std::vector<std::pair<std::string, std::size_t>> rel_texts;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        const std::string& key = fields[0];
        if (key == "algebra") {
            if (fields.size() != 2)
                throw ParseError("algebra takes one name", lineno, 1);
            name = fields[1];
        } else if (key == "field") {
            if (fields.size() != 2)
                throw ParseError("field takes Q or Qzeta7", lineno, 1);
            if (fields[1] == "Q") field = BaseField::Q;
            else if (fields[1] == "Qzeta7") field = BaseField::QZeta7;
            else throw ParseError("unknown field '" + fields[1] + "'", lineno, 1);
            field_seen = true;
        } else if (key == "params") {
            param_names.assign(fields.begin() + 1, fields.end());
        } else if (key == "gens") {
            for (std::size_t i = 1; i < fields.size(); ++i) {
                auto colon = fields[i].find(':');
                if (colon == std::string::npos) {
                    gen_names.push_back(fields[i]);
                    gen_weights.push_back(1);
                } else {
                    gen_names.push_back(fields[i].substr(0, colon));
                    try {
                        gen_weights.push_back(std::stoll(fields[i].substr(colon + 1)));
                    } catch (...) {
                        throw ParseError("bad generator weight in '" + fields[i] + "'",
                                         lineno, 1);
                    }
                }
            }
        } else if (key == "zrdeg") {
            auto eq = line.find('=');
            if (eq == std::string::npos || fields.size() < 3)
                throw ParseError("zrdeg needs 'zrdeg NAME = (..)'", lineno, 1);
            zr_lines.emplace_back(fields[1], parse_tuple(line.substr(eq + 1), lineno));
        } else if (key == "rel") {
            auto at = line.find("rel");
            rel_texts.emplace_back(line.substr(at + 3), lineno);
        } else {
            throw ParseError("unknown directive '" + key + "'", lineno, 1);
        }
    }
    (void)field_seen;

    if (gen_names.empty()) throw ParseError("missing gens line", lineno, 1);
    Presentation p;
    p.name = name;
    p.alphabet = make_alphabet(gen_names, gen_weights);
    p.params = make_param_set(field, param_names);
    p.order = make_graded_lex(p.alphabet);
    if (!zr_lines.empty()) {
        std::vector<std::vector<std::int64_t>> degs(p.alphabet.size());
        std::vector<bool> seen(p.alphabet.size(), false);
        for (auto& [gname, tuple] : zr_lines) {
            int g = p.alphabet.index_of(gname);
            if (g < 0) throw InvalidInputError("zrdeg names unknown generator " + gname);
            if (seen[static_cast<std::size_t>(g)])
                throw InvalidInputError("duplicate zrdeg for " + gname);
            seen[static_cast<std::size_t>(g)] = true;
            degs[static_cast<std::size_t>(g)] = tuple;
        }
        for (bool s : seen)
            if (!s) throw InvalidInputError("zrdeg lines must cover every generator");
        p.zr = make_multi_grading(p.alphabet, std::move(degs));
    }
    for (const auto& [text, at] : rel_texts) {
        PolyParser pp(text, at, &p.alphabet, p.params, p.order);
        p.relations.push_back(pp.parse());
    }
    validate_presentation(p);
    return p;
}

Presentation load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open algebra file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

} // namespace ncg
