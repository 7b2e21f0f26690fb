#include <cctype>
#include <map>

#include "ene/error.hpp"
#include "ene/expr.hpp"

namespace ene {
namespace {

enum class Tok { Number, ImagNumber, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    digits += text_[pos_];
                    advance();
                }
                if (pos_ < text_.size() && text_[pos_] == '.')
                    throw ParseError("decimal literals are not supported (use p/q)", line_, col_);
                if (pos_ < text_.size() && text_[pos_] == 'i' && !is_ident_char(peek_at(pos_ + 1))) {
                    advance();
                    out.push_back({Tok::ImagNumber, digits, line, col});
                } else {
                    out.push_back({Tok::Number, digits, line, col});
                }
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name;
                while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                    name += text_[pos_];
                    advance();
                }
                out.push_back({Tok::Ident, name, line, col});
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '/': kind = Tok::Slash; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case ',': kind = Tok::Comma; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
            }
            advance();
            out.push_back({kind, std::string(1, c), line, col});
        }
    }

private:
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    char peek_at(std::size_t p) const { return p < text_.size() ? text_[p] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

ExprPtr make(ExprKind kind, const Token& at, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    e->args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expression();
        if (cur().kind != Tok::End) throw ParseError("unexpected trailing input", cur().line, cur().column);
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& eat() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (cur().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, cur().line, cur().column);
    }

    ExprPtr expression() {
        ExprPtr left = term();
        for (;;) {
            if (cur().kind == Tok::Plus) {
                Token op = eat();
                left = make(ExprKind::Add, op, {left, term()});
            } else if (cur().kind == Tok::Minus) {
                Token op = eat();
                left = make(ExprKind::Sub, op, {left, term()});
            } else {
                return left;
            }
        }
    }

    ExprPtr term() {
        ExprPtr left = unary();
        for (;;) {
            if (cur().kind == Tok::Star) {
                Token op = eat();
                left = make(ExprKind::Mul, op, {left, unary()});
            } else if (cur().kind == Tok::Slash) {
                Token op = eat();
                left = make(ExprKind::Div, op, {left, unary()});
            } else {
                return left;
            }
        }
    }

    ExprPtr unary() {
        if (cur().kind == Tok::Minus) {
            Token op = eat();
            return make(ExprKind::Neg, op, {unary()});
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (cur().kind == Tok::Caret) {
            Token op = eat();
            // right side binds at unary level: z^-2, z^2^3 work as expected
            return make(ExprKind::Pow, op, {base, unary()});
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Number: {
                eat();
                auto e = make(ExprKind::Scalar, t);
                const_cast<Expr&>(*e).scalar = GaussianRational(Rational::from_string(t.text));
                return e;
            }
            case Tok::ImagNumber: {
                eat();
                auto e = make(ExprKind::Scalar, t);
                const_cast<Expr&>(*e).scalar =
                    GaussianRational(Rational(0), Rational::from_string(t.text));
                return e;
            }
            case Tok::LParen: {
                eat();
                ExprPtr e = expression();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident:
                return identifier();
            case Tok::End:
                throw ParseError("expected operand", t.line, t.column);
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.line, t.column);
        }
    }

    ExprPtr identifier() {
        Token t = eat();
        if (t.text == "z") return make(ExprKind::Variable, t);
        if (t.text == "i") {
            auto e = make(ExprKind::Scalar, t);
            const_cast<Expr&>(*e).scalar = GaussianRational::i();
            return e;
        }
        static const std::map<std::string, std::pair<ExprKind, int>> functions = {
            {"exp", {ExprKind::Exp, 1}},
            {"R", {ExprKind::EulerGen, 2}},
            {"Li", {ExprKind::Polylog, 1}},
            {"ene", {ExprKind::Ene, 2}},
            {"zinf", {ExprKind::SymbolAtInf, 2}},
        };
        auto it = functions.find(t.text);
        if (it == functions.end()) {
            if (cur().kind == Tok::LParen)
                throw ParseError("unknown function '" + t.text + "'", t.line, t.column);
            throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
        }
        expect(Tok::LParen, "'(' after function name");
        std::vector<ExprPtr> args;
        if (cur().kind != Tok::RParen) {
            args.push_back(expression());
            while (accept(Tok::Comma)) args.push_back(expression());
        }
        expect(Tok::RParen, "')'");
        if (static_cast<int>(args.size()) != it->second.second)
            throw ParseError(t.text + " expects " + std::to_string(it->second.second) + " argument" +
                                 (it->second.second == 1 ? "" : "s"),
                             t.line, t.column);
        return make(it->second.first, t, std::move(args));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Add:
        case ExprKind::Sub:
            return 1;
        case ExprKind::Mul:
        case ExprKind::Div:
            return 2;
        case ExprKind::Neg:
            return 3;
        case ExprKind::Pow:
            return 4;
        default:
            return 5;  // atoms and calls never need parentheses
    }
}

void render(const ExprPtr& e, std::string& out);

void render_wrapped(const ExprPtr& child, int min_prec, std::string& out) {
    bool wrap = precedence(child->kind) < min_prec;
    if (wrap) out += "(";
    render(child, out);
    if (wrap) out += ")";
}

void render(const ExprPtr& e, std::string& out) {
    switch (e->kind) {
        case ExprKind::Scalar: {
            // scalar nodes from the parser are nonnegative, real or pure
            // imaginary; other values only occur in programmatic trees
            const GaussianRational& s = e->scalar;
            if (s == GaussianRational::i()) {
                out += "i";
            } else if (s.is_real()) {
                out += s.real().to_string();
            } else if (s.real().is_zero()) {
                out += s.imag().to_string() + "i";
            } else {
                out += "(" + s.real().to_string() + "+" + s.imag().to_string() + "i)";
            }
            return;
        }
        case ExprKind::Variable:
            out += "z";
            return;
        case ExprKind::Add:
            render_wrapped(e->args[0], 1, out);
            out += " + ";
            render_wrapped(e->args[1], 2, out);
            return;
        case ExprKind::Sub:
            render_wrapped(e->args[0], 1, out);
            out += " - ";
            render_wrapped(e->args[1], 2, out);
            return;
        case ExprKind::Mul:
            render_wrapped(e->args[0], 2, out);
            out += "*";
            render_wrapped(e->args[1], 3, out);
            return;
        case ExprKind::Div:
            render_wrapped(e->args[0], 2, out);
            out += "/";
            render_wrapped(e->args[1], 3, out);
            return;
        case ExprKind::Neg:
            out += "-";
            render_wrapped(e->args[0], 3, out);
            return;
        case ExprKind::Pow:
            render_wrapped(e->args[0], 5, out);
            out += "^";
            render_wrapped(e->args[1], 5, out);
            return;
        case ExprKind::Exp:
            out += "exp(";
            render(e->args[0], out);
            out += ")";
            return;
        case ExprKind::EulerGen:
            out += "R(";
            render(e->args[0], out);
            out += ", ";
            render(e->args[1], out);
            out += ")";
            return;
        case ExprKind::Polylog:
            out += "Li(";
            render(e->args[0], out);
            out += ")";
            return;
        case ExprKind::Ene:
            out += "ene(";
            render(e->args[0], out);
            out += ", ";
            render(e->args[1], out);
            out += ")";
            return;
        case ExprKind::SymbolAtInf:
            out += "zinf(";
            render(e->args[0], out);
            out += ", ";
            render(e->args[1], out);
            out += ")";
            return;
    }
}

}  // namespace

ExprPtr parse_expression(const std::string& text) {
    return Parser(Lexer(text).run()).run();
}

std::string render_expression(const ExprPtr& e) {
    std::string out;
    render(e, out);
    return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    if (a->kind == ExprKind::Scalar && a->scalar != b->scalar) return false;
    if (a->args.size() != b->args.size()) return false;
    for (std::size_t j = 0; j < a->args.size(); ++j)
        if (!expr_equal(a->args[j], b->args[j])) return false;
    return true;
}

}  // namespace ene
