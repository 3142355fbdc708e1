#include "tamegamma/parser.hpp"

#include <cctype>
#include <vector>

namespace tamegamma {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

namespace {

enum class TokenKind { Number, Imaginary, ZVar, TVar, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t index = 0;  // variable index for ZVar (1-based)
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t pos = 0;
    auto advance = [&] {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    };
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '#') {
            while (pos < text.size() && text[pos] != '\n') advance();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        Token tok{TokenKind::End, std::string(1, c), 0, line, col};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = TokenKind::Number;
            tok.text.clear();
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                tok.text += text[pos];
                advance();
            }
            tokens.push_back(tok);
            continue;
        }
        if (c == 'z') {
            advance();
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                digits += text[pos];
                advance();
            }
            if (digits.empty()) throw ParseError("variable 'z' needs an index, e.g. z1", tok.line, tok.column);
            if (digits.size() > 6) throw ParseError("variable index too large", tok.line, tok.column);
            tok.kind = TokenKind::ZVar;
            tok.index = std::stoul(digits);
            if (tok.index == 0) throw ParseError("variable indices start at 1", tok.line, tok.column);
            tok.text = "z" + digits;
            tokens.push_back(tok);
            continue;
        }
        switch (c) {
            case 'i': tok.kind = TokenKind::Imaginary; break;
            case 't': tok.kind = TokenKind::TVar; break;
            case '+': tok.kind = TokenKind::Plus; break;
            case '-': tok.kind = TokenKind::Minus; break;
            case '*': tok.kind = TokenKind::Star; break;
            case '/': tok.kind = TokenKind::Slash; break;
            case '^': tok.kind = TokenKind::Caret; break;
            case '(': tok.kind = TokenKind::LParen; break;
            case ')': tok.kind = TokenKind::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance();
        if (tok.kind == TokenKind::Imaginary || tok.kind == TokenKind::TVar) {
            if (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                throw ParseError("unknown identifier starting with '" + tok.text + "'", tok.line, tok.column);
        }
        tokens.push_back(tok);
    }
    tokens.push_back(Token{TokenKind::End, "end of input", 0, line, col});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t n) : tokens_(std::move(tokens)), n_(n) {}

    SparsePolynomial parse() {
        if (peek().kind == TokenKind::End) throw ParseError("empty input", peek().line, peek().column);
        SparsePolynomial p = expression();
        if (peek().kind != TokenKind::End)
            throw ParseError("unexpected '" + peek().text + "'", peek().line, peek().column);
        return p;
    }

    bool saw_t() const { return saw_t_; }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    std::size_t nvars() const { return n_ + 1; }

    SparsePolynomial expression() {
        SparsePolynomial acc(nvars());
        bool negate = false;
        if (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) negate = next().kind == TokenKind::Minus;
        acc = term();
        if (negate) acc = -acc;
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const bool minus = next().kind == TokenKind::Minus;
            SparsePolynomial rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    SparsePolynomial term() {
        SparsePolynomial acc = factor();
        while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
            const Token op = next();
            const Token& at = peek();
            SparsePolynomial rhs = factor();
            if (op.kind == TokenKind::Star) {
                acc = acc * rhs;
            } else {
                if (!rhs.is_constant() || rhs.is_zero())
                    throw ParseError("division is only allowed by a nonzero constant", at.line, at.column);
                acc *= rhs.terms().begin()->second.inverse();
            }
        }
        return acc;
    }

    SparsePolynomial factor() {
        SparsePolynomial base = primary();
        if (peek().kind == TokenKind::Caret) {
            next();
            const Token& tok = peek();
            if (tok.kind == TokenKind::Minus) throw ParseError("negative exponent", tok.line, tok.column);
            if (tok.kind != TokenKind::Number) throw ParseError("exponent must be a non-negative integer", tok.line, tok.column);
            next();
            if (tok.text.size() > 6) throw ParseError("exponent too large", tok.line, tok.column);
            base = base.pow(static_cast<unsigned>(std::stoul(tok.text)));
        }
        return base;
    }

    SparsePolynomial primary() {
        const Token tok = next();
        switch (tok.kind) {
            case TokenKind::Number: {
                mpq_class value(tok.text, 10);
                return SparsePolynomial::constant(nvars(), GaussianRational(value));
            }
            case TokenKind::Imaginary:
                return SparsePolynomial::constant(nvars(), GaussianRational::imaginary_unit());
            case TokenKind::ZVar:
                if (tok.index > n_)
                    throw ParseError("variable " + tok.text + " exceeds the declared variable count " + std::to_string(n_),
                                     tok.line, tok.column);
                return SparsePolynomial::variable(nvars(), tok.index - 1);
            case TokenKind::TVar:
                saw_t_ = true;
                return SparsePolynomial::variable(nvars(), n_);
            case TokenKind::LParen: {
                SparsePolynomial inner = expression();
                const Token& close = peek();
                if (close.kind != TokenKind::RParen) throw ParseError("expected ')'", close.line, close.column);
                next();
                return inner;
            }
            case TokenKind::End:
                throw ParseError("unexpected end of input", tok.line, tok.column);
            default:
                throw ParseError("unexpected '" + tok.text + "'", tok.line, tok.column);
        }
    }

    std::vector<Token> tokens_;
    std::size_t n_;
    std::size_t pos_ = 0;
    bool saw_t_ = false;
};

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text, std::optional<std::size_t> n) {
    auto tokens = tokenize(text);
    std::size_t count = 0;
    if (n) {
        count = *n;
        if (count == 0 || count > 31) throw ParseError("variable count must be between 1 and 31", 1, 1);
    } else {
        count = 1;
        for (const auto& tok : tokens)
            if (tok.kind == TokenKind::ZVar) count = std::max(count, tok.index);
        if (count > 31) throw ParseError("at most 31 variables are supported", 1, 1);
    }
    Parser parser(std::move(tokens), count);
    SparsePolynomial joint = parser.parse();
    if (parser.saw_t()) return FamilyPolynomial::from_joint(joint);
    SparsePolynomial p(count);
    for (const auto& [e, c] : joint.terms()) p.add_term(ExponentVector(e.begin(), e.end() - 1), c);
    return p;
}

SparsePolynomial parse_sparse(std::string_view text, std::optional<std::size_t> n) {
    auto parsed = parse_polynomial(text, n);
    if (auto* p = std::get_if<SparsePolynomial>(&parsed)) return *p;
    throw ParseError("expected a polynomial without the parameter t", 1, 1);
}

FamilyPolynomial parse_family(std::string_view text, std::optional<std::size_t> n) {
    auto parsed = parse_polynomial(text, n);
    if (auto* f = std::get_if<FamilyPolynomial>(&parsed)) return *f;
    return FamilyPolynomial::constant_family(std::get<SparsePolynomial>(parsed));
}

}  // namespace tamegamma
