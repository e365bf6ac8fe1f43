#include "qtheta/expr.hpp"

#include <cctype>
#include <utility>

#include "qtheta/mock.hpp"
#include "qtheta/thetas.hpp"

namespace qtheta {

namespace {

// ---------- tokenizer ----------

struct Token {
    enum class Kind { Integer, Ident, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    long value = 0;
    size_t pos = 0;
};

[[noreturn]] void parse_fail(size_t pos, const std::string& what) {
    raise(ErrorCode::ParseError, "parse error at position " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    size_t k = 0;
    while (k < text.size()) {
        char c = text[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = k;
            long value = 0;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                if (value > 100000000) parse_fail(start, "integer literal too large");
                value = 10 * value + (text[k] - '0');
                ++k;
            }
            tokens.push_back({Token::Kind::Integer, text.substr(start, k - start), value, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = k;
            while (k < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_'))
                ++k;
            tokens.push_back({Token::Kind::Ident, text.substr(start, k - start), 0, start});
            continue;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            tokens.push_back({Token::Kind::Symbol, std::string(1, c), 0, k});
            ++k;
            continue;
        }
        parse_fail(k, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({Token::Kind::End, "", 0, text.size()});
    return tokens;
}

// ---------- parser ----------

ExprPtr make(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }

ExprPtr binary(ExprNode::Kind kind, ExprPtr l, ExprPtr r) {
    ExprNode node;
    node.kind = kind;
    node.args = {std::move(l), std::move(r)};
    return make(std::move(node));
}

bool is_constant_name(const std::string& name) {
    return name == "zeta" || name == "i" || name == "omega" || name == "alpha" ||
           name == "sqrt2" || name == "sqrt3";
}

bool is_call_name(const std::string& name) {
    return name == "j" || name == "J" || name == "Jm" || name == "Jbar" || name == "phi" ||
           name == "psi" || name == "g" || name == "G" || name == "f" || name == "m" ||
           name == "poch" || name == "subst" || name == "twist";
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    ExprPtr run() {
        ExprPtr node = expression();
        if (!at_end()) parse_fail(peek().pos, "trailing input");
        return node;
    }

private:
    std::vector<Token> tokens_;
    size_t k_ = 0;

    const Token& peek() const { return tokens_[k_]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }
    bool is_symbol(const char* s) const {
        return peek().kind == Token::Kind::Symbol && peek().text == s;
    }
    Token take() { return tokens_[k_++]; }
    void expect_symbol(const char* s) {
        if (!is_symbol(s)) parse_fail(peek().pos, std::string("expected '") + s + "'");
        ++k_;
    }

    long signed_integer() {
        bool negative = false;
        if (is_symbol("-")) {
            negative = true;
            ++k_;
        }
        if (peek().kind != Token::Kind::Integer) parse_fail(peek().pos, "expected an integer");
        long value = take().value;
        return negative ? -value : value;
    }

    ExprPtr expression() {
        ExprPtr node = term();
        while (is_symbol("+") || is_symbol("-")) {
            bool plus = take().text == "+";
            node = binary(plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub, node, term());
        }
        return node;
    }

    ExprPtr term() {
        ExprPtr node = power();
        while (is_symbol("*") || is_symbol("/")) {
            bool times = take().text == "*";
            node = binary(times ? ExprNode::Kind::Mul : ExprNode::Kind::Div, node, power());
        }
        return node;
    }

    ExprPtr power() {
        ExprPtr node = unary();
        if (is_symbol("^")) {
            ++k_;
            ExprNode pow;
            pow.kind = ExprNode::Kind::Pow;
            pow.exponent = signed_integer();
            pow.args = {node};
            node = make(std::move(pow));
        }
        return node;
    }

    ExprPtr unary() {
        if (is_symbol("-")) {
            ++k_;
            ExprNode node;
            node.kind = ExprNode::Kind::Neg;
            node.args = {unary()};
            return make(std::move(node));
        }
        return atom();
    }

    ExprPtr atom() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::Integer) {
            ExprNode node;
            node.kind = ExprNode::Kind::Number;
            node.number = take().value;
            return make(std::move(node));
        }
        if (is_symbol("(")) {
            ++k_;
            ExprPtr node = expression();
            expect_symbol(")");
            return node;
        }
        if (tok.kind == Token::Kind::Ident) {
            Token name = take();
            if (name.text == "q") {
                ExprNode node;
                node.kind = ExprNode::Kind::Q;
                return make(std::move(node));
            }
            if (is_symbol("(")) {
                if (!is_call_name(name.text))
                    parse_fail(name.pos, "unknown function '" + name.text + "'");
                ++k_;
                ExprNode node;
                node.kind = ExprNode::Kind::Call;
                node.name = name.text;
                if (!is_symbol(")")) {
                    node.args.push_back(expression());
                    while (is_symbol(",")) {
                        ++k_;
                        node.args.push_back(expression());
                    }
                }
                expect_symbol(")");
                return make(std::move(node));
            }
            if (name.text == "phi" || name.text == "psi") {
                ExprNode node;
                node.kind = ExprNode::Kind::Call;
                node.name = name.text;
                return make(std::move(node));
            }
            if (is_constant_name(name.text)) {
                ExprNode node;
                node.kind = ExprNode::Kind::Constant;
                node.name = name.text;
                return make(std::move(node));
            }
            parse_fail(name.pos, "unknown name '" + name.text + "'");
        }
        parse_fail(tok.pos, "expected a value");
    }
};

// ---------- constant folding for arguments ----------

Cyc eval_constant(const ExprPtr& node) {
    switch (node->kind) {
        case ExprNode::Kind::Number: return Cyc(node->number);
        case ExprNode::Kind::Constant:
            return node->name == "zeta" ? Cyc::zeta_pow(1) : Cyc::embed(node->name);
        case ExprNode::Kind::Add: return eval_constant(node->args[0]) + eval_constant(node->args[1]);
        case ExprNode::Kind::Sub: return eval_constant(node->args[0]) - eval_constant(node->args[1]);
        case ExprNode::Kind::Mul: return eval_constant(node->args[0]) * eval_constant(node->args[1]);
        case ExprNode::Kind::Div: return eval_constant(node->args[0]) * eval_constant(node->args[1]).inv();
        case ExprNode::Kind::Pow: return eval_constant(node->args[0]).pow(node->exponent);
        case ExprNode::Kind::Neg: return -eval_constant(node->args[0]);
        case ExprNode::Kind::Q:
        case ExprNode::Kind::Call:
            raise(ErrorCode::BadArgument, "expected a constant expression (no q, no series)");
    }
    raise(ErrorCode::BadArgument, "expected a constant expression");
}

long eval_integer(const ExprPtr& node) {
    switch (node->kind) {
        case ExprNode::Kind::Number: {
            Rational r = node->number;
            if (r.get_den() != 1) raise(ErrorCode::BadArgument, "expected an integer argument");
            if (!r.get_num().fits_slong_p())
                raise(ErrorCode::BadArgument, "integer argument out of range");
            return r.get_num().get_si();
        }
        case ExprNode::Kind::Neg: return -eval_integer(node->args[0]);
        default: raise(ErrorCode::BadArgument, "expected an integer argument");
    }
}

void need_args(const ExprPtr& node, size_t low, size_t high) {
    if (node->args.size() < low || node->args.size() > high)
        raise(ErrorCode::BadArgument, "wrong number of arguments for " + node->name);
}

QSeries eval_call(const ExprPtr& node, long order) {
    const std::string& name = node->name;
    if (name == "phi") {
        need_args(node, 0, 0);
        return phi(order);
    }
    if (name == "psi") {
        need_args(node, 0, 0);
        return psi(order);
    }
    if (name == "j") {
        need_args(node, 3, 3);
        return theta_j({{eval_constant(node->args[0]), eval_integer(node->args[1])},
                        eval_integer(node->args[2])},
                       order);
    }
    if (name == "J") {
        need_args(node, 1, 2);
        if (node->args.size() == 1) return Jm(eval_integer(node->args[0]), order);
        return J(eval_integer(node->args[0]), eval_integer(node->args[1]), order);
    }
    if (name == "Jm") {
        need_args(node, 1, 1);
        return Jm(eval_integer(node->args[0]), order);
    }
    if (name == "Jbar") {
        need_args(node, 2, 2);
        return Jbar(eval_integer(node->args[0]), eval_integer(node->args[1]), order);
    }
    if (name == "g") {
        need_args(node, 2, 3);
        long base = node->args.size() == 3 ? eval_integer(node->args[2]) : 1;
        return g_mock({eval_constant(node->args[0]), eval_integer(node->args[1])}, order, base);
    }
    if (name == "G") {
        need_args(node, 1, 2);
        long e = node->args.size() == 2 ? eval_integer(node->args[1]) : 0;
        return G_rank({eval_constant(node->args[0]), e}, order);
    }
    if (name == "f") {
        need_args(node, 1, 1);
        return f_a(eval_constant(node->args[0]), order);
    }
    if (name == "m") {
        need_args(node, 5, 5);
        return appell_m({{eval_constant(node->args[0]), eval_integer(node->args[1])},
                         {eval_constant(node->args[3]), eval_integer(node->args[4])},
                         eval_integer(node->args[2])},
                        order);
    }
    if (name == "poch") {
        need_args(node, 3, 3);
        return pochhammer_inf({eval_constant(node->args[0]), eval_integer(node->args[1])},
                              eval_integer(node->args[2]), order);
    }
    if (name == "subst") {
        need_args(node, 2, 2);
        long k = eval_integer(node->args[1]);
        if (k < 1) raise(ErrorCode::BadArgument, "subst exponent must be >= 1");
        return eval_expr(node->args[0], order / k + 2).subst_q_power(k).truncate(order);
    }
    if (name == "twist") {
        need_args(node, 2, 2);
        return eval_expr(node->args[0], order).twist(eval_constant(node->args[1]));
    }
    raise(ErrorCode::BadArgument, "unknown function '" + name + "'");
}

// ---------- printing ----------

bool prints_tight(const ExprPtr& node) {
    switch (node->kind) {
        case ExprNode::Kind::Number: return node->number >= 0;
        case ExprNode::Kind::Constant:
        case ExprNode::Kind::Q:
        case ExprNode::Kind::Call: return true;
        default: return false;
    }
}

std::string wrapped(const ExprPtr& node) {
    std::string inner = expr_to_string(node);
    return prints_tight(node) ? inner : "(" + inner + ")";
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string expr_to_string(const ExprPtr& node) {
    switch (node->kind) {
        case ExprNode::Kind::Number: return node->number.get_str();
        case ExprNode::Kind::Constant: return node->name;
        case ExprNode::Kind::Q: return "q";
        case ExprNode::Kind::Call: {
            if (node->args.empty() && (node->name == "phi" || node->name == "psi"))
                return node->name;
            std::string out = node->name + "(";
            for (size_t k = 0; k < node->args.size(); ++k) {
                if (k) out += ", ";
                out += expr_to_string(node->args[k]);
            }
            return out + ")";
        }
        case ExprNode::Kind::Add:
            return expr_to_string(node->args[0]) + " + " + wrapped(node->args[1]);
        case ExprNode::Kind::Sub:
            return expr_to_string(node->args[0]) + " - " + wrapped(node->args[1]);
        case ExprNode::Kind::Mul: return wrapped(node->args[0]) + "*" + wrapped(node->args[1]);
        case ExprNode::Kind::Div: return wrapped(node->args[0]) + "/" + wrapped(node->args[1]);
        case ExprNode::Kind::Pow:
            return wrapped(node->args[0]) + "^" + std::to_string(node->exponent);
        case ExprNode::Kind::Neg: return "-" + wrapped(node->args[0]);
    }
    raise(ErrorCode::BadArgument, "malformed expression tree");
}

QSeries eval_expr(const ExprPtr& node, long order) {
    switch (node->kind) {
        case ExprNode::Kind::Number:
            return QSeries::monomial({Cyc(node->number), 0}, order);
        case ExprNode::Kind::Constant:
            return QSeries::monomial({eval_constant(node), 0}, order);
        case ExprNode::Kind::Q: return QSeries::q_power(1, order);
        case ExprNode::Kind::Call: return eval_call(node, order);
        case ExprNode::Kind::Add: return eval_expr(node->args[0], order) + eval_expr(node->args[1], order);
        case ExprNode::Kind::Sub: return eval_expr(node->args[0], order) - eval_expr(node->args[1], order);
        case ExprNode::Kind::Mul: return eval_expr(node->args[0], order) * eval_expr(node->args[1], order);
        case ExprNode::Kind::Div:
            return eval_expr(node->args[0], order) / eval_expr(node->args[1], order);
        case ExprNode::Kind::Pow: {
            long k = node->exponent;
            QSeries base = eval_expr(node->args[0], order);
            return k >= 0 ? base.pow(k) : base.invert().pow(-k);
        }
        case ExprNode::Kind::Neg: return -eval_expr(node->args[0], order);
    }
    raise(ErrorCode::BadArgument, "malformed expression tree");
}

QSeries expand_expr(const std::string& text, long order) {
    if (order < 0) raise(ErrorCode::BadArgument, "order must be nonnegative");
    ExprPtr node = parse_expr(text);
    long target = order;
    for (int attempt = 0; attempt < 6; ++attempt) {
        QSeries out = eval_expr(node, target);
        if (out.order() >= order) return out.truncate(order);
        target += (order - out.order()) + 4;
    }
    raise(ErrorCode::OutOfRange, "expression did not reach the requested order");
}

Monomial monomial_from_expr(const std::string& text) {
    QSeries series = expand_expr(text, 32);
    Monomial found{Cyc(0), 0};
    int nonzero = 0;
    for (long n = series.valuation(); n <= series.order(); ++n) {
        if (!series.coeff(n).is_zero()) {
            ++nonzero;
            found = {series.coeff(n), n};
        }
    }
    if (nonzero != 1)
        raise(ErrorCode::BadArgument,
              "expected a single monomial c*q^e, got '" + text + "'");
    return found;
}

}  // namespace qtheta
