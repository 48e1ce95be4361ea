#include "asyncflow/netparse.hpp"

#include <fstream>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "asyncflow/errors.hpp"

namespace asyncflow {

BoolExpr BoolExpr::constant(bool value)
{
    return BoolExpr(std::make_shared<const Node>(Node{Kind::constant, value, 0, {}}));
}

BoolExpr BoolExpr::variable(std::size_t index)
{
    return BoolExpr(std::make_shared<const Node>(Node{Kind::variable, false, index, {}}));
}

BoolExpr BoolExpr::negation(BoolExpr operand)
{
    return BoolExpr(std::make_shared<const Node>(Node{Kind::negation, false, 0, {std::move(operand)}}));
}

BoolExpr BoolExpr::binary(Kind kind, BoolExpr lhs, BoolExpr rhs)
{
    if (kind != Kind::conjunction && kind != Kind::exclusive_or && kind != Kind::disjunction) {
        throw DomainError("not a binary operator");
    }
    return BoolExpr(std::make_shared<const Node>(Node{kind, false, 0, {std::move(lhs), std::move(rhs)}}));
}

std::size_t BoolExpr::max_variable() const
{
    std::size_t best = kind() == Kind::variable ? index() : 0;
    for (const auto& child : node_->children) {
        best = std::max(best, child.max_variable());
    }
    return best;
}

bool same_shape(const BoolExpr& a, const BoolExpr& b)
{
    if (a.kind() != b.kind() || a.value() != b.value() || a.index() != b.index()) {
        return false;
    }
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    if (ca.size() != cb.size()) {
        return false;
    }
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!same_shape(ca[i], cb[i])) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr std::size_t max_nesting = 256;
constexpr std::size_t max_index_digits = 9;

// Recursive-descent parser over a single line of text.
class LineParser {
public:
    LineParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of line";
        throw ParseError(what + ", found " + found, line_, column());
    }

    // "x<digits>", the cursor on 'x'.
    std::size_t variable()
    {
        if (peek() != 'x') {
            fail("expected a variable x<i>");
        }
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a coordinate index after 'x'");
        }
        if (pos_ - start > max_index_digits) {
            throw ParseError("coordinate index too large", line_, start + 1);
        }
        const std::size_t index = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (index == 0) {
            throw ParseError("coordinate indices start at 1", line_, start + 1);
        }
        return index;
    }

    std::size_t integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected an integer");
        }
        if (pos_ - start > max_index_digits) {
            throw ParseError("integer too large", line_, start + 1);
        }
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    BoolExpr expression(std::size_t depth = 0)
    {
        if (depth > max_nesting) {
            fail("expression nested too deeply");
        }
        BoolExpr lhs = exclusive_or(depth);
        while (peek() == '|') {
            ++pos_;
            lhs = BoolExpr::binary(BoolExpr::Kind::disjunction, lhs, exclusive_or(depth));
        }
        return lhs;
    }

    // Positions where a variable was referenced, for range diagnostics.
    std::vector<std::pair<std::size_t, std::size_t>> references;

private:
    BoolExpr exclusive_or(std::size_t depth)
    {
        BoolExpr lhs = conjunction(depth);
        while (peek() == '^') {
            ++pos_;
            lhs = BoolExpr::binary(BoolExpr::Kind::exclusive_or, lhs, conjunction(depth));
        }
        return lhs;
    }

    BoolExpr conjunction(std::size_t depth)
    {
        BoolExpr lhs = unary(depth);
        while (peek() == '&') {
            ++pos_;
            lhs = BoolExpr::binary(BoolExpr::Kind::conjunction, lhs, unary(depth));
        }
        return lhs;
    }

    BoolExpr unary(std::size_t depth)
    {
        if (depth > max_nesting) {
            fail("expression nested too deeply");
        }
        switch (peek()) {
        case '!':
            ++pos_;
            return BoolExpr::negation(unary(depth + 1));
        case '(': {
            ++pos_;
            BoolExpr inner = expression(depth + 1);
            expect(')');
            return inner;
        }
        case '0':
        case '1': {
            const bool value = text_[pos_] == '1';
            ++pos_;
            return BoolExpr::constant(value);
        }
        case 'x': {
            const std::size_t col = column();
            const std::size_t index = variable();
            references.emplace_back(index, col);
            return BoolExpr::variable(index);
        }
        default:
            fail("expected an operand");
        }
    }

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Definition {
    BoolExpr expr;
    std::size_t line;
};

struct Reference {
    std::size_t index;
    std::size_t line;
    std::size_t column;
};

enum Precedence { disjunction = 1, exclusive_or = 2, conjunction = 3, negation = 4, atom = 5 };

int precedence(const BoolExpr& e)
{
    switch (e.kind()) {
    case BoolExpr::Kind::disjunction:
        return disjunction;
    case BoolExpr::Kind::exclusive_or:
        return exclusive_or;
    case BoolExpr::Kind::conjunction:
        return conjunction;
    case BoolExpr::Kind::negation:
        return negation;
    default:
        return atom;
    }
}

void print_into(std::string& out, const BoolExpr& e)
{
    const auto child = [&out](const BoolExpr& c, bool parens) {
        if (parens) {
            out += '(';
        }
        print_into(out, c);
        if (parens) {
            out += ')';
        }
    };
    switch (e.kind()) {
    case BoolExpr::Kind::constant:
        out += e.value() ? '1' : '0';
        return;
    case BoolExpr::Kind::variable:
        out += 'x' + std::to_string(e.index());
        return;
    case BoolExpr::Kind::negation:
        out += '!';
        child(e.operand(), precedence(e.operand()) < negation);
        return;
    default:
        break;
    }
    const int p = precedence(e);
    const char* op = e.kind() == BoolExpr::Kind::conjunction ? " & " : e.kind() == BoolExpr::Kind::exclusive_or ? " ^ " : " | ";
    // Operators group to the left, so an equal-precedence right operand
    // keeps its parentheses.
    child(e.lhs(), precedence(e.lhs()) < p);
    out += op;
    child(e.rhs(), precedence(e.rhs()) <= p);
}

} // namespace

NetworkFile parse_network(std::string_view text)
{
    std::map<std::size_t, Definition> definitions;
    std::vector<Reference> references;
    std::optional<std::size_t> declared;
    std::size_t declared_line = 0;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto newline = text.find('\n', start);
        std::string_view line = text.substr(start, newline == std::string_view::npos ? text.size() - start : newline - start);
        start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        LineParser p(line, line_no);
        if (p.at_end()) {
            continue;
        }
        if (p.peek() == 'n') {
            if (declared) {
                p.fail("width declared twice");
            }
            p.expect('n');
            p.expect('=');
            declared = p.integer();
            declared_line = line_no;
            if (*declared == 0) {
                throw ParseError("width must be at least 1", line_no, 1);
            }
            if (!p.at_end()) {
                p.fail("unexpected text after width declaration");
            }
            continue;
        }
        const std::size_t column = p.column();
        const std::size_t index = p.variable();
        p.expect('=');
        BoolExpr expr = p.expression();
        if (!p.at_end()) {
            p.fail("unexpected text after expression");
        }
        if (definitions.count(index)) {
            throw ParseError("duplicate definition of x" + std::to_string(index) + " (first on line " +
                                 std::to_string(definitions.at(index).line) + ")",
                             line_no, column);
        }
        references.push_back({index, line_no, column});
        for (const auto& [ref, col] : p.references) {
            references.push_back({ref, line_no, col});
        }
        definitions.emplace(index, Definition{std::move(expr), line_no});
    }

    if (definitions.empty()) {
        throw ParseError("network defines no coordinates");
    }
    std::size_t width = 0;
    if (declared) {
        width = *declared;
        for (const auto& r : references) {
            if (r.index > width) {
                throw ParseError("x" + std::to_string(r.index) + " outside the declared width n = " +
                                     std::to_string(width) + " (line " + std::to_string(declared_line) + ")",
                                 r.line, r.column);
            }
        }
    } else {
        for (const auto& r : references) {
            width = std::max(width, r.index);
        }
    }
    std::size_t expected = 1;
    for (const auto& [index, def] : definitions) {
        if (index != expected) {
            break;
        }
        ++expected;
    }
    if (expected <= width) {
        throw ParseError("coordinate x" + std::to_string(expected) + " is not defined (n = " + std::to_string(width) +
                         ")");
    }

    NetworkFile file;
    file.width = width;
    for (auto& [index, def] : definitions) {
        file.equations.push_back(std::move(def.expr));
    }
    return file;
}

BoolExpr parse_expr(std::string_view text)
{
    LineParser p(text, 1);
    BoolExpr e = p.expression();
    if (!p.at_end()) {
        p.fail("unexpected text after expression");
    }
    return e;
}

bool eval_expr(const BoolExpr& e, const State& mu)
{
    switch (e.kind()) {
    case BoolExpr::Kind::constant:
        return e.value();
    case BoolExpr::Kind::variable:
        if (e.index() > mu.width()) {
            throw DomainError("x" + std::to_string(e.index()) + " outside a state of width " +
                              std::to_string(mu.width()));
        }
        return mu.test(e.index());
    case BoolExpr::Kind::negation:
        return !eval_expr(e.operand(), mu);
    case BoolExpr::Kind::conjunction:
        return eval_expr(e.lhs(), mu) && eval_expr(e.rhs(), mu);
    case BoolExpr::Kind::exclusive_or:
        return eval_expr(e.lhs(), mu) != eval_expr(e.rhs(), mu);
    case BoolExpr::Kind::disjunction:
        return eval_expr(e.lhs(), mu) || eval_expr(e.rhs(), mu);
    }
    return false;
}

Network compile(const NetworkFile& file)
{
    if (file.width == 0 || file.width > State::max_width) {
        throw CapacityError("networks are limited to 1 <= n <= 20, got " + std::to_string(file.width));
    }
    if (file.equations.size() != file.width) {
        throw DimensionError("network file has " + std::to_string(file.equations.size()) + " equations for n = " +
                             std::to_string(file.width));
    }
    return Network::from_function(file.width, [&file](const State& mu) {
        State out(mu.width());
        for (std::size_t i = 0; i < file.width; ++i) {
            if (eval_expr(file.equations[i], mu)) {
                out = out.with(i + 1, true);
            }
        }
        return out;
    });
}

std::string print_expr(const BoolExpr& e)
{
    std::string out;
    print_into(out, e);
    return out;
}

std::string print_network(const NetworkFile& file)
{
    std::string out;
    for (std::size_t i = 0; i < file.equations.size(); ++i) {
        out += "x" + std::to_string(i + 1) + " = " + print_expr(file.equations[i]) + "\n";
    }
    return out;
}

NetworkFile to_network_file(const Network& net)
{
    NetworkFile file;
    file.width = net.width();
    for (std::size_t i = 1; i <= net.width(); ++i) {
        const auto table = net.table(i);
        std::optional<BoolExpr> sum;
        for (std::uint32_t mu = 0; mu < table.size(); ++mu) {
            if (!table[mu]) {
                continue;
            }
            std::optional<BoolExpr> term;
            for (std::size_t j = 1; j <= net.width(); ++j) {
                BoolExpr literal = BoolExpr::variable(j);
                if (!((mu >> (j - 1)) & 1u)) {
                    literal = BoolExpr::negation(literal);
                }
                term = term ? BoolExpr::binary(BoolExpr::Kind::conjunction, *term, literal) : literal;
            }
            sum = sum ? BoolExpr::binary(BoolExpr::Kind::disjunction, *sum, *term) : *term;
        }
        const bool all = std::all_of(table.begin(), table.end(), [](bool b) { return b; });
        file.equations.push_back(all ? BoolExpr::constant(true) : sum.value_or(BoolExpr::constant(false)));
    }
    return file;
}

NetworkFile load_network_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open network file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_network(buffer.str());
}

} // namespace asyncflow
