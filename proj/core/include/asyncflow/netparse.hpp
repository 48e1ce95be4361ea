#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "asyncflow/network.hpp"
#include "asyncflow/state.hpp"

namespace asyncflow {

// Boolean expression over x1..xn with the operators (strongest first)
// !  complement, &  conjunction, ^  exclusive or, |  disjunction.
class BoolExpr {
public:
    enum class Kind { constant, variable, negation, conjunction, exclusive_or, disjunction };

    static BoolExpr constant(bool value);
    static BoolExpr variable(std::size_t index);
    static BoolExpr negation(BoolExpr operand);
    static BoolExpr binary(Kind kind, BoolExpr lhs, BoolExpr rhs);

    Kind kind() const noexcept { return node_->kind; }
    bool value() const noexcept { return node_->value; }
    std::size_t index() const noexcept { return node_->index; }
    const BoolExpr& lhs() const noexcept { return node_->children[0]; }
    const BoolExpr& rhs() const noexcept { return node_->children[1]; }
    const BoolExpr& operand() const noexcept { return node_->children[0]; }

    // Highest variable index referenced, 0 for closed expressions.
    std::size_t max_variable() const;

    // Same tree shape (used to check precedence).
    friend bool same_shape(const BoolExpr& a, const BoolExpr& b);

private:
    struct Node {
        Kind kind;
        bool value = false;
        std::size_t index = 0;
        std::vector<BoolExpr> children;
    };
    explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Phi as n equations x<i> = <expr>, equations[i-1] defining coordinate i.
struct NetworkFile {
    std::size_t width = 0;
    std::vector<BoolExpr> equations;
};

// One equation per line, '#' comments, optional "n = <int>" header.
// ParseError (with line/column) on any malformed input.
NetworkFile parse_network(std::string_view text);
// Parses a single expression (no equations).
BoolExpr parse_expr(std::string_view text);

// DomainError when a variable index exceeds mu's width.
bool eval_expr(const BoolExpr& e, const State& mu);

// CapacityError for n > 20.
Network compile(const NetworkFile& file);

// Canonical text with minimal parentheses.
std::string print_expr(const BoolExpr& e);
std::string print_network(const NetworkFile& file);

// Sum-of-minterms equations for an explicit network.
NetworkFile to_network_file(const Network& net);

NetworkFile load_network_file(const std::string& path);

} // namespace asyncflow
