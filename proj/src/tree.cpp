#include "tgp/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgp {

std::string to_string(Op op)
{
    switch (op) {
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Nand: return "nand";
    case Op::Nor: return "nor";
    case Op::Input: return "x";
    }
    return "?";
}

ProgramTree::ProgramTree(std::vector<Primitive> nodes)
    : nodes_(std::move(nodes))
{
    if (nodes_.empty()) {
        throw std::invalid_argument("program tree must have at least one node");
    }
    // `open` counts subtrees still to be read; a prefix sequence is a single
    // tree iff it reaches zero exactly at the last node.
    std::size_t open = 1;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (open == 0) {
            throw std::invalid_argument("program tree has trailing nodes");
        }
        open += static_cast<std::size_t>(nodes_[i].arity());
        --open;
    }
    if (open != 0) {
        throw std::invalid_argument("program tree is missing children");
    }
}

ProgramTree ProgramTree::make(Op op, const ProgramTree& left, const ProgramTree& right)
{
    if (op == Op::Input) {
        throw std::invalid_argument("input terminal cannot have children");
    }
    std::vector<Primitive> nodes;
    nodes.reserve(1 + left.size() + right.size());
    nodes.push_back(Primitive::function(op));
    nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
    nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
    ProgramTree t;
    t.nodes_ = std::move(nodes);
    return t;
}

int ProgramTree::depth() const noexcept
{
    // pending[k] = children still to visit for the k-th open ancestor
    std::vector<int> pending;
    pending.reserve(32);
    int deepest = 0;
    for (const auto& node : nodes_) {
        deepest = std::max(deepest, static_cast<int>(pending.size()));
        if (node.arity() > 0) {
            pending.push_back(node.arity());
            continue;
        }
        while (!pending.empty() && --pending.back() == 0) {
            pending.pop_back();
        }
    }
    return deepest;
}

int ProgramTree::max_input() const noexcept
{
    int hi = -1;
    for (const auto& node : nodes_) {
        if (node.is_terminal()) {
            hi = std::max(hi, static_cast<int>(node.input));
        }
    }
    return hi;
}

std::size_t ProgramTree::function_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(),
        [](const Primitive& p) { return !p.is_terminal(); }));
}

std::size_t ProgramTree::subtree_end(std::size_t pos) const
{
    if (pos >= nodes_.size()) {
        throw std::out_of_range("subtree position out of range");
    }
    std::size_t need = 1;
    std::size_t i = pos;
    while (need > 0) {
        need += static_cast<std::size_t>(nodes_[i].arity());
        --need;
        ++i;
    }
    return i;
}

ProgramTree ProgramTree::subtree(std::size_t pos) const
{
    const auto end = subtree_end(pos);
    ProgramTree t;
    t.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(pos), nodes_.begin() + static_cast<std::ptrdiff_t>(end));
    return t;
}

int ProgramTree::node_depth(std::size_t pos) const
{
    if (pos >= nodes_.size()) {
        throw std::out_of_range("node position out of range");
    }
    std::vector<int> pending;
    for (std::size_t i = 0; i < pos; ++i) {
        if (nodes_[i].arity() > 0) {
            pending.push_back(nodes_[i].arity());
            continue;
        }
        while (!pending.empty() && --pending.back() == 0) {
            pending.pop_back();
        }
    }
    return static_cast<int>(pending.size());
}

ProgramTree ProgramTree::replace_subtree(std::size_t pos, const ProgramTree& replacement) const
{
    const auto end = subtree_end(pos);
    std::vector<Primitive> nodes;
    nodes.reserve(nodes_.size() - (end - pos) + replacement.size());
    nodes.insert(nodes.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(pos));
    nodes.insert(nodes.end(), replacement.nodes_.begin(), replacement.nodes_.end());
    nodes.insert(nodes.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(end), nodes_.end());
    ProgramTree t;
    t.nodes_ = std::move(nodes);
    return t;
}

std::string ProgramTree::to_string() const
{
    std::string out;
    std::vector<int> pending;
    for (const auto& node : nodes_) {
        if (!pending.empty()) {
            out += ' ';
        }
        if (node.is_terminal()) {
            out += 'x';
            out += std::to_string(node.input);
            while (!pending.empty() && --pending.back() == 0) {
                pending.pop_back();
                out += ')';
            }
        } else {
            out += '(';
            out += tgp::to_string(node.op);
            pending.push_back(node.arity());
        }
    }
    return out;
}

} // namespace tgp
