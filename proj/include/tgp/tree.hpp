#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tgp {

enum class Op : std::uint8_t { And, Or, Nand, Nor, Input };

struct Primitive {
    Op op = Op::Input;
    std::uint8_t input = 0; // meaningful only for Op::Input

    static constexpr Primitive terminal(std::uint8_t i) noexcept { return { Op::Input, i }; }
    static constexpr Primitive function(Op op) noexcept { return { op, 0 }; }

    constexpr int arity() const noexcept { return op == Op::Input ? 0 : 2; }
    constexpr bool is_terminal() const noexcept { return op == Op::Input; }

    friend constexpr bool operator==(Primitive, Primitive) = default;
};

inline constexpr Op kFunctionSet[] = { Op::And, Op::Or, Op::Nand, Op::Nor };

std::string to_string(Op op);

// A Boolean expression tree stored as a prefix-ordered node sequence. Every
// subtree occupies a contiguous range [pos, subtree_end(pos)).
class ProgramTree {
public:
    ProgramTree() : nodes_ { Primitive::terminal(0) } {}

    // Throws std::invalid_argument unless `nodes` is a single well-formed prefix tree.
    explicit ProgramTree(std::vector<Primitive> nodes);

    static ProgramTree input(std::uint8_t i) { return ProgramTree(std::vector { Primitive::terminal(i) }); }
    static ProgramTree make(Op op, const ProgramTree& left, const ProgramTree& right);

    std::span<const Primitive> nodes() const noexcept { return nodes_; }
    const Primitive& operator[](std::size_t pos) const { return nodes_[pos]; }

    std::size_t size() const noexcept { return nodes_.size(); }
    // Longest root-to-leaf path in edges; a single node has depth 0.
    int depth() const noexcept;
    // Highest input index referenced, or -1 if none.
    int max_input() const noexcept;
    std::size_t function_count() const noexcept;

    std::size_t subtree_end(std::size_t pos) const;
    ProgramTree subtree(std::size_t pos) const;
    // Depth of the node at `pos` measured from the root.
    int node_depth(std::size_t pos) const;
    ProgramTree replace_subtree(std::size_t pos, const ProgramTree& replacement) const;

    // S-expression, e.g. "(and x0 (nor x1 x2))".
    std::string to_string() const;

    friend bool operator==(const ProgramTree&, const ProgramTree&) = default;

private:
    std::vector<Primitive> nodes_;
};

inline std::size_t tree_size(const ProgramTree& t) noexcept { return t.size(); }
inline int tree_depth(const ProgramTree& t) noexcept { return t.depth(); }

} // namespace tgp
