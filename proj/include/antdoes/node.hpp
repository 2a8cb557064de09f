#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace antdoes {

/// A candidate solution: one positive coordinate per equation variable,
/// stored in 1-based variable order (coords()[0] is x1).
class Node {
public:
    Node() = default;
    explicit Node(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    Node(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    std::span<const std::int64_t> coords() const noexcept { return coords_; }
    std::size_t dimension() const noexcept { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    /// "54,78"
    std::string to_string() const;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;

private:
    std::vector<std::int64_t> coords_;
};

struct NodeHash {
    std::size_t operator()(const Node& node) const noexcept;
};

} // namespace antdoes
