#include "antdoes/search_space.hpp"

#include <stdexcept>
#include <string>

namespace antdoes {

std::string Node::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(coords_[i]);
    }
    return out;
}

std::size_t NodeHash::operator()(const Node& node) const noexcept {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::int64_t c : node.coords())
        h = mix64(h ^ static_cast<std::uint64_t>(c));
    return static_cast<std::size_t>(h);
}

Node random_node(std::size_t arity, std::int64_t p, RandomSource& rng) {
    std::vector<std::int64_t> coords(arity);
    for (auto& c : coords)
        c = rng.uniform_int(1, p);
    return Node(std::move(coords));
}

Node random_node(const Equation& eq, RandomSource& rng) { return random_node(eq.arity(), bound_p(eq), rng); }

std::int64_t wrap_coordinate(std::int64_t x, std::int64_t offset, std::int64_t p) {
    const std::int64_t s = checked::add(x, offset);
    if (s <= p)
        return s;
    const std::int64_t r = s % p;
    return r == 0 ? p : r;
}

Node neighbor(const Node& node, std::int64_t p, RandomSource& rng) {
    std::vector<std::int64_t> coords(node.dimension());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = wrap_coordinate(node[i], rng.uniform_int(1, p), p);
    return Node(std::move(coords));
}

Node neighbor(const Equation& eq, const Node& node, RandomSource& rng) {
    if (node.dimension() != eq.arity())
        throw std::invalid_argument("neighbor: node dimension does not match equation arity");
    return neighbor(node, bound_p(eq), rng);
}

void neighborhood(const Node& node, std::int64_t p, std::size_t k, RandomSource& rng, std::vector<Node>& out) {
    if (k == 0)
        throw std::invalid_argument("neighborhood size must be at least 1");
    out.clear();
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(neighbor(node, p, rng));
}

std::vector<Node> neighborhood(const Equation& eq, const Node& node, std::size_t k, RandomSource& rng) {
    if (node.dimension() != eq.arity())
        throw std::invalid_argument("neighborhood: node dimension does not match equation arity");
    std::vector<Node> out;
    out.reserve(k);
    neighborhood(node, bound_p(eq), k, rng, out);
    return out;
}

} // namespace antdoes
