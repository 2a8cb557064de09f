#include "antdoes/oracle.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include <omp.h>

namespace antdoes {

BoxTooLargeError::BoxTooLargeError(std::int64_t p, std::size_t arity, std::uint64_t limit)
    : std::runtime_error("search box " + std::to_string(p) + "^" + std::to_string(arity) +
                         " exceeds the oracle node limit " + std::to_string(limit)) {}

std::uint64_t box_size(std::int64_t p, std::size_t arity) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < arity; ++i)
        if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(p), &size))
            return UINT64_MAX;
    return size;
}

namespace {

std::int64_t checked_box(const Equation& eq, std::uint64_t node_limit, std::uint64_t& size) {
    const std::int64_t p = bound_p(eq);
    size = box_size(p, eq.arity());
    if (size > node_limit)
        throw BoxTooLargeError(p, eq.arity(), node_limit);
    return p;
}

} // namespace

SolutionSet enumerate_serial(const Equation& eq, std::uint64_t node_limit) {
    std::uint64_t size = 0;
    const std::int64_t p = checked_box(eq, node_limit, size);

    SolutionSet result{{}, p, eq.arity(), true};
    std::vector<std::int64_t> coords(eq.arity(), 1);
    for (;;) {
        Node node(coords);
        if (fitness(eq, node).solves())
            result.solutions.push_back(std::move(node));
        // Odometer, last coordinate fastest, so output is lexicographic.
        std::size_t i = coords.size();
        while (i > 0 && coords[i - 1] == p)
            coords[--i] = 1;
        if (i == 0)
            break;
        ++coords[i - 1];
    }
    return result;
}

SolutionSet enumerate(const Equation& eq, std::uint64_t node_limit) {
    std::uint64_t size = 0;
    const std::int64_t p = checked_box(eq, node_limit, size);
    const std::size_t arity = eq.arity();
    const auto total = static_cast<std::int64_t>(size);

    std::vector<std::vector<Node>> found(static_cast<std::size_t>(omp_get_max_threads()));
    std::exception_ptr failure;

#pragma omp parallel
    {
        auto& local = found[static_cast<std::size_t>(omp_get_thread_num())];
        std::vector<std::int64_t> coords(arity);
#pragma omp for schedule(static)
        for (std::int64_t index = 0; index < total; ++index) {
            std::int64_t rest = index;
            for (std::size_t i = arity; i-- > 0;) {
                coords[i] = rest % p + 1;
                rest /= p;
            }
            try {
                Node node(coords);
                if (fitness(eq, node).solves())
                    local.push_back(std::move(node));
            } catch (...) {
#pragma omp critical(antdoes_oracle_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    SolutionSet result{{}, p, arity, true};
    for (auto& chunk : found)
        result.solutions.insert(result.solutions.end(), std::make_move_iterator(chunk.begin()),
                                std::make_move_iterator(chunk.end()));
    std::sort(result.solutions.begin(), result.solutions.end());
    return result;
}

} // namespace antdoes
