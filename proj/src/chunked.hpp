#ifndef WSM_SRC_CHUNKED_HPP
#define WSM_SRC_CHUNKED_HPP

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "wsm/types.hpp"

namespace wsm::detail {

// Split a window-start domain [0, count) into at most `parts` non-empty
// contiguous ranges.
inline std::vector<Interval> split_work(std::size_t count, unsigned parts) {
    if (parts < 1) parts = 1;
    if (parts > count) parts = static_cast<unsigned>(std::max<std::size_t>(1, count));
    std::vector<Interval> out;
    out.reserve(parts);
    const std::size_t base = count / parts;
    const std::size_t extra = count % parts;
    std::size_t at = 0;
    for (unsigned k = 0; k < parts; ++k) {
        const std::size_t len = base + (k < extra ? 1 : 0);
        out.push_back({at, len});
        at += len;
    }
    return out;
}

// fn(chunk_index, range) runs on its own thread per chunk; exceptions are
// collected and the first one rethrown after the join.
template <typename Fn>
void parallel_chunks(const std::vector<Interval>& chunks, Fn&& fn) {
    if (chunks.size() <= 1) {
        if (!chunks.empty()) fn(std::size_t{0}, chunks[0]);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks.size());
    std::vector<std::thread> workers;
    workers.reserve(chunks.size());
    for (std::size_t k = 0; k < chunks.size(); ++k) {
        workers.emplace_back([&, k] {
            try {
                fn(k, chunks[k]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace wsm::detail

#endif
