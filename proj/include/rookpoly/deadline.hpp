#pragma once

#include <chrono>
#include <stdexcept>

namespace rookpoly::detail {

// Thrown by the long-running engines when the active deadline has passed.
struct ComputeTimeout : std::runtime_error {
    ComputeTimeout() : std::runtime_error("computation exceeded its time budget") {}
};

// RAII thread-local deadline. While a scope is alive on the current thread,
// poll_deadline() throws ComputeTimeout once the budget is exhausted; without
// a scope it is a no-op. Scopes nest, the tighter deadline wins.
class DeadlineScope {
public:
    explicit DeadlineScope(std::chrono::milliseconds budget);
    ~DeadlineScope();

    DeadlineScope(const DeadlineScope&) = delete;
    DeadlineScope& operator=(const DeadlineScope&) = delete;

private:
    std::chrono::steady_clock::time_point previous_;
    bool had_previous_;
};

void poll_deadline();

}  // namespace rookpoly::detail
