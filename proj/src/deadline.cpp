#include "rookpoly/deadline.hpp"

#include <optional>

namespace rookpoly::detail {

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;

}  // namespace

DeadlineScope::DeadlineScope(std::chrono::milliseconds budget) {
    auto candidate = std::chrono::steady_clock::now() + budget;
    had_previous_ = g_deadline.has_value();
    if (had_previous_) previous_ = *g_deadline;
    g_deadline = had_previous_ ? std::min(previous_, candidate) : candidate;
}

DeadlineScope::~DeadlineScope() {
    if (had_previous_)
        g_deadline = previous_;
    else
        g_deadline.reset();
}

void poll_deadline() {
    if (g_deadline && std::chrono::steady_clock::now() > *g_deadline) throw ComputeTimeout();
}

}  // namespace rookpoly::detail
