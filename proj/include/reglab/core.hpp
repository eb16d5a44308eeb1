// Shared low-level pieces: vertex-set masks, subset iteration, search budgets.

#ifndef REGLAB_CORE_HPP
#define REGLAB_CORE_HPP

#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace reglab {

/// Vertex sets are bitmasks over ground sets of at most 64 elements.
/// Everything in this library lives at desk scale; 64 is plenty.
using Mask = std::uint64_t;

constexpr int kMaxGround = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int v) { return Mask{1} << v; }

inline bool contains(Mask m, int v) { return (m >> v) & 1; }

/// Mask with bits 0..n-1 set.
inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

/// Calls f(v) for every set bit of m, ascending.
template <typename F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

inline std::vector<int> mask_to_vector(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(popcount(m)));
    for_each_bit(m, [&](int v) { out.push_back(v); });
    return out;
}

inline Mask vector_to_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

/// Next mask with the same popcount in increasing numeric order (Gosper).
/// Returns 0 when exhausted. The numeric order on masks is the fixed
/// iteration order used throughout, so witnesses are deterministic.
inline Mask next_same_popcount(Mask m, int n) {
    if (m == 0) return 0;
    Mask c = m & -m;
    Mask r = m + c;
    Mask next = (((r ^ m) >> 2) / c) | r;
    return next < (Mask{1} << n) ? next : 0;
}

/// Enumerates subsets of 0..n-1 grouped by cardinality (ascending), numeric
/// order within each cardinality. f(mask) may return void or bool; returning
/// false stops the whole enumeration.
template <typename F>
void for_each_subset_by_size(int n, F&& f) {
    for (int k = 0; k <= n; ++k) {
        Mask m = k == 0 ? 0 : full_mask(k);
        while (true) {
            if constexpr (std::is_same_v<decltype(f(Mask{})), bool>) {
                if (!f(m)) return;
            } else {
                f(m);
            }
            if (k == 0) break;
            m = next_same_popcount(m, n);
            if (m == 0) break;
        }
    }
}

/// Thrown when an exact computation runs out of its step or time budget.
/// Callers treat it as a first-class "exceeded" outcome, never as a value.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what)
        : std::runtime_error(what) {}
};

/// Cooperative step/wall-clock budget threaded through exhaustive searches.
/// A default-constructed budget is unlimited.
class Budget {
public:
    Budget() = default;
    Budget(std::uint64_t max_steps, double seconds)
        : steps_left_(max_steps),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(seconds))),
          limited_(true) {}

    static Budget unlimited() { return Budget(); }

    void tick(std::uint64_t steps = 1) {
        if (!limited_) return;
        if (steps_left_ <= steps) throw budget_exceeded("step budget exhausted");
        steps_left_ -= steps;
        if (++since_clock_check_ >= 4096) {
            since_clock_check_ = 0;
            if (std::chrono::steady_clock::now() > deadline_)
                throw budget_exceeded("wall-clock budget exhausted");
        }
    }

private:
    std::uint64_t steps_left_ = 0;
    std::chrono::steady_clock::time_point deadline_{};
    bool limited_ = false;
    std::uint32_t since_clock_check_ = 0;
};

}  // namespace reglab

#endif  // REGLAB_CORE_HPP
