#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "bpsp/coloring.hpp"
#include "bpsp/instance.hpp"

namespace bpsp {

namespace detail {

/// All schemes report colourings whose first position is red.
inline FullColoring normalized(FullColoring f) {
    if (!f.colours.empty() && f.colours.front() == Colour::blue) {
        return flipped(std::move(f));
    }
    return f;
}

}  // namespace detail

/// First occurrence red, second occurrence blue.
inline FullColoring red_first(const BpspInstance& x) {
    FullColoring f;
    f.colours.reserve(x.length());
    for (std::size_t i = 0; i < x.length(); ++i) {
        f.colours.push_back(x.is_second(i) ? Colour::blue : Colour::red);
    }
    return f;
}

/// Keeps the running colour on first occurrences; a second occurrence is
/// forced to the opposite of its partner.
inline FullColoring greedy(const BpspInstance& x) {
    FullColoring f;
    f.colours.resize(x.length());
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (x.is_second(i)) {
            f.colours[i] = !f.colours[x.partner(i)];
        } else {
            f.colours[i] = i == 0 ? Colour::red : f.colours[i - 1];
        }
    }
    return f;
}

/// Recursive greedy.
///
/// Peeling the car whose occurrence is last, repeatedly, leaves the cars with
/// the j earliest second occurrences. Reconstruction therefore re-inserts cars
/// in order of their second occurrence; the reinserted second occurrence is
/// always the last element of the current subsequence. The subsequence is kept
/// as an ordered set of original positions, so no recursion or copying is
/// needed.
inline FullColoring recursive_greedy(const BpspInstance& x) {
    const std::size_t len = x.length();
    std::vector<Colour> col(len, Colour::red);
    std::set<std::size_t> present;
    for (std::size_t p2 = 0; p2 < len; ++p2) {
        if (!x.is_second(p2)) {
            continue;
        }
        const std::size_t p1 = x.partner(p2);
        if (present.empty()) {
            col[p1] = Colour::red;
            col[p2] = Colour::blue;
        } else {
            const auto succ = present.lower_bound(p1);
            const bool has_left = succ != present.begin();
            const bool has_right = succ != present.end();
            const Colour last = col[*present.rbegin()];
            if (!has_left) {
                col[p1] = col[*succ];
            } else if (!has_right) {
                col[p1] = col[*std::prev(succ)];
            } else {
                const Colour left = col[*std::prev(succ)];
                const Colour right = col[*succ];
                col[p1] = left == right ? left : !last;
            }
            col[p2] = !col[p1];
        }
        present.insert(p1);
        present.insert(p2);
    }
    return detail::normalized(FullColoring{std::move(col)});
}

namespace detail {

enum class Cell : std::uint8_t { red, blue, star };

constexpr Cell to_cell(Colour c) noexcept { return c == Colour::red ? Cell::red : Cell::blue; }
constexpr Cell negate(Cell c) noexcept {
    return c == Cell::red ? Cell::blue : (c == Cell::blue ? Cell::red : Cell::star);
}

}  // namespace detail

/// Recursive star greedy.
///
/// Cars are peeled from the front, so reconstruction re-inserts them in
/// decreasing order of first occurrence: the new first occurrence is always
/// the head of the current subsequence and its partner lands at some interior
/// or tail slot. A car whose two colourings cost the same with respect to its
/// current neighbours is marked with a star and stays undecided until an
/// insertion next to it makes one colour strictly better. Remaining stars are
/// settled in a final left-to-right pass.
inline FullColoring recursive_star_greedy(const BpspInstance& x) {
    using detail::Cell;
    const std::size_t len = x.length();
    std::vector<Cell> col(len, Cell::red);
    std::set<std::size_t> present;

    auto settle = [&](std::size_t pos, Cell value) {
        col[pos] = value;
        col[x.partner(pos)] = detail::negate(value);
    };

    for (std::size_t k = len; k-- > 0;) {
        if (x.is_second(k)) {
            continue;
        }
        const std::size_t p1 = k;
        const std::size_t p2 = x.partner(k);
        if (present.empty()) {
            col[p1] = Cell::red;
            col[p2] = Cell::blue;
            present.insert(p1);
            present.insert(p2);
            continue;
        }

        const std::size_t head = *present.begin();
        const bool adjacent_pair = p2 < head;
        if (adjacent_pair) {
            // Both occurrences at the front: copy the colour to the right.
            col[p2] = col[head];
            col[p1] = detail::negate(col[head]);
        } else {
            const Cell next = col[head];
            const auto right_it = present.lower_bound(p2);
            const std::size_t left_pos = *std::prev(right_it);
            const Cell left = col[left_pos];
            col[p1] = next;
            col[p2] = detail::negate(next);
            if (right_it == present.end()) {
                if (left == Cell::star) {
                    settle(left_pos, col[p2]);
                }
            } else {
                const std::size_t right_pos = *right_it;
                const Cell right = col[right_pos];
                const bool left_star = left == Cell::star;
                const bool right_star = right == Cell::star;
                if (!left_star && !right_star) {
                    if (left == right) {
                        col[p2] = left;
                        col[p1] = detail::negate(left);
                    }
                } else if (left_star != right_star) {
                    const Cell other = left_star ? right : left;
                    if (other == next) {
                        settle(left_star ? left_pos : right_pos, col[p2]);
                    }
                } else if (x.partner(left_pos) != right_pos) {
                    settle(left_pos, col[p2]);
                    settle(right_pos, col[p2]);
                }
            }
        }
        present.insert(p1);
        present.insert(p2);

        if (adjacent_pair) {
            continue;
        }
        // Star creation for the car right behind the new head.
        const std::size_t q1 = head;
        const std::size_t q2 = x.partner(q1);
        int cost_keep = 0;
        int cost_flip = 0;
        bool blocked = false;
        auto tally = [&](std::size_t pos, std::size_t nb) {
            if (nb == q1 || nb == q2) {
                return;
            }
            if (col[nb] == Cell::star) {
                blocked = true;
                return;
            }
            cost_keep += col[pos] != col[nb] ? 1 : 0;
            cost_flip += detail::negate(col[pos]) != col[nb] ? 1 : 0;
        };
        for (std::size_t pos : {q1, q2}) {
            const auto it = present.find(pos);
            if (it != present.begin()) {
                tally(pos, *std::prev(it));
            }
            if (std::next(it) != present.end()) {
                tally(pos, *std::next(it));
            }
        }
        if (!blocked && cost_keep == cost_flip) {
            col[q1] = Cell::star;
            col[q2] = Cell::star;
        }
    }

    for (std::size_t i = 0; i < len; ++i) {
        if (col[i] == Cell::star) {
            settle(i, i == 0 ? Cell::red : col[i - 1]);
        }
    }
    FullColoring f;
    f.colours.reserve(len);
    for (Cell c : col) {
        f.colours.push_back(c == Cell::red ? Colour::red : Colour::blue);
    }
    return detail::normalized(std::move(f));
}

/// Red-first cost as the sum of eta over all boundaries.
inline int red_first_cost_via_eta(const BpspInstance& x) {
    int sum = 0;
    for (std::size_t i = 0; i + 1 < x.length(); ++i) {
        sum += eta(x, i);
    }
    return sum;
}

}  // namespace bpsp
