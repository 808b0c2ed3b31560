#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bpsp/instance.hpp"

namespace bpsp {

enum class Colour : std::uint8_t { red, blue };

constexpr Colour operator!(Colour c) noexcept { return c == Colour::red ? Colour::blue : Colour::red; }
constexpr char to_char(Colour c) noexcept { return c == Colour::red ? 'r' : 'b'; }
/// r = +1, b = -1.
constexpr int to_spin(Colour c) noexcept { return c == Colour::red ? 1 : -1; }
constexpr Colour from_spin(int s) noexcept { return s > 0 ? Colour::red : Colour::blue; }

namespace detail {

inline std::vector<Colour> parse_colours(std::string_view text) {
    std::vector<Colour> out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch == 'r') {
            out.push_back(Colour::red);
        } else if (ch == 'b') {
            out.push_back(Colour::blue);
        } else {
            throw std::invalid_argument(std::string("bad colour character '") + ch + "'");
        }
    }
    return out;
}

inline std::string render_colours(const std::vector<Colour>& colours) {
    std::string out;
    out.reserve(colours.size());
    for (Colour c : colours) {
        out += to_char(c);
    }
    return out;
}

}  // namespace detail

/// Colour for each of the 2n positions. Validity against an instance is a
/// separate predicate, so invalid strings are representable.
struct FullColoring {
    std::vector<Colour> colours;

    static FullColoring parse(std::string_view text) { return {detail::parse_colours(text)}; }
    std::string str() const { return detail::render_colours(colours); }
    std::size_t size() const noexcept { return colours.size(); }
    friend bool operator==(const FullColoring&, const FullColoring&) = default;
};

/// Colour of the first occurrence of each car (ICC encoding), indexed by car.
struct IccColoring {
    std::vector<Colour> colours;

    static IccColoring parse(std::string_view text) { return {detail::parse_colours(text)}; }
    std::string str() const { return detail::render_colours(colours); }
    std::size_t size() const noexcept { return colours.size(); }
    friend bool operator==(const IccColoring&, const IccColoring&) = default;
};

struct SpinAssignment {
    std::vector<int> spins;  // entries are +1 / -1

    std::size_t size() const noexcept { return spins.size(); }
    friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;
};

inline SpinAssignment to_spins(const IccColoring& z) {
    SpinAssignment s;
    s.spins.reserve(z.size());
    for (Colour c : z.colours) {
        s.spins.push_back(to_spin(c));
    }
    return s;
}

inline IccColoring to_icc(const SpinAssignment& s) {
    IccColoring z;
    z.colours.reserve(s.size());
    for (int v : s.spins) {
        if (v != 1 && v != -1) {
            throw std::invalid_argument("spin values must be +1 or -1");
        }
        z.colours.push_back(from_spin(v));
    }
    return z;
}

namespace detail {

inline void require_length(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw std::invalid_argument(std::string(what) + ": length " + std::to_string(got) + ", expected " +
                                    std::to_string(want));
    }
}

}  // namespace detail

inline bool is_valid_coloring(const BpspInstance& x, const FullColoring& f) {
    detail::require_length(f.size(), x.length(), "is_valid_coloring");
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (f.colours[i] == f.colours[x.partner(i)]) {
            return false;
        }
    }
    return true;
}

/// Expansion map: first occurrence of car c gets z_c, the second gets !z_c.
inline FullColoring expand(const BpspInstance& x, const IccColoring& z) {
    detail::require_length(z.size(), static_cast<std::size_t>(x.n()), "expand");
    FullColoring f;
    f.colours.reserve(x.length());
    for (std::size_t i = 0; i < x.length(); ++i) {
        const Colour c = z.colours[static_cast<std::size_t>(x.car(i))];
        f.colours.push_back(x.is_second(i) ? !c : c);
    }
    return f;
}

/// Inverse of expand on valid colourings.
inline IccColoring compress(const BpspInstance& x, const FullColoring& f) {
    if (!is_valid_coloring(x, f)) {
        throw std::invalid_argument("compress: colouring is not valid for the instance");
    }
    IccColoring z;
    z.colours.resize(static_cast<std::size_t>(x.n()));
    for (int c = 0; c < x.n(); ++c) {
        z.colours[static_cast<std::size_t>(c)] = f.colours[x.first_position(c)];
    }
    return z;
}

inline int swap_count(const FullColoring& f) {
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        swaps += f.colours[i] != f.colours[i + 1] ? 1 : 0;
    }
    return swaps;
}

/// Swap count of expand(x, z), evaluated directly on the ICC string.
inline int icc_swap_count(const BpspInstance& x, const IccColoring& z) {
    detail::require_length(z.size(), static_cast<std::size_t>(x.n()), "icc_swap_count");
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < x.length(); ++i) {
        Colour left = z.colours[static_cast<std::size_t>(x.car(i))];
        if (eta(x, i) != 0) {
            left = !left;
        }
        swaps += left != z.colours[static_cast<std::size_t>(x.car(i + 1))] ? 1 : 0;
    }
    return swaps;
}

/// Ising form of the swap count: n - 1/2 - 1/2 * sum_i (-1)^eta(i) z z.
/// Evaluated as twice the value in integers.
inline int icc_swap_count_spin(const BpspInstance& x, const SpinAssignment& z) {
    detail::require_length(z.size(), static_cast<std::size_t>(x.n()), "icc_swap_count_spin");
    long twice = 2L * x.n() - 1;
    for (std::size_t i = 0; i + 1 < x.length(); ++i) {
        const int sign = eta(x, i) != 0 ? -1 : 1;
        twice -= sign * z.spins[static_cast<std::size_t>(x.car(i))] * z.spins[static_cast<std::size_t>(x.car(i + 1))];
    }
    if (twice % 2 != 0) {
        throw std::logic_error("icc_swap_count_spin: non-integer result");
    }
    return static_cast<int>(twice / 2);
}

inline FullColoring flipped(FullColoring f) {
    for (Colour& c : f.colours) {
        c = !c;
    }
    return f;
}

inline IccColoring flipped(IccColoring z) {
    for (Colour& c : z.colours) {
        c = !c;
    }
    return z;
}

/// A colouring together with its exact swap count.
struct Solution {
    int cost = 0;
    FullColoring coloring;
};

}  // namespace bpsp
