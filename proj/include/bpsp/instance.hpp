#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bpsp/rng.hpp"

namespace bpsp {

class InstanceError : public std::invalid_argument {
public:
    enum class Kind { odd_length, symbol_count_not_two, symbol_out_of_range, empty_size };

    InstanceError(Kind kind, int symbol, const std::string& what)
        : std::invalid_argument(what), kind_(kind), symbol_(symbol) {}

    Kind kind() const noexcept { return kind_; }
    int symbol() const noexcept { return symbol_; }

private:
    Kind kind_;
    int symbol_;
};

/// A double-occurrence word over the symbols 1..n (length 2n).
///
/// Positions are 0-based throughout the library; symbols keep the 1-based
/// alphabet. Vertex / spin / ICC indices derived from a symbol s are s - 1.
class BpspInstance {
public:
    /// Validates `word` and builds the instance. Throws InstanceError.
    static BpspInstance from_word(std::vector<int> word) {
        if (word.size() % 2 != 0) {
            throw InstanceError(InstanceError::Kind::odd_length, 0,
                                "instance has odd length " + std::to_string(word.size()));
        }
        if (word.empty()) {
            throw InstanceError(InstanceError::Kind::empty_size, 0, "instance is empty");
        }
        const int n = static_cast<int>(word.size() / 2);
        std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
        for (int s : word) {
            if (s < 1 || s > n) {
                throw InstanceError(InstanceError::Kind::symbol_out_of_range, s,
                                    "symbol " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
            }
            ++count[static_cast<std::size_t>(s)];
        }
        for (int s = 1; s <= n; ++s) {
            if (count[static_cast<std::size_t>(s)] != 2) {
                throw InstanceError(InstanceError::Kind::symbol_count_not_two, s,
                                    "symbol " + std::to_string(s) + " occurs " +
                                        std::to_string(count[static_cast<std::size_t>(s)]) + " times");
            }
        }
        return BpspInstance(std::move(word), n);
    }

    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return word_.size(); }
    std::span<const int> word() const noexcept { return word_; }

    int symbol(std::size_t pos) const { return word_[pos]; }
    /// 0-based vertex index of the car at `pos`.
    int car(std::size_t pos) const { return word_[pos] - 1; }
    bool is_second(std::size_t pos) const { return second_[pos] != 0; }
    std::size_t partner(std::size_t pos) const { return partner_[pos]; }
    std::size_t first_position(int car_index) const { return first_[static_cast<std::size_t>(car_index)]; }

    friend bool operator==(const BpspInstance& a, const BpspInstance& b) { return a.word_ == b.word_; }

private:
    BpspInstance(std::vector<int> word, int n) : word_(std::move(word)), n_(n) {
        const std::size_t len = word_.size();
        partner_.assign(len, 0);
        second_.assign(len, 0);
        first_.assign(static_cast<std::size_t>(n_), len);
        for (std::size_t i = 0; i < len; ++i) {
            const auto c = static_cast<std::size_t>(word_[i] - 1);
            if (first_[c] == len) {
                first_[c] = i;
            } else {
                second_[i] = 1;
                partner_[i] = first_[c];
                partner_[first_[c]] = i;
            }
        }
    }

    std::vector<int> word_;
    int n_ = 0;
    std::vector<std::size_t> partner_;
    std::vector<unsigned char> second_;
    std::vector<std::size_t> first_;
};

inline BpspInstance validate_instance(std::vector<int> word) { return BpspInstance::from_word(std::move(word)); }

/// Uniform double-occurrence word: Fisher-Yates shuffle of {1,1,2,2,...,n,n}.
inline BpspInstance generate_instance(int n, Seed seed) {
    if (n < 1) {
        throw InstanceError(InstanceError::Kind::empty_size, 0, "n must be positive");
    }
    std::vector<int> word;
    word.reserve(2 * static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s) {
        word.push_back(s);
        word.push_back(s);
    }
    Rng rng(seed);
    for (std::size_t i = word.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(word[i], word[j]);
    }
    return BpspInstance::from_word(std::move(word));
}

/// Seed of the `index`-th instance of size n under a master seed. Shared by
/// the generator CLI and the benchmark harness so both produce the same sets.
inline Seed instance_seed(Seed master, int n, std::size_t index) {
    return derive_seed(master, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(index)});
}

/// Parity of boundary i (between positions i and i+1, 0-based): 1 when the
/// boundary joins a first and a second occurrence, 0 when both are the same kind.
inline int eta(const BpspInstance& x, std::size_t i) {
    if (i + 1 >= x.length()) {
        throw std::out_of_range("eta: boundary index out of range");
    }
    return static_cast<int>(x.is_second(i)) ^ static_cast<int>(x.is_second(i + 1));
}

inline int double_letter_count(const BpspInstance& x) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < x.length(); ++i) {
        count += x.symbol(i) == x.symbol(i + 1) ? 1 : 0;
    }
    return count;
}

inline std::string format_instance(const BpspInstance& x) {
    std::string out;
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += std::to_string(x.symbol(i));
    }
    return out;
}

/// Reads the line-oriented instance format: one instance per line, symbols
/// separated by whitespace; blank lines and '#' comments are skipped.
inline std::vector<BpspInstance> read_instances(std::istream& in) {
    std::vector<BpspInstance> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> word;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad symbol '" + tok + "'");
            }
            word.push_back(value);
        }
        out.push_back(BpspInstance::from_word(std::move(word)));
    }
    return out;
}

inline void write_instances(std::ostream& out, std::span<const BpspInstance> instances) {
    for (const auto& x : instances) {
        out << format_instance(x) << '\n';
    }
}

}  // namespace bpsp
