#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"

namespace scenbdd {

// Fixed-width set of edge indices 1..width, packed into 64-bit blocks.
// Bit b (0-based) corresponds to edge b+1; the text form is a {0,1} string
// whose leftmost character is edge 1.
class Scenario {
  public:
    Scenario() = default;

    explicit Scenario(int width) : width_(width), blocks_((width + 63) / 64, 0) {}

    static Scenario from_string(const std::string& bits) {
        Scenario s(static_cast<int>(bits.size()));
        for (size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                s.set(static_cast<int>(i) + 1);
            } else if (bits[i] != '0') {
                throw Error::validation("scenario string must contain only 0/1, got '" +
                                        std::string(1, bits[i]) + "'");
            }
        }
        return s;
    }

    int width() const { return width_; }

    bool test(int edge) const {
        return (blocks_[(edge - 1) >> 6] >> ((edge - 1) & 63)) & 1;
    }

    void set(int edge) { blocks_[(edge - 1) >> 6] |= uint64_t{1} << ((edge - 1) & 63); }

    void reset(int edge) { blocks_[(edge - 1) >> 6] &= ~(uint64_t{1} << ((edge - 1) & 63)); }

    int count() const {
        int n = 0;
        for (uint64_t b : blocks_) n += std::popcount(b);
        return n;
    }

    bool empty() const {
        for (uint64_t b : blocks_) {
            if (b != 0) return false;
        }
        return true;
    }

    bool is_subset_of(const Scenario& other) const {
        for (size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i] & ~other.blocks_[i]) return false;
        }
        return true;
    }

    Scenario complement() const {
        Scenario out(width_);
        for (size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = ~blocks_[i];
        out.trim();
        return out;
    }

    Scenario united(const Scenario& other) const {
        Scenario out(width_);
        for (size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = blocks_[i] | other.blocks_[i];
        return out;
    }

    bool intersects(const Scenario& other) const {
        for (size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i] & other.blocks_[i]) return true;
        }
        return false;
    }

    std::string to_string() const {
        std::string out(width_, '0');
        for (int e = 1; e <= width_; ++e) {
            if (test(e)) out[e - 1] = '1';
        }
        return out;
    }

    friend bool operator==(const Scenario& a, const Scenario& b) {
        return a.width_ == b.width_ && a.blocks_ == b.blocks_;
    }

    // Total order: by cardinality first, then by bit pattern from edge 1 up.
    // Sorting an antichain with this puts potential subsets before supersets.
    friend bool operator<(const Scenario& a, const Scenario& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (size_t i = 0; i < a.blocks_.size(); ++i) {
            if (a.blocks_[i] != b.blocks_[i]) return a.blocks_[i] < b.blocks_[i];
        }
        return false;
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(width_);
        for (uint64_t b : blocks_) h = h * 1000003u ^ std::hash<uint64_t>{}(b);
        return h;
    }

  private:
    void trim() {
        if (width_ % 64 != 0 && !blocks_.empty()) {
            blocks_.back() &= (uint64_t{1} << (width_ % 64)) - 1;
        }
    }

    int width_ = 0;
    std::vector<uint64_t> blocks_;
};

// Drops every set that contains another set of the family (supersets and
// duplicates); the result is an inclusion antichain in canonical order.
inline std::vector<Scenario> minimize_family(std::vector<Scenario> family) {
    std::sort(family.begin(), family.end());
    std::vector<Scenario> kept;
    for (const Scenario& s : family) {
        bool dominated = false;
        for (const Scenario& k : kept) {
            if (k.is_subset_of(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

inline bool is_antichain(const std::vector<Scenario>& family) {
    for (size_t i = 0; i < family.size(); ++i) {
        for (size_t j = 0; j < family.size(); ++j) {
            if (i != j && family[i].is_subset_of(family[j])) return false;
        }
    }
    return true;
}

}  // namespace scenbdd
