#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cplan {

using AtomId = std::size_t;

// Fixed-width bit set over a frame's atoms, in declaration order.
class AtomSet {
public:
    AtomSet() = default;
    explicit AtomSet(std::size_t width);
    AtomSet(std::size_t width, std::initializer_list<AtomId> atoms);

    std::size_t width() const { return width_; }
    bool test(AtomId a) const { return (words_[a >> 6] >> (a & 63)) & 1U; }
    void set(AtomId a) { words_[a >> 6] |= std::uint64_t{1} << (a & 63); }
    void reset(AtomId a) { words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }
    void assign(AtomId a, bool value) { value ? set(a) : reset(a); }

    std::size_t count() const;
    bool empty() const;
    bool subset_of(const AtomSet &other) const;
    bool intersects(const AtomSet &other) const;

    AtomSet operator|(const AtomSet &other) const;
    AtomSet operator&(const AtomSet &other) const;
    // Set difference.
    AtomSet operator-(const AtomSet &other) const;

    std::vector<AtomId> members() const;
    std::size_t hash() const;

    bool operator==(const AtomSet &other) const = default;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

using State = AtomSet;

struct AtomSetHash {
    std::size_t operator()(const AtomSet &s) const { return s.hash(); }
};

}  // namespace cplan
