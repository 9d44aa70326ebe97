#include "cplan/atom_set.hpp"

#include <bit>
#include <cassert>

namespace cplan {

AtomSet::AtomSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

AtomSet::AtomSet(std::size_t width, std::initializer_list<AtomId> atoms) : AtomSet(width) {
    for (AtomId a : atoms) {
        assert(a < width);
        set(a);
    }
}

std::size_t AtomSet::count() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool AtomSet::empty() const {
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

bool AtomSet::subset_of(const AtomSet &other) const {
    assert(width_ == other.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool AtomSet::intersects(const AtomSet &other) const {
    assert(width_ == other.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

AtomSet AtomSet::operator|(const AtomSet &other) const {
    assert(width_ == other.width_);
    AtomSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] |= other.words_[i];
    return r;
}

AtomSet AtomSet::operator&(const AtomSet &other) const {
    assert(width_ == other.width_);
    AtomSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] &= other.words_[i];
    return r;
}

AtomSet AtomSet::operator-(const AtomSet &other) const {
    assert(width_ == other.width_);
    AtomSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] &= ~other.words_[i];
    return r;
}

std::vector<AtomId> AtomSet::members() const {
    std::vector<AtomId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t AtomSet::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ width_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace cplan
