#include "idom/vertex_set.hpp"

#include <algorithm>

#include "idom/errors.hpp"

namespace idom {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex> &members)
    : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto &w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_)
        throw RangeError("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(universe_) + ")");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void VertexSet::check_same_universe(const VertexSet &other) const {
    if (universe_ != other.universe_)
        throw RangeError("vertex sets over different universes (" + std::to_string(universe_) +
                         " vs " + std::to_string(other.universe_) + ")");
}

bool VertexSet::is_subset_of(const VertexSet &other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet &other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::operator<(const VertexSet &other) const {
    if (universe_ != other.universe_) return universe_ < other.universe_;
    const auto a = members();
    const auto b = other.members();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string out;
    for_each([&](Vertex v) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    });
    return out;
}

} // namespace idom
