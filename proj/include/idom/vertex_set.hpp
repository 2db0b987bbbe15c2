#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace idom {

using Vertex = std::uint32_t;

/// Subset of the vertex range [0, universe) stored as packed 64-bit words.
///
/// The universe size is part of the value: two sets over different universes
/// never compare equal and binary operations require matching universes.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, const std::vector<Vertex> &members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const;
    bool empty() const;

    bool is_subset_of(const VertexSet &other) const;
    bool intersects(const VertexSet &other) const;

    VertexSet &operator|=(const VertexSet &other);
    VertexSet &operator&=(const VertexSet &other);
    // Set difference.
    VertexSet &operator-=(const VertexSet &other);

    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    bool operator==(const VertexSet &other) const = default;
    // Orders by universe, then by the members read as an ascending list.
    bool operator<(const VertexSet &other) const;

    // Members in ascending order.
    std::vector<Vertex> members() const;

    template <typename Fn>
    void for_each(Fn &&fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    // "0,2,5"
    std::string to_string() const;

private:
    void check_same_universe(const VertexSet &other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace idom
