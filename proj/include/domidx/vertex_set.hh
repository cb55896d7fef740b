/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_VERTEX_SET_HH
#define DOMIDX_GUARD_VERTEX_SET_HH 1

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace domidx
{
    using Vertex = std::size_t;

    /**
     * A subset of the vertices 0..n-1 of some graph, stored as 64-bit words.
     * Up to 256 vertices live inline; larger orders spill to the heap.
     */
    class VertexSet
    {
        public:
            using Word = std::uint64_t;
            static constexpr std::size_t bits_per_word = 64;

        private:
            std::size_t _capacity = 0;
            boost::container::small_vector<Word, 4> _words;

            auto trim() -> void
            {
                if (auto tail = _capacity % bits_per_word ; tail != 0)
                    _words.back() &= (Word{1} << tail) - 1;
            }

        public:
            class Iterator
            {
                private:
                    const VertexSet * _set = nullptr;
                    std::size_t _pos = 0;

                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = Vertex;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const Vertex *;
                    using reference = Vertex;

                    Iterator() = default;
                    Iterator(const VertexSet * set, std::size_t pos) : _set(set), _pos(pos) { }

                    auto operator* () const -> Vertex { return _pos; }

                    auto operator++ () -> Iterator &
                    {
                        _pos = _set->next(_pos + 1);
                        return *this;
                    }

                    auto operator++ (int) -> Iterator
                    {
                        auto old = *this;
                        ++*this;
                        return old;
                    }

                    auto operator== (const Iterator & other) const -> bool { return _pos == other._pos; }
            };

            VertexSet() = default;

            explicit VertexSet(std::size_t capacity) :
                _capacity(capacity),
                _words((capacity + bits_per_word - 1) / bits_per_word, Word{0})
            {
            }

            static auto full(std::size_t capacity) -> VertexSet
            {
                VertexSet result(capacity);
                for (auto & w : result._words)
                    w = ~Word{0};
                result.trim();
                return result;
            }

            static auto of(std::size_t capacity, std::initializer_list<Vertex> members) -> VertexSet
            {
                VertexSet result(capacity);
                for (auto v : members)
                    result.insert(v);
                return result;
            }

            /// The graph order this set is bound to; members are always below it.
            auto capacity() const -> std::size_t { return _capacity; }

            auto words() const -> std::span<const Word> { return { _words.data(), _words.size() }; }

            auto contains(Vertex v) const -> bool
            {
                return v < _capacity && (_words[v / bits_per_word] >> (v % bits_per_word)) & 1;
            }

            auto insert(Vertex v) -> void { _words[v / bits_per_word] |= Word{1} << (v % bits_per_word); }
            auto erase(Vertex v) -> void { _words[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto is_full() const -> bool { return *this == full(_capacity); }

            /// Smallest member >= from, or capacity() if there is none.
            auto next(std::size_t from) const -> std::size_t
            {
                if (from >= _capacity)
                    return _capacity;
                std::size_t wi = from / bits_per_word;
                Word w = _words[wi] & (~Word{0} << (from % bits_per_word));
                while (true) {
                    if (w)
                        return wi * bits_per_word + std::countr_zero(w);
                    if (++wi == _words.size())
                        return _capacity;
                    w = _words[wi];
                }
            }

            auto first() const -> std::size_t { return next(0); }

            auto begin() const -> Iterator { return { this, first() }; }
            auto end() const -> Iterator { return { this, _capacity }; }

            auto to_vector() const -> std::vector<Vertex> { return { begin(), end() }; }

            auto operator|= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator&= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator-= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            auto complement() const -> VertexSet
            {
                VertexSet result = *this;
                for (auto & w : result._words)
                    w = ~w;
                result.trim();
                return result;
            }

            auto intersects(const VertexSet & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto intersection_count(const VertexSet & other) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i]);
                return result;
            }

            auto is_subset_of(const VertexSet & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto operator== (const VertexSet & other) const -> bool
            {
                return _capacity == other._capacity && std::equal(_words.begin(), _words.end(), other._words.begin());
            }

            /// Orders by cardinality, then by the sorted member lists compared lexicographically.
            auto canonical_less(const VertexSet & other) const -> bool
            {
                auto a = count(), b = other.count();
                if (a != b)
                    return a < b;
                auto i = begin(), j = other.begin();
                for ( ; i != end() && j != other.end() ; ++i, ++j)
                    if (*i != *j)
                        return *i < *j;
                return false;
            }

            auto operator<=> (const VertexSet & other) const -> std::strong_ordering
            {
                if (auto c = _capacity <=> other._capacity ; c != 0)
                    return c;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (auto c = _words[i] <=> other._words[i] ; c != 0)
                        return c;
                return std::strong_ordering::equal;
            }
    };
}

#endif
