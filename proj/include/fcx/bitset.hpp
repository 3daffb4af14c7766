#ifndef FCX_BITSET_HPP
#define FCX_BITSET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcx {

// Set of vertex indices backed by a fixed block of machine words.
// Vertices are dense integers; capacity is kMaxVertices.
class VertexSet {
public:
    static constexpr int kWords = 4;
    static constexpr int kMaxVertices = kWords * 64;

    VertexSet() = default;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet from_vector(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VertexSet full(int n) {
        check_index(n == 0 ? 0 : n - 1);
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int k = n - lo;
            s.w_[w] = (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
        }
        return s;
    }

    void set(int i) {
        check_index(i);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(int i) const {
        if (i < 0 || i >= kMaxVertices) return false;
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    // True if every element of other is in *this.
    bool contains(const VertexSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if (other.w_[i] & ~w_[i]) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const { return other.contains(*this); }

    bool intersects(const VertexSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    // Set difference.
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return w_ != o.w_; }

    int lowest() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    int highest() const {
        for (int i = kWords - 1; i >= 0; --i)
            if (w_[i]) return i * 64 + 63 - std::countl_zero(w_[i]);
        return -1;
    }

    // Order of the ascending vertex tuples with shorter-prefix-first:
    // {0,3} < {1,2}, {1} < {1,3}.
    bool lex_less(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w_[i] ^ o.w_[i];
            if (!x) continue;
            int bit = i * 64 + std::countr_zero(x);
            if (test(bit)) return o.has_bits_above(bit);
            return !has_bits_above(bit);
        }
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(i * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : w_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(v);
        });
        return s + "}";
    }

private:
    bool has_bits_above(int bit) const {
        // Any element strictly greater than `bit`?
        int wi = bit >> 6;
        std::uint64_t mask = (bit & 63) == 63 ? 0 : ~std::uint64_t{0} << ((bit & 63) + 1);
        if (w_[wi] & mask) return true;
        for (int i = wi + 1; i < kWords; ++i)
            if (w_[i]) return true;
        return false;
    }

    static void check_index(int i) {
        if (i < 0 || i >= kMaxVertices)
            throw std::invalid_argument("vertex index " + std::to_string(i) +
                                        " out of range [0, " + std::to_string(kMaxVertices) + ")");
    }

    std::array<std::uint64_t, kWords> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

struct VertexSetLexLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const { return a.lex_less(b); }
};

} // namespace fcx

#endif // FCX_BITSET_HPP
