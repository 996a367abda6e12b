#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coverplan {

// Dynamically sized bit vector over 64-bit words. Word count is an explicit
// part of the layout so AND/popcount loops are branch-free and countable.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }

    void resize(std::size_t bits) {
        bits_ = bits;
        words_.resize((bits + 63) / 64, 0);
    }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void or_with(const BitVec& other) {
        for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w)
            words_[w] |= other.words_[w];
    }

    std::size_t and_popcount(const BitVec& other) const {
        std::size_t n = 0;
        const std::size_t w = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < w; ++i)
            n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return n;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const BitVec& other) const {
        return bits_ == other.bits_ && words_ == other.words_;
    }

    // Lowercase hex, least-significant word first; stable serialization form.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(words_.size() * 16);
        for (auto w : words_)
            for (int nib = 0; nib < 16; ++nib) s.push_back(digits[(w >> (4 * nib)) & 0xf]);
        return s;
    }

    static BitVec from_hex(const std::string& hex, std::size_t bits) {
        BitVec v(bits);
        for (std::size_t i = 0; i < hex.size() && i / 16 < v.words_.size(); ++i) {
            char c = hex[i];
            std::uint64_t nib =
                c >= 'a' ? 10 + (c - 'a') : (c >= 'A' ? 10 + (c - 'A') : c - '0');
            v.words_[i / 16] |= nib << (4 * (i % 16));
        }
        return v;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Edge-block + terminal-block signature. The edge block grows append-only as
// the roadmap gains edges; the terminal block is fixed once the scene's
// start/goal vertices are known. The externally visible column layout is
// [edges..., start vertices..., goal vertices...].
struct Signature {
    BitVec edges;
    BitVec terminals;

    void or_with(const Signature& o) {
        edges.or_with(o.edges);
        terminals.or_with(o.terminals);
    }
    bool operator==(const Signature& o) const {
        return edges == o.edges && terminals == o.terminals;
    }
};

}  // namespace coverplan
