#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/errors.hpp"

namespace degen::io {

/// Appends little-endian primitives and tagged, length-prefixed components to a byte buffer.
class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }

    void u64(std::uint64_t v) {
        for (int k = 0; k < 8; ++k) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
    }

    void raw(std::string_view s) { buf_.insert(buf_.end(), s.begin(), s.end()); }

    /// Word count followed by the words.
    void words(std::span<const std::uint64_t> ws) {
        u64(ws.size());
        for (auto w : ws) u64(w);
    }

    /// Opens a component: sub-tag byte plus a u64 byte length patched by end_component().
    std::size_t begin_component(std::uint8_t tag) {
        u8(tag);
        const std::size_t at = buf_.size();
        u64(0);
        return at;
    }

    void end_component(std::size_t at) {
        const std::uint64_t len = buf_.size() - at - 8;
        for (int k = 0; k < 8; ++k) buf_[at + k] = static_cast<std::uint8_t>(len >> (8 * k));
    }

    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

private:
    std::vector<std::uint8_t> buf_;
};

/// Bounds-checked reader; every overrun throws ParseError.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int k = 0; k < 8; ++k) v |= std::uint64_t{data_[pos_ + k]} << (8 * k);
        pos_ += 8;
        return v;
    }

    std::string raw(std::size_t n) {
        need(n);
        std::string s(reinterpret_cast<const char*>(data_.data() + pos_), n);
        pos_ += n;
        return s;
    }

    std::vector<std::uint64_t> words() {
        const std::uint64_t n = u64();
        if (n > remaining() / 8) throw ParseError("word array length exceeds payload");
        std::vector<std::uint64_t> ws(n);
        for (auto& w : ws) w = u64();
        return ws;
    }

    /// Consumes a component header, checks its tag, and returns a reader over its payload.
    ByteReader component(std::uint8_t expected_tag) {
        const std::uint8_t tag = u8();
        if (tag != expected_tag) {
            throw ParseError("unexpected component tag " + std::to_string(tag) + ", wanted " +
                             std::to_string(expected_tag));
        }
        const std::uint64_t len = u64();
        need(len);
        ByteReader sub(data_.subspan(pos_, len));
        pos_ += len;
        return sub;
    }

    std::size_t remaining() const { return data_.size() - pos_; }

    void expect_end() const {
        if (remaining() != 0) throw ParseError("trailing bytes in component");
    }

private:
    void need(std::uint64_t n) const {
        if (n > remaining()) throw ParseError("truncated input");
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace degen::io
