#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ordkit {

/// Left-to-right scanner over the textual syntaxes (order specs, dilator
/// specs, terms). Whitespace between tokens is ignored.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() noexcept;
    bool at_end() noexcept;
    char peek() noexcept;

    /// Consumes `token` if the remaining input starts with it.
    bool consume(std::string_view token) noexcept;
    void expect(std::string_view token);
    bool looking_at(std::string_view token) noexcept;
    bool looking_at_digit() noexcept;

    std::uint64_t parse_uint();
    /// Everything up to (not including) the first character of `stops` at
    /// parenthesis depth zero.
    std::string_view take_until_any(std::string_view stops);

    /// Throws ParseError if input remains.
    void expect_end();

    [[noreturn]] void fail(const std::string& message) const;

    std::size_t position() const noexcept { return pos_; }
    std::string_view rest() const noexcept { return text_.substr(pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace ordkit
