#include "ordkit/cursor.hpp"

#include "ordkit/error.hpp"

#include <cctype>
#include <limits>

namespace ordkit {

void Cursor::skip_ws() noexcept {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
}

bool Cursor::at_end() noexcept {
    skip_ws();
    return pos_ >= text_.size();
}

char Cursor::peek() noexcept {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Cursor::looking_at(std::string_view token) noexcept {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
}

bool Cursor::looking_at_digit() noexcept {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
}

bool Cursor::consume(std::string_view token) noexcept {
    if (!looking_at(token))
        return false;
    pos_ += token.size();
    return true;
}

void Cursor::expect(std::string_view token) {
    if (!consume(token))
        fail("expected '" + std::string(token) + "'");
}

std::uint64_t Cursor::parse_uint() {
    skip_ws();
    if (!looking_at_digit())
        fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
            fail("natural number out of range");
        v = v * 10 + d;
        ++pos_;
    }
    return v;
}

std::string_view Cursor::take_until_any(std::string_view stops) {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (depth == 0 && stops.find(c) != std::string_view::npos)
            break;
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        if (depth < 0)
            break;
        ++pos_;
    }
    std::string_view out = text_.substr(start, pos_ - start);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
        out.remove_suffix(1);
    return out;
}

void Cursor::expect_end() {
    if (!at_end())
        fail("unexpected trailing input");
}

void Cursor::fail(const std::string& message) const {
    std::string shown(text_);
    throw ParseError(message + " at offset " + std::to_string(pos_) + " in '" + shown + "'");
}

} // namespace ordkit
