#include "ordkit/term.hpp"

#include <stdexcept>

namespace ordkit {

struct Term::Node {
    Tag tag;
    std::uint64_t value;
    std::vector<Term> args;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Term::Term() : Term(leaf(Tag::Zero)) {}

Term Term::nat(std::uint64_t value) {
    std::size_t h = mix(static_cast<std::size_t>(Tag::Nat), static_cast<std::size_t>(value));
    return Term(std::make_shared<const Node>(Node{Tag::Nat, value, {}, h}));
}

Term Term::leaf(Tag tag) {
    return node(tag, {});
}

Term Term::node(Tag tag, std::vector<Term> args) {
    std::size_t h = mix(static_cast<std::size_t>(tag) * 0x100000001b3ULL, args.size());
    for (const auto& a : args)
        h = mix(h, a.hash());
    return Term(std::make_shared<const Node>(Node{tag, 0, std::move(args), h}));
}

Tag Term::tag() const noexcept { return node_->tag; }
std::uint64_t Term::value() const noexcept { return node_->value; }
std::span<const Term> Term::args() const noexcept { return node_->args; }
std::size_t Term::arity() const noexcept { return node_->args.size(); }
std::size_t Term::hash() const noexcept { return node_->hash; }

const Term& Term::arg(std::size_t i) const {
    if (i >= node_->args.size())
        throw std::out_of_range("term argument index out of range");
    return node_->args[i];
}

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_)
        return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.tag != y.tag || x.value != y.value || x.args.size() != y.args.size())
        return false;
    for (std::size_t i = 0; i < x.args.size(); ++i)
        if (!(x.args[i] == y.args[i]))
            return false;
    return true;
}

bool Term::structural_less(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_)
        return false;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.tag != y.tag)
        return x.tag < y.tag;
    if (x.value != y.value)
        return x.value < y.value;
    const std::size_t n = std::min(x.args.size(), y.args.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (structural_less(x.args[i], y.args[i]))
            return true;
        if (structural_less(y.args[i], x.args[i]))
            return false;
    }
    return x.args.size() < y.args.size();
}

} // namespace ordkit
