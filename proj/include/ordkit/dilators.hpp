#pragma once

#include "ordkit/orders.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace ordkit {

/// A set-sized prae-dilator presented computably: a functor from the
/// category of natural numbers (with strictly increasing maps) to linear
/// orders, together with supports. Element codes are terms.
class CodedDilator {
public:
    virtual ~CodedDilator() = default;

    virtual std::string spec() const = 0;

    /// Truncated presentations only know T_n for n <= bound.
    virtual std::optional<std::size_t> arity_bound() const { return std::nullopt; }

    virtual bool member(std::size_t n, const Term& code) const = 0;
    virtual bool less(std::size_t n, const Term& a, const Term& b) const = 0;
    /// T_f(code) for f: n -> m.
    virtual Term map(const OrderEmbedding& f, const Term& code) const = 0;
    /// supp_n(code) ⊆ n.
    virtual IndexSet support(std::size_t n, const Term& code) const = 0;
    /// Members of T_n whose code length is at most max_len.
    virtual std::vector<Term> enumerate(std::size_t n, std::size_t max_len) const = 0;
    virtual std::size_t code_length(const Term& code) const = 0;

    virtual void print_code(const Term& code, std::string& out) const = 0;
    virtual Term parse_code(Cursor& in) const = 0;

    /// Throws ArityExceeded when n is beyond arity_bound().
    void require_arity(std::size_t n) const;
    std::string show_code(const Term& code) const;
};

using DilatorPtr = std::shared_ptr<const CodedDilator>;

/// A class-sized prae-dilator: an endofunctor of linear orders with
/// supports, acting on arbitrary orders.
class OrderTransformer {
public:
    virtual ~OrderTransformer() = default;

    virtual std::string spec() const = 0;
    virtual OrderPtr apply(OrderPtr x) const = 0;
    /// T_f(e) where f is an embedding X -> Y given by its action. Only the
    /// values of f on supp(e) are consulted.
    virtual Term map(const ElementMap& f, const Term& e) const = 0;
    /// supp_X(e), sorted in X.
    virtual std::vector<Term> support(const Order& x, const Term& e) const = 0;
};

using TransformerPtr = std::shared_ptr<const OrderTransformer>;

/// T_Y = Y.
TransformerPtr identity_transformer();
/// T_Y = W (constant, empty supports). `element` must be a member of W.
TransformerPtr constant_transformer(OrderPtr w, Term element);
/// T_Y = X × ({⊥} ∪ Y).
TransformerPtr scaled_sum_transformer(OrderPtr x);
/// T_Y = ({⊥} ∪ X) × ω^Y.
TransformerPtr prod_omega_transformer(OrderPtr x);
/// T_Y = ε_{Y ∪ {Ω} ∪ X}.
TransformerPtr eps_pad_transformer(OrderPtr x);
/// T_Y = ω^Y.
TransformerPtr omega_transformer();
/// T_Y = ε_Y.
TransformerPtr epsilon_transformer();

/// The restriction T↾ℕ of a class-sized transformer; codes of T_n are the
/// elements of t.apply(fin:n) unchanged.
class RestrictedDilator final : public CodedDilator {
public:
    explicit RestrictedDilator(TransformerPtr t);

    const TransformerPtr& transformer() const noexcept { return transformer_; }
    /// t.apply(fin:n), cached for small n.
    OrderPtr order_at(std::size_t n) const;

    std::string spec() const override { return transformer_->spec(); }
    bool member(std::size_t n, const Term& code) const override;
    bool less(std::size_t n, const Term& a, const Term& b) const override;
    Term map(const OrderEmbedding& f, const Term& code) const override;
    IndexSet support(std::size_t n, const Term& code) const override;
    std::vector<Term> enumerate(std::size_t n, std::size_t max_len) const override;
    std::size_t code_length(const Term& code) const override;
    void print_code(const Term& code, std::string& out) const override;
    Term parse_code(Cursor& in) const override;

private:
    TransformerPtr transformer_;
    std::vector<OrderPtr> small_;
    OrderPtr unbounded_;
};

DilatorPtr restrict(TransformerPtr t);

/// How much of a table file is validated on load.
enum class TableValidation {
    structural, ///< syntax, references, support ranges, map completeness
    strict,     ///< additionally: every declared T_n is a strict linear order
};

/// A finitely presented dilator truncated at arity N, codes are naturals.
class TableDilator final : public CodedDilator {
public:
    using MapKey = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>, std::uint64_t>;

    struct Data {
        std::size_t arity = 0;
        std::vector<std::set<std::uint64_t>> elements;                 // index n
        std::vector<std::set<std::pair<std::uint64_t, std::uint64_t>>> lt;
        std::map<MapKey, std::uint64_t> maps;
        std::map<std::pair<std::size_t, std::uint64_t>, IndexSet> supports;
        friend bool operator==(const Data&, const Data&) = default;
    };

    TableDilator(Data data, std::string source);

    const Data& data() const noexcept { return data_; }

    std::string spec() const override { return "table:" + source_; }
    std::optional<std::size_t> arity_bound() const override { return data_.arity; }
    bool member(std::size_t n, const Term& code) const override;
    bool less(std::size_t n, const Term& a, const Term& b) const override;
    Term map(const OrderEmbedding& f, const Term& code) const override;
    IndexSet support(std::size_t n, const Term& code) const override;
    std::vector<Term> enumerate(std::size_t n, std::size_t max_len) const override;
    std::size_t code_length(const Term&) const override { return 1; }
    void print_code(const Term& code, std::string& out) const override;
    Term parse_code(Cursor& in) const override;

private:
    Data data_;
    std::string source_;
};

std::shared_ptr<const TableDilator> parse_table(std::string_view text, std::string source,
                                                TableValidation validation = TableValidation::strict);
std::shared_ptr<const TableDilator> load_table(const std::filesystem::path& path,
                                               TableValidation validation = TableValidation::strict);
std::string table_to_text(const TableDilator& table);
void save_table(const TableDilator& table, const std::filesystem::path& path);

/// Finite presentation of T_n for n <= arity, codes numbered in order of
/// their canonical text.
std::shared_ptr<const TableDilator> tabulate(const CodedDilator& t, std::size_t arity, std::size_t max_len);

/// Result of a coherence audit of a coded dilator.
struct CoherenceReport {
    bool pass = true;
    std::string property;       ///< violated condition, empty on pass
    std::string counterexample; ///< serialized witness, empty on pass
    std::size_t elements = 0;   ///< enumerated codes across all T_n
    std::size_t checks = 0;     ///< individual conditions evaluated

    /// A comparison of two codes in T_n that exhibits the failure.
    struct Comparison {
        std::size_t n;
        Term a, b;
        std::string expect;
    };
    std::vector<Comparison> comparisons;
};

/// Exhaustively checks the prae-dilator conditions on T_0..T_N restricted
/// to codes of length <= max_len: linearity of each T_n, membership and
/// order preservation of every T_f, functor laws (identity and every
/// composite n -> k -> m), naturality of supports, and the support
/// condition by explicit search for a preimage σ0.
CoherenceReport check_coherence(const CodedDilator& t, std::size_t max_n, std::size_t max_len);

} // namespace ordkit
