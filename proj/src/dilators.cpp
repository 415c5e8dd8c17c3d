#include "ordkit/dilators.hpp"

#include "ordkit/error.hpp"
#include "ordkit/linear.hpp"
#include "ordkit/notations.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace ordkit {

void CodedDilator::require_arity(std::size_t n) const {
    if (auto bound = arity_bound(); bound && n > *bound)
        throw ArityExceeded(n, *bound);
}

std::string CodedDilator::show_code(const Term& code) const {
    std::string out;
    print_code(code, out);
    return out;
}

// ---------------------------------------------------------------------------
// built-in transformers

namespace {

[[noreturn]] void bad_element(const std::string& where) { throw DomainError(where + ": malformed element"); }

class IdentityTransformer final : public OrderTransformer {
public:
    std::string spec() const override { return "id"; }
    OrderPtr apply(OrderPtr x) const override { return x; }
    Term map(const ElementMap& f, const Term& e) const override { return f(e); }
    std::vector<Term> support(const Order&, const Term& e) const override { return {e}; }
};

class ConstantTransformer final : public OrderTransformer {
public:
    ConstantTransformer(OrderPtr w, Term element) : w_(std::move(w)), element_(std::move(element)) {
        if (!w_->member(element_))
            throw DomainError("const: " + show(*w_, element_) + " is not an element of " + w_->spec());
    }
    std::string spec() const override { return "const(" + w_->spec() + "," + show(*w_, element_) + ")"; }
    OrderPtr apply(OrderPtr) const override { return w_; }
    Term map(const ElementMap&, const Term& e) const override { return e; }
    std::vector<Term> support(const Order&, const Term&) const override { return {}; }

private:
    OrderPtr w_;
    Term element_;
};

// X × ({⊥} ∪ Y): (x,⊥) has empty support, (x,y) has support {y}.
class ScaledSumTransformer final : public OrderTransformer {
public:
    explicit ScaledSumTransformer(OrderPtr x) : x_(std::move(x)) {}
    std::string spec() const override { return "scaled_sum(" + x_->spec() + ")"; }
    OrderPtr apply(OrderPtr y) const override {
        return std::make_shared<PairOrder>(x_, std::make_shared<BottomOrder>(std::move(y)));
    }
    Term map(const ElementMap& f, const Term& e) const override {
        if (!e.is(Tag::Pair) || e.arity() != 2)
            bad_element("scaled_sum");
        if (e.arg(1).is(Tag::Bot))
            return e;
        return pair(e.arg(0), f(e.arg(1)));
    }
    std::vector<Term> support(const Order&, const Term& e) const override {
        if (!e.is(Tag::Pair) || e.arity() != 2)
            bad_element("scaled_sum");
        if (e.arg(1).is(Tag::Bot))
            return {};
        return {e.arg(1)};
    }

private:
    OrderPtr x_;
};

std::vector<Term> map_all(const ElementMap& f, std::span<const Term> xs) {
    std::vector<Term> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.push_back(f(x));
    return out;
}

// ({⊥} ∪ X) × ω^Y: the support is the set of sequence entries.
class ProdOmegaTransformer final : public OrderTransformer {
public:
    explicit ProdOmegaTransformer(OrderPtr x) : x_(std::move(x)) {}
    std::string spec() const override { return "prod_omega(" + x_->spec() + ")"; }
    OrderPtr apply(OrderPtr y) const override {
        return std::make_shared<PairOrder>(std::make_shared<BottomOrder>(x_), std::make_shared<OmegaOrder>(y));
    }
    Term map(const ElementMap& f, const Term& e) const override {
        if (!e.is(Tag::Pair) || e.arity() != 2 || !e.arg(1).is(Tag::Seq))
            bad_element("prod_omega");
        return pair(e.arg(0), omega_seq(map_all(f, e.arg(1).args())));
    }
    std::vector<Term> support(const Order& y, const Term& e) const override {
        if (!e.is(Tag::Pair) || e.arity() != 2 || !e.arg(1).is(Tag::Seq))
            bad_element("prod_omega");
        const auto xs = e.arg(1).args();
        return sorted_set(y, {xs.begin(), xs.end()});
    }

private:
    OrderPtr x_;
};

class OmegaTransformer final : public OrderTransformer {
public:
    std::string spec() const override { return "omega"; }
    OrderPtr apply(OrderPtr y) const override { return std::make_shared<OmegaOrder>(std::move(y)); }
    Term map(const ElementMap& f, const Term& e) const override {
        if (!e.is(Tag::Seq))
            bad_element("omega");
        return omega_seq(map_all(f, e.args()));
    }
    std::vector<Term> support(const Order& y, const Term& e) const override {
        if (!e.is(Tag::Seq))
            bad_element("omega");
        return sorted_set(y, {e.args().begin(), e.args().end()});
    }
};

// Maps the atoms x of ε_x through `atom`, recursing through ω-sums.
template <class Atom>
Term map_eps(const Term& t, Atom atom) {
    switch (t.tag()) {
    case Tag::Zero:
        return t;
    case Tag::Eps:
        return eps(atom(t.arg(0)));
    case Tag::Sum: {
        std::vector<Term> parts;
        parts.reserve(t.arity());
        for (const auto& s : t.args())
            parts.push_back(map_eps(s, atom));
        return sum(std::move(parts));
    }
    default:
        bad_element("epsilon");
    }
}

template <class Visit>
void visit_eps_atoms(const Term& t, Visit visit) {
    switch (t.tag()) {
    case Tag::Zero:
        return;
    case Tag::Eps:
        visit(t.arg(0));
        return;
    case Tag::Sum:
        for (const auto& s : t.args())
            visit_eps_atoms(s, visit);
        return;
    default:
        bad_element("epsilon");
    }
}

class EpsilonTransformer final : public OrderTransformer {
public:
    std::string spec() const override { return "epsilon"; }
    OrderPtr apply(OrderPtr y) const override { return std::make_shared<EpsilonOrder>(std::move(y)); }
    Term map(const ElementMap& f, const Term& e) const override { return map_eps(e, f); }
    std::vector<Term> support(const Order& y, const Term& e) const override {
        std::vector<Term> atoms;
        visit_eps_atoms(e, [&](const Term& x) { atoms.push_back(x); });
        return sorted_set(y, std::move(atoms));
    }
};

// ε over Y ∪ {Ω} ∪ X: only the Y-atoms move, and only they form the support.
class EpsPadTransformer final : public OrderTransformer {
public:
    explicit EpsPadTransformer(OrderPtr x) : x_(std::move(x)) {}
    std::string spec() const override { return "eps_pad(" + x_->spec() + ")"; }
    OrderPtr apply(OrderPtr y) const override {
        return std::make_shared<EpsilonOrder>(std::make_shared<PadOrder>(std::move(y), x_));
    }
    Term map(const ElementMap& f, const Term& e) const override {
        return map_eps(e, [&](const Term& atom) { return atom.is(Tag::Left) ? pad_left(f(atom.arg(0))) : atom; });
    }
    std::vector<Term> support(const Order& y, const Term& e) const override {
        std::vector<Term> atoms;
        visit_eps_atoms(e, [&](const Term& atom) {
            if (atom.is(Tag::Left))
                atoms.push_back(atom.arg(0));
        });
        return sorted_set(y, std::move(atoms));
    }

private:
    OrderPtr x_;
};

} // namespace

TransformerPtr identity_transformer() { return std::make_shared<IdentityTransformer>(); }
TransformerPtr constant_transformer(OrderPtr w, Term element) {
    return std::make_shared<ConstantTransformer>(std::move(w), std::move(element));
}
TransformerPtr scaled_sum_transformer(OrderPtr x) { return std::make_shared<ScaledSumTransformer>(std::move(x)); }
TransformerPtr prod_omega_transformer(OrderPtr x) { return std::make_shared<ProdOmegaTransformer>(std::move(x)); }
TransformerPtr eps_pad_transformer(OrderPtr x) { return std::make_shared<EpsPadTransformer>(std::move(x)); }
TransformerPtr omega_transformer() { return std::make_shared<OmegaTransformer>(); }
TransformerPtr epsilon_transformer() { return std::make_shared<EpsilonTransformer>(); }

// ---------------------------------------------------------------------------
// restriction to the naturals

namespace {
constexpr std::size_t kCachedArities = 33;
}

RestrictedDilator::RestrictedDilator(TransformerPtr t) : transformer_(std::move(t)) {
    small_.reserve(kCachedArities);
    for (std::size_t n = 0; n < kCachedArities; ++n)
        small_.push_back(transformer_->apply(fin_order(n)));
    unbounded_ = transformer_->apply(nat_order());
}

OrderPtr RestrictedDilator::order_at(std::size_t n) const {
    if (n < small_.size())
        return small_[n];
    return transformer_->apply(fin_order(n));
}

bool RestrictedDilator::member(std::size_t n, const Term& code) const { return order_at(n)->member(code); }

bool RestrictedDilator::less(std::size_t n, const Term& a, const Term& b) const {
    return order_at(n)->less(a, b);
}

Term RestrictedDilator::map(const OrderEmbedding& f, const Term& code) const {
    return transformer_->map(f.as_element_map(), code);
}

IndexSet RestrictedDilator::support(std::size_t n, const Term& code) const {
    IndexSet out;
    for (const auto& x : transformer_->support(*fin_order(n), code))
        out.push_back(static_cast<std::size_t>(x.value()));
    return out;
}

std::vector<Term> RestrictedDilator::enumerate(std::size_t n, std::size_t max_len) const {
    return enumerate_terms(*order_at(n), max_len);
}

std::size_t RestrictedDilator::code_length(const Term& code) const { return unbounded_->length(code); }

void RestrictedDilator::print_code(const Term& code, std::string& out) const { unbounded_->print(code, out); }

Term RestrictedDilator::parse_code(Cursor& in) const { return unbounded_->parse(in); }

DilatorPtr restrict(TransformerPtr t) { return std::make_shared<RestrictedDilator>(std::move(t)); }

// ---------------------------------------------------------------------------
// tables

TableDilator::TableDilator(Data data, std::string source) : data_(std::move(data)), source_(std::move(source)) {}

bool TableDilator::member(std::size_t n, const Term& code) const {
    require_arity(n);
    return code.is(Tag::Nat) && data_.elements[n].count(code.value()) > 0;
}

bool TableDilator::less(std::size_t n, const Term& a, const Term& b) const {
    require_arity(n);
    return data_.lt[n].count({a.value(), b.value()}) > 0;
}

Term TableDilator::map(const OrderEmbedding& f, const Term& code) const {
    require_arity(f.codomain());
    const MapKey key{f.domain(), f.codomain(), {f.images().begin(), f.images().end()}, code.value()};
    auto it = data_.maps.find(key);
    if (it == data_.maps.end())
        throw DomainError("table has no map entry for " + show_index_set({f.images().begin(), f.images().end()}) +
                          ": " + std::to_string(f.domain()) + " -> " + std::to_string(f.codomain()) + " at " +
                          std::to_string(code.value()));
    return Term::nat(it->second);
}

IndexSet TableDilator::support(std::size_t n, const Term& code) const {
    require_arity(n);
    auto it = data_.supports.find({n, code.value()});
    if (it == data_.supports.end())
        throw DomainError("table has no support for " + std::to_string(code.value()) + " in T_" + std::to_string(n));
    return it->second;
}

std::vector<Term> TableDilator::enumerate(std::size_t n, std::size_t max_len) const {
    require_arity(n);
    std::vector<Term> out;
    if (max_len == 0)
        return out;
    for (auto v : data_.elements[n])
        out.push_back(Term::nat(v));
    robust_sort(out, [&](const Term& a, const Term& b) { return less(n, a, b); });
    return out;
}

void TableDilator::print_code(const Term& code, std::string& out) const { out += std::to_string(code.value()); }

Term TableDilator::parse_code(Cursor& in) const { return Term::nat(in.parse_uint()); }

namespace {

std::string list_text(std::span<const std::size_t> xs) {
    if (xs.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

struct LineReader {
    std::size_t line_no;
    std::vector<std::string> words;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    }

    std::uint64_t number(std::size_t i) const {
        const std::string& w = words[i];
        if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail("expected a natural number, got '" + w + "'");
        try {
            return std::stoull(w);
        } catch (const std::exception&) {
            fail("number out of range: " + w);
        }
    }

    std::vector<std::size_t> list(std::size_t i) const {
        std::vector<std::size_t> out;
        const std::string& w = words[i];
        if (w == "-")
            return out;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = w.find(',', start);
            const std::string item = w.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            LineReader single{line_no, {item}};
            out.push_back(static_cast<std::size_t>(single.number(0)));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return out;
    }
};

bool strictly_increasing_below(const std::vector<std::size_t>& xs, std::size_t bound) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] >= bound || (i && xs[i - 1] >= xs[i]))
            return false;
    return true;
}

} // namespace

std::shared_ptr<const TableDilator> parse_table(std::string_view text, std::string source,
                                                TableValidation validation) {
    using Data = TableDilator::Data;
    Data data;
    bool have_header = false;
    std::vector<LineReader> lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        LineReader line{line_no, {}};
        for (std::string w; words >> w;)
            line.words.push_back(w);
        if (line.words.empty())
            continue;
        if (!have_header) {
            if (line.words[0] != "arity" || line.words.size() != 2)
                line.fail("expected header 'arity <N>'");
            data.arity = static_cast<std::size_t>(line.number(1));
            if (data.arity > 64)
                line.fail("arity above 64 is not supported");
            data.elements.resize(data.arity + 1);
            data.lt.resize(data.arity + 1);
            have_header = true;
            continue;
        }
        lines.push_back(std::move(line));
    }
    if (!have_header)
        throw ParseError("table: missing header 'arity <N>'");

    auto arity_at = [&](const LineReader& l, std::size_t i) {
        const std::uint64_t n = l.number(i);
        if (n > data.arity)
            l.fail("T_" + std::to_string(n) + " is beyond the declared arity " + std::to_string(data.arity));
        return static_cast<std::size_t>(n);
    };

    // Elements first, so that the other lines may come in any order.
    for (const auto& l : lines) {
        if (l.words[0] != "elem")
            continue;
        if (l.words.size() != 3)
            l.fail("expected 'elem <n> <code>'");
        const std::size_t n = arity_at(l, 1);
        if (!data.elements[n].insert(l.number(2)).second)
            l.fail("duplicate element " + l.words[2] + " of T_" + l.words[1]);
    }
    auto element_at = [&](const LineReader& l, std::size_t n, std::size_t i) {
        const std::uint64_t v = l.number(i);
        if (!data.elements[n].count(v))
            l.fail(std::to_string(v) + " is not an element of T_" + std::to_string(n));
        return v;
    };

    for (const auto& l : lines) {
        const std::string& kind = l.words[0];
        if (kind == "elem")
            continue;
        if (kind == "lt") {
            if (l.words.size() != 4)
                l.fail("expected 'lt <n> <code> <code>'");
            const std::size_t n = arity_at(l, 1);
            data.lt[n].insert({element_at(l, n, 2), element_at(l, n, 3)});
        } else if (kind == "supp") {
            if (l.words.size() != 4)
                l.fail("expected 'supp <n> <code> <list>'");
            const std::size_t n = arity_at(l, 1);
            const std::uint64_t code = element_at(l, n, 2);
            auto a = l.list(3);
            if (!strictly_increasing_below(a, n))
                l.fail("support " + l.words[3] + " is not a strictly increasing subset of " + std::to_string(n));
            if (!data.supports.emplace(std::pair{n, code}, std::move(a)).second)
                l.fail("duplicate support line for " + l.words[2] + " in T_" + l.words[1]);
        } else if (kind == "map") {
            if (l.words.size() != 6)
                l.fail("expected 'map <n> <m> <f> <code> <code>'");
            const std::size_t n = arity_at(l, 1);
            const std::size_t m = arity_at(l, 2);
            auto f = l.list(3);
            if (f.size() != n || !strictly_increasing_below(f, m))
                l.fail("'" + l.words[3] + "' is not a strictly increasing map " + l.words[1] + " -> " + l.words[2]);
            const std::uint64_t from = element_at(l, n, 4);
            const std::uint64_t to = element_at(l, m, 5);
            if (!data.maps.emplace(TableDilator::MapKey{n, m, std::move(f), from}, to).second)
                l.fail("duplicate map entry");
        } else {
            l.fail("unknown line kind '" + kind + "'");
        }
    }

    for (std::size_t n = 0; n <= data.arity; ++n) {
        for (auto code : data.elements[n]) {
            if (!data.supports.count({n, code}))
                throw ParseError("table: no support line for " + std::to_string(code) + " in T_" + std::to_string(n));
            for (std::size_t m = n; m <= data.arity; ++m)
                for (const auto& f : all_embeddings(n, m)) {
                    TableDilator::MapKey key{n, m, {f.images().begin(), f.images().end()}, code};
                    if (!data.maps.count(key))
                        throw ParseError("table: missing map entry 'map " + std::to_string(n) + " " +
                                         std::to_string(m) + " " + list_text(f.images()) + " " +
                                         std::to_string(code) + " ...'");
                }
        }
    }

    if (validation == TableValidation::strict) {
        for (std::size_t n = 0; n <= data.arity; ++n) {
            const std::vector<std::uint64_t> xs(data.elements[n].begin(), data.elements[n].end());
            const auto& rel = data.lt[n];
            auto res = check_linear(
                xs.size(), [&](std::size_t i, std::size_t j) { return rel.count({xs[i], xs[j]}) > 0; }, 1);
            if (!res.pass) {
                std::string w;
                for (auto i : res.witness)
                    w += " " + std::to_string(xs[i]);
                throw ParseError("table: T_" + std::to_string(n) + " is not a linear order (" + res.property +
                                 " fails at" + w + ")");
            }
        }
    }
    return std::make_shared<TableDilator>(std::move(data), std::move(source));
}

std::shared_ptr<const TableDilator> load_table(const std::filesystem::path& path, TableValidation validation) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open table file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str(), path.string(), validation);
}

std::string table_to_text(const TableDilator& table) {
    const auto& d = table.data();
    std::string out = "arity " + std::to_string(d.arity) + "\n";
    for (std::size_t n = 0; n <= d.arity; ++n)
        for (auto v : d.elements[n])
            out += "elem " + std::to_string(n) + " " + std::to_string(v) + "\n";
    for (std::size_t n = 0; n <= d.arity; ++n)
        for (auto [a, b] : d.lt[n])
            out += "lt " + std::to_string(n) + " " + std::to_string(a) + " " + std::to_string(b) + "\n";
    for (const auto& [key, a] : d.supports)
        out += "supp " + std::to_string(key.first) + " " + std::to_string(key.second) + " " + list_text(a) + "\n";
    for (const auto& [key, to] : d.maps) {
        const auto& [n, m, f, from] = key;
        out += "map " + std::to_string(n) + " " + std::to_string(m) + " " + list_text(f) + " " +
               std::to_string(from) + " " + std::to_string(to) + "\n";
    }
    return out;
}

void save_table(const TableDilator& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write table file " + path.string());
    out << table_to_text(table);
    if (!out)
        throw Error("error writing table file " + path.string());
}

std::shared_ptr<const TableDilator> tabulate(const CodedDilator& t, std::size_t arity, std::size_t max_len) {
    t.require_arity(arity);
    // Collect T_n as enumerated plus everything reachable by maps, so that
    // the result is closed under the functor action.
    std::vector<std::vector<Term>> codes(arity + 1);
    std::vector<std::unordered_map<Term, bool, TermHash>> seen(arity + 1);
    auto add = [&](std::size_t n, const Term& c) {
        if (seen[n].emplace(c, true).second)
            codes[n].push_back(c);
    };
    for (std::size_t n = 0; n <= arity; ++n)
        for (const auto& c : t.enumerate(n, max_len))
            add(n, c);
    for (std::size_t n = 0; n <= arity; ++n)
        for (std::size_t i = 0; i < codes[n].size(); ++i)
            for (std::size_t m = n + 1; m <= arity; ++m)
                for (const auto& f : all_embeddings(n, m))
                    add(m, t.map(f, codes[n][i]));

    std::vector<std::string> texts;
    for (const auto& cs : codes)
        for (const auto& c : cs)
            texts.push_back(t.show_code(c));
    std::sort(texts.begin(), texts.end());
    texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
    auto number = [&](const Term& c) {
        const auto it = std::lower_bound(texts.begin(), texts.end(), t.show_code(c));
        return static_cast<std::uint64_t>(it - texts.begin());
    };

    TableDilator::Data d;
    d.arity = arity;
    d.elements.resize(arity + 1);
    d.lt.resize(arity + 1);
    for (std::size_t n = 0; n <= arity; ++n) {
        for (const auto& c : codes[n]) {
            const auto v = number(c);
            d.elements[n].insert(v);
            d.supports[{n, v}] = t.support(n, c);
            for (const auto& c2 : codes[n])
                if (t.less(n, c, c2))
                    d.lt[n].insert({v, number(c2)});
            for (std::size_t m = n; m <= arity; ++m)
                for (const auto& f : all_embeddings(n, m))
                    d.maps[{n, m, {f.images().begin(), f.images().end()}, v}] = number(t.map(f, c));
        }
    }
    return std::make_shared<TableDilator>(std::move(d), "tabulate(" + t.spec() + ")");
}

// ---------------------------------------------------------------------------
// coherence audit

namespace {

struct CoherenceFailure {
    std::string property;
    std::string witness;
    std::vector<CoherenceReport::Comparison> comparisons;
};

std::string emb_text(const OrderEmbedding& f) {
    return "[" + (f.domain() ? list_text(f.images()) : std::string()) + "]:" + std::to_string(f.domain()) + "->" +
           std::to_string(f.codomain());
}

} // namespace

CoherenceReport check_coherence(const CodedDilator& t, std::size_t max_n, std::size_t max_len) {
    t.require_arity(max_n);
    CoherenceReport report;
    using Comparisons = std::vector<CoherenceReport::Comparison>;
    auto fail = [&](std::string property, std::string witness, Comparisons comparisons = {}) {
        throw CoherenceFailure{std::move(property), std::move(witness), std::move(comparisons)};
    };
    auto code = [&](const Term& c) { return t.show_code(c); };

    try {
        std::vector<std::vector<Term>> elems(max_n + 1);
        for (std::size_t n = 0; n <= max_n; ++n) {
            elems[n] = t.enumerate(n, max_len);
            report.elements += elems[n].size();
        }

        // T_n: membership, support range, linearity
        for (std::size_t n = 0; n <= max_n; ++n) {
            const auto& es = elems[n];
            for (const auto& s : es) {
                ++report.checks;
                if (!t.member(n, s))
                    fail("membership", "n=" + std::to_string(n) + " sigma=" + code(s));
                const IndexSet a = t.support(n, s);
                ++report.checks;
                bool ok = true;
                for (std::size_t i = 0; i < a.size(); ++i)
                    ok = ok && a[i] < n && (i == 0 || a[i - 1] < a[i]);
                if (!ok)
                    fail("support range", "n=" + std::to_string(n) + " sigma=" + code(s) +
                                              " supp=" + show_index_set(a));
            }
            const auto lin =
                check_linear(es.size(), [&](std::size_t i, std::size_t j) { return t.less(n, es[i], es[j]); });
            report.checks += lin.triples;
            if (!lin.pass) {
                std::string w = "n=" + std::to_string(n);
                for (auto i : lin.witness)
                    w += " " + code(es[i]);
                const auto& x = lin.witness;
                Comparisons cs;
                if (lin.property == "irreflexivity")
                    cs = {{n, es[x[0]], es[x[0]], "prints ? (expected =)"}};
                else if (lin.property == "trichotomy")
                    cs = {{n, es[x[0]], es[x[1]], "prints ? (distinct codes)"}};
                else
                    cs = {{n, es[x[0]], es[x[1]], "<"}, {n, es[x[1]], es[x[2]], "<"}, {n, es[x[0]], es[x[2]], "not <"}};
                fail("linearity (" + lin.property + ")", w, std::move(cs));
            }
        }

        // identity law
        for (std::size_t n = 0; n <= max_n; ++n) {
            const auto id = OrderEmbedding::identity(n);
            for (const auto& s : elems[n]) {
                ++report.checks;
                const Term img = t.map(id, s);
                if (!(img == s))
                    fail("identity", "n=" + std::to_string(n) + " sigma=" + code(s) + " T_id(sigma)=" + code(img),
                         {{n, s, img, "not ="}});
            }
        }

        // single maps: membership, order preservation, naturality
        for (std::size_t n = 0; n <= max_n; ++n) {
            const auto& es = elems[n];
            for (std::size_t m = n; m <= max_n; ++m) {
                for (const auto& f : all_embeddings(n, m)) {
                    std::vector<Term> imgs;
                    imgs.reserve(es.size());
                    for (const auto& s : es) {
                        Term img = t.map(f, s);
                        ++report.checks;
                        if (!t.member(m, img))
                            fail("map membership", "f=" + emb_text(f) + " sigma=" + code(s) + " T_f(sigma)=" + code(img));
                        ++report.checks;
                        const IndexSet lhs = t.support(m, img);
                        const IndexSet rhs = finite_image(f, t.support(n, s));
                        if (lhs != rhs)
                            fail("naturality", "f=" + emb_text(f) + " sigma=" + code(s) + " supp(T_f(sigma))=" +
                                                   show_index_set(lhs) + " f[supp(sigma)]=" + show_index_set(rhs));
                        imgs.push_back(std::move(img));
                    }
                    for (std::size_t i = 0; i < es.size(); ++i)
                        for (std::size_t j = 0; j < es.size(); ++j) {
                            if (i == j || !t.less(n, es[i], es[j]))
                                continue;
                            ++report.checks;
                            if (!t.less(m, imgs[i], imgs[j]))
                                fail("order preservation",
                                     "f=" + emb_text(f) + " sigma=" + code(es[i]) + " tau=" + code(es[j]) +
                                         " T_f(sigma)=" + code(imgs[i]) + " T_f(tau)=" + code(imgs[j]),
                                     {{n, es[i], es[j], "<"}, {m, imgs[i], imgs[j], "not <"}});
                        }
                }
            }
        }

        // composition n -> k -> m
        for (std::size_t n = 0; n <= max_n; ++n)
            for (std::size_t k = n; k <= max_n; ++k)
                for (const auto& f : all_embeddings(n, k))
                    for (std::size_t m = k; m <= max_n; ++m)
                        for (const auto& g : all_embeddings(k, m)) {
                            const auto gf = compose(g, f);
                            for (const auto& s : elems[n]) {
                                ++report.checks;
                                const Term lhs = t.map(gf, s);
                                const Term rhs = t.map(g, t.map(f, s));
                                if (!(lhs == rhs))
                                    fail("composition",
                                         "f=" + emb_text(f) + " g=" + emb_text(g) + " sigma=" + code(s) +
                                             " T_gf(sigma)=" + code(lhs) + " T_g(T_f(sigma))=" + code(rhs),
                                         {{m, lhs, rhs, "not ="}});
                            }
                        }

        // maps that agree on the support agree on the element
        for (std::size_t n = 0; n <= max_n; ++n)
            for (std::size_t m = n; m <= max_n; ++m) {
                const auto fs = all_embeddings(n, m);
                for (const auto& s : elems[n]) {
                    const IndexSet a = t.support(n, s);
                    for (std::size_t i = 0; i < fs.size(); ++i)
                        for (std::size_t j = i + 1; j < fs.size(); ++j) {
                            if (finite_image(fs[i], a) != finite_image(fs[j], a))
                                continue;
                            ++report.checks;
                            const Term x = t.map(fs[i], s);
                            const Term y = t.map(fs[j], s);
                            if (!(x == y))
                                fail("naturality",
                                     "f=" + emb_text(fs[i]) + " g=" + emb_text(fs[j]) + " sigma=" + code(s) +
                                         " supp=" + show_index_set(a) + " T_f(sigma)=" + code(x) +
                                         " T_g(sigma)=" + code(y),
                                     {{m, x, y, "not ="}});
                        }
                }
            }

        // support condition: sigma = T_{ι∘en}(sigma0) for some sigma0
        for (std::size_t n = 0; n <= max_n; ++n)
            for (const auto& s : elems[n]) {
                const IndexSet a = t.support(n, s);
                const OrderEmbedding e(a.size(), n, a);
                ++report.checks;
                const bool found = std::any_of(elems[a.size()].begin(), elems[a.size()].end(),
                                               [&](const Term& s0) { return t.map(e, s0) == s; });
                if (!found)
                    fail("support condition", "n=" + std::to_string(n) + " sigma=" + code(s) +
                                                  " supp=" + show_index_set(a) + ": no preimage in T_" +
                                                  std::to_string(a.size()));
            }
    } catch (const CoherenceFailure& failure) {
        report.pass = false;
        report.property = failure.property;
        report.counterexample = failure.witness;
        report.comparisons = failure.comparisons;
    }
    return report;
}

} // namespace ordkit
