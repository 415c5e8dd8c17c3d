#include "ordkit/cli.hpp"

#include "ordkit/audit.hpp"
#include "ordkit/error.hpp"
#include "ordkit/specs.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace ordkit {

namespace {

struct Options {
    std::string order;
    std::string dilator;
    std::size_t max_len = 0;
    std::optional<std::size_t> max_n;
    std::string which;
    std::uint64_t seed = 0;
    bool json = false;
    bool batch = false;
    std::vector<std::string> terms;
};

int emit(const AuditReport& r, const Options& o, std::ostream& out, std::ostream& err) {
    out << (o.json ? render_json(r) : render_text(r));
    err << "elapsed_ms: " << std::fixed << std::setprecision(1) << r.elapsed_ms << "\n";
    return r.pass ? exit_pass : exit_violation;
}

/// Parses one element from `in` and checks membership.
Term read_member(const Order& order, Cursor& in, const std::string& label) {
    Term t = order.parse(in);
    if (auto why = order.why_not_member(t); !why.empty())
        throw DomainError(label + " is not an element of " + order.spec() + ": " + why);
    return t;
}

/// "<", "=", ">" or "?" when the relation is inconsistent on the pair.
char relation(const std::function<bool(const Term&, const Term&)>& less, const Term& a, const Term& b) {
    const bool lt = less(a, b);
    const bool gt = less(b, a);
    const bool eq = a == b;
    if (lt + gt + eq != 1)
        return '?';
    return lt ? '<' : gt ? '>' : '=';
}

int cmd_compare(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    // Either elements of an order, or codes of T_n for a dilator.
    std::function<Term(Cursor&, const std::string&)> read;
    std::function<bool(const Term&, const Term&)> less;
    OrderPtr order;
    DilatorPtr dilator;
    std::size_t n = 0;
    if (!o.order.empty()) {
        order = parse_order_spec(o.order);
        read = [&](Cursor& c, const std::string& label) { return read_member(*order, c, label); };
        less = [&](const Term& a, const Term& b) { return order->less(a, b); };
    } else {
        if (o.dilator.empty() || !o.max_n)
            throw DomainError("compare needs --order, or --dilator together with --max-n");
        dilator = parse_dilator_spec(o.dilator);
        n = *o.max_n;
        dilator->require_arity(n);
        read = [&](Cursor& c, const std::string& label) {
            Term t = dilator->parse_code(c);
            if (!dilator->member(n, t))
                throw DomainError(label + " is not an element of T_" + std::to_string(n) + " of " + dilator->spec());
            return t;
        };
        less = [&](const Term& a, const Term& b) { return dilator->less(n, a, b); };
    }

    auto report = [&](const Term& a, const Term& b) {
        const char rel = relation(less, a, b);
        out << rel << "\n";
        if (rel == '?')
            err << "inconsistent: a<b is " << less(a, b) << ", b<a is " << less(b, a) << ", a=b is " << (a == b)
                << "\n";
        return rel == '?' ? exit_violation : exit_pass;
    };
    auto one = [&](Cursor& c) {
        Term a = read(c, "first term");
        Term b = read(c, "second term");
        c.expect_end();
        return report(a, b);
    };

    if (!o.batch) {
        if (o.terms.size() != 2)
            throw DomainError("compare expects exactly two terms");
        Cursor c1(o.terms[0]);
        Term a = read(c1, "first term");
        c1.expect_end();
        Cursor c2(o.terms[1]);
        Term b = read(c2, "second term");
        c2.expect_end();
        return report(a, b);
    }
    int code = exit_pass;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }))
            continue;
        try {
            Cursor c(line);
            code = std::max(code, static_cast<int>(one(c)));
        } catch (const Error& e) {
            throw ParseError("stdin line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return code;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const OrderPtr order = parse_order_spec(o.order);
    for (const auto& t : enumerate_terms(*order, o.max_len))
        out << show(*order, t) << "\n";
    return exit_pass;
}

int cmd_tabulate(const Options& o, std::ostream& out) {
    const DilatorPtr d = parse_dilator_spec(o.dilator);
    out << table_to_text(*tabulate(*d, o.max_n.value_or(3), o.max_len));
    return exit_pass;
}

std::shared_ptr<const BhfixOrder> fix_of(const std::string& spec) {
    return std::make_shared<BhfixOrder>(parse_dilator_spec(spec));
}

int cmd_check_embedding(const Options& o, std::ostream& out, std::ostream& err) {
    std::unique_ptr<Embedding> f;
    auto base = [&](const char* fallback) { return parse_order_spec(o.order.empty() ? fallback : o.order); };
    if (o.which == "omega")
        f = std::make_unique<OmegaEmbedding>(base("fin:2"));
    else if (o.which == "epsilon")
        f = std::make_unique<EpsilonEmbedding>(base("fin:1"));
    else if (o.which == "theta")
        f = std::make_unique<ThetaEmbedding>(base("fin:1"));
    else
        f = std::make_unique<MinimalEmbedding>(fix_of(o.dilator.empty() ? "scaled_sum(fin:2)" : o.dilator));
    return emit(audit_embedding(*f, o.max_len), o, out, err);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ordinal notation systems, coded dilators and Bachmann-Howard fixed points", "ordkit"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Emit the report as JSON"); };
    auto add_seed = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "Seed for sampled modes (all current audits are exhaustive)");
    };

    auto* compare = app.add_subcommand("compare", "Compare two elements: prints <, = or >");
    compare->add_option("--order", o.order, "Order spec");
    compare->add_option("--dilator", o.dilator, "Compare codes of T_n of this dilator instead");
    compare->add_option("--max-n", o.max_n, "The n of T_n for --dilator");
    compare->add_flag("--batch", o.batch, "Read two terms per line from stdin");
    compare->add_option("terms", o.terms, "The two terms");

    auto* check_order = app.add_subcommand("check-order", "Audit linearity on all terms up to a length");
    check_order->add_option("--order", o.order, "Order spec")->required();
    o.max_len = 6;
    check_order->add_option("--max-len", o.max_len, "Largest term length");
    add_json(check_order);
    add_seed(check_order);

    auto* check_dilator = app.add_subcommand("check-dilator", "Audit the prae-dilator conditions on T_0..T_N");
    check_dilator->add_option("--dilator", o.dilator, "Dilator spec")->required();
    check_dilator->add_option("--max-n", o.max_n, "Largest n (default 3)");
    check_dilator->add_option("--max-len", o.max_len, "Largest code length (default 4)");
    add_json(check_dilator);
    add_seed(check_dilator);

    auto* check_collapse = app.add_subcommand("check-collapse", "Audit the canonical collapse into bhfix(D)");
    check_collapse->add_option("--dilator", o.dilator, "Dilator spec")->required();
    check_collapse->add_option("--max-len", o.max_len, "Largest term length (default 7)");
    add_json(check_collapse);
    add_seed(check_collapse);

    auto* check_embedding = app.add_subcommand("check-embedding", "Audit one of the embeddings into bhfix orders");
    check_embedding->add_option("--which", o.which, "omega, epsilon, theta or minimal")
        ->required()
        ->check(CLI::IsMember({"omega", "epsilon", "theta", "minimal"}));
    check_embedding->add_option("--order", o.order, "Base order X (omega/epsilon/theta)");
    check_embedding->add_option("--dilator", o.dilator, "Dilator T for minimal (default scaled_sum(fin:2))");
    check_embedding->add_option("--max-len", o.max_len, "Largest source term length (default 4)");
    add_json(check_embedding);
    add_seed(check_embedding);

    auto* check_eta = app.add_subcommand("check-eta", "Audit eta: D^T_X -> T_X for a class-sized dilator");
    check_eta->add_option("--dilator", o.dilator, "Class-sized dilator spec")->required();
    check_eta->add_option("--order", o.order, "Base order X")->required();
    check_eta->add_option("--max-len", o.max_len, "Largest term length (default 6)");
    add_json(check_eta);
    add_seed(check_eta);

    auto* enumerate = app.add_subcommand("enumerate", "List all terms up to a length in increasing order");
    enumerate->add_option("--order", o.order, "Order spec")->required();
    enumerate->add_option("--max-len", o.max_len, "Largest term length")->required();

    auto* tab = app.add_subcommand("tabulate", "Print a finite table presentation of T_0..T_N");
    tab->add_option("--dilator", o.dilator, "Dilator spec")->required();
    tab->add_option("--max-n", o.max_n, "Arity N (default 3)");
    tab->add_option("--max-len", o.max_len, "Largest code length (default 4)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    auto default_len = [&](const CLI::App* c, std::size_t fallback) {
        if (c->count("--max-len") == 0)
            o.max_len = fallback;
    };

    try {
        if (compare->parsed())
            return cmd_compare(o, in, out, err);
        if (check_order->parsed())
            return emit(audit_order(parse_order_spec(o.order), o.max_len), o, out, err);
        if (check_dilator->parsed()) {
            default_len(check_dilator, 4);
            return emit(audit_dilator(parse_dilator_spec(o.dilator), o.max_n.value_or(3), o.max_len), o, out, err);
        }
        if (check_collapse->parsed()) {
            default_len(check_collapse, 7);
            return emit(audit_collapse(fix_of(o.dilator), o.max_len), o, out, err);
        }
        if (check_embedding->parsed()) {
            default_len(check_embedding, 4);
            return cmd_check_embedding(o, out, err);
        }
        if (check_eta->parsed()) {
            default_len(check_eta, 6);
            return emit(audit_reconstruction(parse_transformer_spec(o.dilator), parse_order_spec(o.order), o.max_len),
                        o, out, err);
        }
        if (enumerate->parsed())
            return cmd_enumerate(o, out);
        if (tab->parsed()) {
            default_len(tab, 4);
            return cmd_tabulate(o, out);
        }
    } catch (const ArityExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Unbounded& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace ordkit
