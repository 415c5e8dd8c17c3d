// Acceptance suite: one PASS/FAIL line per criterion, each under 60 s.
#include "ordkit/audit.hpp"
#include "ordkit/cli.hpp"
#include "ordkit/embeddings.hpp"
#include "ordkit/specs.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ordkit;

namespace {

constexpr double time_limit_s = 60.0;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    std::vector<std::string> info;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void audit(const AuditReport& r, const std::string& what) {
        std::string why = what;
        if (!r.pass) {
            why += ": " + r.violation;
            for (const auto& c : r.counterexample)
                why += " | " + c;
        }
        require(r.pass, why);
    }
};

struct Criterion {
    int number;
    std::string title;
    std::function<void(Outcome&)> body;
};

std::string run_cli_text(const std::vector<std::string>& args, int& code) {
    std::istringstream in;
    std::ostringstream out, err;
    code = run_cli(args, in, out, err);
    return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream s(text);
    for (std::string l; std::getline(s, l);)
        out.push_back(l);
    return out;
}

// `ordkit compare ...   # expect` back into arguments; words are single-quoted.
bool recheck_confirms(const std::string& line) {
    std::vector<std::string> args;
    std::string cur;
    bool quoted = false, in_word = false;
    std::size_t i = 0;
    for (; i < line.size() && (quoted || line[i] != '#'); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '\'')
                quoted = false;
            else
                cur += c;
        } else if (c == '\'') {
            quoted = in_word = true;
        } else if (c == ' ') {
            if (in_word)
                args.push_back(cur);
            cur.clear();
            in_word = false;
        } else {
            cur += c;
            in_word = true;
        }
    }
    if (in_word)
        args.push_back(cur);
    if (args.empty() || args.front() != "ordkit")
        return false;
    args.erase(args.begin());
    std::string expect = i < line.size() ? line.substr(i + 1) : "";
    expect.erase(0, expect.find_first_not_of(' '));

    int code = 0;
    std::string out = run_cli_text(args, code);
    if (code == exit_usage)
        return false;
    const std::string sym = out.substr(0, out.find('\n'));
    if (expect.rfind("not ", 0) == 0)
        return sym != expect.substr(4);
    if (expect.rfind("prints ?", 0) == 0)
        return sym == "?";
    return sym == expect;
}

void linearity(Outcome& o) {
    for (const char* sys : {"omega", "epsilon", "theta"})
        for (int k = 0; k <= 2; ++k) {
            const std::string spec = std::string(sys) + "(fin:" + std::to_string(k) + ")";
            o.audit(audit_order(parse_order_spec(spec), 8), spec);
        }
    for (const char* d : {"const(fin:1,0)", "scaled_sum(fin:1)", "scaled_sum(fin:2)", "prod_omega(fin:1)"}) {
        const std::string spec = std::string("bhfix(") + d + ")";
        o.audit(audit_order(parse_order_spec(spec), 9), spec);
    }
}

void coherence(Outcome& o) {
    for (const char* d : {"id", "const(fin:1,0)", "scaled_sum(fin:1)", "scaled_sum(fin:2)", "prod_omega(fin:1)",
                          "eps_pad(fin:1)", "omega", "epsilon"})
        o.audit(audit_dilator(parse_dilator_spec(d), 4, 4), d);
}

void reconstruction(Outcome& o) {
    for (const char* t : {"omega", "epsilon"})
        for (const char* x : {"fin:1", "fin:2"}) {
            auto r = audit_reconstruction(parse_transformer_spec(t), parse_order_spec(x), 6);
            o.audit(r, std::string(t) + " over " + x);
        }
}

void collapse_validity(Outcome& o) {
    for (const char* d : {"const(fin:1,0)", "scaled_sum(fin:1)", "scaled_sum(fin:2)", "prod_omega(fin:1)"})
        o.audit(audit_collapse(std::make_shared<BhfixOrder>(parse_dilator_spec(d)), 8), d);
}

void minimality(Outcome& o) {
    for (const char* d : {"const(fin:1,0)", "scaled_sum(fin:1)", "scaled_sum(fin:2)", "prod_omega(fin:1)"}) {
        MinimalEmbedding f(std::make_shared<BhfixOrder>(parse_dilator_spec(d)));
        o.audit(audit_embedding(f, 8), d);
    }
}

void embeddings(Outcome& o) {
    o.audit(audit_embedding(OmegaEmbedding(fin_order(2)), 4), "omega, X = fin:2");
    o.audit(audit_embedding(EpsilonEmbedding(fin_order(1)), 4), "epsilon, X = fin:1");
    // check_term carries the f(r*) identity
    o.audit(audit_embedding(ThetaEmbedding(fin_order(1)), 4), "theta, X = fin:1");
}

void order_types(Outcome& o) {
    o.require(parse_order_spec("bhfix(id)")->fragment(12).empty(), "bhfix(id) is not empty");
    o.require(parse_order_spec("bhfix(const(fin:1,0))")->fragment(9).size() == 1,
              "bhfix(const(fin:1,0)) does not have exactly one element");

    auto fix = parse_order_spec("bhfix(scaled_sum(fin:1))");
    auto terms = enumerate_terms(*fix, 9);
    // t_0 = p((0,bot);), t_{i+1} = p((0,0); t_i), of lengths 1, 3, 7, 15, ...
    o.require(terms.size() == 3, "bhfix(scaled_sum(fin:1)) at 9 has " + std::to_string(terms.size()) + " terms");
    std::string expect = "p((0,bot);)";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        o.require(show(*fix, terms[i]) == expect, "position " + std::to_string(i) + " holds " + show(*fix, terms[i]));
        expect = "p((0,0); " + expect + ")";
        for (std::size_t j = 0; j < terms.size(); ++j)
            o.require(fix->less(terms[i], terms[j]) == (i < j),
                      "order differs from the index at " + std::to_string(i) + "," + std::to_string(j));
    }
}

struct Mutation {
    std::string dilator;
    std::string description;
    std::string text;
};

// Every lt line reversed or dropped, and every supp line moved to another
// subset of n; each mutation changes exactly one line.
std::vector<Mutation> mutations(const std::string& dilator, std::size_t arity) {
    int code = 0;
    const auto base = lines_of(run_cli_text({"tabulate", "--dilator", dilator, "--max-n", std::to_string(arity),
                                             "--max-len", "4"},
                                            code));
    std::vector<Mutation> out;
    auto join = [&](std::size_t at, const std::string& replacement, bool drop) {
        std::string text;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (i != at)
                text += base[i] + "\n";
            else if (!drop)
                text += replacement + "\n";
        return text;
    };
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::istringstream words(base[i]);
        std::string kind, n, a, b;
        words >> kind >> n >> a >> b;
        if (kind == "lt") {
            const std::string reversed = "lt " + n + " " + b + " " + a;
            out.push_back({dilator, "'" + base[i] + "' -> '" + reversed + "'", join(i, reversed, false)});
            out.push_back({dilator, "drop '" + base[i] + "'", join(i, "", true)});
        } else if (kind == "supp") {
            const std::size_t size = std::stoul(n);
            std::string other = b == "-" ? (size > 0 ? "0" : "") : (b == "0" ? "-" : "0");
            if (other.empty())
                continue;
            const std::string changed = "supp " + n + " " + a + " " + other;
            out.push_back({dilator, "'" + base[i] + "' -> '" + changed + "'", join(i, changed, false)});
        }
    }
    return out;
}

void mutation_sensitivity(Outcome& o) {
    const auto dir = std::filesystem::temp_directory_path() / "ordkit_acceptance";
    std::filesystem::create_directories(dir);
    std::size_t total = 0, caught = 0, index = 0;
    std::vector<std::string> missed;
    for (auto [d, arity] : {std::pair{"scaled_sum(fin:1)", std::size_t{3}}, {"prod_omega(fin:1)", std::size_t{2}}}) {
        for (const auto& m : mutations(d, arity)) {
            ++total;
            bool detected = false;
            const auto path = dir / ("mutant" + std::to_string(index++) + ".txt");
            std::ofstream(path) << m.text;
            const std::string spec = "table:" + path.string();
            std::vector<std::vector<std::string>> commands = {
                {"check-dilator", "--dilator", spec, "--max-n", std::to_string(arity)},
                {"check-order", "--order", "bhfix(" + spec + ")", "--max-len", "5"}};
            for (const auto& cmd : commands) {
                int first = 0, second = 0;
                const std::string a = run_cli_text(cmd, first);
                if (first != exit_violation)
                    continue;
                const std::string b = run_cli_text(cmd, second);
                bool reproducible = second == exit_violation && a == b && a.find("counterexample: ") != std::string::npos;
                bool confirmed = true;
                for (const auto& l : lines_of(a))
                    if (l.rfind("recheck: ", 0) == 0)
                        confirmed = confirmed && recheck_confirms(l.substr(9));
                if (reproducible && confirmed) {
                    ++caught;
                    detected = true;
                    break;
                }
            }
            if (!detected)
                missed.push_back(m.dilator + " " + m.description);
        }
    }
    std::filesystem::remove_all(dir);
    o.info.push_back(std::to_string(caught) + " of " + std::to_string(total) +
                     " single-line mutations caught with a confirmed counterexample");
    for (const auto& m : missed)
        o.info.push_back("not caught: " + m);
    o.require(caught >= 5, "only " + std::to_string(caught) + " mutations caught");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "linearity suites", linearity},
        {2, "dilator coherence", coherence},
        {3, "reconstruction equivalence", reconstruction},
        {4, "collapse validity", collapse_validity},
        {5, "minimality identity", minimality},
        {6, "embeddings into fixed points", embeddings},
        {7, "order-type sanity", order_types},
        {8, "mutation sensitivity", mutation_sensitivity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs < time_limit_s, "took longer than 60 s");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f s", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << buf
                  << ")\n";
        for (const auto& n : o.notes)
            std::cout << "    " << n << "\n";
        for (const auto& n : o.info)
            std::cout << "    " << n << "\n";
        std::cout.flush();
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
