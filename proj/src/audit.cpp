#include "ordkit/audit.hpp"

#include "ordkit/error.hpp"
#include "ordkit/linear.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace ordkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Members of length <= max_len, ordered by text only; the audits must not
/// rely on the order they are checking.
std::vector<Term> fragment_by_text(const Order& order, std::size_t max_len) {
    std::vector<std::pair<std::string, Term>> keyed;
    for (auto& t : order.fragment(max_len))
        keyed.emplace_back(show(order, t), std::move(t));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(keyed.size());
    for (auto& [_, t] : keyed)
        out.push_back(std::move(t));
    return out;
}

std::string compare_line(const Order& order, const Term& a, const Term& b, const std::string& expect) {
    return "ordkit compare --order " + shell_quote(order.spec()) + " " + shell_quote(show(order, a)) + " " +
           shell_quote(show(order, b)) + "   # " + expect;
}

/// First (i, j) in row-major order for which bad(i, j) holds, evaluated on
/// worker threads; `visited` counts the pairs where bad was consulted.
std::optional<std::pair<std::size_t, std::size_t>>
first_bad_pair(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& bad) {
    std::vector<std::size_t> first(n, std::numeric_limits<std::size_t>::max());
    std::atomic<std::size_t> best_row{std::numeric_limits<std::size_t>::max()};
    parallel_for(n, [&](std::size_t i) {
        if (i > best_row.load())
            return;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && bad(i, j)) {
                first[i] = j;
                std::size_t cur = best_row.load();
                while (i < cur && !best_row.compare_exchange_weak(cur, i)) {
                }
                return;
            }
    });
    for (std::size_t i = 0; i < n; ++i)
        if (first[i] != std::numeric_limits<std::size_t>::max())
            return std::pair{i, first[i]};
    return std::nullopt;
}

} // namespace

std::string shell_quote(const std::string& word) {
    std::string out = "'";
    for (char c : word) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

std::string render_text(const AuditReport& r) {
    std::string out = "command: " + r.command + "\n";
    for (const auto& [k, v] : r.params)
        out += k + ": " + v + "\n";
    out += "property: " + r.property + "\n";
    for (const auto& [k, v] : r.counts)
        out += k + ": " + std::to_string(v) + "\n";
    out += std::string("verdict: ") + (r.pass ? "pass" : "fail") + "\n";
    if (!r.pass) {
        out += "violation: " + r.violation + "\n";
        for (const auto& c : r.counterexample)
            out += "counterexample: " + c + "\n";
        for (const auto& c : r.recheck)
            out += "recheck: " + c + "\n";
    }
    return out;
}

std::string render_json(const AuditReport& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    j["params"] = params;
    j["property"] = r.property;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counts)
        counts[k] = v;
    j["counts"] = counts;
    j["verdict"] = r.pass ? "pass" : "fail";
    if (!r.pass) {
        j["violation"] = r.violation;
        j["counterexample"] = r.counterexample;
        j["recheck"] = r.recheck;
    }
    return j.dump(2) + "\n";
}

AuditReport audit_order(const OrderPtr& order, std::size_t max_len) {
    const auto start = Clock::now();
    AuditReport r;
    r.command = "check-order";
    r.params = {{"order", order->spec()}, {"max_len", std::to_string(max_len)}};
    r.property = "strict linear order (irreflexivity, trichotomy, transitivity)";

    const auto terms = fragment_by_text(*order, max_len);
    for (const auto& t : terms)
        if (!order->member(t)) {
            r.pass = false;
            r.violation = "membership";
            r.counterexample = {show(*order, t) + " : " + order->why_not_member(t)};
            r.count("terms", terms.size());
            r.elapsed_ms = ms_since(start);
            return r;
        }
    const auto lin =
        check_linear(terms.size(), [&](std::size_t i, std::size_t j) { return order->less(terms[i], terms[j]); });
    r.count("terms", lin.terms);
    r.count("pairs", lin.pairs);
    r.count("triples", lin.triples);
    if (!lin.pass) {
        r.pass = false;
        r.violation = lin.property;
        const auto& w = lin.witness;
        const auto& o = *order;
        if (lin.property == "irreflexivity") {
            r.counterexample = {show(o, terms[w[0]]) + " < itself"};
            r.recheck = {compare_line(o, terms[w[0]], terms[w[0]], "prints ? (expected =)")};
        } else if (lin.property == "trichotomy") {
            const bool lt = o.less(terms[w[0]], terms[w[1]]);
            r.counterexample = {show(o, terms[w[0]]), show(o, terms[w[1]]),
                                lt ? "both a < b and b < a" : "neither a < b nor b < a"};
            r.recheck = {compare_line(o, terms[w[0]], terms[w[1]], "prints ? (distinct terms)")};
        } else {
            r.counterexample = {show(o, terms[w[0]]), show(o, terms[w[1]]), show(o, terms[w[2]]),
                                "a < b and b < c but not a < c"};
            r.recheck = {compare_line(o, terms[w[0]], terms[w[1]], "<"),
                         compare_line(o, terms[w[1]], terms[w[2]], "<"),
                         compare_line(o, terms[w[0]], terms[w[2]], "not <")};
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

AuditReport audit_dilator(const DilatorPtr& dilator, std::size_t max_n, std::size_t max_len) {
    const auto start = Clock::now();
    AuditReport r;
    r.command = "check-dilator";
    r.params = {{"dilator", dilator->spec()}, {"max_n", std::to_string(max_n)}, {"max_len", std::to_string(max_len)}};
    r.property = "prae-dilator coherence (linearity, functoriality, naturality, support condition)";
    const auto rep = check_coherence(*dilator, max_n, max_len);
    r.count("elements", rep.elements);
    r.count("checks", rep.checks);
    r.pass = rep.pass;
    if (!rep.pass) {
        r.violation = rep.property;
        r.counterexample = {rep.counterexample};
        for (const auto& c : rep.comparisons)
            r.recheck.push_back("ordkit compare --dilator " + shell_quote(dilator->spec()) + " --max-n " +
                                std::to_string(c.n) + " " + shell_quote(dilator->show_code(c.a)) + " " +
                                shell_quote(dilator->show_code(c.b)) + "   # " + c.expect);
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

AuditReport audit_collapse(const std::shared_ptr<const BhfixOrder>& fix, std::size_t max_len) {
    const auto start = Clock::now();
    AuditReport r;
    r.command = "check-collapse";
    r.params = {{"dilator", fix->dilator()->spec()}, {"max_len", std::to_string(max_len)}};
    r.property = "Bachmann-Howard collapse conditions for <a,sigma> -> p(sigma; a)";
    const CodedDilator& t = *fix->dilator();
    const auto terms = fragment_by_text(*fix, max_len);
    std::vector<DElement> pre;
    pre.reserve(terms.size());
    for (const auto& s : terms) {
        const auto idx = collapse_indices(s);
        pre.push_back({{idx.begin(), idx.end()}, collapse_code(s)});
    }
    r.count("elements", terms.size());
    auto finish = [&] {
        r.elapsed_ms = ms_since(start);
        return r;
    };

    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!d_member(t, *fix, pre[i]) || !(collapse(pre[i]) == terms[i])) {
            r.pass = false;
            r.violation = "preimage";
            r.counterexample = {show_delement(t, *fix, pre[i]) + " is not a valid preimage of " +
                                show(*fix, terms[i])};
            return finish();
        }
        // supp <^fin ϑ(e)
        if (!fin_less(*fix, std::span<const Term>(pre[i].support), terms[i])) {
            r.pass = false;
            r.violation = "support below collapse";
            r.counterexample = {show_delement(t, *fix, pre[i]), "some support element is not below " +
                                                                     show(*fix, terms[i])};
            for (const auto& s : pre[i].support)
                r.recheck.push_back(compare_line(*fix, s, terms[i], "<"));
            return finish();
        }
    }

    std::atomic<std::size_t> premises{0};
    const auto bad = first_bad_pair(terms.size(), [&](std::size_t i, std::size_t j) {
        if (!d_less(t, *fix, pre[i], pre[j]) ||
            !fin_less(*fix, std::span<const Term>(pre[i].support), terms[j]))
            return false;
        ++premises;
        return !fix->less(terms[i], terms[j]);
    });
    r.count("pairs", terms.size() * terms.size());
    if (bad) {
        const auto [i, j] = *bad;
        r.pass = false;
        r.violation = "order preservation under the support side condition";
        r.counterexample = {show_delement(t, *fix, pre[i]) + " < " + show_delement(t, *fix, pre[j]),
                            "but " + show(*fix, terms[i]) + " is not below " + show(*fix, terms[j])};
        r.recheck = {compare_line(*fix, terms[i], terms[j], "<")};
    } else {
        r.count("premises", premises.load());
    }
    return finish();
}

AuditReport audit_embedding(const Embedding& f, std::size_t max_len) {
    const auto start = Clock::now();
    AuditReport r;
    r.command = "check-embedding";
    r.params = {{"which", f.name()},
                {"source", f.source()->spec()},
                {"target", f.target()->spec()},
                {"max_len", std::to_string(max_len)}};
    r.property = "order preservation";
    const Order& src = *f.source();
    const Order& dst = *f.target();
    const auto terms = fragment_by_text(src, max_len);
    r.count("terms", terms.size());

    std::vector<Term> images(terms.size());
    std::vector<char> anomalies(terms.size(), 0);
    std::vector<std::string> notes(terms.size());
    std::vector<char> members(terms.size(), 0);
    parallel_for(terms.size(), [&](std::size_t i) {
        bool anomaly = false;
        images[i] = f.apply(terms[i], &anomaly);
        anomalies[i] = anomaly;
        members[i] = dst.member(images[i]);
        if (members[i])
            notes[i] = f.check_term(terms[i], images[i]);
    });
    auto finish = [&] {
        r.elapsed_ms = ms_since(start);
        return r;
    };
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!members[i]) {
            r.pass = false;
            r.violation = "image membership";
            r.counterexample = {show(src, terms[i]) + " -> " + show(dst, images[i]), dst.why_not_member(images[i])};
            return finish();
        }
        if (anomalies[i]) {
            r.pass = false;
            r.violation = "fallback branch";
            r.counterexample = {show(src, terms[i]) + " -> " + show(dst, images[i]),
                                "images of the summands are not weakly decreasing"};
            return finish();
        }
        if (!notes[i].empty()) {
            r.pass = false;
            r.violation = "per-term identity";
            r.counterexample = {show(src, terms[i]), notes[i]};
            return finish();
        }
    }

    std::atomic<std::size_t> ordered{0};
    const auto bad = first_bad_pair(terms.size(), [&](std::size_t i, std::size_t j) {
        if (!src.less(terms[i], terms[j]))
            return false;
        ++ordered;
        return !dst.less(images[i], images[j]);
    });
    r.count("pairs", terms.size() * terms.size());
    if (bad) {
        const auto [i, j] = *bad;
        r.pass = false;
        r.violation = "order preservation";
        r.counterexample = {show(src, terms[i]) + " < " + show(src, terms[j]),
                            "f: " + show(dst, images[i]) + " is not below " + show(dst, images[j])};
        r.recheck = {compare_line(src, terms[i], terms[j], "<"), compare_line(dst, images[i], images[j], "not <")};
    } else {
        r.count("ordered_pairs", ordered.load());
    }
    return finish();
}

AuditReport audit_reconstruction(const TransformerPtr& t, const OrderPtr& x, std::size_t max_len) {
    const auto start = Clock::now();
    AuditReport r;
    r.command = "check-eta";
    r.params = {{"dilator", t->spec()}, {"order", x->spec()}, {"max_len", std::to_string(max_len)}};
    r.property = "eta is a support-preserving order isomorphism D^T_X -> T_X";
    auto finish = [&] {
        r.elapsed_ms = ms_since(start);
        return r;
    };
    const auto d = restrict(t);
    const OrderPtr tx = t->apply(x);
    const auto ds = d_enumerate(*d, *x, max_len);
    const auto ts = fragment_by_text(*tx, max_len);
    r.count("d_elements", ds.size());
    r.count("t_elements", ts.size());
    auto dshow = [&](const DElement& e) { return show_delement(*d, *x, e); };

    const auto lin =
        check_linear(ds.size(), [&](std::size_t i, std::size_t j) { return d_less(*d, *x, ds[i], ds[j]); });
    if (!lin.pass) {
        r.pass = false;
        r.violation = "linearity of D (" + lin.property + ")";
        for (auto i : lin.witness)
            r.counterexample.push_back(dshow(ds[i]));
        return finish();
    }

    std::vector<Term> images;
    images.reserve(ds.size());
    std::unordered_map<Term, std::size_t, TermHash> seen;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        Term img = eta(*t, ds[i]);
        if (!tx->member(img) || tx->length(img) > max_len) {
            r.pass = false;
            r.violation = "image in fragment";
            r.counterexample = {dshow(ds[i]) + " -> " + show(*tx, img)};
            return finish();
        }
        if (t->support(*x, img) != ds[i].support) {
            r.pass = false;
            r.violation = "support preservation";
            r.counterexample = {dshow(ds[i]) + " -> " + show(*tx, img)};
            return finish();
        }
        if (!(eta_inverse(*t, *x, img) == ds[i])) {
            r.pass = false;
            r.violation = "inverse";
            r.counterexample = {dshow(ds[i]) + " -> " + show(*tx, img) + " -> " +
                                dshow(eta_inverse(*t, *x, img))};
            return finish();
        }
        if (auto [it, fresh] = seen.emplace(img, i); !fresh) {
            r.pass = false;
            r.violation = "injectivity";
            r.counterexample = {dshow(ds[it->second]), dshow(ds[i]), "both map to " + show(*tx, img)};
            return finish();
        }
        images.push_back(std::move(img));
    }
    for (const auto& s : ts)
        if (!seen.count(s)) {
            r.pass = false;
            r.violation = "surjectivity";
            r.counterexample = {show(*tx, s) + " has no preimage " + dshow(eta_inverse(*t, *x, s))};
            return finish();
        }

    const auto bad = first_bad_pair(ds.size(), [&](std::size_t i, std::size_t j) {
        return d_less(*d, *x, ds[i], ds[j]) != tx->less(images[i], images[j]);
    });
    r.count("pairs", ds.size() * ds.size());
    if (bad) {
        const auto [i, j] = *bad;
        r.pass = false;
        r.violation = "order isomorphism";
        r.counterexample = {dshow(ds[i]) + " vs " + dshow(ds[j]),
                            show(*tx, images[i]) + " vs " + show(*tx, images[j])};
        r.recheck = {compare_line(*tx, images[i], images[j], "")};
    }
    return finish();
}

} // namespace ordkit
