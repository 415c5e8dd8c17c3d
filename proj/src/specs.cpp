#include "ordkit/specs.hpp"

#include "ordkit/error.hpp"
#include "ordkit/notations.hpp"

namespace ordkit {

namespace {

OrderPtr parse_order_in(Cursor& in, TableValidation tables);
DilatorPtr parse_dilator_in(Cursor& in, TableValidation tables);

OrderPtr unary(Cursor& in, TableValidation tables) {
    OrderPtr base = parse_order_in(in, tables);
    in.expect(")");
    return base;
}

OrderPtr parse_order_in(Cursor& in, TableValidation tables) {
    if (in.consume("fin:"))
        return fin_order(static_cast<std::size_t>(in.parse_uint()));
    if (in.consume("nat"))
        return nat_order();
    if (in.consume("omega("))
        return std::make_shared<OmegaOrder>(unary(in, tables));
    if (in.consume("epsilon("))
        return std::make_shared<EpsilonOrder>(unary(in, tables));
    if (in.consume("theta("))
        return std::make_shared<ThetaOrder>(unary(in, tables));
    if (in.consume("pad(")) {
        OrderPtr lower = parse_order_in(in, tables);
        in.expect(",");
        OrderPtr upper = parse_order_in(in, tables);
        in.expect(")");
        return std::make_shared<PadOrder>(std::move(lower), std::move(upper));
    }
    if (in.consume("pair(")) {
        OrderPtr a = parse_order_in(in, tables);
        in.expect(",");
        OrderPtr b = parse_order_in(in, tables);
        in.expect(")");
        return std::make_shared<PairOrder>(std::move(a), std::move(b));
    }
    if (in.consume("bot+"))
        return std::make_shared<BottomOrder>(parse_order_in(in, tables));
    if (in.consume("bhfix(")) {
        DilatorPtr d = parse_dilator_in(in, tables);
        in.expect(")");
        return std::make_shared<BhfixOrder>(std::move(d));
    }
    in.fail("expected an order spec (fin:k, nat, omega(..), epsilon(..), theta(..), pad(..,..), bhfix(..))");
}

TransformerPtr parse_transformer_in(Cursor& in, TableValidation tables) {
    if (in.consume("id"))
        return identity_transformer();
    if (in.consume("const(")) {
        OrderPtr w = parse_order_in(in, tables);
        in.expect(",");
        Term element = w->parse(in);
        in.expect(")");
        if (!w->member(element))
            in.fail("const: " + w->why_not_member(element));
        return constant_transformer(std::move(w), std::move(element));
    }
    if (in.consume("scaled_sum("))
        return scaled_sum_transformer(unary(in, tables));
    if (in.consume("prod_omega("))
        return prod_omega_transformer(unary(in, tables));
    if (in.consume("eps_pad("))
        return eps_pad_transformer(unary(in, tables));
    if (in.consume("omega"))
        return omega_transformer();
    if (in.consume("epsilon"))
        return epsilon_transformer();
    return nullptr;
}

DilatorPtr parse_dilator_in(Cursor& in, TableValidation tables) {
    if (in.consume("table:")) {
        const std::string_view path = in.take_until_any(",)");
        if (path.empty())
            in.fail("table: expected a path");
        return load_table(std::string(path), tables);
    }
    if (auto t = parse_transformer_in(in, tables))
        return restrict(std::move(t));
    in.fail("expected a dilator spec (id, const(..,..), scaled_sum(..), prod_omega(..), eps_pad(..), omega, "
            "epsilon, table:<path>)");
}

} // namespace

OrderPtr parse_order_spec(Cursor& in) { return parse_order_in(in, TableValidation::structural); }

OrderPtr parse_order_spec(std::string_view text) {
    Cursor in(text);
    OrderPtr o = parse_order_spec(in);
    in.expect_end();
    return o;
}

TransformerPtr parse_transformer_spec(Cursor& in) {
    if (auto t = parse_transformer_in(in, TableValidation::structural))
        return t;
    in.fail("expected a class-sized dilator spec (id, const(..,..), scaled_sum(..), prod_omega(..), eps_pad(..), "
            "omega, epsilon)");
}

TransformerPtr parse_transformer_spec(std::string_view text) {
    Cursor in(text);
    TransformerPtr t = parse_transformer_spec(in);
    in.expect_end();
    return t;
}

DilatorPtr parse_dilator_spec(Cursor& in, TableValidation tables) { return parse_dilator_in(in, tables); }

DilatorPtr parse_dilator_spec(std::string_view text, TableValidation tables) {
    Cursor in(text);
    DilatorPtr d = parse_dilator_spec(in, tables);
    in.expect_end();
    return d;
}

} // namespace ordkit
