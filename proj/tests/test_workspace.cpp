#include <doctest.h>

#include "qcontig/workspace.hpp"

using namespace qcontig;

TEST_CASE("registration assigns dense ids in order") {
    Workspace ws;
    CHECK(ws.register_symbol("q").id == 0);
    CHECK(ws.register_symbol("b").id == 1);
    CHECK(ws.register_symbol("c").id == 2);
    CHECK(ws.size() == 3);
    CHECK(ws.name(Symbol{1}) == "b");
}

TEST_CASE("duplicate names are rejected") {
    Workspace ws;
    ws.register_symbol("q");
    CHECK_THROWS_AS(ws.register_symbol("q"), duplicate_symbol_error);
}

TEST_CASE("empty names are rejected") {
    Workspace ws;
    CHECK_THROWS_AS(ws.register_symbol(""), error);
}

TEST_CASE("symbol() registers on first use and reuses afterwards") {
    Workspace ws;
    Symbol a = ws.symbol("x");
    Symbol b = ws.symbol("x");
    CHECK(a == b);
    CHECK(ws.size() == 1);
    CHECK(ws.contains("x"));
    CHECK_FALSE(ws.contains("y"));
    CHECK_THROWS_AS(ws.lookup("y"), error);
}
