#include "doctest.h"

#include "chev/data.hpp"

using namespace chev;

TEST_CASE("linear expressions")
{
    auto e = parse_linear("-3/2*a_13");
    CHECK(e.constant == 0);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].first == "a_13");
    CHECK(e.terms[0].second == mpq_class(-3, 2));

    e = parse_linear("a_9_1+2*a_1_10");
    REQUIRE(e.terms.size() == 2);
    // Terms come back sorted by name.
    CHECK(e.terms[0] == std::pair<std::string, mpq_class>{"a_1_10", 2});
    CHECK(e.terms[1] == std::pair<std::string, mpq_class>{"a_9_1", 1});
    CHECK(to_string(parse_linear("x - x")) == "0");

    e = parse_linear("1 + y1 - 2*y3");
    CHECK(e.constant == 1);
    CHECK(e.terms.size() == 2);
    CHECK(to_string(parse_linear(to_string(e))) == to_string(e));

    CHECK(parse_linear("0").terms.empty());
    CHECK(parse_linear("-1/4").constant == mpq_class(-1, 4));
    CHECK_THROWS_AS(parse_linear("2**a"), data_error);
    CHECK_THROWS_AS(parse_linear(""), data_error);
    CHECK_THROWS_AS(parse_linear("a+"), data_error);
}

TEST_CASE("text matrices")
{
    auto m = parse_text_matrix("# kind: w\n# root: a1\n2\n1 0\n0 -1/2\n", "inline");
    CHECK(m.get("kind") == "w");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.cells[1][1] == "-1/2");
    CHECK_THROWS_AS(m.get("param"), data_error);
    CHECK_THROWS_AS(parse_text_matrix("2\n1 0\n0\n"), data_error);
    CHECK_THROWS_AS(parse_text_matrix("3\n1 0\n0 1\n"), data_error);
}

TEST_CASE("embedded data files")
{
    CHECK(data_files("fixtures/").size() == 12);
    CHECK(data_files("patterns/").size() == 8);
    CHECK_THROWS_AS(data_file("fixtures/none.txt"), data_error);
    auto p = load_pattern("patterns/b2_x_e2.txt");
    CHECK(p.rows() == 10);
    CHECK(p.cols() == 10);
    auto a = load_assignments("patterns/b2_unknowns.txt");
    CHECK(a.at("a_1_1").constant == 1);
    CHECK(a.at("a_1_7").terms.empty());
    CHECK(a.at("a_1_7").constant == 2);
}
