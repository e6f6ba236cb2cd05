#include <catch2/catch_amalgamated.hpp>

#include "acm/format.hpp"
#include "acm/hvector.hpp"

using namespace acm;

TEST_CASE("h-vector storage trims trailing zeros", "[hvector]") {
	CHECK(HVector{1, 2, 0, 0} == HVector{1, 2});
	CHECK(HVector{1, 2, 0, 0}.b() == 1);
	CHECK(HVector{}.b() == -1);
	CHECK(HVector{1, 2, 1}.at(1) == 2);
	CHECK(HVector{1, 2, 1}.at(7) == 0);
	CHECK(HVector{1, 2, 1}.at(-1) == 0);
	CHECK_THROWS_AS(HVector(std::vector<int>{1, -2}), std::invalid_argument);
}

TEST_CASE("admissibility", "[hvector]") {
	CHECK(is_c2_admissible(HVector{1}));
	CHECK(is_c2_admissible(HVector{1, 1, 1, 1}));
	CHECK(is_c2_admissible(HVector{1, 2, 2, 1}));
	CHECK(is_c2_admissible(HVector{1, 2, 3, 4, 5, 6, 7}));
	CHECK(is_c2_admissible(HVector{1, 2, 1, 1}));
	CHECK_FALSE(is_c2_admissible(HVector{}));
	CHECK_FALSE(is_c2_admissible(HVector{2, 1}));
	CHECK_FALSE(is_c2_admissible(HVector{1, 3}));          // ramp must grow by one
	CHECK_FALSE(is_c2_admissible(HVector{1, 1, 2}));       // tail may not grow
	CHECK_FALSE(is_c2_admissible(HVector{1, 2, 4, 4}));    // jump past the ramp
	CHECK_FALSE(is_c2_admissible(HVector{1, 2, 3, 3, 4}));
}

TEST_CASE("initial degree and generation degree", "[hvector]") {
	CHECK(initial_degree(HVector{1}) == 1);
	CHECK(initial_degree(HVector{1, 2, 3, 4, 2, 1}) == 4);
	CHECK(initial_degree(HVector{1, 2, 3, 4, 5, 6}) == 6);
	CHECK(second_ideal_degree(HVector{1, 2, 2, 1}) == 3);  // tail entry 1 < s at n = 3
	CHECK(second_ideal_degree(HVector{1, 2, 3, 4, 2, 1}) == 4);
	CHECK(second_ideal_degree(HVector{1, 1, 1, 1}) == 4);
	CHECK_THROWS_AS(initial_degree(HVector{1, 3}), std::invalid_argument);
}

TEST_CASE("decreasing type", "[hvector]") {
	CHECK(is_decreasing_type(HVector{1}));
	CHECK(is_decreasing_type(HVector{1, 2, 2, 1}));
	CHECK(is_decreasing_type(HVector{1, 2, 3, 3, 3}));     // plateau, then one cliff
	CHECK(is_decreasing_type(HVector{1, 2, 3, 4, 2, 1}));
	CHECK_FALSE(is_decreasing_type(HVector{1, 2, 1, 1}));  // stalls after the first drop
	CHECK_FALSE(is_decreasing_type(HVector{1, 2, 3, 1, 1, 1, 1, 1}));
	CHECK_THROWS_AS(is_decreasing_type(HVector{1, 3}), std::invalid_argument);
}

TEST_CASE("invariants of reference curves", "[hvector]") {
	auto inv = invariants(HVector{1, 2, 3, 4, 2, 1});
	CHECK(inv == CurveInvariants{13, 21, 4, 4, 3, 6, 5});

	inv = invariants(HVector{1, 2, 2, 1});
	CHECK(inv == CurveInvariants{6, 4, 2, 3, 1, 4, 3});

	inv = invariants(HVector{1});
	CHECK(inv == CurveInvariants{1, 0, 1, 1, -2, 1, 0});

	inv = invariants(HVector{1, 2, 3, 4, 5, 3, 1});
	CHECK(inv == CurveInvariants{19, 43, 5, 5, 4, 7, 6});

	inv = invariants(HVector{1, 1, 1, 1});
	CHECK(inv == CurveInvariants{4, 3, 1, 4, 1, 4, 3});
}

TEST_CASE("biliaison type from h-vector", "[biliaison]") {
	CHECK(to_biliaison(HVector{1, 2, 3, 4, 2, 1}) == BiliaisonType{1, 2, 4, 6});
	CHECK(to_biliaison(HVector{1, 2, 3, 1, 1, 1, 1, 1}) == BiliaisonType{1, 2, 8});
	CHECK(to_biliaison(HVector{1, 2, 3}) == BiliaisonType{1, 2, 3});
	CHECK(to_biliaison(HVector{1}) == BiliaisonType{1});
}

TEST_CASE("h-vector from biliaison type", "[biliaison]") {
	CHECK(from_biliaison(BiliaisonType{1, 2, 8}) == HVector{1, 2, 3, 1, 1, 1, 1, 1});
	CHECK(from_biliaison(BiliaisonType{2, 3, 4, 5}) == HVector{1, 2, 3, 4, 4});
	CHECK(from_biliaison(BiliaisonType{1}) == HVector{1});
	CHECK_THROWS_AS(from_biliaison(BiliaisonType{2, 2}), std::invalid_argument);
	CHECK_THROWS_AS(from_biliaison(BiliaisonType{}), std::invalid_argument);
}

TEST_CASE("biliaison round trip", "[biliaison]") {
	for (auto h : {HVector{1, 2, 3, 4, 2, 1}, HVector{1, 1, 1}, HVector{1, 2, 2, 2, 1},
	               HVector{1, 2, 3, 4, 5}}) {
		auto lam = to_biliaison(h);
		CHECK(lam.strictly_increasing());
		CHECK(from_biliaison(lam) == h);
	}
}

TEST_CASE("invariants computed from the type agree", "[biliaison]") {
	auto li = invariants_from_lambda(BiliaisonType{1, 2, 4, 6});
	CHECK(li.inv == invariants(HVector{1, 2, 3, 4, 2, 1}));
	CHECK(li.reg_from_lambda == 6);
	CHECK(li.reg_from_h == 6);

	li = invariants_from_lambda(BiliaisonType{2, 3});
	CHECK(li.inv.d == 5);
	CHECK(li.inv.pa == 2);
	CHECK(li.inv.s == 2);
	CHECK(li.inv.t == 3);
	CHECK(li.inv.e == 0);
	CHECK(li.inv.reg == 3);

	// a line
	li = invariants_from_lambda(BiliaisonType{1});
	CHECK(li.inv.d == 1);
	CHECK(li.inv.pa == 0);
	CHECK(li.reg_from_lambda == li.reg_from_h);
}

TEST_CASE("type entry constraints", "[biliaison]") {
	CHECK_THROWS_AS(BiliaisonType({0, 1}), std::invalid_argument);
	CHECK_THROWS_AS(BiliaisonType({3, 2}), std::invalid_argument);
	CHECK_NOTHROW(BiliaisonType({2, 2, 5}));  // nondecreasing is storable, just not realizable
}

TEST_CASE("gaps", "[biliaison]") {
	CHECK(find_gaps(BiliaisonType{1, 2, 8}) == std::vector<int>{2});
	CHECK(find_gaps(BiliaisonType{1, 2, 4, 6}).empty());
	CHECK(find_gaps(BiliaisonType{1, 5}) == std::vector<int>{1});
	CHECK(find_gaps(BiliaisonType{1, 4, 9}) == std::vector<int>{1, 2});
}

TEST_CASE("gap split", "[biliaison]") {
	auto sp = davis_split(BiliaisonType{1, 2, 8}, 2);
	CHECK(sp.lower == BiliaisonType{1, 2});
	CHECK(sp.upper == BiliaisonType{8});
	CHECK(sp.count == 3);

	sp = davis_split(BiliaisonType{1, 5}, 1);
	CHECK(sp.lower == BiliaisonType{1});
	CHECK(sp.upper == BiliaisonType{5});
	CHECK(sp.count == 1);

	CHECK_THROWS_AS(davis_split(BiliaisonType{1, 2, 8}, 1), std::invalid_argument);  // not a gap
	CHECK_THROWS_AS(davis_split(BiliaisonType{1, 2, 8}, 0), std::invalid_argument);
	CHECK_THROWS_AS(davis_split(BiliaisonType{1, 2, 8}, 3), std::invalid_argument);
	CHECK_THROWS_AS(davis_split(BiliaisonType{2, 2, 8}, 2), std::invalid_argument);
}

TEST_CASE("adding a hyperplane section", "[hyperplane]") {
	CHECK(add_hyperplane(HVector{1, 2}, 3) == HVector{1, 2, 3});
	CHECK(add_hyperplane(HVector{1}, 1) == HVector{1, 1});
	CHECK(add_hyperplane(HVector{1, 2, 3, 2, 1}, 5) == HVector{1, 2, 3, 4, 3, 1});
	CHECK(add_hyperplane(HVector{1, 2, 3, 4, 3, 1}, 5) == HVector{1, 2, 3, 4, 5, 3, 1});
	CHECK(degree(add_hyperplane(HVector{1, 2, 2}, 4)) == degree(HVector{1, 2, 2}) + 4);
	CHECK_THROWS_AS(add_hyperplane(HVector{1}, 0), std::invalid_argument);
	CHECK_THROWS_AS(add_hyperplane(HVector{1, 3}, 2), std::invalid_argument);
	CHECK_THROWS_AS(add_hyperplane(HVector{1, 2, 2}, 1), std::invalid_argument);  // result not admissible
}

TEST_CASE("removing a hyperplane section", "[hyperplane]") {
	CHECK(subtract_hyperplane(HVector{1, 2, 3, 4, 4}, 4) == HVector{1, 2, 3, 4});
	CHECK(subtract_hyperplane(HVector{1, 2, 3}, 3) == HVector{1, 2});
	CHECK(subtract_hyperplane(HVector{1, 2, 3, 2, 2, 1}, 5) == HVector{1, 2, 1, 1, 1});
	CHECK(subtract_hyperplane(HVector{1, 2, 1, 1, 1}, 5) == HVector{1});
	CHECK_THROWS_WITH(subtract_hyperplane(HVector{1, 2, 2, 1}, 5),
	                  Catch::Matchers::ContainsSubstring("negative entry at index 3"));
	CHECK_THROWS_AS(subtract_hyperplane(HVector{1}, 1), std::invalid_argument);  // nothing remains
}

TEST_CASE("hyperplane operations invert each other", "[hyperplane]") {
	for (auto h : {HVector{1, 2, 2, 1}, HVector{1, 1, 1}, HVector{1, 2, 3, 4, 2, 1}})
		for (int k = 1; k <= 6; ++k) {
			HVector up;
			try {
				up = add_hyperplane(h, k);
			} catch (const std::invalid_argument&) {
				continue;
			}
			CHECK(subtract_hyperplane(up, k) == h);
		}
}

TEST_CASE("intersection count from genus bookkeeping", "[hvector]") {
	CHECK(intersection_from_union(23, 0, 21) == 3);
	CHECK(intersection_from_union(19, 3, 3) == 14);
	CHECK(intersection_from_union(0, 0, 0) == 1);
}

TEST_CASE("h-vector parsing", "[format]") {
	CHECK(parse_hvector("1,2,3,2,1") == HVector{1, 2, 3, 2, 1});
	CHECK(parse_hvector(" 1 , 2 ") == HVector{1, 2});
	CHECK(parse_hvector("1,2,0") == HVector{1, 2});
	CHECK_THROWS_AS(parse_hvector(""), parse_error);
	CHECK_THROWS_AS(parse_hvector("1,,2"), parse_error);
	CHECK_THROWS_AS(parse_hvector("1,2,"), parse_error);
	CHECK_THROWS_AS(parse_hvector("a"), parse_error);
	CHECK_THROWS_AS(parse_hvector("1,02"), parse_error);
	CHECK_THROWS_AS(parse_hvector("-1,2"), parse_error);
	CHECK_THROWS_AS(parse_hvector("1,9999999999"), parse_error);
	CHECK_THROWS_AS(parse_hvector("1 2"), parse_error);
}

TEST_CASE("biliaison type parsing", "[format]") {
	CHECK(parse_lambda("{1,2,4}") == BiliaisonType{1, 2, 4});
	CHECK(parse_lambda("1,2,4") == BiliaisonType{1, 2, 4});
	CHECK(parse_lambda(" {1} ") == BiliaisonType{1});
	CHECK_THROWS_AS(parse_lambda("{1,2"), parse_error);
	CHECK_THROWS_AS(parse_lambda("{}"), parse_error);
	CHECK_THROWS_AS(parse_lambda("{3,2}"), parse_error);
	CHECK_THROWS_AS(parse_lambda(""), parse_error);
}

TEST_CASE("round trip through text", "[format]") {
	CHECK(format_hvector(HVector{1, 2, 3, 2, 1}) == "1,2,3,2,1");
	CHECK(format_lambda(BiliaisonType{1, 2, 4, 6}) == "{1,2,4,6}");
	CHECK(parse_hvector(format_hvector(HVector{1, 2, 2, 2, 1})) == HVector{1, 2, 2, 2, 1});
	CHECK(parse_lambda(format_lambda(BiliaisonType{2, 5, 9})) == BiliaisonType{2, 5, 9});
}
