#include <catch2/catch_amalgamated.hpp>

#include "acm/liaison.hpp"
#include "acm/oracle.hpp"

using namespace acm;

TEST_CASE("complete intersection h-vectors", "[ci]") {
	CHECK(ci_hvector(1, 1) == HVector{1});
	CHECK(ci_hvector(1, 2) == HVector{1, 1});
	CHECK(ci_hvector(2, 3) == HVector{1, 2, 2, 1});
	CHECK(ci_hvector(2, 5) == HVector{1, 2, 2, 2, 2, 1});
	CHECK(ci_hvector(3, 3) == HVector{1, 2, 3, 2, 1});
	CHECK(ci_hvector(4, 5) == HVector{1, 2, 3, 4, 4, 3, 2, 1});
	CHECK(degree(ci_hvector(7, 9)) == 63);
	CHECK(invariants(ci_hvector(2, 2)).pa == 1);  // elliptic quartic
	CHECK_THROWS_AS(ci_hvector(0, 1), std::invalid_argument);
	CHECK_THROWS_AS(ci_hvector(3, 2), std::invalid_argument);
}

TEST_CASE("residual of a curve in a frame", "[link]") {
	CHECK(link(HVector{1, 2}, 2, 3) == HVector{1, 2});  // self-residual
	CHECK(link(HVector{1, 2, 3, 4, 4}, 4, 5) == HVector{1, 2, 3});
	CHECK(link(HVector{1, 2, 3}, 3, 4) == HVector{1, 2, 3});
	CHECK(link(HVector{1, 2, 1}, 3, 3) == HVector{1, 2, 2});
	CHECK(link(HVector{1}, 1, 2) == HVector{1});  // line linked to a line in a conic
}

TEST_CASE("linkage is an involution and degrees add up", "[link]") {
	EnumSpec spec;
	for (spec.s = 1; spec.s <= 4; ++spec.s)
		for (spec.d = 1; spec.d <= 24; ++spec.d)
			for (const auto& h : enumerate_all(spec)) {
				int m = initial_degree(h);
				for (int n = m; m * n <= 42; ++n) {
					HVector h2;
					try {
						h2 = link(h, m, n);
					} catch (const std::invalid_argument&) {
						continue;
					}
					CHECK(link(h2, m, n) == h);
					CHECK(degree(h) + degree(h2) == static_cast<long long>(m) * n);
				}
			}
}

TEST_CASE("linkage failure modes", "[link]") {
	CHECK_THROWS_WITH(link(HVector{1, 2, 2, 2, 2}, 2, 3),
	                  Catch::Matchers::ContainsSubstring("outside the frame"));
	CHECK_THROWS_WITH(link(HVector{1, 2, 2, 1}, 2, 3),
	                  Catch::Matchers::ContainsSubstring("residual not admissible"));
	// degree too large for the frame even though b fits
	CHECK_THROWS_WITH(link(HVector{1, 2, 3, 3}, 2, 4),
	                  Catch::Matchers::ContainsSubstring("negative entry"));
	CHECK_THROWS_AS(link(HVector{1, 3}, 2, 3), std::invalid_argument);
}

TEST_CASE("residual degree bounds", "[link]") {
	auto r = check_linkage_bounds(HVector{1, 2, 3, 4, 4}, HVector{1, 2, 3}, 4, 5);
	CHECK(r.residual_fits);
	CHECK(r.clause_b_applies);
	CHECK(r.n_within_reach);
	CHECK(r.top_index_drops);
	CHECK(r.generated_by_frame);
	CHECK(r.pass());

	// self-linked twisted cubic: clause (b) is vacuous
	r = check_linkage_bounds(HVector{1, 2, 3}, HVector{1, 2, 3}, 3, 4);
	CHECK(r.residual_fits);
	CHECK_FALSE(r.clause_b_applies);
	CHECK(r.pass());

	CHECK_THROWS_AS(check_linkage_bounds(HVector{1, 2, 3}, HVector{1, 2}, 3, 4),
	                std::invalid_argument);
	CHECK_THROWS_AS(check_linkage_bounds(HVector{1, 2, 1}, link(HVector{1, 2, 1}, 3, 3), 3, 3),
	                std::invalid_argument);  // m exceeds the initial degree
}

TEST_CASE("bounds hold for every linkage of a decreasing-type curve", "[link]") {
	EnumSpec spec;
	spec.decreasing_only = true;  // the clause bounds need decreasing type: 1,2,1,1 in a
	                              // (2,4) frame links to 1,1,1, generated only in degree 3 > m
	for (spec.s = 1; spec.s <= 4; ++spec.s)
		for (spec.d = 1; spec.d <= 24; ++spec.d)
			for (const auto& h : enumerate_all(spec)) {
				int m = initial_degree(h);
				for (int n = m; m * n <= 42; ++n) {
					HVector h2;
					try {
						h2 = link(h, m, n);
					} catch (const std::invalid_argument&) {
						continue;
					}
					CHECK(check_linkage_bounds(h, h2, m, n).pass());
				}
			}
}

TEST_CASE("intersection of a curve with its residual", "[link]") {
	CHECK(linked_intersection(HVector{1, 2}, 2, 3) == 5);
	CHECK(linked_intersection(HVector{1}, 1, 2) == 1);
	CHECK(linked_intersection(HVector{1, 2, 3}, 3, 4) == 14);
	CHECK_THROWS_AS(linked_intersection(HVector{1, 2, 1}, 3, 3), std::invalid_argument);
}

TEST_CASE("residual intersections are at least one point", "[link]") {
	EnumSpec spec;
	for (spec.s = 1; spec.s <= 4; ++spec.s)
		for (spec.d = 1; spec.d <= 20; ++spec.d)
			for (const auto& h : enumerate_all(spec)) {
				int m = initial_degree(h);
				for (int n = m; m * n <= 36; ++n) {
					long long pts = 0;
					try {
						pts = linked_intersection(h, m, n);
					} catch (const std::invalid_argument&) {
						continue;  // no residual in this frame
					}
					CHECK(pts >= 1);
				}
			}
}

TEST_CASE("ladder intersection count", "[ladder]") {
	CHECK(ladder_intersection(1, 1) == 1);
	CHECK(ladder_intersection(2, 2) == 5);
	CHECK(ladder_intersection(2, 3) == 8);
	CHECK(ladder_intersection(3, 7) == 38);
	CHECK(ladder_intersection(4, 10) == 90);
	CHECK_THROWS_AS(ladder_intersection(0, 1), std::invalid_argument);
	CHECK_THROWS_AS(ladder_intersection(3, 2), std::invalid_argument);
	CHECK_THROWS_AS(ladder_intersection(2, 2000000), std::invalid_argument);
}

TEST_CASE("ladder union realizes the count", "[ladder]") {
	CHECK(ladder_union(2, 2) == HVector{1, 2, 2, 1});
	CHECK(ladder_union(2, 4) == HVector{1, 2, 3, 4, 2, 1});
	auto ramp = [](int k) {
		std::vector<int> c(static_cast<size_t>(k));
		for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i + 1;
		return HVector(std::move(c));
	};
	// the constituents are the ramp curves of initial degrees s and t
	for (int s = 1; s <= 6; ++s)
		for (int t = s; t <= 9; ++t) {
			HVector u = ladder_union(s, t);
			CHECK(initial_degree(u) == t);
			CHECK(degree(u) == degree(ramp(s)) + degree(ramp(t)));
			long long pts = intersection_from_union(arithmetic_genus(u), arithmetic_genus(ramp(s)),
			                                        arithmetic_genus(ramp(t)));
			CHECK(pts == ladder_intersection(s, t));
		}
}
