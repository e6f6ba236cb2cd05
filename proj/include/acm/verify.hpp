#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "acm/bounds.hpp"
#include "acm/format.hpp"
#include "acm/hvector.hpp"
#include "acm/liaison.hpp"
#include "acm/oracle.hpp"
#include "acm/ordinary.hpp"

namespace acm {

struct GridLimits {
	int dmax = 40;   // degree ceiling for enumerative grids (<= 0 disables them)
	int smax = 6;    // initial-degree ceiling
	int mnmax = 48;  // ceiling on m*n for linkage frames
};

struct VerificationFailure {
	std::string check;
	std::string input;
	std::string expected;
	std::string got;
};

struct VerificationReport {
	long long checks_run = 0;
	std::vector<VerificationFailure> failures;
	bool pass() const { return failures.empty(); }
};

using GmaxFn = std::function<GmaxResult(long long, int)>;

// Cross-checks the closed-form modules against the exhaustive enumeration
// and a list of pinned reference values. The pinned block always runs; the
// grids scale with the limits. A replacement gmax can be injected to test
// the harness itself.
inline VerificationReport verify_all(const GridLimits& lim = {}, const GmaxFn& gmax_fn = {}) {
	VerificationReport rep;
	GmaxFn G = gmax_fn ? gmax_fn : [](long long d, int s) { return gmax(d, s); };

	auto fail = [&](const std::string& check, const std::string& input, const std::string& expected,
	                const std::string& got) {
		rep.failures.push_back(VerificationFailure{check, input, expected, got});
	};
	auto expect_ll = [&](const std::string& check, const std::string& input, long long expected,
	                     long long got) {
		++rep.checks_run;
		if (expected != got) fail(check, input, std::to_string(expected), std::to_string(got));
	};
	auto expect_h = [&](const std::string& check, const std::string& input, const std::string& expected,
	                    const HVector& got) {
		++rep.checks_run;
		if (expected != format_hvector(got)) fail(check, input, expected, format_hvector(got));
	};
	auto expect_true = [&](const std::string& check, const std::string& input, bool got) {
		++rep.checks_run;
		if (!got) fail(check, input, "true", "false");
	};

	// ---- pinned reference values (always run) ----

	{
		struct Pin {
			long long d;
			int s;
			long long genus;  // -1 = infeasible
		};
		for (const Pin& p : {Pin{11, 2, 20}, Pin{12, 3, 19}, Pin{7, 4, -1}, Pin{13, 4, 21},
		                     Pin{19, 5, 43}, Pin{21, 5, 54}, Pin{2, 1, 0}, Pin{18, 5, 39},
		                     Pin{11, 4, 14}, Pin{23, 5, 63}}) {
			std::string in = "d=" + std::to_string(p.d) + " s=" + std::to_string(p.s);
			GmaxResult g = G(p.d, p.s);
			expect_ll("gmax", in, p.genus, g.feasible ? g.genus : -1);
			if (g.feasible) {
				expect_true("gmax witness valid", in,
				            is_decreasing_type(g.witness) && degree(g.witness) == p.d &&
				                initial_degree(g.witness) == p.s &&
				                arithmetic_genus(g.witness) == g.genus);
			}
		}
		expect_h("gmax witness", "d=11 s=2", "1,2,2,2,2,2", G(11, 2).witness);
		expect_h("gmax witness", "d=13 s=4", "1,2,3,4,2,1", G(13, 4).witness);
	}

	expect_ll("invariants degree", "h=1,2,3,4,2,1", 13, invariants(HVector{1, 2, 3, 4, 2, 1}).d);
	expect_ll("invariants genus", "h=1,2,3,4,2,1", 21, invariants(HVector{1, 2, 3, 4, 2, 1}).pa);
	expect_ll("invariants t", "h=1,2,2,1", 3, invariants(HVector{1, 2, 2, 1}).t);
	expect_ll("invariants regularity", "h=1", 1, invariants(HVector{1}).reg);
	expect_true("dual type encoding", "h=1,2,3,4,2,1",
	            format_lambda(to_biliaison(HVector{1, 2, 3, 4, 2, 1})) == "{1,2,4,6}");
	expect_h("type realization", "lam={1,2,8}", "1,2,3,1,1,1,1,1", from_biliaison(BiliaisonType{1, 2, 8}));
	expect_ll("gap split count", "lam={1,2,8} t=2", 3, davis_split(BiliaisonType{1, 2, 8}, 2).count);

	{
		// merged curve pair on a quadric plus a plane curve: three forced points
		auto merged = from_biliaison(BiliaisonType{1, 2, 8});
		expect_ll("union pipeline points", "lam={1,2}+{8}", 3,
		          intersection_from_union(arithmetic_genus(merged), 0, 21));
		auto r = main_bound(HVector{1, 2}, HVector{1, 1, 1, 1, 1, 1, 1, 1});
		expect_ll("main bound", "h1=1,2 h2=1^8", 3, r.bound);
		expect_true("main bound rule", "h1=1,2 h2=1^8", r.rule == "Main-b");
		auto r2 = main_bound(HVector{1, 2, 3}, HVector{1, 2, 3});
		expect_ll("main bound", "h1=1,2,3 h2=1,2,3", 14, r2.bound);
		expect_true("main bound rule", "h1=1,2,3 h2=1,2,3", r2.rule == "Main-a");
	}

	{
		auto c1 = ci_bound(2, 2, 2, 3);
		expect_ll("ci bound", "(2,2)x(2,3)", 12, c1.bound);
		expect_true("ci rule", "(2,2)x(2,3)", c1.rule == "CI-a");
		auto c2 = ci_bound(2, 5, 3, 3);
		expect_ll("ci bound", "(2,5)x(3,3)", 18, c2.bound);
		expect_true("ci rule", "(2,5)x(3,3)", c2.rule == "CI-b");
		auto c3 = ci_bound(1, 3, 2, 4);
		expect_ll("ci bound", "(1,3)x(2,4)", 6, c3.bound);
		expect_true("ci rule", "(1,3)x(2,4)", c3.rule == "CI-c");
		auto c4 = ci_bound(1, 1, 4, 7);
		expect_ll("ci bound", "(1,1)x(4,7)", 7, c4.bound);
		expect_true("ci rule", "(1,1)x(4,7)", c4.rule == "CI-d");
	}

	{
		auto r1 = refined_bound(ci_hvector(2, 5), ci_hvector(3, 3));
		expect_ll("refined bound", "(2,5)x(3,3)", 43, r1.bound);
		expect_h("refined witness", "(2,5)x(3,3)", "1,2,3,4,5,3,1", *r1.witness);
		auto r2 = refined_bound(ci_hvector(2, 6), ci_hvector(3, 3));
		expect_ll("refined bound", "(2,6)x(3,3)", 54, r2.bound);
	}

	expect_h("linkage residual", "h=1,2,3,4,4 frame=(4,5)", "1,2,3", link(HVector{1, 2, 3, 4, 4}, 4, 5));
	expect_ll("linked intersection", "h=1,2 frame=(2,3)", 5, linked_intersection(HVector{1, 2}, 2, 3));
	expect_ll("linked intersection", "h=1,2,3 frame=(3,4)", 14, linked_intersection(HVector{1, 2, 3}, 3, 4));
	expect_ll("ladder count", "s=2 t=3", 8, ladder_intersection(2, 3));
	expect_ll("ladder count", "s=1 t=1", 1, ladder_intersection(1, 1));

	{
		expect_h("ordinary union", "s=1 a=1 b=1", "1,1,1,1", union_ordinary(1, 1, 1, false).h3);
		expect_h("ordinary union restricted", "s=1 a=1 b=1", "1,2,1", union_ordinary(1, 1, 1, true).h3);
		expect_h("ordinary union", "s=4 a=2 b=3", "1,2,3,4,4,4,4,2,1", union_ordinary(4, 2, 3, false).h3);
		expect_ll("ordinary points", "s=1 a=1 b=1 restricted", 2, ordinary_intersection(1, 1, 1, true));
		expect_ll("ordinary points", "s=1 a=1 b=1", 4, ordinary_intersection(1, 1, 1, false));
		expect_ll("ordinary points", "s=2 a=0 b=0", 5, ordinary_intersection(2, 0, 0, false));
	}

	{
		auto u = union_ordinary_general(HVector{1}, HVector{1, 2, 3, 4, 4});
		expect_h("general union", "h1=1 h2=1,2,3,4,4", "1,2,3,4,4,1", u.h3);
		expect_true("general union certified", "h1=1 h2=1,2,3,4,4", u.certified);
		auto v = union_ordinary_general(HVector{1, 2, 1}, HVector{1, 2, 3, 4, 5, 4});
		expect_h("general union", "h1=1,2,1 h2=1,2,3,4,5,4", "1,2,3,4,5,4,3,1", v.h3);
		expect_true("general union restricted base", "h1=1,2,1 h2=1,2,3,4,5,4", v.restricted);
	}

	{
		auto a = union_on_surface(HVector{1, 2, 3, 4}, HVector{1, 2, 3, 4, 3, 2, 1}, 4);
		expect_h("surface union", "m=4", "1,2,3,4,4,4,4,4", a.h3);
		expect_true("surface union uncertified", "m=4", !a.certified);
		expect_ll("surface union points", "m=4", 40,
		          intersection_from_union(arithmetic_genus(a.h3), 11, 33));
		auto b = union_on_surface(HVector{1, 2, 3, 4}, HVector{1, 2, 3, 4, 3, 2, 1}, 5);
		expect_h("surface union", "m=5", "1,2,3,4,5,5,5,1", b.h3);
		auto c = union_on_surface(HVector{1, 2, 3, 4}, HVector{1, 2, 3, 4, 3, 2, 1}, 6);
		expect_h("surface union", "m=6", "1,2,3,4,5,6,4,1", c.h3);
		auto q = union_on_surface(HVector{1, 2, 1}, HVector{1, 2, 2}, 2);
		expect_h("surface union", "m=2", "1,2,2,2,2", q.h3);
		expect_ll("surface union points", "m=2", 10,
		          intersection_from_union(arithmetic_genus(q.h3), 1, 2));
	}

	{
		auto es = enumerate_all(EnumSpec{5, 2, true});
		expect_true("enumeration", "d=5 s=2 decreasing",
		            es.size() == 1 && format_hvector(es[0]) == "1,2,2");
		auto e2 = enumerate_all(EnumSpec{12, 3, true});
		expect_true("enumeration", "d=12 s=3 decreasing",
		            e2.size() == 2 && format_hvector(e2[0]) == "1,2,3,3,2,1" &&
		                format_hvector(e2[1]) == "1,2,3,3,3");
	}

	if (lim.dmax <= 0) return rep;

	// ---- grids ----

	// closed-form maximal genus against the exhaustive oracle
	for (int s = 1; s <= lim.smax; ++s) {
		for (long long d = static_cast<long long>(s) * (s + 1) / 2; d <= lim.dmax; ++d) {
			std::string in = "d=" + std::to_string(d) + " s=" + std::to_string(s);
			GmaxResult g = G(d, s);
			auto o = gmax_oracle(d, s);
			expect_true("gmax feasibility", in, g.feasible == o.has_value());
			if (g.feasible && o) {
				expect_ll("gmax", in, *o, g.genus);
				expect_true("gmax witness valid", in,
				            is_decreasing_type(g.witness) && degree(g.witness) == d &&
				                initial_degree(g.witness) == s && arithmetic_genus(g.witness) == g.genus);
			}
			// weaker position forces no smaller maximal genus
			if (s > 1) {
				GmaxResult prev = G(d, s - 1);
				if (g.feasible && prev.feasible)
					expect_true("gmax monotone in s", in, prev.genus >= g.genus);
			}
		}
	}

	// enumeration matches the residue count of strictly-decreasing tails
	for (int s = 1; s <= std::min(lim.smax, 6); ++s) {
		for (long long d = static_cast<long long>(s) * (s + 1) / 2; d <= std::min(lim.dmax, 40); ++d) {
			long long rest = d - static_cast<long long>(s) * (s + 1) / 2;
			long long expected = 0;
			for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
				long long sum = 0;
				for (int v = 1; v < s; ++v)
					if (mask & (1u << (v - 1))) sum += v;
				if (sum <= rest && (rest - sum) % s == 0) ++expected;
			}
			auto hs = enumerate_all(EnumSpec{d, s, true});
			std::string in = "d=" + std::to_string(d) + " s=" + std::to_string(s);
			long long dec = 0;
			for (const auto& h : hs) {
				++dec;
				expect_true("enumerated h admissible", in + " h=" + format_hvector(h),
				            is_c2_admissible(h) && degree(h) == d && initial_degree(h) == s &&
				                is_decreasing_type(h));
			}
			expect_ll("enumeration count", in, expected, dec);
		}
	}

	// duality: decreasing type <=> no gaps in the biliaison type; round trips
	for (int s = 1; s <= lim.smax; ++s) {
		for (long long d = static_cast<long long>(s) * (s + 1) / 2; d <= std::min(lim.dmax, 40); ++d) {
			enumerate(EnumSpec{d, s, false}, [&](const HVector& h) {
				std::string in = "h=" + format_hvector(h);
				BiliaisonType lam = to_biliaison(h);
				expect_true("type strictly increasing", in, lam.strictly_increasing());
				expect_true("type round trip", in, from_biliaison(lam) == h);
				expect_true("gap duality", in, is_decreasing_type(h) == find_gaps(lam).empty());
				auto li = invariants_from_lambda(lam);
				expect_true("dual invariants agree", in, li.inv == invariants(h));
				expect_true("both regularity readings agree", in, li.reg_from_lambda == li.reg_from_h);
			});
		}
	}

	// hyperplane arithmetic round trips
	for (int s = 1; s <= lim.smax; ++s) {
		for (long long d = static_cast<long long>(s) * (s + 1) / 2; d <= std::min(lim.dmax, 20); ++d) {
			enumerate(EnumSpec{d, s, false}, [&](const HVector& h) {
				for (int k = 1; k <= 12; ++k) {
					std::string in = "h=" + format_hvector(h) + " k=" + std::to_string(k);
					HVector up;
					try {
						up = add_hyperplane(h, k);
					} catch (const std::invalid_argument&) {
						continue;
					}
					expect_true("hyperplane degree step", in, degree(up) == d + k);
					expect_true("hyperplane round trip", in, subtract_hyperplane(up, k) == h);
				}
			});
		}
	}

	// linkage: involution, degree additivity, clause report
	for (int s = 1; s <= lim.smax; ++s) {
		for (long long d = static_cast<long long>(s) * (s + 1) / 2; d <= std::min(lim.dmax, 30); ++d) {
			enumerate(EnumSpec{d, s, true}, [&](const HVector& h) {
				int m = initial_degree(h);
				for (int n = m; static_cast<long long>(m) * n <= lim.mnmax; ++n) {
					std::string in = "h=" + format_hvector(h) + " frame=(" + std::to_string(m) + "," +
					                 std::to_string(n) + ")";
					HVector h2;
					try {
						h2 = link(h, m, n);
					} catch (const std::invalid_argument&) {
						continue;
					}
					expect_true("linkage involution", in, link(h2, m, n) == h);
					expect_true("linkage degree additivity", in,
					            degree(h) + degree(h2) == static_cast<long long>(m) * n);
					expect_true("linkage clause report", in, check_linkage_bounds(h, h2, m, n).pass());
					long long pts = linked_intersection(h, m, n);
					expect_true("linked intersection sign", in, pts >= 1);
				}
			});
		}
	}

	// ladder formula against the explicit union chain
	for (int s = 1; s <= 8; ++s) {
		for (int t = s; t <= 8; ++t) {
			std::string in = "s=" + std::to_string(s) + " t=" + std::to_string(t);
			HVector u = ladder_union(s, t);
			std::vector<int> rs, rt;
			for (int i = 1; i <= s; ++i) rs.push_back(i);
			for (int i = 1; i <= t; ++i) rt.push_back(i);
			long long chain = intersection_from_union(
			    arithmetic_genus(u), arithmetic_genus(HVector(rs)), arithmetic_genus(HVector(rt)));
			expect_ll("ladder chain", in, chain, ladder_intersection(s, t));
		}
	}

	// ordinary unions: degree identity, decreasing type, symmetry, maximality
	for (int s = 1; s <= std::min(lim.smax + 1, 7); ++s) {
		for (int a = 0; a <= s; ++a) {
			for (int b = a; b <= s; ++b) {
				std::string in = "s=" + std::to_string(s) + " a=" + std::to_string(a) +
				                 " b=" + std::to_string(b);
				long long d3 = 1LL * s * s + s + a + b;
				for (bool restricted : {false, true}) {
					auto u = union_ordinary(s, a, b, restricted);
					auto v = union_ordinary(s, b, a, restricted);
					std::string rin = in + (restricted ? " restricted" : "");
					expect_true("ordinary union symmetry", rin, u.h3 == v.h3);
					expect_true("ordinary union degree", rin, degree(u.h3) == d3);
					expect_true("ordinary union decreasing", rin, is_decreasing_type(u.h3));
					long long pts = ordinary_intersection(s, a, b, restricted);
					auto mb = main_bound(ordinary_h(s, a), ordinary_h(s, b));
					expect_true("ordinary points within bound", rin, pts >= 1 && pts <= mb.bound);
				}
				expect_ll("ordinary union maximal", in, G(d3, s).genus,
				          arithmetic_genus(union_ordinary(s, a, b, false).h3));
				auto r = union_ordinary(s, a, b, true);
				if (initial_degree(r.h3) == s + 1)
					expect_ll("ordinary union restricted maximal", in, G(d3, s + 1).genus,
					          arithmetic_genus(r.h3));
			}
		}
	}

	// the CI pair bound attains its value through the maximal-genus chain
	for (int s = 1; s <= 6; ++s) {
		for (int t1 = s; t1 <= 6; ++t1) {
			for (int t2 = t1; t2 <= 6; ++t2) {
				std::string in = "(" + std::to_string(s) + "," + std::to_string(t1) + ")x(" +
				                 std::to_string(s) + "," + std::to_string(t2) + ")";
				long long lhs = ci_bound(s, t1, s, t2).bound;
				long long viaGenus = intersection_from_union(
				    G(1LL * s * (t1 + t2), s).genus, arithmetic_genus(ci_hvector(s, t1)),
				    arithmetic_genus(ci_hvector(s, t2)));
				expect_ll("ci bound via genus chain", in, viaGenus, lhs);
			}
		}
	}

	return rep;
}

}  // namespace acm
