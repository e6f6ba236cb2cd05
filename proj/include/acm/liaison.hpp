#pragma once

#include <string>

#include "acm/hvector.hpp"

namespace acm {

// The h-vector of a complete intersection of surfaces of degrees m <= n:
// a trapezoid rising 1..m, flat at m through index n-1, then falling to 1.
inline HVector ci_hvector(int m, int n) {
	if (m < 1 || n < m) throw std::invalid_argument("complete intersection needs 1 <= m <= n");
	std::vector<int> c(static_cast<size_t>(m + n - 1), 0);
	for (int l = 0; l <= m + n - 2; ++l) {
		int v = l + 1;
		if (l >= m - 1) v = m;
		if (l >= n - 1) v = m + n - 1 - l;
		c[static_cast<size_t>(l)] = v;
	}
	return HVector(std::move(c));
}

struct LinkageFrame {
	int m = 1;
	int n = 1;
	HVector h_ci;
};

inline LinkageFrame linkage_frame(int m, int n) { return LinkageFrame{m, n, ci_hvector(m, n)}; }

// Residual h-vector under linkage by an (m,n) complete intersection:
// h2(l) = h_ci(l) - h1(m+n-2-l). An involution where defined.
inline HVector link(const HVector& h1, int m, int n) {
	if (!is_c2_admissible(h1)) throw std::invalid_argument("h-vector is not admissible");
	HVector frame = ci_hvector(m, n);
	if (h1.b() > m + n - 2)
		throw std::invalid_argument("linkage impossible: entry at index " + std::to_string(h1.b()) +
		                            " lies outside the frame");
	std::vector<int> c(static_cast<size_t>(m + n - 1), 0);
	for (int l = 0; l <= m + n - 2; ++l) {
		int v = frame.at(l) - h1.at(m + n - 2 - l);
		if (v < 0)
			throw std::invalid_argument("linkage impossible: negative entry at index " +
			                            std::to_string(l));
		c[static_cast<size_t>(l)] = v;
	}
	HVector out(std::move(c));
	if (out.empty() || !is_c2_admissible(out)) {
		int bad = 0;
		if (!out.empty()) {
			int s = 1;
			if (out.at(0) == 1) {
				while (s <= out.b() && out.at(s) == s + 1) ++s;
				bad = s - 1;
				for (int l = s - 1; l < out.b(); ++l)
					if (out.at(l + 1) > out.at(l)) {
						bad = l + 1;
						break;
					}
			}
		}
		throw std::invalid_argument("linkage impossible: residual not admissible at index " +
		                            std::to_string(bad));
	}
	return out;
}

// Numeric consequences of a valid linkage with m equal to the initial degree
// of the first curve; clause (b) applies only when the residual drops to a
// smaller initial degree.
struct LinkClauseReport {
	bool residual_fits = false;       // b2 <= n - 2
	bool clause_b_applies = false;    // s2 < s1
	bool n_within_reach = true;       // n <= b1 + 1
	bool top_index_drops = true;      // b2 < b1
	bool generated_by_frame = true;   // t2 <= m

	bool pass() const {
		return residual_fits && (!clause_b_applies || (n_within_reach && top_index_drops && generated_by_frame));
	}
};

inline LinkClauseReport check_linkage_bounds(const HVector& h1, const HVector& h2, int m, int n) {
	if (link(h1, m, n) != h2) throw std::invalid_argument("h2 is not the residual of h1 in this frame");
	auto i1 = invariants(h1), i2 = invariants(h2);
	if (m != i1.s) throw std::invalid_argument("frame degree m must equal the initial degree of h1");
	LinkClauseReport r;
	r.residual_fits = i2.b <= n - 2;
	r.clause_b_applies = i2.s < i1.s;
	if (r.clause_b_applies) {
		r.n_within_reach = n <= i1.b + 1;
		r.top_index_drops = i2.b < i1.b;
		r.generated_by_frame = i2.t <= m;
	}
	return r;
}

// Largest intersection of a curve with h-vector h1 and a residual curve in an
// (m,n) frame. Only meaningful when m equals the initial degree of h1: for
// larger m the complete intersection no longer maximizes the count.
inline long long linked_intersection(const HVector& h1, int m, int n) {
	auto i1 = invariants(h1);
	if (m != i1.s)
		throw std::invalid_argument("maximal linked intersection requires m equal to the initial degree " +
		                            std::to_string(i1.s));
	HVector h2 = link(h1, m, n);
	HVector frame = ci_hvector(m, n);
	return intersection_from_union(arithmetic_genus(frame), i1.pa, arithmetic_genus(h2));
}

// Maximal intersection of maximal curves of initial degrees s <= t lying on
// a flag of surfaces: binom(s+1,2) t - binom(s+1,3).
inline long long ladder_intersection(int s, int t) {
	if (s < 1 || t < s) throw std::invalid_argument("ladder needs 1 <= s <= t");
	if (t > 1000000) throw std::invalid_argument("ladder parameter too large");
	long long s1 = s + 1;
	long long pairs = s1 * s / 2;
	long long triples = s1 * s * (s - 1) / 6;
	return pairs * t - triples;
}

// The union realizing the ladder count: h-vector 1,...,t,s,s-1,...,1,
// built from the (s,s+1) trapezoid by one biliaison per degree step.
inline HVector ladder_union(int s, int t) {
	if (s < 1 || t < s) throw std::invalid_argument("ladder needs 1 <= s <= t");
	HVector u = ci_hvector(s, s + 1);
	for (int tau = s + 1; tau <= t; ++tau) u = add_hyperplane(u, tau);
	return u;
}

}  // namespace acm
