#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "acm/bounds.hpp"
#include "acm/hvector.hpp"

namespace acm {

// An ordinary curve: h-vector 1,2,...,s,a with 0 <= a <= s.
struct OrdinaryCurve {
	int s = 1;
	int a = 0;
};

inline HVector ordinary_h(int s, int a) {
	if (s < 1 || a < 0 || a > s) throw std::invalid_argument("ordinary curve needs s >= 1, 0 <= a <= s");
	std::vector<int> c;
	for (int i = 1; i <= s; ++i) c.push_back(i);
	c.push_back(a);
	return HVector(std::move(c));
}

inline std::optional<OrdinaryCurve> as_ordinary(const HVector& h) {
	if (!is_c2_admissible(h)) return std::nullopt;
	int s = initial_degree(h);
	int a = h.at(s);
	if (h == ordinary_h(s, a)) return OrdinaryCurve{s, a};
	return std::nullopt;
}

struct UnionConstruction {
	HVector h3;
	bool restricted = false;
	std::string case_tag;     // i, ii, iii
	int omitted_value = 0;    // entry deleted from the template, 0 if none
	bool certified = true;    // maximality confirmed by the maximal-genus check
	std::string note;
};

namespace detail {

inline std::string hv_str(const HVector& h) {
	std::ostringstream os;
	for (size_t i = 0; i < h.c.size(); ++i) os << (i ? "," : "") << h.c[i];
	return os.str();
}

// plateau + descending run with one entry equal to `hat` removed (if hat >= 1)
inline HVector assemble_union(int s, int plateau_value, int plateau_count, int desc_top, int hat) {
	std::vector<int> tail;
	for (int i = 0; i < plateau_count; ++i) tail.push_back(plateau_value);
	for (int v = desc_top; v >= 1; --v) tail.push_back(v);
	if (hat >= 1) {
		bool removed = false;
		std::vector<int> kept;
		for (int v : tail) {
			if (!removed && v == hat) {
				removed = true;
				continue;
			}
			kept.push_back(v);
		}
		if (!removed) throw std::logic_error("union template does not contain the entry to delete");
		tail = std::move(kept);
	}
	std::vector<int> c;
	for (int i = 1; i <= s; ++i) c.push_back(i);
	for (int v : tail) c.push_back(v);
	return HVector(std::move(c));
}

}  // namespace detail

// Maximal union of two ordinary curves 1..s,a and 1..s,b meeting in a finite
// scheme. The unrestricted variant maximizes over all unions; the restricted
// variant maximizes over unions with initial degree > s (s+1 except in the
// degenerate case below). Writing c = a+b, the template is the ramp, a
// plateau, and a descending run with one dictated entry deleted.
inline UnionConstruction union_ordinary(int s, int a, int b, bool restricted) {
	HVector h1 = ordinary_h(s, a);
	HVector h2 = ordinary_h(s, b);
	int c = a + b;
	UnionConstruction u;
	u.restricted = restricted;
	if (c == 0) {
		// both curves are maximal for their degree; one union shape serves both variants
		u.case_tag = "i";
		u.h3 = detail::assemble_union(s, s, 1, s - 1, 0);
	} else if (c <= s) {
		u.case_tag = "ii";
		if (!restricted) {
			u.omitted_value = s - c;
			u.h3 = detail::assemble_union(s, s, 2, s - 1, u.omitted_value);
		} else {
			u.omitted_value = s + 1 - c;
			u.h3 = detail::assemble_union(s, s + 1, 1, s, u.omitted_value);
		}
	} else {
		u.case_tag = "iii";
		if (!restricted) {
			u.omitted_value = 2 * s - c;
			u.h3 = detail::assemble_union(s, s, 3, s - 1, u.omitted_value);
		} else {
			u.omitted_value = 2 * s + 2 - c;
			u.h3 = detail::assemble_union(s, s + 1, 2, s, u.omitted_value);
		}
	}
	long long d3 = 1LL * s * s + s + c;
	if (degree(u.h3) != d3 || !is_c2_admissible(u.h3) || !is_decreasing_type(u.h3))
		throw std::logic_error("ordinary union template is malformed");
	if (!restricted && arithmetic_genus(u.h3) != gmax(d3, s).genus)
		throw std::logic_error("unrestricted ordinary union does not attain the maximal genus");
	u.note = "union of 1.." + std::to_string(s) + "," + std::to_string(a) + " and 1.." +
	         std::to_string(s) + "," + std::to_string(b);
	return u;
}

inline long long ordinary_intersection(int s, int a, int b, bool restricted) {
	UnionConstruction u = union_ordinary(s, a, b, restricted);
	return intersection_from_union(arithmetic_genus(u.h3), arithmetic_genus(ordinary_h(s, a)),
	                               arithmetic_genus(ordinary_h(s, b)));
}

namespace detail {

// certified iff the final union, or the last intermediate before it, attains
// the maximal genus for its own degree and initial degree
inline bool certify_chain(const std::vector<HVector>& chain) {
	if (chain.empty()) return false;
	auto attains = [](const HVector& h) {
		auto inv = invariants(h);
		return inv.pa == gmax(inv.d, inv.s).genus;
	};
	if (attains(chain.back())) return true;
	return chain.size() >= 2 && attains(chain[chain.size() - 2]);
}

inline bool side_condition(const HVector& u, int k) {
	auto inv = invariants(u);
	return k == inv.s || k >= inv.t;
}

struct ReplayResult {
	bool ok = false;
	HVector final;
	std::vector<HVector> chain;
	int failed_k = 0;
};

inline ReplayResult replay(HVector u, const std::vector<int>& ks_reversed) {
	ReplayResult r;
	r.chain.push_back(u);
	for (int k : ks_reversed) {
		if (!side_condition(u, k)) {
			r.failed_k = k;
			return r;
		}
		try {
			u = add_hyperplane(u, k);
		} catch (const std::invalid_argument&) {
			r.failed_k = k;
			return r;
		}
		r.chain.push_back(u);
	}
	r.ok = true;
	r.final = u;
	return r;
}

}  // namespace detail

// Maximal union of two ordinary curves of different initial degrees: reduce
// the larger one by hyperplane sections of its current initial degree until
// the degrees agree, take the maximal union there, and replay the sections.
// Each replay step needs the intermediate union to fit on an irreducible
// surface of the section's degree (k = s or k >= t); if the unrestricted
// base fails this, the restricted base is used instead.
inline UnionConstruction union_ordinary_general(const HVector& ha, const HVector& hb) {
	auto oa = as_ordinary(ha), ob = as_ordinary(hb);
	if (!oa || !ob)
		throw std::invalid_argument("general ordinary union requires ordinary h-vectors (1..s,a)");
	OrdinaryCurve c1 = *oa, c2 = *ob;
	if (c1.s > c2.s) std::swap(c1, c2);

	std::vector<int> peeled;
	HVector cur = ordinary_h(c2.s, c2.a);
	while (initial_degree(cur) > c1.s) {
		int k = initial_degree(cur);
		cur = subtract_hyperplane(cur, k);
		if (!as_ordinary(cur))
			throw std::logic_error("reduction of an ordinary curve stopped being ordinary");
		peeled.push_back(k);
	}
	std::vector<int> replay_ks(peeled.rbegin(), peeled.rend());
	OrdinaryCurve reduced = *as_ordinary(cur);

	auto attempt = [&](bool restricted) {
		UnionConstruction base = union_ordinary(c1.s, c1.a, reduced.a, restricted);
		auto rep = detail::replay(base.h3, replay_ks);
		return std::make_pair(base, rep);
	};

	auto [base, rep] = attempt(false);
	bool switched = false;
	if (!rep.ok && !replay_ks.empty()) {
		switched = true;
		std::tie(base, rep) = attempt(true);
	}
	if (!rep.ok) {
		throw std::invalid_argument("reduction failed: no surface of degree " +
		                            std::to_string(rep.failed_k) +
		                            " can carry the intermediate union");
	}

	UnionConstruction u;
	u.h3 = rep.final;
	u.restricted = base.restricted;
	u.case_tag = base.case_tag;
	u.omitted_value = base.omitted_value;
	u.certified = detail::certify_chain(rep.chain);
	std::ostringstream note;
	note << "base union " << detail::hv_str(base.h3) << (base.restricted ? " (restricted)" : "");
	if (switched) note << ", after the unrestricted base failed the surface condition";
	if (!replay_ks.empty()) {
		note << "; sections re-added:";
		for (int k : replay_ks) note << " " << k;
	}
	u.note = note.str();
	return u;
}

// Maximal union of two curves lying on a surface of degree m (each must
// satisfy m = s or m >= t). The second curve is reduced by degree-m sections
// until nothing (a plane section pattern dissolves entirely) or until the
// reduction stops, the base union is formed, and the sections are replayed.
inline UnionConstruction union_on_surface(const HVector& h1, const HVector& h2, int m) {
	if (!is_c2_admissible(h1) || !is_c2_admissible(h2))
		throw std::invalid_argument("union on a surface requires admissible h-vectors");
	auto check_on_surface = [&](const HVector& h, const char* which) {
		auto inv = invariants(h);
		if (m != inv.s && m < inv.t)
			throw std::invalid_argument(std::string("curve ") + which +
			                            " does not lie on an irreducible surface of degree " +
			                            std::to_string(m) + " (needs m = " + std::to_string(inv.s) +
			                            " or m >= " + std::to_string(inv.t) + ")");
	};
	check_on_surface(h1, "h1");
	check_on_surface(h2, "h2");

	int sections = 0;
	bool dissolved = false;
	HVector cur = h2;
	for (;;) {
		// a plane curve of degree m is one further section of the surface
		if (cur.b() == m - 1 && degree(cur) == m && cur.at(0) == 1 && invariants(cur).s == 1) {
			bool all_ones = true;
			for (int n = 0; n <= cur.b(); ++n) all_ones = all_ones && cur.at(n) == 1;
			if (all_ones) {
				++sections;
				dissolved = true;
				break;
			}
		}
		try {
			cur = subtract_hyperplane(cur, m);
		} catch (const std::invalid_argument&) {
			break;
		}
		++sections;
	}

	UnionConstruction base;
	if (dissolved) {
		base.h3 = h1;
		base.case_tag = "dissolved";
	} else {
		base = union_ordinary_general(h1, cur);
	}

	std::vector<int> replay_ks(static_cast<size_t>(sections), m);
	auto rep = detail::replay(base.h3, replay_ks);
	if (!rep.ok)
		throw std::invalid_argument("side condition failed: an intermediate union does not lie on "
		                            "an irreducible surface of degree " + std::to_string(m));

	UnionConstruction u;
	u.h3 = rep.final;
	u.restricted = base.restricted;
	u.case_tag = base.case_tag;
	u.omitted_value = base.omitted_value;
	u.certified = detail::certify_chain(rep.chain);
	std::ostringstream note;
	note << "base union " << detail::hv_str(base.h3);
	if (dissolved) note << " (second curve dissolved into " << sections << " sections)";
	else if (sections) note << "; " << sections << " degree-" << m << " sections re-added";
	u.note = note.str();
	return u;
}

}  // namespace acm
