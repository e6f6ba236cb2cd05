#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace acm {

// Finite integer sequence c_0..c_b, implicitly zero elsewhere.
// Stored trimmed: trailing zeros are dropped, so equality is entrywise.
struct HVector {
	std::vector<int> c;

	HVector() = default;
	explicit HVector(std::vector<int> entries) : c(std::move(entries)) { normalize(); }
	HVector(std::initializer_list<int> entries) : c(entries) { normalize(); }

	void normalize() {
		for (int v : c)
			if (v < 0) throw std::invalid_argument("h-vector entries must be nonnegative");
		while (!c.empty() && c.back() == 0) c.pop_back();
	}

	bool empty() const { return c.empty(); }
	// top nonzero index; -1 for the empty sequence
	int b() const { return static_cast<int>(c.size()) - 1; }
	int at(int n) const {
		return (n >= 0 && n < static_cast<int>(c.size())) ? c[static_cast<size_t>(n)] : 0;
	}

	bool operator==(const HVector&) const = default;
};

// Nondecreasing positive sequence k_1 <= ... <= k_s.
// Curve data corresponds to the strictly increasing case.
struct BiliaisonType {
	std::vector<int> ks;

	BiliaisonType() = default;
	explicit BiliaisonType(std::vector<int> entries) : ks(std::move(entries)) { validate(); }
	BiliaisonType(std::initializer_list<int> entries) : ks(entries) { validate(); }

	void validate() const {
		for (size_t i = 0; i < ks.size(); ++i) {
			if (ks[i] <= 0) throw std::invalid_argument("biliaison type entries must be positive");
			if (i > 0 && ks[i] < ks[i - 1])
				throw std::invalid_argument("biliaison type entries must be nondecreasing");
		}
	}

	int size() const { return static_cast<int>(ks.size()); }
	bool strictly_increasing() const {
		for (size_t i = 1; i < ks.size(); ++i)
			if (ks[i] <= ks[i - 1]) return false;
		return true;
	}

	bool operator==(const BiliaisonType&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const HVector& h) {
	for (size_t i = 0; i < h.c.size(); ++i) os << (i ? "," : "") << h.c[i];
	return os;
}

inline std::ostream& operator<<(std::ostream& os, const BiliaisonType& lam) {
	os << "{";
	for (size_t i = 0; i < lam.ks.size(); ++i) os << (i ? "," : "") << lam.ks[i];
	return os << "}";
}

struct CurveInvariants {
	long long d = 0;   // degree
	long long pa = 0;  // arithmetic genus
	int s = 0;         // initial degree
	int t = 0;         // second ideal-generation degree
	int e = 0;         // speciality index, b - 2
	int reg = 0;       // Castelnuovo-Mumford regularity, b + 1
	int b = 0;         // top nonzero index of h

	bool operator==(const CurveInvariants&) const = default;
};

inline long long degree(const HVector& h) {
	return std::accumulate(h.c.begin(), h.c.end(), 0LL);
}

inline long long arithmetic_genus(const HVector& h) {
	long long pa = 0;
	for (int n = 2; n <= h.b(); ++n) pa += static_cast<long long>(n - 1) * h.at(n);
	return pa;
}

// True iff h is 1,2,...,s followed by a nonincreasing tail ending at 0.
inline bool is_c2_admissible(const HVector& h) {
	if (h.empty() || h.at(0) != 1) return false;
	int s = 1;
	while (s <= h.b() && h.at(s) == s + 1) ++s;
	for (int n = s - 1; n < h.b(); ++n)
		if (h.at(n + 1) > h.at(n)) return false;
	return true;
}

// s = inf{ n : c_n < n+1 }; requires admissibility.
inline int initial_degree(const HVector& h) {
	if (!is_c2_admissible(h)) throw std::invalid_argument("h-vector is not admissible");
	int s = 1;
	while (s <= h.b() && h.at(s) == s + 1) ++s;
	return s;
}

// t = inf{ n >= s : c_n < s }; requires admissibility.
inline int second_ideal_degree(const HVector& h) {
	int s = initial_degree(h);
	int n = s;
	while (h.at(n) >= s) ++n;
	return n;
}

// Decreasing type: once the tail strictly drops, it keeps strictly dropping to 0.
inline bool is_decreasing_type(const HVector& h) {
	int s = initial_degree(h);
	bool dropping = false;
	for (int n = s - 1; h.at(n) > 0; ++n) {
		if (h.at(n + 1) < h.at(n)) {
			dropping = true;
			continue;
		}
		if (dropping) return false;
	}
	return true;
}

inline CurveInvariants invariants(const HVector& h) {
	CurveInvariants inv;
	inv.s = initial_degree(h);
	inv.t = second_ideal_degree(h);
	inv.d = degree(h);
	inv.pa = arithmetic_genus(h);
	inv.b = h.b();
	inv.e = inv.b - 2;
	inv.reg = inv.b + 1;
	return inv;
}

// k_i = #{ n : h(n) >= s+1-i }, i = 1..s. Strictly increasing for admissible h.
inline BiliaisonType to_biliaison(const HVector& h) {
	int s = initial_degree(h);
	std::vector<int> ks(static_cast<size_t>(s));
	for (int i = 1; i <= s; ++i) {
		int count = 0;
		for (int n = 0; n <= h.b(); ++n)
			if (h.at(n) >= s + 1 - i) ++count;
		ks[static_cast<size_t>(i - 1)] = count;
	}
	return BiliaisonType(std::move(ks));
}

// Inverse staircase: block i covers n in [s-i, s-i+k_i-1].
inline HVector from_biliaison(const BiliaisonType& lam) {
	if (lam.ks.empty()) throw std::invalid_argument("biliaison type is empty");
	if (!lam.strictly_increasing())
		throw std::invalid_argument("biliaison type is not strictly increasing, no curve realizes it");
	int s = lam.size();
	std::vector<int> c(static_cast<size_t>(s - 1 + lam.ks.back()), 0);
	for (int i = 1; i <= s; ++i) {
		int lo = s - i;
		int hi = s - i + lam.ks[static_cast<size_t>(i - 1)] - 1;
		for (int n = lo; n <= hi; ++n) ++c[static_cast<size_t>(n)];
	}
	HVector h(std::move(c));
	if (!is_c2_admissible(h)) throw std::logic_error("biliaison inverse produced a non-admissible h-vector");
	return h;
}

struct LambdaInvariants {
	CurveInvariants inv;
	int reg_from_lambda = 0;  // k_s
	int reg_from_h = 0;       // b + 1 of the realized h-vector
};

// Closed forms in the k_i; both regularity readings are returned.
inline LambdaInvariants invariants_from_lambda(const BiliaisonType& lam) {
	if (lam.ks.empty()) throw std::invalid_argument("biliaison type is empty");
	if (!lam.strictly_increasing())
		throw std::invalid_argument("biliaison type is not strictly increasing, no curve realizes it");
	int s = lam.size();
	LambdaInvariants out;
	out.inv.s = s;
	out.inv.t = s + lam.ks.front() - 1;
	long long d = 0, pa = 1;
	for (int i = 1; i <= s; ++i) {
		long long k = lam.ks[static_cast<size_t>(i - 1)];
		d += k;
		pa += k * (k - 3) / 2 + static_cast<long long>(s - i) * k;
	}
	out.inv.d = d;
	out.inv.pa = pa;
	out.inv.e = lam.ks.back() - 3;
	out.inv.reg = lam.ks.back();
	out.inv.b = lam.ks.back() - 1;
	out.reg_from_lambda = lam.ks.back();
	out.reg_from_h = from_biliaison(lam).b() + 1;
	return out;
}

// 1-based indices i with k_{i+1} - k_i >= 3.
inline std::vector<int> find_gaps(const BiliaisonType& lam) {
	std::vector<int> gaps;
	for (int i = 1; i < lam.size(); ++i)
		if (lam.ks[static_cast<size_t>(i)] - lam.ks[static_cast<size_t>(i - 1)] >= 3) gaps.push_back(i);
	return gaps;
}

struct DavisSplit {
	BiliaisonType lower;   // k_1..k_t
	BiliaisonType upper;   // k_{t+1}..k_s
	long long count = 0;   // (s - t) * sum(lower)
};

// Split at a gap index t; the count is the forced intersection size of the two pieces.
inline DavisSplit davis_split(const BiliaisonType& lam, int t) {
	if (!lam.strictly_increasing())
		throw std::invalid_argument("davis split requires a strictly increasing biliaison type");
	int s = lam.size();
	if (t < 1 || t >= s) throw std::invalid_argument("split index out of range");
	if (lam.ks[static_cast<size_t>(t)] - lam.ks[static_cast<size_t>(t - 1)] < 3)
		throw std::invalid_argument("split index is not a gap (difference < 3)");
	DavisSplit out;
	out.lower = BiliaisonType(std::vector<int>(lam.ks.begin(), lam.ks.begin() + t));
	out.upper = BiliaisonType(std::vector<int>(lam.ks.begin() + t, lam.ks.end()));
	long long degB = std::accumulate(out.lower.ks.begin(), out.lower.ks.end(), 0LL);
	long long degD = std::accumulate(out.upper.ks.begin(), out.upper.ks.end(), 0LL);
	out.count = static_cast<long long>(s - t) * degB;
	// deg(B) s(D) < deg(D) s(B) is forced by the gap; guard the identity.
	if (out.count >= degD * t)
		throw std::logic_error("davis split inequality violated, split is not at a gap");
	return out;
}

// Union with a hyperplane section of a degree-k surface containing the curve:
// h'(n) = h(n-1) + 1 for n <= k-1, h'(n) = h(n-1) otherwise. Degree grows by k.
inline HVector add_hyperplane(const HVector& h, int k) {
	if (!is_c2_admissible(h)) throw std::invalid_argument("h-vector is not admissible");
	if (k < 1) throw std::invalid_argument("surface degree must be positive");
	int top = std::max(h.b() + 1, k - 1);
	std::vector<int> c(static_cast<size_t>(top + 1), 0);
	for (int n = 0; n <= top; ++n) c[static_cast<size_t>(n)] = h.at(n - 1) + (n <= k - 1 ? 1 : 0);
	HVector out(std::move(c));
	if (!is_c2_admissible(out))
		throw std::invalid_argument("adding a hyperplane section of degree " + std::to_string(k) +
		                            " does not give an admissible h-vector");
	return out;
}

// Inverse of add_hyperplane: h'(n) = h(n+1) - 1 for n <= k-2. Degree drops by k.
inline HVector subtract_hyperplane(const HVector& h, int k) {
	if (!is_c2_admissible(h)) throw std::invalid_argument("h-vector is not admissible");
	if (k < 1) throw std::invalid_argument("surface degree must be positive");
	int top = std::max(h.b() - 1, k - 2);
	std::vector<int> c(static_cast<size_t>(top + 1), 0);
	for (int n = 0; n <= top; ++n) {
		int v = h.at(n + 1) - (n <= k - 2 ? 1 : 0);
		if (v < 0)
			throw std::invalid_argument("removing a hyperplane section of degree " + std::to_string(k) +
			                            " gives a negative entry at index " + std::to_string(n));
		c[static_cast<size_t>(n)] = v;
	}
	HVector out(std::move(c));
	if (!is_c2_admissible(out))
		throw std::invalid_argument("removing a hyperplane section of degree " + std::to_string(k) +
		                            " does not give an admissible h-vector");
	return out;
}

// #(C1 cap C2) = p_a(C1 cup C2) - p_a(C1) - p_a(C2) + 1.
inline long long intersection_from_union(long long pa_union, long long pa1, long long pa2) {
	return pa_union - pa1 - pa2 + 1;
}

}  // namespace acm
