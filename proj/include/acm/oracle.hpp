#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "acm/hvector.hpp"

namespace acm {

struct EnumSpec {
	long long d = 0;
	int s = 1;
	bool decreasing_only = false;
};

namespace detail {

template <class F>
void enumerate_tails(std::vector<int>& prefix, int last, long long remaining, bool decreasing_only,
                     F& yield) {
	if (remaining == 0) {
		auto h = HVector(std::vector<int>(prefix));
		if (!decreasing_only || is_decreasing_type(h)) yield(h);
		return;
	}
	int cap = static_cast<int>(std::min<long long>(last, remaining));
	for (int v = 1; v <= cap; ++v) {
		prefix.push_back(v);
		enumerate_tails(prefix, v, remaining - v, decreasing_only, yield);
		prefix.pop_back();
	}
}

}  // namespace detail

// All admissible h-vectors with degree d and initial degree exactly s:
// the ramp 1..s followed by every nonincreasing tail with entries <= s.
// Emitted in lexicographic order, each exactly once; empty stream when infeasible.
template <class F>
void enumerate(const EnumSpec& spec, F&& yield) {
	if (spec.s < 1 || spec.d < 0) return;
	long long ramp = static_cast<long long>(spec.s) * (spec.s + 1) / 2;
	if (spec.d < ramp) return;
	std::vector<int> prefix;
	prefix.reserve(static_cast<size_t>(spec.s) + static_cast<size_t>(spec.d - ramp) + 1);
	for (int i = 1; i <= spec.s; ++i) prefix.push_back(i);
	detail::enumerate_tails(prefix, spec.s, spec.d - ramp, spec.decreasing_only, yield);
}

inline std::vector<HVector> enumerate_all(const EnumSpec& spec) {
	std::vector<HVector> out;
	enumerate(spec, [&](const HVector& h) { out.push_back(h); });
	return out;
}

// Exhaustive maximal genus over decreasing-type h-vectors with the given d, s.
inline std::optional<long long> gmax_oracle(long long d, int s) {
	std::optional<long long> best;
	enumerate(EnumSpec{d, s, true}, [&](const HVector& h) {
		long long pa = arithmetic_genus(h);
		if (!best || pa > *best) best = pa;
	});
	return best;
}

}  // namespace acm
