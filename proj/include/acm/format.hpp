#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "acm/hvector.hpp"

namespace acm {

// Malformed textual input (as opposed to a domain error on valid input).
struct parse_error : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
	std::vector<int> out;
	size_t i = 0;
	auto skip_ws = [&] {
		while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
	};
	skip_ws();
	if (i == text.size()) throw parse_error(std::string(what) + ": empty input");
	bool expect_item = true;
	while (i < text.size()) {
		skip_ws();
		if (expect_item) {
			size_t start = i;
			while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
			if (i == start) throw parse_error(std::string(what) + ": expected a number at position " +
			                                  std::to_string(start));
			std::string tok = text.substr(start, i - start);
			if (tok.size() > 1 && tok[0] == '0')
				throw parse_error(std::string(what) + ": leading zero in \"" + tok + "\"");
			if (tok.size() > 9) throw parse_error(std::string(what) + ": entry \"" + tok + "\" too large");
			out.push_back(std::stoi(tok));
			expect_item = false;
		} else {
			if (text[i] != ',')
				throw parse_error(std::string(what) + ": unexpected character '" + text[i] + "'");
			++i;
			expect_item = true;
		}
		skip_ws();
	}
	if (expect_item) throw parse_error(std::string(what) + ": trailing comma");
	return out;
}

}  // namespace detail

// "1,2,3,4,2,1" with optional whitespace around items.
inline HVector parse_hvector(const std::string& text) {
	auto v = detail::parse_int_list(text, "h-vector");
	try {
		return HVector(std::move(v));
	} catch (const std::invalid_argument& e) {
		throw parse_error(std::string("h-vector: ") + e.what());
	}
}

// "{1,2,4,6}" or "1,2,4,6".
inline BiliaisonType parse_lambda(const std::string& text) {
	std::string inner = text;
	size_t a = inner.find_first_not_of(" \t");
	size_t b = inner.find_last_not_of(" \t");
	if (a == std::string::npos) throw parse_error("biliaison type: empty input");
	inner = inner.substr(a, b - a + 1);
	if (!inner.empty() && inner.front() == '{') {
		if (inner.back() != '}') throw parse_error("biliaison type: unbalanced braces");
		inner = inner.substr(1, inner.size() - 2);
	}
	auto v = detail::parse_int_list(inner, "biliaison type");
	try {
		return BiliaisonType(std::move(v));
	} catch (const std::invalid_argument& e) {
		throw parse_error(std::string("biliaison type: ") + e.what());
	}
}

inline std::string format_hvector(const HVector& h) {
	std::ostringstream os;
	for (size_t i = 0; i < h.c.size(); ++i) {
		if (i) os << ',';
		os << h.c[i];
	}
	return os.str();
}

inline std::string format_lambda(const BiliaisonType& lam) {
	std::ostringstream os;
	os << '{';
	for (size_t i = 0; i < lam.ks.size(); ++i) {
		if (i) os << ',';
		os << lam.ks[i];
	}
	os << '}';
	return os.str();
}

}  // namespace acm
