// Command-line front end: every library operation behind a subcommand, with
// aligned-table output by default and a stable JSON record with --json.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acm/bounds.hpp"
#include "acm/format.hpp"
#include "acm/hvector.hpp"
#include "acm/liaison.hpp"
#include "acm/oracle.hpp"
#include "acm/ordinary.hpp"
#include "acm/verify.hpp"

using nlohmann::json;

namespace {

struct Output {
	std::string command;
	json input = json::object();
	json result = json::object();
	std::vector<std::string> warnings;
	std::vector<std::string> citations;
	std::vector<std::pair<std::string, std::string>> rows;  // plain-mode table
	std::vector<std::string> trailer;                       // plain-mode extra lines
	int exit_code = 0;
};

json to_json(const acm::HVector& h) { return json(h.c); }
json to_json(const acm::BiliaisonType& lam) { return json(lam.ks); }

void add_row(Output& out, const std::string& key, const std::string& value) {
	out.rows.emplace_back(key, value);
}

void add_row(Output& out, const std::string& key, long long value) {
	out.rows.emplace_back(key, std::to_string(value));
}

void add_row(Output& out, const std::string& key, bool value) {
	out.rows.emplace_back(key, value ? "true" : "false");
}

void render(const Output& out, bool as_json) {
	if (as_json) {
		json rec;
		rec["command"] = out.command;
		rec["input"] = out.input;
		rec["result"] = out.result;
		rec["warnings"] = out.warnings;
		rec["citations"] = out.citations;
		std::cout << rec.dump(2) << "\n";
		return;
	}
	size_t width = 0;
	for (const auto& [k, v] : out.rows) width = std::max(width, k.size());
	for (const auto& [k, v] : out.rows)
		std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
	for (const auto& line : out.trailer) std::cout << line << "\n";
	for (const auto& w : out.warnings) std::cout << "warning: " << w << "\n";
}

// ---- subcommand handlers ----------------------------------------------

Output run_invariants(const std::string& h_text) {
	Output out;
	out.command = "invariants";
	acm::HVector h = acm::parse_hvector(h_text);
	out.input["h"] = to_json(h);
	auto inv = acm::invariants(h);
	out.result = {{"d", inv.d}, {"p_a", inv.pa}, {"s", inv.s}, {"t", inv.t},
	              {"e", inv.e}, {"reg", inv.reg}, {"b", inv.b}};
	add_row(out, "d", inv.d);
	add_row(out, "p_a", inv.pa);
	add_row(out, "s", static_cast<long long>(inv.s));
	add_row(out, "t", static_cast<long long>(inv.t));
	add_row(out, "e", static_cast<long long>(inv.e));
	add_row(out, "reg", static_cast<long long>(inv.reg));
	add_row(out, "b", static_cast<long long>(inv.b));
	return out;
}

Output run_lambda(const std::optional<std::string>& h_text, const std::optional<std::string>& lam_text) {
	Output out;
	out.command = "lambda";
	if (h_text) {
		acm::HVector h = acm::parse_hvector(*h_text);
		out.input["h"] = to_json(h);
		acm::BiliaisonType lam = acm::to_biliaison(h);
		out.result["lambda"] = to_json(lam);
		add_row(out, "lambda", acm::format_lambda(lam));
	} else {
		acm::BiliaisonType lam = acm::parse_lambda(*lam_text);
		out.input["lambda"] = to_json(lam);
		acm::HVector h = acm::from_biliaison(lam);
		out.result["h"] = to_json(h);
		add_row(out, "h", acm::format_hvector(h));
	}
	return out;
}

Output run_gmax(long long d, int s) {
	Output out;
	out.command = "gmax";
	out.input = {{"d", d}, {"s", s}};
	out.citations = {"max-genus-search"};
	acm::GmaxResult g = acm::gmax(d, s);
	out.result["feasible"] = g.feasible;
	if (!g.feasible) {
		out.trailer.push_back("infeasible: d < s(s+1)/2");
		return out;
	}
	out.result["genus"] = g.genus;
	out.result["witness"] = to_json(g.witness);
	out.trailer.push_back("genus " + std::to_string(g.genus) + ", witness " +
	                      acm::format_hvector(g.witness));
	return out;
}

Output run_ci_bound(const std::string& c1_text, const std::string& c2_text) {
	Output out;
	out.command = "ci-bound";
	auto parse_pair = [](const std::string& text, const char* which) {
		auto v = acm::detail::parse_int_list(text, which);
		if (v.size() != 2) throw acm::parse_error(std::string(which) + ": expected two degrees s,t");
		return std::make_pair(v[0], v[1]);
	};
	auto [s1, t1] = parse_pair(c1_text, "c1");
	auto [s2, t2] = parse_pair(c2_text, "c2");
	out.input = {{"c1", {s1, t1}}, {"c2", {s2, t2}}};
	acm::BoundReport r = acm::ci_bound(s1, t1, s2, t2);
	out.citations = {r.rule};
	out.result = {{"bound", r.bound}, {"rule", r.rule}, {"acm_if_attained", r.acm_if_attained},
	              {"witness", to_json(*r.witness)}};
	add_row(out, "bound", r.bound);
	add_row(out, "rule", r.rule);
	add_row(out, "witness", acm::format_hvector(*r.witness));
	add_row(out, "acm_if_attained", r.acm_if_attained);
	return out;
}

Output run_bound(const std::string& h1_text, const std::string& h2_text, bool refined, bool strict) {
	Output out;
	out.command = "bound";
	acm::HVector h1 = acm::parse_hvector(h1_text);
	acm::HVector h2 = acm::parse_hvector(h2_text);
	out.input = {{"h1", to_json(h1)}, {"h2", to_json(h2)}, {"refined", refined}, {"strict", strict}};
	if (refined) {
		acm::BoundReport r = acm::refined_bound(h1, h2, strict);
		out.citations = {r.rule};
		out.result = {{"bound", r.bound},
		              {"rule", r.rule},
		              {"s_effective", *r.s_effective},
		              {"witness", to_json(*r.witness)},
		              {"point_bound", *r.genus_point_bound},
		              {"strict", strict},
		              {"acm_if_attained", r.acm_if_attained}};
		add_row(out, "bound", r.bound);
		add_row(out, "rule", r.rule);
		add_row(out, "s_effective", static_cast<long long>(*r.s_effective));
		add_row(out, "witness", acm::format_hvector(*r.witness));
		add_row(out, "point_bound", *r.genus_point_bound);
		add_row(out, "strict", strict);
		add_row(out, "acm_if_attained", r.acm_if_attained);
		return out;
	}
	acm::BoundReport r = acm::main_bound(h1, h2);
	out.citations = {r.rule};
	out.result = {{"bound", r.bound},
	              {"rule", r.rule},
	              {"genus_bound", *r.genus_bound},
	              {"genus_witness", to_json(*r.witness)},
	              {"genus_point_bound", *r.genus_point_bound},
	              {"gap_point_bound", *r.gap_point_bound},
	              {"gap_possible", *r.gap_case_possible},
	              {"acm_if_attained", r.acm_if_attained},
	              {"note", r.note}};
	add_row(out, "bound", r.bound);
	add_row(out, "rule", r.rule);
	add_row(out, "genus_bound", *r.genus_bound);
	add_row(out, "genus_witness", acm::format_hvector(*r.witness));
	add_row(out, "genus_point_bound", *r.genus_point_bound);
	add_row(out, "gap_point_bound", *r.gap_point_bound);
	add_row(out, "gap_possible", *r.gap_case_possible);
	add_row(out, "acm_if_attained", r.acm_if_attained);
	out.trailer.push_back("note: " + r.note);
	return out;
}

Output run_link(const std::string& h_text, int m, int n) {
	Output out;
	out.command = "link";
	acm::HVector h = acm::parse_hvector(h_text);
	out.input = {{"h", to_json(h)}, {"m", m}, {"n", n}};
	out.citations = {"ci-linkage"};
	acm::HVector h2 = acm::link(h, m, n);
	acm::HVector frame = acm::ci_hvector(m, n);
	out.result = {{"h2", to_json(h2)}, {"ci", to_json(frame)}};
	add_row(out, "h2", acm::format_hvector(h2));
	add_row(out, "ci", acm::format_hvector(frame));
	if (m == acm::initial_degree(h)) {
		long long pts = acm::linked_intersection(h, m, n);
		out.result["intersection"] = pts;
		add_row(out, "intersection", pts);
	} else {
		out.warnings.push_back("m exceeds the initial degree; the residual pair does not maximize "
		                       "the intersection, count omitted");
	}
	return out;
}

Output run_ladder(int s, int t) {
	Output out;
	out.command = "ladder";
	out.input = {{"s", s}, {"t", t}};
	out.citations = {"ladder-formula"};
	long long pts = acm::ladder_intersection(s, t);
	out.result = {{"intersection", pts}, {"union", to_json(acm::ladder_union(s, t))}};
	out.trailer.push_back(std::to_string(pts));
	return out;
}

void fill_union(Output& out, const acm::UnionConstruction& u, long long pa1, long long pa2) {
	long long pts = acm::intersection_from_union(acm::arithmetic_genus(u.h3), pa1, pa2);
	out.result["h3"] = to_json(u.h3);
	out.result["case"] = u.case_tag;
	out.result["restricted"] = u.restricted;
	out.result["omitted"] = u.omitted_value;
	out.result["intersection"] = pts;
	out.result["certified"] = u.certified;
	out.result["note"] = u.note;
	add_row(out, "h3", acm::format_hvector(u.h3));
	add_row(out, "case", u.case_tag);
	add_row(out, "restricted", u.restricted);
	add_row(out, "omitted", static_cast<long long>(u.omitted_value));
	add_row(out, "intersection", pts);
	add_row(out, "certified", u.certified);
	out.trailer.push_back("note: " + u.note);
	if (!u.certified)
		out.warnings.push_back("maximality is heuristic here: the union does not attain the "
		                       "maximal-genus certificate");
}

Output run_union_ordinary(int s, int a, int b, bool restricted) {
	Output out;
	out.command = "union-ordinary";
	out.input = {{"s", s}, {"a", a}, {"b", b}, {"restricted", restricted}};
	acm::UnionConstruction u = acm::union_ordinary(s, a, b, restricted);
	out.citations = {"union-case-" + u.case_tag + (restricted ? "-restricted" : "")};
	fill_union(out, u, acm::arithmetic_genus(acm::ordinary_h(s, a)),
	           acm::arithmetic_genus(acm::ordinary_h(s, b)));
	return out;
}

Output run_union_general(const std::string& h1_text, const std::string& h2_text) {
	Output out;
	out.command = "union-general";
	acm::HVector h1 = acm::parse_hvector(h1_text);
	acm::HVector h2 = acm::parse_hvector(h2_text);
	out.input = {{"h1", to_json(h1)}, {"h2", to_json(h2)}};
	out.citations = {"reduction-replay"};
	acm::UnionConstruction u = acm::union_ordinary_general(h1, h2);
	fill_union(out, u, acm::arithmetic_genus(h1), acm::arithmetic_genus(h2));
	return out;
}

Output run_union_on_surface(const std::string& h1_text, const std::string& h2_text, int m) {
	Output out;
	out.command = "union-on-surface";
	acm::HVector h1 = acm::parse_hvector(h1_text);
	acm::HVector h2 = acm::parse_hvector(h2_text);
	out.input = {{"h1", to_json(h1)}, {"h2", to_json(h2)}, {"m", m}};
	out.citations = {"surface-reduction"};
	acm::UnionConstruction u = acm::union_on_surface(h1, h2, m);
	out.result["m"] = m;
	add_row(out, "m", static_cast<long long>(m));
	fill_union(out, u, acm::arithmetic_genus(h1), acm::arithmetic_genus(h2));
	return out;
}

Output run_davis(const std::string& lam_text, std::optional<int> t) {
	Output out;
	out.command = "davis";
	acm::BiliaisonType lam = acm::parse_lambda(lam_text);
	out.input["lambda"] = to_json(lam);
	out.citations = {"gap-split"};
	if (!t) {
		auto gaps = acm::find_gaps(lam);
		if (gaps.empty()) throw std::invalid_argument("the type has no gap to split at");
		t = gaps.front();
	}
	out.input["t"] = *t;
	acm::DavisSplit sp = acm::davis_split(lam, *t);
	out.result = {{"B", to_json(sp.lower)}, {"D", to_json(sp.upper)}, {"count", sp.count}};
	add_row(out, "B", acm::format_lambda(sp.lower));
	add_row(out, "D", acm::format_lambda(sp.upper));
	add_row(out, "count", sp.count);
	return out;
}

Output run_verify(int dmax, int smax) {
	Output out;
	out.command = "verify";
	out.input = {{"dmax", dmax}, {"smax", smax}};
	acm::VerificationReport rep = acm::verify_all(acm::GridLimits{dmax, smax, 48});
	out.result["checks_run"] = rep.checks_run;
	out.result["failures"] = json::array();
	add_row(out, "checks_run", rep.checks_run);
	add_row(out, "failures", static_cast<long long>(rep.failures.size()));
	for (const auto& f : rep.failures) {
		out.result["failures"].push_back(
		    {{"check", f.check}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
		out.trailer.push_back("FAIL " + f.check + " | " + f.input + " | expected " + f.expected +
		                      " | got " + f.got);
	}
	out.exit_code = rep.pass() ? 0 : 1;
	return out;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"invariants, bounds, and linkage arithmetic for ACM space curves", "acmcurve"};
	app.require_subcommand(1);
	app.set_help_flag("--help", "print this help message and exit");
	bool as_json = false;
	app.add_flag("--json", as_json, "emit a JSON record instead of a table");
	auto add_cmd = [&app](const std::string& name, const std::string& desc) {
		CLI::App* sub = app.add_subcommand(name, desc);
		sub->set_help_flag("--help", "print this help message and exit");
		return sub;
	};

	std::string h_text, h1_text, h2_text, c1_text, c2_text, lam_text;
	long long d = 0;
	int s = 0, t = 0, a = 0, b = 0, m = 0, n = 0;
	int dmax = 40, smax = 6;
	bool refined = false, strict = false, restricted = false;
	std::optional<std::string> lambda_h, lambda_lam;
	std::optional<int> davis_t;

	Output out;
	auto run = [&](auto&& fn) { return [&, fn]() { out = fn(); }; };

	auto* inv_cmd = add_cmd("invariants", "numeric invariants of an h-vector");
	inv_cmd->add_option("--h", h_text, "h-vector, e.g. 1,2,3,2,1")->required();
	inv_cmd->callback(run([&] { return run_invariants(h_text); }));

	auto* lam_cmd = add_cmd("lambda", "convert between h-vector and biliaison type");
	auto* lam_h = lam_cmd->add_option("--h", lambda_h, "h-vector to convert");
	auto* lam_l = lam_cmd->add_option("--lam", lambda_lam, "biliaison type to realize, e.g. {1,2,4}");
	lam_h->excludes(lam_l);
	lam_cmd->callback(run([&] {
		if (!lambda_h && !lambda_lam) throw CLI::RequiredError("--h or --lam");
		return run_lambda(lambda_h, lambda_lam);
	}));

	auto* gmax_cmd = add_cmd("gmax", "largest genus at a degree and initial degree");
	gmax_cmd->add_option("--d", d, "degree")->required();
	gmax_cmd->add_option("--s", s, "initial degree")->required();
	gmax_cmd->callback(run([&] { return run_gmax(d, s); }));

	auto* ci_cmd = add_cmd("ci-bound", "largest intersection of two complete intersections");
	ci_cmd->add_option("--c1", c1_text, "first pair of surface degrees s,t")->required();
	ci_cmd->add_option("--c2", c2_text, "second pair of surface degrees s,t")->required();
	ci_cmd->callback(run([&] { return run_ci_bound(c1_text, c2_text); }));

	auto* bound_cmd = add_cmd("bound", "intersection bound for two integral ACM curves");
	bound_cmd->add_option("--h1", h1_text, "first h-vector")->required();
	bound_cmd->add_option("--h2", h2_text, "second h-vector")->required();
	bound_cmd->add_flag("--refined", refined, "use the sharpened distinct-degree genus bound");
	bound_cmd->add_flag("--strict", strict, "require strict hypothesis inequalities")->needs("--refined");
	bound_cmd->callback(run([&] { return run_bound(h1_text, h2_text, refined, strict); }));

	auto* link_cmd = add_cmd("link", "residual curve in a complete intersection frame");
	link_cmd->add_option("--h", h_text, "h-vector of the first curve")->required();
	link_cmd->add_option("--m", m, "frame degree m")->required();
	link_cmd->add_option("--n", n, "frame degree n")->required();
	link_cmd->callback(run([&] { return run_link(h_text, m, n); }));

	auto* ladder_cmd = add_cmd("ladder", "maximal intersection of maximal curves s and t");
	ladder_cmd->add_option("--s", s, "smaller initial degree")->required();
	ladder_cmd->add_option("--t", t, "larger initial degree")->required();
	ladder_cmd->callback(run([&] { return run_ladder(s, t); }));

	auto* uo_cmd = add_cmd("union-ordinary", "maximal union of two ordinary curves");
	uo_cmd->add_option("--s", s, "common initial degree")->required();
	uo_cmd->add_option("--a", a, "tail entry of the first curve")->required();
	uo_cmd->add_option("--b", b, "tail entry of the second curve")->required();
	uo_cmd->add_flag("--restricted", restricted, "force the union off surfaces of degree s");
	uo_cmd->callback(run([&] { return run_union_ordinary(s, a, b, restricted); }));

	auto* ug_cmd = add_cmd("union-general", "maximal union of two ordinary curves by reduction");
	ug_cmd->add_option("--h1", h1_text, "first h-vector")->required();
	ug_cmd->add_option("--h2", h2_text, "second h-vector")->required();
	ug_cmd->callback(run([&] { return run_union_general(h1_text, h2_text); }));

	auto* us_cmd = add_cmd("union-on-surface", "maximal union on a surface of degree m");
	us_cmd->add_option("--h1", h1_text, "first h-vector")->required();
	us_cmd->add_option("--h2", h2_text, "second h-vector")->required();
	us_cmd->add_option("--m", m, "surface degree")->required();
	us_cmd->callback(run([&] { return run_union_on_surface(h1_text, h2_text, m); }));

	auto* davis_cmd = add_cmd("davis", "split a biliaison type at a gap");
	davis_cmd->add_option("--lam", lam_text, "biliaison type, e.g. {1,2,8}")->required();
	davis_cmd->add_option("--t", davis_t, "gap index (default: first gap)");
	davis_cmd->callback(run([&] { return run_davis(lam_text, davis_t); }));

	auto* verify_cmd = add_cmd("verify", "cross-check closed forms against enumeration");
	verify_cmd->add_option("--dmax", dmax, "degree ceiling for the grids");
	verify_cmd->add_option("--smax", smax, "initial-degree ceiling for the grids");
	verify_cmd->callback(run([&] { return run_verify(dmax, smax); }));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	} catch (const acm::parse_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	render(out, as_json);
	return out.exit_code;
}
