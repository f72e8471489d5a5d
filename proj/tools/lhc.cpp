// Command line front end: verify, cohomology, vanest, eval.

#include "lhc/fixture.hpp"
#include "lhc/reduced.hpp"
#include "lhc/suites.hpp"
#include "lhc/vanest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

using namespace lhc;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2 };

struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

ojson violation_json(const Violation &v)
{
	return ojson{{"identity", v.identity}, {"statement", v.statement}, {"witness", v.witness}, {"lhs", v.lhs},
		     {"rhs", v.rhs}};
}

ojson report_json(const std::string &suite, const Report &r, std::uint64_t seed, int depth)
{
	ojson j;
	j["suite"] = suite;
	j["status"] = r.ok() ? "pass" : "fail";
	j["checks"] = r.checks();
	j["failures"] = r.failures();
	ojson vs = ojson::array();
	for (const auto &v : r.violations())
		vs.push_back(violation_json(v));
	j["violations"] = vs;
	j["seed"] = seed;
	j["depth"] = depth;
	return j;
}

void print_text(std::ostream &os, const std::string &suite, const Report &r)
{
	os << suite << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks() << " checks, " << r.failures()
	   << " failures)\n";
	for (const auto &v : r.violations()) {
		os << "  [" << v.identity << "] " << v.statement << "\n";
		os << "    at  " << v.witness << "\n";
		os << "    lhs " << v.lhs << "\n";
		os << "    rhs " << v.rhs << "\n";
	}
	if (r.failures() > r.violations().size())
		os << "  ... " << r.failures() - r.violations().size() << " more\n";
}

std::vector<int> parse_pq(const std::string &s)
{
	auto comma = s.find(',');
	if (comma == std::string::npos)
		throw InputError("--pq expects P,Q");
	try {
		std::size_t a = 0, b = 0;
		int p = std::stoi(s.substr(0, comma), &a);
		int q = std::stoi(s.substr(comma + 1), &b);
		if (a != comma || b != s.size() - comma - 1 || p < 0 || q < 0)
			throw InputError("--pq expects two non-negative integers");
		return {p, q};
	} catch (const std::logic_error &) {
		throw InputError("--pq expects two non-negative integers");
	}
}

std::string trim(const std::string &s)
{
	auto b = s.find_first_not_of(" \t");
	auto e = s.find_last_not_of(" \t");
	return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct Common {
	std::string fixture;
	std::string format = "text";
	std::uint64_t seed = 1;
	int depth = 3;
	int samples = 20;
	bool timing = false;
};

int cmd_verify(const Common &c, const std::string &suite)
{
	if (suite != "all" && !is_suite(suite))
		throw InputError("unknown suite \"" + suite + "\"");
	Workspace ws(load_fixture(c.fixture));
	SuiteOptions opt{c.depth, c.samples, c.seed};
	auto t0 = std::chrono::steady_clock::now();
	auto results = run_suites(ws, suite, opt);
	const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
	Report total;
	for (const auto &r : results)
		total.merge(r.report);

	if (c.format == "json") {
		ojson j = report_json(suite, total, c.seed, c.depth);
		ojson per = ojson::array();
		for (const auto &r : results) {
			ojson s{{"suite", r.suite},
				{"status", r.report.ok() ? "pass" : "fail"},
				{"checks", r.report.checks()},
				{"failures", r.report.failures()}};
			ojson ids = ojson::array();
			for (const auto &v : r.report.violations())
				if (std::find(ids.begin(), ids.end(), v.identity) == ids.end())
					ids.push_back(v.identity);
			s["failed_ids"] = ids;
			if (c.timing)
				s["elapsed_ms"] = static_cast<long long>(r.elapsed_ms);
			per.push_back(s);
		}
		j["fixture"] = ws.fixture().name;
		j["samples"] = c.samples;
		j["suites"] = per;
		if (c.timing)
			j["elapsed_ms"] = static_cast<long long>(ms);
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << "fixture " << ws.fixture().name << ", seed " << c.seed << ", depth " << c.depth << ", samples "
			  << c.samples << "\n";
		for (const auto &r : results) {
			print_text(std::cout, r.suite, r.report);
			if (c.timing)
				std::cout << "  elapsed_ms " << static_cast<long long>(r.elapsed_ms) << "\n";
		}
		std::cout << (total.ok() ? "PASS" : "FAIL") << "\n";
	}
	return total.ok() ? kPass : kViolation;
}

std::string join_names(const std::vector<int> &idx, const std::vector<std::string> &names, std::size_t shift)
{
	std::string s;
	for (std::size_t i = 0; i < idx.size(); ++i)
		s += (i ? "," : "") + names[shift + static_cast<std::size_t>(idx[i])];
	return s;
}

int cmd_cohomology(const Common &c, const std::string &module, bool relative, int max_degree, bool reps)
{
	Workspace ws(load_fixture(c.fixture));
	const auto &fx = ws.fixture();
	const InducedModule &M = fx.module(module);
	const std::vector<int> levi = relative ? fx.levi : std::vector<int>{};
	RelativeCohomology co = relative_cohomology(ws.algebra().pair(), M, levi, max_degree);
	auto fmt = [&](const ExteriorCochain &x) {
		return format_lincomb<ExtKey>(x, [&](const ExtKey &k) {
			std::string s = M.basis[k.m];
			for (std::size_t t = 0; t < k.wedge.size(); ++t)
				s += std::string(t ? "^" : " (x) ") + "th_" + co.a.names()[static_cast<std::size_t>(k.wedge[t])];
			return s;
		});
	};
	if (c.format == "json") {
		ojson j;
		j["fixture"] = fx.name;
		j["module"] = module;
		j["relative"] = relative;
		ojson h = ojson::array();
		for (int z : levi)
			h.push_back(fx.mp.g2.names()[static_cast<std::size_t>(z)]);
		j["h"] = h;
		j["dims"] = co.dims;
		if (reps) {
			ojson r = ojson::array();
			for (const auto &deg : co.representatives) {
				ojson d = ojson::array();
				for (const auto &x : deg)
					d.push_back(fmt(x));
				r.push_back(d);
			}
			j["representatives"] = r;
		}
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << fx.name << ", module " << module << ", h = {"
			  << join_names(levi, fx.mp.g2.names(), 0) << "}\n";
		std::cout << "degree  dim\n";
		for (std::size_t i = 0; i < co.dims.size(); ++i) {
			std::cout << i << "       " << co.dims[i] << "\n";
			if (reps)
				for (const auto &x : co.representatives[i])
					std::cout << "          " << fmt(x) << "\n";
		}
	}
	return kPass;
}

int cmd_vanest(const Common &c, const std::string &module, const std::string &pq)
{
	auto pqv = parse_pq(pq);
	Workspace ws(load_fixture(c.fixture));
	if (ws.pairing() == nullptr)
		throw InputError("fixture has no pairing data");
	Sayd S(ws.hopf(), ws.fixture().module(module), ws.mpi());
	Reduced R(S);
	VanEst V(R, ws.algebra(), *ws.pairing(), ws.fixture().levi);
	Report r = check_theta_star(V, pqv[1], std::clamp(c.depth, 1, 3), c.samples, c.seed);
	r.merge(check_van_est(V, pqv[0], pqv[1], c.samples, c.seed + 1, std::clamp(c.depth, 1, 2)));
	if (c.format == "json") {
		ojson j = report_json("vanest", r, c.seed, c.depth);
		j["fixture"] = ws.fixture().name;
		j["module"] = module;
		j["pq"] = pqv;
		std::cout << j.dump(2) << "\n";
	} else {
		print_text(std::cout, "vanest " + module + " p<=" + std::to_string(pqv[0]) + " q<=" + std::to_string(pqv[1]),
			   r);
	}
	return r.ok() ? kPass : kViolation;
}

int cmd_eval(const Common &c, const std::string &pair)
{
	auto semi = pair.find(';');
	if (semi == std::string::npos)
		throw InputError("--pair expects \"<f-expr> ; <g2-monomial>\"");
	Workspace ws(load_fixture(c.fixture));
	if (ws.pairing() == nullptr)
		throw InputError("fixture has no pairing data");
	FElem f;
	UElem v;
	try {
		f = parse_f_expr(ws.hopf().F(), trim(pair.substr(0, semi)));
		v = parse_u_expr(ws.algebra().U2(), trim(pair.substr(semi + 1)));
	} catch (const std::exception &e) {
		throw InputError(std::string("cannot parse --pair: ") + e.what());
	}
	Rational r = ws.pairing()->eval(f, v);
	if (c.format == "json")
		std::cout << ojson{{"pair", pair}, {"value", to_string(r)}}.dump(2) << "\n";
	else
		std::cout << to_string(r) << "\n";
	return kPass;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Lie-Hopf algebra identity checker"};
	app.require_subcommand(1);
	Common c;
	auto add_common = [&](CLI::App *sub, const std::vector<std::string> &formats) {
		sub->add_option("fixture", c.fixture, "fixture JSON file")->required();
		sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
		sub->add_option("--seed", c.seed, "random seed");
	};

	std::string suite = "all";
	auto *verify = app.add_subcommand("verify", "run identity suites");
	add_common(verify, {"text", "json"});
	verify->add_option("--suite", suite, "suite name or all");
	verify->add_option("--depth", c.depth, "degree bound")->check(CLI::Range(0, 8));
	verify->add_option("--samples", c.samples, "random samples per check")->check(CLI::Range(1, 100000));
	verify->add_flag("--timing", c.timing, "include elapsed times");

	std::string module;
	bool relative = false, reps = false;
	int max_degree = -1;
	auto *coh = app.add_subcommand("cohomology", "relative Lie algebra cohomology table");
	add_common(coh, {"table", "json"});
	c.format = "text";
	coh->add_option("--module", module, "module name")->required();
	coh->add_flag("--relative", relative, "relative to the fixture's h");
	coh->add_option("--max-degree", max_degree, "highest degree")->check(CLI::Range(0, 64));
	coh->add_flag("--representatives", reps, "print representative cocycles");

	std::string pq = "2,2";
	auto *ve = app.add_subcommand("vanest", "chain-map report of the van Est map");
	add_common(ve, {"text", "json"});
	ve->add_option("--module", module, "module name")->required();
	ve->add_option("--pq", pq, "bidegree bound P,Q");
	ve->add_option("--samples", c.samples, "random samples")->check(CLI::Range(1, 100000));
	ve->add_option("--depth", c.depth, "degree bound")->check(CLI::Range(1, 8));

	std::string pair;
	auto *ev = app.add_subcommand("eval", "evaluate the Hopf pairing");
	add_common(ev, {"text", "json"});
	ev->add_option("--pair", pair, "\"<f-expr> ; <g2-monomial>\"")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return kInputError;
	}

	try {
		if (*verify)
			return cmd_verify(c, suite);
		if (*coh) {
			if (c.format == "text")
				c.format = "table";
			int k = max_degree;
			if (k < 0) {
				Workspace ws(load_fixture(c.fixture));
				const auto &mp = ws.algebra().pair();
				k = static_cast<int>(mp.g1.dim() + mp.g2.dim() - (relative ? ws.fixture().levi.size() : 0));
			}
			return cmd_cohomology(c, module, relative, k, reps);
		}
		if (*ve)
			return cmd_vanest(c, module, pq);
		if (*ev)
			return cmd_eval(c, pair);
	} catch (const FixtureError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInputError;
	} catch (const LeviError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInputError;
	} catch (const InputError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInputError;
	} catch (const std::invalid_argument &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInputError;
	}
	return kInputError;
}
