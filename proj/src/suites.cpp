#include "lhc/suites.hpp"

#include "lhc/cyclic.hpp"
#include "lhc/reduced.hpp"
#include "lhc/vanest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace lhc {

namespace {

// The (co)cyclic layers grow fast with the leg degree; they use fewer samples.
int cyclic_samples(const SuiteOptions &o) { return std::max(2, o.samples / 10); }
int leg_degree(const SuiteOptions &o) { return std::clamp(o.depth, 1, 2); }

std::uint64_t sub_seed(const SuiteOptions &o, std::uint64_t k) { return o.seed * 1000003ULL + k; }

const Pairing &need_pairing(const Workspace &ws)
{
	if (ws.pairing() == nullptr)
		throw FixtureError("/hopf/pairing", "fixture has no pairing data");
	return *ws.pairing();
}

Report jacobi(const Workspace &ws, const SuiteOptions &)
{
	const auto &mp = ws.algebra().pair();
	Report r = check_jacobi(mp.g1, "g1");
	r.merge(check_jacobi(mp.g2, "g2"));
	return r;
}

Report matched(const Workspace &ws, const SuiteOptions &o)
{
	Report r = check_matched_pair(ws.algebra().pair());
	// equivalent to the matched pair axioms, kept as a cross-check
	r.merge(check_jacobi(double_crossed_sum(ws.algebra().pair()), "g1 |x| g2"));
	r.merge(check_mutual_pair(ws.algebra(), o.depth, o.samples, sub_seed(o, 1)));
	return r;
}

Report liehopf(const Workspace &ws, const SuiteOptions &o)
{
	Report r = check_hopf_axioms_F(ws.hopf().F(), o.depth);
	r.merge(check_lie_hopf(ws.hopf(), o.depth));
	return r;
}

Report bicrossed(const Workspace &ws, const SuiteOptions &o)
{
	return check_matched_pair_hopf(ws.hopf(), o.depth, o.samples, sub_seed(o, 2));
}

Report mpi(const Workspace &ws, const SuiteOptions &o) { return check_mpi(ws.hopf(), ws.mpi(), o.depth); }

Report sayd(const Workspace &ws, const SuiteOptions &o)
{
	Report r;
	std::uint64_t k = 10;
	for (const auto &M : ws.fixture().modules) {
		r.merge(check_induced_module(ws.hopf(), M, &ws.algebra(), ws.pairing(), o.depth));
		Sayd S(ws.hopf(), M, ws.mpi());
		r.merge(check_sayd(S, o.depth, o.samples, sub_seed(o, k++)));
	}
	return r;
}

Report cocyclic(const Workspace &ws, const SuiteOptions &o)
{
	Report r;
	const int n = cyclic_samples(o), deg = leg_degree(o);
	std::uint64_t k = 100;
	for (const auto &M : ws.fixture().modules) {
		Sayd S(ws.hopf(), M, ws.mpi());
		StdCyclic st(S);
		BiCyclic bi(S);
		r.merge(check_cocyclic(st.ops(deg), 3, n, sub_seed(o, k++)));
		for (int q = 0; q <= 2; ++q)
			r.merge(check_cocyclic(bi.row_ops(q, deg), 2, n, sub_seed(o, k++)));
		for (int p = 0; p <= 2; ++p)
			r.merge(check_cocyclic(bi.col_ops(p, deg), 2, n, sub_seed(o, k++)));
		r.merge(check_psi(bi, st, 3, n, sub_seed(o, k++), deg));
	}
	return r;
}

Report reduced(const Workspace &ws, const SuiteOptions &o)
{
	Report r;
	std::uint64_t k = 200;
	for (const auto &M : ws.fixture().modules) {
		Sayd S(ws.hopf(), M, ws.mpi());
		Reduced R(S);
		const int p_max = std::min(3, static_cast<int>(R.dim()));
		r.merge(check_reduced(R, p_max, 3, cyclic_samples(o), sub_seed(o, k++), leg_degree(o)));
	}
	return r;
}

Report pairing(const Workspace &ws, const SuiteOptions &o)
{
	return check_pairing(need_pairing(ws), ws.hopf(), o.depth);
}

Report vanest(const Workspace &ws, const SuiteOptions &o)
{
	Report r;
	const Pairing &P = need_pairing(ws);
	std::uint64_t k = 300;
	for (const auto &M : ws.fixture().modules) {
		Sayd S(ws.hopf(), M, ws.mpi());
		Reduced R(S);
		VanEst V(R, ws.algebra(), P, ws.fixture().levi);
		r.merge(check_theta_star(V, 3, o.depth, o.samples, sub_seed(o, k++)));
		const int p_max = static_cast<int>(V.n1());
		r.merge(check_van_est(V, p_max, 3, cyclic_samples(o), sub_seed(o, k++), leg_degree(o)));
	}
	return r;
}

using SuiteFn = std::function<Report(const Workspace &, const SuiteOptions &)>;

const std::vector<std::pair<std::string, SuiteFn>> &table()
{
	static const std::vector<std::pair<std::string, SuiteFn>> t = {
	    {"jacobi", jacobi},	  {"matched", matched},	  {"liehopf", liehopf}, {"bicrossed", bicrossed},
	    {"mpi", mpi},	  {"sayd", sayd},	  {"cocyclic", cocyclic}, {"reduced", reduced},
	    {"pairing", pairing}, {"vanest", vanest},
	};
	return t;
}

} // namespace

const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> n;
		for (const auto &[name, fn] : table())
			n.push_back(name);
		return n;
	}();
	return names;
}

bool is_suite(const std::string &name)
{
	const auto &n = suite_names();
	return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteResult run_suite(const Workspace &ws, const std::string &name, const SuiteOptions &opt)
{
	for (const auto &[n, fn] : table())
		if (n == name) {
			auto t0 = std::chrono::steady_clock::now();
			SuiteResult res{name, fn(ws, opt), 0};
			res.elapsed_ms =
			    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
			return res;
		}
	throw std::invalid_argument("unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_suites(const Workspace &ws, const std::string &name, const SuiteOptions &opt)
{
	std::vector<SuiteResult> out;
	if (name == "all") {
		for (const auto &n : suite_names())
			out.push_back(run_suite(ws, n, opt));
		return out;
	}
	out.push_back(run_suite(ws, name, opt));
	return out;
}

} // namespace lhc
