#include "lhc/fixture.hpp"

#include "lhc/expr.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lhc {

using nlohmann::json;

namespace {

void check_keys(const json &j, const std::string &path, std::initializer_list<const char *> allowed)
{
	if (!j.is_object())
		throw FixtureError(path, "expected an object");
	for (const auto &[k, v] : j.items()) {
		(void)v;
		if (k == "comment" || k == "description")
			continue;
		if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return k == a; }))
			throw FixtureError(path, "unknown field \"" + k + "\"");
	}
}

const json &require(const json &j, const std::string &path, const char *key)
{
	if (!j.contains(key))
		throw FixtureError(path, std::string("missing field \"") + key + "\"");
	return j.at(key);
}

std::string as_string(const json &j, const std::string &path)
{
	if (!j.is_string())
		throw FixtureError(path, "expected a string");
	return j.get<std::string>();
}

Rational as_rational(const json &j, const std::string &path)
{
	if (j.is_number_integer())
		return Rational(j.get<long>());
	std::string s = as_string(j, path);
	try {
		return parse_rational(s);
	} catch (const std::invalid_argument &e) {
		throw FixtureError(path, "bad rational \"" + s + "\"");
	}
}

std::vector<std::string> names_of(const json &j, const std::string &path)
{
	if (!j.is_array())
		throw FixtureError(path, "expected an array of names");
	std::vector<std::string> out;
	std::set<std::string> seen;
	for (std::size_t i = 0; i < j.size(); ++i) {
		std::string n = as_string(j[i], path + "/" + std::to_string(i));
		if (!seen.insert(n).second)
			throw FixtureError(path, "duplicate name \"" + n + "\"");
		out.push_back(n);
	}
	return out;
}

std::size_t lookup(const std::vector<std::string> &names, const std::string &n, const std::string &path)
{
	auto it = std::find(names.begin(), names.end(), n);
	if (it == names.end())
		throw FixtureError(path, "unknown name \"" + n + "\"");
	return static_cast<std::size_t>(it - names.begin());
}

std::pair<std::string, std::string> split_pair(const std::string &key, const std::string &path)
{
	auto comma = key.find(',');
	if (comma == std::string::npos)
		throw FixtureError(path, "expected a key of the form \"A,B\", got \"" + key + "\"");
	auto trim = [](std::string s) {
		s.erase(0, s.find_first_not_of(' '));
		s.erase(s.find_last_not_of(' ') + 1);
		return s;
	};
	return {trim(key.substr(0, comma)), trim(key.substr(comma + 1))};
}

LieVec parse_vec(const json &j, const std::vector<std::string> &names, const std::string &path)
{
	if (!j.is_object())
		throw FixtureError(path, "expected an object of coefficients");
	LieVec v;
	for (const auto &[k, c] : j.items()) {
		Rational r = as_rational(c, path + "/" + k);
		axpy(v, r, unit(lookup(names, k, path + "/" + k)));
	}
	return v;
}

LieAlgebra parse_lie(const json &j, const std::string &path)
{
	check_keys(j, path, {"basis", "brackets"});
	LieAlgebra g(names_of(require(j, path, "basis"), path + "/basis"));
	if (!j.contains("brackets"))
		return g;
	const json &br = j.at("brackets");
	if (!br.is_object())
		throw FixtureError(path + "/brackets", "expected an object");
	std::set<std::pair<std::size_t, std::size_t>> given;
	for (const auto &[k, v] : br.items()) {
		auto [a, b] = split_pair(k, path + "/brackets");
		given.insert({lookup(g.names(), a, path + "/brackets/" + k), lookup(g.names(), b, path + "/brackets/" + k)});
	}
	for (const auto &[k, v] : br.items()) {
		std::string p = path + "/brackets/" + k;
		auto [a, b] = split_pair(k, p);
		std::size_t i = lookup(g.names(), a, p), jj = lookup(g.names(), b, p);
		LieVec val = parse_vec(v, g.names(), p);
		for (const auto &[c, x] : val)
			g.set_structure(i, jj, c, x);
		// a single key fixes both slots unless the mirrored key is also given
		if (!given.count({jj, i}))
			for (const auto &[c, x] : val)
				g.set_structure(jj, i, c, -x);
	}
	return g;
}

ExprAlgebra f_algebra(const std::vector<HopfGenerator> &gens)
{
	ExprAlgebra alg;
	for (const auto &g : gens)
		alg.names.push_back(g.name);
	alg.mul = [](const LinComb<Mono> &a, const LinComb<Mono> &b) {
		LinComb<Mono> out;
		for (const auto &[ma, ca] : a)
			for (const auto &[mb, cb] : b) {
				Mono m = ma;
				for (std::size_t i = 0; i < m.size(); ++i)
					m[i] += mb[i];
				out.add(m, ca * cb);
			}
		return out;
	};
	alg.invertible = [gens](std::size_t i) { return gens[i].invertible; };
	return alg;
}

FElem f_expr(const std::vector<HopfGenerator> &gens, const json &j, const std::string &path)
{
	if (j.is_number_integer())
		return FElem(Mono(gens.size(), 0), Rational(j.get<long>()));
	std::string s = as_string(j, path);
	try {
		return parse_expr(f_algebra(gens), s);
	} catch (const ExprError &e) {
		throw FixtureError(path, e.what());
	}
}

HopfAlgebraF parse_hopf_generators(const json &j, const std::string &path)
{
	if (!j.is_array())
		throw FixtureError(path, "expected an array of generators");
	std::vector<HopfGenerator> gens;
	std::set<std::string> seen;
	for (std::size_t i = 0; i < j.size(); ++i) {
		std::string p = path + "/" + std::to_string(i);
		check_keys(j[i], p, {"name", "invertible", "epsilon", "coproduct", "antipode"});
		HopfGenerator g;
		g.name = as_string(require(j[i], p, "name"), p + "/name");
		if (!seen.insert(g.name).second)
			throw FixtureError(p, "duplicate generator \"" + g.name + "\"");
		if (j[i].contains("invertible")) {
			if (!j[i].at("invertible").is_boolean())
				throw FixtureError(p + "/invertible", "expected a boolean");
			g.invertible = j[i].at("invertible").get<bool>();
		}
		gens.push_back(g);
	}
	for (std::size_t i = 0; i < j.size(); ++i) {
		std::string p = path + "/" + std::to_string(i);
		auto &g = gens[i];
		g.epsilon = as_rational(require(j[i], p, "epsilon"), p + "/epsilon");
		const json &cop = require(j[i], p, "coproduct");
		if (!cop.is_array())
			throw FixtureError(p + "/coproduct", "expected an array of [left, right] pairs");
		for (std::size_t t = 0; t < cop.size(); ++t) {
			std::string pt = p + "/coproduct/" + std::to_string(t);
			if (!cop[t].is_array() || cop[t].size() != 2)
				throw FixtureError(pt, "expected a [left, right] pair");
			g.coproduct += tensor(f_expr(gens, cop[t][0], pt + "/0"), f_expr(gens, cop[t][1], pt + "/1"));
		}
		g.antipode = f_expr(gens, require(j[i], p, "antipode"), p + "/antipode");
	}
	try {
		return HopfAlgebraF(gens);
	} catch (const std::invalid_argument &e) {
		throw FixtureError(path, e.what());
	}
}

std::vector<std::vector<FElem>> f_matrix(const HopfAlgebraF &F, const json &j, const std::vector<std::string> &names,
					 const std::string &path)
{
	// {"a": {"b": expr}} gives entry [b][a]; a missing object means the identity.
	const std::size_t n = names.size();
	std::vector<std::vector<FElem>> m(n, std::vector<FElem>(n));
	if (j.is_null()) {
		for (std::size_t i = 0; i < n; ++i)
			m[i][i] = F.one();
		return m;
	}
	if (!j.is_object())
		throw FixtureError(path, "expected an object");
	for (const auto &[a, row] : j.items()) {
		std::size_t ai = lookup(names, a, path + "/" + a);
		if (!row.is_object())
			throw FixtureError(path + "/" + a, "expected an object");
		for (const auto &[b, e] : row.items()) {
			std::string p = path + "/" + a + "/" + b;
			m[lookup(names, b, p)][ai] = f_expr(F.generators(), e, p);
		}
	}
	return m;
}

LieModule parse_action(const json &j, const std::vector<std::string> &gnames, const std::vector<std::string> &basis,
		       const std::string &path)
{
	// {"X": {"a": {"b": c}}}:  X . m_a = sum_b c m_b
	LieModule m = LieModule::trivial(gnames.size(), basis.size(), Side::Left);
	if (!j.is_object())
		throw FixtureError(path, "expected an object");
	for (const auto &[x, cols] : j.items()) {
		std::size_t xi = lookup(gnames, x, path + "/" + x);
		if (!cols.is_object())
			throw FixtureError(path + "/" + x, "expected an object");
		for (const auto &[a, vec] : cols.items()) {
			std::string p = path + "/" + x + "/" + a;
			std::size_t ai = lookup(basis, a, p);
			for (const auto &[b, c] : parse_vec(vec, basis, p))
				m.rho[xi].set(b, ai, c);
		}
	}
	return m;
}

void parse_matched(const json &j, const std::string &path, MatchedPair &mp)
{
	check_keys(j, path, {"right_action", "left_action"});
	auto fill = [&](const char *key, const LieAlgebra &target, std::vector<std::vector<LieVec>> &out) {
		if (!j.contains(key))
			return;
		const json &a = j.at(key);
		std::string p0 = path + "/" + key;
		if (!a.is_object())
			throw FixtureError(p0, "expected an object");
		for (const auto &[k, v] : a.items()) {
			std::string p = p0 + "/" + k;
			auto [z, x] = split_pair(k, p);
			std::size_t zi = lookup(mp.g2.names(), z, p), xi = lookup(mp.g1.names(), x, p);
			out[zi][xi] = parse_vec(v, target.names(), p);
		}
	};
	fill("right_action", mp.g2, mp.right);
	fill("left_action", mp.g1, mp.left);
}

std::vector<PairingSpec> parse_pairing(const json &j, const HopfAlgebraF &F, const MatchedPair &mp,
				       const std::string &path)
{
	if (!j.is_object())
		throw FixtureError(path, "expected an object");
	std::vector<PairingSpec> out(F.ngens());
	std::vector<bool> seen(F.ngens(), false);
	for (const auto &[name, spec] : j.items()) {
		std::string p = path + "/" + name;
		std::size_t g = 0;
		try {
			g = F.index_of(name);
		} catch (const std::invalid_argument &) {
			throw FixtureError(p, "unknown F generator \"" + name + "\"");
		}
		seen[g] = true;
		check_keys(spec, p, {"kind", "i", "j", "values"});
		std::string kind = as_string(require(spec, p, "kind"), p + "/kind");
		PairingSpec s;
		if (kind == "matrix_coefficient") {
			s.kind = PairingSpec::Kind::MatrixCoefficient;
			s.i = lookup(mp.g1.names(), as_string(require(spec, p, "i"), p + "/i"), p + "/i");
			s.j = lookup(mp.g1.names(), as_string(require(spec, p, "j"), p + "/j"), p + "/j");
		} else if (kind == "character" || kind == "primitive") {
			s.kind = kind == "character" ? PairingSpec::Kind::Character : PairingSpec::Kind::Primitive;
			s.values.assign(mp.g2.dim(), kind == "character" ? Rational(1) : Rational(0));
			const json &vals = require(spec, p, "values");
			if (!vals.is_object())
				throw FixtureError(p + "/values", "expected an object");
			for (const auto &[z, v] : vals.items())
				s.values[lookup(mp.g2.names(), z, p + "/values/" + z)] = as_rational(v, p + "/values/" + z);
		} else {
			throw FixtureError(p + "/kind", "unknown pairing kind \"" + kind + "\"");
		}
		out[g] = s;
	}
	for (std::size_t g = 0; g < F.ngens(); ++g)
		if (!seen[g])
			throw FixtureError(path, "no pairing for generator \"" + F.generators()[g].name + "\"");
	return out;
}

InducedModule parse_module(const json &j, const std::string &path, const MatchedPair &mp, const HopfAlgebraF &F)
{
	check_keys(j, path, {"name", "basis", "g1_action", "g2_action", "coaction"});
	InducedModule M;
	M.name = as_string(require(j, path, "name"), path + "/name");
	M.basis = names_of(require(j, path, "basis"), path + "/basis");
	if (M.basis.empty())
		throw FixtureError(path + "/basis", "module basis must not be empty");
	M.g1_action = j.contains("g1_action") ? parse_action(j.at("g1_action"), mp.g1.names(), M.basis, path + "/g1_action")
					      : LieModule::trivial(mp.g1.dim(), M.dim(), Side::Left);
	if (j.contains("g2_action"))
		M.g2_action = parse_action(j.at("g2_action"), mp.g2.names(), M.basis, path + "/g2_action");
	M.coaction = f_matrix(F, j.contains("coaction") ? j.at("coaction") : json(), M.basis, path + "/coaction");
	return M;
}

} // namespace

const InducedModule &Fixture::module(const std::string &n) const
{
	for (const auto &m : modules)
		if (m.name == n)
			return m;
	throw FixtureError("/modules", "no module named \"" + n + "\"");
}

FElem parse_f_expr(const HopfAlgebraF &F, const std::string &text)
{
	return parse_expr(f_algebra(F.generators()), text);
}

UElem parse_u_expr(const Enveloping &U, const std::string &text)
{
	ExprAlgebra alg;
	alg.names = U.algebra().names();
	alg.mul = [&U](const UElem &a, const UElem &b) { return U.mul(a, b); };
	return parse_expr(alg, text);
}

Fixture parse_fixture(const std::string &text)
{
	json root;
	try {
		root = json::parse(text);
	} catch (const json::parse_error &e) {
		std::size_t line = 1, col = 1;
		for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
			if (text[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
		throw FixtureError("", "JSON parse error at line " + std::to_string(line) + ", column " +
					   std::to_string(col));
	}
	check_keys(root, "", {"schema_version", "name", "g1", "g2", "matched_pair", "hopf", "modules", "levi",
			      "mpi_override"});
	const json &ver = require(root, "", "schema_version");
	if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
		throw FixtureError("/schema_version", "unsupported schema version");

	Fixture fx;
	fx.name = as_string(require(root, "", "name"), "/name");
	LieAlgebra g1 = parse_lie(require(root, "", "g1"), "/g1");
	LieAlgebra g2 = root.contains("g2") ? parse_lie(root.at("g2"), "/g2") : LieAlgebra(std::vector<std::string>{});
	fx.mp = MatchedPair(g1, g2);
	if (root.contains("matched_pair"))
		parse_matched(root.at("matched_pair"), "/matched_pair", fx.mp);

	auto &lh = fx.liehopf;
	lh.g1 = g1;
	const std::size_t n = g1.dim();
	if (root.contains("hopf")) {
		const json &h = root.at("hopf");
		check_keys(h, "/hopf", {"generators", "action", "coaction", "pairing"});
		lh.F = parse_hopf_generators(require(h, "/hopf", "generators"), "/hopf/generators");
	}
	const auto &F = lh.F;
	lh.action.assign(n, std::vector<FElem>(F.ngens()));
	lh.coef.assign(n, std::vector<FElem>(n));
	for (std::size_t i = 0; i < n; ++i)
		lh.coef[i][i] = F.one();
	if (root.contains("hopf")) {
		const json &h = root.at("hopf");
		if (h.contains("action")) {
			const json &act = h.at("action");
			if (!act.is_object())
				throw FixtureError("/hopf/action", "expected an object");
			for (const auto &[x, row] : act.items()) {
				std::string p = "/hopf/action/" + x;
				std::size_t xi = lookup(g1.names(), x, p);
				if (!row.is_object())
					throw FixtureError(p, "expected an object");
				for (const auto &[gname, e] : row.items()) {
					std::size_t gi = 0;
					try {
						gi = F.index_of(gname);
					} catch (const std::invalid_argument &) {
						throw FixtureError(p + "/" + gname, "unknown F generator \"" + gname + "\"");
					}
					lh.action[xi][gi] = f_expr(F.generators(), e, p + "/" + gname);
				}
			}
		}
		if (h.contains("coaction")) {
			// {"X_i": {"X_j": f_i^j}}
			auto m = f_matrix(F, h.at("coaction"), g1.names(), "/hopf/coaction");
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					lh.coef[i][j] = m[j][i];
		}
		if (h.contains("pairing"))
			fx.pairing = parse_pairing(h.at("pairing"), F, fx.mp, "/hopf/pairing");
	}

	if (root.contains("modules")) {
		const json &mods = root.at("modules");
		if (!mods.is_array())
			throw FixtureError("/modules", "expected an array");
		std::set<std::string> seen;
		for (std::size_t i = 0; i < mods.size(); ++i) {
			fx.modules.push_back(parse_module(mods[i], "/modules/" + std::to_string(i), fx.mp, F));
			if (!seen.insert(fx.modules.back().name).second)
				throw FixtureError("/modules/" + std::to_string(i), "duplicate module name");
		}
	}

	if (root.contains("levi")) {
		for (const auto &nm : names_of(root.at("levi"), "/levi"))
			fx.levi.push_back(static_cast<int>(lookup(g2.names(), nm, "/levi")));
		std::sort(fx.levi.begin(), fx.levi.end());
	}

	if (root.contains("mpi_override")) {
		const json &o = root.at("mpi_override");
		check_keys(o, "/mpi_override", {"delta", "sigma"});
		MpiOverride ov;
		if (o.contains("delta")) {
			if (!o.at("delta").is_object())
				throw FixtureError("/mpi_override/delta", "expected an object");
			for (const auto &[x, v] : o.at("delta").items())
				ov.delta[lookup(g1.names(), x, "/mpi_override/delta/" + x)] =
				    as_rational(v, "/mpi_override/delta/" + x);
		}
		if (o.contains("sigma"))
			ov.sigma = f_expr(F.generators(), o.at("sigma"), "/mpi_override/sigma");
		fx.mpi_override = ov;
	}
	return fx;
}

Fixture load_fixture(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw FixtureError("", "cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse_fixture(ss.str());
}

Workspace::Workspace(Fixture fx) : fx_(std::move(fx))
{
	try {
		A_ = std::make_unique<MatchedPairAlgebra>(fx_.mp);
		H_ = std::make_unique<LieHopf>(fx_.liehopf);
	} catch (const std::invalid_argument &e) {
		throw FixtureError("", e.what());
	}
	canonical_ = canonical_mpi(*H_);
	mpi_ = canonical_;
	if (fx_.mpi_override) {
		for (const auto &[i, v] : fx_.mpi_override->delta)
			mpi_.delta[i] = v;
		if (fx_.mpi_override->sigma)
			mpi_.sigma = *fx_.mpi_override->sigma;
	}
	if (!fx_.pairing.empty() || H_->F().ngens() == 0)
		P_ = std::make_unique<Pairing>(H_->F(), *A_, fx_.pairing);
	for (const auto &M : fx_.modules) {
		if (M.g1_action.rho.size() != fx_.mp.g1.dim())
			throw FixtureError("/modules", "module " + M.name + " does not match g1");
	}
}

} // namespace lhc
