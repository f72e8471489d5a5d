#pragma once

#include "lhc/coeff.hpp"
#include "lhc/hopf.hpp"
#include "lhc/matched.hpp"
#include "lhc/pairing.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhc {

// Schema or parse problem; `where` is a JSON path such as "/hopf/generators/0".
struct FixtureError : std::runtime_error {
	FixtureError(const std::string &where, const std::string &what)
	    : std::runtime_error(where.empty() ? what : where + ": " + what)
	{
	}
};

inline constexpr int kSchemaVersion = 1;

// Replaces parts of the canonical modular pair; used by negative fixtures.
struct MpiOverride {
	std::map<std::size_t, Rational> delta;
	std::optional<FElem> sigma;
};

struct Fixture {
	std::string name;
	MatchedPair mp;
	LieHopfDatum liehopf;
	std::vector<PairingSpec> pairing; // empty: no pairing data
	std::vector<InducedModule> modules;
	std::vector<int> levi; // indices into the g2 basis
	std::optional<MpiOverride> mpi_override;

	const InducedModule &module(const std::string &name) const;
};

Fixture parse_fixture(const std::string &text);
Fixture load_fixture(const std::string &path);

FElem parse_f_expr(const HopfAlgebraF &F, const std::string &text);
UElem parse_u_expr(const Enveloping &U, const std::string &text);

// Everything derived from a fixture, built once and shared by the suites.
class Workspace
{
public:
	explicit Workspace(Fixture fx);

	const Fixture &fixture() const { return fx_; }
	const MatchedPairAlgebra &algebra() const { return *A_; }
	const LieHopf &hopf() const { return *H_; }
	const ModularPair &mpi() const { return mpi_; }
	const ModularPair &canonical() const { return canonical_; }
	const Pairing *pairing() const { return P_.get(); }

private:
	Fixture fx_;
	std::unique_ptr<MatchedPairAlgebra> A_;
	std::unique_ptr<LieHopf> H_;
	ModularPair canonical_, mpi_;
	std::unique_ptr<Pairing> P_;
};

} // namespace lhc
