#pragma once

#include "lhc/fixture.hpp"
#include "lhc/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lhc {

struct SuiteOptions {
	int depth = 3;
	int samples = 20;
	std::uint64_t seed = 1;
};

struct SuiteResult {
	std::string suite;
	Report report;
	double elapsed_ms = 0;
};

// Suite names in the order `all` runs them.
const std::vector<std::string> &suite_names();
bool is_suite(const std::string &name);

SuiteResult run_suite(const Workspace &ws, const std::string &name, const SuiteOptions &opt);
// name may be "all"
std::vector<SuiteResult> run_suites(const Workspace &ws, const std::string &name, const SuiteOptions &opt);

} // namespace lhc
