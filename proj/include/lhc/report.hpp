#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lhc {

struct Violation {
	std::string identity;  // short identity id, e.g. "mp-L-3"
	std::string statement; // the law being checked
	std::string witness;   // inputs at which it fails
	std::string lhs;
	std::string rhs;
};

class Report
{
public:
	static constexpr std::size_t kMaxStored = 64;

	// Records one check; stores a violation when lhs != rhs.
	template <class T>
	bool expect_equal(const std::string &id, const std::string &statement, const T &lhs, const T &rhs,
			  const std::string &witness, const std::string &lhs_text, const std::string &rhs_text)
	{
		++checks_;
		if (lhs == rhs)
			return true;
		fail({id, statement, witness, lhs_text, rhs_text});
		return false;
	}

	void pass() { ++checks_; }
	void fail(Violation v);
	void merge(const Report &o);

	bool ok() const { return failures_ == 0; }
	std::size_t checks() const { return checks_; }
	std::size_t failures() const { return failures_; }
	const std::vector<Violation> &violations() const { return stored_; }
	bool mentions(const std::string &identity) const;

private:
	std::size_t checks_ = 0;
	std::size_t failures_ = 0;
	std::vector<Violation> stored_;
};

} // namespace lhc
