#include "lhc/report.hpp"

#include <algorithm>

namespace lhc {

void Report::fail(Violation v)
{
	++failures_;
	if (stored_.size() < kMaxStored)
		stored_.push_back(std::move(v));
}

void Report::merge(const Report &o)
{
	checks_ += o.checks_;
	failures_ += o.failures_;
	for (const auto &v : o.stored_)
		if (stored_.size() < kMaxStored)
			stored_.push_back(v);
}

bool Report::mentions(const std::string &identity) const
{
	return std::any_of(stored_.begin(), stored_.end(), [&](const Violation &v) { return v.identity == identity; });
}

} // namespace lhc
