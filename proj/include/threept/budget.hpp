#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace threept {

/// Raised when an iterative procedure exceeds its step budget. Always a bug
/// signal, never an expected outcome.
class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Counts steps and throws BudgetExceeded once the limit is passed.
class StepBudget {
public:
	StepBudget(std::size_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}

	void tick(std::size_t n = 1)
	{
		used_ += n;
		if (used_ > limit_)
			throw BudgetExceeded(what_ + ": step budget of " + std::to_string(limit_) + " exceeded");
	}

	std::size_t used() const { return used_; }

private:
	std::size_t limit_;
	std::size_t used_ = 0;
	std::string what_;
};

} // namespace threept
