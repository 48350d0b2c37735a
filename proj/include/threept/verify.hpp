#pragma once

#include "threept/realization.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace threept {

/// One check outcome. `stage` is "1" for checks that decide the exit code,
/// "2" for cross-checks of stated closed forms, "calibration" for form-scale probes.
struct CheckRecord {
	std::string suite;
	std::string relation;
	int m = 0;
	int n = 0;
	std::string vector;
	bool pass = true;
	std::string expected;
	std::string actual;
	std::string discrepancy;
	std::string stage = "1";
};

/// Row of the measured Virasoro cocycle: central scalar of [A_m, B_n] beside
/// the value predicted by the library relation.
struct CocycleRow {
	int r = 0;
	std::string relation;
	int m = 0;
	int n = 0;
	Scalar measured;
	Scalar predicted;
};

/// Tabulated Der(R) action versus first principles.
struct CenterActionRow {
	int k = 0;
	int w = 0;
	int basis = 0;
	std::string computed;
	std::string table_plus;
	std::string table_minus;
};

struct CheckReport {
	std::vector<CheckRecord> records;
	std::vector<CocycleRow> cocycle;
	std::vector<CenterActionRow> center_action;
	std::vector<std::string> notes;

	void add(CheckRecord r) { records.push_back(std::move(r)); }
	void merge(CheckReport other);
	/// Sorts records and tables by key.
	void finalize();

	std::size_t count(bool pass, const std::string& stage = "1") const;
	bool stage1_ok() const { return count(false, "1") == 0; }
};

struct SuiteConfig {
	int modes = 2;             // realization suites use m, n in [-modes, modes]
	int degree = 2;            // random vector degree bound
	int vectors = 8;           // random vector count
	std::uint64_t seed = 42;
	int osc_modes = 4;         // oscillator and Heisenberg suite range
	int osc_degree = 3;        // monomial degree bound there
	int mu_range = 8;
	int d3_range = 6;
	int jacobi_range = 3;
	int relation_range = 4;
	std::optional<int> r;      // restrict to one ordering; both when empty
	std::optional<Scalar> form_scale; // calibrated over {1, 4} when empty
	CenterAction center = CenterAction::trivial;
	RealizationParams params = RealizationParams::gauge(1);
	std::vector<std::string> suites;   // empty = all

	bool wants(const std::string& suite) const;
};

/// All suite names, in run order.
const std::vector<std::string>& suite_names();

struct TestVector {
	std::string id;
	FockVector v;
};

/// |0> (x) v0, |0> (x) v1, then `count` seeded random sparse vectors.
std::vector<TestVector> test_vectors(const SuiteConfig& cfg);

/// Uniform integers from std::mt19937_64 by rejection sampling, so the
/// stream does not depend on the standard library's distributions.
class DeterministicRng {
public:
	explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}
	int uniform(int lo, int hi);

private:
	std::mt19937_64 gen_;
};

CheckReport check_mu(int range);
CheckReport check_d3(int range);
CheckReport check_center(int range);
CheckReport check_jacobi(int range, const FormConfig& form, CenterAction center = CenterAction::trivial);
CheckReport check_relations(int range);
CheckReport check_heisenberg(const SuiteConfig& cfg);
CheckReport check_current_rep(const SuiteConfig& cfg);
CheckReport check_virasoro_rep(const SuiteConfig& cfg);
CheckReport check_gauge(const SuiteConfig& cfg);

/// Runs every suite selected by cfg.
CheckReport run_suites(const SuiteConfig& cfg);

/// Current-algebra element pushed through tau and applied to v.
FockVector apply_tau(const CurrentElem& c, const FockVector& v, const RealizationParams& p);

/// Witt element in the d, d1 basis pushed through pi (via dbar modes).
FockVector apply_pi(const WittElem& w, const FockVector& v, const RealizationParams& p);

/// Calibrated form scale for the current suite: the first of {1, 4} at which
/// every check passes for the orderings in cfg, if any.
std::optional<Scalar> calibrate_form_scale(const SuiteConfig& cfg);

std::string report_json(const CheckReport& rep, const SuiteConfig& cfg);
std::string report_text(const CheckReport& rep);

} // namespace threept
