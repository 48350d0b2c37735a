// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include "threept/cli.hpp"
#include "threept/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace threept;

namespace {

struct Outcome {
	bool pass = false;
	std::string detail;
};

std::string counts(const CheckReport& rep)
{
	return std::to_string(rep.count(true)) + " pass, " + std::to_string(rep.count(false)) + " fail";
}

Outcome c1()
{
	auto rep = check_mu(8);
	return {rep.stage1_ok(), "mu and closed forms vs oracle on [-8,8]^2: " + counts(rep)};
}

Outcome c2()
{
	auto rep = check_d3(6);
	return {rep.stage1_ok(), "D3 relations, multiplicativity, character (2, 0, -1): " + counts(rep)};
}

Outcome c3()
{
	auto triv = check_jacobi(3, FormConfig{}, CenterAction::trivial);
	auto der = check_jacobi(3, FormConfig{}, CenterAction::derivation);
	return {triv.stage1_ok() && der.stage1_ok(),
	        "Jacobi on [-3,3] triples: trivial center " + counts(triv) + "; derivation center " + counts(der)};
}

Outcome c4()
{
	SuiteConfig cfg;
	auto rep = check_heisenberg(cfg);
	return {rep.stage1_ok(), "oscillator and Heisenberg relations, both orderings: " + counts(rep)};
}

Outcome c5()
{
	SuiteConfig cfg;
	auto rep = check_current_rep(cfg);
	std::size_t f0 = 0, f1 = 0, p0 = 0, p1 = 0;
	for (const auto& r : rep.records) {
		if (r.stage != "1")
			continue;
		bool r0 = r.relation.find("r=0") != std::string::npos;
		(r.pass ? (r0 ? p0 : p1) : (r0 ? f0 : f1))++;
	}
	std::string detail = "36 pairs, m,n in [-2,2], 10 vectors: r=0 " + std::to_string(p0) + " pass " +
	                     std::to_string(f0) + " fail; r=1 " + std::to_string(p1) + " pass " + std::to_string(f1) + " fail";
	for (const auto& n : rep.notes)
		detail += "; " + n;
	return {rep.stage1_ok(), detail};
}

Outcome c6()
{
	SuiteConfig cfg;
	auto rep = check_virasoro_rep(cfg);
	std::ostringstream os;
	os << "stage 1 " << counts(rep) << "; stage 2 (stated central terms) " << rep.count(true, "2") << " agree, "
	   << rep.count(false, "2") << " disagree";
	for (const char* rel : {"eezw", "ddzw", "dezw"}) {
		std::size_t bad = 0;
		for (const auto& r : rep.records)
			if (r.stage == "2" && !r.pass && r.relation.find(std::string("vs ") + rel) != std::string::npos)
				++bad;
		os << "; " << rel << (bad ? " mismatch(" + std::to_string(bad) + ")" : " ok");
	}
	if (rep.count(false, "2")) {
		os << "\n    measured cocycle where it differs from the stated one:";
		for (const auto& c : rep.cocycle)
			if (c.measured != c.predicted)
				os << "\n      " << c.relation << " m=" << c.m << " n=" << c.n << " measured " << to_string(c.measured)
				   << " stated " << to_string(c.predicted);
	}
	return {rep.stage1_ok(), os.str()};
}

Outcome c7()
{
	SuiteConfig cfg;
	auto rep = check_gauge(cfg);
	return {rep.stage1_ok(), "gauge action, 12 pairs, three-way agreement: " + counts(rep)};
}

Outcome c8()
{
	auto rep = check_relations(4);
	std::size_t fail = 0, pass = 0;
	for (const auto& r : rep.records)
		if (r.relation.rfind("currentalgebra", 0) == 0)
			(r.pass ? pass : fail)++;
	return {fail == 0 && pass > 0, "currentalgebra1-4 mode brackets vs witt_on_current on [-4,4]: " +
	                                   std::to_string(pass) + " pass, " + std::to_string(fail) + " fail"};
}

Outcome c9()
{
	auto t0 = std::chrono::steady_clock::now();
	std::ostringstream out1, err1, out2, err2;
	int code1 = cli::run({"verify", "--format", "json"}, out1, err1);
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	int code2 = cli::run({"verify", "--format", "json"}, out2, err2);
	bool same = out1.str() == out2.str();
	bool ok = code1 == 0 && code2 == 0 && same && secs < 1800;
	std::ostringstream os;
	os << "default verify: exit " << code1 << ", " << secs << " s, repeat run " << (same ? "identical" : "DIFFERS");
	if (!err1.str().empty())
		os << ", stderr: " << err1.str();
	return {ok, os.str()};
}

} // namespace

int main()
{
	const std::pair<const char*, std::function<Outcome()>> criteria[] = {
	    {"mu-formula equivalence", c1},       {"D3 structure", c2},
	    {"Jacobi identity", c3},              {"Heisenberg/oscillator relations", c4},
	    {"current representation", c5},       {"Virasoro representation", c6},
	    {"gauge action", c7},                {"consistency triangle", c8},
	    {"full default verify run", c9},
	};
	int failures = 0, index = 0;
	for (const auto& [name, fn] : criteria) {
		++index;
		Outcome o;
		try {
			o = fn();
		} catch (const std::exception& e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		failures += !o.pass;
		std::printf("criterion %d %s: %s  %s\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
		std::fflush(stdout);
	}
	std::printf("%d of %d criteria pass\n", index - failures, index);
	return failures == 0 ? 0 : 1;
}
