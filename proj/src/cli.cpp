#include "threept/cli.hpp"

#include "threept/budget.hpp"
#include "threept/formal_dist.hpp"
#include "threept/kahler.hpp"
#include "threept/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace threept::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_commas(const std::string& s)
{
	std::vector<std::string> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ','))
		if (!item.empty())
			out.push_back(item);
	return out;
}

struct Flags {
	std::optional<int> r;
	std::string kappa0 = "1", b0 = "0", b1 = "0,0,0";
	int modes = 2, degree = 2, vectors = 8;
	std::uint64_t seed = 42;
	std::vector<std::string> suites;
	std::string form_scale;
	std::string center = "trivial";
	std::string out;
	std::string format;
};

SuiteConfig make_config(const Flags& f)
{
	SuiteConfig cfg;
	Scalar kappa0 = parse_scalar(f.kappa0);
	if (is_zero(kappa0))
		throw UsageError("--kappa0 must be nonzero");
	cfg.params = RealizationParams::gauge(kappa0);
	cfg.params.heis.B0 = parse_scalar(f.b0);
	auto b1 = split_commas(f.b1);
	if (b1.size() != 3)
		throw UsageError("--b1 expects three rationals B1_00,B1_01,B1_10");
	cfg.params.heis.B1_00 = parse_scalar(b1[0]);
	cfg.params.heis.B1_01 = parse_scalar(b1[1]);
	cfg.params.heis.B1_10 = parse_scalar(b1[2]);
	if (f.r) {
		cfg.r = *f.r;
		cfg.params.r = *f.r;
	}
	if (f.modes < 0 || f.degree < 0 || f.vectors < 0)
		throw UsageError("--modes, --degree and --vectors must be non-negative");
	cfg.modes = f.modes;
	cfg.degree = f.degree;
	cfg.vectors = f.vectors;
	cfg.seed = f.seed;
	for (const auto& s : f.suites)
		for (const auto& name : split_commas(s)) {
			const auto& known = suite_names();
			if (std::find(known.begin(), known.end(), name) == known.end())
				throw UsageError("unknown suite '" + name + "'");
			cfg.suites.push_back(name);
		}
	if (!f.form_scale.empty()) {
		Scalar s = parse_scalar(f.form_scale);
		if (sgn(s) <= 0)
			throw UsageError("--form-scale must be positive");
		cfg.form_scale = s;
	}
	if (f.center == "trivial")
		cfg.center = CenterAction::trivial;
	else if (f.center == "derivation")
		cfg.center = CenterAction::derivation;
	else
		throw UsageError("--center must be 'trivial' or 'derivation'");
	return cfg;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
	if (path.empty()) {
		out << text;
		return;
	}
	std::ofstream file(path);
	if (!file)
		throw UsageError("cannot open " + path + " for writing");
	file << text;
}

std::string json_text(const ordered_json& j)
{
	return j.dump(1) + "\n";
}

std::string label_current(const CurrentKey& key)
{
	std::string s = sl2_name(key.x);
	if (key.w)
		s += "'";
	return s + "@t^" + std::to_string(key.k);
}

ordered_json coordinates(const GaugeElem& g)
{
	ordered_json j = ordered_json::object();
	for (const auto& [key, c] : g.vir.witt.coef.terms())
		j[(key.w ? "d@" : "d1@") + std::to_string(key.k)] = to_string(c);
	if (!is_zero(g.vir.c1))
		j["c1"] = to_string(g.vir.c1);
	if (!is_zero(g.vir.c2))
		j["c2"] = to_string(g.vir.c2);
	for (const auto& [key, c] : g.cur.terms)
		j[label_current(key)] = to_string(c);
	if (!is_zero(g.cur.center.c0))
		j["w0"] = to_string(g.cur.center.c0);
	if (!is_zero(g.cur.center.c1))
		j["w1"] = to_string(g.cur.center.c1);
	return j;
}

std::string relation_output(const std::string& name, int m, int n, bool json)
{
	auto terms = mode_bracket(lookup_relation(name), m, n, WeightRegistry::standard());
	if (json) {
		ordered_json arr = ordered_json::array();
		for (const auto& t : terms)
			arr.push_back({{"target", t.target}, {"central", t.central}, {"index", t.index}, {"coef", to_string(t.coef)}});
		return json_text({{"relation", name}, {"m", m}, {"n", n}, {"terms", arr}});
	}
	if (terms.empty())
		return "0\n";
	std::ostringstream os;
	for (const auto& t : terms) {
		os << to_string(t.coef) << "*" << t.target;
		if (!t.central)
			os << "_" << t.index;
		os << "\n";
	}
	return os.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Exact verification engine for the three-point ring and its gauge algebra"};
	app.require_subcommand(1);
	app.fallthrough();

	Flags f;
	app.add_option("--r", f.r, "Fock ordering (0 or 1); both when omitted")->check(CLI::IsMember({0, 1}));
	app.add_option("--kappa0", f.kappa0, "kappa0 as p/q or integer");
	app.add_option("--b0", f.b0, "B0");
	app.add_option("--b1", f.b1, "B1_00,B1_01,B1_10");
	app.add_option("--modes", f.modes, "mode range for realization suites");
	app.add_option("--degree", f.degree, "random vector degree bound");
	app.add_option("--vectors", f.vectors, "number of random test vectors");
	app.add_option("--seed", f.seed, "random vector seed");
	app.add_option("--suite", f.suites, "suites to run, comma separated");
	app.add_option("--form-scale", f.form_scale, "invariant form scale; calibrated when omitted");
	app.add_option("--center", f.center, "Der(R) action on Omega/dR: trivial or derivation");
	app.add_option("--out", f.out, "write output to this file");
	app.add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));

	auto* verify = app.add_subcommand("verify", "run verification suites");

	std::string rf, rg;
	auto* reduce_cmd = app.add_subcommand("reduce", "class of F dG in Omega/dR");
	reduce_cmd->add_option("F", rf)->required();
	reduce_cmd->add_option("G", rg)->required();

	int mu_k = 0;
	auto* mu_cmd = app.add_subcommand("mu-table", "mu_{k,l} for k, l in [-K, K]");
	mu_cmd->add_option("K", mu_k)->required()->check(CLI::NonNegativeNumber);

	std::string ba, bb, brel;
	int bm = 0, bn = 0;
	auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two basis elements");
	bracket_cmd->add_option("A", ba);
	bracket_cmd->add_option("B", bb);
	bracket_cmd->add_option("--relation", brel, "library relation instead of basis labels");
	bracket_cmd->add_option("--m", bm);
	bracket_cmd->add_option("--n", bn);

	auto* char_cmd = app.add_subcommand("char", "D3 character on Omega/dR");

	std::string rname;
	int rm = 0, rn = 0;
	auto* rel_cmd = app.add_subcommand("relation", "mode bracket of a library relation");
	rel_cmd->add_option("NAME", rname)->required();
	rel_cmd->add_option("M", rm)->required();
	rel_cmd->add_option("N", rn)->required();

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}

	try {
		const bool json = f.format == "json";
		SuiteConfig cfg = make_config(f);
		FormConfig form;
		form.scale = cfg.form_scale.value_or(1);

		if (verify->parsed()) {
			CheckReport rep = run_suites(cfg);
			if (json)
				emit(report_json(rep, cfg), f.out, out);
			else
				emit(report_text(rep), f.out, out);
			if (!f.out.empty())
				out << report_text(rep);
			return rep.stage1_ok() ? 0 : 1;
		}
		if (reduce_cmd->parsed()) {
			OmegaClass w = reduce(parse_relem(rf), parse_relem(rg));
			if (json)
				emit(json_text({{"w0", to_string(w.c0)}, {"w1", to_string(w.c1)}}), f.out, out);
			else
				emit(to_string(w) + "\n", f.out, out);
			return 0;
		}
		if (mu_cmd->parsed()) {
			if (f.format == "text") {
				std::ostringstream os;
				for (int k = -mu_k; k <= mu_k; ++k) {
					for (int l = -mu_k; l <= mu_k; ++l)
						os << (l > -mu_k ? "\t" : "") << to_string(mu(k, l));
					os << "\n";
				}
				emit(os.str(), f.out, out);
			} else {
				ordered_json arr = ordered_json::array();
				for (int k = -mu_k; k <= mu_k; ++k)
					for (int l = -mu_k; l <= mu_k; ++l) {
						Scalar v = mu(k, l);
						arr.push_back({{"k", k}, {"l", l}, {"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}});
					}
				emit(json_text(arr), f.out, out);
			}
			return 0;
		}
		if (bracket_cmd->parsed()) {
			if (!brel.empty()) {
				emit(relation_output(brel, bm, bn, json), f.out, out);
				return 0;
			}
			if (ba.empty() || bb.empty())
				throw UsageError("bracket needs two basis labels or --relation");
			GaugeElem g = bracket_gauge(parse_basis_label(ba), parse_basis_label(bb), form, cfg.center);
			if (json)
				emit(json_text({{"a", ba}, {"b", bb}, {"bracket", coordinates(g)}}), f.out, out);
			else
				emit(to_string(g) + "\n", f.out, out);
			return 0;
		}
		if (char_cmd->parsed()) {
			auto ch = d3_character();
			if (json)
				emit(json_text({{"identity", to_string(ch[0])}, {"reflection", to_string(ch[1])},
				                {"rotation", to_string(ch[2])}}),
				     f.out, out);
			else
				emit(to_string(ch[0]) + " " + to_string(ch[1]) + " " + to_string(ch[2]) + "\n", f.out, out);
			return 0;
		}
		if (rel_cmd->parsed()) {
			emit(relation_output(rname, rm, rn, json), f.out, out);
			return 0;
		}
	} catch (const BudgetExceeded& e) {
		err << "error: " << e.what() << "\n";
		return 3;
	} catch (const std::invalid_argument& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::out_of_range& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}

int run(int argc, char** argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return run(args, std::cout, std::cerr);
}

} // namespace threept::cli
