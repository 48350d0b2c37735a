#include "threept/verify.hpp"

#include "threept/formal_dist.hpp"

#include "json.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace threept {

namespace {

std::string clip(const std::string& s, std::size_t n = 240)
{
	return s.size() <= n ? s : s.substr(0, n) + "...";
}

CheckRecord rec(std::string suite, std::string relation, int m, int n, std::string vector, bool pass,
                std::string expected, std::string actual, std::string discrepancy = {}, std::string stage = "1")
{
	CheckRecord r;
	r.suite = std::move(suite);
	r.relation = std::move(relation);
	r.m = m;
	r.n = n;
	r.vector = std::move(vector);
	r.pass = pass;
	r.expected = clip(expected);
	r.actual = clip(actual);
	r.discrepancy = clip(discrepancy);
	r.stage = std::move(stage);
	return r;
}

std::vector<int> orderings(const SuiteConfig& cfg)
{
	if (cfg.r)
		return {*cfg.r};
	return {0, 1};
}

std::string omega_pair(const OmegaClass& a)
{
	return to_string(a);
}

} // namespace

void CheckReport::merge(CheckReport other)
{
	for (auto& r : other.records)
		records.push_back(std::move(r));
	for (auto& r : other.cocycle)
		cocycle.push_back(std::move(r));
	for (auto& r : other.center_action)
		center_action.push_back(std::move(r));
	for (auto& s : other.notes)
		notes.push_back(std::move(s));
}

void CheckReport::finalize()
{
	std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
		return std::tie(a.suite, a.stage, a.relation, a.m, a.n, a.vector) <
		       std::tie(b.suite, b.stage, b.relation, b.m, b.n, b.vector);
	});
	std::stable_sort(cocycle.begin(), cocycle.end(), [](const CocycleRow& a, const CocycleRow& b) {
		return std::tie(a.r, a.relation, a.m, a.n) < std::tie(b.r, b.relation, b.m, b.n);
	});
	std::stable_sort(center_action.begin(), center_action.end(), [](const CenterActionRow& a, const CenterActionRow& b) {
		return std::tie(a.w, a.basis, a.k) < std::tie(b.w, b.basis, b.k);
	});
}

std::size_t CheckReport::count(bool pass, const std::string& stage) const
{
	return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) {
		return r.pass == pass && r.stage == stage;
	}));
}

bool SuiteConfig::wants(const std::string& suite) const
{
	return suites.empty() || std::find(suites.begin(), suites.end(), suite) != suites.end();
}

const std::vector<std::string>& suite_names()
{
	static const std::vector<std::string> names = {"mu",         "d3",      "center",   "jacobi", "relations",
	                                               "heisenberg", "current", "virasoro", "gauge"};
	return names;
}

int DeterministicRng::uniform(int lo, int hi)
{
	const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
	const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
	std::uint64_t x;
	do {
		x = gen_();
	} while (x >= limit);
	return lo + static_cast<int>(x % span);
}

std::vector<TestVector> test_vectors(const SuiteConfig& cfg)
{
	std::vector<TestVector> out = {{"vac0", FockVector::vacuum(0)}, {"vac1", FockVector::vacuum(1)}};
	DeterministicRng rng(cfg.seed);
	for (int i = 0; i < cfg.vectors; ++i) {
		FockVector v;
		int nterms = rng.uniform(1, 3);
		for (int t = 0; t < nterms; ++t) {
			int deg = rng.uniform(0, cfg.degree);
			Monomial mono;
			for (int d = 0; d < deg; ++d) {
				auto fam = static_cast<VarFamily>(rng.uniform(0, 3));
				int idx = (fam == VarFamily::x || fam == VarFamily::x1) ? rng.uniform(-4, 4) : rng.uniform(-4, -1);
				mono.push_back({{fam, idx}, 1});
			}
			int vcomp = rng.uniform(0, 1);
			int c = rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1);
			v += FockVector::basis(mono, vcomp, c);
		}
		if (v.is_zero())
			v = FockVector::vacuum(0);
		out.push_back({"rand" + std::to_string(i), v});
	}
	return out;
}

FockVector apply_tau(const CurrentElem& c, const FockVector& v, const RealizationParams& p)
{
	FockVector out;
	std::map<CurrentGen, FieldExpr> cache;
	for (const auto& [key, coef] : c.terms) {
		CurrentGen g = current_gen(key.x, key.w);
		auto it = cache.find(g);
		if (it == cache.end())
			it = cache.emplace(g, tau(g, p)).first;
		out += coef * apply_mode(it->second, key.k, v, p);
	}
	out += (c.center.c0 * tau_center(0, p) + c.center.c1 * tau_center(1, p)) * v;
	return out;
}

FockVector apply_pi(const WittElem& w, const FockVector& v, const RealizationParams& p)
{
	FockVector out;
	const FieldExpr dbar = pi_vir(VirGen::dbar, p), dbar1 = pi_vir(VirGen::dbar1, p);
	// d_k = -dbar_(k-1), d1_k = -dbar1_(k-1)
	for (const auto& [key, c] : w.coef.terms())
		out += (-c) * apply_mode(key.w ? dbar : dbar1, key.k - 1, v, p);
	return out;
}

CheckReport check_mu(int range)
{
	CheckReport rep;
	for (int k = -range; k <= range; ++k) {
		for (int l = -range; l <= range; ++l) {
			auto cmp = [&](const std::string& rel, const OmegaClass& expected, const OmegaClass& actual) {
				rep.add(rec("mu", rel, k, l, "-", expected == actual, omega_pair(expected), omega_pair(actual),
				            omega_pair(actual - expected)));
			};
			cmp("t^k d(t^l u) = mu_{k,l} w1", {0, mu(k, l)}, reduce_oracle(RElem::t(k), RElem::monomial(l, 1)));
			cmp("t^k d(t^l)", {reduce_tk_dtl(k, l), 0}, reduce_oracle(RElem::t(k), RElem::t(l)));
			cmp("t^k u d(t^l u)", {reduce_tku_dtlu(k, l), 0},
			    reduce_oracle(RElem::monomial(k, 1), RElem::monomial(l, 1)));
			cmp("t^k u d(t^l)", reduce(RElem::monomial(k, 1), RElem::t(l)),
			    reduce_oracle(RElem::monomial(k, 1), RElem::t(l)));
		}
	}
	return rep;
}

CheckReport check_d3(int range)
{
	CheckReport rep;
	const Automorphism id = Automorphism::identity(), psi = Automorphism::psi(), tau2 = Automorphism::tau2();
	for (int k = -range; k <= range; ++k) {
		for (int w = 0; w < 2; ++w) {
			RElem f = RElem::monomial(k, w);
			auto cmp = [&](const std::string& rel, const RElem& expected, const RElem& actual) {
				rep.add(rec("d3", rel, k, w, "-", expected == actual, to_string(expected), to_string(actual),
				            to_string(actual - expected)));
			};
			cmp("psi^2 = id", f, psi.apply(psi.apply(f)));
			cmp("tau2^3 = id", f, tau2.apply(tau2.apply(tau2.apply(f))));
			cmp("psi tau2 psi = tau2^2", tau2.apply(tau2.apply(f)), psi.apply(tau2.apply(psi.apply(f))));
		}
	}
	const std::vector<Automorphism> group = {id, psi, tau2, tau2 * tau2, psi * tau2, psi * tau2 * tau2};
	for (std::size_t gi = 0; gi < group.size(); ++gi) {
		const auto& g = group[gi];
		for (int k1 = -3; k1 <= 3; ++k1)
			for (int k2 = -3; k2 <= 3; ++k2)
				for (int w = 0; w < 4; ++w) {
					RElem f1 = RElem::monomial(k1, w & 1), f2 = RElem::monomial(k2, w >> 1);
					RElem lhs = g.apply(f1 * f2), rhs = g.apply(f1) * g.apply(f2);
					rep.add(rec("d3", "multiplicative " + g.label(), k1, k2, std::to_string(w), lhs == rhs,
					            to_string(rhs), to_string(lhs), to_string(lhs - rhs)));
				}
		RElem rel = g.img_u() * g.img_u() - g.img_t() * g.img_t() - 4 * g.img_t();
		rep.add(rec("d3", "g(u)^2 - g(t)^2 - 4g(t) = 0 for " + g.label(), 0, 0, "-", rel.is_zero(), "0",
		            to_string(rel)));
	}
	auto ch = d3_character();
	std::string got = to_string(ch[0]) + ", " + to_string(ch[1]) + ", " + to_string(ch[2]);
	rep.add(rec("d3", "character on Omega/dR", 0, 0, "-", ch[0] == 2 && ch[1] == 0 && ch[2] == -1, "2, 0, -1", got));
	const RElem one(1);
	RElem s = phi_image(SGen::s), s_inv = phi_image(SGen::s_inv), s1_inv = phi_image(SGen::s_minus_1_inv);
	rep.add(rec("d3", "phi(s) phi(s^-1) = 1", 0, 0, "-", s * s_inv == one, "1", to_string(s * s_inv)));
	RElem p = (s - one) * s1_inv;
	rep.add(rec("d3", "(phi(s) - 1) phi((s-1)^-1) = 1", 0, 0, "-", p == one, "1", to_string(p)));
	return rep;
}

CheckReport check_center(int range)
{
	CheckReport rep;
	const int R = 3;
	for (int kd = -2; kd <= 2; ++kd) {
		for (int wd = 0; wd < 2; ++wd) {
			Derivation d{RElem::monomial(kd, wd)};
			for (int k = -R; k <= R; ++k)
				for (int l = -R; l <= R; ++l)
					for (int w = 0; w < 4; ++w) {
						RElem f = RElem::monomial(k, w & 1), g = RElem::monomial(l, w >> 1);
						OmegaClass before = der_action(d, reduce(f, g));
						OmegaClass after = reduce(apply_derivation(d, f), g) + reduce(f, apply_derivation(d, g));
						rep.add(rec("center", "der_action well defined, d = " + to_string(d.coef) + " D", k, l,
						            std::to_string(w), before == after, omega_pair(after), omega_pair(before),
						            omega_pair(before - after)));
					}
		}
	}
	for (int k = -R; k <= R; ++k)
		for (int l = -R; l <= R; ++l)
			for (int w = 0; w < 4; ++w) {
				RElem f = RElem::monomial(k, w & 1), g = RElem::monomial(l, w >> 1);
				OmegaClass s = reduce(f, g) + reduce(g, f);
				rep.add(rec("center", "[f dg] + [g df] = 0", k, l, std::to_string(w), s.is_zero(), "0", omega_pair(s)));
			}
	for (int k = -range; k <= range; ++k) {
		for (int w = 0; w < 2; ++w) {
			for (int basis = 0; basis < 2; ++basis) {
				OmegaClass om = basis == 0 ? OmegaClass{1, 0} : OmegaClass{0, 1};
				OmegaClass got = der_action({RElem::monomial(k, w)}, om);
				OmegaClass plus = der_action_table(k, w, basis, 1), minus = der_action_table(k, w, basis, -1);
				std::string rel = std::string("t^k") + (w ? " u" : "") + " D(w" + std::to_string(basis) + ")";
				rep.add(rec("center", rel + " vs table (+ sign)", k, w, "-", got == plus, omega_pair(plus),
				            omega_pair(got), omega_pair(got - plus), "2"));
				rep.add(rec("center", rel + " vs table (- sign)", k, w, "-", got == minus, omega_pair(minus),
				            omega_pair(got), omega_pair(got - minus), "2"));
				rep.center_action.push_back({k, w, basis, omega_pair(got), omega_pair(plus), omega_pair(minus)});
			}
		}
	}
	return rep;
}

CheckReport check_jacobi(int range, const FormConfig& form, CenterAction center)
{
	CheckReport rep;
	std::vector<GaugeElem> cur, witt;
	std::vector<std::string> cur_name, witt_name;
	for (Sl2 x : {Sl2::e, Sl2::f, Sl2::h})
		for (int w = 0; w < 2; ++w)
			for (int k = -range; k <= range; ++k) {
				cur.push_back(GaugeElem::from(CurrentElem::basis(x, k, w)));
				cur_name.push_back(std::string(sl2_name(x)) + (w ? "'" : "") + "@t^" + std::to_string(k));
			}
	for (int w = 0; w < 2; ++w)
		for (int k = -range; k <= range; ++k) {
			witt.push_back(GaugeElem::from(w ? WittElem::d(k) : WittElem::d1(k)));
			witt_name.push_back((w ? "d@" : "d1@") + std::to_string(k));
		}
	const std::string tag = center == CenterAction::trivial ? "" : " [derivation center action]";
	auto check = [&](const std::string& kind, const GaugeElem& a, const GaugeElem& b, const GaugeElem& c,
	                 const std::string& label) {
		GaugeElem def = jacobi_defect(a, b, c, form, center);
		rep.add(rec("jacobi", kind + "(" + label + ")" + tag, 0, 0, "-", def.is_zero(), "0", to_string(def)));
	};
	const std::size_t nc = cur.size(), nw = witt.size();
	for (std::size_t i = 0; i < nc; ++i)
		for (std::size_t j = i; j < nc; ++j)
			for (std::size_t k = j; k < nc; ++k)
				check("ccc", cur[i], cur[j], cur[k], cur_name[i] + ", " + cur_name[j] + ", " + cur_name[k]);
	for (std::size_t a = 0; a < nw; ++a)
		for (std::size_t i = 0; i < nc; ++i)
			for (std::size_t j = i; j < nc; ++j)
				check("wcc", witt[a], cur[i], cur[j], witt_name[a] + ", " + cur_name[i] + ", " + cur_name[j]);
	for (std::size_t a = 0; a < nw; ++a)
		for (std::size_t b = a; b < nw; ++b)
			for (std::size_t i = 0; i < nc; ++i)
				check("wwc", witt[a], witt[b], cur[i], witt_name[a] + ", " + witt_name[b] + ", " + cur_name[i]);
	for (std::size_t a = 0; a < nw; ++a)
		for (std::size_t b = a; b < nw; ++b)
			for (std::size_t c = b; c < nw; ++c)
				check("www", witt[a], witt[b], witt[c], witt_name[a] + ", " + witt_name[b] + ", " + witt_name[c]);
	return rep;
}

namespace {

struct GaugeRel {
	std::string name;
	VirGen a;
	int uflag;
};

const GaugeRel& gauge_relation(VirGen a, int uflag)
{
	static const GaugeRel rels[4] = {{"currentalgebra1", VirGen::dbar1, 1},
	                                 {"currentalgebra2", VirGen::dbar1, 0},
	                                 {"currentalgebra3", VirGen::dbar, 1},
	                                 {"currentalgebra4", VirGen::dbar, 0}};
	for (const auto& r : rels)
		if (r.a == a && r.uflag == uflag)
			return r;
	throw std::logic_error("gauge_relation");
}

/// Field part of a currentalgebra mode bracket as a current element with sl2 label x.
CurrentElem formal_current(const std::vector<ModeTerm>& ts, Sl2 x)
{
	CurrentElem c;
	for (const auto& t : ts) {
		if (t.central)
			throw std::logic_error("unexpected central term in current relation");
		c.add_term({x, t.index, t.target == "x'" ? 1 : 0}, t.coef);
	}
	return c;
}

WittElem vir_mode(VirGen g, int m)
{
	return g == VirGen::dbar ? WittElem::dbar(m) : WittElem::dbar1(m);
}

const char* vir_name(VirGen g)
{
	return g == VirGen::dbar ? "dbar" : "dbar1";
}

} // namespace

CheckReport check_relations(int range)
{
	CheckReport rep;
	const WeightRegistry reg = WeightRegistry::standard();
	for (VirGen a : {VirGen::dbar1, VirGen::dbar}) {
		for (int uflag = 0; uflag < 2; ++uflag) {
			const GaugeRel& gr = gauge_relation(a, uflag);
			for (int m = -range; m <= range; ++m)
				for (int n = -range; n <= range; ++n) {
					CurrentElem formal = formal_current(mode_bracket(lookup_relation(gr.name), m, n, reg), Sl2::e);
					CurrentElem abstract = witt_on_current(vir_mode(a, m), CurrentElem::basis(Sl2::e, n, uflag));
					rep.add(rec("relations", gr.name + " vs witt_on_current", m, n, "-", formal == abstract,
					            to_string(abstract), to_string(formal), to_string(formal - abstract)));
				}
		}
	}
	for (int m = -5; m <= 5; ++m)
		for (int n = -5; n <= 5; ++n)
			for (int wd = 0; wd < 2; ++wd)
				for (int wx = 0; wx < 2; ++wx) {
					WittElem d = wd ? WittElem::d(m) : WittElem::d1(m);
					CurrentElem got = witt_on_current(d, CurrentElem::basis(Sl2::h, n, wx));
					CurrentElem lem = witt_on_current_closed(m, wd, Sl2::h, n, wx);
					std::string rel = std::string("[") + (wd ? "d" : "d1") + "_m, " + (wx ? "x'" : "x") + "_n] closed form";
					rep.add(rec("relations", rel, m, n, "-", got == lem, to_string(lem), to_string(got),
					            to_string(got - lem)));
				}
	for (int m = -6; m <= 6; ++m)
		for (int n = -6; n <= 6; ++n) {
			auto central_value = [&](const std::string& name) {
				Scalar s = 0;
				for (const auto& t : mode_bracket(lookup_relation(name), m, n, reg))
					s += t.coef;
				return s;
			};
			Scalar bb = m + n == 0 ? Scalar(-2 * m) : Scalar(0);
			Scalar b1b1 = 0;
			if (m + n == -2)
				b1b1 += 2 * (n + 1);
			if (m + n == -1)
				b1b1 += 2 * (4 * n + 2);
			Scalar got = central_value("bosonrelations.bb");
			rep.add(rec("relations", "[b_m, b_n] = -2m delta_{m+n,0} one0", m, n, "-", got == bb, to_string(bb),
			            to_string(got)));
			got = central_value("bosonrelations.b1b1");
			rep.add(rec("relations", "[b1_m, b1_n] = 2((n+1)delta_{m+n,-2} + (4n+2)delta_{m+n,-1}) one0", m, n, "-",
			            got == b1b1, to_string(b1b1), to_string(got)));
			got = central_value("bosonrelations.bb1");
			rep.add(rec("relations", "[b_m, b1_n] = 2 mu_{m,n} one1", m, n, "-", got == 2 * mu(m, n),
			            to_string(2 * mu(m, n)), to_string(got)));
		}
	const std::pair<const char*, std::pair<VirGen, VirGen>> vir[3] = {{"eezw", {VirGen::dbar1, VirGen::dbar1}},
	                                                                  {"ddzw", {VirGen::dbar, VirGen::dbar}},
	                                                                  {"dezw", {VirGen::dbar, VirGen::dbar1}}};
	for (const auto& [name, gens] : vir)
		for (int m = -range; m <= range; ++m)
			for (int n = -range; n <= range; ++n) {
				WittElem got;
				for (const auto& t : mode_bracket(lookup_relation(name), m, n, reg))
					if (!t.central)
						got = got + t.coef * vir_mode(t.target == "dbar" ? VirGen::dbar : VirGen::dbar1, t.index);
				WittElem expected = bracket_witt(vir_mode(gens.first, m), vir_mode(gens.second, n));
				rep.add(rec("relations", std::string(name) + " field part vs bracket_witt", m, n, "-", got == expected,
				            to_string(expected), to_string(got), to_string(got - expected)));
			}
	const int N = 12;
	auto s = sqrt_series(N);
	std::vector<Scalar> sq(N + 1, Scalar(0));
	for (int i = 0; i <= N; ++i)
		for (int j = 0; i + j <= N; ++j)
			sq[i + j] += s[i] * s[j];
	bool ok = sq[0] == 1 && sq[1] == 1;
	for (int i = 2; i <= N; ++i)
		ok = ok && is_zero(sq[i]);
	rep.add(rec("relations", "sqrt(1+z)^2 = 1 + z through degree 12", 0, 0, "-", ok, "1 + z", ok ? "1 + z" : "mismatch"));
	for (int n = 0; n <= N; ++n) {
		Scalar b = binomial(Scalar(1, 2), n);
		rep.add(rec("relations", "sqrt series coefficient vs binomial(1/2, n)", n, 0, "-", b == s[n], to_string(b),
		            to_string(s[n])));
	}
	return rep;
}

namespace {

std::vector<Monomial> monomials(const std::vector<FockVar>& vars, int degree)
{
	std::vector<Monomial> out = {{}};
	std::vector<Monomial> frontier = {{}};
	for (int d = 1; d <= degree; ++d) {
		std::vector<Monomial> next;
		for (const auto& mono : frontier) {
			// extend with variables not before the last one, keeping sorted order
			std::size_t start = 0;
			if (!mono.empty())
				start = static_cast<std::size_t>(
				    std::find(vars.begin(), vars.end(), mono.back().first) - vars.begin());
			for (std::size_t i = start; i < vars.size(); ++i) {
				Monomial m = mono;
				if (!m.empty() && m.back().first == vars[i])
					++m.back().second;
				else
					m.push_back({vars[i], 1});
				next.push_back(m);
			}
		}
		out.insert(out.end(), next.begin(), next.end());
		frontier = std::move(next);
	}
	return out;
}

const char* mode_family_name(ModeFamily f)
{
	switch (f) {
	case ModeFamily::a:
		return "a";
	case ModeFamily::a_star:
		return "a*";
	case ModeFamily::a1:
		return "a1";
	case ModeFamily::a1_star:
		return "a1*";
	case ModeFamily::b:
		return "b";
	case ModeFamily::b1:
		return "b1";
	case ModeFamily::one0:
		return "one0";
	case ModeFamily::one1:
		return "one1";
	}
	return "?";
}

} // namespace

CheckReport check_heisenberg(const SuiteConfig& cfg)
{
	CheckReport rep;
	const int M = cfg.osc_modes;
	const HeisenbergParams& hp = cfg.params.heis;

	std::vector<FockVar> xvars;
	for (VarFamily fam : {VarFamily::x, VarFamily::x1})
		for (int i = -M; i <= M; ++i)
			xvars.push_back({fam, i});
	std::vector<FockVector> osc_vectors;
	for (auto& mono : monomials(xvars, cfg.osc_degree))
		osc_vectors.push_back(FockVector::basis(mono, 0));
	const std::string osc_id = "x-monomials(deg<=" + std::to_string(cfg.osc_degree) + ", " +
	                           std::to_string(osc_vectors.size()) + ")";

	const ModeFamily osc[4] = {ModeFamily::a, ModeFamily::a_star, ModeFamily::a1, ModeFamily::a1_star};
	auto partner = [](ModeFamily f, ModeFamily g) {
		return (f == ModeFamily::a && g == ModeFamily::a_star) || (f == ModeFamily::a1 && g == ModeFamily::a1_star);
	};
	for (int r : orderings(cfg)) {
		for (ModeFamily f : osc)
			for (ModeFamily g : osc)
				for (int m = -M; m <= M; ++m)
					for (int n = -M; n <= M; ++n) {
						Scalar expected = 0;
						if (m + n == 0 && partner(f, g))
							expected = 1;
						if (m + n == 0 && partner(g, f))
							expected = -1;
						bool ok = true;
						std::string bad_exp, bad_act;
						for (const auto& v : osc_vectors) {
							FockVector got = apply_oscillator({f, m}, r, apply_oscillator({g, n}, r, v)) -
							                 apply_oscillator({g, n}, r, apply_oscillator({f, m}, r, v));
							if (!(got == expected * v)) {
								ok = false;
								bad_exp = to_string(expected * v);
								bad_act = to_string(got);
								break;
							}
						}
						std::string rel = std::string("[") + mode_family_name(f) + "_m, " + mode_family_name(g) +
						                  "_n] r=" + std::to_string(r);
						rep.add(rec("heisenberg", rel, m, n, osc_id, ok, ok ? to_string(expected) + "*v" : bad_exp,
						            ok ? to_string(expected) + "*v" : bad_act));
					}
	}

	std::vector<FockVar> yvars;
	for (VarFamily fam : {VarFamily::y, VarFamily::y1})
		for (int i = -M; i <= -1; ++i)
			yvars.push_back({fam, i});
	std::vector<FockVector> heis_vectors;
	for (auto& mono : monomials(yvars, cfg.osc_degree))
		for (int vc = 0; vc < 2; ++vc)
			heis_vectors.push_back(FockVector::basis(mono, vc));
	const std::string heis_id = "y-monomials(deg<=" + std::to_string(cfg.osc_degree) + ", " +
	                            std::to_string(heis_vectors.size()) + ")";
	const WeightRegistry reg = WeightRegistry::standard();
	auto central = [&](const std::string& rel, int m, int n) {
		Scalar s = 0;
		for (const auto& t : mode_bracket(lookup_relation(rel), m, n, reg))
			s += t.coef * (t.target == "one0" ? hp.kappa0 : hp.chi1);
		return s;
	};
	const ModeFamily heis[2] = {ModeFamily::b, ModeFamily::b1};
	for (ModeFamily f : heis)
		for (ModeFamily g : heis)
			for (int m = -M; m <= M; ++m)
				for (int n = -M; n <= M; ++n) {
					Scalar expected;
					if (f == ModeFamily::b && g == ModeFamily::b)
						expected = central("bosonrelations.bb", m, n);
					else if (f == ModeFamily::b1 && g == ModeFamily::b1)
						expected = central("bosonrelations.b1b1", m, n);
					else if (f == ModeFamily::b)
						expected = central("bosonrelations.bb1", m, n);
					else
						expected = -central("bosonrelations.bb1", n, m);
					bool ok = true;
					std::string bad_exp, bad_act;
					for (const auto& v : heis_vectors) {
						FockVector got = apply_heisenberg({f, m}, hp, apply_heisenberg({g, n}, hp, v)) -
						                 apply_heisenberg({g, n}, hp, apply_heisenberg({f, m}, hp, v));
						if (!(got == expected * v)) {
							ok = false;
							bad_exp = to_string(expected * v);
							bad_act = to_string(got);
							break;
						}
					}
					std::string rel = std::string("[") + mode_family_name(f) + "_m, " + mode_family_name(g) + "_n]";
					rep.add(rec("heisenberg", rel, m, n, heis_id, ok, ok ? to_string(expected) + "*v" : bad_exp,
					            ok ? to_string(expected) + "*v" : bad_act));
				}

	const auto vecs = test_vectors(cfg);
	for (int r : orderings(cfg))
		for (ModeFamily f : osc)
			for (ModeFamily g : heis)
				for (int m = -2; m <= 2; ++m)
					for (int n = -2; n <= 2; ++n)
						for (const auto& tv : vecs) {
							FockVector got = apply_mode_op({f, m}, r, hp, apply_mode_op({g, n}, r, hp, tv.v)) -
							                 apply_mode_op({g, n}, r, hp, apply_mode_op({f, m}, r, hp, tv.v));
							std::string rel = std::string("[") + mode_family_name(f) + "_m, " +
							                  mode_family_name(g) + "_n] r=" + std::to_string(r);
							rep.add(rec("heisenberg", rel, m, n, tv.id, got.is_zero(), "0", to_string(got)));
						}
	return rep;
}

namespace {

const CurrentGen kCurrentGens[6] = {CurrentGen::e, CurrentGen::f, CurrentGen::h,
                                    CurrentGen::e1, CurrentGen::f1, CurrentGen::h1};

CheckReport current_at(const SuiteConfig& cfg, const Scalar& scale, int r, const std::vector<TestVector>& vecs)
{
	CheckReport rep;
	RealizationParams p = cfg.params;
	p.r = r;
	p.form.scale = scale;
	std::map<CurrentGen, FieldExpr> taus;
	for (CurrentGen g : kCurrentGens)
		taus[g] = tau(g, p);
	const int M = cfg.modes;
	for (CurrentGen A : kCurrentGens)
		for (CurrentGen B : kCurrentGens)
			for (int m = -M; m <= M; ++m)
				for (int n = -M; n <= M; ++n) {
					CurrentElem br = bracket_current(CurrentElem::basis(current_gen_sl2(A), m, current_gen_uflag(A)),
					                                 CurrentElem::basis(current_gen_sl2(B), n, current_gen_uflag(B)),
					                                 p.form);
					std::string rel = std::string("[tau(") + current_gen_name(A) + ")_m, tau(" + current_gen_name(B) +
					                  ")_n] r=" + std::to_string(r);
					for (const auto& tv : vecs) {
						FockVector got = commutator_mode(taus[A], taus[B], m, n, tv.v, p);
						FockVector expected = apply_tau(br, tv.v, p);
						rep.add(rec("current", rel, m, n, tv.id, got == expected, to_string(expected), to_string(got),
						            to_string(got - expected)));
					}
				}
	return rep;
}

} // namespace

std::optional<Scalar> calibrate_form_scale(const SuiteConfig& cfg)
{
	const auto vecs = test_vectors(cfg);
	for (int s : {1, 4}) {
		bool ok = true;
		for (int r : orderings(cfg))
			ok = ok && current_at(cfg, s, r, vecs).stage1_ok();
		if (ok)
			return Scalar(s);
	}
	return std::nullopt;
}

CheckReport check_current_rep(const SuiteConfig& cfg)
{
	CheckReport rep;
	const auto vecs = test_vectors(cfg);
	if (cfg.form_scale) {
		for (int r : orderings(cfg))
			rep.merge(current_at(cfg, *cfg.form_scale, r, vecs));
		rep.notes.push_back("current: form scale fixed at " + to_string(*cfg.form_scale));
		return rep;
	}
	std::map<int, CheckReport> runs;
	std::optional<int> chosen;
	for (int s : {1, 4}) {
		CheckReport at;
		for (int r : orderings(cfg)) {
			CheckReport one = current_at(cfg, s, r, vecs);
			std::size_t fails = one.count(false);
			rep.add(rec("current", "form scale calibration r=" + std::to_string(r), s, 0, "all", fails == 0,
			            "0 failures", std::to_string(fails) + " failures", {}, "calibration"));
			at.merge(std::move(one));
		}
		if (!chosen && at.stage1_ok())
			chosen = s;
		runs.emplace(s, std::move(at));
	}
	int use = chosen.value_or(1);
	rep.merge(std::move(runs.at(use)));
	rep.notes.push_back("current: calibrated form scale " + std::to_string(use) +
	                    (chosen ? "" : " (no candidate scale passed; reporting scale 1)"));
	return rep;
}

CheckReport check_virasoro_rep(const SuiteConfig& cfg)
{
	CheckReport rep;
	const auto vecs = test_vectors(cfg);
	const WeightRegistry reg = WeightRegistry::standard();
	const int M = cfg.modes;
	for (int r : orderings(cfg)) {
		RealizationParams p = cfg.params;
		p.r = r;
		const FieldExpr pis[2] = {pi_vir(VirGen::dbar, p), pi_vir(VirGen::dbar1, p)};
		const VirGen gens[2] = {VirGen::dbar, VirGen::dbar1};
		for (int ia = 0; ia < 2; ++ia)
			for (int ib = 0; ib < 2; ++ib) {
				VirGen A = gens[ia], B = gens[ib];
				for (int m = -M; m <= M; ++m)
					for (int n = -M; n <= M; ++n) {
						WittElem br = bracket_witt(vir_mode(A, m), vir_mode(B, n));
						std::string rel = std::string("[pi(") + vir_name(A) + ")_m, pi(" + vir_name(B) +
						                  ")_n] r=" + std::to_string(r);
						std::optional<Scalar> common;
						bool uniform = true, all_scalar = true;
						for (const auto& tv : vecs) {
							FockVector residual = commutator_mode(pis[ia], pis[ib], m, n, tv.v, p) - apply_pi(br, tv.v, p);
							Scalar s = 0;
							if (!residual.is_zero()) {
								const auto& [b0, c0] = *tv.v.terms().begin();
								auto it = residual.terms().find(b0);
								s = it == residual.terms().end() ? Scalar(0) : it->second / c0;
							}
							bool scalar = residual == s * tv.v;
							all_scalar = all_scalar && scalar;
							if (scalar) {
								if (!common)
									common = s;
								else if (*common != s)
									uniform = false;
							}
							rep.add(rec("virasoro", rel + " minus pi(witt bracket) is scalar", m, n, tv.id, scalar,
							            "scalar*v", scalar ? to_string(s) + "*v" : to_string(residual),
							            scalar ? "" : to_string(residual - s * tv.v)));
						}
						Scalar measured = common.value_or(0);
						rep.add(rec("virasoro", rel + " central scalar uniform across vectors", m, n, "all",
						            uniform && all_scalar, "uniform", uniform ? to_string(measured) : "varies"));

						// library relation: [dbar1,dbar1] eezw, [dbar,dbar] ddzw, [dbar,dbar1] dezw
						std::string name;
						bool swapped = false;
						if (A == VirGen::dbar1 && B == VirGen::dbar1)
							name = "eezw";
						else if (A == VirGen::dbar && B == VirGen::dbar)
							name = "ddzw";
						else {
							name = "dezw";
							swapped = A == VirGen::dbar1;
						}
						Scalar predicted = 0;
						auto terms = swapped ? mode_bracket(lookup_relation(name), n, m, reg)
						                     : mode_bracket(lookup_relation(name), m, n, reg);
						for (const auto& t : terms)
							if (t.central)
								predicted += t.coef * pi_center(t.target == "c1" ? 1 : 2, p);
						if (swapped)
							predicted = -predicted;
						rep.add(rec("virasoro", rel + " central scalar vs " + name, m, n, "all", measured == predicted,
						            to_string(predicted), to_string(measured), to_string(measured - predicted), "2"));
						rep.cocycle.push_back({r, rel, m, n, measured, predicted});
					}
			}
	}
	return rep;
}

CheckReport check_gauge(const SuiteConfig& cfg)
{
	CheckReport rep;
	RealizationParams p = cfg.params;
	p.r = 1;
	const Scalar& k0 = p.heis.kappa0;
	bool constraints = p.satisfies_gauge_constraints() && p.nu * k0 == Scalar(-1, 2);
	rep.add(rec("gauge", "parameter constraints (r=1, nu kappa0 = -1/2, zeta = mu = gamma2 = chi1 = 0, "
	                     "gamma1 = -1/(4 kappa0), gamma = -P/(4 kappa0))",
	            0, 0, "-", constraints, "satisfied", constraints ? "satisfied" : "violated"));
	const auto vecs = test_vectors(cfg);
	const WeightRegistry reg = WeightRegistry::standard();
	const int M = cfg.modes;
	std::map<CurrentGen, FieldExpr> taus;
	for (CurrentGen g : kCurrentGens)
		taus[g] = tau(g, p);
	for (VirGen A : {VirGen::dbar, VirGen::dbar1}) {
		const FieldExpr piA = pi_vir(A, p);
		for (CurrentGen X : kCurrentGens) {
			const Sl2 x = current_gen_sl2(X);
			const int uflag = current_gen_uflag(X);
			const GaugeRel& gr = gauge_relation(A, uflag);
			for (int m = -M; m <= M; ++m)
				for (int n = -M; n <= M; ++n) {
					CurrentElem formal = formal_current(mode_bracket(lookup_relation(gr.name), m, n, reg), x);
					CurrentElem abstract = witt_on_current(vir_mode(A, m), CurrentElem::basis(x, n, uflag), cfg.center);
					std::string rel = std::string("[pi(") + vir_name(A) + ")_m, tau(" + current_gen_name(X) + ")_n] " +
					                  gr.name;
					rep.add(rec("gauge", rel + ": relation vs witt_on_current", m, n, "-", formal == abstract,
					            to_string(abstract), to_string(formal), to_string(formal - abstract)));
					for (const auto& tv : vecs) {
						FockVector got = commutator_mode(piA, taus[X], m, n, tv.v, p);
						FockVector via_rel = apply_tau(formal, tv.v, p);
						FockVector via_abs = formal == abstract ? via_rel : apply_tau(abstract, tv.v, p);
						bool ok = got == via_rel && got == via_abs;
						rep.add(rec("gauge", rel, m, n, tv.id, ok, to_string(via_rel), to_string(got),
						            to_string(got - via_rel)));
					}
				}
		}
	}
	return rep;
}

CheckReport run_suites(const SuiteConfig& cfg)
{
	CheckReport rep;
	FormConfig form;
	form.scale = cfg.form_scale.value_or(1);
	if (cfg.wants("mu"))
		rep.merge(check_mu(cfg.mu_range));
	if (cfg.wants("d3"))
		rep.merge(check_d3(cfg.d3_range));
	if (cfg.wants("center"))
		rep.merge(check_center(cfg.d3_range));
	if (cfg.wants("jacobi")) {
		rep.merge(check_jacobi(cfg.jacobi_range, form, CenterAction::trivial));
		rep.merge(check_jacobi(cfg.jacobi_range, form, CenterAction::derivation));
	}
	if (cfg.wants("relations"))
		rep.merge(check_relations(cfg.relation_range));
	if (cfg.wants("heisenberg"))
		rep.merge(check_heisenberg(cfg));
	if (cfg.wants("current"))
		rep.merge(check_current_rep(cfg));
	if (cfg.wants("virasoro"))
		rep.merge(check_virasoro_rep(cfg));
	if (cfg.wants("gauge"))
		rep.merge(check_gauge(cfg));
	rep.finalize();
	return rep;
}

namespace {

struct SuiteTally {
	std::size_t pass1 = 0, fail1 = 0, pass2 = 0, fail2 = 0, other = 0;
};

std::map<std::string, SuiteTally> tally(const CheckReport& rep)
{
	std::map<std::string, SuiteTally> out;
	for (const auto& r : rep.records) {
		auto& t = out[r.suite];
		if (r.stage == "1")
			(r.pass ? t.pass1 : t.fail1)++;
		else if (r.stage == "2")
			(r.pass ? t.pass2 : t.fail2)++;
		else
			t.other++;
	}
	return out;
}

} // namespace

std::string report_json(const CheckReport& rep, const SuiteConfig& cfg)
{
	using nlohmann::ordered_json;
	ordered_json j;
	ordered_json config;
	config["modes"] = cfg.modes;
	config["degree"] = cfg.degree;
	config["vectors"] = cfg.vectors;
	config["seed"] = cfg.seed;
	config["osc_modes"] = cfg.osc_modes;
	config["osc_degree"] = cfg.osc_degree;
	config["r"] = cfg.r ? ordered_json(*cfg.r) : ordered_json("both");
	config["kappa0"] = to_string(cfg.params.heis.kappa0);
	config["b0"] = to_string(cfg.params.heis.B0);
	config["b1"] = {to_string(cfg.params.heis.B1_00), to_string(cfg.params.heis.B1_01),
	                to_string(cfg.params.heis.B1_10)};
	config["form_scale"] = cfg.form_scale ? ordered_json(to_string(*cfg.form_scale)) : ordered_json("auto");
	config["center_action"] = cfg.center == CenterAction::trivial ? "trivial" : "derivation";
	j["config"] = config;

	ordered_json summary = ordered_json::object();
	for (const auto& [suite, t] : tally(rep))
		summary[suite] = {{"stage1_pass", t.pass1}, {"stage1_fail", t.fail1}, {"stage2_pass", t.pass2},
		                  {"stage2_fail", t.fail2}, {"calibration", t.other}};
	j["summary"] = summary;
	j["stage1_ok"] = rep.stage1_ok();
	j["notes"] = rep.notes;

	ordered_json records = ordered_json::array();
	for (const auto& r : rep.records)
		records.push_back({{"suite", r.suite},
		                   {"relation", r.relation},
		                   {"m", r.m},
		                   {"n", r.n},
		                   {"vector", r.vector},
		                   {"status", r.pass ? "pass" : "fail"},
		                   {"expected", r.expected},
		                   {"actual", r.actual},
		                   {"discrepancy", r.discrepancy},
		                   {"stage", r.stage}});
	j["records"] = records;

	ordered_json coc = ordered_json::array();
	for (const auto& c : rep.cocycle)
		coc.push_back({{"r", c.r},
		               {"relation", c.relation},
		               {"m", c.m},
		               {"n", c.n},
		               {"measured", to_string(c.measured)},
		               {"predicted", to_string(c.predicted)}});
	j["measured_cocycle"] = coc;

	ordered_json ca = ordered_json::array();
	for (const auto& c : rep.center_action)
		ca.push_back({{"k", c.k},
		              {"u_flag", c.w},
		              {"basis", "w" + std::to_string(c.basis)},
		              {"computed", c.computed},
		              {"table_plus", c.table_plus},
		              {"table_minus", c.table_minus}});
	j["center_action"] = ca;
	return j.dump(1) + "\n";
}

std::string report_text(const CheckReport& rep)
{
	std::ostringstream os;
	for (const auto& [suite, t] : tally(rep)) {
		os << suite << ": stage1 " << t.pass1 << " pass, " << t.fail1 << " fail";
		if (t.pass2 + t.fail2)
			os << "; stage2 " << t.pass2 << " pass, " << t.fail2 << " fail";
		if (t.other)
			os << "; calibration records " << t.other;
		os << "\n";
	}
	for (const auto& n : rep.notes)
		os << "note: " << n << "\n";
	std::size_t shown = 0;
	for (const auto& r : rep.records) {
		if (r.pass || r.stage != "1")
			continue;
		if (shown++ >= 50)
			break;
		os << "FAIL [" << r.suite << "] " << r.relation << " m=" << r.m << " n=" << r.n << " v=" << r.vector
		   << "\n  expected: " << r.expected << "\n  actual:   " << r.actual << "\n";
	}
	bool cocycle_mismatch = std::any_of(rep.cocycle.begin(), rep.cocycle.end(),
	                                    [](const CocycleRow& c) { return c.measured != c.predicted; });
	if (cocycle_mismatch) {
		os << "measured Virasoro cocycle (nonzero or mismatching entries):\n";
		for (const auto& c : rep.cocycle)
			if (!is_zero(c.measured) || !is_zero(c.predicted))
				os << "  " << c.relation << " m=" << c.m << " n=" << c.n << " measured=" << to_string(c.measured)
				   << " stated=" << to_string(c.predicted) << (c.measured == c.predicted ? "" : "  MISMATCH") << "\n";
	}
	bool table_mismatch = std::any_of(rep.center_action.begin(), rep.center_action.end(), [](const CenterActionRow& c) {
		return c.computed != c.table_plus || c.computed != c.table_minus;
	});
	if (table_mismatch) {
		os << "Der(R) action on Omega/dR, computed vs tabulated (+ / - sign variants):\n";
		for (const auto& c : rep.center_action)
			if (c.computed != c.table_plus || c.computed != c.table_minus)
				os << "  t^" << c.k << (c.w ? " u" : "") << " D(w" << c.basis << "): computed " << c.computed
				   << ", table(+) " << c.table_plus << ", table(-) " << c.table_minus << "\n";
	}
	os << (rep.stage1_ok() ? "stage 1: all checks pass\n" : "stage 1: FAILURES present\n");
	return os.str();
}

} // namespace threept
