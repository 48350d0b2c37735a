#include "threept/algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace threept {

const char* sl2_name(Sl2 x)
{
	switch (x) {
	case Sl2::e:
		return "e";
	case Sl2::f:
		return "f";
	case Sl2::h:
		return "h";
	}
	return "?";
}

CurrentElem CurrentElem::basis(Sl2 x, int k, int w, const Scalar& c)
{
	CurrentElem r;
	r.add_term({x, k, w}, c);
	return r;
}

CurrentElem CurrentElem::tensor(Sl2 x, const RElem& f)
{
	CurrentElem r;
	for (const auto& [key, c] : f.terms())
		r.add_term({x, key.k, key.w}, c);
	return r;
}

void CurrentElem::add_term(const CurrentKey& key, const Scalar& c)
{
	if (threept::is_zero(c))
		return;
	auto [it, inserted] = terms.try_emplace(key, c);
	if (!inserted) {
		it->second += c;
		if (threept::is_zero(it->second))
			terms.erase(it);
	}
}

CurrentElem& CurrentElem::operator+=(const CurrentElem& o)
{
	for (const auto& [key, c] : o.terms)
		add_term(key, c);
	center += o.center;
	return *this;
}

CurrentElem& CurrentElem::operator*=(const Scalar& s)
{
	if (threept::is_zero(s)) {
		terms.clear();
		center = {};
		return *this;
	}
	for (auto& [key, c] : terms)
		c *= s;
	center = s * center;
	return *this;
}

GaugeElem operator+(const GaugeElem& a, const GaugeElem& b)
{
	GaugeElem r;
	r.vir.witt = a.vir.witt + b.vir.witt;
	r.vir.c1 = a.vir.c1 + b.vir.c1;
	r.vir.c2 = a.vir.c2 + b.vir.c2;
	r.cur = a.cur + b.cur;
	return r;
}

GaugeElem operator*(const Scalar& s, const GaugeElem& a)
{
	GaugeElem r;
	r.vir.witt = s * a.vir.witt;
	r.vir.c1 = s * a.vir.c1;
	r.vir.c2 = s * a.vir.c2;
	r.cur = s * a.cur;
	return r;
}

Scalar form_value(Sl2 x, Sl2 y, const FormConfig& form)
{
	if ((x == Sl2::e && y == Sl2::f) || (x == Sl2::f && y == Sl2::e))
		return form.scale;
	if (x == Sl2::h && y == Sl2::h)
		return 2 * form.scale;
	return 0;
}

std::pair<Scalar, Sl2> sl2_bracket(Sl2 x, Sl2 y)
{
	if (x == Sl2::h && y == Sl2::e)
		return {2, Sl2::e};
	if (x == Sl2::e && y == Sl2::h)
		return {-2, Sl2::e};
	if (x == Sl2::h && y == Sl2::f)
		return {-2, Sl2::f};
	if (x == Sl2::f && y == Sl2::h)
		return {2, Sl2::f};
	if (x == Sl2::e && y == Sl2::f)
		return {1, Sl2::h};
	if (x == Sl2::f && y == Sl2::e)
		return {-1, Sl2::h};
	return {0, Sl2::h};
}

CurrentElem bracket_current(const CurrentElem& a, const CurrentElem& b, const FormConfig& form)
{
	CurrentElem r;
	for (const auto& [ka, ca] : a.terms) {
		RElem fa = RElem::monomial(ka.k, ka.w, ca);
		for (const auto& [kb, cb] : b.terms) {
			RElem fb = RElem::monomial(kb.k, kb.w, cb);
			auto [c, z] = sl2_bracket(ka.x, kb.x);
			if (!is_zero(c))
				r += CurrentElem::tensor(z, c * (fa * fb));
			Scalar fv = form_value(ka.x, kb.x, form);
			if (!is_zero(fv))
				r.center += fv * reduce(fa, fb);
		}
	}
	return r;
}

WittElem bracket_witt(const WittElem& a, const WittElem& b)
{
	return {bracket_der({a.coef}, {b.coef}).coef};
}

CurrentElem witt_on_current(const WittElem& d, const CurrentElem& a, CenterAction center)
{
	CurrentElem r;
	if (d.is_zero())
		return r;
	const Derivation der{d.coef};
	for (const auto& [key, c] : a.terms)
		r += CurrentElem::tensor(key.x, apply_derivation(der, RElem::monomial(key.k, key.w, c)));
	if (center == CenterAction::derivation)
		r.center = der_action(der, a.center);
	return r;
}

CurrentElem witt_on_current_closed(int m, int wd, Sl2 x, int n, int wx)
{
	CurrentElem r;
	if (wd == 1 && wx == 0) {
		r.add_term({x, m + n + 1, 0}, n);
		r.add_term({x, m + n, 0}, 4 * n);
	} else if (wd == 1 && wx == 1) {
		r.add_term({x, m + n + 1, 1}, n + 1);
		r.add_term({x, m + n, 1}, 4 * n + 2);
	} else if (wd == 0 && wx == 0) {
		r.add_term({x, m + n - 1, 1}, n);
	} else {
		r.add_term({x, m + n + 1, 0}, n + 1);
		r.add_term({x, m + n, 0}, 4 * n + 2);
	}
	return r;
}

GaugeElem bracket_gauge(const GaugeElem& a, const GaugeElem& b, const FormConfig& form, CenterAction center)
{
	GaugeElem r;
	r.vir.witt = bracket_witt(a.vir.witt, b.vir.witt);
	r.cur = witt_on_current(a.vir.witt, b.cur, center) - witt_on_current(b.vir.witt, a.cur, center) +
	        bracket_current(a.cur, b.cur, form);
	return r;
}

GaugeElem jacobi_defect(const GaugeElem& a, const GaugeElem& b, const GaugeElem& c, const FormConfig& form,
                        CenterAction center)
{
	auto br = [&](const GaugeElem& x, const GaugeElem& y) { return bracket_gauge(x, y, form, center); };
	return br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b);
}

namespace {

int parse_int(std::string_view s, std::string_view label)
{
	std::string str(s);
	size_t used = 0;
	int v = 0;
	try {
		v = std::stoi(str, &used);
	} catch (const std::exception&) {
		used = 0;
	}
	if (str.empty() || used != str.size())
		throw std::invalid_argument("bad index in basis label '" + std::string(label) + "'");
	return v;
}

} // namespace

GaugeElem parse_basis_label(std::string_view label)
{
	if (label == "w0")
		return GaugeElem::from(CurrentElem{{}, {1, 0}});
	if (label == "w1")
		return GaugeElem::from(CurrentElem{{}, {0, 1}});
	if (label == "c1")
		return {{{}, 1, 0}, {}};
	if (label == "c2")
		return {{{}, 0, 1}, {}};
	auto at = label.find('@');
	if (at == std::string_view::npos)
		throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
	std::string_view head = label.substr(0, at), tail = label.substr(at + 1);
	if (head == "d")
		return GaugeElem::from(WittElem::d(parse_int(tail, label)));
	if (head == "d1")
		return GaugeElem::from(WittElem::d1(parse_int(tail, label)));
	if (head == "dbar")
		return GaugeElem::from(WittElem::dbar(parse_int(tail, label)));
	if (head == "dbar1")
		return GaugeElem::from(WittElem::dbar1(parse_int(tail, label)));
	int w = 0;
	if (head.size() == 2 && head[1] == '\'') {
		w = 1;
		head = head.substr(0, 1);
	}
	Sl2 x;
	if (head == "e")
		x = Sl2::e;
	else if (head == "f")
		x = Sl2::f;
	else if (head == "h")
		x = Sl2::h;
	else
		throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
	int k = 1;
	if (tail == "1")
		k = 0;
	else if (tail == "t")
		k = 1;
	else if (tail.substr(0, 2) == "t^")
		k = parse_int(tail.substr(2), label);
	else
		throw std::invalid_argument("bad ring monomial in basis label '" + std::string(label) + "'");
	return GaugeElem::from(CurrentElem::basis(x, k, w));
}

namespace {

void emit(std::ostringstream& os, bool& first, const Scalar& c, const std::string& name)
{
	if (is_zero(c))
		return;
	if (first)
		os << (sgn(c) < 0 ? "-" : "");
	else
		os << (sgn(c) < 0 ? " - " : " + ");
	first = false;
	Scalar mag = abs(c);
	if (mag != 1)
		os << to_string(mag) << "*";
	os << name;
}

void emit_current(std::ostringstream& os, bool& first, const CurrentElem& a)
{
	for (const auto& [key, c] : a.terms)
		emit(os, first, c, std::string(sl2_name(key.x)) + (key.w ? "'" : "") + "@t^" + std::to_string(key.k));
	emit(os, first, a.center.c0, "w0");
	emit(os, first, a.center.c1, "w1");
}

void emit_witt(std::ostringstream& os, bool& first, const WittElem& a)
{
	for (const auto& [key, c] : a.coef.terms())
		emit(os, first, c, (key.w ? "d@" : "d1@") + std::to_string(key.k));
}

} // namespace

std::string to_string(const CurrentElem& a)
{
	std::ostringstream os;
	bool first = true;
	emit_current(os, first, a);
	return first ? "0" : os.str();
}

std::string to_string(const WittElem& a)
{
	std::ostringstream os;
	bool first = true;
	emit_witt(os, first, a);
	return first ? "0" : os.str();
}

std::string to_string(const GaugeElem& a)
{
	std::ostringstream os;
	bool first = true;
	emit_witt(os, first, a.vir.witt);
	emit(os, first, a.vir.c1, "c1");
	emit(os, first, a.vir.c2, "c2");
	emit_current(os, first, a.cur);
	return first ? "0" : os.str();
}

} // namespace threept
