#include "threept/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace threept {

FockVector FockVector::vacuum(int vcomp)
{
	return basis({}, vcomp);
}

FockVector FockVector::basis(Monomial mono, int vcomp, const Scalar& c)
{
	if (vcomp < 0 || vcomp > 1)
		throw std::invalid_argument("FockVector: V component must be 0 or 1");
	std::sort(mono.begin(), mono.end());
	Monomial merged;
	for (const auto& [var, e] : mono) {
		if (e <= 0)
			throw std::invalid_argument("FockVector: exponents must be positive");
		if (!merged.empty() && merged.back().first == var)
			merged.back().second += e;
		else
			merged.emplace_back(var, e);
	}
	FockVector r;
	r.add_term({std::move(merged), vcomp}, c);
	return r;
}

void FockVector::add_term(const FockBasis& b, const Scalar& c)
{
	if (threept::is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace(b, c);
	if (!inserted) {
		it->second += c;
		if (threept::is_zero(it->second))
			terms_.erase(it);
	}
}

std::set<FockVar> FockVector::variables() const
{
	std::set<FockVar> out;
	for (const auto& [b, c] : terms_)
		for (const auto& [var, e] : b.mono)
			out.insert(var);
	return out;
}

FockVector FockVector::mul_var(const FockVar& v) const
{
	FockVector r;
	for (const auto& [b, c] : terms_) {
		FockBasis nb = b;
		auto it = std::lower_bound(nb.mono.begin(), nb.mono.end(), v,
		                           [](const auto& entry, const FockVar& key) { return entry.first < key; });
		if (it != nb.mono.end() && it->first == v)
			++it->second;
		else
			nb.mono.insert(it, {v, 1});
		r.add_term(nb, c);
	}
	return r;
}

FockVector FockVector::diff_var(const FockVar& v) const
{
	FockVector r;
	for (const auto& [b, c] : terms_) {
		auto it = std::lower_bound(b.mono.begin(), b.mono.end(), v,
		                           [](const auto& entry, const FockVar& key) { return entry.first < key; });
		if (it == b.mono.end() || !(it->first == v))
			continue;
		FockBasis nb = b;
		auto nit = nb.mono.begin() + (it - b.mono.begin());
		int e = nit->second;
		if (e == 1)
			nb.mono.erase(nit);
		else
			--nit->second;
		r.add_term(nb, c * e);
	}
	return r;
}

FockVector& FockVector::operator+=(const FockVector& o)
{
	for (const auto& [b, c] : o.terms_)
		add_term(b, c);
	return *this;
}

FockVector& FockVector::operator-=(const FockVector& o)
{
	for (const auto& [b, c] : o.terms_)
		add_term(b, -c);
	return *this;
}

FockVector& FockVector::operator*=(const Scalar& s)
{
	if (threept::is_zero(s)) {
		terms_.clear();
		return *this;
	}
	for (auto& [b, c] : terms_)
		c *= s;
	return *this;
}

namespace {

const char* family_name(VarFamily f)
{
	switch (f) {
	case VarFamily::x:
		return "x";
	case VarFamily::x1:
		return "x1";
	case VarFamily::y:
		return "y";
	case VarFamily::y1:
		return "y1";
	}
	return "?";
}

} // namespace

std::string to_string(const FockVector& v)
{
	if (v.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [b, c] : v.terms()) {
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		first = false;
		Scalar mag = abs(c);
		if (mag != 1)
			os << to_string(mag) << "*";
		for (const auto& [var, e] : b.mono) {
			os << family_name(var.fam) << "_{" << var.index << "}";
			if (e != 1)
				os << "^" << e;
			os << "*";
		}
		os << "v" << b.vcomp;
	}
	return os.str();
}

bool valid_fock_vector(const FockVector& v)
{
	for (const auto& var : v.variables())
		if ((var.fam == VarFamily::y || var.fam == VarFamily::y1) && var.index >= 0)
			return false;
	return true;
}

FockVector apply_oscillator(const OscillatorMode& mode, int r, const FockVector& v)
{
	const int n = mode.index;
	switch (mode.fam) {
	case ModeFamily::a:
	case ModeFamily::a1: {
		VarFamily fam = mode.fam == ModeFamily::a ? VarFamily::x : VarFamily::x1;
		if (r == 0 && n >= 0)
			return v.diff_var({fam, n});
		return v.mul_var({fam, n});
	}
	case ModeFamily::a_star:
	case ModeFamily::a1_star: {
		VarFamily fam = mode.fam == ModeFamily::a_star ? VarFamily::x : VarFamily::x1;
		if (r == 0 && n <= 0)
			return v.mul_var({fam, -n});
		return Scalar(-1) * v.diff_var({fam, -n});
	}
	case ModeFamily::one0:
		return v;
	default:
		throw std::invalid_argument("apply_oscillator: Heisenberg mode given");
	}
}

FockVector apply_heisenberg(const OscillatorMode& mode, const HeisenbergParams& p, const FockVector& v)
{
	const int n = mode.index;
	switch (mode.fam) {
	case ModeFamily::b:
		if (n < 0)
			return v.mul_var({VarFamily::y, n});
		if (n > 0)
			return (-2 * n * p.kappa0) * v.diff_var({VarFamily::y, -n});
		return p.B0 * v;
	case ModeFamily::b1: {
		if (n < 0)
			return v.mul_var({VarFamily::y1, n});
		FockVector r = (-(2 + 2 * n) * p.kappa0) * v.diff_var({VarFamily::y1, -2 - n}) +
		               (-4 * (1 + 2 * n) * p.kappa0) * v.diff_var({VarFamily::y1, -1 - n});
		if (n == 0) {
			// B1 on V: v0 -> B1_00 v0 + B1_01 v1, v1 -> B1_10 v0 + B1_11 v1
			for (const auto& [b, c] : v.terms()) {
				FockBasis b0{b.mono, 0}, b1{b.mono, 1};
				if (b.vcomp == 0) {
					r.add_term(b0, c * p.B1_00);
					r.add_term(b1, c * p.B1_01);
				} else {
					r.add_term(b0, c * p.B1_10);
					r.add_term(b1, c * p.B1_00);
				}
			}
		}
		return r;
	}
	case ModeFamily::one0:
		return p.kappa0 * v;
	case ModeFamily::one1:
		return p.chi1 * v;
	default:
		throw std::invalid_argument("apply_heisenberg: oscillator mode given");
	}
}

FockVector apply_mode_op(const OscillatorMode& mode, int r, const HeisenbergParams& p, const FockVector& v)
{
	switch (mode.fam) {
	case ModeFamily::b:
	case ModeFamily::b1:
	case ModeFamily::one0:
	case ModeFamily::one1:
		return apply_heisenberg(mode, p, v);
	default:
		return apply_oscillator(mode, r, v);
	}
}

} // namespace threept
