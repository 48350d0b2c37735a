#include "threept/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace threept {

RElem::RElem(const Scalar& c)
{
	add_term({0, 0}, c);
}

RElem RElem::monomial(int k, int w, const Scalar& c)
{
	if (w < 0 || w > 1)
		throw std::invalid_argument("RElem::monomial: u-flag must be 0 or 1");
	RElem r;
	r.add_term({k, w}, c);
	return r;
}

Scalar RElem::coeff(int k, int w) const
{
	auto it = terms_.find({k, w});
	return it == terms_.end() ? Scalar(0) : it->second;
}

void RElem::add_term(const RKey& key, const Scalar& c)
{
	if (threept::is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace(key, c);
	if (!inserted) {
		it->second += c;
		if (threept::is_zero(it->second))
			terms_.erase(it);
	}
}

RElem& RElem::operator+=(const RElem& o)
{
	for (const auto& [key, c] : o.terms_)
		add_term(key, c);
	return *this;
}

RElem& RElem::operator-=(const RElem& o)
{
	for (const auto& [key, c] : o.terms_)
		add_term(key, -c);
	return *this;
}

RElem& RElem::operator*=(const Scalar& s)
{
	if (threept::is_zero(s)) {
		terms_.clear();
		return *this;
	}
	for (auto& [key, c] : terms_)
		c *= s;
	return *this;
}

RElem operator*(const RElem& a, const RElem& b)
{
	RElem r;
	for (const auto& [ka, ca] : a.terms_) {
		for (const auto& [kb, cb] : b.terms_) {
			Scalar c = ca * cb;
			int k = ka.k + kb.k;
			if (ka.w + kb.w < 2) {
				r.add_term({k, ka.w + kb.w}, c);
			} else {
				// u^2 = t^2 + 4t
				r.add_term({k + 2, 0}, c);
				r.add_term({k + 1, 0}, 4 * c);
			}
		}
	}
	return r;
}

RElem mul(const RElem& a, const RElem& b)
{
	return a * b;
}

RElem pow(const RElem& a, int n)
{
	if (n < 0)
		throw std::invalid_argument("pow: negative exponent");
	RElem r = Scalar(1);
	for (int i = 0; i < n; ++i)
		r = r * a;
	return r;
}

std::string to_string(const RElem& f)
{
	if (f.is_zero())
		return "0";
	// u-terms first, then by descending t-degree
	std::vector<std::pair<RKey, Scalar>> terms(f.terms().begin(), f.terms().end());
	std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
		if (a.first.w != b.first.w)
			return a.first.w > b.first.w;
		return a.first.k > b.first.k;
	});
	std::ostringstream os;
	bool first = true;
	for (const auto& [key, c] : terms) {
		Scalar mag = abs(c);
		if (first) {
			if (sgn(c) < 0)
				os << "-";
		} else {
			os << (sgn(c) < 0 ? " - " : " + ");
		}
		first = false;
		std::vector<std::string> factors;
		bool bare = key.k == 0 && key.w == 0;
		if (mag != 1 || bare)
			factors.push_back(to_string(mag));
		if (key.k == 1)
			factors.push_back("t");
		else if (key.k != 0)
			factors.push_back("t^" + std::to_string(key.k));
		if (key.w == 1)
			factors.push_back("u");
		for (size_t i = 0; i < factors.size(); ++i)
			os << (i ? "*" : "") << factors[i];
	}
	return os.str();
}

namespace {

class RParser {
public:
	explicit RParser(std::string_view s) : s_(s) {}

	RElem parse()
	{
		RElem r;
		skip();
		if (pos_ == s_.size())
			fail("empty expression");
		bool first = true;
		while (pos_ < s_.size()) {
			Scalar sign = 1;
			if (peek() == '+' || peek() == '-') {
				sign = peek() == '-' ? -1 : 1;
				++pos_;
				skip();
			} else if (!first) {
				fail("expected '+' or '-'");
			}
			first = false;
			r += sign * term();
			skip();
		}
		return r;
	}

private:
	RElem term()
	{
		RElem r = factor();
		skip();
		while (peek() == '*') {
			++pos_;
			skip();
			r = r * factor();
			skip();
		}
		return r;
	}

	RElem factor()
	{
		char c = peek();
		if (c == 't') {
			++pos_;
			int k = 1;
			skip();
			if (peek() == '^') {
				++pos_;
				skip();
				k = integer();
			}
			return RElem::t(k);
		}
		if (c == 'u') {
			++pos_;
			return RElem::u();
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			size_t start = pos_;
			while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
				++pos_;
			return RElem(parse_scalar(s_.substr(start, pos_ - start)));
		}
		fail("unexpected character");
	}

	int integer()
	{
		bool paren = peek() == '(';
		if (paren)
			++pos_;
		size_t start = pos_;
		if (peek() == '-' || peek() == '+')
			++pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		std::string digits(s_.substr(start, pos_ - start));
		if (digits.empty() || digits == "-" || digits == "+")
			fail("expected integer exponent");
		if (paren) {
			if (peek() != ')')
				fail("expected ')'");
			++pos_;
		}
		return std::stoi(digits);
	}

	char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	[[noreturn]] void fail(const std::string& what) const
	{
		throw std::invalid_argument("cannot parse ring element '" + std::string(s_) + "' at " +
		                            std::to_string(pos_) + ": " + what);
	}

	std::string_view s_;
	size_t pos_ = 0;
};

} // namespace

RElem parse_relem(std::string_view text)
{
	return RParser(text).parse();
}

RElem apply_derivation(const Derivation& d, const RElem& f)
{
	RElem df;
	for (const auto& [key, c] : f.terms()) {
		int k = key.k;
		if (key.w == 0) {
			// D(t^k) = k t^(k-1) u
			df.add_term({k - 1, 1}, c * k);
		} else {
			// D(t^k u) = (k+1) t^(k+1) + (4k+2) t^k
			df.add_term({k + 1, 0}, c * (k + 1));
			df.add_term({k, 0}, c * (4 * k + 2));
		}
	}
	return d.coef * df;
}

Derivation bracket_der(const Derivation& d1, const Derivation& d2)
{
	static const Derivation D{Scalar(1)};
	return {d1.coef * apply_derivation(D, d2.coef) - d2.coef * apply_derivation(D, d1.coef)};
}

Automorphism::Automorphism(RElem t, RElem t_inv, RElem u, std::string label)
    : img_t_(std::move(t)), img_t_inv_(std::move(t_inv)), img_u_(std::move(u)), label_(std::move(label))
{
	if (!(img_t_ * img_t_inv_ == RElem(1)))
		throw std::logic_error("Automorphism " + label_ + ": img_t * img_t_inv != 1");
	if (!(img_u_ * img_u_ == img_t_ * img_t_ + 4 * img_t_))
		throw std::logic_error("Automorphism " + label_ + ": relation u^2 = t^2 + 4t not preserved");
}

Automorphism Automorphism::identity()
{
	return {RElem::t(1), RElem::t(-1), RElem::u(), "id"};
}

Automorphism Automorphism::psi()
{
	const Scalar h(1, 2);
	// psi(t) = (-t^-1 u - 3 - t - u)/2, psi(u) = (t^-1 u - 1 - t - u)/2,
	// psi(t^-1) = (t^2 + 3t - (t+1) u)/2
	RElem t = h * (-RElem::monomial(-1, 1) - RElem(3) - RElem::t() - RElem::u());
	RElem u = h * (RElem::monomial(-1, 1) - RElem(1) - RElem::t() - RElem::u());
	RElem t_inv = h * (RElem::t(2) + 3 * RElem::t() - RElem::monomial(1, 1) - RElem::u());
	return {t, t_inv, u, "psi"};
}

Automorphism Automorphism::tau2()
{
	const Scalar h(1, 2);
	// tau2 agrees with psi on t (both send (s-1)^2/s to s^2/(1-s)) and negates psi(u)
	RElem t = h * (-RElem::monomial(-1, 1) - RElem(3) - RElem::t() - RElem::u());
	RElem u = h * (-RElem::monomial(-1, 1) + RElem::t() + RElem(1) + RElem::u());
	RElem t_inv = h * (RElem::t(2) + 3 * RElem::t() - RElem::monomial(1, 1) - RElem::u());
	return {t, t_inv, u, "tau2"};
}

RElem Automorphism::apply(const RElem& f) const
{
	RElem r;
	for (const auto& [key, c] : f.terms()) {
		RElem img = key.k >= 0 ? pow(img_t_, key.k) : pow(img_t_inv_, -key.k);
		if (key.w == 1)
			img = img * img_u_;
		r += c * img;
	}
	return r;
}

Automorphism operator*(const Automorphism& g, const Automorphism& h)
{
	std::string label = g.label_ == "id" ? h.label_ : h.label_ == "id" ? g.label_ : g.label_ + "*" + h.label_;
	return {g.apply(h.img_t_), g.apply(h.img_t_inv_), g.apply(h.img_u_), label};
}

bool Automorphism::same_map(const Automorphism& o) const
{
	return img_t_ == o.img_t_ && img_t_inv_ == o.img_t_inv_ && img_u_ == o.img_u_;
}

RElem phi_image(SGen gen)
{
	const Scalar h(1, 2);
	switch (gen) {
	case SGen::s:
		return h * (RElem::t() + RElem(2) + RElem::u());
	case SGen::s_inv:
		return h * (RElem::t() + RElem(2) - RElem::u());
	case SGen::s_minus_1_inv:
		return h * (RElem::monomial(-1, 1) - RElem(1));
	}
	throw std::invalid_argument("phi_image: unknown generator");
}

} // namespace threept
