#pragma once

#include "threept/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace threept {

enum class Var { z, w };

/// Coefficient of a relation term: a Laurent polynomial in z or w, optionally
/// times the expansion of (1 + 4/w)^(half_power/2) in powers of 1/w.
struct Coef {
	LaurentPoly poly;
	Var var = Var::w;
	int half_power = 0;

	/// Coefficient of var^p in the expanded series.
	Scalar at(int p) const;
	bool is_series() const { return half_power != 0; }
};

/// A field (with derivative order) or a central generator.
struct TargetRef {
	std::string name;
	int deriv = 0;
	bool central = false;

	static TargetRef field(std::string name, int deriv = 0) { return {std::move(name), deriv, false}; }
	static TargetRef center(std::string name) { return {std::move(name), 0, true}; }
};

/// coef * (d^deriv target)(w) * d_w^j delta(z/w).
struct RelationTerm {
	Coef coef;
	TargetRef target;
	int j = 0;
};

/// [A(z), B(w)] = sum of terms, with delta(z/w) = sum_n z^(-n-1) w^n.
struct LocalRelation {
	std::string name;
	std::string field_a;
	std::string field_b;
	std::vector<RelationTerm> terms;

	std::vector<RelationTerm> central_terms() const;
	std::vector<RelationTerm> field_terms() const;
};

/// Conformal weights: X(z) = sum_m X_m z^(-m-weight).
class WeightRegistry {
public:
	static WeightRegistry standard();

	void set(const std::string& name, int weight) { weights_[name] = weight; }
	bool has(const std::string& name) const { return weights_.count(name) != 0; }
	/// Throws std::invalid_argument for an unregistered name.
	int weight(const std::string& name) const;

private:
	std::map<std::string, int> weights_;
};

/// One output term of a mode bracket: coef * target_index, or coef * central.
struct ModeTerm {
	std::string target;
	bool central = false;
	int index = 0;
	Scalar coef;

	friend bool operator==(const ModeTerm&, const ModeTerm&) = default;
};

/// [A_m, B_n] from the local relation, sorted by (central, target, index),
/// zero coefficients dropped.
std::vector<ModeTerm> mode_bracket(const LocalRelation& rel, int m, int n, const WeightRegistry& reg);

/// Named relations: eezw, ddzw, dezw, currentalgebra1..4,
/// bosonrelations.bb, bosonrelations.b1b1, bosonrelations.bb1.
const std::map<std::string, LocalRelation>& relation_library();

/// Throws std::invalid_argument for an unknown name.
const LocalRelation& lookup_relation(const std::string& name);

/// Taylor coefficients of sqrt(1+z) through degree N.
std::vector<Scalar> sqrt_series(int N);

/// Generalized binomial coefficient binom(a, n) for rational a.
Scalar binomial(const Scalar& a, int n);

std::string to_string(const RelationTerm& t);

} // namespace threept
