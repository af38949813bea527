#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace bgv {

using Int = boost::multiprecision::cpp_int;

/// A fiber curve class (d1, d2). The coefficient of the third banana
/// component is always 1 and is carried implicitly.
struct ClassVector {
	int d1 = 0;
	int d2 = 0;
	auto operator<=>(const ClassVector&) const = default;
};

/// Rectangular truncation window: exponent pairs (a, b) with a <= d1 and
/// b <= d2 are tracked exactly, everything else is discarded.
struct Trunc {
	int d1 = 0;
	int d2 = 0;
	auto operator<=>(const Trunc&) const = default;
};

/// Truncated bivariate formal power series in x, y over arbitrary-precision
/// integers. Kept in sparse canonical form: no stored coefficient is zero and
/// no stored exponent pair exceeds the truncation window, so structural
/// equality of the coefficient tables is semantic equality.
struct BiSeries {
	Trunc trunc;
	std::map<std::pair<int, int>, Int> coeffs;

	BiSeries() = default;
	explicit BiSeries(Trunc t) : trunc(t) {}

	/// Accumulates c onto the (a, b) coefficient. Terms outside the window
	/// are dropped, terms that cancel to zero are erased.
	void add_term(int a, int b, const Int& c);

	/// Coefficient at (a, b), zero if absent. No window check; use
	/// bgv::coeff for the checked variant.
	Int at(int a, int b) const;

	bool operator==(const BiSeries&) const = default;
};

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);

/// The constant series 1 at the given truncation.
BiSeries bi_one(Trunc t);

/// Product of two series sharing a truncation bound. Throws
/// std::invalid_argument on a bound mismatch; callers reconcile with
/// bgv::truncated first.
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);

/// Restricts s to a (componentwise smaller or equal) window.
BiSeries truncated(const BiSeries& s, Trunc t);

/// Expansion of (1 - x^e1 y^e2)^{-power} = sum_k binom(k+power-1, power-1)
/// x^{k e1} y^{k e2}. Throws std::invalid_argument for (e1, e2) = (0, 0),
/// whose constant term would diverge.
BiSeries geom_inverse(int e1, int e2, int power, Trunc t);

/// One factor (1 + sign * x^a y^b)^power of a formal product. power may be
/// negative; sign is +1 or -1.
struct ProductFactor {
	int sign = 1;
	int a = 0;
	int b = 0;
	int power = 1;
};

/// Pull-style factor stream. Returns nullopt when exhausted. Factors must
/// come in weakly increasing total base degree a + b, so the expansion can
/// stop once a + b exceeds the window diagonal.
using FactorGen = std::function<std::optional<ProductFactor>()>;

/// Exact truncated expansion of a (formally infinite) product of factors.
/// Factors whose base monomial does not fit the window are inert and
/// skipped; a factor with exponent (0, 0) throws std::invalid_argument.
BiSeries product_expand(const FactorGen& next, Trunc t);

/// Checked coefficient lookup: throws std::out_of_range when `at` lies
/// outside the truncation window.
Int coeff(const BiSeries& s, ClassVector at);

/// The substitution x -> -x, y -> -y: coefficient at (a, b) picks up the
/// sign (-1)^{a+b}.
BiSeries substitute_neg(const BiSeries& s);

/// Stable text form, one "c * x^a y^b" term per line, sorted
/// lexicographically by (a, b). The zero series renders as "0".
std::string render(const BiSeries& s);

/// Factor stream of the banana fiber product
///   prod_{m>=1} (1 +- x^m y^{m-1})^2 (1 +- x^{m-1} y^m)^2 (1 - x^m y^m)^{-4}
/// with inner sign -1 when signed_form is set, +1 otherwise.
FactorGen banana_factors(bool signed_form);

/// Expanded naive product (counts admissible configurations per class).
BiSeries banana_product_naive(Trunc t);

/// Expanded signed product (naive with the (-1)^{d1+d2} sign folded in).
BiSeries banana_product_signed(Trunc t);

/// Laurent series in q and p: q-exponents are >= 0 and truncated at qtrunc,
/// p-exponents may be negative with finite support per q level. Sparse
/// canonical form as in BiSeries.
struct LaurentQP {
	int qtrunc = 0;
	std::map<std::pair<int, int>, Int> coeffs;

	LaurentQP() = default;
	explicit LaurentQP(int qt) : qtrunc(qt) {}

	void add_term(int qe, int pe, const Int& c);
	Int at(int qe, int pe) const;

	bool operator==(const LaurentQP&) const = default;
};

LaurentQP qp_one(int qtrunc);
LaurentQP qp_mul(const LaurentQP& a, const LaurentQP& b);

/// Checked lookup; throws std::out_of_range for qe > qtrunc or qe < 0.
Int qp_coeff(const LaurentQP& s, int qe, int pe);

}  // namespace bgv
