#include "bgv/series.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

namespace bgv {

void BiSeries::add_term(int a, int b, const Int& c)
{
	if (a > trunc.d1 || b > trunc.d2) return;
	if (c == 0) return;
	auto key = std::make_pair(a, b);
	auto it = coeffs.find(key);
	if (it == coeffs.end()) {
		coeffs.emplace(key, c);
		return;
	}
	it->second += c;
	if (it->second == 0) coeffs.erase(it);
}

Int BiSeries::at(int a, int b) const
{
	auto it = coeffs.find(std::make_pair(a, b));
	return it == coeffs.end() ? Int(0) : it->second;
}

BiSeries bi_one(Trunc t)
{
	if (t.d1 < 0 || t.d2 < 0)
		throw std::invalid_argument("bi_one: negative truncation bound");
	BiSeries s(t);
	s.coeffs.emplace(std::make_pair(0, 0), Int(1));
	return s;
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b)
{
	if (a.trunc != b.trunc)
		throw std::invalid_argument(
		    "bi_mul: operands have different truncation bounds");
	BiSeries out(a.trunc);
	for (const auto& [ka, ca] : a.coeffs) {
		if (ka.first > out.trunc.d1 || ka.second > out.trunc.d2) continue;
		for (const auto& [kb, cb] : b.coeffs) {
			int e1 = ka.first + kb.first;
			int e2 = ka.second + kb.second;
			if (e1 > out.trunc.d1 || e2 > out.trunc.d2) continue;
			out.add_term(e1, e2, ca * cb);
		}
	}
	return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
	return bi_mul(a, b);
}

BiSeries operator+(const BiSeries& a, const BiSeries& b)
{
	if (a.trunc != b.trunc)
		throw std::invalid_argument(
		    "operator+: operands have different truncation bounds");
	BiSeries out = a;
	for (const auto& [k, c] : b.coeffs) out.add_term(k.first, k.second, c);
	return out;
}

BiSeries truncated(const BiSeries& s, Trunc t)
{
	BiSeries out(t);
	for (const auto& [k, c] : s.coeffs) out.add_term(k.first, k.second, c);
	return out;
}

BiSeries geom_inverse(int e1, int e2, int power, Trunc t)
{
	if (e1 == 0 && e2 == 0)
		throw std::invalid_argument(
		    "geom_inverse: exponent (0,0) is not invertible");
	if (power < 1) throw std::invalid_argument("geom_inverse: power must be >= 1");
	BiSeries out(t);
	/* binom(k + power - 1, power - 1), built up incrementally in k */
	Int c = 1;
	for (int k = 0;; ++k) {
		int a = k * e1;
		int b = k * e2;
		if (a > t.d1 || b > t.d2) break;
		out.add_term(a, b, c);
		c = c * (k + power) / (k + 1);
	}
	return out;
}

namespace {

/* Expansion of a single factor (1 + sign x^a y^b)^power inside the window. */
BiSeries expand_factor(const ProductFactor& f, Trunc t)
{
	BiSeries out(t);
	Int c = 1;
	for (int k = 0;; ++k) {
		int ea = k * f.a;
		int eb = k * f.b;
		if (ea > t.d1 || eb > t.d2) break;
		Int term = c;
		if (f.power > 0) {
			if (k > f.power) break;
			/* binom(power, k) * sign^k */
			if (f.sign < 0 && (k & 1)) term = -term;
			out.add_term(ea, eb, term);
			c = c * (f.power - k) / (k + 1);
		} else {
			/* binom(-power + k - 1, k) * (-sign)^k */
			if (f.sign > 0 && (k & 1)) term = -term;
			out.add_term(ea, eb, term);
			c = c * (-f.power + k) / (k + 1);
		}
	}
	return out;
}

}  // namespace

BiSeries product_expand(const FactorGen& next, Trunc t)
{
	BiSeries acc = bi_one(t);
	while (auto f = next()) {
		if (f->a == 0 && f->b == 0)
			throw std::invalid_argument(
			    "product_expand: factor with exponent (0,0)");
		if (f->a + f->b > t.d1 + t.d2) break;
		if (f->a > t.d1 || f->b > t.d2) continue;  // provably inert
		if (f->power == 0) continue;
		acc = bi_mul(acc, expand_factor(*f, t));
	}
	return acc;
}

Int coeff(const BiSeries& s, ClassVector at)
{
	if (at.d1 < 0 || at.d2 < 0 || at.d1 > s.trunc.d1 || at.d2 > s.trunc.d2)
		throw std::out_of_range("coeff: class outside truncation window");
	return s.at(at.d1, at.d2);
}

BiSeries substitute_neg(const BiSeries& s)
{
	BiSeries out(s.trunc);
	for (const auto& [k, c] : s.coeffs) {
		if ((k.first + k.second) & 1)
			out.coeffs.emplace(k, -c);
		else
			out.coeffs.emplace(k, c);
	}
	return out;
}

std::string render(const BiSeries& s)
{
	if (s.coeffs.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [k, c] : s.coeffs) {
		if (!first) os << '\n';
		first = false;
		os << c << " * x^" << k.first << " y^" << k.second;
	}
	return os.str();
}

FactorGen banana_factors(bool signed_form)
{
	const int sign = signed_form ? -1 : 1;
	/* Per level m three factors, ordered by base total degree:
	 * (2m-1, 2m-1, 2m). */
	auto m = std::make_shared<int>(1);
	auto step = std::make_shared<int>(0);
	return [m, step, sign]() -> std::optional<ProductFactor> {
		ProductFactor f;
		switch (*step) {
		case 0:
			f = ProductFactor{sign, *m, *m - 1, 2};
			break;
		case 1:
			f = ProductFactor{sign, *m - 1, *m, 2};
			break;
		default:
			f = ProductFactor{-1, *m, *m, -4};
			break;
		}
		if (++*step == 3) {
			*step = 0;
			++*m;
		}
		return f;
	};
}

BiSeries banana_product_naive(Trunc t)
{
	return product_expand(banana_factors(false), t);
}

BiSeries banana_product_signed(Trunc t)
{
	return product_expand(banana_factors(true), t);
}

void LaurentQP::add_term(int qe, int pe, const Int& c)
{
	if (qe > qtrunc || qe < 0) return;
	if (c == 0) return;
	auto key = std::make_pair(qe, pe);
	auto it = coeffs.find(key);
	if (it == coeffs.end()) {
		coeffs.emplace(key, c);
		return;
	}
	it->second += c;
	if (it->second == 0) coeffs.erase(it);
}

Int LaurentQP::at(int qe, int pe) const
{
	auto it = coeffs.find(std::make_pair(qe, pe));
	return it == coeffs.end() ? Int(0) : it->second;
}

LaurentQP qp_one(int qtrunc)
{
	if (qtrunc < 0) throw std::invalid_argument("qp_one: negative qtrunc");
	LaurentQP s(qtrunc);
	s.coeffs.emplace(std::make_pair(0, 0), Int(1));
	return s;
}

LaurentQP qp_mul(const LaurentQP& a, const LaurentQP& b)
{
	if (a.qtrunc != b.qtrunc)
		throw std::invalid_argument("qp_mul: qtrunc mismatch");
	LaurentQP out(a.qtrunc);
	for (const auto& [ka, ca] : a.coeffs)
		for (const auto& [kb, cb] : b.coeffs) {
			int qe = ka.first + kb.first;
			if (qe > out.qtrunc) continue;
			out.add_term(qe, ka.second + kb.second, ca * cb);
		}
	return out;
}

Int qp_coeff(const LaurentQP& s, int qe, int pe)
{
	if (qe < 0 || qe > s.qtrunc)
		throw std::out_of_range("qp_coeff: q exponent outside truncation");
	return s.at(qe, pe);
}

}  // namespace bgv
