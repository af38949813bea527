#include "bgv/partitions.hpp"

#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bgv {

int Partition::size() const
{
	return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::odd_parts() const
{
	int n = 0;
	for (int p : parts) n += p & 1;
	return n;
}

std::string render(const Partition& p)
{
	std::ostringstream os;
	os << '(';
	for (size_t i = 0; i < p.parts.size(); ++i) {
		if (i) os << ',';
		os << p.parts[i];
	}
	os << ')';
	return os.str();
}

bool is_opd(const Partition& p)
{
	for (size_t i = 0; i + 1 < p.parts.size(); ++i)
		if ((p.parts[i] & 1) && p.parts[i] == p.parts[i + 1])
			return false;
	return true;
}

std::pair<int, int> box_bidegree(const Partition& p)
{
	if (!is_opd(p))
		throw std::domain_error(
		    "box_bidegree: partition has a repeated odd part");
	int sz = p.size();
	int op = p.odd_parts();
	return {(sz + op) / 2, (sz - op) / 2};
}

namespace {

/* Extends `cur` with parts <= maxpart until the remaining size and odd-part
 * budgets are exhausted. Parts are chosen largest-first, so the output is
 * lexicographic descending. */
void extend_opd(std::vector<int>& cur, int remaining, int odd_left,
		int maxpart, std::vector<Partition>& out)
{
	if (remaining == 0) {
		if (odd_left == 0) out.push_back(Partition{cur});
		return;
	}
	for (int part = std::min(maxpart, remaining); part >= 1; --part) {
		if (part & 1) {
			if (odd_left == 0) continue;
			/* odd parts are distinct: the next one must be smaller */
			cur.push_back(part);
			extend_opd(cur, remaining - part, odd_left - 1,
				   part - 1, out);
			cur.pop_back();
		} else {
			cur.push_back(part);
			extend_opd(cur, remaining - part, odd_left, part, out);
			cur.pop_back();
		}
	}
}

}  // namespace

std::vector<Partition> enumerate_opd(int dark, int light)
{
	if (dark < 0 || light < 0)
		throw std::invalid_argument("enumerate_opd: negative bidegree");
	std::vector<Partition> out;
	int sz = dark + light;
	int op = dark - light;
	if (op < 0) return out;  // dark boxes always dominate
	std::vector<int> cur;
	extend_opd(cur, sz, op, sz, out);
	return out;
}

Partition conjugate(const Partition& p)
{
	Partition out;
	if (p.parts.empty()) return out;
	for (int row = 1; row <= p.parts.front(); ++row) {
		int len = 0;
		for (int part : p.parts) len += part >= row;
		out.parts.push_back(len);
	}
	return out;
}

Branch opd_to_branch(const Partition& p, BranchKind kind)
{
	if (!is_opd(p))
		throw std::domain_error(
		    "opd_to_branch: partition has a repeated odd part");
	Branch b;
	b.kind = kind;
	for (int row : conjugate(p).parts) b.edges.push_back(Edge{row, 1});
	return b;
}

BiSeries gf_opd_branch(BranchKind kind, Trunc t)
{
	const bool c1_first = starts_on_c1(kind);
	auto n = std::make_shared<int>(1);
	auto step = std::make_shared<int>(0);
	FactorGen gen = [n, step, c1_first]() -> std::optional<ProductFactor> {
		ProductFactor f;
		if (*step == 0) {
			f = c1_first ? ProductFactor{1, *n, *n - 1, 1}
				     : ProductFactor{1, *n - 1, *n, 1};
		} else {
			f = ProductFactor{-1, *n, *n, -1};
		}
		if (++*step == 2) {
			*step = 0;
			++*n;
		}
		return f;
	};
	return product_expand(gen, t);
}

std::map<ClassVector, Int> opd_config_counts(Trunc t)
{
	const int cap = std::max(t.d1, t.d2);
	/* counts[a][b] = number of OPD partitions with bidegree (a, b) */
	std::vector<std::vector<Int>> counts(cap + 1,
					     std::vector<Int>(cap + 1));
	for (int a = 0; a <= cap; ++a)
		for (int b = 0; b <= cap; ++b)
			counts[a][b] = Int(enumerate_opd(a, b).size());

	std::map<ClassVector, Int> acc;
	acc[ClassVector{0, 0}] = 1;
	for (auto kind : kAllBranchKinds) {
		std::map<ClassVector, Int> next;
		for (const auto& [cls, ways] : acc)
			for (int a = 0; a <= cap; ++a)
				for (int b = 0; b <= cap; ++b) {
					if (counts[a][b] == 0) continue;
					ClassVector sum = cls;
					if (starts_on_c1(kind)) {
						sum.d1 += a;
						sum.d2 += b;
					} else {
						sum.d1 += b;
						sum.d2 += a;
					}
					if (sum.d1 > t.d1 || sum.d2 > t.d2)
						continue;
					next[sum] += ways * counts[a][b];
				}
		acc = std::move(next);
	}
	return acc;
}

}  // namespace bgv
