#include "bgv/curveconfig.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bgv {

bool starts_on_c1(BranchKind k)
{
	return k == BranchKind::UpperQ || k == BranchKind::LowerP;
}

bool attaches_at_q(BranchKind k)
{
	return k == BranchKind::UpperQ || k == BranchKind::LowerQ;
}

const char* branch_kind_name(BranchKind k)
{
	switch (k) {
	case BranchKind::UpperQ: return "upper-q";
	case BranchKind::LowerQ: return "lower-q";
	case BranchKind::UpperP: return "upper-p";
	case BranchKind::LowerP: return "lower-p";
	}
	return "?";
}

CurveConfig::CurveConfig()
{
	for (auto k : kAllBranchKinds) branch(k).kind = k;
}

int edge_euler(const Edge& e)
{
	if (e.is_sentinel())
		throw std::invalid_argument(
		    "edge_euler: sentinel edge has no contribution of its own");
	return e.inside * (e.inside + 1) / 2 +
	       e.outside * (e.outside + 1) / 2 - 1;
}

int vertex_euler_3(const VertexLabels& v)
{
	return v.m * v.r + v.s * v.a + v.b * v.n - 1;
}

int vertex_euler_2(int m, int r, int n, int s)
{
	return m * r + std::min(n, s) - 1;
}

VertexLabels with_empty_z_axis(int m, int r, int n, int s)
{
	VertexLabels v;
	v.m = m;
	v.r = r;
	v.n = n;
	v.s = s;
	/* The 0 length kills the larger out-of-plane thickening; b pairs with
	 * n in the zx plane, a pairs with s in the yz plane. */
	if (n >= s) {
		v.b = 0;
		v.a = 1;
	} else {
		v.b = 1;
		v.a = 0;
	}
	return v;
}

namespace {

constexpr Edge kSentinel{0, 1};

/* binom(m+1,2) + binom(n+1,2) - 1; also valid for the sentinel (gives 0). */
int edge_term(const Edge& e)
{
	return e.inside * (e.inside + 1) / 2 + e.outside * (e.outside + 1) / 2 - 1;
}

}  // namespace

int branch_euler_master(const Branch& b)
{
	if (b.empty()) return 1;
	const size_t n = b.edges.size();
	int chi = 1;  // chi(O_{e0})
	for (size_t i = 0; i < n; i += 2) {
		const Edge& e1 = b.edges[i];
		const Edge& e2 = (i + 1 < n) ? b.edges[i + 1] : kSentinel;
		chi += edge_term(e1) + edge_term(e2);
		/* pair vertex p_i: insides meet in the shared plane */
		chi -= vertex_euler_2(e1.inside, e2.inside, e1.outside,
				      e2.outside);
		/* gap vertex q_i to the next pair: outsides meet */
		if (i + 2 < n)
			chi -= vertex_euler_2(e2.outside,
					      b.edges[i + 2].outside,
					      e2.inside, b.edges[i + 2].inside);
	}
	/* attachment at e0: reduced e0 against the first inside thickening */
	chi -= b.edges.front().inside;
	return chi;
}

int branch_euler_closed(const Branch& b)
{
	if (b.empty()) return 1;
	const size_t n = b.edges.size();
	/* All terms doubled to stay in integers; the total is 2*chi. */
	int twice = 0;
	twice += b.edges.front().outside * b.edges.front().outside;
	int s_alpha = (n % 2 == 0) ? b.edges.back().outside : kSentinel.outside;
	twice += s_alpha * s_alpha;
	for (size_t i = 0; i < n; i += 2) {
		const Edge& e1 = b.edges[i];
		const Edge& e2 = (i + 1 < n) ? b.edges[i + 1] : kSentinel;
		int d = e2.inside - e1.inside;
		twice += d * (d + 1);
		twice += e1.outside + e2.outside -
			 2 * std::min(e1.outside, e2.outside);
		if (i + 2 < n) {
			int dd = b.edges[i + 2].outside - e2.outside;
			twice += dd * dd;
			twice += 2 * (b.edges[i + 2].inside -
				      std::min(e2.inside,
					       b.edges[i + 2].inside));
		}
	}
	if (twice & 1)
		throw std::logic_error("branch_euler_closed: odd doubled sum");
	return twice / 2;
}

namespace {

/* chi(O_{e0 union A union B}) for the two branches meeting at one endpoint
 * of e0. The -n*s correction only exists when both branches are present. */
int side_euler(const Branch& a, const Branch& b)
{
	int chi_a = branch_euler_master(a);
	int chi_b = branch_euler_master(b);
	if (a.empty() || b.empty()) return chi_a + chi_b - 1;
	return chi_a + chi_b -
	       a.edges.front().outside * b.edges.front().outside;
}

}  // namespace

int config_euler(const CurveConfig& c)
{
	int chi_q = side_euler(c.branch(BranchKind::UpperQ),
			       c.branch(BranchKind::LowerQ));
	int chi_p = side_euler(c.branch(BranchKind::UpperP),
			       c.branch(BranchKind::LowerP));
	return chi_q + chi_p - 1;
}

ClassVector branch_class(const Branch& b)
{
	ClassVector cls;
	bool on_c1 = starts_on_c1(b.kind);
	for (const Edge& e : b.edges) {
		(on_c1 ? cls.d1 : cls.d2) += e.multiplicity();
		on_c1 = !on_c1;
	}
	return cls;
}

ClassVector config_class(const CurveConfig& c)
{
	ClassVector cls;
	for (const Branch& b : c.branches) {
		ClassVector bc = branch_class(b);
		cls.d1 += bc.d1;
		cls.d2 += bc.d2;
	}
	return cls;
}

bool is_admissible(const Branch& b)
{
	for (const Edge& e : b.edges)
		if (e.outside != 1) return false;
	for (size_t i = 0; i + 1 < b.edges.size(); ++i)
		if (b.edges[i].inside < b.edges[i + 1].inside) return false;
	for (size_t i = 0; i < b.edges.size(); i += 2) {
		int first = b.edges[i].inside;
		int second = (i + 1 < b.edges.size()) ? b.edges[i + 1].inside : 0;
		int d = first - second;
		if (d != 0 && d != 1) return false;
	}
	return true;
}

bool is_admissible(const CurveConfig& c)
{
	return std::all_of(c.branches.begin(), c.branches.end(),
			   [](const Branch& b) { return is_admissible(b); });
}

std::string render(const CurveConfig& c)
{
	std::ostringstream os;
	bool first_block = true;
	for (auto k : kAllBranchKinds) {
		if (!first_block) os << " | ";
		first_block = false;
		os << branch_kind_name(k) << ":";
		for (const Edge& e : c.branch(k).edges)
			os << " (" << e.inside << "," << e.outside << ")";
	}
	return os.str();
}

}  // namespace bgv
