#pragma once

#include "bgv/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace bgv {

/// One component of a type-Gamma curve: a rational curve with normal bundle
/// O(-1)+O(-1), thickened `inside` steps toward the plane shared with its
/// consecutive partner edge and `outside` steps away from it. The class
/// multiplicity of the edge is inside + outside - 1 (the number of line
/// bundle summands of the pushforward to the reduced curve).
///
/// A real edge has inside >= 1 and outside >= 1. The empty-edge sentinel
/// (0, 1) is only ever appended internally to complete a consecutive pair;
/// it is never stored in a Branch or serialized.
struct Edge {
	int inside = 0;
	int outside = 1;

	bool is_sentinel() const { return inside == 0; }
	int multiplicity() const { return inside + outside - 1; }
	auto operator<=>(const Edge&) const = default;
};

/// Attachment type of a branch: which endpoint of the distinguished edge e0
/// it meets (q or p) and, with the upper/lower choice, which banana
/// component its first edge covers. Upper-q and lower-p branches start over
/// C1; lower-q and upper-p start over C2. Classes alternate along a branch.
enum class BranchKind { UpperQ = 0, LowerQ = 1, UpperP = 2, LowerP = 3 };

constexpr std::array<BranchKind, 4> kAllBranchKinds = {
    BranchKind::UpperQ, BranchKind::LowerQ, BranchKind::UpperP,
    BranchKind::LowerP};

bool starts_on_c1(BranchKind k);
bool attaches_at_q(BranchKind k);
const char* branch_kind_name(BranchKind k);

/// A chain of real edges, index 0 nearest e0.
struct Branch {
	BranchKind kind = BranchKind::UpperQ;
	std::vector<Edge> edges;

	bool empty() const { return edges.empty(); }
	auto operator<=>(const Branch&) const = default;
};

/// A torus-fixed thickened curve configuration of type Gamma: the implicit
/// distinguished edge e0 (reduced, thickenings (1,1), class contribution
/// fixed to the third component) plus four possibly empty branches.
struct CurveConfig {
	std::array<Branch, 4> branches;

	CurveConfig();
	Branch& branch(BranchKind k) { return branches[static_cast<int>(k)]; }
	const Branch& branch(BranchKind k) const
	{
		return branches[static_cast<int>(k)];
	}
	auto operator<=>(const CurveConfig&) const = default;
};

/// Multiple structure at a 3-valent vertex, following the local model
/// Spec C[x,y,z]/(xyz, x^r y^m, z^n x^b, y^a z^s): one pair of
/// plane-directed thickenings per coordinate plane, (m, r) in xy,
/// (s, a) in yz, (b, n) in zx.
struct VertexLabels {
	int m = 1, r = 1, s = 1, a = 1, b = 1, n = 1;
};

/// Edge contribution to the Euler characteristic:
/// binom(m+1,2) + binom(n+1,2) - 1. Throws std::invalid_argument for the
/// sentinel, which has no edge contribution of its own.
int edge_euler(const Edge& e);

/// 3-valent vertex correction m r + s a + b n - 1 (sum over coordinate
/// planes of the product of the two plane-directed thickenings, minus 1).
int vertex_euler_3(const VertexLabels& v);

/// 2-valent vertex correction m r + min(n, s) - 1, where m, r are the
/// thickenings in the shared plane and n, s point out of it.
int vertex_euler_2(int m, int r, int n, int s);

/// Labels of the 3-valent model with an empty z-axis: the missing edge gets
/// thickenings 0 and 1, the 0 in the direction of the axis whose
/// out-of-plane thickening (n or s) is larger.
VertexLabels with_empty_z_axis(int m, int r, int n, int s);

/// chi(O_{e0 union b}) by the edge/vertex master formula: 1 for e0, plus
/// the edge contributions, minus the attachment correction m1 at the e0
/// vertex, minus the interior pair and gap vertex corrections. Returns 1
/// for the empty branch (just e0).
int branch_euler_master(const Branch& b);

/// The same Euler characteristic through the half-square closed form
///   1/2 n1^2 + 1/2 sum (r_i - m_i)(r_i - m_i + 1)
///   + 1/2 sum (n_{i+1} - s_i)^2 + 1/2 sum (n_i + s_i - 2 min(n_i, s_i))
///   + sum_{i>=2} (m_i - min(r_{i-1}, m_i)) + 1/2 s_alpha^2
/// with odd-length branches completed by the sentinel pair (0, 1).
int branch_euler_closed(const Branch& b);

/// chi(O_C) of the full configuration: each side glues its two branches
/// with a -n*s correction (the product of the first-edge outside
/// multiplicities) at the shared e0 endpoint, then the two sides glue with
/// -chi(O_{e0}) = -1.
int config_euler(const CurveConfig& c);

ClassVector branch_class(const Branch& b);
ClassVector config_class(const CurveConfig& c);

/// Multiplicity constraints that characterize chi = 1: all outside
/// thickenings are 1, inside thickenings are non-increasing along each
/// branch, and within each consecutive pair the second inside thickening
/// equals or is one less than the first.
bool is_admissible(const Branch& b);
bool is_admissible(const CurveConfig& c);

/// Canonical text form: four branch blocks in kind order, each a list of
/// "(m,n)" pairs.
std::string render(const CurveConfig& c);

}  // namespace bgv
