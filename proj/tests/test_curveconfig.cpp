#include "bgv/curveconfig.hpp"

#include <doctest.h>

#include <functional>
#include <vector>

using namespace bgv;

namespace {

Branch make_branch(BranchKind kind, std::vector<Edge> edges)
{
	Branch b;
	b.kind = kind;
	b.edges = std::move(edges);
	return b;
}

Branch figure_detail_branch()
{
	return make_branch(BranchKind::UpperQ,
			   {Edge{5, 3}, Edge{3, 2}, Edge{1, 1}});
}

/* All branches with up to max_edges edges and thickenings <= max_thick. */
void for_each_branch(int max_edges, int max_thick,
		     const std::function<void(const Branch&)>& fn)
{
	Branch b;
	b.kind = BranchKind::UpperQ;
	std::function<void(int)> rec = [&](int depth) {
		if (depth > 0) fn(b);
		if (depth == max_edges) return;
		for (int m = 1; m <= max_thick; ++m)
			for (int n = 1; n <= max_thick; ++n) {
				b.edges.push_back(Edge{m, n});
				rec(depth + 1);
				b.edges.pop_back();
			}
	};
	rec(0);
}

}  // namespace

TEST_CASE("edge_euler on small thickenings")
{
	CHECK(edge_euler(Edge{1, 1}) == 1);
	CHECK(edge_euler(Edge{2, 1}) == 3);
	CHECK(edge_euler(Edge{2, 3}) == 8);
	CHECK_THROWS_AS(edge_euler(Edge{0, 1}), std::invalid_argument);
}

TEST_CASE("vertex corrections at 2- and 3-valent vertices")
{
	CHECK(vertex_euler_2(1, 1, 1, 1) == 1);
	CHECK(vertex_euler_2(5, 3, 3, 2) == 16);
	CHECK(vertex_euler_2(2, 1, 1, 1) == 2);

	VertexLabels all_ones;
	CHECK(vertex_euler_3(all_ones) == 2);

	/* nodal point of two reduced lines, z-axis empty */
	VertexLabels node{1, 1, 1, 0, 1, 1};
	CHECK(vertex_euler_3(node) == 1);

	/* the Figure-12 p1 correction through the empty-axis convention */
	CHECK(vertex_euler_3(with_empty_z_axis(5, 3, 3, 2)) == 16);
}

TEST_CASE("the empty-axis convention reproduces the 2-valent formula")
{
	for (int m = 1; m <= 5; ++m)
		for (int r = 1; r <= 5; ++r)
			for (int n = 1; n <= 5; ++n)
				for (int s = 1; s <= 5; ++s)
					CHECK(vertex_euler_3(with_empty_z_axis(
						  m, r, n, s)) ==
					      vertex_euler_2(m, r, n, s));
}

TEST_CASE("branch Euler characteristic by the master formula")
{
	CHECK(branch_euler_master(make_branch(BranchKind::UpperQ, {})) == 1);
	CHECK(branch_euler_master(
		  make_branch(BranchKind::UpperQ, {Edge{1, 1}})) == 1);
	CHECK(branch_euler_master(figure_detail_branch()) == 7);
	CHECK(branch_euler_master(make_branch(BranchKind::UpperQ,
					      {Edge{2, 1}, Edge{1, 1}})) == 1);
}

TEST_CASE("branch Euler characteristic by the closed form")
{
	CHECK(branch_euler_closed(make_branch(BranchKind::UpperQ, {})) == 1);
	CHECK(branch_euler_closed(
		  make_branch(BranchKind::UpperQ, {Edge{1, 1}})) == 1);
	CHECK(branch_euler_closed(figure_detail_branch()) == 7);
	CHECK(branch_euler_closed(make_branch(BranchKind::UpperQ,
					      {Edge{2, 1}, Edge{1, 1}})) == 1);
}

TEST_CASE("master and closed forms agree on all small branches")
{
	for_each_branch(4, 4, [](const Branch& b) {
		CHECK(branch_euler_master(b) == branch_euler_closed(b));
	});
}

TEST_CASE("an outside thickening above 1 pushes chi above the floor")
{
	for_each_branch(4, 3, [](const Branch& b) {
		bool thickened_outside = false;
		for (const Edge& e : b.edges)
			if (e.outside >= 2) thickened_outside = true;
		if (thickened_outside)
			CHECK(branch_euler_master(b) >= 2);
	});
}

TEST_CASE("config Euler characteristic glues the four branches")
{
	CurveConfig empty;
	CHECK(config_euler(empty) == 1);

	CurveConfig one_branch;
	one_branch.branch(BranchKind::UpperQ).edges = {Edge{1, 1}};
	CHECK(config_euler(one_branch) == 1);

	CurveConfig two_q;
	two_q.branch(BranchKind::UpperQ).edges = {Edge{1, 1}};
	two_q.branch(BranchKind::LowerQ).edges = {Edge{1, 1}};
	CHECK(config_euler(two_q) == 1);
}

TEST_CASE("config class alternates edge routing per branch kind")
{
	CurveConfig empty;
	CHECK(config_class(empty) == ClassVector{0, 0});

	CurveConfig c1;
	c1.branch(BranchKind::UpperQ).edges = {Edge{2, 1}, Edge{1, 1}};
	CHECK(config_class(c1) == ClassVector{2, 1});

	CurveConfig c2;
	c2.branch(BranchKind::UpperQ).edges = {Edge{1, 2}};
	CHECK(config_class(c2) == ClassVector{2, 0});

	/* a C2-first branch routes the same edges the other way */
	CurveConfig c3;
	c3.branch(BranchKind::LowerQ).edges = {Edge{2, 1}, Edge{1, 1}};
	CHECK(config_class(c3) == ClassVector{1, 2});
}

TEST_CASE("admissibility constraints")
{
	CHECK(is_admissible(make_branch(
	    BranchKind::UpperQ,
	    {Edge{5, 1}, Edge{4, 1}, Edge{4, 1}, Edge{4, 1}})));
	CHECK_FALSE(is_admissible(figure_detail_branch()));
	CHECK_FALSE(is_admissible(
	    make_branch(BranchKind::UpperQ, {Edge{2, 1}, Edge{3, 1}})));

	/* an odd-length branch must end with inside multiplicity 1 */
	CHECK_FALSE(is_admissible(make_branch(BranchKind::UpperQ, {Edge{2, 1}})));
	CHECK(is_admissible(make_branch(BranchKind::UpperQ, {Edge{1, 1}})));

	/* pair drop of more than one is out */
	CHECK_FALSE(is_admissible(
	    make_branch(BranchKind::UpperQ, {Edge{4, 1}, Edge{2, 1}})));
}

TEST_CASE("canonical config rendering")
{
	CurveConfig c;
	c.branch(BranchKind::UpperQ).edges = {Edge{1, 1}, Edge{1, 1}};
	c.branch(BranchKind::LowerP).edges = {Edge{2, 1}};
	CHECK(render(c) ==
	      "upper-q: (1,1) (1,1) | lower-q: | upper-p: | lower-p: (2,1)");
}
