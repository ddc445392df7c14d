#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hw/spectral.hpp"

namespace hw {

/// An element of the infinite dihedral group acting on the integers:
/// i -> t + i, or i -> t - i when flipped.
struct DihedralElement
{
	std::int64_t translation = 0;
	bool flip = false;

	static DihedralElement translate(std::int64_t t) { return {t, false}; }
	static DihedralElement reflect(std::int64_t t) { return {t, true}; }
	/// Fixes a(0): i -> -i.
	static DihedralElement tau() { return {0, true}; }
	/// Swaps a(0) and a(1).
	static DihedralElement pi() { return {1, true}; }

	std::int64_t act(std::int64_t i) const { return flip ? translation - i : translation + i; }
	DihedralElement inverse() const;

	friend bool operator==(DihedralElement, DihedralElement) = default;
};

/// g * h, acting as g(h(i)).
DihedralElement compose(DihedralElement g, DihedralElement h);

/// Relabels a-indices by g and fixes every s(j).
Element apply_dihedral(DihedralElement g, Element const &x);

using ElementMap = std::function<Element(Element const &)>;
using ElementPairs = std::vector<std::pair<Element, Element>>;

struct AutomorphismCheck
{
	std::size_t pairs_checked = 0;
	std::optional<std::size_t> first_failure;

	bool holds() const { return !first_failure; }
	explicit operator bool() const { return holds(); }
};

/// Finite-sample certification that g(xy) = g(x)g(y) on each supplied pair.
AutomorphismCheck check_automorphism(ElementMap const &g, ElementPairs const &pairs);

/// All ordered-up-to-commutativity pairs of basis vectors a(i), s(j) with
/// |i| <= window and 1 <= j <= window.
ElementPairs basis_pairs(FieldSpec f, std::int64_t window);

/// x is fixed by tau (i -> -i).
bool tau_fixed_subalgebra_check(Element const &x);

/// An element of V = HW_u + HW_v (relative to a(0)) in the basis {c_j, s_j}.
struct VElement
{
	using Coeffs = std::map<std::int64_t, Scalar>;

	FieldSpec field;
	Coeffs c, s;

	explicit VElement(FieldSpec f) : field(f) {}
	static VElement c_basis(std::int64_t j, FieldSpec f);
	static VElement s_basis(std::int64_t j, FieldSpec f);

	/// Throws std::invalid_argument if x has an axis or w component.
	static VElement from_element(Element const &x);
	Element to_element() const;

	/// From/to coordinates in the {u_j, v_j} basis.
	static VElement from_uv(Coeffs const &u, Coeffs const &v, FieldSpec f);
	std::pair<Coeffs, Coeffs> to_uv() const;

	void add_c(std::int64_t j, Scalar const &x);
	void add_s(std::int64_t j, Scalar const &x);

	friend bool operator==(VElement const &, VElement const &) = default;
};

VElement v_mul(VElement const &x, VElement const &y);

/// Negates every c_j, fixes every s_j.
VElement v_rho(VElement const &x);
/// Fixes every u_j, negates every v_j.
VElement v_theta(VElement const &x);
/// c_j -> c_j/2 - 2 s_j, s_j -> -3/8 c_j - s_j/2.
VElement v_psi(VElement const &x);

using VMap = std::function<VElement(VElement const &)>;

/// Multiplicativity of a V-map on all basis pairs c_i, s_j with i, j <= window.
bool v_map_multiplicative(VMap const &g, FieldSpec f, std::int64_t window);

/// Smallest n <= max_order with g^n = id on the {c_j, s_j : j <= window}
/// basis; nullopt if none.
std::optional<int> v_map_order(VMap const &g, FieldSpec f, std::int64_t window,
                               int max_order = 16);

/// Extends a V-map to HW by fixing a(0) and sending w_j to sign * w_j, then
/// tests multiplicativity on basis pairs of the window.
struct ExtensionProbe
{
	std::string map;
	int w_sign;
	bool multiplicative;
	std::string witness; // first failing pair
};

std::vector<ExtensionProbe> probe_extension(std::string const &name, VMap const &g,
                                            FieldSpec f, std::int64_t window);

} // namespace hw
