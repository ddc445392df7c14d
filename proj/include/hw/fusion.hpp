#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hw/spectral.hpp"

namespace hw {

/// A fusion law: a finite spectrum containing 1 and a symmetric table
/// assigning to each pair of eigenvalues a subset of the spectrum. Cells
/// default to the empty set.
class FusionLaw
{
public:
	FusionLaw(std::string name, std::vector<Scalar> spectrum);

	std::string const &name() const { return name_; }
	FieldSpec const &field() const { return spectrum_.front().field(); }
	std::vector<Scalar> const &spectrum() const { return spectrum_; }

	std::optional<std::size_t> index_of(Scalar const &lam) const;

	/// Sets both (lam, mu) and (mu, lam).
	void set(Scalar const &lam, Scalar const &mu, std::vector<Scalar> const &cell);
	/// The cell lam * mu, in spectrum order.
	std::vector<Scalar> cell(Scalar const &lam, Scalar const &mu) const;
	bool allows(Scalar const &lam, Scalar const &mu, Scalar const &delta) const;

	bool is_symmetric() const;

private:
	std::size_t require_index(Scalar const &lam) const;

	std::string name_;
	std::vector<Scalar> spectrum_;
	// table_[i][j] is a bitmask over spectrum positions
	std::vector<std::vector<std::uint64_t>> table_;
};

/// The Monster-type law M(alpha, beta) over the spectrum (1, 0, alpha, beta).
/// Requires alpha, beta outside {0, 1} and alpha != beta.
FusionLaw monster_law(Scalar const &alpha, Scalar const &beta);

/// The law satisfied by the axes of HW: over (1, 0, 2, 1/2) when the
/// characteristic is not 3, over (1, 0, 1/2) in characteristic 3.
FusionLaw hw_law(FieldSpec f);

/// Outcome of multiplying two eigenvectors and classifying the product.
struct FusionPairResult
{
	bool ok = true;
	Element product;
	EigenDecomposition decomposition;
	/// Eigenvalues of nonzero components not allowed by the law.
	std::vector<Scalar> offending;
};

/// Throws std::invalid_argument if x (or y) is not a lam- (or mu-)
/// eigenvector of the axis, or if lam/mu are not in the law's spectrum.
FusionPairResult fuse_pair(Element const &x, Scalar const &lam, Element const &y,
                           Scalar const &mu, Axis axis, FusionLaw const &law);

bool check_fusion_pair(Element const &x, Scalar const &lam, Element const &y,
                       Scalar const &mu, Axis axis, FusionLaw const &law);

struct FusionReportEntry
{
	std::string left, right; // e.g. "a", "u3", "w1"
	Scalar left_eigenvalue, right_eigenvalue;
	bool ok;
	std::string detail; // decomposition of the product for failing pairs
};

struct FusionReport
{
	Axis axis;
	std::int64_t window = 0;
	std::string law;
	std::vector<FusionReportEntry> entries;
	bool primitive = false;
	std::size_t one_eigenspace_dim = 0;

	std::size_t failures() const;
	bool passed() const { return primitive && failures() == 0; }
};

/// Checks the law on every pair drawn from {a} and {u_j, v_j, w_j : j <= window}
/// relative to the axis, and checks that the 1-eigenspace of ad_a on the
/// window is spanned by a.
FusionReport verify_axis(Axis axis, FusionLaw const &law, std::int64_t window);

std::string describe(EigenDecomposition const &d);

} // namespace hw
