#include "hw/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace hw {

FusionLaw::FusionLaw(std::string name, std::vector<Scalar> spectrum)
    : name_(std::move(name)), spectrum_(std::move(spectrum))
{
	if (spectrum_.empty() || spectrum_.size() > 64)
		throw std::invalid_argument("fusion law: spectrum size must be 1..64");
	auto f = spectrum_.front().field();
	bool has_one = false;
	for (std::size_t i = 0; i < spectrum_.size(); ++i)
	{
		if (!(spectrum_[i].field() == f))
			throw FieldMismatch("fusion law: spectrum spans several fields");
		has_one = has_one || spectrum_[i].is_one();
		for (std::size_t j = 0; j < i; ++j)
			if (spectrum_[i] == spectrum_[j])
				throw std::invalid_argument("fusion law: repeated eigenvalue " +
				                            spectrum_[i].to_string());
	}
	if (!has_one)
		throw std::invalid_argument("fusion law: spectrum must contain 1");
	table_.assign(spectrum_.size(), std::vector<std::uint64_t>(spectrum_.size(), 0));
}

std::optional<std::size_t> FusionLaw::index_of(Scalar const &lam) const
{
	auto it = std::find(spectrum_.begin(), spectrum_.end(), lam);
	if (it == spectrum_.end())
		return std::nullopt;
	return std::size_t(it - spectrum_.begin());
}

std::size_t FusionLaw::require_index(Scalar const &lam) const
{
	auto i = index_of(lam);
	if (!i)
		throw std::invalid_argument("eigenvalue " + lam.to_string() +
		                            " is not in the spectrum of " + name_);
	return *i;
}

void FusionLaw::set(Scalar const &lam, Scalar const &mu,
                    std::vector<Scalar> const &cell)
{
	std::uint64_t mask = 0;
	for (auto const &d : cell)
		mask |= std::uint64_t(1) << require_index(d);
	auto i = require_index(lam), j = require_index(mu);
	table_[i][j] = mask;
	table_[j][i] = mask;
}

std::vector<Scalar> FusionLaw::cell(Scalar const &lam, Scalar const &mu) const
{
	auto mask = table_[require_index(lam)][require_index(mu)];
	std::vector<Scalar> out;
	for (std::size_t k = 0; k < spectrum_.size(); ++k)
		if (mask & (std::uint64_t(1) << k))
			out.push_back(spectrum_[k]);
	return out;
}

bool FusionLaw::allows(Scalar const &lam, Scalar const &mu, Scalar const &delta) const
{
	auto mask = table_[require_index(lam)][require_index(mu)];
	return mask & (std::uint64_t(1) << require_index(delta));
}

bool FusionLaw::is_symmetric() const
{
	for (std::size_t i = 0; i < table_.size(); ++i)
		for (std::size_t j = 0; j < i; ++j)
			if (table_[i][j] != table_[j][i])
				return false;
	return true;
}

FusionLaw monster_law(Scalar const &alpha, Scalar const &beta)
{
	auto f = alpha.field();
	auto one = Scalar::one(f), zero = Scalar::zero(f);
	for (auto const *p : {&alpha, &beta})
		if (p->is_zero() || p->is_one())
			throw std::invalid_argument("monster_law: parameters must avoid 0 and 1");
	if (alpha == beta)
		throw std::invalid_argument("monster_law: alpha must differ from beta");

	FusionLaw law("M(" + alpha.value_string() + "," + beta.value_string() + ")",
	              {one, zero, alpha, beta});
	law.set(one, one, {one});
	law.set(one, alpha, {alpha});
	law.set(one, beta, {beta});
	law.set(zero, zero, {zero});
	law.set(zero, alpha, {alpha});
	law.set(zero, beta, {beta});
	law.set(alpha, alpha, {one, zero});
	law.set(alpha, beta, {beta});
	law.set(beta, beta, {one, zero, alpha});
	return law;
}

FusionLaw hw_law(FieldSpec f)
{
	auto one = Scalar::one(f), zero = Scalar::zero(f);
	auto half = Scalar::fraction(1, 2, f);
	if (f.characteristic() == 3)
	{
		FusionLaw law("HW(char 3)", {one, zero, half});
		law.set(one, one, {one});
		law.set(one, half, {half});
		law.set(zero, half, {half});
		law.set(half, half, {zero});
		return law;
	}
	auto two = Scalar::embed(2, f);
	FusionLaw law("HW", {one, zero, two, half});
	law.set(one, one, {one});
	law.set(one, two, {two});
	law.set(one, half, {half});
	law.set(zero, zero, {zero});
	law.set(zero, two, {two});
	law.set(zero, half, {half});
	law.set(two, two, {zero});
	law.set(two, half, {half});
	law.set(half, half, {zero, two});
	return law;
}

FusionPairResult fuse_pair(Element const &x, Scalar const &lam, Element const &y,
                           Scalar const &mu, Axis axis, FusionLaw const &law)
{
	if (!eigen_check(x, axis, lam))
		throw std::invalid_argument("first input is not a " + lam.to_string() +
		                            "-eigenvector of a(" + std::to_string(axis.k) + ")");
	if (!eigen_check(y, axis, mu))
		throw std::invalid_argument("second input is not a " + mu.to_string() +
		                            "-eigenvector of a(" + std::to_string(axis.k) + ")");

	auto product = mul(x, y);
	auto d = decompose(product, axis);
	auto ev = PartEigenvalues::of(x.field());

	std::vector<Scalar> present;
	if (d.has_one())
		present.push_back(ev.one);
	if (!d.u.empty())
		present.push_back(ev.u);
	if (!d.v.empty())
		present.push_back(ev.v);
	if (!d.w.empty())
		present.push_back(ev.w);

	FusionPairResult r{true, std::move(product), std::move(d), {}};
	for (auto const &delta : present)
	{
		bool in_spectrum = law.index_of(delta).has_value();
		if (!in_spectrum || !law.allows(lam, mu, delta))
		{
			if (std::find(r.offending.begin(), r.offending.end(), delta) ==
			    r.offending.end())
				r.offending.push_back(delta);
			r.ok = false;
		}
	}
	return r;
}

bool check_fusion_pair(Element const &x, Scalar const &lam, Element const &y,
                       Scalar const &mu, Axis axis, FusionLaw const &law)
{
	return fuse_pair(x, lam, y, mu, axis, law).ok;
}

std::size_t FusionReport::failures() const
{
	return std::size_t(std::count_if(entries.begin(), entries.end(),
	                                 [](auto const &e) { return !e.ok; }));
}

std::string describe(EigenDecomposition const &d)
{
	return "1: " + d.one_part().to_string() + "; u: " + d.u_part().to_string() +
	       "; v: " + d.v_part().to_string() + "; w: " + d.w_part().to_string();
}

namespace {

struct Eigenvector
{
	std::string label;
	Element vec;
	Scalar eigenvalue;
};

std::vector<Eigenvector> eigenbasis(Axis axis, FieldSpec f, std::int64_t window)
{
	auto ev = PartEigenvalues::of(f);
	std::vector<Eigenvector> out{{"a", axis.vector(f), ev.one}};
	for (std::int64_t j = 1; j <= window; ++j)
	{
		auto n = std::to_string(j);
		out.push_back({"u" + n, u_vec(j, axis, f), ev.u});
		out.push_back({"v" + n, v_vec(j, axis, f), ev.v});
		out.push_back({"w" + n, w_vec(j, axis, f), ev.w});
	}
	return out;
}

// Dimension of ker(ad_a - 1) on span{a(k), a(k+-j), s(j) : j <= window},
// and whether a(k) spans it.
std::pair<std::size_t, bool> one_eigenspace(Axis axis, FieldSpec f,
                                            std::int64_t window)
{
	std::vector<BasisIndex> basis{BasisIndex::a(axis.k)};
	for (std::int64_t j = 1; j <= window; ++j)
	{
		basis.push_back(BasisIndex::a(axis.k - j));
		basis.push_back(BasisIndex::a(axis.k + j));
		basis.push_back(BasisIndex::s(j));
	}
	auto const n = basis.size();
	auto const a = axis.vector(f);
	DenseMatrix m(f, n, n);
	for (std::size_t col = 0; col < n; ++col)
	{
		auto b = Element::basis(basis[col], f);
		auto image = mul(a, b) - b;
		for (std::size_t row = 0; row < n; ++row)
			m(row, col) = image.coeff(basis[row]);
	}
	auto kernel = null_space(std::move(m));
	bool spanned_by_a = kernel.size() == 1;
	if (spanned_by_a)
		for (std::size_t i = 1; i < n; ++i)
			spanned_by_a = spanned_by_a && kernel[0][i].is_zero();
	return {kernel.size(), spanned_by_a};
}

} // namespace

FusionReport verify_axis(Axis axis, FusionLaw const &law, std::int64_t window)
{
	if (window < 1)
		throw std::invalid_argument("verify_axis: window must be >= 1");
	auto const f = law.field();
	FusionReport report{axis, window, law.name(), {}, false, 0};

	auto vecs = eigenbasis(axis, f, window);
	for (std::size_t i = 0; i < vecs.size(); ++i)
		for (std::size_t j = i; j < vecs.size(); ++j)
		{
			auto const &x = vecs[i];
			auto const &y = vecs[j];
			auto r = fuse_pair(x.vec, x.eigenvalue, y.vec, y.eigenvalue, axis, law);
			FusionReportEntry e{x.label, y.label, x.eigenvalue, y.eigenvalue, r.ok, {}};
			if (!r.ok)
			{
				e.detail = "product " + r.product.to_string() + " = " +
				           describe(r.decomposition) + "; disallowed eigenvalues:";
				for (auto const &d : r.offending)
					e.detail += " " + d.to_string();
			}
			report.entries.push_back(std::move(e));
		}

	auto [dim, spanned] = one_eigenspace(axis, f, window);
	report.one_eigenspace_dim = dim;
	report.primitive = spanned;
	return report;
}

} // namespace hw
