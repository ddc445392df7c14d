#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hw/element.hpp"

namespace hw {

/// A finite-dimensional subspace of HW held in sparse reduced row echelon
/// form. Each row is keyed by its pivot, the lowest basis index in its
/// support, with pivot coefficient 1 and no other row touching that pivot.
class Span
{
public:
	explicit Span(FieldSpec f) : field_(f) {}

	FieldSpec const &field() const { return field_; }
	std::size_t dimension() const { return rows_.size(); }

	/// x minus its projection along the rows; zero iff x is in the span.
	Element reduce(Element x) const;
	bool contains(Element const &x) const { return reduce(x).is_zero(); }

	/// Adds x; returns false (and leaves the span unchanged) if dependent.
	bool insert(Element const &x);

	std::vector<Element> rows() const;

private:
	FieldSpec field_;
	std::map<BasisIndex, Element> rows_;
};

/// Result of a closure computation.
struct ClosureState
{
	Span span;
	/// Independent elements in the order they were discovered.
	std::vector<Element> generators;
	std::size_t generation = 0;
	bool stable = false;
	/// dimension after each sweep; entry 0 is the span of the inputs
	std::vector<std::size_t> dimensions;

	std::vector<Element> basis() const { return span.rows(); }
	std::size_t dimension() const { return span.dimension(); }
	bool contains(Element const &x) const { return span.contains(x); }
};

/// Called after every sweep with the state so far.
using SweepObserver = std::function<void(ClosureState const &)>;

/// Weight zero.
bool in_J(Element const &x);

/// Repeatedly adds all pairwise products of the current span. Stops when a
/// sweep adds nothing (stable) or after max_sweeps.
ClosureState subalgebra_closure(std::vector<Element> const &generators,
                                std::size_t max_sweeps,
                                SweepObserver const &on_sweep = {});

/// Repeatedly multiplies by the ambient basis vectors a(i), s(j) with
/// |i| <= window, 1 <= j <= window. Supports of the products are unrestricted.
ClosureState ideal_closure(std::vector<Element> const &generators,
                           std::int64_t window, std::size_t max_sweeps,
                           SweepObserver const &on_sweep = {});

/// On the window basis {a(i) : |i| <= window} + {s(j) : j <= window}: every
/// element of the weight-zero spanning set is orthogonal to every basis
/// vector, (a(0), a(0)) = 1, and the form's radical on the window has
/// codimension 1 and equals its intersection with J.
bool frobenius_radical_check(FieldSpec f, std::int64_t window);

} // namespace hw
