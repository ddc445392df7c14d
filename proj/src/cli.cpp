#include "hw/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hw/fusion.hpp"
#include "hw/jordan.hpp"
#include "hw/parse.hpp"
#include "hw/structure.hpp"
#include "hw/symmetry.hpp"

namespace hw::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options
{
	std::string field = "q";
	std::string format = "text";
	std::int64_t axis = 0;
	std::int64_t window = 8;
	std::size_t sweeps = 10;
	std::size_t trials = 100;
	std::uint64_t seed = 0;
	std::string law = "hw";
	std::string expr;
	std::string map;
	std::string gens;
	std::string probe;
	std::int64_t j = 1;
	std::size_t dim_A = 2;
	std::size_t dim_I = 1;
};

class UsageError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

class Reporter
{
public:
	explicit Reporter(bool json) : json_(json) {}

	void line(std::string const &text, Json obj)
	{
		if (json_)
			out_ << obj.dump() << '\n';
		else
			out_ << text << '\n';
	}

	std::string str() const { return out_.str(); }

private:
	bool json_;
	std::ostringstream out_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_poly(Polynomial const &p)
{
	std::string out;
	for (std::size_t k = p.size(); k-- > 0;)
	{
		auto c = p[k];
		if (c.is_zero())
			continue;
		bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
		auto mag = negative ? (-c).value_string() : c.value_string();
		out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
		std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
		if (mono.empty())
			out += mag;
		else
			out += (mag == "1" ? "" : mag + "*") + mono;
	}
	return out.empty() ? "0" : out;
}

std::string render_coeffs(EigenDecomposition::Coeffs const &m)
{
	std::string out = "{";
	for (auto const &[j, c] : m)
		out += (out.size() > 1 ? ", " : "") + std::to_string(j) + ": " + c.value_string();
	return out + "}";
}

Json coeffs_json(EigenDecomposition::Coeffs const &m)
{
	Json obj = Json::object();
	for (auto const &[j, c] : m)
		obj[std::to_string(j)] = c.value_string();
	return obj;
}

std::vector<Element> parse_list(std::string const &text, FieldSpec f)
{
	std::vector<Element> out;
	for (auto const &part : split_top_level(text))
		out.push_back(parse_element(part, f));
	if (out.empty())
		throw UsageError("--gens must name at least one element");
	return out;
}

int cmd_eval(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	auto x = parse_element(o.expr, f);
	rep.line(x.to_string(), Json{{"result", x.to_string()}});
	return 0;
}

int cmd_decompose(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	auto x = parse_element(o.expr, f);
	Axis axis{o.axis};
	auto d = decompose(x, axis);
	auto ev = PartEigenvalues::of(f);
	bool ok = d.reassemble() == x;

	rep.line("axis a(" + std::to_string(axis.k) + ")",
	         Json{{"axis", axis.k}, {"field", f.to_string()}});
	rep.line("1 (eigenvalue " + ev.one.value_string() + "): " + d.one_part().to_string(),
	         Json{{"part", "1"}, {"eigenvalue", ev.one.value_string()},
	              {"coeff", d.one_coeff.value_string()}, {"element", d.one_part().to_string()}});
	struct Part
	{
		char const *name;
		Scalar const &eigenvalue;
		EigenDecomposition::Coeffs const &coeffs;
		Element element;
	};
	for (auto const &p : {Part{"u", ev.u, d.u, d.u_part()}, Part{"v", ev.v, d.v, d.v_part()},
	                      Part{"w", ev.w, d.w, d.w_part()}})
		rep.line(std::string(p.name) + " (eigenvalue " + p.eigenvalue.value_string() +
		             "): " + render_coeffs(p.coeffs) + " = " + p.element.to_string(),
		         Json{{"part", p.name}, {"eigenvalue", p.eigenvalue.value_string()},
		              {"coeffs", coeffs_json(p.coeffs)}, {"element", p.element.to_string()}});
	rep.line("reassembly: " + std::string(ok ? "exact" : "MISMATCH"), Json{{"reassembly", ok}});
	return ok ? 0 : 1;
}

int cmd_char_poly(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	if (o.j < 1)
		throw UsageError("--j must be >= 1");
	auto m = ad_matrix_4(o.j, f);
	static char const *labels[] = {"a", "a(-j)", "a(j)", "s(j)"};
	for (std::size_t r = 0; r < 4; ++r)
	{
		std::string text = std::string("row ") + labels[r] + ":";
		Json row = Json::array();
		for (std::size_t c = 0; c < 4; ++c)
		{
			text += " " + m(r, c).value_string();
			row.push_back(m(r, c).value_string());
		}
		rep.line(text, Json{{"row", labels[r]}, {"entries", row}});
	}
	auto p = char_poly_ad4(o.j, f);
	bool factors = p == expected_char_poly(f);
	rep.line("characteristic polynomial: " + render_poly(p),
	         Json{{"char_poly", render_poly(p)}});
	rep.line("equals (x - 1)x(x - 2)(x - 1/2): " + yes_no(factors),
	         Json{{"factors", factors}});
	return factors ? 0 : 1;
}

int cmd_fusion_verify(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	if (o.window < 1)
		throw UsageError("--window must be >= 1");
	FusionLaw law = [&] {
		if (o.law == "hw")
			return hw_law(f);
		if (o.law == "monster")
			return monster_law(Scalar::embed(2, f), Scalar::fraction(1, 2, f));
		throw UsageError("--law must be hw or monster");
	}();
	auto report = verify_axis(Axis{o.axis}, law, o.window);
	for (auto const &e : report.entries)
	{
		std::string text = e.left + " * " + e.right + " (" + e.left_eigenvalue.value_string() +
		                   " * " + e.right_eigenvalue.value_string() + "): " +
		                   (e.ok ? "pass" : "FAIL " + e.detail);
		Json obj{{"left", e.left}, {"right", e.right},
		         {"lambda", e.left_eigenvalue.value_string()},
		         {"mu", e.right_eigenvalue.value_string()}, {"ok", e.ok}};
		if (!e.ok)
			obj["detail"] = e.detail;
		rep.line(text, std::move(obj));
	}
	rep.line("1-eigenspace dimension on window: " + std::to_string(report.one_eigenspace_dim) +
	             (report.primitive ? " (spanned by the axis)" : " (NOT primitive)"),
	         Json{{"one_eigenspace_dim", report.one_eigenspace_dim},
	              {"primitive", report.primitive}});
	rep.line("law " + report.law + ", axis a(" + std::to_string(o.axis) + "), window " +
	             std::to_string(o.window) + ", field " + f.to_string() + ": " +
	             std::to_string(report.entries.size()) + " pairs, " +
	             std::to_string(report.failures()) + " failures => " +
	             (report.passed() ? "PASS" : "FAIL"),
	         Json{{"law", report.law}, {"axis", o.axis}, {"window", o.window},
	              {"field", f.to_string()}, {"pairs", report.entries.size()},
	              {"failures", report.failures()}, {"passed", report.passed()}});
	return report.passed() ? 0 : 1;
}

std::optional<DihedralElement> parse_dihedral(std::string const &name)
{
	if (name == "tau")
		return DihedralElement::tau();
	if (name == "pi")
		return DihedralElement::pi();
	for (auto [prefix, flip] : {std::pair{"translate:", false}, std::pair{"reflect:", true}})
	{
		std::string_view p(prefix);
		if (name.starts_with(p))
		{
			std::int64_t t = 0;
			auto s = name.substr(p.size());
			auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
			if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
				throw UsageError("malformed map '" + name + "'");
			return DihedralElement{t, flip};
		}
	}
	return std::nullopt;
}

int cmd_aut_check(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	if (o.window < 1)
		throw UsageError("--window must be >= 1");

	if (auto g = parse_dihedral(o.map))
	{
		ElementMap map = [g = *g](Element const &x) { return apply_dihedral(g, x); };
		auto basis = check_automorphism(map, basis_pairs(f, o.window));
		rep.line("map " + o.map + " on basis pairs (window " + std::to_string(o.window) +
		             "): " + std::to_string(basis.pairs_checked) + " pairs, " +
		             (basis.holds() ? "multiplicative" : "NOT multiplicative"),
		         Json{{"map", o.map}, {"sample", "basis"}, {"window", o.window},
		              {"pairs", basis.pairs_checked}, {"holds", basis.holds()}});
		std::mt19937_64 rng(o.seed);
		ElementPairs random_pairs;
		for (std::size_t t = 0; t < o.trials; ++t)
		{
			auto x = random_element(f, rng, 10, o.window);
			auto y = random_element(f, rng, 10, o.window);
			random_pairs.emplace_back(std::move(x), std::move(y));
		}
		auto random = check_automorphism(map, random_pairs);
		rep.line("map " + o.map + " on " + std::to_string(o.trials) +
		             " random pairs (seed " + std::to_string(o.seed) + "): " +
		             (random.holds() ? "multiplicative" : "NOT multiplicative"),
		         Json{{"map", o.map}, {"sample", "random"}, {"seed", o.seed},
		              {"pairs", random.pairs_checked}, {"holds", random.holds()}});
		return basis.holds() && random.holds() ? 0 : 1;
	}

	VMap map;
	if (o.map == "rho")
		map = v_rho;
	else if (o.map == "theta")
		map = v_theta;
	else if (o.map == "psi")
		map = v_psi;
	else
		throw UsageError("unknown map '" + o.map +
		                 "' (expected tau, pi, translate:t, reflect:t, rho, theta, psi)");

	bool mult = v_map_multiplicative(map, f, o.window);
	auto order = v_map_order(map, f, o.window);
	rep.line("map " + o.map + " on V basis pairs c_i, s_j (j <= " + std::to_string(o.window) +
	             "): " + (mult ? "multiplicative" : "NOT multiplicative"),
	         Json{{"map", o.map}, {"sample", "V-basis"}, {"window", o.window}, {"holds", mult}});
	rep.line("order on V basis: " + (order ? std::to_string(*order) : std::string("> 16")),
	         Json{{"map", o.map}, {"order", order ? Json(*order) : Json(nullptr)}});
	for (auto const &p : probe_extension(o.map, map, f, std::min<std::int64_t>(o.window, 4)))
	{
		std::string w = p.w_sign > 0 ? "w_j -> w_j" : "w_j -> -w_j";
		rep.line("extension fixing a(0), " + w + ": " +
		             (p.multiplicative ? "multiplicative on window"
		                               : "not multiplicative (e.g. " + p.witness + ")"),
		         Json{{"map", o.map}, {"extension_w_sign", p.w_sign},
		              {"multiplicative", p.multiplicative}, {"witness", p.witness}});
	}
	return mult ? 0 : 1;
}

std::vector<BasisIndex> notable_elements()
{
	std::vector<BasisIndex> out;
	for (std::int64_t i = -3; i <= 3; ++i)
		out.push_back(BasisIndex::a(i));
	for (std::int64_t j = 1; j <= 3; ++j)
		out.push_back(BasisIndex::s(j));
	return out;
}

// Reports the dimension after each sweep and which of a(-3..3), s(1..3)
// became members. Sweep 0 is the span of the generators.
class MembershipReporter
{
public:
	MembershipReporter(Reporter &rep, FieldSpec f)
	    : rep_(rep), field_(f), notable_(notable_elements()), seen_(notable_.size(), false)
	{
	}

	void start(std::vector<Element> const &gens)
	{
		Span span(field_);
		for (auto const &g : gens)
			span.insert(g);
		emit(0, span.dimension(), [&](Element const &x) { return span.contains(x); });
	}

	SweepObserver observer()
	{
		return [this](ClosureState const &st) {
			emit(st.generation, st.dimension(),
			     [&](Element const &x) { return st.contains(x); });
		};
	}

private:
	template <class Contains>
	void emit(std::size_t sweep, std::size_t dim, Contains const &contains)
	{
		std::string gained;
		Json gained_json = Json::array();
		for (std::size_t k = 0; k < notable_.size(); ++k)
			if (!seen_[k] && contains(Element::basis(notable_[k], field_)))
			{
				seen_[k] = true;
				gained += " " + notable_[k].to_string();
				gained_json.push_back(notable_[k].to_string());
			}
		rep_.line("sweep " + std::to_string(sweep) + ": dimension " + std::to_string(dim) +
		              (gained.empty() ? "" : "; now contains" + gained),
		          Json{{"sweep", sweep}, {"dimension", dim}, {"new_members", gained_json}});
	}

	Reporter &rep_;
	FieldSpec field_;
	std::vector<BasisIndex> notable_;
	std::vector<bool> seen_;
};

int cmd_closure(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	auto gens = parse_list(o.gens, f);
	MembershipReporter members(rep, f);
	members.start(gens);
	auto st = subalgebra_closure(gens, o.sweeps, members.observer());
	rep.line("stable: " + yes_no(st.stable) + " after " + std::to_string(st.generation) +
	             " sweeps, dimension " + std::to_string(st.dimension()),
	         Json{{"stable", st.stable}, {"sweeps", st.generation},
	              {"dimension", st.dimension()}});
	return 0;
}

int cmd_ideal(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	if (o.window < 1)
		throw UsageError("--window must be >= 1");
	auto gens = parse_list(o.gens, f);
	std::optional<Element> probe;
	if (!o.probe.empty())
		probe = parse_element(o.probe, f);
	MembershipReporter members(rep, f);
	members.start(gens);
	auto st = ideal_closure(gens, o.window, o.sweeps, members.observer());
	bool inside_J = std::all_of(st.generators.begin(), st.generators.end(),
	                            [](Element const &x) { return in_J(x); });
	rep.line("stable: " + yes_no(st.stable) + " after " + std::to_string(st.generation) +
	             " sweeps, dimension " + std::to_string(st.dimension()) +
	             "; contained in J: " + yes_no(inside_J),
	         Json{{"stable", st.stable}, {"sweeps", st.generation},
	              {"dimension", st.dimension()}, {"inside_J", inside_J}});
	if (probe)
	{
		bool member = st.contains(*probe);
		rep.line("probe " + probe->to_string() + ": " + (member ? "member" : "not a member"),
		         Json{{"probe", probe->to_string()}, {"member", member}});
	}
	return 0;
}

int cmd_jordan_verify(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	if (o.window < 1)
		throw UsageError("--window must be >= 1");
	std::mt19937_64 rng(o.seed);
	bool all = true;
	auto record = [&](std::string const &name, bool ok, std::string const &extra) {
		all = all && ok;
		rep.line(name + ": " + (ok ? "pass" : "FAIL") + extra,
		         Json{{"check", name}, {"ok", ok}});
	};

	bool char3 = f.characteristic() == 3;
	if (char3)
	{
		record("sigma annihilation (window " + std::to_string(o.window) + ")",
		       char3_sigma_annihilation_check(f, o.window), "");
		bool w_ok = true;
		for (std::int64_t i = 1; i <= o.window; ++i)
			for (std::int64_t j = 1; j <= o.window; ++j)
				w_ok = w_ok && char3_w_products(i, j, f).holds();
		record("v_i w_j = 0 and w_i w_j = u_|i-j|/2 - u_(i+j)/2 (i, j <= " +
		           std::to_string(o.window) + ")",
		       w_ok, "");
	}
	else
		rep.line("characteristic-3 checks skipped for field " + f.to_string(),
		         Json{{"check", "char3"}, {"skipped", true}});

	std::size_t jordan_fail = 0;
	for (std::size_t t = 0; t < o.trials; ++t)
	{
		auto x = random_element(f, rng, 10, o.window);
		auto y = random_element(f, rng, 10, o.window);
		if (!jordan_identity_check(x, y))
			++jordan_fail;
	}
	record("Jordan identity on " + std::to_string(o.trials) + " random pairs (seed " +
	           std::to_string(o.seed) + ")",
	       jordan_fail == 0, jordan_fail ? " (" + std::to_string(jordan_fail) + " failures)" : "");

	if (char3)
	{
		bool ok = true;
		for (std::size_t t = 0; t < o.trials; ++t)
		{
			auto x = a_part(random_element(f, rng, 10, o.window));
			auto y = a_part(random_element(f, rng, 10, o.window));
			ok = ok && a_part_product_check(x, y);
		}
		record("a-part product rule on " + std::to_string(o.trials) + " random pairs", ok, "");
	}
	return all ? 0 : 1;
}

int cmd_baric_build(Options const &o, Reporter &rep)
{
	auto f = FieldSpec::parse(o.field);
	if (o.dim_A < 1)
		throw UsageError("--dimA must be >= 1");
	std::mt19937_64 rng(o.seed);
	BaricAlgebra b(random_baric_spec(f, o.dim_A, o.dim_I, rng));
	bool all = true;
	auto record = [&](std::string const &name, bool ok) {
		all = all && ok;
		rep.line(name + ": " + (ok ? "pass" : "FAIL"), Json{{"check", name}, {"ok", ok}});
	};
	rep.line("baric algebra dim A = " + std::to_string(o.dim_A) + ", dim I = " +
	             std::to_string(o.dim_I) + " over " + f.to_string() + " (seed " +
	             std::to_string(o.seed) + ")",
	         Json{{"dimA", o.dim_A}, {"dimI", o.dim_I}, {"field", f.to_string()}, {"seed", o.seed}});
	record("commutative", b.commutative());
	record("I B = 0", b.ideal_annihilates());
	record("ab - (w(b)a + w(a)b)/2 in I", b.a_products_in_I());
	record("weight multiplicative", b.weight_multiplicative());
	bool jordan = true;
	for (std::size_t t = 0; t < o.trials; ++t)
	{
		auto x = b.random_vector(rng), y = b.random_vector(rng);
		jordan = jordan && b.jordan_identity(x, y);
	}
	record("Jordan identity on " + std::to_string(o.trials) + " random pairs", jordan);
	return all ? 0 : 1;
}

void add_common(CLI::App *sub, Options &o)
{
	sub->add_option("--field", o.field, "q or gf:p")->capture_default_str();
	sub->add_option("--format", o.format, "text or json")
	    ->check(CLI::IsMember({"text", "json"}))
	    ->capture_default_str();
}

} // namespace

std::vector<std::string> split_top_level(std::string const &text)
{
	std::vector<std::string> out;
	int depth = 0;
	std::string cur;
	for (char c : text)
	{
		if (c == '(')
			++depth;
		else if (c == ')')
			--depth;
		if (c == ',' && depth == 0)
		{
			out.push_back(cur);
			cur.clear();
		}
		else
			cur += c;
	}
	if (cur.find_first_not_of(" \t") != std::string::npos)
		out.push_back(cur);
	return out;
}

CommandResult run_command(std::vector<std::string> const &args)
{
	Options o;
	CLI::App app{"Exact arithmetic in the algebra HW", "hw"};
	app.require_subcommand(1);

	auto *eval = app.add_subcommand("eval", "evaluate an element expression");
	eval->add_option("expr", o.expr)->required();
	add_common(eval, o);

	auto *dec = app.add_subcommand("decompose", "split an element into eigenvector parts");
	dec->add_option("expr", o.expr)->required();
	dec->add_option("--axis", o.axis)->capture_default_str();
	add_common(dec, o);

	auto *cp = app.add_subcommand("char-poly", "adjoint matrix on <a, a(-j), a(j), s(j)>");
	cp->add_option("--j", o.j)->capture_default_str();
	add_common(cp, o);

	auto *fv = app.add_subcommand("fusion-verify", "check the fusion law on an eigenbasis window");
	fv->add_option("--axis", o.axis)->capture_default_str();
	fv->add_option("--window", o.window)->capture_default_str();
	fv->add_option("--law", o.law)->check(CLI::IsMember({"hw", "monster"}))->capture_default_str();
	add_common(fv, o);

	auto *aut = app.add_subcommand("aut-check", "certify a map as multiplicative on a window");
	aut->add_option("--map", o.map, "tau|pi|translate:t|reflect:t|rho|theta|psi")->required();
	aut->add_option("--window", o.window)->capture_default_str();
	aut->add_option("--trials", o.trials)->capture_default_str();
	aut->add_option("--seed", o.seed)->capture_default_str();
	add_common(aut, o);

	auto *cl = app.add_subcommand("closure", "subalgebra generated by elements");
	cl->add_option("--gens", o.gens)->required();
	cl->add_option("--sweeps", o.sweeps)->capture_default_str();
	add_common(cl, o);

	auto *id = app.add_subcommand("ideal", "ideal generated by elements (windowed multipliers)");
	id->add_option("--gens", o.gens)->required();
	id->add_option("--window", o.window)->capture_default_str();
	id->add_option("--sweeps", o.sweeps)->capture_default_str();
	id->add_option("--probe", o.probe);
	add_common(id, o);

	auto *jv = app.add_subcommand("jordan-verify", "characteristic-3 identities and the Jordan identity");
	jv->add_option("--trials", o.trials)->capture_default_str();
	jv->add_option("--seed", o.seed)->capture_default_str();
	jv->add_option("--window", o.window)->capture_default_str();
	add_common(jv, o);

	auto *bb = app.add_subcommand("baric-build", "random baric Jordan algebra A + I");
	bb->add_option("--dimA", o.dim_A)->capture_default_str();
	bb->add_option("--dimI", o.dim_I)->capture_default_str();
	bb->add_option("--seed", o.seed)->capture_default_str();
	bb->add_option("--trials", o.trials)->capture_default_str();
	add_common(bb, o);

	CommandResult result;
	try
	{
		app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
	}
	catch (CLI::ParseError const &e)
	{
		std::ostringstream out, err;
		int code = app.exit(e, out, err);
		result.out = out.str();
		result.err = err.str();
		result.status = code == 0 ? 0 : 2;
		return result;
	}

	Reporter rep(o.format == "json");
	try
	{
		auto *sub = app.get_subcommands().front();
		auto const &name = sub->get_name();
		if (name == "eval")
			result.status = cmd_eval(o, rep);
		else if (name == "decompose")
			result.status = cmd_decompose(o, rep);
		else if (name == "char-poly")
			result.status = cmd_char_poly(o, rep);
		else if (name == "fusion-verify")
			result.status = cmd_fusion_verify(o, rep);
		else if (name == "aut-check")
			result.status = cmd_aut_check(o, rep);
		else if (name == "closure")
			result.status = cmd_closure(o, rep);
		else if (name == "ideal")
			result.status = cmd_ideal(o, rep);
		else if (name == "jordan-verify")
			result.status = cmd_jordan_verify(o, rep);
		else
			result.status = cmd_baric_build(o, rep);
	}
	catch (ParseError const &e)
	{
		result.err = std::string("parse error ") + e.what() + "\n";
		result.status = 2;
	}
	catch (std::invalid_argument const &e)
	{
		result.err = std::string("error: ") + e.what() + "\n";
		result.status = 2;
	}
	catch (UsageError const &e)
	{
		result.err = std::string("error: ") + e.what() + "\n";
		result.status = 2;
	}
	catch (std::domain_error const &e)
	{
		result.err = std::string("error: ") + e.what() + "\n";
		result.status = 2;
	}
	result.out = rep.str();
	return result;
}

} // namespace hw::cli
