#include "multideal/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multideal/errors.hpp"
#include "multideal/howald.hpp"
#include "multideal/johnson.hpp"
#include "multideal/polyhedra.hpp"

namespace multideal::cli {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string format_facet(const polyhedra::Facet& f, const std::vector<std::string>& vars) {
    std::string lhs;
    for (std::size_t j = 0; j < f.normal.size(); ++j) {
        if (f.normal[j] == 0) continue;
        if (!lhs.empty()) lhs += " + ";
        if (f.normal[j] != 1) lhs += std::to_string(f.normal[j]) + "*";
        lhs += vars[j];
    }
    return lhs + " >= " + std::to_string(f.offset);
}

json facet_json(const polyhedra::Facet& f) { return json{{"normal", f.normal}, {"offset", f.offset}}; }

std::string format_interval(const howald::Interval& iv) {
    return std::string(iv.lo_open ? "(" : "[") + iv.lo.to_string() + ", " + iv.hi.to_string() +
           (iv.hi_open ? ")" : "]");
}

json interval_json(const howald::Interval& iv) {
    return json{{"lo", iv.lo.to_string()}, {"hi", iv.hi.to_string()}, {"lo_open", iv.lo_open}, {"hi_open", iv.hi_open}};
}

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

std::string shape_string(const johnson::DeterminantalShape& s) {
    return std::to_string(s.m) + "x" + std::to_string(s.n) + " generic matrix, " + std::to_string(s.r) + "x" +
           std::to_string(s.r) + " minors";
}

json shape_json(const johnson::DeterminantalShape& s) { return json{{"m", s.m}, {"n", s.n}, {"r", s.r}}; }

struct Options {
    std::string format = "text";
    bool timing = false;

    std::string ideal_file;
    std::string vars;
    std::string gens;

    std::string c;
    std::string monomial;
    std::string interval;
    bool lo_open = false, lo_closed = false, hi_open = false, hi_closed = false;

    johnson::DeterminantalShape shape;
    int minor_size = 0;
    long long exponent = 0;
};

// Accumulates either "key: value" text lines or a JSON object.
class Report {
public:
    Report(std::string command, bool as_json) : as_json_(as_json) {
        add("command", command, command);
    }
    void add(const std::string& key, const std::string& text, json value) {
        if (as_json_) doc_[key] = std::move(value);
        else lines_.push_back(key + ": " + text);
    }
    void add_json(const std::string& key, json value) {
        if (as_json_) doc_[key] = std::move(value);
    }
    void add_text(const std::string& line) {
        if (!as_json_) lines_.push_back(line);
    }
    void write(std::ostream& out) const {
        if (as_json_) {
            out << doc_.dump(2) << '\n';
        } else {
            for (const auto& l : lines_) out << l << '\n';
        }
    }

private:
    bool as_json_;
    json doc_ = json::object();
    std::vector<std::string> lines_;
};

MonomialIdeal load_ideal(const Options& o, Report& report) {
    if (!o.ideal_file.empty() && (!o.vars.empty() || !o.gens.empty()))
        throw ParseError("use either --ideal or --vars/--gens, not both");
    IdealDocument doc;
    if (!o.ideal_file.empty()) doc = IdealDocument::from_file(o.ideal_file);
    else if (!o.vars.empty()) doc = IdealDocument::from_lists(o.vars, o.gens);
    else throw ParseError("an ideal is required: --ideal FILE or --vars ... --gens ...");
    auto ideal = doc.to_ideal();
    report.add_text("variables: " + join(ideal.variables(), ", "));
    report.add_text("ideal: " + ideal.to_string());
    report.add_json("input", json{{"vars", ideal.variables()}, {"gens", ideal.generator_strings()}});
    return ideal;
}

howald::Interval parse_interval(const Options& o, const Rational& default_hi) {
    howald::Interval iv{0, default_hi, true, false};
    if (!o.interval.empty()) {
        const auto dots = o.interval.find("..");
        if (dots == std::string::npos) throw ParseError("interval must look like LO..HI, got '" + o.interval + "'");
        iv.lo = Rational::parse(o.interval.substr(0, dots));
        iv.hi = Rational::parse(o.interval.substr(dots + 2));
    }
    if (o.lo_open && o.lo_closed) throw ParseError("--lo-open and --lo-closed are exclusive");
    if (o.hi_open && o.hi_closed) throw ParseError("--hi-open and --hi-closed are exclusive");
    if (o.lo_closed) iv.lo_open = false;
    if (o.hi_open) iv.hi_open = true;
    return iv;
}

Rational require_c(const Options& o) {
    if (o.c.empty()) throw ParseError("-c is required");
    return Rational::parse(o.c);
}

void cmd_lct(const Options& o, Report& r) {
    const auto ideal = load_ideal(o, r);
    const auto value = howald::lct(ideal);
    r.add("lct", value.to_string(), value.to_string());
}

void cmd_mult(const Options& o, Report& r) {
    const auto ideal = load_ideal(o, r);
    const auto c = require_c(o);
    r.add("c", c.to_string(), c.to_string());
    const auto result = howald::multiplier_ideal(ideal, c);
    r.add("multiplier_ideal", result.to_string(), result.generator_strings());
    // Top-level vars/gens make the JSON report readable as an ideal document.
    r.add_json("vars", result.variables());
    r.add_json("gens", result.generator_strings());
}

void cmd_jump(const Options& o, Report& r) {
    const auto ideal = load_ideal(o, r);
    const auto iv = parse_interval(o, howald::default_interval(ideal).hi);
    r.add("interval", format_interval(iv), interval_json(iv));
    const auto report = howald::jumping_numbers(ideal, iv);
    const auto numbers = rational_strings(report.numbers);
    r.add("jumping_numbers", join(numbers, ", "), numbers);
    json ideals = json::array();
    for (std::size_t k = 0; k < report.numbers.size(); ++k) {
        r.add_text("J(I^" + numbers[k] + "): " + report.ideals[k].to_string());
        ideals.push_back(report.ideals[k].generator_strings());
    }
    r.add_json("ideals", ideals);
}

void cmd_threshold(const Options& o, Report& r) {
    const auto ideal = load_ideal(o, r);
    if (o.monomial.empty()) throw ParseError("--monomial is required");
    const auto v = parse_monomial(o.monomial, ideal.variables());
    r.add("monomial", format_monomial(v, ideal.variables()), format_monomial(v, ideal.variables()));
    const auto t = howald::threshold_of_monomial(ideal, v);
    if (!t) {
        r.add("threshold", "infinity", "infinity");
        r.add_json("witnesses", json::array());
        return;
    }
    r.add("threshold", t->value.to_string(), t->value.to_string());
    json witnesses = json::array();
    for (const auto& f : t->witnesses) {
        r.add_text("witness: " + format_facet(f, ideal.variables()));
        witnesses.push_back(facet_json(f));
    }
    r.add_json("witnesses", witnesses);
}

void cmd_newton(const Options& o, Report& r) {
    const auto ideal = load_ideal(o, r);
    if (ideal.is_zero()) throw DomainError("the zero ideal has no Newton polyhedron");
    const auto newton = polyhedra::newton_polyhedron(ideal.generators());
    json facets = json::array();
    for (const auto& f : newton.facets) {
        r.add_text("facet: " + format_facet(f, ideal.variables()));
        facets.push_back(facet_json(f));
    }
    r.add_json("facets", facets);
}

void add_shape(const Options& o, Report& r) {
    o.shape.validate();
    r.add("shape", shape_string(o.shape), shape_json(o.shape));
}

void cmd_det_lct(const Options& o, Report& r) {
    add_shape(o, r);
    const auto value = johnson::det_lct(o.shape);
    r.add("lct", value.to_string(), value.to_string());
}

void cmd_det_mult(const Options& o, Report& r) {
    add_shape(o, r);
    const auto c = require_c(o);
    r.add("c", c.to_string(), c.to_string());
    std::vector<std::string> exps;
    for (const auto& a : johnson::det_exponents(o.shape, c)) exps.push_back(a.str());
    r.add("exponents", join(exps, ", "), exps);
    const auto result = johnson::det_multiplier_ideal(o.shape, c);
    json factors = json::array();
    for (const auto& f : result.factors) factors.push_back(json{{"minor_size", f.minor_size}, {"exponent", f.exponent}});
    r.add("multiplier_ideal", result.to_string(), result.to_string());
    r.add_json("factors", factors);
    const auto note = johnson::containment_annotation(result);
    if (!note.empty()) r.add("note", note, note);
}

void cmd_det_jump(const Options& o, Report& r) {
    add_shape(o, r);
    const auto iv = parse_interval(o, Rational(static_cast<long long>(o.shape.m) * o.shape.n));
    r.add("interval", format_interval(iv), interval_json(iv));
    const auto candidates = johnson::det_jumping_candidates(o.shape, iv);
    std::vector<std::string> values;
    json detail = json::array();
    for (const auto& cand : candidates) {
        values.push_back(cand.value.to_string());
        detail.push_back(json{{"value", cand.value.to_string()}, {"incrementing", cand.incrementing}});
    }
    r.add("jumping_numbers", join(values, ", "), values);
    for (const auto& cand : candidates) {
        std::vector<std::string> sizes;
        for (auto i : cand.incrementing) sizes.push_back("I_" + std::to_string(i));
        r.add_text("candidate " + cand.value.to_string() + ": steps " + join(sizes, ", "));
    }
    r.add_json("candidates", detail);
}

void cmd_det_expand(const Options& o, Report& r) {
    o.shape.validate();
    const std::string shape = std::to_string(o.shape.m) + "x" + std::to_string(o.shape.n) + " generic matrix";
    r.add("shape", shape, json{{"m", o.shape.m}, {"n", o.shape.n}});
    const auto e = johnson::symbolic_power_expansion(o.shape, o.minor_size, o.exponent);
    const std::string lhs = "I_" + std::to_string(e.minor_size) + "^(" + std::to_string(e.exponent) + ")";
    r.add("symbolic_power", lhs, lhs);
    r.add("partitions", std::to_string(e.partition_count), e.partition_count);
    r.add("expansion", e.to_string(), e.terms);
}

void cmd_det_minors(const Options& o, Report& r) {
    add_shape(o, r);
    const auto vars = johnson::matrix_variables(o.shape);
    const auto minors = johnson::minor_generators(o.shape);
    r.add("count", std::to_string(minors.size()), minors.size());
    json list = json::array();
    for (const auto& minor : minors) {
        std::string poly;
        json terms = json::array();
        for (const auto& t : minor.terms) {
            const auto mono = format_monomial(t.exponents, vars);
            poly += (t.sign > 0 ? (poly.empty() ? "" : " + ") : (poly.empty() ? "-" : " - ")) + mono;
            terms.push_back(json{{"sign", t.sign}, {"monomial", mono}});
        }
        std::vector<std::string> rows, cols;
        for (auto i : minor.rows) rows.push_back(std::to_string(i));
        for (auto j : minor.columns) cols.push_back(std::to_string(j));
        r.add_text("minor rows {" + join(rows, ",") + "} cols {" + join(cols, ",") + "}: " + poly);
        list.push_back(json{{"rows", minor.rows}, {"columns", minor.columns}, {"terms", terms}});
    }
    r.add_json("minors", list);
}

} // namespace

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

IdealDocument IdealDocument::from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed ideal document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("gens"))
        throw ParseError("ideal document needs \"vars\" and \"gens\"");
    IdealDocument out;
    try {
        out.variables = doc.at("vars").get<std::vector<std::string>>();
        out.generators = doc.at("gens").get<std::vector<std::string>>();
    } catch (const json::exception&) {
        throw ParseError("\"vars\" and \"gens\" must be arrays of strings");
    }
    if (out.variables.empty()) throw ParseError("ideal document has no variables");
    return out;
}

IdealDocument IdealDocument::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read ideal file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

IdealDocument IdealDocument::from_lists(std::string_view vars, std::string_view gens) {
    IdealDocument out{split_list(vars), split_list(gens)};
    if (out.variables.empty()) throw ParseError("--vars is empty");
    return out;
}

MonomialIdeal IdealDocument::to_ideal() const { return MonomialIdeal::parse(variables, generators); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiplier ideals, log canonical thresholds and jumping numbers"};
    app.name("multideal");
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", o.timing, "Append elapsed time (output is then not reproducible)");
    };
    auto add_ideal = [&](CLI::App* sub) {
        sub->add_option("--ideal", o.ideal_file, "JSON file with \"vars\" and \"gens\"");
        sub->add_option("--vars", o.vars, "Comma-separated variable names");
        sub->add_option("--gens", o.gens, "Comma-separated monomial generators");
        add_common(sub);
    };
    auto add_interval = [&](CLI::App* sub) {
        sub->add_option("--interval", o.interval, "LO..HI");
        sub->add_flag("--lo-open", o.lo_open);
        sub->add_flag("--lo-closed", o.lo_closed);
        sub->add_flag("--hi-open", o.hi_open);
        sub->add_flag("--hi-closed", o.hi_closed);
    };
    auto add_shape_opts = [&](CLI::App* sub, bool with_r) {
        sub->add_option("-m", o.shape.m, "Rows")->required();
        sub->add_option("-n", o.shape.n, "Columns")->required();
        if (with_r) sub->add_option("-r", o.shape.r, "Minor size")->required();
        add_common(sub);
    };

    auto* lct = app.add_subcommand("lct", "Log canonical threshold of a monomial ideal");
    add_ideal(lct);
    auto* mult = app.add_subcommand("mult", "Multiplier ideal J(I^c)");
    add_ideal(mult);
    mult->add_option("-c", o.c, "Exponent P/Q")->required();
    auto* jump = app.add_subcommand("jump", "Jumping numbers and their multiplier ideals");
    add_ideal(jump);
    add_interval(jump);
    auto* threshold = app.add_subcommand("threshold", "Threshold of a monomial with witness facets");
    add_ideal(threshold);
    threshold->add_option("--monomial", o.monomial, "Monomial such as z^2*w")->required();
    auto* newton = app.add_subcommand("newton", "Facets of the Newton polyhedron");
    add_ideal(newton);

    auto* det_lct = app.add_subcommand("det-lct", "lct of a generic determinantal ideal");
    add_shape_opts(det_lct, true);
    auto* det_mult = app.add_subcommand("det-mult", "Multiplier ideal of a determinantal ideal");
    add_shape_opts(det_mult, true);
    det_mult->add_option("-c", o.c, "Exponent P/Q")->required();
    auto* det_jump = app.add_subcommand("det-jump", "Jumping-number candidates of a determinantal ideal");
    add_shape_opts(det_jump, true);
    add_interval(det_jump);
    auto* det_expand = app.add_subcommand("det-expand", "Partition expansion of I_i^(a)");
    add_shape_opts(det_expand, false);
    det_expand->add_option("-i", o.minor_size, "Minor size")->required();
    det_expand->add_option("-a", o.exponent, "Symbolic power")->required();
    auto* det_minors = app.add_subcommand("det-minors", "Minors generating I_r with determinant expansions");
    add_shape_opts(det_minors, true);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage_error;
    }

    CLI::App* chosen = app.get_subcommands().front();
    if (chosen == det_expand) o.shape.r = 1;
    Report report(chosen->get_name(), o.format == "json");
    const auto started = std::chrono::steady_clock::now();
    try {
        if (chosen == lct) cmd_lct(o, report);
        else if (chosen == mult) cmd_mult(o, report);
        else if (chosen == jump) cmd_jump(o, report);
        else if (chosen == threshold) cmd_threshold(o, report);
        else if (chosen == newton) cmd_newton(o, report);
        else if (chosen == det_lct) cmd_det_lct(o, report);
        else if (chosen == det_mult) cmd_det_mult(o, report);
        else if (chosen == det_jump) cmd_det_jump(o, report);
        else if (chosen == det_expand) cmd_det_expand(o, report);
        else if (chosen == det_minors) cmd_det_minors(o, report);
    } catch (const ParseError& e) {
        err << "multideal: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const DomainError& e) {
        err << "multideal: " << e.what() << '\n';
        return exit_domain_error;
    }
    if (o.timing) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        std::ostringstream text;
        text << ms;
        report.add("elapsed_ms", text.str(), ms);
    }
    report.write(out);
    return exit_ok;
}

} // namespace multideal::cli
