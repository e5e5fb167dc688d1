#include "virlike/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace virlike {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) {
    return j.dump(2);
}

ordered_json parse(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("invalid JSON");
    return j;
}

void require_keys(const ordered_json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where + ": expected a JSON object");
    for (const auto& key : required)
        if (!obj.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
    for (const auto& [key, value] : obj.items())
        if (!required.count(key) && !optional.count(key))
            throw SchemaError(where + ": unknown field '" + key + "'");
}

long get_int(const ordered_json& v, const std::string& where) {
    if (!v.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return v.get<long>();
}

Rational get_rational(const ordered_json& v, const std::string& where) {
    if (!v.is_string()) throw SchemaError(where + ": expected a rational string");
    try {
        return Rational::from_string(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

ordered_json window_to_json(const Window& w) {
    ordered_json j;
    j["m"] = {w.m.lo, w.m.hi};
    j["n"] = {w.n.lo, w.n.hi};
    j["r"] = {w.r.lo, w.r.hi};
    j["s"] = {w.s.lo, w.s.hi};
    return j;
}

Interval interval_from_json(const ordered_json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) throw SchemaError(where + ": expected [lo, hi]");
    Interval iv{get_int(v[0], where), get_int(v[1], where)};
    if (iv.lo > iv.hi) throw SchemaError(where + ": empty interval");
    return iv;
}

Window window_from_json(const ordered_json& j) {
    require_keys(j, {"m", "n", "r", "s"}, {}, "window");
    return Window{interval_from_json(j["m"], "window.m"), interval_from_json(j["n"], "window.n"),
                  interval_from_json(j["r"], "window.r"), interval_from_json(j["s"], "window.s")};
}

ordered_json entry_to_json(const ReportEntry& e) {
    ordered_json j;
    j["equation_id"] = std::string(equation_id_name(e.id));
    j["h"] = e.h;
    j["k"] = e.k;
    j["r"] = e.r;
    j["s"] = e.s;
    j["m"] = e.m;
    j["n"] = e.n;
    j["residual"] = e.residual;
    return j;
}

ordered_json report_to_json(const ResidualReport& r) {
    ordered_json j;
    j["pass"] = r.pass();
    j["entries"] = ordered_json::array();
    for (const ReportEntry& e : r.entries) j["entries"].push_back(entry_to_json(e));
    return j;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

ordered_json family_spec_to_json(const FamilySpec& spec) {
    ordered_json j;
    j["family"] = std::string(family_name(spec.id));
    j["paper_label"] = std::string(family_paper_label(spec.id));
    j["a"] = spec.a.str();
    j["lambda"] = spec.lambda.str();
    j["mu"] = spec.mu.str();
    return j;
}

}  // namespace

std::string to_json_string(const LieElement& e) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    Rational central(0);
    for (const auto& [idx, c] : e.terms()) {
        if (idx.central) {
            central = c;
            continue;
        }
        ordered_json term;
        term["alpha"] = idx.alpha;
        term["beta"] = idx.beta;
        term["coeff"] = c.str();
        j["terms"].push_back(std::move(term));
    }
    j["central"] = central.str();
    return dump(j);
}

LieElement lie_element_from_json_string(const std::string& text) {
    const ordered_json j = parse(text);
    require_keys(j, {"terms", "central"}, {}, "lie element");
    if (!j["terms"].is_array()) throw SchemaError("lie element: 'terms' must be an array");
    LieElement out;
    std::set<std::pair<long, long>> seen;
    for (const auto& term : j["terms"]) {
        require_keys(term, {"alpha", "beta", "coeff"}, {}, "lie element term");
        const long a = get_int(term["alpha"], "term.alpha");
        const long b = get_int(term["beta"], "term.beta");
        if (!seen.insert({a, b}).second) throw SchemaError("lie element: duplicate term");
        const Rational c = get_rational(term["coeff"], "term.coeff");
        if (c.is_zero()) throw SchemaError("lie element: zero coefficient stored");
        out.add_term(GenIndex::basis(a, b), c);
    }
    out.add_term(GenIndex::c(), get_rational(j["central"], "central"));
    return out;
}

std::string to_json_string(const ModVector& v) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& [key, c] : v.terms()) {
        ordered_json term;
        term["m"] = key.first;
        term["n"] = key.second;
        term["coeff"] = c.str();
        j["terms"].push_back(std::move(term));
    }
    return dump(j);
}

std::string to_json_string(const FamilySpec& spec) {
    return dump(family_spec_to_json(spec));
}

FamilySpec family_spec_from_json_string(const std::string& text) {
    const ordered_json j = parse(text);
    require_keys(j, {"family", "lambda", "mu"}, {"a", "paper_label"}, "family spec");
    if (!j["family"].is_string()) throw SchemaError("family spec: 'family' must be a string");
    const auto id = family_from_name(j["family"].get<std::string>());
    if (!id) throw SchemaError("family spec: unknown family '" + j["family"].get<std::string>() + "'");
    FamilySpec spec;
    spec.id = *id;
    spec.lambda = get_rational(j["lambda"], "lambda");
    spec.mu = get_rational(j["mu"], "mu");
    if (j.contains("a")) spec.a = get_rational(j["a"], "a");
    return spec;
}

std::string to_json_string(const ActionTable& t) {
    const Window& w = t.window();
    ordered_json j;
    j["lambda"] = t.lambda().str();
    j["mu"] = t.mu().str();
    j["window"] = window_to_json(w);
    for (const char which : {'f', 'g'}) {
        ordered_json arr = ordered_json::array();
        for (long r = w.r.lo; r <= w.r.hi; ++r)
            for (long s = w.s.lo; s <= w.s.hi; ++s)
                for (long m = w.m.lo; m <= w.m.hi; ++m)
                    for (long n = w.n.lo; n <= w.n.hi; ++n) {
                        const bool present = which == 'f' ? t.has_f(r, s, m, n) : t.has_g(r, s, m, n);
                        if (!present) continue;
                        ordered_json e;
                        e["r"] = r;
                        e["s"] = s;
                        e["m"] = m;
                        e["n"] = n;
                        e["value"] = (which == 'f' ? t.f(r, s, m, n) : t.g(r, s, m, n)).str();
                        arr.push_back(std::move(e));
                    }
        j[std::string(1, which)] = std::move(arr);
    }
    return dump(j);
}

ActionTable action_table_from_json_string(const std::string& text) {
    const ordered_json j = parse(text);
    require_keys(j, {"lambda", "mu", "window", "f", "g"}, {}, "action table");
    const Window w = window_from_json(j["window"]);
    ActionTable t(w, get_rational(j["lambda"], "lambda"), get_rational(j["mu"], "mu"));
    for (const char which : {'f', 'g'}) {
        const auto& arr = j[std::string(1, which)];
        if (!arr.is_array()) throw SchemaError(std::string("action table: '") + which + "' must be an array");
        std::set<std::tuple<long, long, long, long>> seen;
        for (const auto& e : arr) {
            require_keys(e, {"r", "s", "m", "n", "value"}, {}, "table entry");
            const long r = get_int(e["r"], "entry.r");
            const long s = get_int(e["s"], "entry.s");
            const long m = get_int(e["m"], "entry.m");
            const long n = get_int(e["n"], "entry.n");
            if (!w.in_rs(r, s) || !w.in_mn(m, n)) throw SchemaError("table entry outside window");
            if (!seen.insert({r, s, m, n}).second) throw SchemaError("duplicate table entry");
            Rational value = get_rational(e["value"], "entry.value");
            if (which == 'f') t.set_f(r, s, m, n, std::move(value));
            else t.set_g(r, s, m, n, std::move(value));
        }
    }
    return t;
}

void save_table(const ActionTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << to_json_string(t) << '\n';
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

ActionTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return action_table_from_json_string(buffer.str());
}

std::string to_json_string(const ResidualReport& r) {
    return dump(report_to_json(r));
}

std::string to_csv(const ResidualReport& r) {
    std::ostringstream os;
    os << "equation_id,h,k,r,s,m,n,residual\n";
    for (const ReportEntry& e : r.entries)
        os << equation_id_name(e.id) << ',' << e.h << ',' << e.k << ',' << e.r << ',' << e.s << ','
           << e.m << ',' << e.n << ',' << csv_field(e.residual) << '\n';
    return os.str();
}

std::string to_json_string(const WitnessReport& r) {
    ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["variant"] = r.variant == WitnessVariant::S ? "S" : "S_prime";
    j["box"] = {{"alpha", {r.box.alpha_min, r.box.alpha_max}},
                {"beta", {r.box.beta_min, r.box.beta_max}}};
    j["rounds"] = r.rounds;
    j["span_rows"] = r.span_rows;
    j["all_certified"] = r.all_certified();
    j["targets"] = ordered_json::array();
    for (const TargetStatus& t : r.targets) {
        ordered_json e;
        e["alpha"] = t.alpha;
        e["beta"] = t.beta;
        e["certified"] = t.certified;
        e["reason"] = t.reason;
        j["targets"].push_back(std::move(e));
    }
    return dump(j);
}

std::string to_csv(const WitnessReport& r) {
    std::ostringstream os;
    os << "alpha,beta,certified,reason\n";
    for (const TargetStatus& t : r.targets)
        os << t.alpha << ',' << t.beta << ',' << (t.certified ? "true" : "false") << ','
           << csv_field(t.reason) << '\n';
    return os.str();
}

std::string to_json_string(const ClassifyResult& r) {
    ordered_json j;
    j["matches"] = ordered_json::array();
    for (const FamilySpec& spec : r.matches) j["matches"].push_back(family_spec_to_json(spec));
    j["diagnostics"] = ordered_json::array();
    for (const RejectionDiagnostic& d : r.diagnostics) {
        ordered_json e;
        e["family"] = std::string(family_name(d.id));
        e["reason"] = d.reason;
        e["report"] = report_to_json(d.diffs);
        j["diagnostics"].push_back(std::move(e));
    }
    return dump(j);
}

std::string to_json_string(const SweepReport& r) {
    ordered_json j = ordered_json::array();
    for (const SweepEntry& e : r.entries) {
        ordered_json item;
        item["t"] = e.t.str();
        item["pass"] = e.pass;
        j.push_back(std::move(item));
    }
    return dump(j);
}

std::string to_csv(const SweepReport& r) {
    std::ostringstream os;
    os << "t,pass\n";
    for (const SweepEntry& e : r.entries) os << e.t.str() << ',' << (e.pass ? "true" : "false") << '\n';
    return os.str();
}

std::string to_json_string(const std::vector<std::pair<long, long>>& ghw_set) {
    ordered_json j = ordered_json::array();
    for (const auto& [a, b] : ghw_set) j.push_back(ordered_json::array({a, b}));
    return dump(j);
}

}  // namespace virlike
