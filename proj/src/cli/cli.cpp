#include "smallpoint/cli/cli.hpp"

#include "smallpoint/algstruct/algstruct.hpp"
#include "smallpoint/cli/parse.hpp"
#include "smallpoint/cmsurvey/cmsurvey.hpp"
#include "smallpoint/elimination/elimination.hpp"
#include "smallpoint/heights/heights.hpp"
#include "smallpoint/nflattice/nflattice.hpp"
#include "smallpoint/realpoint/realpoint.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace smallpoint {

using Json = nlohmann::ordered_json;

std::string dyadic_decimal(const Rat& x0) {
    Rat x = x0;
    x.canonicalize();
    Int den = x.get_den();
    int k = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++k;
    }
    if (den != 1) throw input_error("dyadic_decimal: denominator is not a power of two");
    if (k == 0) return x.get_num().get_str();
    // k fractional digits represent p / 2^k exactly
    std::string s = to_decimal(x, k);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

Rat parse_exact_number(const std::string& s) {
    if (s.find('/') != std::string::npos) return parse_rational(s);
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    std::string digits;
    long frac = 0;
    bool seen_digit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, seen_digit = true) digits += s[i];
    if (i < s.size() && s[i] == '.') {
        for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++frac, seen_digit = true)
            digits += s[i];
    }
    long ex = 0;
    if (seen_digit && i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        bool eneg = false;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) eneg = s[j++] == '-';
        std::size_t start = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == start || j - start > 6) throw input_error("not a number: '" + s + "'");
        ex = std::stol(s.substr(start, j - start));
        if (eneg) ex = -ex;
        i = j;
    }
    if (!seen_digit || i != s.size()) throw input_error("not a number: '" + s + "'");
    Rat r{Int(digits, 10)};
    long p = ex - frac;
    if (p > 0) r *= Rat(pow_int(Int(10), (unsigned long)p));
    if (p < 0) r /= Rat(pow_int(Int(10), (unsigned long)-p));
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

namespace {

struct Globals {
    std::string tol = "1e-7";
    int budget_depth = 0;
    long budget_branches = 10000;
    std::string format;
    unsigned long seed = 0;
    int threads = 1;
    std::string out;
    int log_level = 0;
};

class Logger {
public:
    Logger(std::ostream& err, int level) : err_(err), level_(level) {}
    void info(const std::string& s) const {
        if (level_ >= 1) err_ << "[smallpoint] " << s << '\n';
    }
    void debug(const std::string& s) const {
        if (level_ >= 2) err_ << "[smallpoint] " << s << '\n';
    }

private:
    std::ostream& err_;
    int level_;
};

int log_level_from_env() {
    const char* v = std::getenv("SMALLPOINT_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s == "debug" || s == "trace" || s == "2") return 2;
    if (s == "info" || s == "1") return 1;
    return 0;
}

Json int_or_string(const Int& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

// outward decimal rendering: a value already exact at `digits` places prints as is
std::string decimal_down(const Rat& x, int digits) {
    std::string t = to_decimal(x, digits);
    if (x >= 0 || parse_exact_number(t) == x) return t;
    return to_decimal(Rat(x - Rat(1, pow_int(Int(10), unsigned(digits)))), digits);
}
std::string decimal_up(const Rat& x, int digits) {
    std::string t = to_decimal(x, digits);
    if (x <= 0 || parse_exact_number(t) == x) return t;
    return to_decimal(Rat(x + Rat(1, pow_int(Int(10), unsigned(digits)))), digits);
}

Json ledger_json(const std::vector<std::pair<std::string, Rat>>& led) {
    Json a = Json::array();
    for (const auto& [tag, b] : led) a.push_back({{"tag", tag}, {"bound", to_string(b)}});
    return a;
}

Json height_json(const HeightEnclosure& h) {
    Json j;
    j["lower"] = to_string(h.lower);
    j["upper"] = to_string(h.upper);
    j["exact"] = h.exact;
    j["lower_decimal"] = decimal_down(h.lower, 12);
    j["upper_decimal"] = decimal_up(h.upper, 12);
    j["relative_width"] = decimal_up(h.relative_width(), 12);
    return j;
}

std::string height_text(const HeightEnclosure& h) {
    if (h.exact && h.lower == h.upper) return to_string(h.upper) + " exact";
    return "[" + decimal_down(h.lower, 12) + ", " + decimal_up(h.upper, 12) + "]";
}

std::string outcome_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "Found";
    case SearchStatus::no_real_point: return "NoRealPointFound";
    case SearchStatus::inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string zpoly_text(const ZPoly& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
    return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

QPoly to_univariate(const std::string& text) {
    if (max_variable_index(text) > 1) throw input_error("expected a univariate polynomial in x: '" + text + "'");
    QPolyN f = parse_polynomial(text, 1);
    QPoly p;
    for (const auto& [m, c] : f.terms()) {
        std::size_t e = m[0];
        if (p.size() <= e) p.resize(e + 1, Rat(0));
        p[e] = c;
    }
    trim(p);
    return p;
}

ZPoly to_integer_poly(const std::string& text) {
    QPoly p = to_univariate(text);
    ZPoly z;
    for (const auto& c : p) {
        if (c.get_den() != 1) throw input_error("expected integer coefficients: '" + text + "'");
        z.push_back(c.get_num());
    }
    return z;
}

NumberField field_from_text(const std::string& text) {
    ZPoly p = to_integer_poly(text);
    if (degree(p) < 1) throw input_error("field polynomial must have positive degree: '" + text + "'");
    if (degree(p) == 1) return rational_field();
    return make_number_field(p);
}

QMat matrix_from_text(const std::string& text) {
    QMat m;
    for (const auto& row : split(text, ';')) {
        if (row.empty()) continue;
        QVec r;
        for (const auto& e : split(row, ',')) r.push_back(parse_exact_number(e));
        if (!m.empty() && r.size() != m[0].size()) throw input_error("ragged matrix: '" + text + "'");
        m.push_back(r);
    }
    if (m.empty()) throw input_error("empty matrix");
    return m;
}

ZMat integer_matrix(const QMat& q) {
    ZMat z;
    for (const auto& row : q) {
        ZVec r;
        for (const auto& c : row) {
            if (c.get_den() != 1) throw input_error("lattice basis must be integral");
            r.push_back(c.get_num());
        }
        z.push_back(r);
    }
    return z;
}

template <class V> std::string row_text(const V& row) {
    std::ostringstream os;
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << to_string(row[i]);
    return os.str();
}

template <class V> Json row_json(const V& row) {
    Json a = Json::array();
    for (const auto& c : row) a.push_back(to_string(c));
    return a;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
}

struct Command {
    const Globals& g;
    Logger log;
    std::ostream& out;

    std::string fmt(const std::string& fallback) const { return g.format.empty() ? fallback : g.format; }
    Rat tol() const {
        Rat t = parse_exact_number(g.tol);
        if (t <= 0) throw input_error("--tol must be positive");
        return t;
    }
    SearchBudget budget() const {
        SearchBudget b;
        b.max_depth = g.budget_depth;
        b.max_branches = g.budget_branches;
        b.tol = tol();
        if (b.max_depth < 0 || b.max_branches < 1) throw input_error("budgets must be positive");
        return b;
    }
};

int cmd_find_point(const Command& c, const std::vector<std::string>& polys, std::size_t nvars) {
    auto gens = parse_system(polys, nvars);
    std::size_t n = gens.empty() ? std::max<std::size_t>(nvars, 1) : gens[0].nvars();
    c.log.info("find-point: " + std::to_string(gens.size()) + " generators in " + std::to_string(n) + " variables");
    SearchBudget b = c.budget();
    SearchOutcome o = find_small_height_real_point(AlgebraicSet(n, gens), b);
    c.log.info("outcome " + outcome_name(o.status) + (o.reason.empty() ? "" : " (" + o.reason + ")"));

    Rat eps = std::min(b.tol, Rat(1, pow_int(Int(2), 40)));
    std::string f = c.fmt("json");
    if (f == "json") {
        Json j;
        j["outcome"] = outcome_name(o.status);
        j["reason"] = o.reason;
        j["nvars"] = n;
        if (o.certificate) {
            const auto& cert = *o.certificate;
            Json coords = Json::array();
            for (const auto& x : cert.coordinates) {
                Json cj;
                Json mp = Json::array();
                for (const auto& z : x.minpoly()) mp.push_back(int_or_string(z));
                DyadicInterval iv = x.refine(eps);
                cj["minpoly"] = mp;
                cj["interval"] = {dyadic_decimal(iv.lo()), dyadic_decimal(iv.hi())};
                cj["decimal"] = x.to_decimal(12);
                coords.push_back(cj);
            }
            j["coordinates"] = coords;
            j["field_degree"] = cert.field_degree;
            j["membership_checked"] = cert.membership_checked;
            j["height"] = height_json(cert.height);
            j["bound_ledger"] = ledger_json(cert.bound_ledger);
            Json lifts = Json::array();
            for (const auto& l : cert.lifts) lifts.push_back({{"fiber_degree", degree(l.fiber)}, {"bound", to_string(l.bound)}});
            j["lifts"] = lifts;
        }
        c.out << j.dump(2) << '\n';
    } else if (f == "csv") {
        write_csv_row(c.out, {"coordinate", "decimal", "lo", "hi", "minpoly"});
        if (o.certificate)
            for (std::size_t i = 0; i < o.certificate->coordinates.size(); ++i) {
                const auto& x = o.certificate->coordinates[i];
                DyadicInterval iv = x.refine(eps);
                write_csv_row(c.out, {"x" + std::to_string(i + 1), x.to_decimal(12), dyadic_decimal(iv.lo()),
                                      dyadic_decimal(iv.hi()), zpoly_text(x.minpoly())});
            }
    } else {
        c.out << "outcome: " << outcome_name(o.status) << '\n';
        if (!o.reason.empty()) c.out << "reason: " << o.reason << '\n';
        if (o.certificate) {
            for (std::size_t i = 0; i < o.certificate->coordinates.size(); ++i) {
                const auto& x = o.certificate->coordinates[i];
                c.out << "x" << i + 1 << " = " << x.to_decimal(12) << "  minpoly " << zpoly_text(x.minpoly()) << '\n';
            }
            c.out << "height: " << height_text(o.certificate->height) << '\n';
            for (const auto& [tag, bd] : o.certificate->bound_ledger) c.out << "bound " << tag << ": " << to_string(bd) << '\n';
        }
    }
    switch (o.status) {
    case SearchStatus::found: return exit_ok;
    case SearchStatus::no_real_point: return exit_no_point;
    case SearchStatus::inconclusive: return exit_inconclusive;
    }
    return exit_inconclusive;
}

int cmd_project(const Command& c, const std::vector<std::string>& polys, std::size_t nvars) {
    auto gens = parse_system(polys, nvars);
    if (gens.empty()) throw input_error("project: need at least one polynomial");
    std::size_t n = gens[0].nvars();
    if (n < 2) throw input_error("project: need at least two variables");
    AlgebraicSet V(n, gens);
    bool monic = false;
    for (const auto& f : V.nonzero_generators()) monic = monic || is_monic_in_last(f);
    IntegerMatrix phi;
    AlgebraicSet Vp = V;
    if (!monic) {
        NoetherStep st = noether_step(V);
        phi = st.phi;
        std::vector<QPolyN> tg{st.g};
        for (const auto& t : st.transformed) tg.push_back(t);
        Vp = AlgebraicSet(n, tg, V.degree_bound);
        c.log.info("project: coordinates changed so that a generator is monic in x" + std::to_string(n));
    }
    AlgebraicSet img = project_image(Vp);
    std::vector<std::string> lines;
    for (const auto& f : img.generators) {
        std::string s = to_string(f);
        if (std::find(lines.begin(), lines.end(), s) == lines.end()) lines.push_back(s);
    }
    if (lines.empty()) lines.push_back("0");
    std::string f = c.fmt("text");
    if (f == "json") {
        Json j;
        j["nvars"] = img.nvars;
        j["generators"] = lines;
        Json pj = Json::array();
        for (const auto& row : phi) pj.push_back(row_json(row));
        j["change_of_coordinates"] = pj;
        c.out << j.dump(2) << '\n';
    } else if (f == "csv") {
        write_csv_row(c.out, {"generator"});
        for (const auto& l : lines) write_csv_row(c.out, {"\"" + l + "\""});
    } else {
        for (const auto& l : lines) c.out << l << '\n';
    }
    return exit_ok;
}

int cmd_resultant(const Command& c, const std::vector<std::string>& polys, const std::vector<int>& degrees) {
    if (polys.size() != 2) throw input_error("resultant: need exactly two polynomials");
    QPoly u = to_univariate(polys[0]), v = to_univariate(polys[1]);
    int d = degree(u), e = degree(v);
    if (!degrees.empty()) {
        if (degrees.size() != 2) throw input_error("resultant: --degrees takes two values");
        d = degrees[0];
        e = degrees[1];
    }
    if (d < 0 || e < 0 || degree(u) > d || degree(v) > e)
        throw input_error("resultant: formal degrees must be at least the actual degrees");
    Rat r = sylvester_resultant(u, v, d, e);
    std::string f = c.fmt("text");
    if (f == "json") {
        c.out << Json{{"resultant", to_string(r)}, {"degrees", {d, e}}}.dump(2) << '\n';
    } else if (f == "csv") {
        write_csv_row(c.out, {"resultant"});
        write_csv_row(c.out, {to_string(r)});
    } else {
        c.out << to_string(r) << '\n';
    }
    return exit_ok;
}

int cmd_height(const Command& c, const std::vector<std::string>& values, const std::string& minpoly, int root) {
    HeightEnclosure h;
    if (!minpoly.empty()) {
        if (!values.empty()) throw input_error("height: give either values or --minpoly, not both");
        auto roots = isolate_real_roots(to_univariate(minpoly));
        if (root < 0 || std::size_t(root) >= roots.size())
            throw input_error("height: --root must index one of the " + std::to_string(roots.size()) + " real roots");
        h = height_algebraic(roots[std::size_t(root)], c.tol());
    } else if (values.size() == 1) {
        h = height_rational(parse_exact_number(values[0]));
    } else if (!values.empty()) {
        std::vector<RAN> p;
        for (const auto& v : values) p.emplace_back(parse_exact_number(v));
        h = height_point(p, c.tol());
    } else {
        throw input_error("height: nothing to measure");
    }
    std::string f = c.fmt("text");
    if (f == "json") {
        c.out << height_json(h).dump(2) << '\n';
    } else if (f == "csv") {
        write_csv_row(c.out, {"lower", "upper", "exact"});
        write_csv_row(c.out, {to_string(h.lower), to_string(h.upper), h.exact ? "true" : "false"});
    } else {
        c.out << height_text(h) << '\n';
    }
    return exit_ok;
}

int cmd_lattice(const Command& c, const std::string& basis_text, const std::string& gram_text, const std::string& field_text) {
    QMat basis = matrix_from_text(basis_text);
    std::string f = c.fmt("text");
    if (field_text.empty()) {
        std::optional<QMat> form;
        if (!gram_text.empty()) form = matrix_from_text(gram_text);
        LLLResult r = lll_reduce(integer_matrix(basis), form);
        if (f == "json") {
            Json b = Json::array(), t = Json::array();
            for (const auto& row : r.basis) b.push_back(row_json(row));
            for (const auto& row : r.transform) t.push_back(row_json(row));
            c.out << Json{{"basis", b}, {"transform", t}}.dump(2) << '\n';
        } else {
            for (const auto& row : r.basis) c.out << row_text(row) << '\n';
        }
        return exit_ok;
    }
    NumberField F = field_from_text(field_text);
    std::size_t d = std::size_t(F.degree);
    if (basis[0].size() % d != 0) throw input_error("lattice-reduce: row length must be a multiple of the field degree");
    NFModuleLattice L{{F}, {int(basis[0].size() / d)}, basis};
    MinkowskiReduction m = minkowski_reduce(L);
    c.log.info("lattice-reduce: index " + m.index.get_str() + ", bound " + to_string(m.bound));
    if (f == "json") {
        Json img = Json::array(), nu = Json::array();
        for (const auto& row : m.image) img.push_back(row_json(row));
        for (const auto& block : m.nu)
            for (const auto& row : block) {
                Json r = Json::array();
                for (const auto& e : row) r.push_back(row_json(e));
                nu.push_back(r);
            }
        c.out << Json{{"index", m.index.get_str()}, {"exponent", m.exponent.get_str()}, {"bound", to_string(m.bound)},
                      {"nu", nu}, {"image", img}, {"ledger", ledger_json(m.ledger)}}
                     .dump(2)
              << '\n';
    } else {
        c.out << "index " << m.index << "\nexponent " << m.exponent << "\nbound " << to_string(m.bound) << '\n';
        for (const auto& block : m.nu)
            for (const auto& row : block) {
                c.out << "nu";
                for (const auto& e : row) c.out << " [" << row_text(e) << "]";
                c.out << '\n';
            }
        for (const auto& row : m.image) c.out << "image " << row_text(row) << '\n';
    }
    return exit_ok;
}

int cmd_goursat(const Command& c, const std::vector<std::string>& field_texts, const std::vector<std::string>& thetas) {
    std::vector<NumberField> fields;
    for (const auto& t : field_texts) fields.push_back(field_from_text(t));
    std::vector<ProductAlgebraElement> theta;
    for (const auto& t : thetas) {
        ProductAlgebraElement e;
        for (const auto& comp : split(t, '|')) {
            QVec v;
            for (const auto& x : split(comp, ',')) v.push_back(parse_exact_number(x));
            e.components.push_back(v);
        }
        theta.push_back(e);
    }
    GenerationResult r = generates_product_algebra(fields, theta);
    std::string f = c.fmt("text");
    if (f == "json") {
        c.out << Json{{"generates", r.generates}, {"by_span", r.by_span}, {"by_criterion", r.by_criterion},
                      {"witness", r.witness}}
                     .dump(2)
              << '\n';
    } else if (f == "csv") {
        write_csv_row(c.out, {"generates", "witness"});
        write_csv_row(c.out, {r.generates ? "true" : "false", "\"" + r.witness + "\""});
    } else {
        c.out << (r.generates ? "generates" : "does not generate: " + r.witness) << '\n';
    }
    return exit_ok;
}

int cmd_cm_survey(const Command& c, long dmax, const std::string& csv_path) {
    SurveyResult s = survey(dmax);
    check_invariant(s.bound_holds && s.max_height_sq_over_absD <= 1, "cm-survey: H(tau)^2 exceeds |D|");
    std::string csv = survey_csv(s);
    std::string f = c.fmt("json");
    if (!csv_path.empty()) {
        std::ofstream os(csv_path, std::ios::binary);
        if (!os) throw input_error("cannot write '" + csv_path + "'");
        os << csv;
        if (!os.flush()) throw input_error("cannot write '" + csv_path + "'");
    } else if (f == "csv") {
        c.out << csv;
        return exit_ok;
    }
    c.log.info("cm-survey: " + std::to_string(s.rows.size()) + " rows");
    std::ostringstream slope;
    slope.setf(std::ios::fixed);
    slope.precision(6);
    slope << s.fitted_exponent;
    if (f == "text") {
        c.out << "rows " << s.rows.size() << "\nfitted_exponent " << slope.str() << "\nmax_height_sq_over_absD "
              << to_string(s.max_height_sq_over_absD) << '\n';
    } else {
        Json j;
        j["rows"] = s.rows.size();
        j["fitted_exponent"] = slope.str();
        j["max_height_sq_over_absD"] = to_string(s.max_height_sq_over_absD);
        c.out << j.dump(2) << '\n';
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    g.log_level = log_level_from_env();
    CLI::App app{"Small-height real points on algebraic sets, plus supporting number-theoretic tools", "smallpoint"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--tol", g.tol, "relative width target for height enclosures (p/q, decimal or 1e-k)");
    app.add_option("--budget-depth", g.budget_depth, "recursion depth cap, 0 for twice the variable count");
    app.add_option("--budget-branches", g.budget_branches, "cap on search branches");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", g.seed, "accepted for interface stability; every computation is deterministic");
    app.add_option("--threads", g.threads, "accepted; the search runs on one thread")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write the main output (cm-survey: the CSV table) to this file");

    std::vector<std::string> polys, values, fields, thetas;
    std::size_t nvars = 0;
    std::vector<int> degrees;
    std::string minpoly, basis, gram, field, input_path;
    int root = 0;
    long dmax = 0;

    auto* fp = app.add_subcommand("find-point", "search for a real point of small height");
    fp->add_option("polynomials", polys, "generators in x1..xn");
    fp->add_option("--file", input_path, "read generators from a file, one per line, '#' starts a comment");
    fp->add_option("--vars", nvars, "number of variables (default: largest index used)");
    auto* pr = app.add_subcommand("project", "generators of the projection forgetting the last variable");
    pr->add_option("polynomials", polys);
    pr->add_option("--file", input_path, "read generators from a file");
    pr->add_option("--vars", nvars);
    auto* rs = app.add_subcommand("resultant", "Sylvester resultant of two univariate polynomials");
    rs->add_option("polynomials", polys)->required()->expected(2);
    rs->add_option("--degrees", degrees, "formal degrees d e")->expected(2);
    auto* ht = app.add_subcommand("height", "absolute multiplicative height");
    ht->add_option("values", values, "one rational, or the coordinates of a rational point");
    ht->add_option("--minpoly", minpoly, "polynomial whose real root is measured");
    ht->add_option("--root", root, "index of the real root, ascending from 0");
    auto* lr = app.add_subcommand("lattice-reduce", "LLL, or Minkowski reduction of an O-lattice with --field");
    lr->add_option("--basis", basis, "rows separated by ';', entries by ','")->required();
    lr->add_option("--gram", gram, "quadratic form for LLL");
    lr->add_option("--field", field, "defining polynomial; basis rows are then integral-basis coordinates");
    auto* gs = app.add_subcommand("goursat", "does a set of elements generate a product of number fields");
    gs->add_option("--field", fields, "defining polynomial of one factor, repeatable")->required();
    gs->add_option("--theta", thetas, "element: components separated by '|', power-basis coefficients by ','");
    auto* cm = app.add_subcommand("cm-survey", "heights of CM points against discriminant");
    cm->add_option("--dmax", dmax, "largest |D|")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }

    std::ostringstream buffer;
    Command c{g, Logger(err, g.log_level), g.out.empty() || cm->parsed() ? out : buffer};
    int code = exit_ok;
    try {
        if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) throw input_error("cannot read '" + input_path + "'");
            for (std::string line; std::getline(in, line);) {
                line = line.substr(0, line.find('#'));
                if (line.find_first_not_of(" \t\r") != std::string::npos) polys.push_back(line);
            }
        }
        if ((fp->parsed() || pr->parsed()) && polys.empty()) throw input_error("no polynomials given");
        if (fp->parsed()) code = cmd_find_point(c, polys, nvars);
        else if (pr->parsed()) code = cmd_project(c, polys, nvars);
        else if (rs->parsed()) code = cmd_resultant(c, polys, degrees);
        else if (ht->parsed()) code = cmd_height(c, values, minpoly, root);
        else if (lr->parsed()) code = cmd_lattice(c, basis, gram, field);
        else if (gs->parsed()) code = cmd_goursat(c, fields, thetas);
        else if (cm->parsed()) code = cmd_cm_survey(c, dmax, g.out);
        if (!g.out.empty() && !cm->parsed()) {
            std::ofstream os(g.out, std::ios::binary);
            if (!os || !(os << buffer.str()) || !os.flush()) throw input_error("cannot write '" + g.out + "'");
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const invariant_error& e) {
        err << "invariant violated: " << e.what() << '\n';
        return exit_invariant;
    } catch (const budget_exhausted& e) {
        err << "budget exhausted: " << e.what() << '\n';
        return exit_inconclusive;
    }
    return code;
}

} // namespace smallpoint
