// dfcli: json problem files in, jump-locus and Dwyer-Fried reports out.
//
// Subcommands: xi, tau, gamma count, fiber, member, describe, sigma-probe,
// diagnose, toric, brieskorn, fox.  Every subcommand takes a problem file,
// --json for the canonical machine report, and --verify to cross-check the
// answer against the brute-force oracles where one exists.
// Exit codes: 0 success, 1 input error, 2 bound exceeded, 3 internal
// invariant violation (including a --verify disagreement).

#include "CLI11.hpp"
#include "json.hpp"

#include "df/jumploci.hpp"
#include "df/limits.hpp"
#include "df/oracle.hpp"
#include "df/spaces.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace df;

// ==== json emission ====

// Integers become json numbers while they fit in the double-safe range,
// decimal strings beyond it; rationals are always "p/q" strings.
json j_int(const Int& x) {
    static const Int bound = Int(1) << 53;
    if (x > -bound && x < bound) return x.convert_to<long long>();
    return x.str();
}

std::string rat_str(const Rat& q) {
    const Int n = Int(boost::multiprecision::numerator(q));
    const Int d = Int(boost::multiprecision::denominator(q));
    return n.str() + "/" + d.str();
}

json j_matrix_rows(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(j_int(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json j_group(const FgAbGroup& g) {
    json o;
    o["free_rank"] = g.free_rank();
    json t = json::array();
    for (const Int& d : g.torsion_factors()) t.push_back(j_int(d));
    o["torsion"] = t;
    return o;
}

// Generators of the preimage lattice, one row per generator (preimage
// coordinates, canonical order).
json j_subgroup(const Subgroup& s) {
    const IntMatrix& g = s.preimage().generators();
    json rows = json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) {
        json row = json::array();
        for (std::size_t r = 0; r < g.rows(); ++r) row.push_back(j_int(g.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json j_lattice(const Lattice& l) {
    const IntMatrix& g = l.generators();
    json rows = json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) {
        json row = json::array();
        for (std::size_t r = 0; r < g.rows(); ++r) row.push_back(j_int(g.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json j_char(const TorsionCharacter& e) {
    json vals = json::array();
    for (const Rat& v : e.values()) vals.push_back(rat_str(v));
    return vals;
}

json j_translated(const TranslatedSubgroup& t) {
    json o;
    o["subgroup"] = j_subgroup(t.xi);
    if (!t.eta.is_trivial()) o["translation"] = j_char(t.eta);
    return o;
}

json j_arrangement(const Arrangement& w) {
    json o;
    json cs = json::array();
    for (const TranslatedSubgroup& c : w.components) cs.push_back(j_translated(c));
    o["components"] = cs;
    json ps = json::array();
    for (const TorsionCharacter& p : w.points) ps.push_back(j_char(p));
    o["points"] = ps;
    return o;
}

const char* mode_name(ReportMode m) {
    switch (m) {
        case ReportMode::rank1_exact: return "rank1_exact";
        case ReportMode::arrangement_exact: return "arrangement_exact";
        default: return "upper_bound_only";
    }
}

const char* kind_name(ConstituentKind k) {
    switch (k) {
        case ConstituentKind::u_set: return "u_set";
        case ConstituentKind::sigma_set: return "sigma_set";
        default: return "sigma_and_theta";
    }
}

json j_report(const ObstructionReport& r) {
    json o;
    o["mode"] = mode_name(r.mode);
    o["exact"] = r.mode != ReportMode::upper_bound_only;
    o["c"] = j_int(r.c);
    json cs = json::array();
    for (const ObstructionConstituent& c : r.constituents) {
        json e;
        e["subgroup"] = j_subgroup(c.xi);
        e["kind"] = kind_name(c.kind);
        if (c.witness_eta) e["translation_witness"] = j_char(*c.witness_eta);
        cs.push_back(e);
    }
    o["constituents"] = cs;
    return o;
}

json j_probe(const SingularProbe& p) {
    json o;
    o["base_in_omega"] = p.base_in_omega;
    o["fiber_size"] = p.fiber_size;
    o["in_omega_count"] = p.in_omega_count;
    o["in_singular_set"] = p.in_singular_set();
    json ms = json::array();
    for (std::size_t i = 0; i < p.members.size(); ++i) {
        json m;
        m["nu"] = j_matrix_rows(p.members[i].matrix());
        m["in_omega"] = static_cast<bool>(p.member_in_omega[i]);
        ms.push_back(m);
    }
    o["members"] = ms;
    return o;
}

// ==== json parsing ====

Int parse_int(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (...) {
            throw input_error(what + ": bad integer '" + s + "'");
        }
    }
    throw input_error(what + ": expected an integer (number or decimal string)");
}

Rat parse_rat(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            const Int num(s.substr(0, slash));
            const Int den(s.substr(slash + 1));
            if (den == 0) throw input_error(what + ": zero denominator in '" + s + "'");
            return Rat(num, den);
        } catch (const input_error&) {
            throw;
        } catch (...) {
            throw input_error(what + ": bad rational '" + s + "'");
        }
    }
    throw input_error(what + ": expected a rational (\"p/q\" string or integer)");
}

IntMatrix parse_matrix_rows(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw input_error(what + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    if (cols == 0) throw input_error(what + ": rows must be non-empty");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw input_error(what + ": ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = parse_int(j[r][c], what);
    }
    return m;
}

FgAbGroup parse_group(const json& j, const std::string& what) {
    if (!j.is_object()) throw input_error(what + ": expected an object");
    if (!j.contains("free_rank") || !j["free_rank"].is_number_unsigned())
        throw input_error(what + ": needs a non-negative integer free_rank");
    const std::size_t n = j["free_rank"].get<std::size_t>();
    std::vector<Int> tors;
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array()) throw input_error(what + ": torsion must be an array");
        for (const json& t : j["torsion"]) tors.push_back(parse_int(t, what + " torsion"));
    }
    return FgAbGroup(n, tors);
}

Subgroup parse_subgroup(const json& j, const FgAbGroup& h, const std::string& what) {
    if (!j.is_array()) throw input_error(what + ": expected an array of generator rows");
    const std::size_t n = h.preimage_rank();
    IntMatrix cols(n, j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_array() || j[k].size() != n)
            throw input_error(what + ": generator " + std::to_string(k) + " must have length " +
                              std::to_string(n));
        for (std::size_t r = 0; r < n; ++r) cols.at(r, k) = parse_int(j[k][r], what);
    }
    return Subgroup(h, cols);
}

TorsionCharacter parse_char(const json& j, const FgAbGroup& h, const std::string& what) {
    if (!j.is_array() || j.size() != h.preimage_rank())
        throw input_error(what + ": expected " + std::to_string(h.preimage_rank()) +
                          " rational values");
    std::vector<Rat> vals;
    for (const json& v : j) vals.push_back(parse_rat(v, what));
    return TorsionCharacter(h, vals);
}

Arrangement parse_arrangement(const json& v, const FgAbGroup& h) {
    Arrangement w;
    if (v.contains("components")) {
        if (!v["components"].is_array()) throw input_error("variety components must be an array");
        for (const json& c : v["components"]) {
            if (!c.is_object() || !c.contains("subgroup"))
                throw input_error("each component needs a subgroup");
            Subgroup xi = parse_subgroup(c["subgroup"], h, "component subgroup");
            TorsionCharacter eta = c.contains("translation")
                                       ? parse_char(c["translation"], h, "component translation")
                                       : TorsionCharacter::trivial(h);
            w.components.push_back(TranslatedSubgroup(xi, eta));
        }
    }
    if (v.contains("points")) {
        if (!v["points"].is_array()) throw input_error("variety points must be an array");
        for (const json& p : v["points"]) w.points.push_back(parse_char(p, h, "variety point"));
    }
    return w;
}

LaurentPolynomial parse_poly(const json& v, const FgAbGroup& h) {
    if (!v.contains("terms") || !v["terms"].is_array())
        throw input_error("a hypersurface variety needs a terms array");
    std::vector<std::pair<std::vector<Int>, Int>> terms;
    for (const json& t : v["terms"]) {
        if (!t.is_object() || !t.contains("exponent") || !t.contains("coefficient"))
            throw input_error("each term needs an exponent vector and a coefficient");
        const json& e = t["exponent"];
        if (!e.is_array() || e.size() != h.preimage_rank())
            throw input_error("term exponents must have length " +
                              std::to_string(h.preimage_rank()));
        std::vector<Int> exp;
        for (const json& x : e) exp.push_back(parse_int(x, "term exponent"));
        terms.emplace_back(exp, parse_int(t["coefficient"], "term coefficient"));
    }
    return LaurentPolynomial::from_integer_terms(h, terms);
}

// ==== problem files ====

struct Flags {
    std::string file;
    bool json_out = false;
    bool verify = false;
    long long det_bound = Limits::det_group_order;
    std::size_t support_bound = Limits::hypersurface_support;
    std::size_t vertex_bound = 16;
    long long oracle_size_bound = 2000000;
    long long oracle_index_bound = 8;
    long long d = 0;
    bool d_given = false;
    long long i = 1;
    bool i_given = false;
    std::string nu_text;
    std::string nu_bar_text;
};

struct Problem {
    json raw;
    std::optional<FgAbGroup> group;
    std::optional<FgAbGroup> quotient;
    std::string kind;  // "", arrangement, hypersurface, toric, brieskorn
    std::optional<Arrangement> arr;
    std::optional<LaurentPolynomial> poly;
    std::optional<BrieskornInvariants> bk;
    std::vector<std::vector<Int>> bk_elements;
    std::size_t toric_vertices = 0;
    long long toric_i = 1;
    std::optional<Presentation> pres;
};

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open problem file: " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw input_error("problem file is not valid json: " + std::string(e.what()));
    }
}

Problem load_problem(const Flags& fl) {
    Limits::det_group_order = fl.det_bound;
    Limits::hypersurface_support = fl.support_bound;

    Problem p;
    p.raw = load_file(fl.file);
    if (!p.raw.is_object()) throw input_error("problem file must contain a json object");
    if (p.raw.contains("group")) p.group = parse_group(p.raw["group"], "group");
    if (p.raw.contains("quotient")) p.quotient = parse_group(p.raw["quotient"], "quotient");

    if (p.raw.contains("presentation")) {
        const json& pr = p.raw["presentation"];
        if (!pr.is_object() || !pr.contains("generators") || !pr["generators"].is_number_unsigned())
            throw input_error("presentation needs a non-negative integer generator count");
        const std::size_t q = pr["generators"].get<std::size_t>();
        std::vector<GroupWord> rel;
        if (pr.contains("relators")) {
            if (!pr["relators"].is_array()) throw input_error("relators must be an array of words");
            for (const json& r : pr["relators"]) {
                if (!r.is_string()) throw input_error("relators must be strings like \"x1 x2^-1\"");
                rel.push_back(GroupWord::parse(q, r.get<std::string>()));
            }
        }
        p.pres.emplace(q, rel);
    }

    if (!p.raw.contains("variety")) return p;
    const json& v = p.raw["variety"];
    if (!v.is_object() || !v.contains("type") || !v["type"].is_string())
        throw input_error("variety needs a type string");
    p.kind = v["type"].get<std::string>();

    if (p.kind == "arrangement") {
        if (!p.group) throw input_error("an arrangement variety needs a group");
        p.arr = parse_arrangement(v, *p.group);
    } else if (p.kind == "hypersurface") {
        if (!p.group) throw input_error("a hypersurface variety needs a group");
        p.poly = parse_poly(v, *p.group);
    } else if (p.kind == "toric") {
        if (!v.contains("vertices") || !v["vertices"].is_number_unsigned())
            throw input_error("a toric variety needs a vertex count");
        const std::size_t n = v["vertices"].get<std::size_t>();
        std::vector<std::vector<int>> facets;
        if (v.contains("facets")) {
            if (!v["facets"].is_array()) throw input_error("toric facets must be an array");
            for (const json& f : v["facets"]) {
                if (!f.is_array()) throw input_error("each facet must be a vertex array");
                std::vector<int> face;
                for (const json& x : f) {
                    if (!x.is_number_integer()) throw input_error("facet vertices must be integers");
                    face.push_back(x.get<int>());
                }
                facets.push_back(face);
            }
        }
        p.toric_i = fl.i_given
                        ? fl.i
                        : (v.contains("i") ? parse_int(v["i"], "toric i").convert_to<long long>() : 1);
        p.toric_vertices = n;
        const SimplicialComplex l(n, facets);
        p.arr = toric_char_variety(l, p.toric_i, fl.vertex_bound);
        const FgAbGroup derived = FgAbGroup::free_group(n);
        if (p.group && *p.group != derived)
            throw input_error("group does not match the toric complex (expected " + derived.str() + ")");
        p.group = derived;
    } else if (p.kind == "brieskorn") {
        if (!v.contains("exponents") || !v["exponents"].is_array())
            throw input_error("a brieskorn variety needs an exponents array");
        std::vector<Int> exps;
        for (const json& e : v["exponents"]) exps.push_back(parse_int(e, "brieskorn exponent"));
        std::vector<Int> tors;
        if (v.contains("torsion")) {
            if (!v["torsion"].is_array()) throw input_error("brieskorn torsion must be an array");
            for (const json& t : v["torsion"]) tors.push_back(parse_int(t, "brieskorn torsion"));
        }
        p.bk = brieskorn_invariants(exps, tors);
        if (v.contains("h_elements")) {
            if (!v["h_elements"].is_array()) throw input_error("h_elements must be an array of rows");
            for (const json& e : v["h_elements"]) {
                if (!e.is_array()) throw input_error("each h element must be a coordinate array");
                std::vector<Int> row;
                for (const json& x : e) row.push_back(parse_int(x, "h element"));
                p.bk_elements.push_back(row);
            }
        }
        if (p.group && *p.group != p.bk->h)
            throw input_error("group does not match the computed first homology (expected " +
                              p.bk->h.str() + ")");
        p.group = p.bk->h;
    } else {
        throw input_error("unknown variety type: " + p.kind);
    }
    return p;
}

const FgAbGroup& require_group(const Problem& p) {
    if (!p.group) throw input_error("this command needs a group in the problem file");
    return *p.group;
}

const FgAbGroup& require_quotient(const Problem& p) {
    if (!p.quotient) throw input_error("this command needs a quotient in the problem file");
    return *p.quotient;
}

const Arrangement& require_arrangement(Problem& p) {
    if (p.arr) return *p.arr;
    if (p.kind == "brieskorn") {
        p.arr = brieskorn_v1(*p.bk, p.bk_elements);
        return *p.arr;
    }
    if (p.kind == "hypersurface")
        throw input_error("this command needs an arrangement variety (hypersurface given)");
    throw input_error("the problem file has no variety");
}

json query_field(const Problem& p, const std::string& kind, const std::string& key) {
    if (!p.raw.contains("queries") || !p.raw["queries"].is_array()) return json();
    for (const json& q : p.raw["queries"]) {
        if (q.is_object() && q.value("kind", std::string()) == kind && q.contains(key))
            return q.at(key);
    }
    return json();
}

Int effective_d(const Problem& p, const Flags& fl, const std::string& kind) {
    Int d;
    if (fl.d_given) {
        d = fl.d;
    } else {
        const json q = query_field(p, kind, "d");
        if (q.is_null()) throw input_error(kind + " needs --d (or a matching file query)");
        d = parse_int(q, "query d");
    }
    if (d <= 0) throw input_error("d must be positive");
    return d;
}

json matrix_source(const Problem& p, const Flags& fl, const std::string& text,
                   const std::string& kind, const std::string& key) {
    if (!text.empty()) {
        try {
            return json::parse(text);
        } catch (const json::exception& e) {
            throw input_error("--" + key + " is not valid json: " + std::string(e.what()));
        }
    }
    const json q = query_field(p, kind, key);
    if (!q.is_null()) return q;
    throw input_error(kind + " needs --" + key + " (or a matching file query)");
}

// ==== verification helpers ====

struct Output {
    json rep;
    std::vector<std::string> lines;
    bool verify_failed = false;
};

void no_oracle_note(Output& out, const std::string& which) {
    out.rep["verify"] = json{{"note", "no independent oracle for " + which}};
    out.lines.push_back("[verify] no independent oracle for " + which);
}

// Deterministic scan for sample epimorphisms: odometer over all matrices with
// entries in [-2, 2], capped in both states visited and epis collected.
std::vector<Homomorphism> collect_epis(const FgAbGroup& h, const FgAbGroup& a, std::size_t want) {
    const std::size_t n = h.preimage_rank();
    const std::size_t m = a.preimage_rank();
    std::vector<int> st(n * m, 0);
    std::vector<Homomorphism> out;
    std::size_t states = 0;
    const std::size_t cap = 200000;
    while (states < cap) {
        ++states;
        IntMatrix mat(m, n);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c) mat.at(r, c) = st[r * n + c] - 2;
        try {
            Homomorphism nu(h, a, mat);
            if (nu.is_epi()) out.push_back(nu);
        } catch (const input_error&) {
        }
        if (out.size() >= want) break;
        std::size_t k = 0;
        while (k < st.size() && st[k] == 4) {
            st[k] = 0;
            ++k;
        }
        if (k == st.size()) break;
        ++st[k];
    }
    return out;
}

void verify_against_samples(Output& out, const FgAbGroup& h, const FgAbGroup& a,
                            const Arrangement& w) {
    const std::vector<Homomorphism> sample = collect_epis(h, a, 40);
    if (sample.empty()) {
        out.rep["verify"] = json{{"note", "no epimorphisms found in the scan window"}};
        out.lines.push_back("[verify] no epimorphisms found in the scan window");
        return;
    }
    const OmegaAgreementReport rep = oracle_omega_agreement(h, a, w, sample);
    json v;
    v["samples"] = sample.size();
    v["agrees"] = rep.all_agree;
    if (!rep.all_agree) {
        v["traces"] = rep.traces;
        out.verify_failed = true;
        for (const std::string& t : rep.traces) out.lines.push_back("[verify] DISAGREEMENT " + t);
    } else {
        out.lines.push_back("[verify] omega formulas agree on " + std::to_string(sample.size()) +
                            " sampled classes");
    }
    out.rep["verify"] = v;
}

// ==== subcommands ====

Output cmd_xi(Problem& p, const Flags& fl) {
    const Arrangement& w = require_arrangement(p);
    const Int d = effective_d(p, fl, "xi");
    std::vector<Subgroup> xs = xi_d(w, d);
    Output out;
    out.rep["command"] = "xi";
    out.rep["d"] = j_int(d);
    json arr = json::array();
    for (const Subgroup& x : xs) arr.push_back(j_subgroup(x));
    out.rep["subgroups"] = arr;
    out.lines.push_back("Xi_" + d.str() + ": " + std::to_string(xs.size()) + " subgroup(s)");
    for (const Subgroup& x : xs) out.lines.push_back("  " + x.str());
    if (fl.verify) {
        try {
            std::vector<Subgroup> ox = oracle_xi(w, d, Int(fl.oracle_index_bound));
            std::vector<Subgroup> a = xs, b = ox;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            const bool ok = a == b;
            json v;
            v["agrees"] = ok;
            json oarr = json::array();
            for (const Subgroup& x : ox) oarr.push_back(j_subgroup(x));
            v["oracle_subgroups"] = oarr;
            out.rep["verify"] = v;
            if (ok) {
                out.lines.push_back("[verify] subgroup oracle agrees (" +
                                    std::to_string(ox.size()) + " found)");
            } else {
                out.verify_failed = true;
                out.lines.push_back("[verify] DISAGREEMENT with the subgroup oracle");
            }
        } catch (const input_error& e) {
            out.rep["verify"] = json{{"note", std::string(e.what())}};
            out.lines.push_back("[verify] " + std::string(e.what()));
        }
    }
    return out;
}

Output cmd_tau(Problem& p, const Flags& fl) {
    const Int d = effective_d(p, fl, "tau");
    std::vector<Lattice> ls;
    if (p.kind == "hypersurface") {
        if (d != 1) throw input_error("hypersurface tau is only computed for d = 1");
        ls = admissible_tau1(*p.poly);
    } else {
        ls = tau_d(require_arrangement(p), d);
    }
    Output out;
    out.rep["command"] = "tau";
    out.rep["d"] = j_int(d);
    json arr = json::array();
    for (const Lattice& l : ls) arr.push_back(j_lattice(l));
    out.rep["lattices"] = arr;
    out.lines.push_back("tau_" + d.str() + ": " + std::to_string(ls.size()) + " lattice(s)");
    for (const Lattice& l : ls) out.lines.push_back("  " + l.str());
    if (fl.verify) no_oracle_note(out, "tau");
    return out;
}

Output cmd_gamma_count(Problem& p, const Flags& fl) {
    const FgAbGroup& h = require_group(p);
    const FgAbGroup& a = require_quotient(p);
    const Int n = gamma_count(h, a);
    Output out;
    out.rep["command"] = "gamma count";
    out.rep["count"] = j_int(n);
    out.lines.push_back("|Gamma(" + h.str() + ", " + a.str() + ")| = " + n.str());
    if (fl.verify) {
        const Int oc = oracle_gamma_count(h, a, Int(fl.oracle_size_bound));
        const bool ok = oc == n;
        out.rep["verify"] = json{{"agrees", ok}, {"oracle_count", j_int(oc)}};
        if (ok) {
            out.lines.push_back("[verify] enumeration oracle agrees");
        } else {
            out.verify_failed = true;
            out.lines.push_back("[verify] DISAGREEMENT: oracle counts " + oc.str());
        }
    }
    return out;
}

Output cmd_fiber(Problem& p, const Flags& fl) {
    const FgAbGroup& h = require_group(p);
    const FgAbGroup& a = require_quotient(p);
    const json m = matrix_source(p, fl, fl.nu_bar_text, "fiber", "nu_bar");
    const Homomorphism nu_bar(h, FgAbGroup::free_group(a.free_rank()),
                              parse_matrix_rows(m, "nu_bar"));
    std::vector<Homomorphism> reps = fiber_representatives(nu_bar, a);
    Output out;
    out.rep["command"] = "fiber";
    out.rep["nu_bar"] = j_matrix_rows(nu_bar.matrix());
    out.rep["size"] = reps.size();
    json arr = json::array();
    for (const Homomorphism& r : reps) arr.push_back(j_matrix_rows(r.matrix()));
    out.rep["representatives"] = arr;
    out.lines.push_back("fiber over the class of nu_bar: " + std::to_string(reps.size()) +
                        " class(es)");
    for (const Homomorphism& r : reps) out.lines.push_back("  " + r.str());
    if (fl.verify) no_oracle_note(out, "fiber");
    return out;
}

Output cmd_member(Problem& p, const Flags& fl) {
    const FgAbGroup& h = require_group(p);
    const FgAbGroup& a = require_quotient(p);
    const json m = matrix_source(p, fl, fl.nu_text, "member", "nu");
    const Homomorphism nu(h, a, parse_matrix_rows(m, "nu"));
    if (!nu.is_epi()) throw input_error("nu is not surjective");
    Output out;
    out.rep["command"] = "member";
    out.rep["nu"] = j_matrix_rows(nu.matrix());

    if (p.kind == "hypersurface") {
        const bool om = omega_member(nu, *p.poly);
        out.rep["omega"] = om;
        out.rep["upsilon"] = !om;
        out.lines.push_back(om ? "omega: in" : "omega: NOT in");
        if (fl.verify) no_oracle_note(out, "hypersurface membership");
        return out;
    }

    const Arrangement& w = require_arrangement(p);
    UpsilonWitness wit{v_of(Subgroup::zero(h)), v_of(Subgroup::zero(h)), 0};
    const bool ups = upsilon_member(nu, w, &wit);
    const bool om = omega_member(nu, w);
    out.rep["omega"] = om;
    out.rep["upsilon"] = ups;
    out.rep["u_bound"] = u_bound_member(nu, w);
    out.lines.push_back(om ? "omega: in" : "omega: NOT in");
    if (ups) {
        out.rep["witness"] = json{{"dim", wit.dim},
                                  {"image_coset", j_translated(wit.image_coset)},
                                  {"variety_coset", j_translated(wit.variety_coset)}};
        out.lines.push_back("witness: image " + wit.image_coset.str() + " meets " +
                            wit.variety_coset.str() + " in dimension " +
                            std::to_string(wit.dim));
    }

    json verdicts = json::array();
    for (const TranslatedSubgroup& c : maximal_translated_tori(w)) {
        const Subgroup xi = epsilon_of_cyclic_extension(c.xi, c.eta);
        json e;
        e["coset"] = j_translated(c);
        e["xi"] = j_subgroup(xi);
        e["sigma"] = sigma_member(nu, xi);
        e["u"] = u_member(nu, xi);
        e["theta"] = theta_member(nu, xi);
        verdicts.push_back(e);
        out.lines.push_back("  coset " + c.str() + ": sigma=" +
                            (e["sigma"].get<bool>() ? "true" : "false") + " u=" +
                            (e["u"].get<bool>() ? "true" : "false") + " theta=" +
                            (e["theta"].get<bool>() ? "true" : "false"));
    }
    out.rep["coset_verdicts"] = verdicts;

    if (fl.verify) {
        const OmegaAgreementReport rep = oracle_omega_agreement(h, a, w, {nu});
        const OmegaAgreementSample& s = rep.samples.at(0);
        json v;
        v["agrees"] = rep.all_agree;
        v["direct"] = s.not_upsilon;
        v["intersection_formula"] = s.intersection_form;
        if (s.rank1_form) v["rank1_formula"] = *s.rank1_form;
        if (!rep.all_agree) {
            v["traces"] = rep.traces;
            out.verify_failed = true;
            for (const std::string& t : rep.traces) out.lines.push_back("[verify] DISAGREEMENT " + t);
        } else {
            out.lines.push_back("[verify] all applicable omega formulas agree");
        }
        out.rep["verify"] = v;
    }
    return out;
}

Output cmd_describe(Problem& p, const Flags& fl) {
    const FgAbGroup& h = require_group(p);
    const FgAbGroup& a = require_quotient(p);
    Output out;
    out.rep["command"] = "describe";
    if (p.kind == "hypersurface") {
        const ObstructionReport r = omega_describe(h, a, *p.poly);
        out.rep["report"] = j_report(r);
        out.lines.push_back(std::string("mode: ") + mode_name(r.mode));
        out.lines.push_back("constituents: " + std::to_string(r.constituents.size()));
        for (const ObstructionConstituent& c : r.constituents)
            out.lines.push_back("  " + std::string(kind_name(c.kind)) + " at " + c.xi.str());
        if (fl.verify) no_oracle_note(out, "hypersurface descriptions");
        return out;
    }
    const Arrangement& w = require_arrangement(p);
    const ObstructionReport r = omega_describe(h, a, w);
    out.rep["report"] = j_report(r);
    out.lines.push_back(std::string("mode: ") + mode_name(r.mode));
    out.lines.push_back("c = " + r.c.str());
    out.lines.push_back("constituents: " + std::to_string(r.constituents.size()));
    for (const ObstructionConstituent& c : r.constituents)
        out.lines.push_back("  " + std::string(kind_name(c.kind)) + " at " + c.xi.str());
    if (fl.verify) verify_against_samples(out, h, a, w);
    return out;
}

Output cmd_sigma_probe(Problem& p, const Flags& fl) {
    const FgAbGroup& h = require_group(p);
    const FgAbGroup& a = require_quotient(p);
    const json m = matrix_source(p, fl, fl.nu_bar_text, "sigma-probe", "nu_bar");
    const Homomorphism nu_bar(h, FgAbGroup::free_group(a.free_rank()),
                              parse_matrix_rows(m, "nu_bar"));
    const Arrangement& w = require_arrangement(p);
    const SingularProbe probe = singular_set_probe(w, a, nu_bar);
    Output out;
    out.rep["command"] = "sigma-probe";
    out.rep["nu_bar"] = j_matrix_rows(nu_bar.matrix());
    out.rep["probe"] = j_probe(probe);
    out.lines.push_back("base class in omega: " + std::string(probe.base_in_omega ? "yes" : "no"));
    out.lines.push_back("fiber size " + std::to_string(probe.fiber_size) + ", in omega " +
                        std::to_string(probe.in_omega_count));
    out.lines.push_back(probe.in_singular_set() ? "in the singular set" : "not in the singular set");
    if (fl.verify) no_oracle_note(out, "singular-set probes");
    return out;
}

Output cmd_diagnose(Problem& p, const Flags& fl) {
    const FgAbGroup& a = require_quotient(p);
    const Arrangement& w = require_arrangement(p);
    const PullbackDiagnosis d = pullback_diagnostics(w, a);
    const char* verdict = d.verdict == PullbackVerdict::guaranteed_pullback ? "guaranteed_pullback"
                          : d.verdict == PullbackVerdict::guaranteed_strict ? "guaranteed_strict"
                                                                           : "inconclusive";
    Output out;
    out.rep["command"] = "diagnose";
    out.rep["verdict"] = verdict;
    out.rep["reason"] = d.reason;
    out.lines.push_back(std::string("verdict: ") + verdict);
    out.lines.push_back("reason: " + d.reason);
    if (fl.verify) no_oracle_note(out, "pullback diagnostics");
    return out;
}

Output cmd_toric(Problem& p, const Flags& fl) {
    if (p.kind != "toric") throw input_error("toric needs a toric variety in the problem file");
    const FgAbGroup& h = require_group(p);
    const Arrangement& w = *p.arr;
    Output out;
    out.rep["command"] = "toric";
    out.rep["i"] = p.toric_i;
    out.rep["vertices"] = p.toric_vertices;
    out.rep["arrangement"] = j_arrangement(w);
    out.lines.push_back("characteristic arrangement through degree " + std::to_string(p.toric_i) +
                        ": " + std::to_string(w.components.size()) + " component(s)");
    for (const TranslatedSubgroup& c : w.components) out.lines.push_back("  " + c.str());
    if (p.quotient) {
        const ObstructionReport r = omega_describe(h, *p.quotient, w);
        out.rep["report"] = j_report(r);
        out.lines.push_back(std::string("omega mode: ") + mode_name(r.mode) + ", " +
                            std::to_string(r.constituents.size()) + " constituent(s)");
        if (fl.verify) verify_against_samples(out, h, *p.quotient, w);
    } else if (fl.verify) {
        no_oracle_note(out, "toric arrangements without a quotient");
    }
    return out;
}

Output cmd_brieskorn(Problem& p, const Flags& fl) {
    if (p.kind != "brieskorn")
        throw input_error("brieskorn needs a brieskorn variety in the problem file");
    const BrieskornInvariants& bk = *p.bk;
    Output out;
    out.rep["command"] = "brieskorn";
    out.rep["genus"] = j_int(bk.seifert.genus);
    out.rep["euler"] = rat_str(bk.seifert.euler);
    json orbits = json::array();
    for (const SeifertOrbit& o : bk.seifert.orbits)
        orbits.push_back(json{{"alpha", j_int(o.alpha)}, {"beta", j_int(o.beta)}, {"s", j_int(o.s)}});
    out.rep["orbits"] = orbits;
    out.rep["torsion_order"] = j_int(bk.torsion_order);
    out.rep["copies"] = j_int(bk.alpha);
    out.rep["group"] = j_group(bk.h);
    out.lines.push_back("Seifert genus " + bk.seifert.genus.str() + ", Euler number " +
                        rat_str(bk.seifert.euler));
    for (const SeifertOrbit& o : bk.seifert.orbits)
        out.lines.push_back("  orbit alpha=" + o.alpha.str() + " beta=" + o.beta.str() + " s=" +
                            o.s.str());
    out.lines.push_back("H1 = " + bk.h.str() + ", torsion order " + bk.torsion_order.str() +
                        ", translated copies " + bk.alpha.str());
    try {
        const Arrangement& w = require_arrangement(p);
        out.rep["arrangement"] = j_arrangement(w);
        out.lines.push_back("degree-1 variety: " + std::to_string(w.components.size()) +
                            " component(s), " + std::to_string(w.points.size()) + " point(s)");
        if (p.quotient) {
            const ObstructionReport r = omega_describe(bk.h, *p.quotient, w);
            out.rep["report"] = j_report(r);
            out.lines.push_back(std::string("omega mode: ") + mode_name(r.mode) + ", " +
                                std::to_string(r.constituents.size()) + " constituent(s)");
            if (fl.verify) {
                verify_against_samples(out, bk.h, *p.quotient, w);
                return out;
            }
        }
    } catch (const input_error& e) {
        out.rep["v1_note"] = std::string(e.what());
        out.lines.push_back(std::string("degree-1 variety unavailable: ") + e.what());
    }
    if (fl.verify) no_oracle_note(out, "brieskorn invariants");
    return out;
}

Output cmd_fox(Problem& p, const Flags& fl) {
    if (!p.pres) throw input_error("fox needs a presentation in the problem file");
    const Presentation& pr = *p.pres;
    const std::vector<std::vector<LaurentPolynomial>> alex = fox_alexander_matrix(pr);
    const LaurentPolynomial delta = minors_gcd(alex, pr.abelianization());
    Output out;
    out.rep["command"] = "fox";
    out.rep["abelianization"] = j_group(pr.abelianization());
    json rows = json::array();
    for (const std::vector<LaurentPolynomial>& row : alex) {
        json r = json::array();
        for (const LaurentPolynomial& e : row) r.push_back(e.str());
        rows.push_back(r);
    }
    out.rep["alexander_matrix"] = rows;
    out.rep["minors_gcd"] = delta.str();
    out.lines.push_back("abelianization: " + pr.abelianization().str());
    out.lines.push_back("alexander matrix (" + std::to_string(alex.size()) + " x " +
                        std::to_string(pr.generators()) + "):");
    for (const std::vector<LaurentPolynomial>& row : alex) {
        std::string line = "  ";
        for (std::size_t j = 0; j < row.size(); ++j)
            line += (j ? " | " : "") + row[j].str();
        out.lines.push_back(line);
    }
    out.lines.push_back("minors gcd: " + delta.str());
    if (fl.verify) no_oracle_note(out, "fox calculus");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dwyer-Fried sets and jump-locus reports from json problem files"};
    app.require_subcommand(1);
    Flags fl;

    auto add_common = [&fl](CLI::App* s) {
        s->add_option("file", fl.file, "json problem file")->required();
        s->add_flag("--json", fl.json_out, "emit the canonical json report");
        s->add_flag("--verify", fl.verify, "cross-check against the brute-force oracles");
        s->add_option("--det-bound", fl.det_bound,
                      "largest determinant-group order expanded into components");
        s->add_option("--support-bound", fl.support_bound, "largest hypersurface support size");
        s->add_option("--vertex-bound", fl.vertex_bound, "largest toric vertex count");
        s->add_option("--oracle-size-bound", fl.oracle_size_bound,
                      "candidate cap for the counting oracle");
        s->add_option("--oracle-index-bound", fl.oracle_index_bound,
                      "index cap for the subgroup oracle");
    };

    auto mark_d = [&fl](const std::string&) { fl.d_given = true; };
    CLI::App* xi = app.add_subcommand("xi", "the Xi_d subgroup family of the variety");
    xi->add_option("--d", fl.d, "order bound d")->each(mark_d);
    add_common(xi);
    CLI::App* tau = app.add_subcommand("tau", "inclusion-maximal dual lattices tau_d");
    tau->add_option("--d", fl.d, "order bound d")->each(mark_d);
    add_common(tau);
    CLI::App* gamma = app.add_subcommand("gamma", "parameter-set counting");
    gamma->require_subcommand(1);
    CLI::App* gcount = gamma->add_subcommand("count", "|Gamma(H,A)| by the closed formula");
    add_common(gcount);
    CLI::App* fiber = app.add_subcommand("fiber", "torsion refinements over a free quotient class");
    fiber->add_option("--nu-bar", fl.nu_bar_text, "free quotient matrix, json rows");
    add_common(fiber);
    CLI::App* member = app.add_subcommand("member", "omega membership of one epimorphism class");
    member->add_option("--nu", fl.nu_text, "epimorphism matrix, json rows");
    add_common(member);
    CLI::App* describe = app.add_subcommand("describe", "closed-form omega complement description");
    add_common(describe);
    CLI::App* sigma_probe =
        app.add_subcommand("sigma-probe", "singular-set probe of one free quotient class");
    sigma_probe->add_option("--nu-bar", fl.nu_bar_text, "free quotient matrix, json rows");
    add_common(sigma_probe);
    CLI::App* diagnose = app.add_subcommand("diagnose", "pullback diagnostics for the quotient");
    add_common(diagnose);
    CLI::App* toric = app.add_subcommand("toric", "characteristic arrangement of a toric complex");
    toric->add_option("--i", fl.i, "homological degree bound")
        ->each([&fl](const std::string&) { fl.i_given = true; });
    add_common(toric);
    CLI::App* brieskorn = app.add_subcommand("brieskorn", "Seifert and homology invariants");
    add_common(brieskorn);
    CLI::App* fox = app.add_subcommand("fox", "Alexander matrix and minor gcd of a presentation");
    add_common(fox);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        Problem p = load_problem(fl);
        Output out;
        if (xi->parsed()) out = cmd_xi(p, fl);
        else if (tau->parsed()) out = cmd_tau(p, fl);
        else if (gcount->parsed()) out = cmd_gamma_count(p, fl);
        else if (fiber->parsed()) out = cmd_fiber(p, fl);
        else if (member->parsed()) out = cmd_member(p, fl);
        else if (describe->parsed()) out = cmd_describe(p, fl);
        else if (sigma_probe->parsed()) out = cmd_sigma_probe(p, fl);
        else if (diagnose->parsed()) out = cmd_diagnose(p, fl);
        else if (toric->parsed()) out = cmd_toric(p, fl);
        else if (brieskorn->parsed()) out = cmd_brieskorn(p, fl);
        else if (fox->parsed()) out = cmd_fox(p, fl);
        else throw input_error("no subcommand selected");

        if (fl.json_out) {
            std::cout << out.rep.dump(2) << "\n";
        } else {
            for (const std::string& line : out.lines) std::cout << line << "\n";
        }
        return out.verify_failed ? 3 : 0;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const bound_error& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    }
}
