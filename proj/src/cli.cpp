#include "gsig/cli.hpp"

#include "gsig/bounds.hpp"
#include "gsig/catalog.hpp"
#include "gsig/dedekind.hpp"
#include "gsig/enumerator.hpp"
#include "gsig/homology.hpp"
#include "gsig/lightcone.hpp"
#include "gsig/manifold.hpp"
#include "gsig/rational.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace gsig {

using json = nlohmann::ordered_json;

json report_to_json(const Report& report) {
    json doc;
    doc["command"] = report.command;
    doc["inputs"] = report.inputs;
    doc["values"] = report.values;
    doc["result"] = report.result;
    doc["elapsed_ms"] = report.elapsed_ms;
    return doc;
}

Report report_from_json(const json& doc) {
    if (!doc.is_object())
        throw std::runtime_error("report: expected a JSON object");
    for (const char* key : {"command", "inputs", "values", "result", "elapsed_ms"})
        if (!doc.contains(key))
            throw std::runtime_error(std::string("report: missing field '") +
                                     key + "'");
    Report report;
    if (!doc.at("command").is_string())
        throw std::runtime_error("report: 'command' must be a string");
    report.command = doc.at("command").get<std::string>();
    for (const char* key : {"inputs", "values", "result"})
        if (!doc.at(key).is_object())
            throw std::runtime_error(std::string("report: '") + key +
                                     "' must be an object");
    report.inputs = doc.at("inputs");
    report.values = doc.at("values");
    report.result = doc.at("result");
    if (!doc.at("elapsed_ms").is_number())
        throw std::runtime_error("report: 'elapsed_ms' must be a number");
    report.elapsed_ms = doc.at("elapsed_ms").get<double>();
    return report;
}

namespace {

struct Options {
    bool json = false;
    std::optional<unsigned> decimal;
    std::string catalog_path;
};

std::vector<CatalogEntry> resolve_catalog(const Options& opts) {
    if (!opts.catalog_path.empty())
        return load_catalog_file(opts.catalog_path);
    if (const char* env = std::getenv("GSIG_CATALOG"); env && *env)
        return load_catalog_file(env);
    return seed_catalog();
}

const CatalogEntry& require_entry(const std::vector<CatalogEntry>& entries,
                                  const std::string& name) {
    const CatalogEntry* entry = find_entry(entries, name);
    if (!entry)
        throw std::runtime_error("no catalog entry named '" + name + "'");
    return *entry;
}

// Exact rational, optionally followed by a rounded display column.
std::string render(const Rational& x, const Options& opts) {
    std::string s = x.str();
    if (opts.decimal)
        s += "  (" + x.decimal(*opts.decimal) + ")";
    return s;
}

std::string list_int64(const std::vector<std::int64_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

struct Row {
    std::string key;
    std::string value;
};

std::string key_value_block(const std::vector<Row>& rows) {
    std::size_t width = 0;
    for (const auto& row : rows)
        width = std::max(width, row.key.size());
    std::ostringstream os;
    for (const auto& row : rows)
        os << std::left << std::setw(static_cast<int>(width) + 2) << row.key
           << row.value << "\n";
    return os.str();
}

struct Outcome {
    Report report;
    std::string human;
    int code = 0;
};

json window_json(const SearchWindow& w) {
    json j;
    j["s_min"] = w.s_min;
    j["s_max"] = w.s_max;
    j["require_star"] = w.require_star;
    j["require_minimal"] = w.require_minimal;
    j["allow_zero_square"] = w.allow_zero_square;
    return j;
}

json manifold_json(const ManifoldInvariants& m) {
    json j;
    j["name"] = m.name;
    j["chi"] = m.chi;
    j["sigma"] = m.sigma;
    j["spin"] = m.spin;
    j["minimal"] = m.minimal;
    j["h1_zero"] = m.h1_zero;
    j["flags"] = star_flag_names(m.star);
    return j;
}

// ---- subcommand handlers ---------------------------------------------

Outcome cmd_defect(std::int64_t p_in, std::int64_t q_in, const Options& opts) {
    PrimeOrder p(p_in);
    RotationNumber q(q_in, p);
    Rational sum = dedekind_sum_fast(q, p);
    Rational symbol = dedekind_symbol(q, p);
    Rational def = defect(p, q);

    Outcome o;
    o.report.command = "defect";
    o.report.inputs["p"] = p_in;
    o.report.inputs["q"] = q_in;
    o.report.values["dedekind_sum"] = sum.str();
    o.report.values["dedekind_symbol"] = symbol.str();
    o.report.result["defect"] = def.str();
    o.human = render(def, opts) + "\n";
    return o;
}

Outcome cmd_dedekind(std::int64_t p_in, std::int64_t q_in, const Options& opts) {
    PrimeOrder p(p_in);
    RotationNumber q(q_in, p);
    Rational sum = dedekind_sum_fast(q, p);

    Outcome o;
    o.report.command = "dedekind";
    o.report.inputs["p"] = p_in;
    o.report.inputs["q"] = q_in;
    o.report.values["dedekind_symbol"] = dedekind_symbol(q, p).str();
    o.report.values["defect"] = defect(p, q).str();
    o.report.result["dedekind_sum"] = sum.str();
    o.human = render(sum, opts) + "\n";
    return o;
}

Outcome cmd_verify_lemma(std::int64_t pmax, bool oracle) {
    std::int64_t primes_checked = 0;
    std::int64_t defects_checked = 0;
    std::vector<std::string> failures;
    for (std::int64_t P : primes_up_to(pmax)) {
        PrimeOrder p(P);
        Rational extremal = defect_extremal(p);
        ++primes_checked;
        for (std::int64_t Q = 1; Q < P; ++Q) {
            RotationNumber q(Q, p);
            Rational d = defect(p, q);
            ++defects_checked;
            if (abs(d) > extremal)
                failures.push_back("p=" + std::to_string(P) +
                                   " q=" + std::to_string(Q) +
                                   ": |def| = " + abs(d).str() + " exceeds " +
                                   extremal.str());
            if ((Q == 1 || Q == P - 1) && abs(d) != extremal)
                failures.push_back("p=" + std::to_string(P) +
                                   " q=" + std::to_string(Q) +
                                   ": expected extremal |def| = " +
                                   extremal.str() + ", got " + abs(d).str());
            if (Q == 1 && d != -extremal)
                failures.push_back("p=" + std::to_string(P) +
                                   ": def(p;1,1) = " + d.str() +
                                   " differs from -" + extremal.str());
            if (oracle && d != Rational(-4 * P) * dedekind_sum_direct(q, p))
                failures.push_back("p=" + std::to_string(P) +
                                   " q=" + std::to_string(Q) +
                                   ": fast path disagrees with direct sum");
        }
    }

    Outcome o;
    o.report.command = "verify-lemma";
    o.report.inputs["pmax"] = pmax;
    o.report.inputs["oracle"] = oracle;
    o.report.values["primes_checked"] = primes_checked;
    o.report.values["defects_checked"] = defects_checked;
    o.report.result["status"] = failures.empty() ? "pass" : "fail";
    o.report.result["failures"] = failures;
    if (failures.empty()) {
        o.human = "all primes <= " + std::to_string(pmax) + " pass\n";
    } else {
        std::ostringstream os;
        for (const auto& f : failures)
            os << "violation: " << f << "\n";
        o.human = os.str();
        o.code = 2;
    }
    return o;
}

Outcome cmd_decompose(std::int64_t p_in, std::int64_t b2) {
    PrimeOrder p(p_in);
    auto decs = decompositions(p, b2);

    Outcome o;
    o.report.command = "decompose";
    o.report.inputs["p"] = p_in;
    o.report.inputs["b2"] = b2;
    json rows = json::array();
    std::ostringstream os;
    os << "t + c(p-1) + r*p = " << b2 << " for p = " << p_in << "\n";
    os << std::setw(6) << "t" << std::setw(6) << "c" << std::setw(6) << "r"
       << "\n";
    for (const auto& d : decs) {
        rows.push_back({d.t, d.c, d.r});
        os << std::setw(6) << d.t << std::setw(6) << d.c << std::setw(6) << d.r
           << "\n";
    }
    bool trivial = forces_trivial(p, b2);
    os << "forces_trivial: " << (trivial ? "true" : "false") << "\n";
    o.report.result["decompositions"] = rows;
    o.report.result["forces_trivial"] = trivial;
    o.human = os.str();
    return o;
}

Outcome cmd_bound(const std::string& name, std::int64_t p_in,
                  std::optional<std::int64_t> s_opt, const Options& opts) {
    PrimeOrder p(p_in);
    auto entries = resolve_catalog(opts);
    const ManifoldInvariants& m = require_entry(entries, name).manifold;
    const std::int64_t s = s_opt.value_or(m.minimal ? -2 : -1);
    Rational b = sphere_bound(p, m, s);
    Rational u = universal_bound(p, m, s);
    StarDerivation star = derive_star(m.star, m);

    Outcome o;
    o.report.command = "bound";
    o.report.inputs["manifold"] = name;
    o.report.inputs["p"] = p_in;
    o.report.inputs["s"] = s;
    o.report.values["chi"] = m.chi;
    o.report.values["sigma"] = m.sigma;
    o.report.values["c1_squared"] = c1_squared(m);
    o.report.values["star_rule"] = star.rule;
    o.report.result["sphere_bound"] = b.str();
    o.report.result["sphere_bound_floor"] = b.floor().str();
    o.report.result["universal_bound"] = u.str();
    o.report.result["universal_cap"] = (u.ceil() - 1).str();

    o.human = key_value_block({
        {"manifold", name},
        {"p", std::to_string(p_in)},
        {"s", std::to_string(s)},
        {"chi", std::to_string(m.chi)},
        {"sigma", std::to_string(m.sigma)},
        {"c1^2", std::to_string(c1_squared(m))},
        {"star", star.rule},
        {"sphere_bound", render(b, opts) + "   (n <= " + b.floor().str() + ")"},
        {"universal_bound",
         render(u, opts) + "   (n <= " + (u.ceil() - 1).str() + ")"},
    });
    return o;
}

Outcome cmd_classify(const std::string& name, std::int64_t p_in,
                     const Options& opts) {
    PrimeOrder p(p_in);
    auto entries = resolve_catalog(opts);
    const ManifoldInvariants& m = require_entry(entries, name).manifold;
    Classification c = classify(p, m);
    StarDerivation star = derive_star(m.star, m);

    Outcome o;
    o.report.command = "classify";
    o.report.inputs["manifold"] = name;
    o.report.inputs["p"] = p_in;
    o.report.values["chi"] = m.chi;
    o.report.values["sigma"] = m.sigma;
    o.report.values["c1_squared"] = c1_squared(m);
    o.report.values["l_invariant"] = l_invariant(m);
    o.report.values["star_rule"] = star.rule;
    o.report.values["sphere_bound"] = c.bound.str();
    o.report.values["universal_bound"] = c.universal.str();
    o.report.result["verdict"] = std::string(to_string(c.verdict));
    o.report.result["basis"] = c.basis;
    o.report.result["s_used"] = c.s_used;
    if (c.verdict == Verdict::SphereBound)
        o.report.result["n_max"] = c.n_max;

    std::vector<Row> rows = {
        {"manifold", name},
        {"p", std::to_string(p_in)},
        {"chi", std::to_string(m.chi)},
        {"sigma", std::to_string(m.sigma)},
        {"c1^2", std::to_string(c1_squared(m))},
        {"star", star.rule},
        {"s_used", std::to_string(c.s_used)},
        {"sphere_bound", render(c.bound, opts)},
        {"universal_bound", render(c.universal, opts)},
        {"verdict", std::string(to_string(c.verdict))},
        {"basis", c.basis},
    };
    if (c.verdict == Verdict::SphereBound)
        rows.push_back({"n_max", std::to_string(c.n_max)});
    o.human = key_value_block(rows);
    o.code = c.verdict == Verdict::NoAction ? 2 : 0;
    return o;
}

Outcome cmd_enumerate(std::int64_t p_in, std::int64_t chi, std::int64_t sigma,
                      const SearchWindow& window, bool full) {
    PrimeOrder p(p_in);
    auto solutions = enumerate_fixed_points(p, chi, sigma, window);

    Outcome o;
    o.report.command = "enumerate";
    o.report.inputs["p"] = p_in;
    o.report.inputs["chi"] = chi;
    o.report.inputs["sigma"] = sigma;
    o.report.inputs["window"] = window_json(window);
    o.report.values["admissible_squares"] = admissible_squares(window);
    o.report.result["count"] = solutions.size();
    if (solutions.empty())
        o.report.result["max_n"] = nullptr;
    else
        o.report.result["max_n"] = solutions.back().sphere_count();
    json sols = json::array();
    for (const auto& s : solutions) {
        json row;
        row["points"] = s.points;
        row["spheres"] = s.spheres;
        sols.push_back(std::move(row));
    }
    o.report.result["solutions"] = sols;

    std::ostringstream os;
    os << "p=" << p_in << " chi=" << chi << " sigma=" << sigma << " squares="
       << list_int64(admissible_squares(window)) << "\n";
    os << "solutions " << solutions.size() << "\n";
    os << "max_n     ";
    if (solutions.empty())
        os << "none";
    else
        os << solutions.back().sphere_count();
    os << "\n";
    if (full)
        for (const auto& s : solutions)
            os << "m=" << s.isolated_count() << " n=" << s.sphere_count()
               << " points=" << list_int64(s.points)
               << " spheres=" << list_int64(s.spheres) << "\n";
    o.human = os.str();
    return o;
}

Outcome cmd_cone(const std::string& a_text, const std::string& b_text,
                 const Options& opts) {
    LorentzVector a = LorentzVector::parse(a_text);
    LorentzVector b = LorentzVector::parse(b_text);
    Rational aa = pairing(a, a);
    Rational bb = pairing(b, b);
    Rational ab = pairing(a, b);
    ConePosition pa = cone_position(a);
    ConePosition pb = cone_position(b);
    bool ok = check_cone_lemma(a, b);

    Outcome o;
    o.report.command = "cone";
    o.report.inputs["a"] = a_text;
    o.report.inputs["b"] = b_text;
    o.report.values["a_square"] = aa.str();
    o.report.values["b_square"] = bb.str();
    o.report.values["pairing"] = ab.str();
    o.report.result["a_position"] = std::string(to_string(pa));
    o.report.result["b_position"] = std::string(to_string(pb));
    o.report.result["lemma_ok"] = ok;

    o.human = key_value_block({
        {"a", a.str() + "   " + std::string(to_string(pa)) +
                  ", a.a = " + render(aa, opts)},
        {"b", b.str() + "   " + std::string(to_string(pb)) +
                  ", b.b = " + render(bb, opts)},
        {"a.b", render(ab, opts)},
        {"lemma", ok ? "ok" : "VIOLATED"},
    });
    o.code = ok ? 0 : 2;
    return o;
}

Outcome cmd_catalog(const std::string& action, const std::string& name,
                    const Options& opts) {
    auto entries = resolve_catalog(opts);

    Outcome o;
    o.report.command = "catalog";
    o.report.inputs["action"] = action;
    if (action == "list") {
        json rows = json::array();
        std::ostringstream os;
        os << std::left << std::setw(22) << "name" << std::right << std::setw(6)
           << "chi" << std::setw(7) << "sigma" << std::setw(6) << "spin"
           << std::setw(9) << "minimal" << "  star\n";
        for (const auto& entry : entries) {
            const auto& m = entry.manifold;
            StarDerivation star = derive_star(m.star, m);
            json row = manifold_json(m);
            row["star_rule"] = star.rule;
            rows.push_back(std::move(row));
            os << std::left << std::setw(22) << m.name << std::right
               << std::setw(6) << m.chi << std::setw(7) << m.sigma
               << std::setw(6) << (m.spin ? "yes" : "no") << std::setw(9)
               << (m.minimal ? "yes" : "no") << "  " << star.rule << "\n";
        }
        o.report.result["entries"] = rows;
        o.human = os.str();
        return o;
    }

    const CatalogEntry& entry = require_entry(entries, name);
    const ManifoldInvariants& m = entry.manifold;
    StarDerivation star = derive_star(m.star, m);
    o.report.inputs["name"] = name;
    json detail = manifold_json(m);
    detail["b2"] = m.b2();
    detail["b2_plus"] = m.b2_plus();
    detail["b2_minus"] = m.b2_minus();
    detail["c1_squared"] = c1_squared(m);
    detail["l_invariant"] = l_invariant(m);
    detail["star_rule"] = star.rule;
    detail["note"] = entry.note;
    o.report.result["entry"] = detail;

    std::string flags;
    for (const auto& f : star_flag_names(m.star))
        flags += (flags.empty() ? "" : ", ") + f;
    o.human = key_value_block({
        {"name", m.name},
        {"chi", std::to_string(m.chi)},
        {"sigma", std::to_string(m.sigma)},
        {"b2 (b2+, b2-)", std::to_string(m.b2()) + " (" +
                              std::to_string(m.b2_plus()) + ", " +
                              std::to_string(m.b2_minus()) + ")"},
        {"c1^2", std::to_string(c1_squared(m))},
        {"l", std::to_string(l_invariant(m))},
        {"spin", m.spin ? "yes" : "no"},
        {"minimal", m.minimal ? "yes" : "no"},
        {"h1_zero", m.h1_zero ? "yes" : "no"},
        {"flags", flags.empty() ? "(none)" : flags},
        {"star", star.rule},
        {"note", entry.note},
    });
    return o;
}

Outcome cmd_sweep(const std::string& primes_text, const Options& opts) {
    std::vector<std::int64_t> primes;
    std::stringstream ss(primes_text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        primes.push_back(std::stoll(piece));

    auto entries = resolve_catalog(opts);

    Outcome o;
    o.report.command = "sweep";
    o.report.inputs["primes"] = primes;
    json rows = json::array();
    std::ostringstream os;
    os << std::left << std::setw(22) << "manifold" << std::right << std::setw(4)
       << "p" << "  " << std::left << std::setw(13) << "verdict"
       << "detail\n";
    for (const auto& entry : entries) {
        const auto& m = entry.manifold;
        for (std::int64_t P : primes) {
            PrimeOrder p(P);
            json row;
            row["manifold"] = m.name;
            row["p"] = P;
            std::string verdict;
            std::string detail;
            try {
                Classification c = classify(p, m);
                verdict = std::string(to_string(c.verdict));
                detail = c.basis;
                if (c.verdict == Verdict::SphereBound)
                    detail += ", n_max = " + std::to_string(c.n_max);
                row["verdict"] = verdict;
                row["basis"] = c.basis;
                if (c.verdict == Verdict::SphereBound)
                    row["n_max"] = c.n_max;
            } catch (const HypothesesNotMet&) {
                verdict = "-";
                detail = "no (*) evidence";
                row["verdict"] = nullptr;
                row["basis"] = "no-evidence";
            }
            rows.push_back(std::move(row));
            os << std::left << std::setw(22) << m.name << std::right
               << std::setw(4) << P << "  " << std::left << std::setw(13)
               << verdict << detail << "\n";
        }
    }
    o.report.result["rows"] = rows;
    o.human = os.str();
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact Dedekind sums, signature defects and fixed-point "
                 "bounds for prime-order actions on 4-manifolds"};
    app.name("gsig");
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_flag("--json", opts.json, "emit the machine-readable report");
    unsigned decimal_digits = 0;
    auto* decimal_opt =
        app.add_option("--decimal", decimal_digits,
                       "add a rounded display column with N digits");
    app.add_option("--catalog", opts.catalog_path,
                   "catalog file overriding the built-in seed "
                   "(or env GSIG_CATALOG)");

    std::optional<Outcome> outcome;
    auto finish = [&](Outcome o) { outcome = std::move(o); };
    // Options are final once any subcommand callback runs.
    auto sync_opts = [&] {
        if (decimal_opt->count())
            opts.decimal = decimal_digits;
    };

    // defect / dedekind
    std::int64_t arg_p = 0, arg_q = 0;
    auto* c_defect = app.add_subcommand("defect",
                                        "signature defect def(p;q,1)");
    c_defect->add_option("--p", arg_p, "prime order")->required();
    c_defect->add_option("--q", arg_q, "rotation number, 1..p-1")->required();
    c_defect->callback([&] {
        sync_opts();
        finish(cmd_defect(arg_p, arg_q, opts));
    });

    auto* c_dedekind =
        app.add_subcommand("dedekind", "Dedekind sum s(q,p)");
    c_dedekind->add_option("--p", arg_p, "prime order")->required();
    c_dedekind->add_option("--q", arg_q, "rotation number, 1..p-1")->required();
    c_dedekind->callback([&] {
        sync_opts();
        finish(cmd_dedekind(arg_p, arg_q, opts));
    });

    // verify-lemma
    std::int64_t arg_pmax = 0;
    bool arg_oracle = false;
    auto* c_verify = app.add_subcommand(
        "verify-lemma", "sweep the extremal defect estimate over primes");
    c_verify->add_option("--pmax", arg_pmax, "largest prime to check")
        ->required();
    c_verify->add_flag("--oracle", arg_oracle,
                       "also cross-check the fast path against the direct sum");
    c_verify->callback([&] {
        sync_opts();
        finish(cmd_verify_lemma(arg_pmax, arg_oracle));
    });

    // decompose
    std::int64_t arg_b2 = 0;
    auto* c_decompose = app.add_subcommand(
        "decompose", "integral representation decompositions of b2");
    c_decompose->add_option("--p", arg_p, "prime order")->required();
    c_decompose->add_option("--b2", arg_b2, "second Betti number")->required();
    c_decompose->callback([&] {
        sync_opts();
        finish(cmd_decompose(arg_p, arg_b2));
    });

    // bound
    std::string arg_manifold;
    std::int64_t arg_s = 0;
    auto* c_bound = app.add_subcommand(
        "bound", "sphere-count bounds for a catalog manifold");
    c_bound->add_option("--manifold", arg_manifold, "catalog entry name")
        ->required();
    c_bound->add_option("--p", arg_p, "prime order")->required();
    auto* s_opt = c_bound->add_option(
        "--s", arg_s, "sphere-square cap (default -2 if minimal, else -1)");
    c_bound->callback([&] {
        sync_opts();
        finish(cmd_bound(arg_manifold, arg_p,
                         s_opt->count() ? std::optional<std::int64_t>(arg_s)
                                        : std::nullopt,
                         opts));
    });

    // classify
    auto* c_classify = app.add_subcommand(
        "classify", "classify possible actions on a catalog manifold");
    c_classify->add_option("--manifold", arg_manifold, "catalog entry name")
        ->required();
    c_classify->add_option("--p", arg_p, "prime order")->required();
    c_classify->callback([&] {
        sync_opts();
        finish(cmd_classify(arg_manifold, arg_p, opts));
    });

    // enumerate
    std::int64_t arg_chi = 0, arg_sigma = 0;
    SearchWindow window;
    bool arg_full = false;
    auto* c_enumerate = app.add_subcommand(
        "enumerate", "all fixed-point data satisfying the signature equation");
    c_enumerate->add_option("--p", arg_p, "prime order")->required();
    c_enumerate->add_option("--chi", arg_chi, "Euler characteristic")
        ->required();
    c_enumerate->add_option("--sigma", arg_sigma, "signature")->required();
    c_enumerate->add_option("--smin", window.s_min, "lowest sphere square")
        ->required();
    c_enumerate->add_option("--smax", window.s_max, "highest sphere square")
        ->required();
    c_enumerate->add_flag("--star", window.require_star,
                          "cap sphere squares at -1");
    c_enumerate->add_flag("--minimal", window.require_minimal,
                          "cap sphere squares at -2");
    c_enumerate->add_flag("--allow-zero", window.allow_zero_square,
                          "admit spheres of square 0");
    c_enumerate->add_flag("--full", arg_full, "print every solution");
    c_enumerate->callback([&] {
        sync_opts();
        finish(cmd_enumerate(arg_p, arg_chi, arg_sigma, window, arg_full));
    });

    // cone
    std::string arg_a, arg_b;
    auto* c_cone = app.add_subcommand(
        "cone", "forward-cone positions and pairing for signature (1,k)");
    c_cone->add_option("--a", arg_a, "comma-separated rational coordinates")
        ->required();
    c_cone->add_option("--b", arg_b, "comma-separated rational coordinates")
        ->required();
    c_cone->callback([&] {
        sync_opts();
        finish(cmd_cone(arg_a, arg_b, opts));
    });

    // catalog
    std::string arg_action, arg_name;
    auto* c_catalog = app.add_subcommand("catalog", "inspect the catalog");
    c_catalog->add_option("action", arg_action, "list | show")
        ->required()
        ->check(CLI::IsMember({"list", "show"}));
    c_catalog->add_option("name", arg_name, "entry name for 'show'");
    c_catalog->callback([&] {
        sync_opts();
        if (arg_action == "show" && arg_name.empty())
            throw CLI::ValidationError("catalog", "'show' needs an entry name");
        finish(cmd_catalog(arg_action, arg_name, opts));
    });

    // sweep
    std::string arg_primes = "2,3,5,7,11,13";
    auto* c_sweep = app.add_subcommand(
        "sweep", "classify every catalog entry over a prime range");
    c_sweep->add_option("--primes", arg_primes, "comma-separated primes");
    c_sweep->callback([&] {
        sync_opts();
        finish(cmd_sweep(arg_primes, opts));
    });

    auto started = std::chrono::steady_clock::now();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (!outcome)
        return 1;

    auto elapsed = std::chrono::steady_clock::now() - started;
    outcome->report.elapsed_ms =
        std::chrono::duration<double, std::milli>(elapsed).count();
    if (opts.json)
        out << report_to_json(outcome->report).dump(2) << "\n";
    else
        out << outcome->human;
    return outcome->code;
}

}  // namespace gsig
