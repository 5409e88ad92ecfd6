#include "sipoly/classify.hpp"
#include "sipoly/generators.hpp"
#include "sipoly/json_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace sipoly;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // usage, parse or IO failure
constexpr int kExitIndecisive = 2;  // boundary / indeterminate / no expansion

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

int fail(const std::string& message) {
    emit(json{{"error", message}});
    return kExitUsage;
}

Polynomial read_poly(const std::string& arg) {
    std::string text = arg;
    if (text.empty()) {
        if (!std::getline(std::cin, text))
            throw ParseError("no polynomial given on the command line or stdin");
    }
    return Polynomial::parse(text);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            values.push_back(parse_rational(token));
            token.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t')
            flush();
        else
            token.push_back(ch);
    }
    flush();
    return values;
}

int run_classify(const std::string& arg) {
    const Polynomial p = read_poly(arg);
    const ClassificationReport report = classify(p);
    emit(to_json(report));
    const bool indeterminate = report.stability == Stability::indeterminate ||
                               report.dual_stability == Stability::indeterminate ||
                               report.si.indeterminate;
    return report.boundary || indeterminate ? kExitIndecisive : kExitOk;
}

int run_minors(const std::string& arg) {
    const Polynomial p = read_poly(arg);
    emit(minors_payload(p));
    return kExitOk;
}

int run_cf(const std::string& arg) {
    const Polynomial p = read_poly(arg);
    const Polynomial q = normalize_leading(p);
    json out;
    out["polynomial"] = q.to_text();
    try {
        const ContinuedFraction expanded = cf_expand(associated_phi(q));
        out["cf"] = to_json(expanded);
        bool minors_defined = true;
        try {
            const ContinuedFraction from_minors = cf_coeffs_from_minors(q);
            out["cf_from_minors"] = to_json(from_minors);
            out["paths_agree"] = expanded == from_minors;
        } catch (const NoExpansionError& e) {
            minors_defined = false;
            out["cf_from_minors"] = nullptr;
            out["note"] = e.what();
        }
        out["sign_pattern_kind_i"] = cf_sign_check(expanded, q.degree());
        emit(out);
        if (!minors_defined || !out["paths_agree"].get<bool>()) return kExitIndecisive;
        return kExitOk;
    } catch (const NoExpansionError& e) {
        out["error"] = "no expansion";
        out["detail"] = e.what();
        emit(out);
        return kExitIndecisive;
    }
}

int run_dual(const std::string& arg, bool plain) {
    const Polynomial p = read_poly(arg);
    const Polynomial d = p.dual();
    if (plain) {
        std::cout << d.to_text() << "\n";
    } else {
        emit(json{{"input", p.to_text()},
                  {"dual", d.to_text()},
                  {"involution_ok", d.dual() == p}});
    }
    return kExitOk;
}

int run_roots(const std::string& arg, const std::optional<std::string>& width) {
    const Polynomial p = read_poly(arg);
    if (p.degree() < 1) return fail("roots require degree >= 1");
    Polynomial target = p;
    bool is_square_free = square_free(p);
    if (!is_square_free) target = p.divmod(gcd(p, p.derivative())).first;
    std::vector<IsolatingInterval> intervals = isolate_real_roots(target);
    if (width) {
        const Rational w = parse_rational(*width);
        for (auto& iv : intervals) iv = refine(target, iv, w);
    }
    json arr = json::array();
    for (const auto& iv : intervals) arr.push_back(to_json(iv));
    emit(json{{"input", p.to_text()},
              {"square_free", is_square_free},
              {"count", intervals.size()},
              {"intervals", std::move(arr)}});
    return kExitOk;
}

struct GenerateOptions {
    std::string mode;
    std::string roots;
    std::string b;
    std::string leading = "1";
    std::string a = "1";
    std::string kind = "I";
    int n = 4;
    int degree = 4;
    std::uint64_t seed = 0;
};

int run_generate(const GenerateOptions& opt) {
    json out;
    out["mode"] = opt.mode;
    if (opt.mode == "from-roots") {
        const std::vector<Rational> roots = parse_rational_list(opt.roots);
        const Polynomial p = Polynomial::from_roots(roots, parse_rational(opt.leading));
        out["roots"] = to_json(roots);
        out["polynomial"] = p.to_text();
    } else if (opt.mode == "tridiagonal") {
        TridiagonalSpec spec{parse_rational_list(opt.b)};
        const Polynomial p = tridiagonal_char_poly(spec);
        out["b"] = to_json(spec.b);
        out["polynomial"] = p.to_text();
    } else if (opt.mode == "binomial-dual") {
        const BinomialDual data = binomial_dual(opt.n, parse_rational(opt.a));
        out["n"] = data.n;
        out["a"] = to_string(data.a);
        out["polynomial"] = data.poly.to_text();
        out["expected_roots"] = data.expected_roots;
    } else if (opt.mode == "random-si") {
        std::mt19937_64 rng(opt.seed);
        const SiKind kind = opt.kind == "II" ? SiKind::kind_ii : SiKind::kind_i;
        const GeneratedPoly gen = random_si_poly(rng, opt.degree, kind);
        out["seed"] = opt.seed;
        out["kind"] = opt.kind == "II" ? "SI_II" : "SI_I";
        out["roots"] = to_json(gen.roots);
        out["polynomial"] = gen.poly.to_text();
    } else if (opt.mode == "random-stable") {
        std::mt19937_64 rng(opt.seed);
        const GeneratedPoly gen = random_stable_poly(rng, opt.degree);
        out["seed"] = opt.seed;
        out["real_roots"] = to_json(gen.roots);
        out["polynomial"] = gen.poly.to_text();
    } else {
        return fail("unknown mode '" + opt.mode + "'");
    }
    emit(out);
    return kExitOk;
}

struct BatchOptions {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    int budget = 24;      // sampled minor index pairs per line
    int samples = 100;    // unit-disc grid size
    std::string width = "1/100000000";
};

json verify_one(const Polynomial& p, std::mt19937_64& rng, const BatchOptions& opt,
                bool& identity_failure) {
    json rec;
    rec["polynomial"] = p.to_text();
    const Polynomial q = normalize_leading(p);

    json identities;
    identities["dual_involution"] = q.dual().dual() == q;
    identities["dual_rotation_path"] = q.dual() == q.dual_via_rotation();
    identities["even_odd_recombine"] = q.even_odd_split().recombine() == q;
    identities["hurwitz_formula"] = hurwitz_formula_check(q).pass;
    identities["r_hankel_product"] = r_hankel_product_check(q).pass;

    bool minor_relation = true;
    const auto sample = sample_minor_indices(q.degree(), 2, opt.budget, rng);
    for (const MinorIndex& idx : sample)
        minor_relation = minor_relation && minor_sign_relation_check(q, idx);
    identities["minor_sign_relation"] = minor_relation;

    bool cf_cross = true;
    try {
        const ContinuedFraction from_minors = cf_coeffs_from_minors(q);
        const ContinuedFraction expanded = cf_expand(associated_phi(q));
        cf_cross = expanded == from_minors;
        rec["cf_defined"] = true;
    } catch (const NoExpansionError&) {
        rec["cf_defined"] = false;
    }
    identities["cf_cross_path"] = cf_cross;

    bool all_ok = true;
    for (const auto& [key, value] : identities.items())
        all_ok = all_ok && value.get<bool>();
    rec["identities"] = std::move(identities);
    rec["identities_pass"] = all_ok;
    if (!all_ok) identity_failure = true;

    const ClassificationReport report = classify(q);
    rec["oracle"] = {{"si", to_string(report.si.kind)},
                     {"stability", to_string(report.stability)}};
    rec["consistent"] = report.consistent;
    rec["boundary"] = report.boundary;
    if (!report.consistent) identity_failure = true;

    if (report.criteria.hurwitz_classic.verdict) {
        const UnitDiscProbe probe = rhp_unit_disc_probe(q, opt.samples);
        rec["unit_disc_max"] = probe.max_abs;  // advisory
    }
    if (report.si.kind == SiKind::kind_i) {
        const DualityArgumentReport duality =
            duality_argument_check(q, parse_rational(opt.width));
        rec["duality_residual_ok"] = duality.pass;
        if (!duality.pass) identity_failure = true;
    }
    return rec;
}

int run_verify_batch(const BatchOptions& opt) {
    std::ifstream in(opt.input);
    if (!in) return fail("cannot open input file '" + opt.input + "'");
    std::mt19937_64 rng(opt.seed);

    json lines = json::array();
    int total = 0, parse_errors = 0, degenerate = 0, indeterminate = 0;
    bool identity_failure = false;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        ++total;
        json rec;
        rec["line"] = line_number;
        try {
            const Polynomial p = Polynomial::parse(line);
            if (p.degree() < 1) throw ParseError("degree must be at least 1");
            rec.update(verify_one(p, rng, opt, identity_failure));
            if (rec["boundary"].get<bool>()) ++degenerate;
            if (rec["oracle"]["stability"] == "INDETERMINATE") ++indeterminate;
        } catch (const ParseError& e) {
            rec["error"] = e.what();
            ++parse_errors;
        }
        lines.push_back(std::move(rec));
    }

    const json summary = {{"total", total},
                          {"parse_errors", parse_errors},
                          {"boundary", degenerate},
                          {"indeterminate", indeterminate},
                          {"identities_pass", !identity_failure}};
    const json payload = {{"lines", std::move(lines)}, {"summary", summary}};
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) return fail("cannot open output file '" + opt.output + "'");
        out << payload.dump(2) << "\n";
    } else {
        emit(payload);
    }
    return identity_failure ? kExitIndecisive : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of self-interlacing and Hurwitz-stable polynomials"};
    app.require_subcommand(1);

    std::string poly_arg;
    std::optional<std::string> width;
    bool plain = false;

    auto* classify_cmd = app.add_subcommand("classify", "Run all criteria, both oracles and the consistency checks");
    classify_cmd->add_option("polynomial", poly_arg, "Coefficients, descending powers (stdin when omitted)");

    auto* minors_cmd = app.add_subcommand("minors", "Hurwitz minors and the Hankel determinant families");
    minors_cmd->add_option("polynomial", poly_arg);

    auto* cf_cmd = app.add_subcommand("cf", "Stieltjes continued fraction of the associated function");
    cf_cmd->add_option("polynomial", poly_arg);

    auto* dual_cmd = app.add_subcommand("dual", "Apply the sign transform to the coefficients");
    dual_cmd->add_option("polynomial", poly_arg);
    dual_cmd->add_flag("--plain", plain, "Print the bare coefficient line instead of JSON");

    auto* roots_cmd = app.add_subcommand("roots", "Isolate the real roots into rational intervals");
    roots_cmd->add_option("polynomial", poly_arg);
    roots_cmd->add_option("--width", width, "Refine every interval to at most this rational width");

    GenerateOptions gen;
    auto* generate_cmd = app.add_subcommand("generate", "Construct polynomials from roots, matrices or seeds");
    generate_cmd->add_option("--mode", gen.mode,
                             "from-roots | tridiagonal | binomial-dual | random-si | random-stable")
        ->required();
    generate_cmd->add_option("--roots", gen.roots, "Rational roots, comma separated");
    generate_cmd->add_option("--leading", gen.leading, "Leading coefficient for from-roots");
    generate_cmd->add_option("--b", gen.b, "Tridiagonal entries b_1..b_n, comma separated");
    generate_cmd->add_option("--n", gen.n, "Degree for binomial-dual");
    generate_cmd->add_option("--a", gen.a, "Shift parameter for binomial-dual");
    generate_cmd->add_option("--degree", gen.degree, "Degree for the random modes");
    generate_cmd->add_option("--seed", gen.seed, "Random seed");
    generate_cmd->add_option("--kind", gen.kind, "I or II for random-si");

    BatchOptions batch;
    auto* batch_cmd = app.add_subcommand("verify-batch", "Run the exact identity suite over a polynomial file");
    batch_cmd->add_option("input", batch.input, "One polynomial per line; '#' starts a comment")->required();
    batch_cmd->add_option("-o,--output", batch.output, "Write the JSON report here instead of stdout");
    batch_cmd->add_option("--seed", batch.seed, "Seed for the sampled minor indices");
    batch_cmd->add_option("--budget", batch.budget, "Random minor index pairs per line");
    batch_cmd->add_option("--samples", batch.samples, "Grid size for numeric probes");
    batch_cmd->add_option("--width", batch.width, "Refinement width for root-based checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(poly_arg);
        if (minors_cmd->parsed()) return run_minors(poly_arg);
        if (cf_cmd->parsed()) return run_cf(poly_arg);
        if (dual_cmd->parsed()) return run_dual(poly_arg, plain);
        if (roots_cmd->parsed()) return run_roots(poly_arg, width);
        if (generate_cmd->parsed()) return run_generate(gen);
        if (batch_cmd->parsed()) return run_verify_batch(batch);
    } catch (const ParseError& e) {
        return fail(e.what());
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return kExitUsage;
}
