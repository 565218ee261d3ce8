#include "pichar/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "pichar/gltype.hpp"
#include "pichar/piclass.hpp"
#include "pichar/symdeg.hpp"
#include "pichar/verify.hpp"

namespace pichar {

namespace {

std::string json_string_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += "\"" + items[i] + "\"";
    }
    return out + "]";
}

void print_graph(const PrimeGraph& graph, const std::string& format, std::ostream& out) {
    if (format == "dot")
        out << graph.to_dot();
    else if (format == "json")
        out << graph.to_json() << "\n";
    else
        out << graph.to_tsv();
}

struct GlArgs {
    int n = 1;
    int r = 2;
    int a = 1;
    int eps = +1;

    GLParams params() const { return GLParams{n, r, a, eps}; }
    void validate() const {
        if (!is_prime(r)) throw std::invalid_argument("gl: r must be prime");
        if (n < 1 || a < 1) throw std::invalid_argument("gl: n and a must be positive");
        if (eps != 1 && eps != -1) throw std::invalid_argument("gl: eps must be +1 or -1");
    }
};

void add_gl_options(CLI::App* cmd, GlArgs& args, bool with_eps = true) {
    cmd->add_option("-n,--rank", args.n, "matrix rank n")->required();
    cmd->add_option("-r,--characteristic", args.r, "defining prime r")->required();
    cmd->add_option("-a,--field-exponent", args.a, "field F_{r^a}");
    if (with_eps)
        cmd->add_option("--eps", args.eps, "+1 for GL, -1 for GU")
            ->check(CLI::IsMember({1, -1}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact character-degree combinatorics for symmetric, alternating,"
                 " nilpotent and general linear groups"};
    app.require_subcommand(1);
    std::string format = "tsv";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "dot"}))
        ->capture_default_str();

    // partitions N
    auto* cmd_partitions = app.add_subcommand("partitions", "list the partitions of N");
    int partitions_n = 0;
    cmd_partitions->add_option("N", partitions_n, "size")->required()->check(CLI::NonNegativeNumber);

    // degree LAMBDA [--alt]
    auto* cmd_degree = app.add_subcommand("degree", "character degree of a partition label");
    std::string degree_lambda;
    bool degree_alt = false;
    cmd_degree->add_option("LAMBDA", degree_lambda, "partition, e.g. 5,1^4")->required();
    cmd_degree->add_flag("--alt", degree_alt, "degrees of the alternating-group constituents");

    // pi-irr N -p P -q Q [--group sym|alt]
    auto* cmd_piirr = app.add_subcommand("pi-irr", "labels whose degree is coprime to both primes");
    int piirr_n = 0, piirr_p = 0, piirr_q = 0;
    std::string piirr_group = "sym";
    cmd_piirr->add_option("N", piirr_n)->required();
    cmd_piirr->add_option("-p", piirr_p, "first prime")->required();
    cmd_piirr->add_option("-q", piirr_q, "second prime")->required();
    cmd_piirr->add_option("--group", piirr_group)->check(CLI::IsMember({"sym", "alt"}));

    // classify (sym|alt-ext) N -p -q
    auto* cmd_classify = app.add_subcommand("classify", "closed-form classifications");
    cmd_classify->require_subcommand(1);
    int classify_n = 0, classify_p = 0, classify_q = 0;
    auto* classify_sym = cmd_classify->add_subcommand("sym", "are all pair-coprime degrees linear?");
    auto* classify_alt = cmd_classify->add_subcommand(
        "alt-ext", "does a non-trivial pair-coprime character extend from A_n to S_n?");
    for (auto* sub : {classify_sym, classify_alt}) {
        sub->add_option("N", classify_n)->required();
        sub->add_option("-p", classify_p)->required();
        sub->add_option("-q", classify_q)->required();
    }

    // witness (sym|alt) N -p -q
    auto* cmd_witness = app.add_subcommand("witness", "explicit non-linear pair-coprime labels");
    cmd_witness->require_subcommand(1);
    int witness_n = 0, witness_p = 0, witness_q = 0;
    auto* witness_sym = cmd_witness->add_subcommand("sym", "symmetric-group witness");
    auto* witness_alt = cmd_witness->add_subcommand("alt", "alternating-group witness");
    for (auto* sub : {witness_sym, witness_alt}) {
        sub->add_option("N", witness_n)->required();
        sub->add_option("-p", witness_p)->required();
        sub->add_option("-q", witness_q)->required();
    }

    // graph (sym|alt|nilpotent|gl)
    auto* cmd_graph = app.add_subcommand("graph", "prime graphs");
    cmd_graph->require_subcommand(1);
    int graph_n = 0;
    auto* graph_sym = cmd_graph->add_subcommand("sym", "symmetric group S_n");
    graph_sym->add_option("N", graph_n)->required();
    auto* graph_alt = cmd_graph->add_subcommand("alt", "alternating group A_n");
    graph_alt->add_option("N", graph_n)->required();
    auto* graph_nilpotent =
        cmd_graph->add_subcommand("nilpotent", "nilpotent group from its Sylow structure");
    std::vector<std::string> sylow_specs;
    graph_nilpotent
        ->add_option("SYLOW", sylow_specs, "entries P:a (abelian) or P:n (non-abelian)")
        ->required();
    GlArgs graph_gl_args;
    auto* graph_gl = cmd_graph->add_subcommand("gl", "general linear/unitary group");
    add_gl_options(graph_gl, graph_gl_args);

    // gl (classify|degrees|graph)
    auto* cmd_gl = app.add_subcommand("gl", "general linear/unitary groups");
    cmd_gl->require_subcommand(1);
    GlArgs gl_args;
    int gl_p = 0, gl_q_prime = 0;
    auto* gl_classify = cmd_gl->add_subcommand("classify", "are all pair-coprime degrees linear?");
    add_gl_options(gl_classify, gl_args);
    gl_classify->add_option("-p", gl_p, "first prime")->required();
    gl_classify->add_option("-q", gl_q_prime, "second prime")->required();
    auto* gl_degrees = cmd_gl->add_subcommand("degrees", "full character degree table of GL_n(q)");
    int gl_deg_n = 1;
    long long gl_deg_q = 2;
    gl_degrees->add_option("-n,--rank", gl_deg_n)->required();
    gl_degrees->add_option("-q,--field", gl_deg_q, "field size, a prime power")->required();
    auto* gl_graph = cmd_gl->add_subcommand("graph", "prime graph of GL/GU");
    add_gl_options(gl_graph, gl_args);

    // verify --suite NAME [--max-n N] [--jobs K]
    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    int max_n = 0, jobs = 1;
    auto names = verify::suite_names();
    names.push_back("all");
    cmd_verify->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember(names))
        ->capture_default_str();
    cmd_verify->add_option("--max-n", max_n, "cap the brute-force ranges");
    cmd_verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    // options like --format may trail the subcommand, per the documented grammar
    auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
        node->fallthrough(true);
        for (CLI::App* sub : node->get_subcommands({})) self(self, sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(enable_fallthrough, sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_partitions) {
            const auto all = enumerate_partitions(partitions_n);
            if (format == "json") {
                std::vector<std::string> texts;
                texts.reserve(all.size());
                for (const auto& p : all) texts.push_back(p.to_string());
                out << "{\"n\":" << partitions_n << ",\"count\":" << all.size()
                    << ",\"partitions\":" << json_string_list(texts) << "}\n";
            } else {
                for (const auto& p : all) out << p.to_string() << "\n";
            }
        } else if (*cmd_degree) {
            const Partition lambda = Partition::parse(degree_lambda);
            if (!degree_alt) {
                const BigInt d = degree_hook_formula(lambda);
                if (format == "json")
                    out << record_json_line(lambda.to_string(), d, 1, false) << "\n";
                else
                    out << to_decimal(d) << "\n";
            } else {
                const Partition conj = lambda.conjugate();
                const Partition canonical = std::max(lambda, conj);
                const BigInt d = degree_hook_formula(canonical);
                std::vector<AltRecord> records;
                if (lambda == conj) {
                    records.push_back({AltLabel{canonical, true, 0}, d / 2, 1});
                    records.push_back({AltLabel{canonical, true, 1}, d / 2, 1});
                } else {
                    records.push_back({AltLabel{canonical, false, -1}, d, 1});
                }
                for (const auto& r : records) {
                    if (format == "json")
                        out << record_json_line(r) << "\n";
                    else
                        out << to_decimal(r.degree) << "\n";
                }
            }
        } else if (*cmd_piirr) {
            const PrimePair pi(piirr_p, piirr_q);
            if (piirr_group == "sym") {
                for (const auto& lambda : irr_pi_prime_sym(piirr_n, pi)) {
                    if (format == "json")
                        out << record_json_line(lambda.to_string(), degree_hook_formula(lambda), 1,
                                                false)
                            << "\n";
                    else
                        out << lambda.to_string() << "\n";
                }
            } else {
                for (const auto& r : alt_degrees(piirr_n)) {
                    if (r.degree % pi.p == 0 || r.degree % pi.q == 0) continue;
                    if (format == "json")
                        out << record_json_line(r) << "\n";
                    else
                        out << r.label.to_string() << "\n";
                }
            }
        } else if (*cmd_classify) {
            if (*classify_sym) {
                const bool only_linear = sym_only_linear(classify_n, PrimePair(classify_p, classify_q));
                if (format == "json")
                    out << "{\"only_linear\":" << (only_linear ? "true" : "false") << "}\n";
                else
                    out << (only_linear ? "ONLY_LINEAR" : "WITNESS_EXISTS") << "\n";
            } else {
                const bool extendible =
                    alt_extendible_exists(classify_n, PrimePair(classify_p, classify_q));
                if (format == "json")
                    out << "{\"extendible\":" << (extendible ? "true" : "false") << "}\n";
                else
                    out << (extendible ? "EXTENDIBLE" : "NOT_EXTENDIBLE") << "\n";
            }
        } else if (*cmd_witness) {
            const PrimePair pi(witness_p, witness_q);
            if (*witness_sym) {
                const WitnessReport report = sym_witness(witness_n, pi);
                if (report.kind == WitnessReport::Kind::only_linear) {
                    if (format == "json")
                        out << "{\"classification\":\"ONLY_LINEAR\"}\n";
                    else
                        out << "ONLY_LINEAR\n";
                } else if (format == "json") {
                    out << "{\"classification\":\"WITNESS\",\"witness\":\""
                        << report.witness->to_string() << "\",\"degree\":\""
                        << to_decimal(*report.degree) << "\"}\n";
                } else {
                    out << "WITNESS\t" << report.witness->to_string() << "\t"
                        << to_decimal(*report.degree) << "\n";
                }
            } else {
                const AltWitness w = alt_witness(witness_n, pi);
                if (format == "json")
                    out << "{\"classification\":\"WITNESS\",\"witness\":\"" << w.label.to_string()
                        << "\",\"degree\":\"" << to_decimal(w.degree) << "\",\"split\":"
                        << (w.label.split ? "true" : "false") << "}\n";
                else
                    out << "WITNESS\t" << w.label.to_string() << "\t" << to_decimal(w.degree)
                        << "\n";
            }
        } else if (*cmd_graph || *cmd_gl) {
            if (*cmd_graph && *graph_sym) {
                print_graph(gamma_prime_sym(graph_n), format, out);
            } else if (*cmd_graph && *graph_alt) {
                print_graph(gamma_prime_alt(graph_n), format, out);
            } else if (*cmd_graph && *graph_nilpotent) {
                std::vector<SylowSpec> sylows;
                for (const auto& spec : sylow_specs) {
                    const auto colon = spec.find(':');
                    if (colon == std::string::npos || colon + 2 != spec.size() ||
                        (spec[colon + 1] != 'a' && spec[colon + 1] != 'n'))
                        throw std::invalid_argument("bad Sylow entry '" + spec +
                                                    "', expected P:a or P:n");
                    sylows.push_back(
                        {std::stoi(spec.substr(0, colon)), spec[colon + 1] == 'a'});
                }
                print_graph(gamma_prime_nilpotent(sylows), format, out);
            } else if ((*cmd_graph && *graph_gl) || (*cmd_gl && *gl_graph)) {
                const GlArgs& args = (*cmd_graph && *graph_gl) ? graph_gl_args : gl_args;
                args.validate();
                const GlGraphResult result = gamma_prime_gl(args.params());
                for (const auto& note : result.notes) err << "note: " << note << "\n";
                print_graph(result.graph, format, out);
            } else if (*gl_classify) {
                gl_args.validate();
                const GLParams params = gl_args.params();
                const PrimePair pi(gl_p, gl_q_prime);
                bool only_linear = gl_only_linear(params, pi);
                // small groups: the enumerated table is authoritative
                if (params.eps == 1 && params.n <= 4) {
                    const auto table =
                        gl_character_degrees(params.n, params.field_order(), params.r);
                    const bool oracle = gl_only_linear_from_table(table, pi);
                    if (oracle != only_linear) {
                        err << "note: closed-form criterion disagrees with the enumerated "
                               "degree table; the table decided\n";
                        only_linear = oracle;
                    }
                }
                if (format == "json")
                    out << "{\"only_linear\":" << (only_linear ? "true" : "false") << "}\n";
                else
                    out << (only_linear ? "ONLY_LINEAR" : "WITNESS_EXISTS") << "\n";
            } else if (*gl_degrees) {
                const DegreeTable table = gl_character_degrees(gl_deg_n, gl_deg_q);
                if (format == "json")
                    out << table.to_json() << "\n";
                else
                    out << table.to_tsv();
            }
        } else if (*cmd_verify) {
            const auto results = verify::run(suite, max_n, jobs);
            bool all_pass = true;
            for (const auto& r : results) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pichar
