#include "netcode/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "netcode/convert.hpp"
#include "netcode/delaycode.hpp"
#include "netcode/lif.hpp"
#include "netcode/netgen.hpp"
#include "netcode/oracle.hpp"
#include "netcode/reproduce.hpp"
#include "netcode/serialize.hpp"
#include "netcode/sim.hpp"

namespace netcode {

namespace {

int env_threads() {
    const char* v = std::getenv("NETCODE_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

Network generate(const std::string& spec, uint64_t seed) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) params.push_back(std::stoi(tok));
    }
    if (kind == "butterfly") return netgen::butterfly();
    if (kind == "combination") {
        if (params.size() != 2) throw Error("combination:n,k expected");
        return netgen::combination(params[0], params[1]);
    }
    if (kind == "fig2") return netgen::fig2_cascade();
    if (kind == "example1") return netgen::example1_net();
    if (kind == "example3") return netgen::example3_net();
    if (kind == "fig4") return netgen::fig4_net();
    if (kind == "random") {
        if (params.size() != 4) throw Error("random:nodes,edges,h,sinks expected");
        return netgen::random_acyclic(params[0], params[1], params[2], params[3], seed);
    }
    throw Error("unknown generator " + spec +
                " (expected butterfly|combination:n,k|fig2|example1|example3|fig4|random:...)");
}

std::vector<uint32_t> parse_fields(const std::string& csv) {
    std::vector<uint32_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(uint32_t(std::stoul(tok)));
    if (out.empty()) throw Error("empty field list");
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"linear network codes on acyclic networks, with and without delays"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path = "-";
    bool pretty = false;
    uint64_t seed = 1;
    app.add_option("--out", out_path, "output file (- = stdout)")->capture_default_str();
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "emit a network description");
    std::string gen_spec;
    gen->add_option("spec", gen_spec,
                    "butterfly|combination:n,k|fig2|example1|example3|fig4|"
                    "random:nodes,edges,h,sinks")
        ->required();

    // construct
    auto* con = app.add_subcommand("construct", "build a code for a network");
    std::string con_algo = "lif", con_field = "2^1", con_mode = "ud",
                con_disc = "nonuniform", con_net;
    con->add_option("--algo", con_algo, "lif|dnc")->capture_default_str();
    con->add_option("--field", con_field, "field as p^m or plain size")
        ->capture_default_str();
    con->add_option("--mode", con_mode, "inst|ud")->capture_default_str();
    con->add_option("--discipline", con_disc, "uniform|nonuniform (dnc only)")
        ->capture_default_str();
    con->add_option("network", con_net, "network.json (- = stdin)")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "check feasibility of a code");
    std::string ver_net, ver_code, ver_report;
    ver->add_option("network", ver_net)->required();
    ver->add_option("code", ver_code, "code or scheme JSON (- = stdin)")->required();
    ver->add_option("--report", ver_report, "write the transfer report here");

    // convert
    auto* cvt = app.add_subcommand("convert",
                                   "unit-delay code -> instantaneous over an extension");
    std::string cvt_net, cvt_code;
    cvt->add_option("network", cvt_net)->required();
    cvt->add_option("code", cvt_code)->required();

    // minfield
    auto* mf = app.add_subcommand("minfield", "smallest feasible field in a list");
    std::string mf_mode = "inst", mf_fields = "2,3,4", mf_net;
    uint64_t mf_cap = 100'000'000;
    int mf_srcdeg = 0;
    mf->add_option("--mode", mf_mode)->capture_default_str();
    mf->add_option("--fields", mf_fields)->capture_default_str();
    mf->add_option("--cap", mf_cap, "exploration budget")->capture_default_str();
    mf->add_option("--srcdeg", mf_srcdeg, "source polynomial degree bound (ud)")
        ->capture_default_str();
    mf->add_option("network", mf_net)->required();

    // audit
    auto* aud = app.add_subcommand("audit", "relationship table consistency check");
    std::string aud_fields = "2,3,4", aud_net;
    uint64_t aud_cap = 100'000'000;
    int aud_srcdeg = 0;
    aud->add_option("--fields", aud_fields)->capture_default_str();
    aud->add_option("--cap", aud_cap)->capture_default_str();
    aud->add_option("--srcdeg", aud_srcdeg)->capture_default_str();
    aud->add_option("network", aud_net)->required();

    // simulate
    auto* sim = app.add_subcommand("simulate", "drive symbols through the network");
    std::string sim_net, sim_code;
    int sim_horizon = 16;
    sim->add_option("network", sim_net)->required();
    sim->add_option("code", sim_code)->required();
    sim->add_option("--horizon", sim_horizon)->capture_default_str();

    // materialize
    auto* mat = app.add_subcommand("materialize",
                                   "push a uniform scheme's memory onto edges");
    std::string mat_net, mat_scheme, mat_out_net = "-", mat_out_code = "-";
    mat->add_option("network", mat_net)->required();
    mat->add_option("scheme", mat_scheme)->required();
    mat->add_option("--out-net", mat_out_net)->capture_default_str();
    mat->add_option("--out-code", mat_out_code)->capture_default_str();

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "run the claim-reproduction suite");
    std::string rep_claim;
    rep->add_option("--claim", rep_claim, "claim id prefix (empty = all)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Network n = generate(gen_spec, seed);
            write_file(out_path, network_to_json(n, pretty));
            return 0;
        }
        if (*con) {
            Network n = network_from_json(read_file(con_net));
            Mode mode = parse_mode(con_mode);
            if (con_algo == "lif") {
                FieldPtr f = Field::parse(con_field);
                auto res = lif_construct(n, f, mode);
                if (res.stats.nonstrict_successes > 0)
                    std::cerr << "note: field size at or below the sufficiency bound "
                                 "q > max |T(e)| worked on "
                              << res.stats.nonstrict_successes << " edge(s)"
                              << std::endl;
                write_file(out_path, code_to_json(res.code, pretty));
            } else if (con_algo == "dnc") {
                DelayCodeScheme s = parse_discipline(con_disc) == Discipline::uniform
                                        ? uniform_construct(n, mode)
                                        : nonuniform_construct(n, mode);
                write_file(out_path, scheme_to_json(s, pretty));
            } else {
                throw Error("unknown algorithm " + con_algo);
            }
            return 0;
        }
        if (*ver) {
            Network n = network_from_json(read_file(ver_net));
            LoadedCode lc = code_or_scheme_from_json(n, read_file(ver_code));
            lc.code.validate(n);
            auto report = transfer_matrices(n, lc.code);
            if (!ver_report.empty())
                write_file(ver_report, report_to_json(n, report, pretty));
            auto verdict = check_feasibility(report);
            if (verdict.feasible) {
                std::cout << "feasible" << std::endl;
                return 0;
            }
            std::string msg = "infeasible:";
            for (int t : verdict.invertibility_failures)
                msg += " invertibility(" + n.node_name(n.sinks()[size_t(t)].node) + ")";
            for (int t : verdict.interference_failures)
                msg += " interference(" + n.node_name(n.sinks()[size_t(t)].node) + ")";
            std::cout << msg << std::endl;
            return 1;
        }
        if (*cvt) {
            Network n = network_from_json(read_file(cvt_net));
            NetworkCode ud = code_from_json(read_file(cvt_code));
            auto res = ud_to_inst(n, ud);
            write_file(out_path, code_to_json(res.inst_code, pretty));
            std::cerr << "{\"Q\": " << res.q_field->size() << ", \"z_Q\": " << res.z_q
                      << ", \"deg_gn\": " << res.deg_gn << ", \"deg_gd\": " << res.deg_gd
                      << "}" << std::endl;
            return 0;
        }
        if (*mf) {
            Network n = network_from_json(read_file(mf_net));
            oracle::SearchOptions opts;
            opts.cap = mf_cap;
            opts.source_deg_bound = mf_srcdeg;
            opts.threads = env_threads();
            auto res = oracle::min_field_size(n, parse_mode(mf_mode),
                                              parse_fields(mf_fields), opts);
            std::ostringstream os;
            os << "{\"verdicts\": {";
            for (size_t i = 0; i < res.verdicts.size(); ++i)
                os << (i ? ", " : "") << "\"" << res.verdicts[i].first
                   << "\": " << (res.verdicts[i].second ? "true" : "false");
            os << "}, \"min\": "
               << (res.min_q ? std::to_string(*res.min_q) : std::string("null"));
            os << ", \"certificates\": [";
            for (size_t i = 0; i < res.certificates.size(); ++i) {
                const auto& c = res.certificates[i];
                os << (i ? ", " : "") << "{\"q\": " << res.verdicts[i].first
                   << ", \"feasible\": " << (c.feasible ? "true" : "false")
                   << ", \"family_size\": " << c.family_size
                   << ", \"explored\": " << c.explored << ", \"pruned\": " << c.pruned
                   << ", \"family\": \"" << c.family << "\"}";
            }
            os << "]}";
            write_file(out_path, os.str());
            return 0;
        }
        if (*aud) {
            Network n = network_from_json(read_file(aud_net));
            oracle::SearchOptions opts;
            opts.cap = aud_cap;
            opts.source_deg_bound = aud_srcdeg;
            opts.threads = env_threads();
            auto res = oracle::relationship_audit(n, parse_fields(aud_fields), opts);
            std::ostringstream os;
            os << "{\"equal_depth\": " << (res.equal_depth ? "true" : "false")
               << ", \"fields\": [";
            for (size_t i = 0; i < res.fields.size(); ++i) {
                os << (i ? ", " : "") << "{\"q\": " << res.fields[i]
                   << ", \"inst\": " << (res.inst_feasible[i] ? "true" : "false")
                   << ", \"ud\": " << (res.ud_feasible[i] ? "true" : "false") << "}";
            }
            os << "], \"consistent\": " << (res.consistent ? "true" : "false")
               << ", \"detail\": \"" << res.detail << "\"}";
            write_file(out_path, os.str());
            return res.consistent ? 0 : 1;
        }
        if (*sim) {
            Network n = network_from_json(read_file(sim_net));
            LoadedCode lc = code_or_scheme_from_json(n, read_file(sim_code));
            const Field* f = lc.code.field();
            std::mt19937_64 rng(seed);
            std::vector<std::vector<uint32_t>> inputs(size_t(n.h()));
            for (auto& x : inputs) {
                x.resize(size_t(sim_horizon));
                for (auto& v : x) v = uint32_t(rng() % f->size());
            }
            Trace tr = simulate(n, lc.code, inputs, sim_horizon);
            std::ostringstream os;
            os << "time,edge,symbol\n";
            for (const auto& [eid, seqv] : tr.sequences)
                for (int t = 0; t < tr.horizon; ++t)
                    os << t << "," << eid << "," << seqv[size_t(t)] << "\n";
            write_file(out_path, os.str());
            return 0;
        }
        if (*mat) {
            Network n = network_from_json(read_file(mat_net));
            DelayCodeScheme s = scheme_from_json(read_file(mat_scheme));
            auto res = materialize(n, s);
            write_file(mat_out_net, network_to_json(res.network, pretty));
            write_file(mat_out_code, code_to_json(res.code, pretty));
            return 0;
        }
        if (*rep) {
            auto results = repro::run_claims(rep_claim, seed, &std::cout);
            bool all = true;
            int passed = 0;
            for (const auto& cr : results) {
                all = all && cr.pass;
                passed += cr.pass ? 1 : 0;
            }
            std::cout << passed << "/" << results.size() << " claims passed"
                      << std::endl;
            if (results.empty()) {
                std::cerr << "no claim matches '" << rep_claim << "'" << std::endl;
                return 2;
            }
            return all ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}

}  // namespace netcode
