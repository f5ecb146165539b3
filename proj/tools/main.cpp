#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "semigraphoid/cone.hpp"
#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/linalg.hpp"
#include "semigraphoid/submodular.hpp"
#include "semigraphoid/verify.hpp"

using json = nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int resolve_n(int n_flag, const std::string& text, bool move_format = false) {
    if (n_flag > 0) return n_flag;
    return move_format ? sg::infer_move_ground_set(text) : sg::infer_ground_set(text);
}

json set_json(const sg::statement_set& s) {
    const auto& tab = sg::table_for(s.n);
    json arr = json::array();
    for (int c : s.members()) arr.push_back(sg::statement_text(tab.at(c)));
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semigraphoid toolkit: conditional-independence structures, "
                 "submodularity, imset semigroups, Markov moves, rank-test geometry"};
    app.require_subcommand(0, 1);

    int n_flag = 0;
    app.add_option("--n", n_flag, "ground-set size (default: inferred from the input)")
        ->check(CLI::Range(2, 8));
    std::string export_dir;
    app.add_option("--export-fixtures", export_dir, "write the embedded data files to a directory");

    // axioms
    auto* cmd_ax = app.add_subcommand("axioms", "print the canonical axiom list");
    int ax_n = 4;
    std::string ax_format = "plain";
    cmd_ax->add_option("--n", ax_n, "ground-set size")->check(CLI::Range(2, 6));
    cmd_ax->add_option("--format", ax_format, "plain | eq")->check(CLI::IsMember({"plain", "eq"}));

    // file commands
    std::string file_arg;
    bool json_out = false;
    auto add_file_cmd = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("file", file_arg, "input file")->required();
        cmd->add_flag("--json", json_out, "machine-readable output");
        return cmd;
    };
    auto* cmd_check = add_file_cmd("check", "decide whether a statement set is a semigraphoid");
    auto* cmd_closure = add_file_cmd("closure", "smallest semigraphoid containing the statements");
    auto* cmd_coarsest = add_file_cmd("coarsest", "is the semigraphoid maximal among non-full ones?");
    auto* cmd_sub = add_file_cmd("submodular", "decide submodularity; print witness or certificate");

    // enumerate / classify
    auto* cmd_enum = app.add_subcommand("enumerate", "count (and optionally list) all semigraphoids, n <= 4");
    int enum_n = 4;
    bool enum_list = false, enum_json = false;
    cmd_enum->add_option("--n", enum_n, "ground-set size")->check(CLI::Range(2, 4));
    cmd_enum->add_flag("--list", enum_list, "print one statement-set block per semigraphoid");
    cmd_enum->add_flag("--json", enum_json, "machine-readable output");

    auto* cmd_classify = app.add_subcommand("classify", "non-submodular classification table for n=4");
    int classify_threads = sg::default_thread_count();
    cmd_classify->add_option("--threads", classify_threads, "worker count");

    // imset subcommands
    auto* cmd_imset = app.add_subcommand("imset", "structural/combinatorial membership and fibers");
    cmd_imset->require_subcommand(1);
    std::string imset_file;
    int fiber_cap = sg::default_degree_cap;
    auto* im_struct = cmd_imset->add_subcommand("structural", "lattice point of the elementary-imset cone?");
    im_struct->add_option("file", imset_file)->required();
    auto* im_comb = cmd_imset->add_subcommand("combinatorial", "nonnegative-integer preimage witness");
    im_comb->add_option("file", imset_file)->required();
    auto* im_fiber = cmd_imset->add_subcommand("fiber", "enumerate the full preimage fiber");
    im_fiber->add_option("file", imset_file)->required();
    im_fiber->add_option("--max-degree", fiber_cap, "fiber degree cap");

    // markov subcommands
    auto* cmd_markov = app.add_subcommand("markov", "kernel membership, indispensability, orbits, connectivity, primes");
    cmd_markov->require_subcommand(1);
    std::string markov_file;
    int connect_degree = 4;
    auto* mk_kernel = cmd_markov->add_subcommand("kernel", "is the move in ker A?");
    mk_kernel->add_option("file", markov_file)->required();
    auto* mk_ind = cmd_markov->add_subcommand("indispensable", "two-element fiber test");
    mk_ind->add_option("file", markov_file)->required();
    auto* mk_orbit = cmd_markov->add_subcommand("orbit", "relabeling orbit, canonical signs");
    mk_orbit->add_option("file", markov_file)->required();
    auto* mk_connect = cmd_markov->add_subcommand("connect", "fiber-graph connectivity of a move basis");
    mk_connect->add_option("file", markov_file)->required();
    mk_connect->add_option("--degree", connect_degree, "check all fibers up to this degree");
    auto* mk_primes = cmd_markov->add_subcommand("primes", "axiom containment in the reference monomial primes");
    int primes_n = 4;
    mk_primes->add_option("--n", primes_n)->check(CLI::IsMember({4}));

    // geometry subcommands
    auto* cmd_geo = app.add_subcommand("geometry", "rank-test partitions, simpliciality, polytopes");
    cmd_geo->require_subcommand(1);
    std::string geo_file;
    auto* geo_rank = cmd_geo->add_subcommand("ranktest", "partition of S_n induced by a semigraphoid");
    geo_rank->add_option("file", geo_file)->required();
    auto* geo_stmts = cmd_geo->add_subcommand("statements", "statements generated by a partition file");
    geo_stmts->add_option("file", geo_file)->required();
    auto* geo_simp = cmd_geo->add_subcommand("simplicial", "are all class cones simplicial?");
    geo_simp->add_option("file", geo_file)->required();
    auto* geo_fvec = cmd_geo->add_subcommand("fvector", "vertex enumeration and f-vector of a polytope file");
    geo_fvec->add_option("file", geo_file)->required();

    // verify-paper
    auto* cmd_verify = app.add_subcommand("verify-paper", "run the reproduction suite");
    bool verify_full = false, verify_json = false;
    int verify_threads = sg::default_thread_count();
    cmd_verify->add_flag("--full", verify_full, "include the n=4 enumeration sweep and table");
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");
    cmd_verify->add_option("--threads", verify_threads, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (!export_dir.empty()) {
            sg::fixtures::verify_checksums();
            sg::fixtures::export_fixtures(export_dir);
            std::cout << "fixtures written to " << export_dir << "\n";
            return exit_ok;
        }

        if (*cmd_ax) {
            const auto& tab = sg::table_for(ax_n);
            for (const auto& e : sg::generate_axioms(ax_n)) {
                if (ax_format == "eq")
                    std::cout << sg::axiom_text(e, tab) << "\n";
                else
                    std::cout << sg::statement_text(tab.at(e.x)) << " " << sg::statement_text(tab.at(e.y))
                              << " " << sg::statement_text(tab.at(e.z)) << " "
                              << sg::statement_text(tab.at(e.w)) << "\n";
            }
            return exit_ok;
        }

        if (*cmd_check || *cmd_closure || *cmd_coarsest || *cmd_sub) {
            std::string text = slurp(file_arg);
            int n = resolve_n(n_flag, text);
            sg::statement_set s = sg::parse_statement_set(text, n);
            if (*cmd_check) {
                bool ok = sg::is_semigraphoid(s);
                if (json_out)
                    std::cout << json{{"n", n}, {"semigraphoid", ok}, {"statements", set_json(s)}}.dump()
                              << "\n";
                else
                    std::cout << (ok ? "SEMIGRAPHOID" : "NOT_SEMIGRAPHOID") << "\n";
                return ok ? exit_ok : exit_check_failed;
            }
            if (*cmd_closure) {
                sg::statement_set cl = sg::closure(s);
                if (json_out)
                    std::cout << json{{"n", n}, {"closure", set_json(cl)}}.dump() << "\n";
                else
                    std::cout << sg::statement_set_text(cl);
                return exit_ok;
            }
            if (*cmd_coarsest) {
                bool ok = sg::is_coarsest(s);
                if (json_out)
                    std::cout << json{{"n", n}, {"coarsest", ok}}.dump() << "\n";
                else
                    std::cout << (ok ? "COARSEST" : "NOT_COARSEST") << "\n";
                return ok ? exit_ok : exit_check_failed;
            }
            // submodular
            auto res = sg::is_submodular(s);
            if (res.submodular) {
                // print the witness in imset syntax; clear denominators first
                sg::imset w(n);
                sg::rat_vec scaled = res.dual_witness;
                mpz_class lcm = 1;
                for (const auto& v : scaled) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
                for (sg::subset sub = 0; sub < w.c.size(); ++sub)
                    w[sub] = mpz_class(scaled[sub].get_num() * (lcm / scaled[sub].get_den())).get_si();
                if (json_out) {
                    json jw;
                    jw["n"] = n;
                    jw["submodular"] = true;
                    jw["witness_scale"] = lcm.get_str();
                    jw["witness"] = json::parse("{}");
                    for (sg::subset sub = 0; sub < w.c.size(); ++sub)
                        if (w[sub] != 0)
                            jw["witness"][sub == 0 ? "0" : sg::subset_text(sub)] = w[sub];
                    std::cout << jw.dump() << "\n";
                } else {
                    std::cout << "SUBMODULAR\n" << sg::imset_text(w);
                }
                return exit_ok;
            }
            if (json_out) {
                json jc;
                jc["n"] = n;
                jc["submodular"] = false;
                json terms = json::array();
                const auto& tab = sg::table_for(n);
                const auto& axioms = sg::generate_axioms(n);
                for (const auto& t : res.certificate->terms)
                    terms.push_back({{"axiom", sg::axiom_text(axioms[t.axiom_index], tab)},
                                     {"coefficient", t.coeff}});
                jc["certificate"] = terms;
                std::cout << jc.dump() << "\n";
            } else {
                std::cout << "NOT_SUBMODULAR\n" << sg::certificate_report(s, *res.certificate);
            }
            return exit_check_failed;
        }

        if (*cmd_enum) {
            long count = 0;
            const auto& tab = sg::table_for(enum_n);
            std::vector<std::uint32_t> all;
            count = sg::enumerate_semigraphoids(enum_n, sg::default_thread_count(),
                                                [&](std::uint32_t m) { if (enum_list || enum_json) all.push_back(m); });
            if (enum_json) {
                json j;
                j["n"] = enum_n;
                j["count"] = count;
                if (enum_list) {
                    json sets = json::array();
                    for (auto m : all) sets.push_back(set_json(sg::from_mask32(enum_n, m)));
                    j["semigraphoids"] = sets;
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << count << "\n";
                if (enum_list)
                    for (auto m : all) {
                        for (int c = 0; c < sg::gamma(enum_n); ++c)
                            if (m >> c & 1u) std::cout << sg::statement_text(tab.at(c)) << " ";
                        std::cout << "\n";
                    }
            }
            return exit_ok;
        }

        if (*cmd_classify) {
            auto res = sg::classification_table(4, classify_threads);
            std::cout << sg::table_text(res.table);
            std::cout << "# semigraphoids " << res.semigraphoids << ", submodular " << res.submodular
                      << ", non-submodular " << res.non_submodular << "\n";
            return exit_ok;
        }

        if (*cmd_imset) {
            std::string text = slurp(imset_file);
            int n = n_flag > 0 ? n_flag : 5;
            sg::imset b = sg::parse_imset(text, n);
            const auto& tab = sg::table_for(n);
            if (*im_struct) {
                bool ok = sg::is_structural(b);
                std::cout << (ok ? "STRUCTURAL" : "NOT_STRUCTURAL") << "\n";
                return ok ? exit_ok : exit_check_failed;
            }
            if (*im_comb) {
                auto witness = sg::is_combinatorial(b);
                if (!witness) {
                    std::cout << "NOT_COMBINATORIAL\n";
                    return exit_check_failed;
                }
                std::cout << "COMBINATORIAL\n";
                for (int c = 0; c < tab.size(); ++c)
                    if ((*witness)[c] != 0) {
                        std::cout << sg::statement_text(tab.at(c));
                        if ((*witness)[c] != 1) std::cout << "^" << (*witness)[c];
                        std::cout << "\n";
                    }
                return exit_ok;
            }
            auto fib = sg::enumerate_fiber(b, fiber_cap);
            std::cout << fib.size() << " fiber elements\n";
            for (const auto& x : fib) {
                bool first = true;
                for (int c = 0; c < tab.size(); ++c)
                    if (x[c] != 0) {
                        if (!first) std::cout << " ";
                        first = false;
                        std::cout << sg::statement_text(tab.at(c));
                        if (x[c] != 1) std::cout << "^" << x[c];
                    }
                std::cout << "\n";
            }
            return exit_ok;
        }

        if (*cmd_markov) {
            if (*mk_primes) {
                bool all = true;
                const char* names[] = {"codim12", "codim15", "codim16"};
                int k = 0;
                for (const auto& p : sg::fixtures::primes4()) {
                    bool ok = sg::prime_contains_axioms(p);
                    std::cout << names[k++] << ": " << (ok ? "CONTAINS_AXIOMS" : "MISSES_AXIOMS") << "\n";
                    all = all && ok;
                }
                return all ? exit_ok : exit_check_failed;
            }
            std::string text = slurp(markov_file);
            if (*mk_connect) {
                // basis file: alternating +/- line pairs
                std::istringstream in(text);
                std::string line;
                std::vector<std::string> lines;
                while (std::getline(in, line))
                    if (!line.empty()) lines.push_back(line);
                int n = n_flag > 0 ? n_flag : sg::infer_move_ground_set(text);
                std::vector<sg::markov_move> basis;
                for (size_t k = 0; k + 1 < lines.size(); k += 2)
                    basis.push_back(sg::parse_move(lines[k] + "\n" + lines[k + 1] + "\n", n));
                // all fibers of degree <= connect_degree
                const auto& tab = sg::table_for(n);
                std::set<std::vector<long long>> seen;
                std::vector<sg::imset> targets;
                std::vector<long long> x(sg::gamma(n), 0);
                std::function<void(int, int)> iter = [&](int from, int left) {
                    sg::imset b = sg::apply_map(tab, x);
                    if (seen.insert(b.c).second) targets.push_back(b);
                    if (left == 0) return;
                    for (int c = from; c < sg::gamma(n); ++c) {
                        ++x[c];
                        iter(c, left - 1);
                        --x[c];
                    }
                };
                iter(0, connect_degree);
                auto report = sg::connectivity_check(basis, targets, std::max(connect_degree, sg::default_degree_cap));
                std::cout << (report.all_connected ? "CONNECTED" : "DISCONNECTED") << " ("
                          << report.fibers.size() << " fibers, degree <= " << connect_degree << ")\n";
                for (const auto& f : report.fibers)
                    if (f.components > 1)
                        std::cout << "  disconnected fiber of size " << f.fiber_size << " ("
                                  << f.components << " components)\n";
                return report.all_connected ? exit_ok : exit_check_failed;
            }
            int n = resolve_n(n_flag, text, true);
            sg::markov_move m = sg::parse_move(text, n);
            if (*mk_kernel) {
                bool ok = sg::in_kernel(m);
                std::cout << (ok ? "IN_KERNEL" : "NOT_IN_KERNEL") << "\n";
                return ok ? exit_ok : exit_check_failed;
            }
            if (*mk_ind) {
                bool ok = sg::is_indispensable(m);
                std::cout << (ok ? "INDISPENSABLE" : "NOT_INDISPENSABLE") << "\n";
                return ok ? exit_ok : exit_check_failed;
            }
            auto orb = sg::orbit(m);
            std::cout << orb.size() << " moves in the orbit\n";
            for (const auto& v : orb) std::cout << sg::move_text({n, v});
            return exit_ok;
        }

        if (*cmd_geo) {
            std::string text = slurp(geo_file);
            if (*geo_fvec) {
                sg::h_polytope h = sg::parse_polytope(text);
                auto verts = sg::vertices_from_facets(h);
                if (verts.status == sg::polytope_status::empty) {
                    std::cout << "EMPTY\n";
                    return exit_check_failed;
                }
                if (verts.status == sg::polytope_status::unbounded) {
                    std::cout << "UNBOUNDED\n";
                    return exit_check_failed;
                }
                auto lat = sg::build_face_lattice(h, verts.vertices);
                std::cout << "vertices " << verts.vertices.size() << "\nf-vector (";
                for (size_t k = 0; k < lat.f_vector.size(); ++k)
                    std::cout << (k ? "," : "") << lat.f_vector[k];
                std::cout << ")\n";
                for (size_t f = 0; f < lat.facet_stats.size(); ++f)
                    std::cout << "facet " << f << ": vertices " << lat.facet_stats[f][0] << ", edges "
                              << lat.facet_stats[f][1] << ", 2-faces " << lat.facet_stats[f][2] << "\n";
                return exit_ok;
            }
            if (*geo_stmts) {
                int n = n_flag > 0 ? n_flag : 5;
                sg::rank_partition p = sg::parse_partition(text, n);
                std::cout << sg::statement_set_text(sg::statements_of_partition(p));
                return exit_ok;
            }
            int n = resolve_n(n_flag, text);
            sg::statement_set s = sg::parse_statement_set(text, n);
            if (*geo_rank) {
                std::cout << sg::partition_text(sg::rank_test(s));
                return exit_ok;
            }
            bool ok = sg::is_simplicial(s);
            std::cout << (ok ? "SIMPLICIAL" : "NOT_SIMPLICIAL") << "\n";
            return ok ? exit_ok : exit_check_failed;
        }

        if (*cmd_verify) {
            auto rep = sg::run_paper_checks(verify_full, verify_threads);
            std::cout << (verify_json ? sg::report_json(rep) + "\n" : sg::report_text(rep));
            return rep.pass() ? exit_ok : exit_check_failed;
        }

        std::cout << app.help();
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}
