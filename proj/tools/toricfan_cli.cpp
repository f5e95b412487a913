#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toricfan/toricfan.hpp"

using namespace toricfan;

namespace {

struct Options {
    std::string format = "text";
    int jobs = 1;
    std::string checkpoint;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

RootDatum root_datum_from_arg(const std::string& arg) {
    if (std::filesystem::exists(arg)) return parse_root_datum(read_text_file(arg));
    return parse_root_datum(arg);
}

void print_fan(const Options& opt, const Fan& f) {
    if (json_mode(opt))
        emit(fan_to_json(f));
    else
        std::cout << fan_to_text(f);
}

void print_classification(const Options& opt, const Classification& c) {
    if (json_mode(opt)) {
        emit(classification_to_json(c));
        return;
    }
    std::cout << "fano: " << yesno(c.fano) << "\n";
    std::cout << "weak fano: " << yesno(c.weak_fano) << "\n";
    if (!c.witness.empty()) std::cout << "witness: " << c.witness << "\n";
}

void print_polytope(const Options& opt, const LatticePolytope& p) {
    if (json_mode(opt)) {
        emit(polytope_to_json(p));
        return;
    }
    std::cout << "dim " << p.dim << "\n";
    for (const Vec& v : p.vertices) std::cout << "vertex " << vec_to_string(v) << "\n";
    for (size_t i = 0; i < p.facet_normals.size(); ++i)
        std::cout << "facet " << vec_to_string(p.facet_normals[i]) << " "
                  << p.facet_offsets[i] << "\n";
}

void run_fan_check(const Options& opt, const std::string& path) {
    Fan f = parse_fan(read_text_file(path));
    bool smooth = is_smooth(f);
    bool complete = is_complete(f);
    bool fano = false;
    bool weak = false;
    std::vector<Int> degrees;
    if (smooth && complete) {
        fano = true;
        weak = true;
        for (const Wall& w : walls(f)) {
            Int d = anticanonical_degree(w);
            degrees.push_back(d);
            if (d <= 0) fano = false;
            if (d < 0) weak = false;
        }
    }
    if (json_mode(opt)) {
        Json j{{"smooth", smooth}, {"complete", complete}, {"fano", fano},
               {"weak_fano", weak}};
        if (smooth && complete) j["wall_degrees"] = degrees;
        emit(j);
        return;
    }
    std::cout << "smooth: " << yesno(smooth) << "\n";
    std::cout << "complete: " << yesno(complete) << "\n";
    std::cout << "fano: " << yesno(fano) << "\n";
    std::cout << "weak fano: " << yesno(weak) << "\n";
    if (smooth && complete) {
        std::cout << "wall degrees:";
        for (Int d : degrees) std::cout << " " << d;
        std::cout << "\n";
    } else {
        std::cout << "wall degrees: only defined for smooth complete fans\n";
    }
}

void run_polytope_check(const Options& opt, const std::string& path) {
    LatticePolytope p = parse_polytope(read_text_file(path));
    bool reflexive = is_reflexive(p);
    bool smooth_fano = is_smooth_fano(p);
    bool pseudo = smooth_fano && is_pseudo_symmetric(p);
    if (json_mode(opt)) {
        Json j{{"reflexive", reflexive}, {"smooth_fano", smooth_fano}};
        if (smooth_fano) j["pseudo_symmetric"] = pseudo;
        emit(j);
        return;
    }
    std::cout << "reflexive: " << yesno(reflexive) << "\n";
    std::cout << "smooth fano: " << yesno(smooth_fano) << "\n";
    std::cout << "pseudo-symmetric: "
              << (smooth_fano ? yesno(pseudo) : std::string("only defined for smooth Fano"))
              << "\n";
}

void run_two_fano(const Options& opt, const std::string& path) {
    BuildingSet b = parse_building_set(read_text_file(path));
    TwoFanoResult r = is_two_fano(b);
    if (json_mode(opt)) {
        emit(two_fano_to_json(r));
        return;
    }
    std::cout << "two fano: " << yesno(r.two_fano) << "\n";
    if (r.has_witness) {
        if (r.witness_tau.empty()) {
            std::cout << "witness surface: the variety itself\n";
        } else {
            std::cout << "witness surface: star of {";
            for (size_t i = 0; i < r.witness_tau.size(); ++i)
                std::cout << (i ? ", " : "")
                          << r.scanned.labels[static_cast<size_t>(r.witness_tau[i])];
            std::cout << "}\n";
        }
        std::cout << "ch2 . S = " << r.ch2.to_string() << "\n";
    }
}

void run_realize(const Options& opt, const std::string& path) {
    BuildingSet b = parse_building_set(read_text_file(path));
    auto g = find_digraph_realization(b);
    if (json_mode(opt)) {
        Json j{{"found", g.has_value()}};
        if (g) j["digraph"] = digraph_to_json(*g);
        emit(j);
        return;
    }
    if (!g) {
        std::cout << "no realization found\n";
        return;
    }
    std::cout << "nodes " << g->nodes << "\n";
    for (const auto& [a, bnode] : g->arrows)
        std::cout << "arrow " << a + 1 << " " << bnode + 1 << "\n";
}

void print_report(const Options& opt, const EnumerationReport& r,
                  const std::string& param_label, const std::string& total_label,
                  const std::string& positive_label) {
    if (json_mode(opt))
        emit(report_to_json(r));
    else
        std::cout << report_to_text(r, param_label, total_label, positive_label);
}

void run_table2(const Options& opt, int max_dim, bool extended) {
    Table2Checkpoint cp;
    Table2Checkpoint* cpp = nullptr;
    std::function<void(const Table2Checkpoint&)> save;
    if (!opt.checkpoint.empty()) {
        if (std::filesystem::exists(opt.checkpoint)) {
            cp = checkpoint_from_json(detail::parse_json(read_text_file(opt.checkpoint)));
            cpp = &cp;
        } else {
            cpp = &cp;
        }
        std::string path = opt.checkpoint;
        save = [path](const Table2Checkpoint& c) {
            std::ofstream out(path, std::ios::trunc);
            out << checkpoint_to_json(c).dump() << "\n";
        };
    }
    EnumerationReport r = table2(max_dim, extended, cpp, save);
    if (json_mode(opt)) {
        emit(report_to_json(r));
        return;
    }
    std::cout << "dimension ";
    for (const ReportRow& row : r.rows) std::cout << " " << std::setw(6) << row.param;
    std::cout << "\nvarieties ";
    for (const ReportRow& row : r.rows) std::cout << " " << std::setw(6) << row.positive;
    std::cout << "\n";
}

void run_cross_validate(const Options& opt, const std::string& corpus_name, int& exit_code) {
    Corpus corpus;
    if (corpus_name == "graphs")
        corpus = Corpus::Graphs;
    else if (corpus_name == "building-sets")
        corpus = Corpus::BuildingSets;
    else if (corpus_name == "cubeahedra")
        corpus = Corpus::Cubeahedra;
    else if (corpus_name == "roots")
        corpus = Corpus::Roots;
    else
        throw IoError("unknown corpus '" + corpus_name +
                      "' (expected graphs, building-sets, cubeahedra, or roots)");
    CrossValidation cv = cross_validate(corpus, opt.jobs);
    if (json_mode(opt)) {
        emit(Json{{"cases", cv.cases}, {"disagreements", cv.disagreements}});
    } else {
        std::cout << "cases: " << cv.cases << "\n";
        std::cout << "disagreements: " << cv.disagreements.size() << "\n";
        for (const std::string& d : cv.disagreements) std::cout << "  " << d << "\n";
    }
    if (!cv.disagreements.empty()) exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    int exit_code = 0;

    CLI::App app{"toric fans of building sets, graph associahedra and cubeahedra,"
                 " and Weyl chambers: construction, Fano classification, reflexive"
                 " polytopes, and enumeration tables"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--checkpoint", opt.checkpoint,
                   "checkpoint file for resumable enumeration (enumerate table2)");

    // fan
    CLI::App* fan = app.add_subcommand("fan", "build and inspect fans");
    fan->require_subcommand(1);

    CLI::App* fan_build = fan->add_subcommand("build", "construct a fan");
    auto fb_building = std::make_shared<std::string>();
    auto fb_cube = std::make_shared<std::string>();
    auto fb_root = std::make_shared<std::string>();
    CLI::Option* o_b = fan_build->add_option("--building-set", *fb_building,
                                             "building set file (JSON or text)");
    CLI::Option* o_c = fan_build->add_option("--cubeahedron", *fb_cube,
                                             "graph file for the graph cubeahedron");
    CLI::Option* o_r = fan_build->add_option("--root-system", *fb_root,
                                             "root system name (e.g. G2, A2xB3) or Cartan file");
    o_b->excludes(o_c)->excludes(o_r);
    o_c->excludes(o_r);
    fan_build->callback([&opt, fb_building, fb_cube, fb_root, o_b, o_c, o_r] {
        if (*o_b)
            print_fan(opt, fan_of_building_set(parse_building_set(read_text_file(*fb_building))));
        else if (*o_c)
            print_fan(opt, cubeahedron_fan(parse_graph(read_text_file(*fb_cube))));
        else if (*o_r)
            print_fan(opt, weyl_fan(root_datum_from_arg(*fb_root)));
        else
            throw CLI::RequiredError("one of --building-set, --cubeahedron, --root-system");
    });

    CLI::App* fan_check = fan->add_subcommand(
        "check", "report smoothness, completeness, Fano type, and wall degrees");
    auto fc_file = std::make_shared<std::string>();
    fan_check->add_option("file", *fc_file, "fan JSON file")->required();
    fan_check->callback([&opt, fc_file] { run_fan_check(opt, *fc_file); });

    // classify
    CLI::App* classify = app.add_subcommand("classify", "Fano / weak Fano classification");
    classify->require_subcommand(1);

    CLI::App* cls_graph = classify->add_subcommand("graph", "classify a graph associahedron");
    auto cg_file = std::make_shared<std::string>();
    auto cg_cube = std::make_shared<bool>(false);
    cls_graph->add_option("file", *cg_file, "graph file (JSON or text)")->required();
    cls_graph->add_flag("--cubeahedron", *cg_cube, "classify the graph cubeahedron instead");
    cls_graph->callback([&opt, cg_file, cg_cube] {
        SimpleGraph g = parse_graph(read_text_file(*cg_file));
        print_classification(opt, *cg_cube ? cubeahedron_weak_fano(g) : graph_weak_fano(g));
    });

    CLI::App* cls_bs = classify->add_subcommand("building-set", "classify a building set fan");
    auto cb_file = std::make_shared<std::string>();
    cls_bs->add_option("file", *cb_file, "building set file (JSON or text)")->required();
    cls_bs->callback([&opt, cb_file] {
        print_classification(opt,
                             building_set_weak_fano(parse_building_set(read_text_file(*cb_file))));
    });

    CLI::App* cls_root = classify->add_subcommand("root-system", "classify a Weyl chamber fan");
    auto cr_arg = std::make_shared<std::string>();
    cls_root->add_option("type", *cr_arg, "root system name (e.g. A2xB3) or Cartan file")
        ->required();
    cls_root->callback([&opt, cr_arg] {
        print_classification(opt, root_system_fano_weak_fano(root_datum_from_arg(*cr_arg)));
    });

    // polytope
    CLI::App* poly = app.add_subcommand("polytope", "lattice polytopes of weak Fano fans");
    poly->require_subcommand(1);

    CLI::App* poly_from = poly->add_subcommand("from-fan", "polytope spanned by the ray generators");
    auto pf_file = std::make_shared<std::string>();
    poly_from->add_option("file", *pf_file, "fan JSON file")->required();
    poly_from->callback([&opt, pf_file] {
        print_polytope(opt, polytope_of_weak_fano_fan(parse_fan(read_text_file(*pf_file))));
    });

    CLI::App* poly_check = poly->add_subcommand(
        "check", "report reflexivity, smooth Fano, and pseudo-symmetry");
    auto pc_file = std::make_shared<std::string>();
    poly_check->add_option("file", *pc_file, "polytope JSON file")->required();
    poly_check->callback([&opt, pc_file] { run_polytope_check(opt, *pc_file); });

    CLI::App* poly_nf = poly->add_subcommand(
        "normal-form", "canonical form of a smooth Fano polytope under unimodular maps");
    auto pn_file = std::make_shared<std::string>();
    poly_nf->add_option("file", *pn_file, "polytope JSON file")->required();
    poly_nf->callback([&opt, pn_file] {
        std::string nf = normal_form(parse_polytope(read_text_file(*pn_file)));
        if (json_mode(opt))
            emit(Json{{"normal_form", nf}});
        else
            std::cout << nf << "\n";
    });

    // digraph
    CLI::App* digraph = app.add_subcommand("digraph", "directed-graph polytopes");
    digraph->require_subcommand(1);

    CLI::App* dg_poly = digraph->add_subcommand("polytope",
                                                "lattice polytope spanned by arrow vectors");
    auto dp_file = std::make_shared<std::string>();
    dg_poly->add_option("file", *dp_file, "digraph JSON file")->required();
    dg_poly->callback([&opt, dp_file] {
        print_polytope(opt, digraph_polytope(parse_digraph(read_text_file(*dp_file))));
    });

    CLI::App* dg_real = digraph->add_subcommand(
        "realize", "search for a digraph whose polytope matches a Fano building set");
    auto dr_file = std::make_shared<std::string>();
    dg_real->add_option("--building-set", *dr_file, "building set file (JSON or text)")
        ->required();
    dg_real->callback([&opt, dr_file] { run_realize(opt, *dr_file); });

    // check
    CLI::App* check = app.add_subcommand("check", "positivity checks beyond Fano");
    check->require_subcommand(1);

    CLI::App* check_2f = check->add_subcommand("two-fano",
                                               "decide positivity of the second Chern character");
    auto tf_file = std::make_shared<std::string>();
    check_2f->add_option("--building-set", *tf_file, "building set file (JSON or text)")
        ->required();
    check_2f->callback([&opt, tf_file] { run_two_fano(opt, *tf_file); });

    // enumerate
    CLI::App* enumerate = app.add_subcommand("enumerate", "reproduce the counting tables");
    enumerate->require_subcommand(1);

    CLI::App* en_t1 = enumerate->add_subcommand(
        "table1", "connected graphs per node count and weak Fano associahedra");
    en_t1->callback([&opt] {
        print_report(opt, table1(opt.jobs), "nodes", "connected graphs", "weak fano");
    });

    CLI::App* en_t3 = enumerate->add_subcommand(
        "table3", "connected graphs per node count and weak Fano cubeahedra");
    en_t3->callback([&opt] {
        print_report(opt, table3(opt.jobs), "nodes", "connected graphs", "weak fano");
    });

    CLI::App* en_t2 = enumerate->add_subcommand(
        "table2", "distinct Fano varieties from building sets per dimension");
    auto t2_max = std::make_shared<int>(4);
    auto t2_ext = std::make_shared<bool>(false);
    en_t2->add_option("--max-dim", *t2_max, "largest dimension to enumerate")
        ->check(CLI::PositiveNumber);
    en_t2->add_flag("--extended", *t2_ext, "allow the long dimension-5 run");
    en_t2->callback([&opt, t2_max, t2_ext] { run_table2(opt, *t2_max, *t2_ext); });

    // cross-validate
    CLI::App* cv = app.add_subcommand(
        "cross-validate", "compare the combinatorial criteria against the fan oracle");
    auto cv_corpus = std::make_shared<std::string>();
    cv->add_option("corpus", *cv_corpus, "graphs | building-sets | cubeahedra | roots")
        ->required();
    cv->callback([&opt, cv_corpus, &exit_code] {
        run_cross_validate(opt, *cv_corpus, exit_code);
    });

    for (CLI::App* sub :
         {fan, fan_build, fan_check, classify, cls_graph, cls_bs, cls_root, poly, poly_from,
          poly_check, poly_nf, digraph, dg_poly, dg_real, check, check_2f, enumerate, en_t1,
          en_t3, en_t2, cv})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OrbitTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GroundSetTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
