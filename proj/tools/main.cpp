// Command-line front end: construct family designs, verify design files,
// classify local symmetry, build coset geometries, run the subset-orbit
// search and the catalog.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "geodesic/catalog.hpp"
#include "geodesic/cosetgeo.hpp"
#include "geodesic/families.hpp"
#include "geodesic/local.hpp"

using namespace geodesic;

namespace {

GeometricDesign construct_family(const std::string& family, const std::vector<std::string>& args) {
    auto argi = [&](size_t i) { return std::stoi(args.at(i)); };
    if (family == "pg") return projective_space(argi(0), argi(1));
    if (family == "pg-lines") return pg_lines(argi(0), argi(1));
    if (family == "ag") return affine_design(argi(0), argi(1), argi(2));
    if (family == "unital") return hermitian_unital(argi(0));
    if (family == "quadform") return quadratic_form_design(argi(0), args.at(1) == "+" ? 1 : -1);
    if (family == "hadamard12") return hadamard_12(default_data_dir());
    if (family == "hyperoval") return hyperoval_design(args.empty() ? 1 : argi(0));
    if (family == "witt22") return witt_22(default_data_dir(), args.empty() ? 1 : argi(0));
    if (family == "agl16-orbit") return agammal1_orbit_design();
    fail(ErrorKind::ParseError,
         "unknown family (try: pg, pg-lines, ag, unital, quadform, hadamard12, hyperoval, "
         "witt22, agl16-orbit)");
}

PermGroup subgroup_from_spec(const PermGroup& G, const std::string& spec) {
    if (spec.rfind("point:", 0) == 0) return G.point_stabilizer(std::stoi(spec.substr(6)));
    if (spec.rfind("set:", 0) == 0) {
        std::vector<int> pts;
        std::string body = spec.substr(4);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            pts.push_back(std::stoi(body.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return G.setwise_stabilizer(pts);
    }
    return read_group_file(spec);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"block designs with prescribed local symmetry"};
    app.set_help_flag("--help", "print help and exit"); // frees -h / --h for subcommands
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a family design");
    std::string family, out_file;
    std::vector<std::string> family_args;
    c_construct->add_option("family", family)->required();
    c_construct->add_option("params", family_args, "family parameters");
    c_construct->add_option("--out", out_file, "write the design file here");

    // verify
    auto* c_verify = app.add_subcommand("verify", "verify a design file");
    std::string design_file, group_file, format = "text";
    c_verify->add_option("design", design_file)->required();
    c_verify->add_option("--group-file", group_file);
    c_verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    // local
    auto* c_local = app.add_subcommand("local", "local symmetry report");
    std::string l_design, l_group;
    c_local->add_option("design", l_design)->required();
    c_local->add_option("--group-file", l_group)->required();

    // coset
    auto* c_coset = app.add_subcommand("coset", "coset geometry from (G,H,K)");
    std::string co_group, co_h, co_k, co_out;
    c_coset->add_option("--group-file", co_group)->required();
    c_coset->add_option("--h", co_h, "point:<i>, set:<i,j,...>, or a generator file")->required();
    c_coset->add_option("--k", co_k)->required();
    c_coset->add_option("--out", co_out);

    // search
    auto* c_search = app.add_subcommand("search", "orbit search over k-subsets");
    std::string s_group, s_level;
    int s_k = 0;
    uint64_t s_budget = uint64_t(1) << 24;
    c_search->add_option("--group-file", s_group)->required();
    c_search->add_option("--k", s_k)->required();
    c_search->add_option("--budget", s_budget);
    c_search->add_option("--level", s_level)->check(CLI::IsMember({"2h", "2t"}));

    // catalog run
    auto* c_catalog = app.add_subcommand("catalog", "catalog operations");
    auto* c_cat_run = c_catalog->add_subcommand("run", "run catalog entries");
    std::string cat_filter, cat_dir = default_data_dir(), cat_out;
    c_cat_run->add_option("--filter", cat_filter);
    c_cat_run->add_option("--data-dir", cat_dir);
    c_cat_run->add_option("--out", cat_out, "write the JSON report here");

    // params screen
    auto* c_params = app.add_subcommand("params", "parameter arithmetic");
    auto* c_screen = c_params->add_subcommand("screen", "admissible (v,b,r,k,lambda)");
    long long p_v = 0, p_rmax = 0;
    c_screen->add_option("--v", p_v)->required();
    c_screen->add_option("--rmax", p_rmax)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_construct) {
            GeometricDesign gd = construct_family(family, family_args);
            std::cout << gd.provenance << ": " << gd.actual.to_string() << "\n";
            if (gd.group) std::cout << "group order " << gd.group->order() << "\n";
            if (!out_file.empty()) {
                write_design(out_file, gd.design);
                std::cout << "wrote " << out_file << "\n";
            } else {
                std::cout << design_to_string(gd.design);
            }
            return 0;
        }
        if (*c_verify) {
            Design D = read_design(design_file);
            DesignParams P = validate_2_design(D);
            IntersectionProfile prof = intersection_profile(D);
            if (format == "json") {
                std::cout << "{\"params\": [" << P.v << "," << P.b << "," << P.r << "," << P.k
                          << "," << P.lambda << "], \"symmetric\": "
                          << (P.symmetric ? "true" : "false")
                          << ", \"quasi_symmetric\": " << (prof.quasi_symmetric ? "true" : "false")
                          << ", \"c_formula\": \"" << prof.c_formula.to_string() << "\"}"
                          << "\n";
            } else {
                std::cout << P.to_string() << "\n";
                std::cout << "intersection sizes:";
                for (auto& [s, n] : prof.multiset) std::cout << " " << s << "(x" << n << ")";
                std::cout << "\nintersection constant c = " << prof.c_formula.to_string() << "\n";
            }
            if (!group_file.empty()) {
                PermGroup G = read_group_file(group_file);
                G.induced_action(D.blocks());
                std::cout << "group of order " << G.order() << " preserves the blocks\n";
            }
            return 0;
        }
        if (*c_local) {
            Design D = read_design(l_design);
            PermGroup G = read_group_file(l_group);
            LocalReport rep = analyze(G, D);
            std::cout << rep.to_json() << "\n";
            return 0;
        }
        if (*c_coset) {
            PermGroup G = read_group_file(co_group);
            PermGroup H = subgroup_from_spec(G, co_h);
            PermGroup K = subgroup_from_spec(G, co_k);
            CosetDesignResult res = coset_design(G, H, K);
            std::cout << "certificates: " << res.triple.certs.describe() << "\n";
            std::cout << "design: " << res.geometric.actual.to_string() << "\n";
            if (!co_out.empty()) write_design(co_out, res.geometric.design);
            return 0;
        }
        if (*c_search) {
            PermGroup G = read_group_file(s_group);
            SearchOptions opts;
            opts.subset_budget = s_budget;
            if (s_level == "2h") opts.require_local_level = LocalLevel::two_homogeneous;
            if (s_level == "2t") opts.require_local_level = LocalLevel::two_transitive;
            auto hits = orbit_design_search(G, s_k, opts);
            for (const auto& h : hits) {
                std::cout << h.geometric.actual.to_string() << "  |K|=" << h.stabilizer_order
                          << " step4=" << h.step4_r_matches << " step5=("
                          << h.step5_h_two_homog << "," << h.step5_k_two_homog << ")";
                if (h.level) std::cout << " level=" << local_level_name(*h.level);
                std::cout << "\n";
            }
            std::cout << hits.size() << " design orbit(s)\n";
            return 0;
        }
        if (*c_cat_run) {
            Catalog cat(cat_dir);
            CatalogReport report = cat.run_all(cat_filter);
            std::cout << report.to_text();
            if (!cat_out.empty()) {
                std::ofstream out(cat_out);
                out << report.to_json() << "\n";
            }
            return report.ok() ? 0 : 1;
        }
        if (*c_screen) {
            for (const auto& t : parameter_screen(p_v, p_rmax))
                std::cout << "(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ","
                          << t[4] << ")\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
