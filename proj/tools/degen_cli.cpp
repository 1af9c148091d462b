// degen — validate, classify and analyse combinatorial degeneration
// configurations.
//
// Subcommands: validate, classify, spectral, coherent, cover, neron,
// cy3, examples. Exit codes: 0 = pass, 1 = semantic failure, 2 = parse
// or usage failure.

#include <degen/degen.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace degen;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string format = "text";
    std::optional<unsigned> field_char;
    bool wmc = false;
};

void emit(const Options& opt, const Json& report, const std::vector<std::string>& text_lines) {
    if (opt.format == "json") {
        std::cout << dump_document(report);
    } else {
        for (const auto& line : text_lines) std::cout << line << "\n";
    }
}

std::array<std::size_t, 5> generic_betti(FibreClass cls) {
    switch (cls) {
    case FibreClass::K3: return {1, 0, 22, 0, 1};
    case FibreClass::Enriques: return {1, 0, 10, 0, 1};
    case FibreClass::Abelian: return {1, 4, 6, 4, 1};
    case FibreClass::Bielliptic: return {1, 2, 2, 2, 1};
    }
    return {};
}

Json violations_to_json(const std::vector<Violation>& violations) {
    Json arr = Json::array();
    for (const auto& v : violations)
        arr.push_back({{"where", v.where}, {"clause", v.clause}, {"message", v.message}});
    return arr;
}

LoadedFile load_or_exit(const std::string& path) {
    try {
        return load_file(path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

LoadedSurface expect_surface(const std::string& path) {
    LoadedFile file = load_or_exit(path);
    if (file.kind != FileKind::Surface) {
        std::cerr << "parse error: '" << path << "' is not a surface configuration file\n";
        std::exit(kExitParse);
    }
    return *file.surface;
}

int cmd_validate(const std::string& path, const Options& opt) {
    LoadedFile file = load_or_exit(path);
    std::vector<Violation> violations;
    std::string kind;
    if (file.kind == FileKind::Surface) {
        kind = "surface";
        auto report = validate_local(file.surface->config);
        violations = report.violations;
    } else if (file.kind == FileKind::Threefold) {
        kind = "threefold";
        violations = validate_structure(*file.threefold);
        if (violations.empty()) {
            try {
                dual_complex(*file.threefold);
            } catch (const std::invalid_argument& e) {
                violations.push_back({"configuration", "dual-complex", e.what()});
            }
        }
    } else {
        kind = "cover";
        violations = validate_cover(*file.cover).violations;
    }
    Json report;
    report["command"] = "validate";
    report["file_kind"] = kind;
    report["pass"] = violations.empty();
    report["violations"] = violations_to_json(violations);
    std::vector<std::string> lines;
    lines.push_back(std::string("validate: ") + (violations.empty() ? "pass" : "FAIL"));
    for (const auto& v : violations)
        lines.push_back("  " + v.where + " [" + v.clause + "]: " + v.message);
    emit(opt, report, lines);
    return violations.empty() ? kExitPass : kExitFail;
}

Json verdict_to_json(const TypeVerdict& verdict) {
    Json j;
    j["class"] = to_string(verdict.surface_class);
    j["accepted"] = verdict.accepted();
    if (verdict.accepted()) j["type"] = to_string(*verdict.type);
    j["shape"] = verdict.shape;
    if (verdict.gamma_class) j["dual_graph_class"] = verdict.gamma_class->str();
    j["diagnostics"] = verdict.diagnostics;
    return j;
}

// Index certified by the theorems: the configuration's own page for K3
// and abelian classes, the canonical cover's page for Enriques and
// bielliptic.
struct IndexReport {
    std::size_t index = 0;
    bool via_cover = false;
};

IndexReport certified_index(const Configuration& c, const TransferTemplate& transfers) {
    IndexReport rep;
    if (c.surface_class == FibreClass::K3 || c.surface_class == FibreClass::Abelian) {
        rep.index = monodromy_index(compute_E2(build_E1(c, transfers)), c.surface_class);
        return rep;
    }
    auto cover = canonical_cover(c, transfers);
    if (!cover) throw std::invalid_argument("no canonical cover for this configuration");
    rep.index = monodromy_index(compute_E2(build_E1(cover->total, {})), cover->total.surface_class);
    rep.via_cover = true;
    return rep;
}

int cmd_classify(const std::string& path, const Options& opt) {
    LoadedSurface loaded = expect_surface(path);
    if (opt.field_char) loaded.config.field_char = *opt.field_char;
    auto local = validate_local(loaded.config);
    if (!local.pass) {
        Json report;
        report["command"] = "classify";
        report["pass"] = false;
        report["violations"] = violations_to_json(local.violations);
        std::vector<std::string> lines{"classify: FAIL (validation)"};
        for (const auto& v : local.violations)
            lines.push_back("  " + v.where + " [" + v.clause + "]: " + v.message);
        emit(opt, report, lines);
        return kExitFail;
    }

    TypeVerdict verdict = classify(loaded.config);
    Json report;
    report["command"] = "classify";
    report["verdict"] = verdict_to_json(verdict);
    std::vector<std::string> lines;
    lines.push_back("class: " + to_string(verdict.surface_class));
    if (!verdict.accepted()) {
        report["pass"] = false;
        lines.push_back("classify: REJECTED");
        for (const auto& d : verdict.diagnostics) lines.push_back("  " + d);
        emit(opt, report, lines);
        return kExitFail;
    }
    lines.push_back("type: " + to_string(*verdict.type) + " (" + verdict.shape + ")");
    if (verdict.gamma_class) lines.push_back("dual graph: " + verdict.gamma_class->str());

    IndexReport idx = certified_index(loaded.config, loaded.transfers);
    report["monodromy_index"] = idx.index;
    report["index_via_canonical_cover"] = idx.via_cover;
    lines.push_back("monodromy index: " + std::to_string(idx.index) +
                    (idx.via_cover ? " (via canonical cover)" : ""));

    auto coherent = coherent_cohomology(loaded.config, loaded.transfers);
    report["coherent_h"] = {coherent.result[0], coherent.result[1], coherent.result[2]};
    lines.push_back("coherent h: (" + std::to_string(coherent.result[0]) + ", " +
                    std::to_string(coherent.result[1]) + ", " + std::to_string(coherent.result[2]) +
                    ")");

    bool agreement = idx.index == static_cast<std::size_t>(*verdict.type);
    report["agreement"] = agreement;
    report["pass"] = agreement;
    lines.push_back(std::string("agreement: type ") + to_string(*verdict.type) + " <-> index " +
                    std::to_string(idx.index) + (agreement ? " (ok)" : " (HARD FAILURE)"));
    emit(opt, report, lines);
    return agreement ? kExitPass : kExitFail;
}

Json page_to_json(const SpectralPage& page) {
    Json dims = Json::array();
    for (const auto& [st, d] : page.dims)
        dims.push_back({{"s", st.first}, {"t", st.second}, {"dim", d}});
    Json j;
    j["page"] = page.page;
    j["dims"] = dims;
    j["notes"] = page.notes;
    return j;
}

int cmd_spectral(const std::string& path, const Options& opt) {
    LoadedSurface loaded = expect_surface(path);
    auto local = validate_local(loaded.config);
    if (!local.pass) {
        std::cerr << "error: configuration does not validate; run 'degen validate' first\n";
        return kExitFail;
    }
    SpectralPage e1 = build_E1(loaded.config, loaded.transfers);
    SpectralPage e2 = compute_E2(e1);
    auto tables = stratum_tables(loaded.config);

    Json report;
    report["command"] = "spectral";
    report["E1"] = page_to_json(e1);
    report["E2"] = page_to_json(e2);
    std::size_t index = monodromy_index(e2, loaded.config.surface_class);
    report["monodromy_index"] = index;

    std::vector<std::string> lines;
    lines.push_back("E1 dims:");
    for (const auto& [st, d] : e1.dims)
        lines.push_back("  E1^{" + std::to_string(st.first) + "," + std::to_string(st.second) +
                        "} = " + std::to_string(d));
    lines.push_back("E2 dims:");
    for (const auto& [st, d] : e2.dims)
        lines.push_back("  E2^{" + std::to_string(st.first) + "," + std::to_string(st.second) +
                        "} = " + std::to_string(d));
    lines.push_back("monodromy index (this page): " + std::to_string(index));

    bool pass = true;
    Json wm = Json::array();
    lines.push_back("weight-monodromy symmetry:");
    for (unsigned w = 0; w <= 4; ++w) {
        auto rep = check_wm_symmetry(e2, w);
        for (const auto& pair : rep.pairs) {
            wm.push_back({{"w", w},
                          {"r", pair.r},
                          {"dim_neg", pair.dim_neg},
                          {"dim_pos", pair.dim_pos},
                          {"pass", pair.pass},
                          {"convention_affected", pair.convention_affected}});
            std::string line = "  w=" + std::to_string(w) + " r=" + std::to_string(pair.r) +
                               ": " + std::to_string(pair.dim_neg) + " vs " +
                               std::to_string(pair.dim_pos);
            if (pair.convention_affected)
                line += " (twisted-summand convention)";
            else if (!pair.pass) {
                line += " MISMATCH";
                pass = false;
            }
            lines.push_back(line);
        }
    }
    report["wm_symmetry"] = wm;

    auto abutment = check_abutment(e2, generic_betti(loaded.config.surface_class),
                                   tables.any_b2_defaulted);
    Json ab = Json::array();
    lines.push_back("abutment:");
    for (const auto& row : abutment.rows) {
        ab.push_back({{"n", row.n},
                      {"sum", row.sum},
                      {"expected", row.expected},
                      {"binding", row.binding},
                      {"note", row.note},
                      {"pass", row.pass}});
        std::string line = "  n=" + std::to_string(row.n) + ": " + std::to_string(row.sum) +
                           " expected " + std::to_string(row.expected);
        if (!row.binding) line += " [" + row.note + "]";
        else if (!row.pass) line += " MISMATCH";
        lines.push_back(line);
    }
    report["abutment"] = ab;
    if (!abutment.pass) pass = false;
    report["pass"] = pass;
    emit(opt, report, lines);
    return pass ? kExitPass : kExitFail;
}

int cmd_coherent(const std::string& path, const Options& opt) {
    LoadedSurface loaded = expect_surface(path);
    if (opt.field_char) loaded.config.field_char = *opt.field_char;
    CoherentPage page;
    try {
        page = coherent_cohomology(loaded.config, loaded.transfers);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    auto log_class = check_logarithmic_class(loaded.config, page);
    auto chi = check_chi_flatness(loaded.config);

    Json report;
    report["command"] = "coherent";
    report["field_char"] = page.field_char;
    report["h"] = {page.result[0], page.result[1], page.result[2]};
    Json e2 = Json::array();
    for (const auto& [st, d] : page.e2_dims)
        e2.push_back({{"s", st.first}, {"t", st.second}, {"dim", d}});
    report["E2"] = e2;
    report["logarithmic_class"] = {{"pass", log_class.pass},
                                   {"h1_found", log_class.h1_found},
                                   {"h1_expected", log_class.h1_expected},
                                   {"omega_ok", log_class.omega_ok}};
    report["chi_flatness"] = {{"pass", chi.pass},
                              {"chi_found", chi.chi_found},
                              {"chi_expected", chi.chi_expected}};
    bool pass = log_class.pass && chi.pass;
    report["pass"] = pass;

    std::vector<std::string> lines;
    lines.push_back("coherent h(Y, O): (" + std::to_string(page.result[0]) + ", " +
                    std::to_string(page.result[1]) + ", " + std::to_string(page.result[2]) + ")");
    lines.push_back("logarithmic class: " + std::string(log_class.pass ? "pass" : "FAIL") + " (" +
                    log_class.message + ")");
    lines.push_back("chi flatness: " + std::string(chi.pass ? "pass" : "FAIL") + " (chi = " +
                    std::to_string(chi.chi_found) + ", expected " +
                    std::to_string(chi.chi_expected) + ")");
    emit(opt, report, lines);
    return pass ? kExitPass : kExitFail;
}

int cmd_cover(const std::string& path, const Options& opt) {
    LoadedFile file = load_or_exit(path);
    if (file.kind != FileKind::Cover) {
        std::cerr << "parse error: '" << path << "' is not a cover file\n";
        return kExitParse;
    }
    auto verdict = validate_cover(*file.cover);
    Json report;
    report["command"] = "cover";
    report["degree"] = file.cover->degree;
    report["valid"] = verdict.pass;
    report["violations"] = violations_to_json(verdict.violations);
    std::vector<std::string> lines;
    lines.push_back(std::string("cover validation: ") + (verdict.pass ? "pass" : "FAIL"));
    for (const auto& v : verdict.violations)
        lines.push_back("  " + v.where + " [" + v.clause + "]: " + v.message);
    bool pass = verdict.pass;
    if (verdict.pass) {
        auto transfer = check_type_transfer(*file.cover);
        report["total_verdict"] = verdict_to_json(transfer.total_verdict);
        report["base_verdict"] = verdict_to_json(transfer.base_verdict);
        report["type_transfer"] = transfer.pass;
        pass = transfer.pass;
        lines.push_back("total type: " + (transfer.total_verdict.accepted()
                                              ? to_string(*transfer.total_verdict.type)
                                              : std::string("rejected")));
        lines.push_back("base type:  " + (transfer.base_verdict.accepted()
                                              ? to_string(*transfer.base_verdict.type)
                                              : std::string("rejected")));
        lines.push_back(std::string("type transfer: ") + (transfer.pass ? "pass" : "FAIL"));
    }
    report["pass"] = pass;
    emit(opt, report, lines);
    return pass ? kExitPass : kExitFail;
}

int cmd_neron(std::optional<unsigned> rank_arg, const Options& opt) {
    std::vector<std::size_t> ranks;
    if (rank_arg) {
        if (*rank_arg > 2) {
            std::cerr << "error: torus rank of a surface is 0, 1 or 2\n";
            return kExitParse;
        }
        ranks.push_back(*rank_arg);
    } else {
        ranks = {0, 1, 2};
    }
    Json table = Json::array();
    std::vector<std::string> lines;
    for (auto r : ranks) {
        UniformizationDatum d{r};
        auto n = monodromy_on_h1(d);
        auto wedge = wedge_square(n);
        std::size_t index = nilpotency_index(wedge);
        auto type = type_from_rank(d);
        table.push_back({{"torus_rank", r},
                         {"abelian_rank", d.abelian_rank()},
                         {"rank_N_on_h1", rank(n.matrix)},
                         {"index_on_h2", index},
                         {"type", to_string(type)}});
        lines.push_back("torus rank " + std::to_string(r) + ": rank(N|H1) = " +
                        std::to_string(rank(n.matrix)) + ", index on H2 = wedge^2 H1 is " +
                        std::to_string(index) + " -> Type " + to_string(type));
    }
    Json report;
    report["command"] = "neron";
    report["dictionary"] = table;
    report["pass"] = true;
    emit(opt, report, lines);
    return kExitPass;
}

int cmd_cy3(const std::string& path, const Options& opt) {
    LoadedFile file = load_or_exit(path);
    if (file.kind != FileKind::Threefold) {
        std::cerr << "parse error: '" << path << "' is not a threefold configuration file\n";
        return kExitParse;
    }
    Configuration3 c = *file.threefold;
    if (opt.wmc) c.wmc_assumed = true;

    auto verdict = classify_cy4(c);
    Json report;
    report["command"] = "cy3";
    report["accepted"] = verdict.accepted;
    report["diagnostics"] = verdict.diagnostics;
    report["caveat"] = verdict.caveat;
    std::vector<std::string> lines;
    lines.push_back(std::string("classify_cy4: ") +
                    (verdict.accepted ? "Type IV" : "REJECTED"));
    for (const auto& d : verdict.diagnostics) lines.push_back("  " + d);
    report["maximal_intersection"] = {{"has_quadruple_point", verdict.maximal.has_quadruple_point},
                                      {"every_component", verdict.maximal.every_component}};
    report["simplicial_input"] = verdict.simplicial_input;
    lines.push_back(std::string("dual complex input: ") +
                    (verdict.simplicial_input ? "simplicial" : "general Delta-complex"));
    if (verdict.sphere) {
        Json torsion = Json::array();
        for (const auto& f : verdict.sphere->h1_invariant_factors) torsion.push_back(f.str());
        report["homology_sphere"] = {{"pass", verdict.sphere->is_homology_sphere},
                                     {"betti", verdict.sphere->betti},
                                     {"h1_invariant_factors", torsion}};
        lines.push_back(std::string("homology 3-sphere certificate: ") +
                        (verdict.sphere->is_homology_sphere ? "pass" : "FAIL"));
        lines.push_back("  " + verdict.sphere->caveat);
    }
    if (verdict.manifold.pass) {
        auto rep = e2_30(c);
        report["e2_30"] = {{"dim", rep.dim},
                           {"wmc_assumed", rep.wmc_assumed},
                           {"n3_nonzero", rep.n3_nonzero}};
        lines.push_back("dim E2^{3,0} = dim H^3(dual complex) = " + std::to_string(rep.dim));
        if (rep.wmc_assumed)
            lines.push_back(rep.n3_nonzero ? "under the weight-monodromy assumption: N^3 != 0"
                                           : "under the weight-monodromy assumption: N^3 = 0");
        else
            lines.push_back("weight-monodromy not assumed; no N^3 verdict");
    }
    report["pass"] = verdict.accepted;
    emit(opt, report, lines);
    return verdict.accepted ? kExitPass : kExitFail;
}

int cmd_examples(const std::string& name, std::optional<std::size_t> param,
                 const std::string& out_dir, const Options& opt) {
    auto file_name = [&](const std::string& stem, std::optional<std::size_t> n) {
        std::string f = stem;
        if (n) f += std::to_string(*n);
        return out_dir + "/" + f + ".json";
    };
    Json doc;
    std::string path;
    try {
        if (name == "k3_chain") {
            std::size_t n = param.value_or(3);
            auto f = fixtures::k3_chain(n);
            doc = to_json(f.config, f.transfers);
            path = file_name(name, n);
        } else if (name == "k3_tetrahedron") {
            auto f = fixtures::k3_tetrahedron();
            doc = to_json(f.config, f.transfers);
            path = file_name(name, std::nullopt);
        } else if (name == "abelian_cycle") {
            std::size_t n = param.value_or(4);
            auto f = fixtures::abelian_cycle(n);
            doc = to_json(f.config, f.transfers);
            path = file_name(name, n);
        } else if (name == "abelian_csaszar") {
            auto f = fixtures::abelian_csaszar();
            doc = to_json(f.config, f.transfers);
            path = file_name(name, std::nullopt);
        } else if (name == "enriques_chain") {
            std::size_t n = param.value_or(3);
            auto f = fixtures::enriques_chain(n);
            doc = to_json(f.config, f.transfers);
            path = file_name(name, n);
        } else if (name == "enriques_rp2") {
            auto f = fixtures::enriques_rp2();
            doc = to_json(f.config, f.transfers);
            path = file_name(name, std::nullopt);
        } else if (name == "bielliptic_cycle") {
            std::size_t n = param.value_or(4);
            auto f = fixtures::bielliptic_cycle(n);
            doc = to_json(f.config, f.transfers);
            path = file_name(name, n);
        } else if (name == "bielliptic_klein") {
            auto f = fixtures::bielliptic_klein();
            doc = to_json(f.config, f.transfers);
            path = file_name(name, std::nullopt);
        } else if (name == "cy3_simplex_boundary") {
            doc = to_json(fixtures::cy3_simplex_boundary());
            path = file_name(name, std::nullopt);
        } else {
            std::cerr << "error: unknown example '" << name << "'\n";
            return kExitParse;
        }
        save_file(path, doc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    Json report;
    report["command"] = "examples";
    report["written"] = path;
    report["pass"] = true;
    emit(opt, report, {"wrote " + path});
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial degenerations of surfaces of Kodaira dimension 0 and "
                 "Calabi-Yau threefolds"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    unsigned field_char_flag = 0;
    auto* fc = app.add_option("--field-char", field_char_flag,
                              "override the base field characteristic");
    app.add_flag("--wmc", opt.wmc, "assume the weight-monodromy conjecture (cy3)");

    std::string path, examples_name, out_dir = ".";
    std::optional<std::size_t> examples_param;
    std::size_t examples_param_raw = 0;
    std::optional<unsigned> neron_rank;
    unsigned neron_rank_raw = 0;

    auto* validate = app.add_subcommand("validate", "validate a configuration file");
    validate->add_option("path", path, "configuration file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "classify a surface configuration");
    classify_cmd->add_option("path", path, "configuration file")->required();

    auto* spectral = app.add_subcommand("spectral", "weight spectral sequence report");
    spectral->add_option("path", path, "configuration file")->required();

    auto* coherent = app.add_subcommand("coherent", "coherent cohomology report");
    coherent->add_option("path", path, "configuration file")->required();

    auto* cover = app.add_subcommand("cover", "validate a cover file and check type transfer");
    cover->add_option("path", path, "cover file")->required();

    auto* neron = app.add_subcommand("neron", "torus-rank dictionary for abelian surfaces");
    auto* rank_opt = neron->add_option("--rank", neron_rank_raw, "torus rank (0, 1 or 2)");

    auto* cy3 = app.add_subcommand("cy3", "Calabi-Yau threefold Type IV checks");
    cy3->add_option("path", path, "threefold configuration file")->required();

    auto* examples = app.add_subcommand("examples", "write a bundled fixture file");
    examples->add_option("name", examples_name, "fixture name")->required();
    auto* param_opt = examples->add_option("param", examples_param_raw, "size parameter");
    examples->add_option("-o,--out-dir", out_dir, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    if (fc->count() > 0) opt.field_char = field_char_flag;
    if (rank_opt->count() > 0) neron_rank = neron_rank_raw;
    if (param_opt->count() > 0) examples_param = examples_param_raw;

    try {
        if (validate->parsed()) return cmd_validate(path, opt);
        if (classify_cmd->parsed()) return cmd_classify(path, opt);
        if (spectral->parsed()) return cmd_spectral(path, opt);
        if (coherent->parsed()) return cmd_coherent(path, opt);
        if (cover->parsed()) return cmd_cover(path, opt);
        if (neron->parsed()) return cmd_neron(neron_rank, opt);
        if (cy3->parsed()) return cmd_cy3(path, opt);
        if (examples->parsed()) return cmd_examples(examples_name, examples_param, out_dir, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitParse;
}
