// Command-line front end: enumerate strata, run the census, report the
// Picard rank, survey odd cohomology, and emit the relation ledger.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vzc/acceptance.hpp"
#include "vzc/census.hpp"
#include "vzc/json_io.hpp"
#include "vzc/relations.hpp"

using namespace vzc;

namespace {

struct RunConfig {
    int n = 0, r = 2, d = 2, max_codim = 2;
    std::string cusp_table_path;
    std::string tails_table_path;
    std::string cache_dir;
    std::string format = "json";  // json | csv | pretty
    int oracle_max_delta = 5;
    int oracle_max_vertices = 8;
};

constexpr int kExitUsage = 2;
constexpr int kExitTable = 3;
constexpr int kExitConsistency = 4;

void emit(const json& j, const RunConfig& cfg) {
    if (cfg.format == "pretty")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::vector<StratumKey> enumerate_with_cache(const RunConfig& cfg) {
    auto keys = enumerate_cached(cfg.cache_dir, cfg.n, cfg.r, cfg.d, cfg.max_codim);
    for (auto& key : keys) {
        std::string why;
        if (!dimension_crosscheck(key, cfg.r, &why)) {
            std::cerr << "dimension cross-check failed: "
                      << json{{"class", key_to_json(key)}, {"detail", why}}.dump() << "\n";
            std::exit(kExitConsistency);
        }
    }
    return keys;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratum census of desingularized genus-one mapping spaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global numeric flags may follow the subcommand

    RunConfig cfg;
    if (const char* env = std::getenv("VZCENSUS_CACHE_DIR")) cfg.cache_dir = env;
    app.add_option("--n", cfg.n, "number of markings")->check(CLI::NonNegativeNumber);
    app.add_option("--r", cfg.r, "projective target dimension")
        ->check(CLI::PositiveNumber);
    app.add_option("--d", cfg.d, "map degree")->check(CLI::NonNegativeNumber);
    app.add_option("--max-codim", cfg.max_codim, "codimension bound")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--cusp-table", cfg.cusp_table_path, "extended cusp multiplicity table");
    app.add_option("--tails-table", cfg.tails_table_path, "tail polynomial table");
    app.add_option("--cache-dir", cfg.cache_dir, "enumeration cache directory");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--oracle-max-delta", cfg.oracle_max_delta, "tails oracle degree budget");
    app.add_option("--oracle-max-vertices", cfg.oracle_max_vertices,
                   "tails oracle tree budget");

    auto* cmd_enum = app.add_subcommand("enumerate", "list the coarse aligned classes");
    auto* cmd_census = app.add_subcommand("census", "pure-weight generator census");
    std::string census_what = "table";
    cmd_census->add_option("what", census_what, "table | picard | odd-survey")
        ->check(CLI::IsMember({"table", "picard", "odd-survey"}));
    auto* cmd_picard = app.add_subcommand("picard", "rank and basis of the second cohomology");
    auto* cmd_survey = app.add_subcommand("odd-survey", "odd cohomology survey");
    bool survey_min_only = false;
    cmd_survey->add_flag("--min-only", survey_min_only,
                         "analytic minimum only (n = 0, built-in cusp table)");
    auto* cmd_rel = app.add_subcommand("relations", "emit the relation ledger");
    std::string rel_kind = "all";
    cmd_rel->add_option("--kind", rel_kind,
                        "all | basepoint-g1 | basepoint-cycle | basepoint-g0-beta | "
                        "psi-equality | wdvv-pullback | getzler-pullback");
    auto* cmd_blocks = app.add_subcommand("blocks", "building-block series");
    std::string block_op;
    cmd_blocks->add_option("op", block_op, "map-w | dtilde | mf | pic | cycle | tails")
        ->required()
        ->check(CLI::IsMember({"map-w", "dtilde", "mf", "pic", "cycle", "tails"}));
    std::vector<int> block_deltas, block_marks;
    int block_delta = 1, block_m = 0, block_npts = 1;
    bool block_w_nonzero = true;
    cmd_blocks->add_option("--deltas", block_deltas, "degree vector");
    cmd_blocks->add_option("--marks", block_marks, "marking vector");
    cmd_blocks->add_option("--delta", block_delta, "single degree");
    cmd_blocks->add_option("--m", block_m, "marking count");
    cmd_blocks->add_option("--npts", block_npts, "number of points");
    cmd_blocks->add_flag("--w-zero{false},--w-nonzero{true}", block_w_nonzero,
                         "derivative class");
    auto* cmd_self = app.add_subcommand("selftest", "run the acceptance suite");
    std::string golden_dir;
    cmd_self->add_option("--golden", golden_dir, "golden file directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    CuspTable table;
    TailsOracleOptions topt;
    topt.max_delta = cfg.oracle_max_delta;
    topt.max_vertices = cfg.oracle_max_vertices;
    TailsOracle oracle(topt);
    try {
        if (!cfg.cusp_table_path.empty()) load_cusp_table(table, cfg.cusp_table_path);
        if (!cfg.tails_table_path.empty()) load_tails_table(oracle, cfg.tails_table_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitTable;
    }
    CensusContext ctx{&table, &oracle, cfg.r};

    try {
        if (*cmd_enum) {
            auto keys = enumerate_with_cache(cfg);
            json out = json::array();
            for (auto& k : keys) out.push_back(key_to_json(k));
            if (cfg.format == "csv") {
                std::cout << "canon,kind,codim,dim\n";
                for (auto& k : keys)
                    std::cout << '"' << k.canon << "\"," << kind_name(k.kind) << ","
                              << k.codim << "," << k.dim << "\n";
            } else {
                emit(out, cfg);
            }
        } else if (*cmd_census && census_what == "table") {
            enumerate_with_cache(cfg);
            E1Table t = e1_pure_table(ctx, cfg.n, cfg.d, cfg.max_codim);
            if (cfg.format == "csv") {
                std::cout << "degree,rank\n";
                for (auto& [j, c] : t.generator_counts())
                    std::cout << j << "," << c << "\n";
            } else {
                emit(e1_to_json(t), cfg);
            }
        } else if (*cmd_picard || (*cmd_census && census_what == "picard")) {
            emit(picard_to_json(picard_rank(ctx, cfg.n, cfg.d)), cfg);
        } else if (*cmd_survey || (*cmd_census && census_what == "odd-survey")) {
            if (survey_min_only) {
                if (cfg.n != 0)
                    throw std::domain_error("--min-only supports n = 0 with built-in tables");
                OddMinimum m = odd_survey_minimum(cfg.r, cfg.d);
                emit(json{{"any", m.any},
                          {"min_odd_degree", m.any ? m.min_total_degree : -1},
                          {"cusp_weight", m.cusp_k},
                          {"radius_partition", m.radius_partition}},
                     cfg);
            } else {
                OddSurvey s = odd_survey(ctx, cfg.n, cfg.d, cfg.max_codim);
                emit(survey_to_json(s), cfg);
            }
        } else if (*cmd_rel) {
            Ledger ledger = build_ledger(ctx, cfg.n, cfg.d, cfg.max_codim);
            if (rel_kind != "all") {
                Ledger filtered;
                for (auto& r : ledger.records)
                    if (r.kind == rel_kind) filtered.records.push_back(r);
                ledger = filtered;
            }
            emit(ledger_to_json(ledger), cfg);
        } else if (*cmd_blocks) {
            GradedPiece g;
            if (block_op == "map-w") {
                g = map_w_cohomology(block_delta, cfg.r, block_w_nonzero);
            } else if (block_op == "dtilde") {
                g = dtilde_pieces(block_deltas, cfg.r);
            } else if (block_op == "mf") {
                if (block_marks.empty()) block_marks.assign(block_deltas.size(), 0);
                g = mapF_pieces(block_deltas, block_marks, cfg.r);
            } else if (block_op == "pic") {
                g.pure = pic_pure(table, block_npts);
                g.off_by_one = pic_off(table, block_npts).off_by_one;
            } else if (block_op == "cycle") {
                if (block_marks.empty()) block_marks.assign(block_deltas.size(), 0);
                g = cycle_core_pieces((int)block_deltas.size(), block_deltas, block_marks,
                                      cfg.r);
            } else if (block_op == "tails") {
                g.pure = oracle.tails_poincare(block_m, block_delta, cfg.r);
            }
            json labels = json::array();
            for (auto& l : g.off_labels) labels.push_back(l.str());
            emit(json{{"empty", g.empty},
                      {"dim", g.dim},
                      {"pure", series_to_json(g.pure)},
                      {"off_by_one", series_to_json(g.off_by_one)},
                      {"off_labels", labels}},
                 cfg);
        } else if (*cmd_self) {
            auto results = accept::run_all(golden_dir);
            bool all = true;
            for (auto& r : results) {
                std::printf("%s criterion %d (%s): %s\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.detail.c_str());
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const TableIncompleteError& e) {
        std::cerr << e.what() << "\n";
        return kExitTable;
    } catch (const NeedsTableError& e) {
        std::cerr << e.what() << "\n";
        return kExitTable;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
