#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"
#include "vzc/census.hpp"
#include "vzc/relations.hpp"

namespace vzc {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Stable JSON schemas. Field names are part of the external interface.
// ---------------------------------------------------------------------------

inline json tail_to_json(const CTail& t) {
    return json{{"delta", t.delta}, {"marks", t.marks}};
}
inline CTail tail_from_json(const json& j) {
    CTail t;
    t.delta = j.at("delta").get<int>();
    t.marks = j.at("marks").get<std::vector<int>>();
    return t;
}

inline json branch_to_json(const CBranch& b) {
    json kids = json::array();
    for (auto& c : b.children) kids.push_back(branch_to_json(c));
    json tails = json::array();
    for (auto& t : b.tails) tails.push_back(tail_to_json(t));
    return json{{"level", b.level},
                {"delta", b.delta},
                {"marks", b.marks},
                {"tails", tails},
                {"children", kids}};
}
inline CBranch branch_from_json(const json& j) {
    CBranch b;
    b.level = j.at("level").get<int>();
    b.delta = j.at("delta").get<int>();
    b.marks = j.at("marks").get<std::vector<int>>();
    for (auto& t : j.at("tails")) b.tails.push_back(tail_from_json(t));
    for (auto& c : j.at("children")) b.children.push_back(branch_from_json(c));
    return b;
}

inline json coarse_to_json(const CoarseClass& cc) {
    json cores = json::array();
    for (auto& c : cc.core) {
        json tails = json::array();
        for (auto& t : c.tails) tails.push_back(tail_to_json(t));
        json branches = json::array();
        for (auto& b : c.branches) branches.push_back(branch_to_json(b));
        cores.push_back(json{{"delta", c.delta},
                             {"marks", c.marks},
                             {"tails", tails},
                             {"branches", branches}});
    }
    return json{{"cycle_core", cc.cycle_core},
                {"depth", cc.depth},
                {"n", cc.n},
                {"d", cc.d},
                {"core", cores}};
}

inline CoarseClass coarse_from_json(const json& j) {
    CoarseClass cc;
    cc.cycle_core = j.at("cycle_core").get<bool>();
    cc.depth = j.at("depth").get<int>();
    cc.n = j.at("n").get<int>();
    cc.d = j.at("d").get<int>();
    for (auto& cj : j.at("core")) {
        CCore c;
        c.delta = cj.at("delta").get<int>();
        c.marks = cj.at("marks").get<std::vector<int>>();
        for (auto& t : cj.at("tails")) c.tails.push_back(tail_from_json(t));
        for (auto& b : cj.at("branches")) c.branches.push_back(branch_from_json(b));
        cc.core.push_back(std::move(c));
    }
    return cc;
}

inline json key_to_json(const StratumKey& k) {
    return json{{"canon", k.canon},
                {"kind", kind_name(k.kind)},
                {"codim", k.codim},
                {"dim", k.dim},
                {"class", coarse_to_json(k.cls)}};
}

inline json series_to_json(const HodgeSeries& s) {
    json terms = json::array();
    for (auto& [k, c] : s.terms) {
        json sfac = json::array();
        for (auto& [sk, se] : k.second.s) sfac.push_back(json{{"k", sk}, {"exp", se}});
        terms.push_back(json{{"degree", k.first},
                             {"L", k.second.l_exp},
                             {"S", sfac},
                             {"coeff", c.str()}});
    }
    return terms;
}

inline json dims_to_json(const HodgeSeries& s) {
    json out = json::object();
    for (auto& [deg, rank] : s.dims()) out[std::to_string(deg)] = rank;
    return out;
}

inline json record_to_json(const StratumRecord& rec) {
    return json{{"key", key_to_json(rec.key)},
                {"invariant_pure", series_to_json(rec.invariant_pure)},
                {"dims", dims_to_json(rec.invariant_pure)},
                {"bm_pure", series_to_json(rec.bm_pure)},
                {"psi_gate", rec.psi_gate},
                {"note", rec.note}};
}

inline json e1_to_json(const E1Table& t) {
    json rows = json::array();
    for (auto& [j, entries] : t.by_degree) {
        json es = json::array();
        long long total = 0;
        for (auto& e : entries) {
            es.push_back(json{{"canon", e.canon},
                              {"dim", e.dim},
                              {"codim", e.codim},
                              {"stratum_degree", e.stratum_degree},
                              {"rank", e.rank}});
            total += e.rank;
        }
        rows.push_back(json{{"degree", j}, {"rank", total}, {"entries", es}});
    }
    return json{{"n", t.n}, {"r", t.r}, {"d", t.d}, {"max_codim", t.max_codim},
                {"rows", rows}};
}

inline json picard_to_json(const PicardReport& p) {
    return json{{"rank", p.rank}, {"basis", p.basis}};
}

inline json survey_to_json(const OddSurvey& s) {
    json gens = json::array();
    for (auto& g : s.generators)
        gens.push_back(json{{"canon", g.canon},
                            {"total_degree", g.total_degree},
                            {"stratum_degree", g.stratum_degree},
                            {"codim", g.codim},
                            {"cusp_weight", g.cusp_weight},
                            {"rank", g.rank},
                            {"survives", g.survives},
                            {"killed_by", g.killed_by}});
    json surv = json::object();
    for (auto& [j, r] : s.surviving) surv[std::to_string(j)] = r;
    return json{{"surviving", surv},
                {"min_odd_degree", s.min_odd_degree},
                {"realized_by", s.realized_by},
                {"realized_stratum_degree", s.realized_stratum_degree},
                {"generators", gens}};
}

inline json ledger_to_json(const Ledger& l) {
    json recs = json::array();
    for (auto& r : l.records) {
        json terms = json::array();
        for (auto& t : r.terms)
            terms.push_back(json{{"stratum", t.stratum},
                                 {"label", t.label},
                                 {"coeff", t.coeff.str()},
                                 {"implicit", t.implicit}});
        recs.push_back(json{{"kind", r.kind},
                            {"source_stratum", r.source_stratum},
                            {"source", r.source},
                            {"bm_degree", r.bm_degree},
                            {"flags", r.flags},
                            {"terms", terms}});
    }
    return recs;
}

// ---------------------------------------------------------------------------
// Table file loaders.
// ---------------------------------------------------------------------------

// cusp table: [{"n":., "k":., "mult":., "character": "trivial"|"sign"|
//              {"custom": [{"cycle_type":[...], "trace": "p/q"}, ...]}}]
inline void load_cusp_table(CuspTable& table, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cusp table: " + path);
    json j;
    in >> j;
    for (auto& e : j) {
        CuspEntry entry;
        entry.mult = e.at("mult").get<int>();
        auto& ch = e.at("character");
        if (ch.is_string()) {
            std::string s = ch.get<std::string>();
            entry.character = s == "sign" ? CharacterTag::Sign : CharacterTag::Trivial;
        } else {
            entry.character = CharacterTag::Custom;
            for (auto& t : ch.at("custom")) {
                std::vector<int> type = t.at("cycle_type").get<std::vector<int>>();
                std::sort(type.rbegin(), type.rend());
                std::string tr = t.at("trace").get<std::string>();
                auto slash = tr.find('/');
                Rational v = slash == std::string::npos
                                 ? Rational(std::stoll(tr))
                                 : Rational(std::stoll(tr.substr(0, slash)),
                                            std::stoll(tr.substr(slash + 1)));
                entry.traces[type] = v;
            }
        }
        table.set(e.at("n").get<int>(), e.at("k").get<int>(), std::move(entry));
    }
}

// tails table: [{"m":., "delta":., "r":., "coefficients":[...]}]
inline void load_tails_table(TailsOracle& oracle, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tails table: " + path);
    json j;
    in >> j;
    for (auto& e : j) {
        QPoly p(e.at("coefficients").get<std::vector<long long>>());
        if (!p.palindromic())
            throw std::runtime_error("tails table entry is not palindromic: " + path);
        oracle.set_table_entry(e.at("m").get<int>(), e.at("delta").get<int>(),
                               e.at("r").get<int>(), std::move(p));
    }
}

// ---------------------------------------------------------------------------
// Disk cache for enumerations, keyed by inputs and the formula version.
// ---------------------------------------------------------------------------

inline constexpr int kFormulaVersion = 1;

inline std::optional<std::vector<StratumKey>> cache_load(const std::string& dir, int n, int r,
                                                         int d, int max_codim) {
    if (dir.empty()) return std::nullopt;
    std::string path = dir + "/enum_v" + std::to_string(kFormulaVersion) + "_n" +
                       std::to_string(n) + "_d" + std::to_string(d) + "_c" +
                       std::to_string(max_codim) + ".json";
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
    } catch (...) {
        return std::nullopt;
    }
    std::vector<StratumKey> out;
    for (auto& e : j) out.push_back(StratumKey::make(coarse_from_json(e), r));
    return out;
}

inline void cache_store(const std::string& dir, int n, int d, int max_codim,
                        const std::vector<StratumKey>& keys) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    std::string path = dir + "/enum_v" + std::to_string(kFormulaVersion) + "_n" +
                       std::to_string(n) + "_d" + std::to_string(d) + "_c" +
                       std::to_string(max_codim) + ".json";
    json j = json::array();
    for (auto& k : keys) j.push_back(coarse_to_json(k.cls));
    std::ofstream out(path);
    out << j.dump();
}

inline std::vector<StratumKey> enumerate_cached(const std::string& cache_dir, int n, int r,
                                                int d, int max_codim) {
    if (auto hit = cache_load(cache_dir, n, r, d, max_codim)) return *hit;
    auto keys = enumerate_coarse_classes(n, r, d, max_codim);
    cache_store(cache_dir, n, d, max_codim, keys);
    return keys;
}

}  // namespace vzc
