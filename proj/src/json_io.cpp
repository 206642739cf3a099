#include "loomlab/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace loomlab {

Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.n;
    Json edges = Json::array();
    for (const auto& e : h.edges) edges.push_back(e.to_indices());
    j["edges"] = std::move(edges);
    if (!h.labels.empty()) j["labels"] = h.labels;
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("hypergraph JSON needs fields n and edges");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back(e.get<std::vector<int>>());
    Hypergraph h = Hypergraph::make(n, edges);
    if (j.contains("labels")) h.labels = j.at("labels").get<std::vector<std::string>>();
    return h;
}

Json report_to_json(const VerificationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["applicable"] = c.applicable;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (!c.witness_sets.empty()) {
            Json w = Json::array();
            for (const auto& s : c.witness_sets) w.push_back(s.to_indices());
            jc["witness"] = std::move(w);
        }
        checks.push_back(std::move(jc));
    }
    Json j;
    j["all_pass"] = rep.all_pass();
    j["checks"] = std::move(checks);
    return j;
}

Json loom_to_json(const Loom& L) {
    Json j;
    j["A"] = hypergraph_to_json(L.A);
    j["B"] = hypergraph_to_json(L.B);
    j["r"] = L.r;
    j["s"] = L.s;
    j["report"] = report_to_json(L.report);
    return j;
}

std::pair<Hypergraph, Hypergraph> loom_components_from_json(const Json& j) {
    if (!j.contains("A") || !j.contains("B"))
        throw ParseError("loom JSON needs fields A and B");
    return {hypergraph_from_json(j.at("A")), hypergraph_from_json(j.at("B"))};
}

Loom loom_from_json(const Json& j) {
    auto [A, B] = loom_components_from_json(j);
    VerificationReport rep;
    auto L = verify_loom(A, B, &rep);
    if (!L) throw Error("loom JSON does not verify");
    return *L;
}

Json int_certificate_to_json(const IntCertificate& c) {
    Json j;
    switch (c.quantity) {
        case Quantity::Tau: j["quantity"] = "tau"; break;
        case Quantity::Nu: j["quantity"] = "nu"; break;
        case Quantity::NuR: j["quantity"] = "nuR"; break;
    }
    j["value"] = c.value;
    Json w = Json::array();
    for (const auto& s : c.witness) w.push_back(s.to_indices());
    j["witness"] = std::move(w);
    j["nodes"] = c.nodes;
    if (!c.exact) {
        j["exact"] = false;
        j["lower"] = c.lower;
        j["upper"] = c.upper;
    }
    if (!c.witness_members.empty()) j["members"] = c.witness_members;
    return j;
}

Json frac_certificate_to_json(const FracCertificate& c, const std::string& quantity) {
    Json j;
    j["quantity"] = quantity;
    j["value"] = rational_to_string(c.value);
    Json primal = Json::array();
    for (const auto& [e, w] : c.primal) {
        Json p;
        p["edge"] = e;
        p["weight"] = rational_to_string(w);
        primal.push_back(std::move(p));
    }
    j["primal"] = std::move(primal);
    Json dual = Json::array();
    for (const auto& [v, w] : c.dual) {
        Json p;
        p["vertex"] = v;
        p["weight"] = rational_to_string(w);
        dual.push_back(std::move(p));
    }
    j["dual"] = std::move(dual);
    j["slack"] = Json{{"saturated_vertices", c.saturated_vertices},
                      {"tight_edges", c.tight_edges}};
    return j;
}

Json blowup_spec_to_json(const BlowupSpec& spec) {
    Json j;
    j["P"] = Json{{"A", hypergraph_to_json(spec.A)}, {"B", hypergraph_to_json(spec.B)}};
    Json parts = Json::array();
    for (const auto& p : spec.parts) parts.push_back(loom_to_json(p));
    j["parts"] = std::move(parts);
    return j;
}

BlowupSpec blowup_spec_from_json(const Json& j) {
    if (!j.contains("P") || !j.contains("parts"))
        throw ParseError("blow-up spec JSON needs fields P and parts");
    BlowupSpec spec;
    spec.A = hypergraph_from_json(j.at("P").at("A"));
    spec.B = hypergraph_from_json(j.at("P").at("B"));
    for (const auto& pj : j.at("parts")) spec.parts.push_back(loom_from_json(pj));
    return spec;
}

Json classification_to_json(const ClassificationResult& r) {
    Json classes = Json::array();
    for (const auto& L : r.classes) {
        PairCanon pc = canonical_pair(L.A, L.B);
        std::ostringstream key;
        key << std::hex << std::setw(16) << std::setfill('0') << code_hash(pc.code);
        Json item;
        item["key"] = key.str();
        item["loom"] = loom_to_json(L);
        classes.push_back(std::move(item));
    }
    Json j;
    j["kind"] = "atlas";
    j["classes"] = std::move(classes);
    j["decomposable"] = r.decomposable_count;
    j["indecomposable"] = r.indecomposable_count;
    j["stats"] = Json{{"nodes", r.stats.nodes},
                      {"leaves", r.stats.leaves},
                      {"accepted", r.stats.accepted},
                      {"threads", r.stats.threads}};
    return j;
}

Json battery_report_to_json(const BatteryReport& r) {
    Json j;
    j["r"] = r.r;
    j["count"] = r.count;
    j["seed"] = r.seed;
    j["violations"] = Json{{"taustar_le_r", r.violations_taustar_le_r},
                           {"mixed_max", r.violations_mixed_max},
                           {"equality_case", r.violations_equality_case},
                           {"cover_closure_supset", r.violations_c2},
                           {"cover_closure_fixpoint", r.violations_c3},
                           {"sandwich", r.violations_sandwich}};
    j["equality_cases_seen"] = r.equality_cases_seen;
    j["clean"] = r.clean();
    return j;
}

Json conjecture_report_to_json(const ConjectureReport& r, int loom_r, int loom_s) {
    Json j;
    j["r"] = loom_r;
    j["s"] = loom_s;
    j["taustar_union"] = rational_to_string(r.q.cert_union.value);
    j["taustar_a"] = rational_to_string(r.q.cert_a.value);
    j["taustar_b"] = rational_to_string(r.q.cert_b.value);
    j["tau_union"] = r.q.tau_union.value;
    j["tau_exact"] = r.tau_exact;
    j["nu_union"] = r.q.nu_union.value;
    j["vertices"] = r.q.vertex_count;
    j["taustar_union_is_max"] = r.taustar_union_is_max;
    j["taustar_sides"] = r.taustar_sides;
    j["vertex_count_rs"] = r.vertex_count_rs;
    j["gl_applicable"] = r.gl_applicable;
    if (r.gl_applicable) j["gl_bound"] = r.gl_bound;
    j["all_hold"] = r.all_hold();
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << data;
}

}  // namespace loomlab
