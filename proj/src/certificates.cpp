#include "lscat/certificates.hpp"
#include "lscat/homology.hpp"
#include "lscat/io.hpp"

#include <filesystem>
#include <fstream>

namespace lscat {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json facets_json(const SimplicialComplex& k) {
    json out = json::array();
    for (const auto& f : k.facet_labels()) out.push_back(f);
    return out;
}

SimplicialComplex complex_from_json(const json& j) {
    std::vector<std::vector<Label>> facets;
    for (const auto& f : j) facets.push_back(f.get<std::vector<Label>>());
    return SimplicialComplex::from_facets(facets);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

} // namespace

json to_json(const CollapseSequence& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back({{"removed", s.removed}, {"dominator", s.dominator}});
    return json{{"start_facets", facets_json(c.start)},
                {"steps", steps},
                {"end_facets", facets_json(c.end)}};
}

CollapseSequence collapse_from_json(const json& j) {
    CollapseSequence c;
    c.start = complex_from_json(j.at("start_facets"));
    c.end = complex_from_json(j.at("end_facets"));
    for (const auto& s : j.at("steps"))
        c.steps.push_back({s.at("removed").get<Label>(), s.at("dominator").get<Label>()});
    return c;
}

json to_json(const std::vector<AssignmentTable>& chain) {
    json out = json::array();
    for (const auto& t : chain) {
        json table = json::object();
        for (const auto& [from, to] : t) table[from] = to;
        out.push_back(std::move(table));
    }
    return out;
}

std::vector<AssignmentTable> chain_from_json(const json& j) {
    std::vector<AssignmentTable> chain;
    for (const auto& table : j) {
        AssignmentTable t;
        for (auto it = table.begin(); it != table.end(); ++it) t[it.key()] = it.value().get<Label>();
        chain.push_back(std::move(t));
    }
    return chain;
}

json to_json(const ImpossibilityCertificate& c) {
    json refutations = json::array();
    for (const auto& r : c.leaf_refutations)
        refutations.push_back({{"assignment", r.assignment}, {"reason", r.reason}});
    return json{{"ambient_facets", facets_json(c.ambient)},
                {"facet_order", c.facet_order},
                {"nodes", c.nodes},
                {"pruned_unkillable_cycle", c.pruned_unkillable_cycle},
                {"leaves", c.leaves},
                {"leaves_refuted", c.leaves_refuted},
                {"leaf_refutations", refutations},
                {"digest", c.digest()}};
}

json envelope(const std::string& kind, json payload) {
    return json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

namespace {

json piece_witness_json(const PieceWitness& w, CoverMode mode) {
    json out{{"collapse", to_json(w.collapse)}};
    if (mode == CoverMode::Categorical) {
        out["chain"] = to_json(w.chain);
        out["constant_vertex"] = w.witness_vertex ? json(*w.witness_vertex) : json(nullptr);
    }
    return out;
}

PieceWitness piece_witness_from_json(const json& j) {
    PieceWitness w;
    w.collapse = collapse_from_json(j.at("collapse"));
    if (j.contains("chain")) w.chain = chain_from_json(j.at("chain"));
    if (j.contains("constant_vertex") && !j.at("constant_vertex").is_null())
        w.witness_vertex = j.at("constant_vertex").get<Label>();
    return w;
}

} // namespace

void write_cover_certificate(const CoverCertificate& cert, const std::string& base_path) {
    fs::path base(base_path);
    std::string stem = base.filename().string();

    std::string ambient_file = stem + ".ambient.cplx";
    write_text((base.parent_path() / ambient_file).string(), format_facets(cert.cover.ambient));

    json pieces = json::array();
    for (size_t i = 0; i < cert.cover.pieces.size(); ++i) {
        std::string piece_file = stem + ".piece" + std::to_string(i) + ".cplx";
        write_text((base.parent_path() / piece_file).string(),
                   format_facets(cert.cover.pieces[i]));
        pieces.push_back({{"file", piece_file},
                          {"witness", piece_witness_json(cert.piece_witnesses[i], cert.cover.mode)}});
    }
    json payload{{"ambient_file", ambient_file},
                 {"mode", to_string(cert.cover.mode)},
                 {"pieces", pieces}};
    write_text(base_path + ".json", dump_canonical(envelope("cover", std::move(payload))));
}

CoverCertificate read_cover_certificate(const std::string& json_path) {
    json j = read_json_file(json_path);
    if (j.at("kind") != "cover") throw Error("not a cover certificate: " + json_path);
    const json& payload = j.at("payload");
    fs::path dir = fs::path(json_path).parent_path();

    CoverCertificate cert;
    cert.cover.ambient = read_facets_file((dir / payload.at("ambient_file").get<std::string>()).string());
    cert.cover.mode = payload.at("mode") == "categorical" ? CoverMode::Categorical
                                                          : CoverMode::StronglyCollapsible;
    for (const auto& p : payload.at("pieces")) {
        cert.cover.pieces.push_back(
            read_facets_file((dir / p.at("file").get<std::string>()).string()));
        cert.piece_witnesses.push_back(piece_witness_from_json(p.at("witness")));
    }
    return cert;
}

void write_collapse_certificate(const CollapseSequence& seq, const std::string& path) {
    write_text(path, dump_canonical(envelope("collapse", to_json(seq))));
}

CollapseSequence read_collapse_certificate(const std::string& path) {
    json j = read_json_file(path);
    if (j.at("kind") != "collapse") throw Error("not a collapse certificate: " + path);
    return collapse_from_json(j.at("payload"));
}

void write_contiguity_chain_certificate(const CategoricalResult& res,
                                        const SimplicialComplex& u,
                                        const SimplicialComplex& k, const std::string& path) {
    json payload{{"subcomplex_facets", facets_json(u)},
                 {"ambient_facets", facets_json(k)},
                 {"collapse", to_json(res.collapse)},
                 {"chain", to_json(res.chain)},
                 {"constant_vertex", res.witness_vertex ? json(*res.witness_vertex) : json(nullptr)},
                 {"maps_visited", res.visited}};
    write_text(path, dump_canonical(envelope("contiguity-chain", std::move(payload))));
}

void write_impossibility_certificate(const ImpossibilityCertificate& cert,
                                     const std::string& base_path) {
    fs::path base(base_path);
    std::string ambient_file = base.filename().string() + ".ambient.cplx";
    write_text((base.parent_path() / ambient_file).string(), format_facets(cert.ambient));
    json payload = to_json(cert);
    payload.erase("ambient_facets");
    payload["ambient_file"] = ambient_file;
    write_text(base_path + ".json", dump_canonical(envelope("impossibility", std::move(payload))));
}

json report_to_json(const PaperReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(
            {{"id", c.id}, {"claim", c.claim}, {"status", c.status}, {"detail", c.detail}});

    json certs = json::object();
    auto cover_json = [](const CoverCertificate& c) {
        json pieces = json::array();
        for (size_t i = 0; i < c.cover.pieces.size(); ++i)
            pieces.push_back({{"facets", facets_json(c.cover.pieces[i])},
                              {"witness", piece_witness_json(c.piece_witnesses[i], c.cover.mode)}});
        return json{{"mode", to_string(c.cover.mode)}, {"pieces", pieces}};
    };
    {
        json gens = json::array();
        for (const auto& cyc : h1_generators_mod2(rep.k)) {
            json edges = json::array();
            for (const auto& [a, b] : cyc) edges.push_back({a, b});
            gens.push_back(std::move(edges));
        }
        certs["h1_generators"] = std::move(gens);
    }
    if (rep.categorical_cover) certs["categorical_cover"] = cover_json(*rep.categorical_cover);
    if (rep.no_two_cover) certs["no_two_cover"] = to_json(*rep.no_two_cover);
    if (rep.geometric_cover) certs["geometric_cover"] = cover_json(*rep.geometric_cover);
    if (rep.m) certs["m_facets"] = facets_json(*rep.m);
    if (rep.m_collapse) certs["m_collapse"] = to_json(*rep.m_collapse);
    if (rep.m_cover) certs["m_cover"] = cover_json(*rep.m_cover);

    return envelope("paper-report", json{{"complex_K", facets_json(rep.k)},
                                         {"checks", checks},
                                         {"overall", rep.overall},
                                         {"certificates", certs}});
}

void write_report(const PaperReport& rep, const std::string& path) {
    write_text(path, dump_canonical(report_to_json(rep)));
}

} // namespace lscat
