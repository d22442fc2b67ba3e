#include <doctest.h>

#include "fixtures.hpp"
#include "lscat/category.hpp"
#include "lscat/certificates.hpp"
#include "lscat/contiguity.hpp"

#include <filesystem>
#include <fstream>

using namespace lscat;
using namespace lscat::fixtures;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("lscat-test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
};

} // namespace

TEST_CASE("collapse certificates round trip byte-identically") {
    TempDir tmp;
    auto seq = core(triangle());
    std::string path = (tmp.dir / "collapse.json").string();
    write_collapse_certificate(seq, path);
    auto seq2 = read_collapse_certificate(path);
    CHECK(verify_collapse_sequence(seq2).ok);
    std::string again = (tmp.dir / "collapse2.json").string();
    write_collapse_certificate(seq2, again);
    CHECK(slurp(path) == slurp(again));
}

TEST_CASE("cover certificates round trip with piece files") {
    TempDir tmp;
    auto k = boundary_tetrahedron();
    auto p1 = k.generated_subcomplex({{"a", "b", "c"}, {"a", "b", "d"}});
    auto p2 = k.generated_subcomplex({{"a", "c", "d"}, {"b", "c", "d"}});
    auto res = verify_cover(k, {p1, p2}, CoverMode::StronglyCollapsible);
    REQUIRE(res.verdict == Tri::Yes);

    std::string base = (tmp.dir / "cover").string();
    write_cover_certificate(*res.certificate, base);
    CHECK(fs::exists(tmp.dir / "cover.json"));
    CHECK(fs::exists(tmp.dir / "cover.ambient.cplx"));
    CHECK(fs::exists(tmp.dir / "cover.piece0.cplx"));

    auto cert = read_cover_certificate(base + ".json");
    CHECK(cert.cover.ambient == k);
    REQUIRE(cert.cover.pieces.size() == 2);
    // the reloaded cover still verifies
    auto res2 = verify_cover(cert.cover.ambient, cert.cover.pieces, cert.cover.mode);
    CHECK(res2.verdict == Tri::Yes);

    std::string base2 = (tmp.dir / "cover2").string();
    write_cover_certificate(cert, base2);
    CHECK(slurp(tmp.dir / "cover.piece0.cplx") == slurp(tmp.dir / "cover2.piece0.cplx"));
}

TEST_CASE("categorical cover witnesses serialize chains") {
    TempDir tmp;
    auto d2 = triangle();
    auto bd = d2.generated_subcomplex({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto res = verify_cover(d2, {bd, d2}, CoverMode::Categorical);
    REQUIRE(res.verdict == Tri::Yes);
    std::string base = (tmp.dir / "cat").string();
    write_cover_certificate(*res.certificate, base);
    auto cert = read_cover_certificate(base + ".json");
    CHECK(cert.cover.mode == CoverMode::Categorical);
    CHECK(!cert.piece_witnesses[0].chain.empty());
}

TEST_CASE("contiguity-chain certificates record the witness") {
    TempDir tmp;
    auto d2 = triangle();
    auto bd = d2.generated_subcomplex({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto res = is_categorical(bd, d2);
    REQUIRE(res.verdict == Tri::Yes);
    std::string path = (tmp.dir / "chain.json").string();
    write_contiguity_chain_certificate(res, bd, d2, path);
    auto j = nlohmann::json::parse(slurp(path));
    CHECK(j.at("kind") == "contiguity-chain");
    CHECK(j.at("payload").at("chain").size() == res.chain.size());
    CHECK(j.at("payload").at("constant_vertex").get<std::string>() == *res.witness_vertex);
}

TEST_CASE("impossibility certificates carry the trace") {
    TempDir tmp;
    auto outcome = two_cover_prover(disjoint_two_c3());
    REQUIRE(outcome.kind == TwoCoverOutcome::Kind::Impossible);
    std::string base = (tmp.dir / "imposs").string();
    write_impossibility_certificate(*outcome.impossibility, base);
    auto j = nlohmann::json::parse(slurp(base + ".json"));
    CHECK(j.at("kind") == "impossibility");
    CHECK(j.at("payload").at("nodes").get<long>() == outcome.impossibility->nodes);
    CHECK(j.at("schema_version") == kSchemaVersion);
}
