#pragma once

#include "lscat/category.hpp"
#include "lscat/collapse.hpp"
#include "lscat/pipeline.hpp"

#include <json.hpp>

#include <string>

namespace lscat {

/// Certificate files are JSON envelopes {schema_version, kind, payload}
/// with kind one of: collapse, cover, impossibility, contiguity-chain,
/// paper-report. Serialization is canonical (sorted keys, two-space
/// indent, trailing newline), so write-then-read round-trips byte
/// identically. Cover certificates keep one complex per file: the
/// ambient complex and the pieces are stored next to the certificate and
/// referenced by relative path.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const CollapseSequence& c);
CollapseSequence collapse_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<AssignmentTable>& chain);
std::vector<AssignmentTable> chain_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ImpossibilityCertificate& c);

nlohmann::json envelope(const std::string& kind, nlohmann::json payload);
std::string dump_canonical(const nlohmann::json& j);

/// Writes <base>.json plus <base>.ambient.cplx and <base>.piece<i>.cplx.
void write_cover_certificate(const CoverCertificate& cert, const std::string& base_path);
CoverCertificate read_cover_certificate(const std::string& json_path);

void write_collapse_certificate(const CollapseSequence& seq, const std::string& path);
CollapseSequence read_collapse_certificate(const std::string& path);

/// Categorical-subcomplex evidence: the collapse of U to its core and
/// the contiguity chain from the core's inclusion to a constant.
void write_contiguity_chain_certificate(const CategoricalResult& res,
                                        const SimplicialComplex& u,
                                        const SimplicialComplex& k, const std::string& path);

void write_impossibility_certificate(const ImpossibilityCertificate& cert,
                                     const std::string& base_path);

/// The verification report as one self-contained JSON document (all
/// certificates embedded); byte-deterministic for fixed inputs.
nlohmann::json report_to_json(const PaperReport& rep);
void write_report(const PaperReport& rep, const std::string& path);

} // namespace lscat
