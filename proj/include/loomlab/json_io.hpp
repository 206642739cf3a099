#pragma once

#include "loomlab/atlas.hpp"
#include "loomlab/loom.hpp"
#include "loomlab/weave.hpp"

#include <json.hpp>

#include <string>

namespace loomlab {

using Json = nlohmann::ordered_json;

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json report_to_json(const VerificationReport& rep);

Json loom_to_json(const Loom& L);
// Reconstructs and re-verifies; throws on a pair that is not a loom.
Loom loom_from_json(const Json& j);
// Raw components without verification (for closure/verify inputs).
std::pair<Hypergraph, Hypergraph> loom_components_from_json(const Json& j);

Json int_certificate_to_json(const IntCertificate& c);
Json frac_certificate_to_json(const FracCertificate& c, const std::string& quantity);

Json blowup_spec_to_json(const BlowupSpec& spec);
BlowupSpec blowup_spec_from_json(const Json& j);

Json classification_to_json(const ClassificationResult& r);

Json battery_report_to_json(const BatteryReport& r);

Json conjecture_report_to_json(const ConjectureReport& r, int loom_r, int loom_s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace loomlab
