#include "quasi/certificate.hpp"

#include <stdexcept>

#include "json.hpp"

namespace quasi {

using Json = nlohmann::ordered_json;

namespace {

Json trace_json(const TraceNode& t) {
    Json params = Json::object();
    for (const auto& [key, value] : t.params) params[key] = value;
    Json children = Json::array();
    for (const auto& c : t.children) children.push_back(trace_json(c));
    return Json{{"rule", t.rule}, {"params", params}, {"children", children}};
}

TraceNode trace_from(const Json& j) {
    TraceNode t;
    t.rule = j.at("rule").get<std::string>();
    for (const auto& [key, value] : j.at("params").items()) t.params.emplace_back(key, value.get<std::int64_t>());
    for (const auto& c : j.at("children")) t.children.push_back(trace_from(c));
    return t;
}

}  // namespace

std::string certificate_json(const WitnessCertificate& cert, int indent) {
    Json j;
    j["schema_version"] = kCertificateSchema;
    j["n"] = cert.n;
    j["k_target"] = cert.k_target;
    j["k_recounted"] = cert.k_recounted;
    j["square"] = cert.square.grid().rows();
    j["trace"] = trace_json(cert.trace);
    j["seed"] = cert.seed;
    return j.dump(indent);
}

CertificateFile parse_certificate(const std::string& text) {
    try {
        Json j = Json::parse(text);
        CertificateFile c;
        c.schema_version = j.at("schema_version").get<int>();
        c.n = j.at("n").get<int>();
        c.k_target = j.at("k_target").get<std::int64_t>();
        c.k_recounted = j.at("k_recounted").get<std::int64_t>();
        c.square = Grid::from_rows(j.at("square").get<std::vector<std::vector<Symbol>>>());
        c.trace = trace_from(j.at("trace"));
        c.seed = j.at("seed").get<std::uint64_t>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

VerifyResult verify_certificate(const CertificateFile& cert) {
    if (cert.schema_version != kCertificateSchema)
        return {false, "schema_version", "unsupported schema " + std::to_string(cert.schema_version)};
    if (cert.square.order() != cert.n)
        return {false, "n", "square has order " + std::to_string(cert.square.order())};
    if (auto report = validate_latin(cert.square); !report.ok()) return {false, "square", report.summary()};
    const std::int64_t count = count_commuting(cert.square);
    if (count != cert.k_recounted)
        return {false, "k_recounted", "square recounts to " + std::to_string(count)};
    if (count != cert.k_target) return {false, "k_target", "square recounts to " + std::to_string(count)};
    WitnessCertificate replay;
    try {
        replay = witness(cert.n, cert.k_target, cert.seed);
    } catch (const std::exception& e) {
        return {false, "trace", std::string("replay failed: ") + e.what()};
    }
    if (replay.trace != cert.trace) return {false, "trace", "replayed construction differs"};
    if (replay.square.grid() != cert.square) return {false, "trace", "replayed square differs"};
    return {};
}

}  // namespace quasi
