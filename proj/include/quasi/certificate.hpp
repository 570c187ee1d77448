#pragma once

// Certificate JSON:
// {schema_version, n, k_target, k_recounted, square, trace, seed}

#include <cstdint>
#include <string>

#include "quasi/square.hpp"
#include "quasi/synthesis.hpp"

namespace quasi {

inline constexpr int kCertificateSchema = 1;

std::string certificate_json(const WitnessCertificate& cert, int indent = -1);

/// Certificate fields as read from disk; the square is unvalidated.
struct CertificateFile {
    int schema_version = 0;
    int n = 0;
    std::int64_t k_target = 0;
    std::int64_t k_recounted = 0;
    Grid square;
    TraceNode trace;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on malformed JSON or missing fields.
CertificateFile parse_certificate(const std::string& text);

struct VerifyResult {
    bool ok = true;
    std::string invariant;  // empty when ok
    std::string detail;
};

/// Revalidates the square, recounts, and replays witness(n, k_target, seed)
/// to compare the square and trace.
VerifyResult verify_certificate(const CertificateFile& cert);

}  // namespace quasi
