#pragma once

#include <string>
#include <string_view>

#include "mtp/prover.hpp"

namespace mtp {

/// Lossless structured form of a certificate. Rationals are written as
/// "numerator/denominator" strings, polynomials as ascending coefficient
/// lists. See docs/certificate-schema.md.
std::string certificate_to_json(const ProofCertificate& cert, int indent = 2);

/// Inverse of certificate_to_json. Throws CertificateFormatError on
/// malformed or truncated input.
ProofCertificate certificate_from_json(std::string_view text);

}  // namespace mtp
