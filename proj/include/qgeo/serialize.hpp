#pragma once

#include <string>
#include <vector>

#include "qgeo/hilbert.hpp"
#include "qgeo/verify.hpp"

namespace qgeo {

// Operator wire format: {"dim": n, "re": [[...]], "im": [[...]]} with
// row-major n x n entry matrices. Bloch vectors: {"p": [x, y, z]}.
// Parsers throw ValidationError on malformed input.

std::string operator_to_json(const ComplexMatrix& m);
ComplexMatrix operator_from_json(const std::string& text);

// operator_from_json followed by state validation: the matrix must be
// Hermitian to 1e-10 before the usual trace/positivity checks run.
DensityOperator density_from_json(const std::string& text);

std::string bloch_to_json(const BlochVector& p);
BlochVector bloch_from_json(const std::string& text);

// Reports serialize everything except elapsed_ms, so output is byte-stable
// across runs and worker counts.
std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace qgeo
