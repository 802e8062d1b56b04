#pragma once

#include <filesystem>
#include <string>

#include "isopencil/matrix.hpp"

namespace isopencil {

/// Matrix file format: {"n": N, "rows": [[[re, im], ...], ...]}.
ComplexMatrix parse_matrix_text(const std::string& text);
ComplexMatrix parse_matrix(const std::filesystem::path& path);

/// Serializes in the matrix file format. Doubles are written in shortest
/// round-trip form, so parse_matrix_text(write_matrix(B)) reproduces B exactly.
std::string write_matrix(const ComplexMatrix& b);
void write_matrix_file(const ComplexMatrix& b, const std::filesystem::path& path);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

/// CSV "theta,lambda_k" with one row per grid angle, 17 significant digits.
std::string support_csv(const ComplexMatrix& b, int k, int samples);
void emit_support_csv(const ComplexMatrix& b, int k, int samples, const std::filesystem::path& path);

/// Writes text to path; throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace isopencil
