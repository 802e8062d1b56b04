#include "isopencil/io.hpp"

#include <openssl/sha.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "isopencil/errors.hpp"
#include "isopencil/numrange.hpp"

namespace isopencil {

using nlohmann::json;

ComplexMatrix parse_matrix_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix file: malformed JSON: ") + e.what());
  } catch (const json::out_of_range& e) {
    // Literals such as 1e999 overflow to a non-finite double.
    throw ValueError(std::string("matrix file: number out of range: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw ParseError("matrix file: expected an object with a \"rows\" array");
  const json& rows = doc["rows"];
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("matrix file: empty matrix");
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(n))
      throw ParseError("matrix file: \"n\" does not match the number of rows");
  }

  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("matrix file: row " + std::to_string(i) + " does not have " +
                       std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("matrix file: entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not a [re, im] pair");
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw ValueError("matrix file: entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not finite");
      m(i, j) = {re, im};
    }
  }
  return m;
}

ComplexMatrix parse_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string write_matrix(const ComplexMatrix& b) {
  json rows = json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < b.size(); ++j) row.push_back({b(i, j).real(), b(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc = {{"n", b.size()}, {"rows", std::move(rows)}};
  return doc.dump() + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write to " + path.string() + " failed");
}

void write_matrix_file(const ComplexMatrix& b, const std::filesystem::path& path) {
  write_text_file(path, write_matrix(b));
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * SHA256_DIGEST_LENGTH);
  for (unsigned char c : digest) {
    out.push_back(hex[c >> 4]);
    out.push_back(hex[c & 0xF]);
  }
  return out;
}

std::string support_csv(const ComplexMatrix& b, int k, int samples) {
  const RangeProfile p = support_sweep(b, k, samples);
  std::string out = "theta,lambda_k\n";
  char line[96];
  for (std::size_t j = 0; j < p.thetas.size(); ++j) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", p.thetas[j], p.support[j]);
    out += line;
  }
  return out;
}

void emit_support_csv(const ComplexMatrix& b, int k, int samples, const std::filesystem::path& path) {
  write_text_file(path, support_csv(b, k, samples));
}

}  // namespace isopencil
