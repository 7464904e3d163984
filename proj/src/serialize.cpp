#include "qgeo/serialize.hpp"

#include <exception>

#include "json.hpp"

namespace qgeo {
namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::vector<double>> entry_grid(const Json& j, const char* key,
                                            int dim) {
  const auto udim = static_cast<std::size_t>(dim);
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != udim) {
    throw ParseError(std::string("operator JSON: bad \"") + key +
                          "\" matrix");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(udim);
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != udim) {
      throw ParseError(std::string("operator JSON: bad \"") + key +
                            "\" matrix");
    }
    std::vector<double> values;
    values.reserve(udim);
    for (const auto& v : row) {
      if (!v.is_number()) {
        throw ParseError(std::string("operator JSON: non-numeric \"") +
                              key + "\" entry");
      }
      values.push_back(v.get<double>());
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

Json report_json(const VerificationReport& report) {
  Json j;
  j["check_name"] = report.check_name;
  j["samples"] = report.samples;
  j["violations"] = report.violations;
  j["worst_margin"] = report.worst_margin;
  j["seed"] = report.seed;
  return j;
}

}  // namespace

std::string operator_to_json(const ComplexMatrix& m) {
  const int n = m.dim();
  Json re = Json::array();
  Json im = Json::array();
  for (int r = 0; r < n; ++r) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (int c = 0; c < n; ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  Json j;
  j["dim"] = n;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump(2);
}

ComplexMatrix operator_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object() || !j.contains("dim") ||
      !j["dim"].is_number_unsigned()) {
    throw ParseError("operator JSON: missing positive integer \"dim\"");
  }
  const auto dim = j["dim"].get<int>();
  if (dim <= 0 || dim > 64) {
    throw ParseError("operator JSON: \"dim\" out of range");
  }
  const auto re = entry_grid(j, "re", dim);
  const auto im = entry_grid(j, "im", dim);
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const auto ur = static_cast<std::size_t>(r);
      const auto uc = static_cast<std::size_t>(c);
      m(r, c) = Complex(re[ur][uc], im[ur][uc]);
    }
  }
  return m;
}

DensityOperator density_from_json(const std::string& text) {
  const ComplexMatrix m = operator_from_json(text);
  if (m.max_abs_diff(m.adjoint()) > 1e-10) {
    throw ValidationError("state matrix is not Hermitian");
  }
  return DensityOperator(HermitianOperator(m));
}

std::string bloch_to_json(const BlochVector& p) {
  Json j;
  j["p"] = {p[0], p[1], p[2]};
  return j.dump(2);
}

BlochVector bloch_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object() || !j.contains("p") || !j["p"].is_array() ||
      j["p"].size() != 3) {
    throw ParseError("bloch JSON: expected {\"p\": [x, y, z]}");
  }
  Vec3 p{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!j["p"][k].is_number()) {
      throw ParseError("bloch JSON: non-numeric component");
    }
    p[k] = j["p"][k].get<double>();
  }
  return BlochVector(p);
}

std::string report_to_json(const VerificationReport& report) {
  return report_json(report).dump(2);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace qgeo
