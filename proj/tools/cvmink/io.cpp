#include "io.hpp"

#include <fstream>
#include <sstream>

namespace cvmink::cli {
namespace {

std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

double grid_entry(const nlohmann::json& grid, const char* key,
                                        int i, int k) {
  const auto& row = grid.at(i);
  if (!row.is_array() || row.size() != 4) {
    throw ParseError(std::string("\"") + key + "\" must be a 4x4 array");
  }
  if (!row.at(k).is_number()) {
    throw ParseError(std::string("\"") + key + "\" entries must be numbers");
  }
  return row.at(k).get<double>();
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ":" + line_col(text, e.byte > 0 ? e.byte - 1 : 0) +
                     ": " + e.what());
  }
}

double json_number(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  if (!j.at(key).is_number()) {
    throw ParseError(std::string("field \"") + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

CovarianceMatrix cm_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("format") || !j.at("format").is_string()) {
    throw ParseError("covariance matrix JSON needs a string \"format\" field");
  }
  const std::string format = j.at("format").get<std::string>();
  if (format == "standard") {
    return build_standard_cm({json_number(j, "n1"), json_number(j, "n2"),
                              json_number(j, "ms"), json_number(j, "mc")});
  }
  if (format == "matrix") {
    for (const char* key : {"re", "im"}) {
      if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 4) {
        throw ParseError(std::string("\"") + key + "\" must be a 4x4 array");
      }
    }
    Matrix4c m;
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        m(i, k) = Complex(grid_entry(j.at("re"), "re", i, k),
                          grid_entry(j.at("im"), "im", i, k));
      }
    }
    try {
      return CovarianceMatrix(m);
    } catch (const NonHermitianInput& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown covariance format \"" + format + "\"");
}

TmtssRequest tmtss_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("TMTSS parameters must be a JSON object");
  TmtssRequest req;
  const auto get = [&](const char* key) {
    return j.contains(key) ? json_number(j, key) : 0.0;
  };
  req.params = {get("d"), get("r"), get("nbar")};
  if (j.contains("ell")) req.ell = json_number(j, "ell");
  return req;
}

}  // namespace cvmink::cli
