#include "telewit/io.hpp"

#include <fstream>

namespace telewit {

namespace {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, long rows, long cols,
                        const std::string& what) {
  if (!j.is_array() || static_cast<long>(j.size()) != rows) {
    throw ValidationError(what + ": expected " + std::to_string(rows) +
                          " matrix rows");
  }
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols) {
      throw ValidationError(what + ": row " + std::to_string(i) + " must hold " +
                            std::to_string(cols) + " [re, im] pairs");
    }
    for (long k = 0; k < cols; ++k) {
      const Json& entry = row[static_cast<std::size_t>(k)];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number()) {
        throw ValidationError(what + ": entry (" + std::to_string(i) + ", " +
                              std::to_string(k) + ") must be a [re, im] pair");
      }
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

int read_dim(const Json& j, const std::string& what) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ValidationError(what + ": missing integer field 'n'");
  }
  const int n = j["n"].get<int>();
  if (n < 1) {
    throw ValidationError(what + ": n must be positive, got " + std::to_string(n));
  }
  if (!j.contains("matrix")) {
    throw ValidationError(what + ": missing field 'matrix'");
  }
  return n;
}

Json parse_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(what + ": cannot open '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(what + ": '" + path + "' is not valid JSON: " + e.what());
  }
}

void dump_file(const Json& j, const std::string& path, const std::string& what) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError(what + ": cannot write '" + path + "'");
  }
  out << j.dump(2) << "\n";
}

}  // namespace

Json state_to_json(const DensityMatrix& rho) {
  Json j;
  j["n"] = rho.local_dim();
  j["matrix"] = matrix_to_json(rho.matrix());
  return j;
}

DensityMatrix state_from_json(const Json& j) {
  const int n = read_dim(j, "state JSON");
  const long d2 = static_cast<long>(n) * n;
  return validate(matrix_from_json(j["matrix"], d2, d2, "state JSON"), n);
}

Json unitary_to_json(const UnitaryMatrix& u) {
  Json j;
  j["n"] = u.dim();
  j["matrix"] = matrix_to_json(u.matrix());
  return j;
}

UnitaryMatrix unitary_from_json(const Json& j) {
  const int n = read_dim(j, "unitary JSON");
  return UnitaryMatrix(matrix_from_json(j["matrix"], n, n, "unitary JSON"));
}

void write_state_file(const DensityMatrix& rho, const std::string& path) {
  dump_file(state_to_json(rho), path, "state JSON");
}

DensityMatrix read_state_file(const std::string& path) {
  return state_from_json(parse_file(path, "state JSON"));
}

void write_unitary_file(const UnitaryMatrix& u, const std::string& path) {
  dump_file(unitary_to_json(u), path, "unitary JSON");
}

UnitaryMatrix read_unitary_file(const std::string& path) {
  return unitary_from_json(parse_file(path, "unitary JSON"));
}

}  // namespace telewit
