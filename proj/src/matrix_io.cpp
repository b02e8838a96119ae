#include "manprox/matrix_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "manprox/errors.hpp"

namespace manprox {

namespace {

bool parse_double(const std::string& token, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(token, &pos);
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    return pos == token.size();
  } catch (...) {
    return false;
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Eigen::MatrixXd load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path, 0);

  std::vector<std::vector<double>> rows;
  std::string line;
  long lineno = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    const auto fields = split_csv(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (!parse_double(fields[j], row[j])) {
        if (header_allowed) { numeric = false; break; }
        std::ostringstream msg;
        msg << "bad numeric field '" << fields[j] << "' in row " << lineno;
        throw ParseError(msg.str(), path, lineno, long(j + 1));
      }
    }
    header_allowed = false;
    if (!numeric) continue;  // header line
    if (!rows.empty() && row.size() != rows.front().size()) {
      std::ostringstream msg;
      msg << "row " << lineno << " has " << row.size() << " fields, expected "
          << rows.front().size();
      throw ParseError(msg.str(), path, lineno);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no numeric rows", path, lineno);

  Eigen::MatrixXd m(Eigen::Index(rows.size()), Eigen::Index(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rows[std::size_t(i)][std::size_t(j)];
  return m;
}

Eigen::MatrixXd load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path, 0);

  std::string line;
  long lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty file", path, 0);
  ++lineno;
  std::istringstream banner(line);
  std::string tag, object, fmt, field, symmetry;
  banner >> tag >> object >> fmt >> field >> symmetry;
  if (tag != "%%MatrixMarket" || object != "matrix" || fmt != "coordinate" ||
      field != "real" || (symmetry != "symmetric" && symmetry != "general"))
    throw ParseError("unsupported MatrixMarket banner: " + line, path, 1);
  const bool symmetric = symmetry == "symmetric";

  long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    if (!(ss >> rows >> cols >> nnz))
      throw ParseError("bad size line: " + line, path, lineno);
    break;
  }
  if (rows < 0) throw ParseError("missing size line", path, lineno);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    long i = 0, j = 0;
    double v = 0;
    if (!(ss >> i >> j >> v)) throw ParseError("bad entry: " + line, path, lineno);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      std::ostringstream msg;
      msg << "index (" << i << ", " << j << ") out of bounds for " << rows << "x" << cols;
      throw ParseError(msg.str(), path, lineno);
    }
    m(i - 1, j - 1) = v;
    if (symmetric) m(j - 1, i - 1) = v;
    ++seen;
  }
  if (seen != nnz) {
    std::ostringstream msg;
    msg << "expected " << nnz << " entries, found " << seen;
    throw ParseError(msg.str(), path, lineno);
  }
  return m;
}

}  // namespace

MatrixFormat format_from_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".mtx")
    return MatrixFormat::MatrixMarket;
  return MatrixFormat::Csv;
}

Eigen::MatrixXd load_matrix(const std::string& path, MatrixFormat format) {
  return format == MatrixFormat::Csv ? load_csv(path) : load_matrix_market(path);
}

void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_matrix_csv: cannot open " + path);
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf << (j + 1 < m.cols() ? "," : "");
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("save_matrix_csv: write failed for " + path);
}

}  // namespace manprox
