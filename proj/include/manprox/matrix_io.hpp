#pragma once

#include <Eigen/Dense>
#include <string>

namespace manprox {

enum class MatrixFormat { Csv, MatrixMarket };

// .mtx -> MatrixMarket, everything else -> Csv.
MatrixFormat format_from_path(const std::string& path);

// Dense comma-separated values (optional header line) or Matrix Market
// coordinate real (general or symmetric; symmetric entries mirrored).
// Malformed input raises ParseError with 1-based line/column.
Eigen::MatrixXd load_matrix(const std::string& path, MatrixFormat format);

// Row-major CSV with 17 significant digits, so load(save(M)) == M.
void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m);

}  // namespace manprox
