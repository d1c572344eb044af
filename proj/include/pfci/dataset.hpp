#ifndef PFCI_DATASET_HPP
#define PFCI_DATASET_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pfci/errors.hpp"

namespace pfci {

// n x p observation matrix with named columns.
struct Dataset {
    std::vector<std::string> column_names;
    Eigen::MatrixXd values;  // rows = observations

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index p() const { return values.cols(); }

    int column_index(const std::string& name) const;
};

// CSV: header row of column names, '.' decimal separator, UTF-8. Missing or
// non-numeric cells abort with 1-based row/column coordinates.
Dataset read_csv(const std::string& path);
Dataset parse_csv(const std::string& text, const std::string& origin = "<memory>");
std::string to_csv(const Dataset& d);
void write_csv(const Dataset& d, const std::string& path);

// Centers each column to mean 0 and scales to unbiased sample variance 1
// (divisor n - 1). Throws ConstantColumn for zero-variance columns.
Dataset standardize(const Dataset& d);

}  // namespace pfci

#endif
