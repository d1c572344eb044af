#ifndef PFCI_ERRORS_HPP
#define PFCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfci {

class PfciError : public std::runtime_error {
public:
    explicit PfciError(const std::string& msg) : std::runtime_error(msg) {}
};

class CycleDetected : public PfciError {
public:
    CycleDetected() : PfciError("graph contains a directed cycle") {}
};

class UnknownNode : public PfciError {
public:
    explicit UnknownNode(int node)
        : PfciError("unknown node index " + std::to_string(node)), node(node) {}
    int node;
};

class NodeNotObserved : public PfciError {
public:
    explicit NodeNotObserved(int node)
        : PfciError("node " + std::to_string(node) + " is latent or selection, not observed"),
          node(node) {}
    int node;
};

class ConstantColumn : public PfciError {
public:
    explicit ConstantColumn(const std::string& name)
        : PfciError("column '" + name + "' has zero variance"), column(name) {}
    std::string column;
};

class NonNumeric : public PfciError {
public:
    NonNumeric(std::size_t row, std::size_t col, const std::string& token)
        : PfciError("non-numeric value '" + token + "' at row " + std::to_string(row) +
                    ", column " + std::to_string(col)),
          row(row), col(col) {}
    std::size_t row, col;
};

class MissingValue : public PfciError {
public:
    MissingValue(std::size_t row, std::size_t col)
        : PfciError("missing value at row " + std::to_string(row) + ", column " +
                    std::to_string(col)),
          row(row), col(col) {}
    std::size_t row, col;
};

class SingularSubmatrix : public PfciError {
public:
    SingularSubmatrix() : PfciError("correlation submatrix is singular") {}
};

class MissingSepset : public PfciError {
public:
    MissingSepset(int i, int j)
        : PfciError("no separating set recorded for nonadjacent pair (" + std::to_string(i) +
                    ", " + std::to_string(j) + ")"),
          i(i), j(j) {}
    int i, j;
};

class OrientationConflict : public PfciError {
public:
    OrientationConflict(int u, int v, const std::string& detail)
        : PfciError("orientation conflict on edge (" + std::to_string(u) + ", " +
                    std::to_string(v) + "): " + detail),
          u(u), v(v) {}
    int u, v;
};

class ConfigError : public PfciError {
public:
    explicit ConfigError(const std::string& msg) : PfciError(msg) {}
};

class NodeMismatch : public PfciError {
public:
    explicit NodeMismatch(const std::string& msg) : PfciError(msg) {}
};

class StageError : public PfciError {
public:
    StageError(const std::string& stage, const std::string& msg)
        : PfciError("[" + stage + "] " + msg), stage(stage) {}
    std::string stage;
};

}  // namespace pfci

#endif
