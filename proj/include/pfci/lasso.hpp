#ifndef PFCI_LASSO_HPP
#define PFCI_LASSO_HPP

#include <vector>

#include <Eigen/Dense>

#include "pfci/dataset.hpp"
#include "pfci/graph.hpp"

namespace pfci {

struct LassoFit {
    Eigen::VectorXd coefficients;
    double lambda = 0.0;
    int iterations = 0;
    bool converged = false;
};

class NotConverged : public PfciError {
public:
    NotConverged(LassoFit partial, const std::string& context)
        : PfciError("lasso did not converge after " + std::to_string(partial.iterations) +
                    " sweeps" + (context.empty() ? "" : " (" + context + ")")),
          fit(std::move(partial)) {}
    LassoFit fit;
};

enum class SymmetrizationRule { And, Or };

struct NeighborhoodResult {
    std::vector<NodeSet> neighbors;       // per node, selected regressors
    std::vector<double> lambda_per_node;  // lambda actually used per node
    SymmetrizationRule rule = SymmetrizationRule::Or;
};

// Minimizes (1/2n)||y - X b||^2 + lambda * sum |b_k| by cyclic coordinate
// descent over coordinates 0..p-2 with residual updates. Converged when the
// max absolute coefficient change in a full sweep drops below tol.
// Throws NotConverged (carrying the partial fit) past max_iter sweeps.
LassoFit lasso_cd(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda,
                  double tol = 1e-7, int max_iter = 100000);

// Objective value of the fit above; exposed for the monotonicity tests.
double lasso_objective(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                       const Eigen::VectorXd& beta, double lambda);

// Universal-threshold default sqrt(2 log(p) / n).
double default_lambda(int n, int p);

// Lambda from the grid minimizing mean out-of-fold squared prediction error
// for the given node; ties break toward larger lambda. Grid must be sorted
// descending; fold assignment is derived from the seed.
double cv_lambda(const Dataset& d, int node, int folds, const std::vector<double>& grid,
                 std::uint64_t seed = 0);

// Runs one lasso per node (regressed on all other columns) and symmetrizes
// the selected neighborhoods into a skeleton. The per-node problems run in
// parallel and merge in node order, so the result does not depend on the
// thread count. lambda_per_node overrides the shared lambda when nonempty.
std::pair<NeighborhoodResult, Skeleton> neighborhood_select(
    const Dataset& d, double lambda, SymmetrizationRule rule = SymmetrizationRule::Or,
    int threads = 0, const std::vector<double>& lambda_per_node = {});

}  // namespace pfci

#endif
