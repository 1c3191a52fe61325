// Copyright 2026 The choicone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Edge-allocation factorization of bipartite block matrices
//
//   A = [[diag(d0), B], [B^T, diag(d1)]],  B >= 0.
//
// After scaling to unit diagonal, C_ij = B_ij / sqrt(d0_i d1_j). Every
// positive C_ij gets one vector sqrt(u_ij) e_i + (C_ij / sqrt(u_ij)) e_j',
// which reproduces C_ij exactly and loads u_ij onto row i and C_ij^2 / u_ij
// onto column j. The allocation is feasible when no row or column load
// exceeds 1; the leftover becomes a diagonal slack vector.
//
// Writing u_ij = C_ij q_j / p_i for positive weights p, q turns the loads
// into (C q)_i / p_i and (C^T p)_j / q_j, so a feasible allocation exists
// whenever C q <= p and C^T p <= q. With M the symmetric bipartite
// adjacency of C and sigma = lambda_max(M) <= 1 (A is PSD), the vector
// z = (s I - M)^{-1} 1 for any s > sigma is positive and satisfies
// M z = s z - 1 < s z, which gives loads below s for every vertex.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "choicone/cpfact.hpp"
#include "choicone/error.hpp"

namespace choicone {

using Eigen::Index;

namespace {

struct EdgeAlloc {
  Index row;  // left vertex (compressed index)
  Index col;  // right vertex (compressed index)
  double c;   // normalized weight
  double u = 0.0;
};

struct Loads {
  Eigen::VectorXd row;
  Eigen::VectorXd col;
  double max_excess(double cap) const {
    double e = 0.0;
    if (row.size()) e = std::max(e, row.maxCoeff() - cap);
    if (col.size()) e = std::max(e, col.maxCoeff() - cap);
    return e;
  }
};

Loads compute_loads(const std::vector<EdgeAlloc>& edges, Index n0, Index n1) {
  Loads l{Eigen::VectorXd::Zero(n0), Eigen::VectorXd::Zero(n1)};
  for (const auto& e : edges) {
    l.row(e.row) += e.u;
    l.col(e.col) += e.c * e.c / e.u;
  }
  return l;
}

void proportional_allocation(std::vector<EdgeAlloc>& edges, Index n0) {
  Eigen::VectorXd sq = Eigen::VectorXd::Zero(n0);
  for (const auto& e : edges) sq(e.row) += e.c * e.c;
  for (auto& e : edges) e.u = e.c * e.c / sq(e.row);
}

// Weights (p, q) restricted to one connected component, with the
// allocation u = c q_col / p_row written back into `edges`.
void allocate_from_weights(std::vector<EdgeAlloc>& edges,
                           const std::vector<std::size_t>& comp_edges,
                           const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  for (std::size_t k : comp_edges) {
    auto& e = edges[k];
    e.u = e.c * q(e.col) / p(e.row);
  }
}

struct Component {
  std::vector<Index> left;   // compressed row indices
  std::vector<Index> right;  // compressed column indices
  std::vector<std::size_t> edges;
};

std::vector<Component> components(const std::vector<EdgeAlloc>& edges, Index n0,
                                  Index n1) {
  std::vector<Edge> g;
  g.reserve(edges.size());
  for (const auto& e : edges)
    g.emplace_back(static_cast<std::size_t>(e.row), static_cast<std::size_t>(n0 + e.col));
  const SupportGraph graph(static_cast<std::size_t>(n0 + n1), std::move(g));
  std::vector<Component> out;
  std::vector<std::size_t> which(static_cast<std::size_t>(n0 + n1));
  for (const auto& vs : connected_components(graph)) {
    if (vs.size() < 2) continue;
    Component c;
    for (std::size_t v : vs) {
      which[v] = out.size();
      if (static_cast<Index>(v) < n0) c.left.push_back(static_cast<Index>(v));
      else c.right.push_back(static_cast<Index>(v) - n0);
    }
    out.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < edges.size(); ++k)
    out[which[static_cast<std::size_t>(edges[k].row)]].edges.push_back(k);
  return out;
}

// Returns false if the shifted system did not yield positive weights.
bool resolvent_step(std::vector<EdgeAlloc>& edges, const Component& comp, Index n0,
                    Index n1) {
  const auto k0 = static_cast<Index>(comp.left.size());
  const auto k1 = static_cast<Index>(comp.right.size());
  std::vector<Index> lpos(static_cast<std::size_t>(n0), -1),
      rpos(static_cast<std::size_t>(n1), -1);
  for (Index i = 0; i < k0; ++i) lpos[comp.left[i]] = i;
  for (Index j = 0; j < k1; ++j) rpos[comp.right[j]] = k0 + j;

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k0 + k1, k0 + k1);
  for (std::size_t k : comp.edges) {
    const auto& e = edges[k];
    m(lpos[e.row], rpos[e.col]) = m(rpos[e.col], lpos[e.row]) = e.c;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) return false;
  const double sigma = eig.eigenvalues()(k0 + k1 - 1);
  const double shift = sigma * (1.0 + 1e-10) + 1e-300;

  Eigen::MatrixXd sys = shift * Eigen::MatrixXd::Identity(k0 + k1, k0 + k1) - m;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(sys);
  if (ldlt.info() != Eigen::Success) return false;
  const Eigen::VectorXd z = ldlt.solve(Eigen::VectorXd::Ones(k0 + k1));
  if (!z.allFinite() || z.minCoeff() <= 0.0) return false;

  Eigen::VectorXd p = Eigen::VectorXd::Ones(n0), q = Eigen::VectorXd::Ones(n1);
  for (Index i = 0; i < k0; ++i) p(comp.left[i]) = z(i);
  for (Index j = 0; j < k1; ++j) q(comp.right[j]) = z(k0 + j);
  allocate_from_weights(edges, comp.edges, p, q);
  return true;
}

// Geometric rebalancing: p_i <- sqrt(p_i (C q)_i), q_j <- sqrt(q_j (C^T p)_j).
// Converges to the Perron singular pair of the component.
std::size_t rebalance_step(std::vector<EdgeAlloc>& edges, const Component& comp,
                           Index n0, Index n1, std::size_t max_iter, double cap) {
  Eigen::VectorXd p = Eigen::VectorXd::Ones(n0), q = Eigen::VectorXd::Ones(n1);
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    allocate_from_weights(edges, comp.edges, p, q);
    Eigen::VectorXd cq = Eigen::VectorXd::Zero(n0), ctp = Eigen::VectorXd::Zero(n1);
    for (std::size_t k : comp.edges) {
      const auto& e = edges[k];
      cq(e.row) += e.c * q(e.col);
      ctp(e.col) += e.c * p(e.row);
    }
    double worst = 0.0;
    for (Index i : comp.left) worst = std::max(worst, cq(i) / p(i));
    for (Index j : comp.right) worst = std::max(worst, ctp(j) / q(j));
    if (worst <= cap) break;
    double norm = 0.0;
    for (Index i : comp.left) {
      p(i) = std::sqrt(p(i) * cq(i));
      norm = std::max(norm, p(i));
    }
    for (Index i : comp.left) p(i) /= norm;
    // Column update uses the refreshed row weights.
    ctp.setZero();
    for (std::size_t k : comp.edges) ctp(edges[k].col) += edges[k].c * p(edges[k].row);
    for (Index j : comp.right) q(j) = std::sqrt(q(j) * ctp(j));
  }
  allocate_from_weights(edges, comp.edges, p, q);
  return it;
}

}  // namespace

FactorOutcome factor_bipartite(const Eigen::VectorXd& d0, const Eigen::MatrixXd& b,
                               const Eigen::VectorXd& d1, const ToleranceConfig& tol,
                               const BipartiteParams& params) {
  const Index n0 = d0.size(), n1 = d1.size();
  if (b.rows() != n0 || b.cols() != n1 || n0 + n1 == 0) {
    throw Error(ErrorCode::kDimension, "inconsistent bipartite block sizes");
  }
  const Index r = n0 + n1;

  // Full matrix for the final verification.
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(r, r);
  full.topLeftCorner(n0, n0) = d0.asDiagonal();
  full.bottomRightCorner(n1, n1) = d1.asDiagonal();
  full.topRightCorner(n0, n1) = b;
  full.bottomLeftCorner(n1, n0) = b.transpose();
  const SymMatrix target = SymMatrix::from_matrix(full);

  // Strip vertices with zero diagonal and no support.
  auto strip = [&](const Eigen::VectorXd& d, bool rows) {
    std::vector<bool> keep(static_cast<std::size_t>(d.size()), true);
    for (Index i = 0; i < d.size(); ++i) {
      const double support = rows ? b.row(i).maxCoeff() : b.col(i).maxCoeff();
      if (support > tol.eps_zero && d(i) <= 0.0) {
        throw Error(ErrorCode::kZeroDiagonalNonzeroRow,
                    "zero diagonal at vertex " +
                        std::to_string((rows ? i : n0 + i) + 1) +
                        " with nonzero off-diagonal entries");
      }
      keep[static_cast<std::size_t>(i)] = d(i) > tol.eps_zero || support > tol.eps_zero;
    }
    return keep;
  };
  const std::vector<bool> keep0 = n1 ? strip(d0, true) : std::vector<bool>(n0, true);
  const std::vector<bool> keep1 = n0 ? strip(d1, false) : std::vector<bool>(n1, true);

  std::vector<EdgeAlloc> edges;
  for (Index i = 0; i < n0; ++i) {
    for (Index j = 0; j < n1; ++j) {
      if (b(i, j) <= tol.eps_zero || !keep0[i] || !keep1[j]) continue;
      edges.push_back({i, j, b(i, j) / std::sqrt(d0(i) * d1(j))});
    }
  }

  FactorOutcome out;
  out.strategy = "bipartite-blockform";
  std::size_t iterations = 0;
  // A load of 1 + slop is tolerated; the clamped slack shows up in the
  // verified residual.
  const double cap = 1.0 + 0.1 * tol.eps_residual;

  if (!edges.empty()) {
    proportional_allocation(edges, n0);
    Loads loads = compute_loads(edges, n0, n1);
    if (loads.max_excess(cap) > 0.0) {
      for (const Component& comp : components(edges, n0, n1)) {
        if (params.step_rule == StepRule::kResolvent) {
          if (!resolvent_step(edges, comp, n0, n1)) {
            iterations += rebalance_step(edges, comp, n0, n1, params.max_iter, cap);
          }
          ++iterations;
        } else {
          iterations += rebalance_step(edges, comp, n0, n1, params.max_iter, cap);
        }
      }
      loads = compute_loads(edges, n0, n1);
    }
    out.infeasibility = loads.max_excess(1.0);
    if (loads.max_excess(cap) > 0.0) {
      out.iterations = iterations;
      out.reason = "edge allocation infeasible";
      return out;
    }
  }

  // Assemble in normalized coordinates, then undo the scaling.
  const Loads loads = compute_loads(edges, n0, n1);
  std::vector<Eigen::VectorXd> cols;
  for (const auto& e : edges) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(r);
    const double root = std::sqrt(e.u);
    x(e.row) = root * std::sqrt(d0(e.row));
    x(n0 + e.col) = e.c / root * std::sqrt(d1(e.col));
    cols.push_back(std::move(x));
  }
  auto slack = [&](const Eigen::VectorXd& d, const Eigen::VectorXd& load,
                   const std::vector<bool>& keep, Index offset) {
    for (Index i = 0; i < d.size(); ++i) {
      if (!keep[static_cast<std::size_t>(i)] || d(i) <= 0.0) continue;
      const double rest = d(i) * (1.0 - load(i));
      if (rest <= 0.0) continue;
      Eigen::VectorXd x = Eigen::VectorXd::Zero(r);
      x(offset + i) = std::sqrt(rest);
      cols.push_back(std::move(x));
    }
  };
  slack(d0, loads.row, keep0, 0);
  slack(d1, loads.col, keep1, n0);

  Eigen::MatrixXd x(r, static_cast<Index>(cols.size()));
  for (std::size_t t = 0; t < cols.size(); ++t) x.col(static_cast<Index>(t)) = cols[t];
  CpCertificate cert{std::move(x), 0.0};
  const VerifyResult v = verify_certificate(target, cert, tol);
  cert.residual = v.residual;
  out.iterations = iterations;
  out.infeasibility = std::max(out.infeasibility, 0.0);
  if (v.ok) {
    out.status = FactorStatus::kCertified;
    out.certificate = std::move(cert);
  } else {
    out.reason = "certificate failed verification";
    out.infeasibility = std::max(out.infeasibility, v.residual);
  }
  return out;
}

}  // namespace choicone
