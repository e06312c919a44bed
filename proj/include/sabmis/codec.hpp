#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sabmis {

// Gains and index constants of the coefficient-domain embedding rule. The
// reference formulation is 1-based; this struct keeps that convention in its
// documentation while all computed index sets below are 0-based.
//
// Embedding writes p4 measurement entries (1-based):
//   y'(p1)                 = y(p1 - 2c)   + alpha * t(1)
//   y'(j), j=p1-c+1..p1-1  = y(j - c)     + beta  * t(j - p1 + c + 1)
//   y'(k), k=p1+p4+1..
//           p1+2p4-c       = y(k - p4 + c) + gamma * t(k - p1 - p4 + c)
// Extraction re-derives t by differencing each written entry against the
// entry it was offset from, which embedding must have left untouched — hence
// the write/read disjointness requirement checked at validation time.
struct EmbedConstants {
  double alpha = 0.01;
  double beta = 0.1;
  double gamma = 1.0;
  int c = 6;
  int p1 = 32;
  int p4 = 32;
};

// 0-based measurement indices written by embedding, in payload order
// (t[0], t[1], ..., t[p4-1]).
std::vector<Eigen::Index> write_index_set(const EmbedConstants& k);

// 0-based measurement indices read back by extraction, in payload order.
// These must not intersect the write set.
std::vector<Eigen::Index> read_index_set(const EmbedConstants& k);

// Returns every violated constraint (empty means valid), given the
// measurement count p3 so the in-range checks are complete:
//   gains nonzero; 1 <= c < p4; p4 < p1 + p3; p1 - 2c >= 1;
//   p1 + 2*p4 - c <= p1 + p3; write/read index sets disjoint.
std::vector<std::string> validate_constants(const EmbedConstants& k, Eigen::Index p3);

// Applies the embedding rule to one measurement vector (length p1 + p3).
// Exactly p4 entries change; all other entries are returned untouched.
Eigen::VectorXd embed_block(const Eigen::VectorXd& y, const Eigen::VectorXd& t,
                            const EmbedConstants& k);

// Inverts embed_block given only the (possibly re-projected) measurement
// vector: returns the length-p4 coefficient payload.
Eigen::VectorXd extract_block(const Eigen::VectorXd& y, const EmbedConstants& k);

}  // namespace sabmis
