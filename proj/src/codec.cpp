#include "sabmis/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace sabmis {

std::vector<Eigen::Index> write_index_set(const EmbedConstants& k) {
  std::vector<Eigen::Index> idx;
  idx.reserve(k.p4);
  idx.push_back(k.p1 - 1);
  for (Eigen::Index j = k.p1 - k.c; j <= k.p1 - 2; ++j) idx.push_back(j);
  for (Eigen::Index kk = k.p1 + k.p4; kk <= k.p1 + 2 * k.p4 - k.c - 1; ++kk)
    idx.push_back(kk);
  return idx;
}

std::vector<Eigen::Index> read_index_set(const EmbedConstants& k) {
  std::vector<Eigen::Index> idx;
  idx.reserve(k.p4);
  idx.push_back(k.p1 - 2 * k.c - 1);
  for (Eigen::Index j = k.p1 - k.c; j <= k.p1 - 2; ++j) idx.push_back(j - k.c);
  for (Eigen::Index kk = k.p1 + k.p4; kk <= k.p1 + 2 * k.p4 - k.c - 1; ++kk)
    idx.push_back(kk - k.p4 + k.c);
  return idx;
}

std::vector<std::string> validate_constants(const EmbedConstants& k, Eigen::Index p3) {
  std::vector<std::string> bad;
  if (k.alpha == 0.0) bad.push_back("alpha must be nonzero");
  if (k.beta == 0.0) bad.push_back("beta must be nonzero");
  if (k.gamma == 0.0) bad.push_back("gamma must be nonzero");
  if (k.c < 1) bad.push_back("c must be >= 1");
  if (k.c >= k.p4) bad.push_back("c must be < p4");
  if (k.p4 >= k.p1 + p3) bad.push_back("p4 must be < p1 + p3");
  if (k.p1 - 2 * k.c < 1) bad.push_back("p1 - 2c must be >= 1");
  if (k.p1 + 2 * k.p4 - k.c > k.p1 + p3)
    bad.push_back("p1 + 2*p4 - c must be <= p1 + p3");
  if (bad.empty()) {
    // Only meaningful once all indices are in range.
    auto w = write_index_set(k);
    auto r = read_index_set(k);
    std::sort(w.begin(), w.end());
    std::sort(r.begin(), r.end());
    std::vector<Eigen::Index> both;
    std::set_intersection(w.begin(), w.end(), r.begin(), r.end(),
                          std::back_inserter(both));
    if (!both.empty())
      bad.push_back("embedding write indices intersect extraction read indices");
  }
  return bad;
}

namespace {

void require_valid(const EmbedConstants& k, Eigen::Index y_len) {
  const Eigen::Index p3 = y_len - k.p1;
  const auto bad = validate_constants(k, p3);
  if (!bad.empty()) throw std::invalid_argument("embed constants invalid: " + bad.front());
}

}  // namespace

Eigen::VectorXd embed_block(const Eigen::VectorXd& y, const Eigen::VectorXd& t,
                            const EmbedConstants& k) {
  require_valid(k, y.size());
  if (t.size() != k.p4)
    throw std::invalid_argument("embed_block: payload length must be p4");
  Eigen::VectorXd out = y;
  const Eigen::Index p1 = k.p1, p4 = k.p4, c = k.c;
  out(p1 - 1) = y(p1 - 2 * c - 1) + k.alpha * t(0);
  for (Eigen::Index j = p1 - c; j <= p1 - 2; ++j)
    out(j) = y(j - c) + k.beta * t(j - p1 + c + 1);
  for (Eigen::Index kk = p1 + p4; kk <= p1 + 2 * p4 - c - 1; ++kk)
    out(kk) = y(kk - p4 + c) + k.gamma * t(kk - p1 - p4 + c);
  return out;
}

Eigen::VectorXd extract_block(const Eigen::VectorXd& y, const EmbedConstants& k) {
  require_valid(k, y.size());
  Eigen::VectorXd t(k.p4);
  const Eigen::Index p1 = k.p1, p4 = k.p4, c = k.c;
  t(0) = (y(p1 - 1) - y(p1 - 2 * c - 1)) / k.alpha;
  for (Eigen::Index j = p1 - c; j <= p1 - 2; ++j)
    t(j - p1 + c + 1) = (y(j) - y(j - c)) / k.beta;
  for (Eigen::Index kk = p1 + p4; kk <= p1 + 2 * p4 - c - 1; ++kk)
    t(kk - p1 - p4 + c) = (y(kk) - y(kk - p4 + c)) / k.gamma;
  return t;
}

}  // namespace sabmis
