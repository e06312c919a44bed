#include "sabmis/pipeline.hpp"

#include <stdexcept>

#include "sabmis/codec.hpp"
#include "sabmis/lasso_admm.hpp"
#include "sabmis/measurement.hpp"
#include "sabmis/parallel.hpp"
#include "sabmis/sampling.hpp"
#include "sabmis/transform.hpp"

namespace sabmis {

double capacity(const SabmisConfig& cfg, int n_secrets) {
  if (n_secrets < 1 || n_secrets > 4)
    throw std::invalid_argument("capacity: n_secrets must be in 1..4");
  return 8.0 * n_secrets * cfg.m * cfg.m / (static_cast<double>(cfg.r) * cfg.r);
}

Eigen::MatrixXd image_to_coeffs(const RealImage& img, int side, unsigned threads) {
  if (side < 1 || img.rows() % side != 0 || img.cols() % side != 0)
    throw std::invalid_argument("image_to_coeffs: side must divide both dimensions");
  const Eigen::Index grid_rows = img.rows() / side;
  const Eigen::Index grid_cols = img.cols() / side;
  const Eigen::Index nblocks = grid_rows * grid_cols;
  const Eigen::MatrixXd basis = dct_basis<double>(side);
  const auto order = zigzag_order(side);

  Eigen::MatrixXd coeffs(side * side, nblocks);
  parallel_for(
      static_cast<std::size_t>(nblocks),
      [&](std::size_t idx) {
        const Eigen::Index bi = static_cast<Eigen::Index>(idx) % grid_rows;
        const Eigen::Index bj = static_cast<Eigen::Index>(idx) / grid_rows;
        const Eigen::MatrixXd spec =
            basis * img.block(bi * side, bj * side, side, side) * basis.transpose();
        for (Eigen::Index k = 0; k < side * side; ++k)
          coeffs(k, static_cast<Eigen::Index>(idx)) =
              spec(order[k] / side, order[k] % side);
      },
      threads);
  return coeffs;
}

RealImage coeffs_to_image(const Eigen::MatrixXd& coeffs, int side, int rows, int cols,
                          unsigned threads) {
  if (side < 1 || rows % side != 0 || cols % side != 0)
    throw std::invalid_argument("coeffs_to_image: side must divide both dimensions");
  const Eigen::Index grid_rows = rows / side;
  const Eigen::Index grid_cols = cols / side;
  if (coeffs.rows() != static_cast<Eigen::Index>(side) * side ||
      coeffs.cols() != grid_rows * grid_cols)
    throw std::invalid_argument("coeffs_to_image: coefficient matrix shape mismatch");
  const Eigen::MatrixXd basis = dct_basis<double>(side);
  const auto order = zigzag_order(side);

  RealImage img(rows, cols);
  parallel_for(
      static_cast<std::size_t>(coeffs.cols()),
      [&](std::size_t idx) {
        const Eigen::Index bi = static_cast<Eigen::Index>(idx) % grid_rows;
        const Eigen::Index bj = static_cast<Eigen::Index>(idx) / grid_rows;
        Eigen::MatrixXd spec(side, side);
        for (Eigen::Index k = 0; k < side * side; ++k)
          spec(order[k] / side, order[k] % side) =
              coeffs(k, static_cast<Eigen::Index>(idx));
        img.block(bi * side, bj * side, side, side) =
            basis.transpose() * spec * basis;
      },
      threads);
  return img;
}

Eigen::MatrixXd measure_coeffs(const Eigen::MatrixXd& coeffs, int p1,
                               const Eigen::MatrixXd& phi) {
  if (p1 < 0 || p1 > coeffs.rows())
    throw std::invalid_argument("measure_coeffs: invalid p1");
  if (coeffs.rows() - p1 != phi.cols())
    throw std::invalid_argument("measure_coeffs: tail length does not match phi");
  Eigen::MatrixXd y(p1 + phi.rows(), coeffs.cols());
  y.topRows(p1) = coeffs.topRows(p1);
  y.bottomRows(phi.rows()).noalias() = phi * coeffs.bottomRows(phi.cols());
  return y;
}

namespace {

// Reconstructs the coefficient matrix from (possibly embedded) measurements:
// heads are copied verbatim, tails solved per block through the shared
// factorization.
Eigen::MatrixXd reconstruct_coeffs(const Eigen::MatrixXd& y, const SabmisConfig& cfg,
                                   const FactorHandle& handle, unsigned threads,
                                   EmbedStats* stats) {
  const int p1 = cfg.embed.p1;
  const Eigen::Index nblocks = y.cols();
  Eigen::MatrixXd coeffs(p1 + cfg.p2, nblocks);
  coeffs.topRows(p1) = y.topRows(p1);

  const Eigen::MatrixXd q = handle.phi().transpose() * y.bottomRows(cfg.p3);
  std::vector<int> iters(static_cast<std::size_t>(nblocks));
  std::vector<unsigned char> bad(static_cast<std::size_t>(nblocks), 0);
  parallel_for(
      static_cast<std::size_t>(nblocks),
      [&](std::size_t i) {
        const SolveResult res =
            solve_lasso_gram(q.col(static_cast<Eigen::Index>(i)), handle, cfg.solver);
        coeffs.bottomRows(cfg.p2).col(static_cast<Eigen::Index>(i)) = res.solution;
        iters[i] = res.iterations;
        bad[i] = res.converged ? 0 : 1;
      },
      threads);
  if (stats) {
    stats->iterations.insert(stats->iterations.end(), iters.begin(), iters.end());
    for (auto b : bad) stats->nonconverged += b;
  }
  return coeffs;
}

void check_embed_inputs(const GrayImage& cover, const std::map<int, GrayImage>& secrets,
                        const SabmisConfig& cfg) {
  if (cover.rows() != cfg.r || cover.cols() != cfg.r)
    throw std::invalid_argument("embed: cover must be r x r");
  if (secrets.empty() || secrets.size() > 4)
    throw std::invalid_argument("embed: need between 1 and 4 secrets");
  for (const auto& [slot, img] : secrets) {
    if (slot < 1 || slot > 4)
      throw std::invalid_argument("embed: slot indices must be in 1..4");
    if (img.rows() != cfg.m || img.cols() != cfg.m)
      throw std::invalid_argument("embed: every secret must be m x m");
  }
}

}  // namespace

Eigen::MatrixXd secret_coefficients(const GrayImage& secret, const SabmisConfig& cfg) {
  if (secret.rows() != cfg.m || secret.cols() != cfg.m)
    throw std::invalid_argument("secret_coefficients: secret must be m x m");
  const Eigen::MatrixXd coeffs = image_to_coeffs(to_real(secret), cfg.l);
  return coeffs.topRows(cfg.embed.p4);
}

RealImage embed_real(const GrayImage& cover, const std::map<int, GrayImage>& secrets,
                     const SabmisConfig& cfg, const EmbedOptions& opts,
                     EmbedStats* stats) {
  check_embed_inputs(cover, secrets, cfg);
  const SubImages<double> parts = subsample(to_real(cover));
  const Eigen::MatrixXd phi = generate_matrix(cfg.seed, cfg.p3, cfg.p2);
  const FactorHandle handle = prefactor(phi, cfg.solver.rho);
  const int sub_side = cfg.r / 2;

  SubImages<double> stego_parts;
  for (int slot = 1; slot <= 4; ++slot) {
    const RealImage& sub = parts[slot - 1];
    const auto carrier = secrets.find(slot);
    if (carrier == secrets.end() && opts.passthrough_empty) {
      stego_parts[slot - 1] = sub;
      continue;
    }
    const Eigen::MatrixXd coeffs = image_to_coeffs(sub, cfg.b, opts.threads);
    Eigen::MatrixXd y = measure_coeffs(coeffs, cfg.embed.p1, phi);
    if (carrier != secrets.end()) {
      const Eigen::MatrixXd payload = secret_coefficients(carrier->second, cfg);
      for (Eigen::Index i = 0; i < payload.cols(); ++i)
        y.col(i) = embed_block(y.col(i), payload.col(i), cfg.embed);
    }
    const Eigen::MatrixXd rec = reconstruct_coeffs(y, cfg, handle, opts.threads, stats);
    stego_parts[slot - 1] = coeffs_to_image(rec, cfg.b, sub_side, sub_side, opts.threads);
  }
  return inverse_sample(stego_parts);
}

GrayImage embed(const GrayImage& cover, const std::map<int, GrayImage>& secrets,
                const SabmisConfig& cfg, const EmbedOptions& opts, EmbedStats* stats) {
  return quantize(embed_real(cover, secrets, cfg, opts, stats));
}

Eigen::MatrixXd extract_coefficients(const RealImage& stego, int slot,
                                     const SabmisConfig& cfg, unsigned threads) {
  if (stego.rows() != cfg.r || stego.cols() != cfg.r)
    throw std::invalid_argument("extract: stego must be r x r");
  if (slot < 1 || slot > 4)
    throw std::invalid_argument("extract: slot indices must be in 1..4");
  const SubImages<double> parts = subsample(stego);
  const Eigen::MatrixXd phi = generate_matrix(cfg.seed, cfg.p3, cfg.p2);

  const Eigen::MatrixXd coeffs = image_to_coeffs(parts[slot - 1], cfg.b, threads);
  const Eigen::MatrixXd y = measure_coeffs(coeffs, cfg.embed.p1, phi);
  const Eigen::Index n_secret_blocks =
      static_cast<Eigen::Index>(cfg.m / cfg.l) * (cfg.m / cfg.l);

  Eigen::MatrixXd payload(cfg.embed.p4, n_secret_blocks);
  parallel_for(
      static_cast<std::size_t>(n_secret_blocks),
      [&](std::size_t i) {
        payload.col(static_cast<Eigen::Index>(i)) =
            extract_block(y.col(static_cast<Eigen::Index>(i)), cfg.embed);
      },
      threads);
  return payload;
}

std::vector<GrayImage> extract_real(const RealImage& stego, const std::vector<int>& slots,
                                    const SabmisConfig& cfg, unsigned threads) {
  if (slots.empty()) throw std::invalid_argument("extract: no slots requested");
  std::vector<GrayImage> out;
  out.reserve(slots.size());
  for (int slot : slots) {
    const Eigen::MatrixXd payload = extract_coefficients(stego, slot, cfg, threads);
    // The recovered coefficients occupy the first p4 zig-zag positions of
    // each secret block; the high-frequency remainder is zero.
    Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(cfg.l * cfg.l, payload.cols());
    coeffs.topRows(cfg.embed.p4) = payload;
    out.push_back(quantize(coeffs_to_image(coeffs, cfg.l, cfg.m, cfg.m, threads)));
  }
  return out;
}

std::vector<GrayImage> extract(const GrayImage& stego, const std::vector<int>& slots,
                               const SabmisConfig& cfg, unsigned threads) {
  return extract_real(to_real(stego), slots, cfg, threads);
}

}  // namespace sabmis
