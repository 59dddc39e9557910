#pragma once

#include "powertriad/hilbert.hpp"
#include "powertriad/waveform.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace powertriad {

/// How the per-block analytic signals are produced.
enum class HilbertMode {
  spectral_per_block, ///< DFT Hilbert per block (assumes per-block periodicity)
  fir                 ///< continuous FIR filtering across block boundaries
};

struct MeterConfig {
  std::size_t block_size = 0;          ///< samples per emitted record, >= 8
  std::optional<double> known_omega0;  ///< carrier in rad/s when known a priori
  bool estimate_omega0 = false;        ///< per-block estimation + smoothing
  HilbertMode hilbert_mode = HilbertMode::spectral_per_block;
  std::optional<HilbertFirDesign> fir; ///< required in fir mode
  double smoothing_alpha = 0.2;        ///< weight of the newest omega estimate

  /// Throws std::invalid_argument unless exactly one omega0 source is chosen,
  /// block_size >= 8, and the FIR design is present iff mode is fir.
  void validate() const;
};

/// One record per complete block.
struct PowerRecord {
  double t = 0.0;              ///< time of the block's first sample
  cplx hermitian;              ///< block mean of v~ conj(i~)
  cplx complementary_demod;    ///< block mean of e^{-j 2 w0 t} v~ i~
  double apparent_S = 0.0;
  double active_P = 0.0;
  double nonactive_Q = 0.0;
  double power_factor = 0.0;
  double phi_hat = 0.0;        ///< current phase, principal branch (-pi/2, pi/2]
  double omega0_hat = 0.0;     ///< carrier used for this block (known or smoothed)
  /// Max |0.5 Re(pH + pC) - v i| over the block, relative to the block's power
  /// scale; ~1e-15 in spectral mode, the filter's error bound in fir mode.
  double reconstruction_error = 0.0;
  bool phi_ambiguous = true;   ///< phi is recovered from 2*phi: known only mod pi
  bool estimation_failed = false; ///< no dominant spectral peak in this block
  bool degenerate = false;     ///< |hermitian| ~ 0 (e.g. a dead channel): phi_hat = 0
  bool gap = false;            ///< stream desync: block aborted, values zeroed
};

/// Carrier estimate from one block: Hamming-windowed DFT peak (quadratic
/// interpolation) locates the tone to a fraction of a bin; a least-squares
/// single-tone fit then refines the frequency by residual minimization, which
/// is exact for a clean carrier even over fractional periods. Returns nullopt
/// when no dominant tone stands out (peak magnitude < 10x the median
/// positive-bin magnitude).
std::optional<double> estimate_omega0(const RealWaveform& block);

/// Phase recovered from the two power series at one instant:
///   phi = 0.5 * arg( e^{-j 2 w0 t} * complementary * conj(hermitian) )
/// mapped to (-pi/2, pi/2]. The half-angle leaves phi known only modulo pi;
/// `ambiguous` records that. Throws std::invalid_argument at |hermitian| = 0.
struct PhiEstimate {
  double phi = 0.0;
  bool ambiguous = true;
};

PhiEstimate recover_phi(cplx hermitian, cplx complementary, double omega0, double t);

/// Streaming state machine: push paired sample runs, records come out one per
/// complete block, in input order. FIR mode keeps enough history/lookahead to
/// filter continuously across pushes.
class MeterPipeline {
public:
  explicit MeterPipeline(MeterConfig config, double sample_rate, double t0 = 0.0);

  /// Appends paired samples (v and i must have equal length) and returns any
  /// records completed by this push.
  std::vector<PowerRecord> push(const std::vector<double>& v,
                                const std::vector<double>& i);

  /// Signals end-of-stream: an incomplete trailing block is dropped (counted),
  /// a length desync produces one gap record.
  std::vector<PowerRecord> finish(bool desync = false);

  std::size_t dropped_samples() const { return dropped_; }

private:
  std::vector<PowerRecord> drain_ready(bool at_end);
  PowerRecord process_block(std::size_t block_start);

  MeterConfig config_;
  double sample_rate_;
  double t0_;
  std::vector<double> v_buf_, i_buf_;
  std::size_t buf_base_ = 0;   ///< absolute index of v_buf_[0]
  std::size_t next_block_ = 0; ///< absolute index of the next block start
  std::size_t dropped_ = 0;
  std::optional<double> omega_smoothed_;
  bool finished_ = false;
};

/// Batch front end: runs the pipeline over two equal-grid waveforms.
/// A length mismatch yields a trailing gap record instead of an exception.
std::vector<PowerRecord> run_meter(const RealWaveform& v, const RealWaveform& i,
                                   const MeterConfig& config);

} // namespace powertriad
