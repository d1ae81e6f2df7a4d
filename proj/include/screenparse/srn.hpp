#ifndef SCREENPARSE_SRN_HPP_
#define SCREENPARSE_SRN_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace screenparse {

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Seeded generator with a platform-independent uniform draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr double kContextResetValue = 0.5;

double sigmoid(double x);

/// Elman network:
///   hidden  = sigmoid(W_ih * input + W_ch * context + b_h)
///   output  = sigmoid(W_ho * hidden + b_o)
///   context <- hidden
class SrnModel {
 public:
  SrnModel() = default;
  /// All weights and biases zero, context at the reset value.
  SrnModel(std::size_t n_in, std::size_t n_hid, std::size_t n_out);

  /// Weights and biases uniform in [-init_scale, +init_scale].
  static SrnModel random(std::size_t n_in, std::size_t n_hid, std::size_t n_out,
                         double init_scale, Rng& rng);

  std::size_t n_in() const { return n_in_; }
  std::size_t n_hid() const { return n_hid_; }
  std::size_t n_out() const { return n_out_; }

  /// Runs one step and advances the context. Throws DimensionError.
  std::vector<double> forward(std::span<const double> input);
  /// One step without touching the context; `hidden` receives the new state.
  std::vector<double> evaluate(std::span<const double> input,
                               std::vector<double>* hidden = nullptr) const;
  void reset_context();

  Matrix& w_ih() { return w_ih_; }
  Matrix& w_ch() { return w_ch_; }
  Matrix& w_ho() { return w_ho_; }
  std::vector<double>& b_h() { return b_h_; }
  std::vector<double>& b_o() { return b_o_; }
  std::vector<double>& context() { return context_; }
  const Matrix& w_ih() const { return w_ih_; }
  const Matrix& w_ch() const { return w_ch_; }
  const Matrix& w_ho() const { return w_ho_; }
  const std::vector<double>& b_h() const { return b_h_; }
  const std::vector<double>& b_o() const { return b_o_; }
  const std::vector<double>& context() const { return context_; }

  /// Flat view over every trainable value, ordered W_ih, W_ch, W_ho, b_h, b_o.
  std::size_t parameter_count() const;
  double& parameter(std::size_t index);
  double parameter(std::size_t index) const;

  friend bool operator==(const SrnModel&, const SrnModel&) = default;

 private:
  std::size_t n_in_ = 0;
  std::size_t n_hid_ = 0;
  std::size_t n_out_ = 0;
  Matrix w_ih_, w_ch_, w_ho_;
  std::vector<double> b_h_, b_o_;
  std::vector<double> context_;
};

/// Gradient of the per-step loss, same layout as the model parameters.
struct SrnGradient {
  Matrix w_ih, w_ch, w_ho;
  std::vector<double> b_h, b_o;

  double& parameter(std::size_t index);
  double parameter(std::size_t index) const;
};

/// Sum of squared errors of one step against `target`, context held fixed.
double step_loss(const SrnModel& model, std::span<const double> input,
                 std::span<const double> target);

/// Analytic gradient of step_loss. The context is a constant input: no
/// gradient flows into earlier steps.
SrnGradient step_gradient(const SrnModel& model, std::span<const double> input,
                          std::span<const double> target, double* loss = nullptr);

struct TrainConfig {
  double learning_rate = 0.25;
  double momentum = 0.9;
  int epochs = 200;
  std::uint64_t seed = 1;
  double init_scale = 0.3;

  void validate() const;
};

struct TrainingPair {
  std::vector<double> input;
  std::vector<double> target;
};

/// Online backprop with momentum. The velocity persists across sequences,
/// so one trainer is meant to stay attached to one model.
class SrnTrainer {
 public:
  SrnTrainer(const SrnModel& model, const TrainConfig& config);

  /// Resets the context, applies one update per pair, then returns the
  /// mean squared error of the updated model over the sequence. The context
  /// is reset again on return.
  double train_sequence(SrnModel& model, std::span<const TrainingPair> sequence);

 private:
  TrainConfig config_;
  SrnGradient velocity_;
};

/// Fresh-trainer convenience wrapper (no momentum carried in).
double train_sequence(SrnModel& model, std::span<const TrainingPair> sequence,
                      const TrainConfig& config);

/// Mean squared error over a sequence from a reset context. Leaves the
/// model's context reset.
double sequence_mse(SrnModel& model, std::span<const TrainingPair> sequence);

/// Text model format: `SRN n_in n_hid n_out`, then sections W_IH, W_CH,
/// W_HO (one row per line), B_H, B_O (one line each).
void save(const SrnModel& model, std::ostream& out);
SrnModel load(std::istream& in, const std::string& source = "<model>");
void save(const SrnModel& model, const std::filesystem::path& path);
SrnModel load(const std::filesystem::path& path);

}  // namespace screenparse

#endif  // SCREENPARSE_SRN_HPP_
