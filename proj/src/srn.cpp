#include "screenparse/srn.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "screenparse/error.hpp"

namespace screenparse {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

namespace {

void check_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(want) +
                         " components, got " + std::to_string(got));
}

void fill_uniform(std::vector<double>& values, double scale, Rng& rng) {
  for (double& v : values) v = rng.uniform(-scale, scale);
}

// Shared flat indexing over the five parameter blocks.
template <typename M, typename V>
auto& flat_parameter(M& ih, M& ch, M& ho, V& bh, V& bo, std::size_t index) {
  if (index < ih.data().size()) return ih.data()[index];
  index -= ih.data().size();
  if (index < ch.data().size()) return ch.data()[index];
  index -= ch.data().size();
  if (index < ho.data().size()) return ho.data()[index];
  index -= ho.data().size();
  if (index < bh.size()) return bh[index];
  index -= bh.size();
  if (index < bo.size()) return bo[index];
  throw std::out_of_range("parameter index out of range");
}

struct Activations {
  std::vector<double> hidden;
  std::vector<double> output;
};

Activations run_step(const SrnModel& m, std::span<const double> input) {
  check_size(input.size(), m.n_in(), "input");
  for (double x : input)
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite input component");
  Activations a;
  a.hidden.resize(m.n_hid());
  for (std::size_t j = 0; j < m.n_hid(); ++j) {
    double net = m.b_h()[j];
    const auto wi = m.w_ih().row(j);
    for (std::size_t i = 0; i < m.n_in(); ++i) net += wi[i] * input[i];
    const auto wc = m.w_ch().row(j);
    for (std::size_t c = 0; c < m.n_hid(); ++c) net += wc[c] * m.context()[c];
    a.hidden[j] = sigmoid(net);
  }
  a.output.resize(m.n_out());
  for (std::size_t k = 0; k < m.n_out(); ++k) {
    double net = m.b_o()[k];
    const auto wo = m.w_ho().row(k);
    for (std::size_t j = 0; j < m.n_hid(); ++j) net += wo[j] * a.hidden[j];
    a.output[k] = sigmoid(net);
  }
  return a;
}

}  // namespace

SrnModel::SrnModel(std::size_t n_in, std::size_t n_hid, std::size_t n_out)
    : n_in_(n_in),
      n_hid_(n_hid),
      n_out_(n_out),
      w_ih_(n_hid, n_in),
      w_ch_(n_hid, n_hid),
      w_ho_(n_out, n_hid),
      b_h_(n_hid, 0.0),
      b_o_(n_out, 0.0),
      context_(n_hid, kContextResetValue) {
  if (n_in == 0 || n_hid == 0 || n_out == 0)
    throw DimensionError("SRN layer sizes must be positive");
}

SrnModel SrnModel::random(std::size_t n_in, std::size_t n_hid, std::size_t n_out,
                          double init_scale, Rng& rng) {
  SrnModel m(n_in, n_hid, n_out);
  fill_uniform(m.w_ih_.data(), init_scale, rng);
  fill_uniform(m.w_ch_.data(), init_scale, rng);
  fill_uniform(m.w_ho_.data(), init_scale, rng);
  fill_uniform(m.b_h_, init_scale, rng);
  fill_uniform(m.b_o_, init_scale, rng);
  return m;
}

std::vector<double> SrnModel::forward(std::span<const double> input) {
  Activations a = run_step(*this, input);
  context_ = std::move(a.hidden);
  return std::move(a.output);
}

std::vector<double> SrnModel::evaluate(std::span<const double> input,
                                       std::vector<double>* hidden) const {
  Activations a = run_step(*this, input);
  if (hidden) *hidden = std::move(a.hidden);
  return std::move(a.output);
}

void SrnModel::reset_context() { context_.assign(n_hid_, kContextResetValue); }

std::size_t SrnModel::parameter_count() const {
  return w_ih_.data().size() + w_ch_.data().size() + w_ho_.data().size() + b_h_.size() +
         b_o_.size();
}

double& SrnModel::parameter(std::size_t index) {
  return flat_parameter(w_ih_, w_ch_, w_ho_, b_h_, b_o_, index);
}

double SrnModel::parameter(std::size_t index) const {
  return const_cast<SrnModel*>(this)->parameter(index);
}

double& SrnGradient::parameter(std::size_t index) {
  return flat_parameter(w_ih, w_ch, w_ho, b_h, b_o, index);
}

double SrnGradient::parameter(std::size_t index) const {
  return const_cast<SrnGradient*>(this)->parameter(index);
}

double step_loss(const SrnModel& model, std::span<const double> input,
                 std::span<const double> target) {
  check_size(target.size(), model.n_out(), "target");
  const Activations a = run_step(model, input);
  double loss = 0.0;
  for (std::size_t k = 0; k < model.n_out(); ++k) {
    const double e = a.output[k] - target[k];
    loss += e * e;
  }
  return loss;
}

SrnGradient step_gradient(const SrnModel& model, std::span<const double> input,
                          std::span<const double> target, double* loss) {
  check_size(target.size(), model.n_out(), "target");
  const Activations a = run_step(model, input);
  const std::size_t n_in = model.n_in(), n_hid = model.n_hid(), n_out = model.n_out();

  SrnGradient g{Matrix(n_hid, n_in), Matrix(n_hid, n_hid), Matrix(n_out, n_hid),
                std::vector<double>(n_hid, 0.0), std::vector<double>(n_out, 0.0)};
  double sse = 0.0;
  std::vector<double> delta_out(n_out);
  for (std::size_t k = 0; k < n_out; ++k) {
    const double o = a.output[k];
    const double e = o - target[k];
    sse += e * e;
    delta_out[k] = 2.0 * e * o * (1.0 - o);
    g.b_o[k] = delta_out[k];
    for (std::size_t j = 0; j < n_hid; ++j) g.w_ho(k, j) = delta_out[k] * a.hidden[j];
  }
  for (std::size_t j = 0; j < n_hid; ++j) {
    double back = 0.0;
    for (std::size_t k = 0; k < n_out; ++k) back += delta_out[k] * model.w_ho()(k, j);
    const double h = a.hidden[j];
    const double delta = back * h * (1.0 - h);
    g.b_h[j] = delta;
    for (std::size_t i = 0; i < n_in; ++i) g.w_ih(j, i) = delta * input[i];
    for (std::size_t c = 0; c < n_hid; ++c) g.w_ch(j, c) = delta * model.context()[c];
  }
  if (loss) *loss = sse;
  return g;
}

void TrainConfig::validate() const {
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate))
    throw std::invalid_argument("learning_rate must be a non-negative finite number");
  if (!(momentum >= 0.0 && momentum < 1.0))
    throw std::invalid_argument("momentum must lie in [0, 1)");
  if (epochs <= 0) throw std::invalid_argument("epochs must be positive");
  if (!(init_scale > 0.0)) throw std::invalid_argument("init_scale must be positive");
}

SrnTrainer::SrnTrainer(const SrnModel& model, const TrainConfig& config)
    : config_(config),
      velocity_{Matrix(model.n_hid(), model.n_in()), Matrix(model.n_hid(), model.n_hid()),
                Matrix(model.n_out(), model.n_hid()), std::vector<double>(model.n_hid(), 0.0),
                std::vector<double>(model.n_out(), 0.0)} {
  config_.validate();
}

double SrnTrainer::train_sequence(SrnModel& model, std::span<const TrainingPair> sequence) {
  const std::size_t count = model.parameter_count();
  if (velocity_.w_ih.rows() != model.n_hid() || velocity_.w_ih.cols() != model.n_in() ||
      velocity_.w_ho.rows() != model.n_out())
    throw DimensionError("trainer was created for a model of different shape");
  for (const auto& pair : sequence) {
    check_size(pair.input.size(), model.n_in(), "input");
    check_size(pair.target.size(), model.n_out(), "target");
    for (double t : pair.target)
      if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("target outside [0, 1]");
  }

  model.reset_context();
  for (const auto& pair : sequence) {
    std::vector<double> hidden;
    // The gradient needs the pre-step context; compute it before advancing.
    const SrnGradient g = step_gradient(model, pair.input, pair.target);
    model.evaluate(pair.input, &hidden);
    for (std::size_t p = 0; p < count; ++p) {
      double& v = velocity_.parameter(p);
      v = config_.momentum * v - config_.learning_rate * g.parameter(p);
      model.parameter(p) += v;
    }
    model.context() = std::move(hidden);
  }
  return sequence_mse(model, sequence);
}

double train_sequence(SrnModel& model, std::span<const TrainingPair> sequence,
                      const TrainConfig& config) {
  SrnTrainer trainer(model, config);
  return trainer.train_sequence(model, sequence);
}

double sequence_mse(SrnModel& model, std::span<const TrainingPair> sequence) {
  model.reset_context();
  if (sequence.empty()) return 0.0;
  double total = 0.0;
  for (const auto& pair : sequence) {
    const std::vector<double> out = model.forward(pair.input);
    check_size(pair.target.size(), out.size(), "target");
    for (std::size_t k = 0; k < out.size(); ++k) {
      const double e = out[k] - pair.target[k];
      total += e * e;
    }
  }
  model.reset_context();
  return total / static_cast<double>(sequence.size() * model.n_out());
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void write_values(std::ostream& out, std::span<const double> values) {
  char buf[32];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    if (i) out << ' ';
    out << buf;
  }
  out << '\n';
}

class ModelReader {
 public:
  ModelReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next_line(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source_, eof_ ? 0 : line_no_, message);
  }

  void read_header(std::size_t& n_in, std::size_t& n_hid, std::size_t& n_out) {
    std::string line;
    if (!next_line(line)) {
      eof_ = true;
      fail("empty model file");
    }
    std::istringstream ss(line);
    std::string magic;
    ss >> magic;
    if (magic != "SRN") fail("expected header `SRN n_in n_hid n_out`");
    std::vector<long long> dims;
    std::string tok;
    while (ss >> tok) dims.push_back(parse_count(tok));
    if (dims.size() != 3)
      fail("header must carry exactly 3 dimensions, found " + std::to_string(dims.size()));
    n_in = static_cast<std::size_t>(dims[0]);
    n_hid = static_cast<std::size_t>(dims[1]);
    n_out = static_cast<std::size_t>(dims[2]);
  }

  void read_section(const char* name, std::vector<double>& values) {
    std::string line;
    if (!next_line(line)) {
      eof_ = true;
      fail(std::string("missing section ") + name);
    }
    if (trimmed(line) != name) fail(std::string("expected section ") + name);
    std::size_t filled = 0;
    while (filled < values.size()) {
      if (!next_line(line)) {
        eof_ = true;
        fail(std::string("section ") + name + " truncated: expected " +
             std::to_string(values.size()) + " values, got " + std::to_string(filled));
      }
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) {
        if (filled == values.size()) fail(std::string("too many values in section ") + name);
        values[filled++] = parse_value(tok);
      }
    }
  }

  void expect_end() {
    std::string line;
    if (next_line(line)) fail("unexpected trailing content");
  }

 private:
  static std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    const auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  }

  long long parse_count(const std::string& tok) const {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
      fail("bad dimension '" + tok + "'");
    return v;
  }

  double parse_value(const std::string& tok) const {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v))
      fail("bad numeric value '" + tok + "'");
    return v;
  }

  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
  bool eof_ = false;
};

}  // namespace

void save(const SrnModel& model, std::ostream& out) {
  out << "SRN " << model.n_in() << ' ' << model.n_hid() << ' ' << model.n_out() << '\n';
  out << "W_IH\n";
  for (std::size_t r = 0; r < model.w_ih().rows(); ++r) write_values(out, model.w_ih().row(r));
  out << "W_CH\n";
  for (std::size_t r = 0; r < model.w_ch().rows(); ++r) write_values(out, model.w_ch().row(r));
  out << "W_HO\n";
  for (std::size_t r = 0; r < model.w_ho().rows(); ++r) write_values(out, model.w_ho().row(r));
  out << "B_H\n";
  write_values(out, model.b_h());
  out << "B_O\n";
  write_values(out, model.b_o());
}

SrnModel load(std::istream& in, const std::string& source) {
  ModelReader reader(in, source);
  std::size_t n_in = 0, n_hid = 0, n_out = 0;
  reader.read_header(n_in, n_hid, n_out);
  SrnModel model(n_in, n_hid, n_out);
  reader.read_section("W_IH", model.w_ih().data());
  reader.read_section("W_CH", model.w_ch().data());
  reader.read_section("W_HO", model.w_ho().data());
  reader.read_section("B_H", model.b_h());
  reader.read_section("B_O", model.b_o());
  reader.expect_end();
  return model;
}

void save(const SrnModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model: " + path.string());
  save(model, out);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

SrnModel load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model: " + path.string());
  return load(in, path.string());
}

}  // namespace screenparse
