#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ringsense/rng.hpp"

namespace ringsense::neuralnet {

enum class Activation { Relu, Tanh, Identity };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

/// Fully connected regressor y = f(z, W, B). Layer l maps dim[l-1] to
/// dim[l] through an affine map followed by its activation; the output
/// activation is identity and dropout applies to the last hidden layer's
/// output only.
struct MlpModel {
    std::vector<int> layer_dims;               // [in, h1, ..., out]
    std::vector<Eigen::MatrixXd> weights;      // W[l]: dims[l+1] x dims[l]
    std::vector<Eigen::VectorXd> biases;       // B[l]: dims[l+1]
    std::vector<Activation> activations;       // one per affine layer
    double dropout_rate = 0.0;                 // in [0,1)

    int input_size() const { return layer_dims.front(); }
    int output_size() const { return layer_dims.back(); }
    std::size_t layer_count() const { return weights.size(); }

    /// Throws std::invalid_argument naming the first inconsistent layer.
    void validate() const;
};

/// Glorot-uniform weights, zero biases, deterministic in the seed.
MlpModel init_model(const std::vector<int>& layer_dims, const std::vector<Activation>& activations,
                    double dropout_rate, std::uint64_t seed);

/// The default architecture: [54, h1, h2, h3, 2] with relu/tanh/relu hidden
/// activations and an identity output.
MlpModel default_model(const std::vector<int>& hidden_dims, double dropout_rate,
                       std::uint64_t seed);

/// Inverted-dropout mask on the last hidden layer's output: entries are 0
/// with probability p and 1/(1-p) otherwise, so Eval needs no rescaling.
/// An empty mask (cols()==0) means "no dropout".
struct DropoutMask {
    Eigen::MatrixXd scale;

    bool active() const { return scale.size() > 0; }
};

DropoutMask sample_mask(const MlpModel& m, Eigen::Index batch, Rng& rng);

/// Deterministic forward pass (Eval mode). Z is input-size x batch.
Eigen::MatrixXd forward_eval(const MlpModel& m, const Eigen::MatrixXd& Z);

/// Train-mode forward pass with a freshly sampled dropout mask.
Eigen::MatrixXd forward_train(const MlpModel& m, const Eigen::MatrixXd& Z, Rng& rng);

/// Forward pass under an explicit mask; used by training internals and by
/// gradient checks that must pin the mask.
Eigen::MatrixXd forward_masked(const MlpModel& m, const Eigen::MatrixXd& Z,
                               const DropoutMask& mask);

/// Root-mean-square error over a batch: sqrt(mean_n |pred_n - truth_n|^2)
/// with the inner square summed over output coordinates.
double loss_rmse(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& truth);

struct Gradients {
    std::vector<Eigen::MatrixXd> dW;
    std::vector<Eigen::VectorXd> db;
};

/// Exact analytic gradient of loss_rmse(forward(Z), Y) including the
/// square-root chain factor. At an exact zero loss the gradient is defined
/// as zero. The mask, when active, is held fixed for the whole call.
Gradients gradients(const MlpModel& m, const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y,
                    const DropoutMask& mask);

struct TrainConfig {
    double lr0 = 0.01;      // initial learning rate
    double decay = 1e-6;    // per-update decay: lr_t = lr0 / (1 + decay*t)
    double momentum = 0.9;  // Nesterov momentum coefficient
    int epochs = 100;
    int batch_size = 64;
    std::uint64_t seed = 1;

    void validate() const;
};

struct EpochStats {
    int epoch = 0;       // 1-based
    double train_rmse = 0.0;
    double val_rmse = 0.0;  // NaN when no validation set was given
    double lr = 0.0;        // learning rate entering the next epoch
};

struct TrainResult {
    MlpModel model;
    std::vector<EpochStats> history;
};

/// Thrown when the train RMSE exceeds 10x its initial value.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minibatch SGD with Nesterov momentum: v <- mu*v - lr*grad(theta + mu*v),
/// theta <- theta + v. Deterministic in cfg.seed. When `progress` is given,
/// one structured line per epoch is written to it.
TrainResult train(MlpModel m, const Eigen::MatrixXd& Ztrain, const Eigen::MatrixXd& Ytrain,
                  const Eigen::MatrixXd& Zval, const Eigen::MatrixXd& Yval,
                  const TrainConfig& cfg, std::ostream* progress = nullptr);

/// Self-describing textual format; round-trips exactly.
void save_model(const MlpModel& m, const std::string& path);
MlpModel load_model(const std::string& path);

}  // namespace ringsense::neuralnet
