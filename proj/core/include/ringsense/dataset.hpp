#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ringsense/rng.hpp"
#include "ringsense/simworld.hpp"

namespace ringsense::dataset {

inline constexpr int kRangeEntries =
    kinematics::kRingCount * kinematics::kUnitsPerRing;                    // 48
inline constexpr int kInputSize = kRangeEntries + kinematics::kJointCount;  // 54

/// Range value standing in for "no human return": the maximum reach.
inline constexpr double kSentinelRange = kinematics::kMaxRange;

using InputVector = Eigen::Matrix<double, kInputSize, 1>;

/// One time-synchronized tuple: the 54-element input (48 per-unit ranges,
/// ring-major, then 6 joint angles) and the ground-truth planar pose.
struct TrainingSample {
    InputVector z = InputVector::Constant(kSentinelRange);
    Eigen::Vector2d y = Eigen::Vector2d::Zero();
    double t = 0.0;
};

struct DatasetMeta {
    std::uint64_t seed = 0;
    std::string config_fingerprint;
};

struct Dataset {
    std::vector<TrainingSample> samples;
    DatasetMeta meta;
};

struct NoiseParams {
    double sigma_range = 0.01;  // m
    double sigma_angle = 0.002;  // rad
    double sigma_gt = 0.02;      // m

    void validate() const;
};

/// Thrown by load() with the offending line number in the message.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat slot of a (ring, unit) pair inside the input vector.
int slot_index(int ring, int unit);

/// Builds the sample of one tick: Human-labeled ranges at their slots, the
/// sentinel elsewhere, joint angles, and the true pose.
TrainingSample record(const simworld::WorldState& w,
                      const std::vector<simworld::LidarObservation>& human_hits,
                      const kinematics::JointConfig& q);

/// i.i.d. zero-mean Gaussian per entry. Ranges are re-clamped to [0, 2];
/// slots exactly at the sentinel stay untouched so "no return" remains
/// unambiguous. Throws for a negative sigma.
TrainingSample add_noise(const TrainingSample& s, const NoiseParams& noise, Rng& rng);

/// Appends `copies` noisy replicas of every sample; originals first, in
/// their original order.
Dataset augment(const Dataset& d, int copies, const NoiseParams& noise, Rng& rng);

/// Deterministic shuffled split; |test| = round(test_fraction * n).
std::pair<Dataset, Dataset> split(const Dataset& d, double test_fraction, std::uint64_t seed);

void save(const Dataset& d, const std::string& path);
Dataset load(const std::string& path);

/// Ranges scaled into [0,1]; angles scaled by 1/pi into [-1,1], clamped.
InputVector normalize(const InputVector& z);
InputVector denormalize(const InputVector& z);

/// Column-major packing for the regressor: Z is 54 x n, Y is 2 x n.
/// Inputs are normalized when `normalized` is set.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> to_matrices(const Dataset& d, bool normalized = true);

}  // namespace ringsense::dataset
