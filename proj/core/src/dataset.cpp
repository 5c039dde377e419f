#include "ringsense/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace ringsense::dataset {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string expected_header() {
    std::string h = "t";
    for (int r = 1; r <= kinematics::kRingCount; ++r) {
        for (int u = 1; u <= kinematics::kUnitsPerRing; ++u) {
            h += ",r_" + std::to_string(r) + "_" + std::to_string(u);
        }
    }
    for (int j = 1; j <= kinematics::kJointCount; ++j) h += ",theta_" + std::to_string(j);
    h += ",x_h,y_h";
    return h;
}

void append_number(std::string& line, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    line += buf;
}

double parse_field(const std::string& field, std::size_t line_no) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0') {
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" + field + "'");
    }
    return v;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

void NoiseParams::validate() const {
    if (sigma_range < 0.0 || sigma_angle < 0.0 || sigma_gt < 0.0) {
        throw std::invalid_argument("noise sigma must be nonnegative");
    }
}

int slot_index(int ring, int unit) {
    if (ring < 1 || ring > kinematics::kRingCount || unit < 1 || unit > kinematics::kUnitsPerRing) {
        throw std::out_of_range("slot_index: ring " + std::to_string(ring) + " unit " +
                                std::to_string(unit));
    }
    return (ring - 1) * kinematics::kUnitsPerRing + (unit - 1);
}

TrainingSample record(const simworld::WorldState& w,
                      const std::vector<simworld::LidarObservation>& human_hits,
                      const kinematics::JointConfig& q) {
    TrainingSample s;
    s.t = w.time;
    s.z.head<kRangeEntries>().setConstant(kSentinelRange);
    for (const auto& obs : human_hits) {
        if (obs.label != simworld::HitLabel::Human || !obs.range) continue;
        s.z[slot_index(obs.ring, obs.unit)] = *obs.range;
    }
    for (int j = 0; j < kinematics::kJointCount; ++j) s.z[kRangeEntries + j] = q[j];
    s.y << w.human.x, w.human.y;
    return s;
}

TrainingSample add_noise(const TrainingSample& s, const NoiseParams& noise, Rng& rng) {
    noise.validate();
    TrainingSample out = s;
    for (int i = 0; i < kRangeEntries; ++i) {
        if (out.z[i] == kSentinelRange) continue;  // sentinel slots stay exact
        out.z[i] = std::clamp(out.z[i] + rng.normal(0.0, noise.sigma_range), 0.0, kSentinelRange);
    }
    for (int i = kRangeEntries; i < kInputSize; ++i) {
        out.z[i] += rng.normal(0.0, noise.sigma_angle);
    }
    out.y.x() += rng.normal(0.0, noise.sigma_gt);
    out.y.y() += rng.normal(0.0, noise.sigma_gt);
    return out;
}

Dataset augment(const Dataset& d, int copies, const NoiseParams& noise, Rng& rng) {
    if (copies < 0) throw std::invalid_argument("augment: copies must be nonnegative");
    Dataset out;
    out.meta = d.meta;
    out.samples.reserve(d.samples.size() * static_cast<std::size_t>(copies + 1));
    out.samples = d.samples;
    for (int c = 0; c < copies; ++c) {
        for (const auto& s : d.samples) out.samples.push_back(add_noise(s, noise, rng));
    }
    return out;
}

std::pair<Dataset, Dataset> split(const Dataset& d, double test_fraction, std::uint64_t seed) {
    if (d.samples.empty()) throw std::invalid_argument("split: dataset is empty");
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw std::invalid_argument("split: test fraction must lie in (0,1)");
    }
    const std::size_t n = d.samples.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    // Fisher-Yates with our own bounded draw: the shuffle must not depend
    // on std::shuffle internals.
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.index(i + 1)]);
    }

    const auto n_test = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(n)));
    Dataset train, test;
    train.meta = d.meta;
    test.meta = d.meta;
    test.samples.reserve(n_test);
    train.samples.reserve(n - n_test);
    for (std::size_t i = 0; i < n; ++i) {
        (i < n_test ? test : train).samples.push_back(d.samples[order[i]]);
    }
    return {std::move(train), std::move(test)};
}

void save(const Dataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // '\n' endings on every platform
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "# seed=" << d.meta.seed << " config=" << d.meta.config_fingerprint
        << " n=" << d.samples.size() << "\n";
    out << expected_header() << "\n";
    std::string line;
    for (const auto& s : d.samples) {
        line.clear();
        append_number(line, s.t);
        for (int i = 0; i < kInputSize; ++i) {
            line += ',';
            append_number(line, s.z[i]);
        }
        line += ',';
        append_number(line, s.y.x());
        line += ',';
        append_number(line, s.y.y());
        out << line << "\n";
    }
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Dataset load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    Dataset d;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    const std::string header = expected_header();
    const std::size_t n_fields = 1 + kInputSize + 2;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream meta(line.substr(1));
            std::string tok;
            while (meta >> tok) {
                if (tok.rfind("seed=", 0) == 0) d.meta.seed = std::strtoull(tok.c_str() + 5, nullptr, 10);
                if (tok.rfind("config=", 0) == 0) d.meta.config_fingerprint = tok.substr(7);
            }
            continue;
        }
        if (!header_seen) {
            if (line != header) {
                throw ParseError("line " + std::to_string(line_no) + ": unexpected header");
            }
            header_seen = true;
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != n_fields) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n_fields) + " fields, got " +
                             std::to_string(fields.size()));
        }
        TrainingSample s;
        s.t = parse_field(fields[0], line_no);
        for (int i = 0; i < kInputSize; ++i) {
            s.z[i] = parse_field(fields[static_cast<std::size_t>(1 + i)], line_no);
        }
        s.y.x() = parse_field(fields[n_fields - 2], line_no);
        s.y.y() = parse_field(fields[n_fields - 1], line_no);

        for (int i = 0; i < kRangeEntries; ++i) {
            if (!(s.z[i] >= 0.0 && s.z[i] <= kSentinelRange)) {
                throw ParseError("line " + std::to_string(line_no) + ": range entry " +
                                 std::to_string(i + 1) + " outside [0, 2]");
            }
        }
        d.samples.push_back(std::move(s));
    }
    if (!header_seen) throw ParseError("line " + std::to_string(line_no) + ": missing header");
    return d;
}

InputVector normalize(const InputVector& z) {
    InputVector out;
    for (int i = 0; i < kRangeEntries; ++i) out[i] = z[i] / kSentinelRange;
    for (int i = kRangeEntries; i < kInputSize; ++i) {
        out[i] = std::clamp(z[i] / kPi, -1.0, 1.0);
    }
    return out;
}

InputVector denormalize(const InputVector& z) {
    InputVector out;
    for (int i = 0; i < kRangeEntries; ++i) out[i] = z[i] * kSentinelRange;
    for (int i = kRangeEntries; i < kInputSize; ++i) out[i] = z[i] * kPi;
    return out;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> to_matrices(const Dataset& d, bool normalized) {
    const auto n = static_cast<Eigen::Index>(d.samples.size());
    Eigen::MatrixXd Z(kInputSize, n);
    Eigen::MatrixXd Y(2, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = d.samples[static_cast<std::size_t>(i)];
        Z.col(i) = normalized ? normalize(s.z) : s.z;
        Y.col(i) = s.y;
    }
    return {std::move(Z), std::move(Y)};
}

}  // namespace ringsense::dataset
