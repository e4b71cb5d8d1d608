#pragma once

#include <string>
#include <vector>

#include "faithcheck/exec.hpp"
#include "faithcheck/rng.hpp"

#include "json.hpp"

namespace faithcheck {

// A fully enumerated explanation system: point masses, predictions,
// explanation keys, and (optionally) an explicit applicability matrix.
// When no matrix is supplied the relation defaults to key equality, so every
// consistency computation doubles as a sufficiency computation.
class FiniteSystem {
public:
    struct Point {
        std::string id;
        double mass = 0.0;
        std::string label;
        std::string key;
    };

    // Throws ValidationError unless masses are positive and sum to 1 within
    // 1e-12 and, when a matrix is given, every point is covered by its own
    // key (A(x, e(x)) must hold).
    static FiniteSystem build(std::vector<Point> points);
    static FiniteSystem build(std::vector<Point> points,
                              std::vector<std::vector<std::string>> covered_ids_per_key,
                              const std::vector<std::string>& key_order);

    static FiniteSystem from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    int num_points() const { return static_cast<int>(masses_.size()); }
    int num_keys() const { return static_cast<int>(keys_.size()); }
    int num_labels() const { return static_cast<int>(labels_.size()); }
    bool has_matrix() const { return !matrix_.empty(); }

    const std::vector<std::string>& keys() const { return keys_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& point_id(int p) const { return ids_[p]; }
    double mass(int p) const { return masses_[p]; }
    int key_of(int p) const { return key_of_[p]; }
    int label_of(int p) const { return label_of_[p]; }

    // A(point, key); equality relation when no matrix was supplied.
    bool applies(int point, int key) const {
        return matrix_.empty() ? key_of_[point] == key
                               : matrix_[static_cast<size_t>(point) * keys_.size() + key] != 0;
    }

    // p(pi): mass of the points whose explanation is `key`.
    double key_mass(int key) const { return key_mass_[key]; }
    // q(pi): mass of the points the relation accepts for `key`.
    double relation_mass(int key, bool applicability) const;
    // q(y|pi): label distribution over the points the relation accepts.
    double label_given_key(int key, int label, bool applicability) const;

    // i.i.d. point indices under the mass distribution.
    std::vector<int> sample(int n, Rng& rng) const;

private:
    std::vector<std::string> ids_;
    std::vector<double> masses_;
    std::vector<int> key_of_;
    std::vector<int> label_of_;
    std::vector<std::string> keys_;
    std::vector<std::string> labels_;
    std::vector<uint8_t> matrix_;  // row-major [point][key]; empty = equality
    std::vector<double> key_mass_;

    void finish();
};

}  // namespace faithcheck
