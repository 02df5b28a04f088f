#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynpal/types.hpp"

namespace dynpal {

// Geometric size classes with integer thresholds:
//   t_0 = 1,  t_{i+1} = t_i + max(1, floor(t_i / 8)).
// Class i holds lengths in [t_i, t_{i+1}). The within-class ratio never
// exceeds 9/8, i.e. the growth factor is at most 1 + 1/8. The probe window of
// class i is w_i = max(1, floor(t_i / 8)) start positions.
class ClassSchedule {
public:
    ClassSchedule() = default;

    explicit ClassSchedule(Pos max_length) : max_length_(max_length) {
        Pos t = 1;
        thresholds_.assign(1, t);
        while (t <= max_length) {
            t += step(t);
            thresholds_.push_back(t);
        }
    }

    static constexpr Pos step(Pos t) { return std::max<Pos>(1, t / 8); }

    Pos max_length() const { return max_length_; }

    // Number of classes covering lengths 1..max_length.
    int num_classes() const { return static_cast<int>(thresholds_.size()) - 1; }

    Pos threshold(int i) const { return thresholds_.at(static_cast<std::size_t>(i)); }
    Pos window(int i) const { return step(threshold(i)); }

    // Unique i with t_i <= length < t_{i+1}.
    int class_of(Pos length) const {
        if (length < 1 || length > max_length_) {
            throw std::out_of_range("length " + std::to_string(length) + " outside [1.." +
                                    std::to_string(max_length_) + "]");
        }
        auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), length);
        return static_cast<int>(it - thresholds_.begin()) - 1;
    }

    const std::vector<Pos>& thresholds() const { return thresholds_; }

private:
    Pos max_length_ = 0;
    std::vector<Pos> thresholds_{1};
};

}  // namespace dynpal
