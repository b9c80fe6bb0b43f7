#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace klucb {

// Exploration level f(t) used as epsilon = f(t)/N in the index computations.
// All schedules are nonnegative and nondecreasing for t >= 1.
class ExplorationSchedule {
 public:
  enum class Kind {
    kLogT,             // f(t) = log t
    kLogPlus3LogLog,   // f(t) = log t + 3 log log t for t >= 3, f(1)=f(2)=f(3)
    kLogPlusLogLog,    // f(t) = log t + log log t for t >= 2, clamped below 2
    kConstantLevel,    // f(t) = level
  };

  static ExplorationSchedule log_t() { return {Kind::kLogT, 0.0}; }
  static ExplorationSchedule log_plus_3loglog() {
    return {Kind::kLogPlus3LogLog, 0.0};
  }
  static ExplorationSchedule log_plus_loglog() {
    return {Kind::kLogPlusLogLog, 0.0};
  }
  static ExplorationSchedule constant(double level) {
    return {Kind::kConstantLevel, level};
  }

  Kind kind() const { return kind_; }
  double level() const { return level_; }

  double value(std::int64_t t) const {
    if (t < 1) t = 1;
    const double td = static_cast<double>(t);
    switch (kind_) {
      case Kind::kLogT:
        return std::max(0.0, std::log(td));
      case Kind::kLogPlus3LogLog: {
        const double tc = td < 3.0 ? 3.0 : td;
        const double lt = std::log(tc);
        return lt + 3.0 * std::log(lt);
      }
      case Kind::kLogPlusLogLog: {
        const double tc = td < 2.0 ? 2.0 : td;
        const double lt = std::log(tc);
        return lt + std::log(lt);
      }
      case Kind::kConstantLevel:
        return level_;
    }
    return 0.0;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::kLogT:
        return "logt";
      case Kind::kLogPlus3LogLog:
        return "log3loglog";
      case Kind::kLogPlusLogLog:
        return "logloglog";
      case Kind::kConstantLevel:
        return "const:" + std::to_string(level_);
    }
    return "";
  }

 private:
  ExplorationSchedule(Kind kind, double level) : kind_(kind), level_(level) {}
  Kind kind_;
  double level_;
};

}  // namespace klucb
