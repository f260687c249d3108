#ifndef SPI_BLACKBOX_HPP
#define SPI_BLACKBOX_HPP

#include <spi/numbers.hpp>

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>

namespace spi {

// Evaluation access to an unknown polynomial. Evaluation must be
// deterministic and side-effect-free; the probe counter is the only
// mutable state and is updated atomically, so a box may be probed from
// several threads at once. Copies share the counter.
class BlackBox {
 public:
  using EvalFn = std::function<Rational(std::span<const Rational>)>;

  BlackBox(int arity, EvalFn fn);

  int arity() const { return arity_; }

  Rational operator()(std::span<const Rational> point) const;

  // Univariate convenience.
  Rational operator()(const Rational& x) const;

  std::uint64_t probe_count() const { return probes_->load(); }
  void reset_probe_count() { probes_->store(0); }

 private:
  int arity_;
  EvalFn fn_;
  std::shared_ptr<std::atomic<std::uint64_t>> probes_;
};

}  // namespace spi

#endif
