#include <spi/blackbox.hpp>

#include <spi/errors.hpp>

#include <array>
#include <utility>

namespace spi {

BlackBox::BlackBox(int arity, EvalFn fn)
    : arity_(arity),
      fn_(std::move(fn)),
      probes_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (arity_ < 1) throw InvalidArgument("BlackBox: arity must be >= 1");
  if (!fn_) throw InvalidArgument("BlackBox: empty evaluation function");
}

Rational BlackBox::operator()(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw InvalidArgument("BlackBox: point arity mismatch");
  probes_->fetch_add(1, std::memory_order_relaxed);
  return fn_(point);
}

Rational BlackBox::operator()(const Rational& x) const {
  std::array<Rational, 1> point{x};
  return (*this)(std::span<const Rational>(point));
}

}  // namespace spi
