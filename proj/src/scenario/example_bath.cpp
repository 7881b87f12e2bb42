#include "qbath/scenario/example_bath.hpp"

#include <sstream>

namespace qbath {

ExampleBathBlocks example_bath_blocks(const ExampleBathParams& p) {
  constexpr cplx kI{0.0, 1.0};
  const ComplexMatrix a{{1.0, -kI * p.a, 0.0}, {kI * p.a, 1.0, 0.0}, {0.0, 0.0, 0.0}};
  const ComplexMatrix b = ComplexMatrix::diagonal({p.b, -p.b, 0.0});
  return {a, b, a};
}

KossakowskiMatrix example_bath(const ExampleBathParams& p, bool allow_non_cp) {
  if (!allow_non_cp && !p.cp_valid()) {
    std::ostringstream msg;
    msg << "example bath (a, b) = (" << p.a << ", " << p.b << ") lies outside a^2 + b^2 <= 1";
    throw CpViolation(msg.str());
  }
  const auto blocks = example_bath_blocks(p);
  return KossakowskiMatrix::unchecked(blocks.a, blocks.b, blocks.c);
}

GeneratorConfig example_bath_config(const ExampleBathParams& p) {
  const auto blocks = example_bath_blocks(p);
  GeneratorConfig cfg;
  cfg.a = ComplexBlock::from(blocks.a);
  cfg.b = ComplexBlock::from(blocks.b);
  cfg.c = ComplexBlock::from(blocks.c);
  return cfg;
}

}  // namespace qbath
