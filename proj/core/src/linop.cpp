#include "wmp/linop.hpp"

#include <stdexcept>
#include <utility>

namespace wmp {

LinOp xy_transfer_exp(const std::function<FieldElem(int)>& c) {
  return [c](const MultiSym& f) {
    const int l = f.l();
    return f.subst_generators([&](const Gen& g) {
      if (g.alphabet == Alphabet::X) return MultiSym::generator(l, g);
      Gen xg{Alphabet::X, g.color, g.degree};
      return MultiSym::generator(l, g) +
             MultiSym::generator(l, xg).scaled(c(g.degree));
    });
  };
}

LinOp bidegree_scale(const std::function<FieldElem(int, int)>& scale) {
  return [scale](const MultiSym& f) { return f.scale_by_bidegree(scale); };
}

LinOp compose(std::vector<LinOp> ops) {
  return [ops = std::move(ops)](const MultiSym& f) {
    MultiSym r = f;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = (*it)(r);
    return r;
  };
}

MultiSym apply_linop(const LinOp& op, const MultiSym& f, int max_deg) {
  if (f.max_x_degree() > max_deg || f.max_y_degree() > max_deg)
    throw std::invalid_argument("linop: input exceeds the truncation bound");
  return op(f);
}

} // namespace wmp
