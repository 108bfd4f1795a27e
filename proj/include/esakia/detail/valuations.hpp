#pragma once

namespace esakia {

template <class Visit>
bool for_each_valuation(const UpsetLattice& l, const std::vector<std::string>& vars, Visit&& visit) {
  std::vector<std::size_t> digits(vars.size(), 0);
  for (;;) {
    std::map<std::string, Mask> assign;
    for (std::size_t i = 0; i < vars.size(); ++i) assign.emplace(vars[i], l.members()[digits[i]]);
    if (!visit(Valuation(l.base(), std::move(assign)))) return false;
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == l.size()) digits[k++] = 0;
    if (k == digits.size()) return true;
  }
}

}  // namespace esakia
