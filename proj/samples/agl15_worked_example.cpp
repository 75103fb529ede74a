// Walks through AGL(1,5) acting on the ten 2-subsets of F_5: its orbital
// configuration, the outer distribution of u, and the two inner-product
// constants that the exact identity predicts.

#include <cohere/constructions.hpp>
#include <cohere/delsarte.hpp>

#include <iostream>

using namespace cohere;

int main()
{
  const auto fx = agl15_fixture();
  const auto &cc = fx.cc;
  std::cout << "degree " << cc.n() << ", rank " << cc.rank() << ", valencies";
  for (auto k : cc.valencies())
    std::cout << ' ' << k;
  std::cout << "\ncommutative " << cc.is_commutative() << ", stratifiable " << is_stratifiable(cc) << "\n";

  const auto d = outer_distribution(cc, fx.u);
  std::cout << "D(u) coefficients:";
  for (const auto &c : d.coefficients)
    std::cout << ' ' << c;
  std::cout << "\n";

  for (auto [name, y] : {std::pair{"v", &fx.v}, std::pair{"w", &fx.w}}) {
    const auto t = constant_intersection_test(cc, fx.u, *y);
    std::cout << "u." << name << "^g constant: " << t.constant;
    if (t.value)
      std::cout << " (lambda = " << *t.value << ")";
    const auto seen = orbit_inner_products(fx.group, fx.u, *y);
    std::cout << ", enumeration gives " << seen.size() << " distinct value(s)\n";
  }
}
