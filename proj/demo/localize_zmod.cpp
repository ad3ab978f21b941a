// Localize Z/12 at every denominator set and list the minimal primes on both sides.

#include <iostream>

#include "locprime/localization.hpp"

using namespace locprime;

int main() {
  RingPtr r = make_zmod(12);
  std::cout << "min primes of Z/12:";
  for (const auto& p : min_primes(r)) std::cout << " " << describe_ideal(p);
  std::cout << "\n";
  for (const auto& s : enumerate_mult_sets(r)) {
    OreClass c = classify_set(s);
    if (!c.left_den) continue;
    Localization l = localize(s);
    std::cout << s.members.to_string() << " -> order " << l.target->order() << ", ass " << describe_ideal(l.ass)
              << ", min_RS";
    for (const auto& p : min_RS(min_primes(r), s)) std::cout << " " << describe_ideal(p);
    std::cout << "\n";
  }
}
