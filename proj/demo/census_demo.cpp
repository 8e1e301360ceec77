// Loads a point set, prints its census, then compresses one lattice point
// and shows the gap identity holding exactly.

#include <iostream>

#include "erdos/erdos.hpp"

int main(int argc, char** argv) {
  using namespace erdos;
  const PointSet ps = argc > 1 ? load_point_set(argv[1]) : generate_grid(3, 2);
  const CensusResult c = census(ps);
  std::cout << ps.label() << ": " << c.n_points << " points, " << c.distinct_count << " distinct distances, "
            << c.unit_pair_count << " unit pairs\n";

  const auto v = RationalVector::from_integers({1, 2, 3});
  const Scale m(1);
  std::cout << "compress(" << v.to_string() << ") = " << compress(v, m).to_string() << '\n'
            << "gap^2 direct   = " << format_rational(gap_squared(v, m)) << '\n'
            << "gap^2 identity = " << format_rational(gap_squared_via_identity(v, m)) << '\n';
}
