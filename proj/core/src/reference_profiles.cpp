#include "scx/reference_profiles.hpp"

#include "scx/profile_io.hpp"

namespace scx::reference {

Profile example2_r1() {
  return parse_profile(R"(3 5
# alternatives: x1 x2 x3
x1 x1 x2 x3 x3
x2 x2 x3 x2 x2
x3 x3 x1 x1 x1
)");
}

Profile example2_r2() {
  return parse_profile(R"(3 5
# alternatives: x1 x2 x3
x1 x1 x2 x2 x2
x2 x2 x3 x3 x3
x3 x3 x1 x1 x1
)");
}

Profile note_pair_profile() {
  return parse_profile(R"(3 3
# alternatives: x y z
x x y
y y x
z z z
)");
}

Profile note_giia_r() {
  return parse_profile(R"(3 3
# alternatives: x y z
x x y
y y z
z z x
)");
}

Profile note_giia_r_prime() {
  return parse_profile(R"(3 3
# alternatives: x y z
x x z
y y y
z z x
)");
}

Profile example3_r() {
  return parse_profile(R"(4 4
# alternatives: x y z w
x x y z
y y w w
z z x x
w w z y
)");
}

Profile example3_r_prime() {
  return parse_profile(R"(4 4
# alternatives: x y z w
x x w w
y y y z
z z x x
w w z y
)");
}

Profile prop2_r1() {
  return parse_profile(R"(3 6
# alternatives: x y z
x x x z y y
z z z y z x
y y y x x z
)");
}

Profile prop2_r2() {
  return parse_profile(R"(3 6
# alternatives: x y z
x x z z y y
y y x y z z
z z y x x x
)");
}

Profile example4_r() {
  return parse_profile(R"(3 7
# alternatives: x y z
x x x y y z z
y y y z z y y
z z z x x x x
)");
}

Profile example4_r_prime() {
  return parse_profile(R"(3 7
# alternatives: x y z
x x x y y y y
y y y z z z z
z z z x x x x
)");
}

Profile example5() {
  return parse_profile(R"(4 5
# alternatives: x y z w
x x y z w
y y z w z
w z w y y
z w x x x
)");
}

Profile example6() {
  return parse_profile(R"(4 5
# alternatives: x y z w
x x x z w
y y y y y
w w w w z
z z z x x
)");
}

}  // namespace scx::reference
