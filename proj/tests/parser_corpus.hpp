#pragma once

#include <string>
#include <vector>

// Round-trip corpus: every production of the grammar appears at least once,
// including the z* / w* aliases, negative and parenthesised exponents,
// nested calls, every function, and equalities.
inline const std::vector<std::string>& parser_corpus() {
  static const std::vector<std::string> corpus = {
      "0",
      "42",
      "123456789012345678901234567890",
      "q",
      "x",
      "y",
      "z",
      "zs",
      "z*",
      "w",
      "ws",
      "w*",
      "v",
      "-x",
      "--z",
      "-(x + z)",
      "x + z",
      "x - z - zs",
      "x - (z - zs)",
      "x * z * zs",
      "x * (z * zs)",
      "x / q",
      "x / q / 2",
      "x / (q / 2)",
      "z^3",
      "z^-2",
      "z^(-2)",
      "(z + x)^2",
      "(x^2)^3",
      "-x^2",
      "(-x)^2",
      "q^2 * z * x",
      "x * -z",
      "1 + -x",
      "2^-1 * q",
      "(q^2 + 1) / (q^4 + 1)",
      "z* - x",
      "z*^2 * z^2",
      "w* * w",
      "d(z)",
      "d(d(x))",
      "d(z) == zs * w",
      "star(x * z)",
      "sigma(z)",
      "sigma(zs^2, 2)",
      "sigma(z, -1)",
      "del(x^3)",
      "delbar(zs)",
      "deg(w)",
      "proj(x * z + zs^2)",
      "integral(x^2)",
      "reduce(x * zs^2)",
      "div2(z^2, 0)",
      "div2(x, zs^2 + q * z)",
      "w * ws == ws * w",
      "zs * z == 1 - q^2 * x",
      "integral(div2(z^2, x)) == 0",
      "d(z^2 * zs) == d(z^2) * zs + z^2 * d(zs)",
      "star(d(w)) == d(star(w))",
      "(((x)))",
      "x*z",
      "  x +\n  z  ",
      "y * star(y) == (1 - x) * (1 - q^-2 * x)",
  };
  return corpus;
}
