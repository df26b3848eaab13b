#include "wald/golden_systems.hpp"

#include "wald/errors.hpp"

namespace wald {

namespace {

using T = std::vector<std::pair<std::string, Rational>>;

HandInequality ge(long cd, long cm, T terms) { return {Rational(cd), Rational(cm), std::move(terms)}; }

RatVector ints(std::initializer_list<long> v) {
  RatVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

GoldenSystem make(std::string name, std::vector<std::string> vars, std::vector<HandInequality> ineqs,
                  std::initializer_list<long> mult, Rational bound, bool tight) {
  return {std::move(name), system_from_inequalities(vars, ineqs), ints(mult), bound, tight};
}

std::vector<GoldenSystem> build() {
  std::vector<GoldenSystem> g;
  g.push_back(make("line4-q3", {"p", "q", "r"},
                   {ge(1, 0, {{"p", 3}, {"q", 1}, {"r", 3}}),
                    ge(1, 2, {{"p", 1}, {"r", -1}}),
                    ge(1, 3, {{"r", 1}, {"p", -2}}),
                    ge(1, 4, {{"q", -3}})},
                   {3, 27, 18, 1}, Rational(16, 7), true));
  g.push_back(make("line4-q2", {"k", "p", "q", "r"},
                   {ge(1, 0, {{"k", 1}, {"p", 2}, {"q", 1}, {"r", 2}}),
                    ge(1, 2, {{"k", -1}, {"q", 1}}),
                    ge(1, 3, {{"p", -2}}),
                    ge(1, 4, {{"k", 1}, {"q", -3}}),
                    ge(2, 5, {{"r", -1}})},
                   {1, 2, 1, 1, 2}, Rational(7, 3), true));
  g.push_back(make("line4-q1", {"k", "p", "q", "r"},
                   {ge(1, 0, {{"k", 6}, {"p", 1}, {"q", 1}, {"r", 2}}),
                    ge(2, 5, {{"k", -1}}),
                    ge(1, 2, {{"q", 1}, {"r", -1}}),
                    ge(1, 3, {{"p", -2}}),
                    ge(1, 4, {{"q", -3}, {"r", 2}})},
                   {2, 12, 16, 1, 6}, Rational(17, 7), true));
  g.push_back(make("line4-q0", {"p", "q"},
                   {ge(1, 4, {{"p", 3}, {"q", -3}}),
                    ge(1, 2, {{"p", -1}, {"q", 1}})},
                   {1, 3}, Rational(5, 2), true));
  g.push_back(make("conic6-concurrent", {"p", "q"},
                   {ge(1, 0, {{"p", 3}, {"q", 2}}),
                    ge(1, 3, {{"p", -2}}),
                    ge(1, 3, {{"q", -1}})},
                   {2, 3, 4}, Rational(7, 3), true));
  g.push_back(make("conic6-general-a", {"k"},
                   {ge(2, 5, {{"k", 1}})},
                   {1}, Rational(5, 2), true));
  g.push_back(make("conic6-general-b", {"k", "p", "q"},
                   {ge(1, 0, {{"k", 1}, {"p", 2}, {"q", 2}}),
                    ge(1, 3, {{"k", -2}, {"p", 1}}),
                    ge(2, 5, {{"k", 1}, {"p", -1}}),
                    ge(1, 3, {{"q", -1}})},
                   {1, 3, 5, 2}, Rational(5, 2), true));
  g.push_back(make("conic6-general-c", {"p", "q"},
                   {ge(1, 2, {{"p", -1}, {"q", 1}}),
                    ge(1, 3, {{"q", -1}, {"p", 1}})},
                   {1, 1}, Rational(5, 2), true));
  g.push_back(make("conic7-c2", {"k", "p"},
                   {ge(2, 5, {{"k", -1}, {"p", 1}}),
                    ge(1, 3, {{"k", 2}, {"p", -2}})},
                   {2, 1}, Rational(13, 5), true));
  g.push_back(make("conic7-c1", {"k", "p"},
                   {ge(2, 5, {{"k", -1}, {"p", 1}}),
                    ge(1, 3, {{"k", 5}, {"p", -2}})},
                   {2, 1}, Rational(13, 5), true));
  g.push_back(make("conic7-c0", {"k", "p", "q"},
                   {ge(1, 2, {{"k", 1}, {"p", -1}, {"q", 1}}),
                    ge(2, 7, {{"p", 3}, {"q", -3}})},
                   {3, 1}, Rational(13, 5), true));
  g.push_back(make("cubic9", {"k"},
                   {ge(3, 9, {{"k", 9}, {"k", -9}}),
                    ge(1, 0, {{"k", 3}})},
                   {1, 0}, Rational(3), true));
  g.push_back(make("nine72-1i", {"k", "p", "q", "r"},
                   {ge(1, 0, {{"k", 2}, {"p", 1}, {"q", 2}, {"r", 2}}),
                    ge(2, 7, {{"k", -3}}),
                    ge(1, 4, {{"p", -3}}),
                    ge(1, 3, {{"q", -2}}),
                    ge(1, 3, {{"r", -1}})},
                   {3, 2, 1, 3, 6}, Rational(45, 17), true));
  g.push_back(make("nine72-1ii", {"k", "p", "q", "r"},
                   {ge(1, 0, {{"k", 2}, {"p", 1}, {"q", 2}, {"r", 2}}),
                    ge(2, 7, {{"k", -3}}),
                    ge(1, 4, {{"p", -3}}),
                    ge(1, 3, {{"q", -2}}),
                    ge(1, 3, {{"r", -2}})},
                   {3, 2, 1, 3, 3}, Rational(18, 7), true));
  g.push_back(make("nine72-2", {"k", "p", "q", "r"},
                   {ge(1, 0, {{"k", 2}, {"p", 2}, {"q", 2}, {"r", 2}}),
                    ge(2, 7, {{"k", -3}}),
                    ge(1, 3, {{"p", -1}, {"r", 1}}),
                    ge(1, 3, {{"q", -1}}),
                    ge(1, 3, {{"p", 1}, {"r", -2}})},
                   {3, 2, 18, 6, 12}, Rational(122, 43), true));
  g.push_back(make("nine63-3a", {"k", "p"},
                   {ge(2, 6, {{"k", 4}, {"p", 2}, {"k", -6}}),
                    ge(1, 3, {{"k", 2}, {"p", 1}, {"p", -3}})},
                   {1, 1}, Rational(3), true));
  g.push_back(make("nine63-3b", {"k", "p"},
                   {ge(1, 0, {{"k", 2}, {"p", 1}}),
                    ge(2, 6, {{"k", -2}, {"p", 1}}),
                    ge(1, 4, {{"k", 1}, {"p", -3}})},
                   {5, 7, 4}, Rational(58, 23), true));
  g.push_back(make("nine63-1i", {"k", "p", "q"},
                   {ge(1, 0, {{"k", 2}, {"p", 2}, {"q", 1}}),
                    ge(2, 6, {{"k", -2}}),
                    ge(2, 5, {{"p", -1}, {"q", 1}}),
                    ge(1, 5, {{"p", 1}, {"q", -4}})},
                   {1, 1, 3, 1}, Rational(13, 5), true));
  g.push_back(make("nine63-1ii", {"k", "p", "q"},
                   {ge(1, 0, {{"k", 2}, {"p", 2}, {"q", 1}}),
                    ge(2, 6, {{"k", -2}}),
                    ge(2, 6, {{"p", -2}}),
                    ge(1, 5, {{"q", -4}})},
                   {4, 4, 4, 1}, Rational(53, 21), true));
  g.push_back(make("nine63-2", {"k", "p", "q"},
                   {ge(1, 0, {{"k", 2}, {"p", 2}, {"q", 1}}),
                    ge(2, 6, {{"k", -2}, {"p", 1}}),
                    ge(2, 5, {{"k", 1}, {"p", -1}}),
                    ge(1, 5, {{"q", -4}})},
                   {4, 16, 24, 1}, Rational(13, 5), true));
  g.push_back(make("nine63-3", {"k", "p", "q", "r"},
                   {ge(1, 0, {{"k", 2}, {"p", 1}, {"q", 2}, {"r", 2}}),
                    ge(2, 6, {{"k", -2}}),
                    ge(1, 5, {{"p", -4}}),
                    ge(1, 3, {{"q", -1}}),
                    ge(1, 3, {{"r", -2}})},
                   {4, 4, 1, 8, 4}, Rational(13, 5), true));
  g.push_back(make("nine63-4", {"k", "p", "q", "r", "s"},
                   {ge(1, 0, {{"k", 2}, {"p", 1}, {"q", 2}, {"r", 2}, {"s", 1}}),
                    ge(2, 6, {{"k", -2}}),
                    ge(1, 5, {{"p", -4}}),
                    ge(1, 3, {{"r", -2}}),
                    ge(1, 3, {{"s", -2}}),
                    ge(1, 3, {{"q", -2}})},
                   {4, 4, 1, 4, 2, 4}, Rational(59, 23), true));
  g.push_back(make("nine54", {"k", "p"},
                   {ge(2, 5, {{"k", -1}, {"p", 2}}),
                    ge(1, 4, {{"k", 2}, {"p", -3}})},
                   {2, 1}, Rational(14, 5), false));
  return g;
}

}  // namespace

const std::vector<GoldenSystem>& golden_systems() {
  static const std::vector<GoldenSystem> systems = build();
  return systems;
}

const GoldenSystem& golden_system(const std::string& name) {
  for (const auto& g : golden_systems())
    if (g.name == name) return g;
  throw UnknownFixtureError("no golden system named '" + name + "'");
}

}  // namespace wald
