// Solves the level-1 problem with corner data (0, e, 1) by both methods and
// prints the three interior values next to the closed form.

#include <cstdio>

#include "gasket/gasket.hpp"

int main() {
    using namespace gasket;
    const auto g = build_graph(1);
    const Vertex q12 = Vertex::make(1, 1, 0, 1), q13 = Vertex::make(1, 0, 1, 1), q23 = Vertex::make(0, 1, 1, 1);

    std::printf("%6s  %-8s %10s %10s %10s   %10s %10s\n", "e", "method", "u(q12)", "u(q13)", "u(q23)", "formula12",
                "formula23");
    for (int i = 0; i <= 10; ++i) {
        const double e = 0.05 * i;
        // e < 1/3: the pair (q2, q3) is steepest once q13 is fixed
        const double f12 = e < 1.0 / 3.0 ? (1.0 + e) / 4.0 : 1.0 / 3.0;
        const double f23 = e < 1.0 / 3.0 ? (1.0 + e) / 2.0 : 2.0 / 3.0;
        for (auto m : {Method::iterate, Method::lazarus}) {
            const auto u = solve(full_problem(g, {0.0, e, 1.0}), m).field;
            std::printf("%6.3f  %-8s %10.6f %10.6f %10.6f   %10.6f %10.6f\n", e, to_string(m), u.at(q12), u.at(q13),
                        u.at(q23), f12, f23);
        }
    }
}
