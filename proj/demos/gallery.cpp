// Prints a tour of norm balls: the six shapes realized by small links, a
// satellite composition, and the face-count tower. Build and run:
//
//   cmake --build build --target gallery && ./build/gallery

#include <cstdio>
#include <string>
#include <vector>

#include "tnorm/contfrac.hpp"
#include "tnorm/diagram.hpp"
#include "tnorm/fraction.hpp"
#include "tnorm/satellite.hpp"
#include "tnorm/thurston_ball.hpp"

using namespace tnorm;

namespace {

std::string rays_text(const BallClassification& cls) {
    if (cls.rays.empty()) return "(none)";
    std::string out;
    for (const Fraction& r : cls.rays) {
        if (!out.empty()) out += ", ";
        out += r.str();
    }
    return out;
}

void print_ball_row(const Fraction& f) {
    RationalDiagram d = RationalDiagram::from_fraction(f);
    VertexNorms v = vertex_norms(d);
    BallClassification cls = classify(d);
    std::printf("  %-6s  x(l1)=%-2s x(l1+l2)=%-2s x(l1-l2)=%-2s  %d faces  %-24s rays: %s\n",
                f.str().c_str(), v.x10.str().c_str(), v.x11.str().c_str(),
                v.x1m1.str().c_str(), cls.faces, cls.shape.c_str(), rays_text(cls).c_str());
}

} // namespace

int main() {
    std::printf("Thurston norm balls of two-bridge link exteriors\n\n");

    std::printf("The six shapes, smallest witnesses first:\n");
    for (long long q : {2, 4, 16, 24, 14}) {
        if (q == 16) print_ball_row(Fraction(7, 16));
        else if (q == 24) {
            print_ball_row(Fraction(7, 24));
            print_ball_row(Fraction(5, 24));
        } else if (q == 14) print_ball_row(Fraction(5, 14));
        else print_ball_row(Fraction(1, q));
    }

    std::printf("\nA satellite composition, mirrored 5/14 against itself:\n");
    NormBall hex = build_ball(RationalDiagram(positive_cf(Fraction(5, 14)), true));
    SatelliteInput in{hex, Int(3), hex, Int(3)};
    NormBall composed = satellite_ball(in);
    std::printf("  rays:");
    for (const Fraction& r : rays_of(composed)) std::printf(" %s", r.str().c_str());
    std::printf("   (%d faces, %s)\n", face_count(composed), shape_of(composed).c_str());

    std::printf("\nBalls with any prescribed even face count:\n");
    for (int n : {0, 1, 2, 3, 4, 8, 12}) {
        FaceCountResult r = ball_with_face_count(n);
        std::printf("  %2d faces  %s\n", face_count(r.ball), r.provenance.c_str());
    }
    return 0;
}
