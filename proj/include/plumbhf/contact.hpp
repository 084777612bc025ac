#pragma once

#include "plumbhf/analysis.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace plumbhf {

struct SteinData {
    std::vector<int> rotations;
};

class ParityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotStein : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedOperation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CharVector chern_from_rotations(const SteinData& s, const PlumbingGraph& g);

struct InvariantLocation {
    CharVector chern;
    int spinc_id = -1;
    int level = 0;           // (grading - d) / 2
    int label = -1;          // ladder label at that level
    int generator = -1;      // global id of the oldest generator in the class
    int u_power = 0;         // class = u^{u_power}(generator)
    bool is_generator = false;
    Rational degree;
    Rational d3;
    Rational grading;
};

InvariantLocation locate_invariant(const CharVector& k, const Analysis& a);

enum class PlanarVerdict { Obstructed, NoObstruction };

struct PlanarResult {
    PlanarVerdict verdict = PlanarVerdict::NoObstruction;
    bool grading_clause = false;  // d3 != -d - 1/2
    bool rank_clause = false;     // rank HF+ at d > 1
    int rank_at_d = 0;
    std::string reason;
};

PlanarResult planar_obstruction(const InvariantLocation& loc, const Analysis& a);

struct SigmaResult {
    bool neg_infinity = false;
    int value = 0;
    int k0 = 1;
    int depth = 0;                 // model depth used
    std::vector<char> membership;  // membership[k]: K* in Im U^k, k = 0..
};

// Stabilization bound: past the top of the reduced part only the tower remains.
int sigma_bound(const InvariantLocation& loc, const Analysis& a);
// Depth a model needs to decide membership up to k.
int sigma_depth(const InvariantLocation& loc, int k);

// Is the dual of model class c in the image of U^k? (F_2 solve)
bool in_image_of_u_power(const FiniteModel& model, int c, int k);

SigmaResult sigma_in_model(const InvariantLocation& loc, const FiniteModel& model, int k0);
SigmaResult sigma(const InvariantLocation& loc, const Analysis& a);

struct ContactReport {
    InvariantLocation location;
    PlanarResult planar;
    SigmaResult sigma;
};

ContactReport contact_report(const CharVector& chern, const Analysis& a);

std::string to_string(PlanarVerdict v);

}  // namespace plumbhf
