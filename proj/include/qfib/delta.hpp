#pragma once

#include <string>
#include <vector>

#include "qfib/rational.hpp"

namespace qfib {

/// A finite group acting by permutations on the geometric components of one
/// codimension-one fiber. Permutations are image lists on {0..degree-1} and
/// must include the identity explicitly.
struct ComponentAction {
    std::string label;
    int degree = 0;
    std::vector<std::vector<int>> elements;
    bool inferred = false; // preset data asserted rather than derived
};

/// Fibers of one fibration over the codimension-one points with potentially
/// non-split fibers; omitted points contribute delta_D = 1.
struct FibrationData {
    std::string name;
    std::vector<ComponentAction> fibers;
};

/// Group axioms: well-formed permutations, no duplicates, identity present,
/// closed under composition and inverses. Malformed permutations (wrong
/// length, out-of-range or repeated images) throw std::invalid_argument.
bool validate_group(const ComponentAction& action);

/// Fraction of group elements acting with at least one fixed point.
Rational delta_fiber(const ComponentAction& action);

/// Delta = sum over fibers of (1 - delta_D).
Rational delta_total(const FibrationData& data);

/// Built-in fiber data: "pi", "pi-tilde", "eta-tilde", "anti-diagonal-line".
/// Unknown names throw std::out_of_range.
FibrationData preset(const std::string& name);

/// JSON wire format:
/// { "name": str, "fibers": [ { "label": str, "degree": int,
///   "elements": [[int,...],...] } ] }
FibrationData fibration_from_json_text(const std::string& text);
std::string fibration_to_json_text(const FibrationData& data);
FibrationData load_fibration_file(const std::string& path);

} // namespace qfib
