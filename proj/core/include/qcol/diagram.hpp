#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcol/laurent.hpp"

namespace qcol {

enum class CrossingSign { positive, negative };

/// One crossing in the arc enumeration where the under-in arc of crossing k
/// is arc k and the under-out arc is arc (k mod N)+1.  positive generates the
/// row m*X_k + (1-m)*X_over - X_{k+1}; negative the m^-1 variant.
struct Crossing {
    int index = 0;  // 1-based
    CrossingSign sign = CrossingSign::positive;
    int over_arc = 0;
};

class KnotDiagram {
  public:
    KnotDiagram() = default;
    KnotDiagram(std::string name, std::vector<Crossing> crossings)
        : name_(std::move(name)), crossings_(std::move(crossings)) {}

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(crossings_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    /// Census text format:
    ///   knot <name>
    ///   crossings <N>
    ///   <+|-> <over_arc>     (N lines)
    /// '#' starts a comment. Throws parse_error (with line number) on syntax
    /// errors and on validation failures.
    static KnotDiagram parse(std::string_view text);
    std::string serialize() const;

  private:
    std::string name_;
    std::vector<Crossing> crossings_;
};

/// Empty iff all diagram invariants hold; each violation names the crossing
/// and the rule it breaks.
std::vector<std::string> validate_diagram(const KnotDiagram& d);

}  // namespace qcol
