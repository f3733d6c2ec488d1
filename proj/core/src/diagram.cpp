#include "qcol/diagram.hpp"

#include <sstream>

namespace qcol {

namespace {

std::string strip(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw parse_error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

KnotDiagram KnotDiagram::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::string name;
    long long declared = -1;
    std::vector<Crossing> crossings;

    enum { want_knot, want_count, want_crossing } state = want_knot;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        switch (state) {
            case want_knot: {
                std::string kw;
                ls >> kw >> name;
                if (kw != "knot" || name.empty()) fail(lineno, "expected 'knot <name>'");
                state = want_count;
                break;
            }
            case want_count: {
                std::string kw;
                ls >> kw >> declared;
                if (kw != "crossings" || ls.fail()) fail(lineno, "expected 'crossings <N>'");
                if (declared < 1) fail(lineno, "crossing count must be >= 1");
                state = want_crossing;
                break;
            }
            case want_crossing: {
                if (static_cast<long long>(crossings.size()) == declared)
                    fail(lineno, "more crossing lines than declared");
                std::string sign;
                std::string over_kw;
                long long over = 0;
                ls >> sign;
                // accept both "<+|-> <arc>" and the verbose "<+|-> over <arc>"
                if (!(ls >> over)) {
                    ls.clear();
                    ls >> over_kw;
                    if (over_kw == "over" && (ls >> over)) {
                        // ok
                    } else {
                        fail(lineno, "expected '<+|-> <over_arc>'");
                    }
                }
                if (sign != "+" && sign != "-") fail(lineno, "crossing sign must be '+' or '-'");
                Crossing c;
                c.index = static_cast<int>(crossings.size()) + 1;
                c.sign = sign == "+" ? CrossingSign::positive : CrossingSign::negative;
                if (over < 1 || over > declared)
                    fail(lineno, "over arc " + std::to_string(over) + " out of range [1, " +
                                     std::to_string(declared) + "]");
                c.over_arc = static_cast<int>(over);
                crossings.push_back(c);
                break;
            }
        }
    }
    if (state != want_crossing) throw parse_error("truncated diagram file");
    if (static_cast<long long>(crossings.size()) != declared)
        throw parse_error("declared " + std::to_string(declared) + " crossings, found " +
                          std::to_string(crossings.size()));
    KnotDiagram d(name, std::move(crossings));
    auto violations = validate_diagram(d);
    if (!violations.empty()) throw parse_error("invalid diagram: " + violations.front());
    return d;
}

std::string KnotDiagram::serialize() const {
    std::ostringstream out;
    out << "knot " << name_ << "\n";
    out << "crossings " << size() << "\n";
    for (const Crossing& c : crossings_)
        out << (c.sign == CrossingSign::positive ? '+' : '-') << ' ' << c.over_arc << "\n";
    return out.str();
}

std::vector<std::string> validate_diagram(const KnotDiagram& d) {
    std::vector<std::string> out;
    const int n = d.size();
    if (n < 1) {
        out.push_back("diagram has no crossings");
        return out;
    }
    for (int i = 0; i < n; ++i) {
        const Crossing& c = d.crossings()[i];
        if (c.index != i + 1)
            out.push_back("crossing at position " + std::to_string(i + 1) + " has index " +
                          std::to_string(c.index) + " (indices must be 1.." +
                          std::to_string(n) + " in order)");
        if (c.over_arc < 1 || c.over_arc > n)
            out.push_back("crossing " + std::to_string(i + 1) + ": over arc " +
                          std::to_string(c.over_arc) + " out of range [1, " +
                          std::to_string(n) + "]");
    }
    return out;
}

}  // namespace qcol
