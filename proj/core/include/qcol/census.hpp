#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcol/colmatrix.hpp"
#include "qcol/diagram.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

enum class CensusKind { type_one, type_two, block, diagram };

std::string to_string(CensusKind k);

struct TypeOneData {
    LaurentPoly alex;
};

struct TypeTwoData {
    LaurentPoly alpha1, beta1, alpha2;
};

struct BlockData {
    std::array<std::array<LaurentPoly, 2>, 2> block;
    std::optional<LaurentPoly> alexander;  // present for the nine non-factorizable knots
    // full relevant rows as printed in the source, when given (9_35 only)
    std::optional<std::array<std::array<LaurentPoly, 3>, 2>> printed_rows;
};

struct CensusEntry {
    std::string name;
    CensusKind kind = CensusKind::type_one;
    std::string source;

    std::optional<TypeOneData> type_one;
    std::optional<TypeTwoData> type_two;
    std::optional<BlockData> block;
    std::optional<KnotDiagram> diagram;
};

struct KnotPairQuandle {
    std::string type_one, type_two;
    long long m = 0, n = 0;
};

/// The bundled machine-readable tables plus diagrams, loaded once.
class Census {
  public:
    static Census load(const std::filesystem::path& dir);

    /// Exact-name lookup preferring table entries (type I, then type II, then
    /// block data) over diagrams; nullptr when absent.
    const CensusEntry* lookup(const std::string& name) const;
    const CensusEntry* lookup(const std::string& name, CensusKind kind) const;

    const std::vector<CensusEntry>& entries() const { return entries_; }
    std::vector<const CensusEntry*> of_kind(CensusKind kind) const;

    const std::vector<std::vector<std::string>>& same_alex_groups() const {
        return same_alex_groups_;
    }
    const std::vector<KnotPairQuandle>& distinguished_pairs() const {
        return distinguished_pairs_;
    }
    const std::vector<std::pair<std::string, std::string>>& conjectured_pairs() const {
        return conjectured_pairs_;
    }

  private:
    std::vector<CensusEntry> entries_;
    std::map<std::pair<std::string, CensusKind>, size_t> index_;
    std::vector<std::vector<std::string>> same_alex_groups_;
    std::vector<KnotPairQuandle> distinguished_pairs_;
    std::vector<std::pair<std::string, std::string>> conjectured_pairs_;
};

/// Matrix carrying exactly the information of a census entry:
///   type I  -> [[a, -a], [0, 0]]
///   type II -> [[a1, b1, -(a1+b1)], [0, a2, -a2], [0, 0, 0]]
///   block   -> the two relevant rows closed by row sums, plus a zero row
///   diagram -> the colouring matrix of the diagram
ColouringMatrix canonical_matrix(const CensusEntry& e);

/// Data directory resolution: explicit argument, then QCOL_DATA_DIR, then
/// ./data relative to the current directory.
std::filesystem::path resolve_data_dir(const std::string& cli_override = "");

}  // namespace qcol
