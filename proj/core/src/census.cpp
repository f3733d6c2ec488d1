#include "qcol/census.hpp"

#include <cstdlib>
#include <fstream>

#include "qcol/json_io.hpp"

namespace qcol {

using nlohmann::json;

nlohmann::json poly_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        const std::string key = std::to_string(e);
        if (c >= std::numeric_limits<long long>::min() &&
            c <= std::numeric_limits<long long>::max())
            j[key] = c.convert_to<long long>();
        else
            j[key] = c.str();
    }
    return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("polynomial JSON must be an object");
    LaurentPoly p;
    for (const auto& [key, value] : j.items()) {
        const int exp = std::stoi(key);
        Int coeff;
        if (value.is_number_integer())
            coeff = value.get<long long>();
        else if (value.is_string())
            coeff = Int(value.get<std::string>());
        else
            throw parse_error("polynomial coefficient must be an integer or string");
        p.add_term(coeff, exp);
    }
    return p;
}

nlohmann::json matrix_to_json(const ColouringMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.size(); ++j) row.push_back(poly_to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"size", a.size()}, {"column_labels", a.column_labels()}, {"entries", rows}};
}

ColouringMatrix matrix_from_json(const nlohmann::json& j) {
    const int n = j.at("size").get<int>();
    ColouringMatrix a(n);
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw parse_error("matrix row count mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw parse_error("matrix column count mismatch");
        for (int c = 0; c < n; ++c) a.at(i, c) = poly_from_json(rows[i][c]);
    }
    if (j.contains("column_labels")) {
        auto labels = j.at("column_labels").get<std::vector<int>>();
        if (static_cast<int>(labels.size()) != n)
            throw parse_error("column_labels length mismatch");
        a.column_labels() = std::move(labels);
    }
    return a;
}

nlohmann::json count_to_json(const std::string& knot, const CountResult& r) {
    json j{{"knot", knot},
           {"m", r.quandle.m},
           {"n", r.quandle.n},
           {"method", to_string(r.method)}};
    if (r.count <= std::numeric_limits<long long>::max())
        j["count"] = r.count.convert_to<long long>();
    else
        j["count"] = r.count.str();
    return j;
}

std::string to_string(CensusKind k) {
    switch (k) {
        case CensusKind::type_one: return "TypeIData";
        case CensusKind::type_two: return "TypeIIData";
        case CensusKind::block: return "BlockData";
        case CensusKind::diagram: return "DiagramData";
    }
    return "?";
}

namespace {

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path.string());
    try {
        return json::parse(in, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

}  // namespace

Census Census::load(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw parse_error("census data directory not found: " + dir.string());
    Census c;
    auto add = [&c](CensusEntry e) {
        const auto key = std::make_pair(e.name, e.kind);
        if (c.index_.count(key))
            throw parse_error("duplicate census entry " + e.name + " of kind " +
                              to_string(e.kind));
        c.index_[key] = c.entries_.size();
        c.entries_.push_back(std::move(e));
    };

    {
        const auto path = dir / "typeI.json";
        const json j = load_json_file(path);
        const std::string source = j.value("source", "");
        for (const auto& [name, poly] : j.at("entries").items()) {
            CensusEntry e;
            e.name = name;
            e.kind = CensusKind::type_one;
            e.source = source;
            try {
                e.type_one = TypeOneData{poly_from_json(poly)};
            } catch (const std::exception& ex) {
                throw parse_error(path.string() + ": entry " + name + ": " + ex.what());
            }
            add(std::move(e));
        }
    }
    {
        const auto path = dir / "typeII.json";
        const json j = load_json_file(path);
        const std::string source = j.value("source", "");
        for (const auto& [name, obj] : j.at("entries").items()) {
            CensusEntry e;
            e.name = name;
            e.kind = CensusKind::type_two;
            e.source = source;
            try {
                e.type_two = TypeTwoData{poly_from_json(obj.at("alpha1")),
                                         poly_from_json(obj.at("beta1")),
                                         poly_from_json(obj.at("alpha2"))};
            } catch (const std::exception& ex) {
                throw parse_error(path.string() + ": entry " + name + ": " + ex.what());
            }
            add(std::move(e));
        }
    }
    {
        const auto path = dir / "blocks.json";
        const json j = load_json_file(path);
        const std::string source = j.value("source", "");
        for (const auto& [name, obj] : j.at("entries").items()) {
            CensusEntry e;
            e.name = name;
            e.kind = CensusKind::block;
            e.source = source;
            try {
                BlockData b;
                const auto& grid = obj.at("block");
                for (int i = 0; i < 2; ++i)
                    for (int k = 0; k < 2; ++k) b.block[i][k] = poly_from_json(grid.at(i).at(k));
                if (obj.contains("alexander") && !obj.at("alexander").is_null())
                    b.alexander = poly_from_json(obj.at("alexander"));
                if (obj.contains("rows")) {
                    std::array<std::array<LaurentPoly, 3>, 2> rows;
                    for (int i = 0; i < 2; ++i)
                        for (int k = 0; k < 3; ++k)
                            rows[i][k] = poly_from_json(obj.at("rows").at(i).at(k));
                    b.printed_rows = rows;
                }
                e.block = std::move(b);
            } catch (const std::exception& ex) {
                throw parse_error(path.string() + ": entry " + name + ": " + ex.what());
            }
            add(std::move(e));
        }
    }
    if (const auto diagrams = dir / "diagrams"; std::filesystem::is_directory(diagrams)) {
        std::vector<std::filesystem::path> files;
        for (const auto& f : std::filesystem::directory_iterator(diagrams))
            if (f.path().extension() == ".knot") files.push_back(f.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            std::ifstream in(path);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            CensusEntry e;
            e.kind = CensusKind::diagram;
            e.source = path.filename().string();
            try {
                e.diagram = KnotDiagram::parse(text);
            } catch (const std::exception& ex) {
                throw parse_error(path.string() + ": " + ex.what());
            }
            e.name = e.diagram->name();
            add(std::move(e));
        }
    }
    // companion tables (optional files)
    if (const auto path = dir / "same_alex_type_one.json"; std::filesystem::exists(path)) {
        const json doc = load_json_file(path);
        for (const auto& g : doc.at("groups"))
            c.same_alex_groups_.push_back(g.get<std::vector<std::string>>());
    }
    if (const auto path = dir / "distinguished_pairs.json"; std::filesystem::exists(path)) {
        const json doc = load_json_file(path);
        for (const auto& p : doc.at("pairs"))
            c.distinguished_pairs_.push_back(KnotPairQuandle{
                p.at("type_one").get<std::string>(), p.at("type_two").get<std::string>(),
                p.at("m").get<long long>(), p.at("n").get<long long>()});
    }
    if (const auto path = dir / "conjectured_indistinguishable.json";
        std::filesystem::exists(path)) {
        const json doc = load_json_file(path);
        for (const auto& p : doc.at("pairs"))
            c.conjectured_pairs_.emplace_back(p.at(0).get<std::string>(),
                                              p.at(1).get<std::string>());
    }
    return c;
}

const CensusEntry* Census::lookup(const std::string& name) const {
    for (CensusKind k : {CensusKind::type_one, CensusKind::type_two, CensusKind::block,
                         CensusKind::diagram})
        if (const CensusEntry* e = lookup(name, k)) return e;
    return nullptr;
}

const CensusEntry* Census::lookup(const std::string& name, CensusKind kind) const {
    auto it = index_.find(std::make_pair(name, kind));
    return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<const CensusEntry*> Census::of_kind(CensusKind kind) const {
    std::vector<const CensusEntry*> out;
    for (const CensusEntry& e : entries_)
        if (e.kind == kind) out.push_back(&e);
    return out;
}

ColouringMatrix canonical_matrix(const CensusEntry& e) {
    switch (e.kind) {
        case CensusKind::type_one: {
            const LaurentPoly& a = e.type_one->alex;
            ColouringMatrix m(2);
            m.at(0, 0) = a;
            m.at(0, 1) = -a;
            return m;
        }
        case CensusKind::type_two: {
            const TypeTwoData& t = *e.type_two;
            ColouringMatrix m(3);
            m.at(0, 0) = t.alpha1;
            m.at(0, 1) = t.beta1;
            m.at(0, 2) = -(t.alpha1 + t.beta1);
            m.at(1, 1) = t.alpha2;
            m.at(1, 2) = -t.alpha2;
            return m;
        }
        case CensusKind::block: {
            const BlockData& b = *e.block;
            ColouringMatrix m(3);
            for (int i = 0; i < 2; ++i) {
                m.at(i, 0) = b.block[i][0];
                m.at(i, 1) = b.block[i][1];
                m.at(i, 2) = -(b.block[i][0] + b.block[i][1]);
            }
            return m;
        }
        case CensusKind::diagram:
            return build_colouring_matrix(*e.diagram);
    }
    throw std::logic_error("unhandled census kind");
}

std::filesystem::path resolve_data_dir(const std::string& cli_override) {
    if (!cli_override.empty()) return cli_override;
    if (const char* env = std::getenv("QCOL_DATA_DIR"); env && *env) return env;
    return "data";
}

}  // namespace qcol
