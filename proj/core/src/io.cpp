#include "klrc/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "klrc/errors.hpp"
#include "klrc/verify.hpp"

namespace klrc {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    Json parsed = Json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        throw Error(ErrorCode::UsageError, "malformed JSON input");
    }
    return parsed;
}

long long coefficient_to_int(const BigInt& value) {
    if (value > BigInt(std::numeric_limits<long long>::max()) ||
        value < BigInt(std::numeric_limits<long long>::min())) {
        throw Error(ErrorCode::CapExceeded, "coefficient exceeds 64-bit JSON range");
    }
    return static_cast<long long>(value);
}

Json laurent_json(const LaurentPoly& p) {
    Json object = Json::object();
    for (const auto& [exponent, coefficient] : p.terms()) {
        object[std::to_string(exponent)] = coefficient_to_int(coefficient);
    }
    return object;
}

LaurentPoly laurent_from(const Json& object) {
    if (!object.is_object()) {
        throw Error(ErrorCode::UsageError, "Laurent polynomial must be a JSON object");
    }
    LaurentPoly result;
    for (const auto& [key, value] : object.items()) {
        long long exponent = 0;
        try {
            exponent = std::stoll(key);
        } catch (const std::exception&) {
            throw Error(ErrorCode::UsageError, "Laurent exponent is not an integer: " + key);
        }
        if (!value.is_number_integer()) {
            throw Error(ErrorCode::UsageError, "Laurent coefficient is not an integer");
        }
        result += LaurentPoly::term(exponent, BigInt(value.get<long long>()));
    }
    return result;
}

Json root_vector_json(const CartanDatum& d, const RootVector& nu) {
    Json object = Json::object();
    for (int i = 0; i < nu.rank(); ++i) {
        if (nu[i] != 0) object[d.label(i)] = nu[i];
    }
    return object;
}

RootVector root_vector_from(const CartanDatum& d, const Json& object) {
    if (!object.is_object()) {
        throw Error(ErrorCode::UsageError, "content must be a JSON object keyed by labels");
    }
    std::vector<int> coords(static_cast<size_t>(d.rank()), 0);
    for (const auto& [key, value] : object.items()) {
        if (!value.is_number_integer()) {
            throw Error(ErrorCode::UsageError, "content coefficient is not an integer");
        }
        const long long c = value.get<long long>();
        if (c < 0) {
            throw Error(ErrorCode::UsageError, "content coefficient is negative");
        }
        coords[static_cast<size_t>(d.index_of(key))] = static_cast<int>(c);
    }
    return RootVector(std::move(coords));
}

Json word_json(const CartanDatum& d, const Word& word) {
    Json array = Json::array();
    for (int vertex : word) array.push_back(d.label(vertex));
    return array;
}

Word word_from(const CartanDatum& d, const Json& array) {
    if (!array.is_array()) {
        throw Error(ErrorCode::UsageError, "word must be a JSON array of labels");
    }
    Word word;
    for (const auto& entry : array) {
        if (!entry.is_string()) {
            throw Error(ErrorCode::UsageError, "word letters must be label strings");
        }
        word.push_back(d.index_of(entry.get<std::string>()));
    }
    return word;
}

Json weight_json(const CartanDatum& d, const DominantWeight& lambda) {
    Json object = Json::object();
    for (int i = 0; i < lambda.rank(); ++i) {
        if (lambda[i] != 0) object[d.label(i)] = lambda[i];
    }
    return object;
}

std::string csv_quote(const std::string& cell) {
    return "\"" + cell + "\"";
}

std::string join_ints(const std::vector<int>& values) {
    std::ostringstream out;
    for (size_t k = 0; k < values.size(); ++k) {
        if (k > 0) out << ",";
        out << values[k];
    }
    return out.str();
}

}  // namespace

std::string datum_to_json(const CartanDatum& d) {
    Json object = Json::object();
    object["labels"] = d.labels();
    Json rows = Json::array();
    for (int i = 0; i < d.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < d.rank(); ++j) row.push_back(d.bilinear(i, j));
        rows.push_back(row);
    }
    object["bilinear"] = rows;
    return object.dump();
}

CartanDatum datum_from_json(const std::string& text) {
    const Json parsed = parse_json(text);
    if (!parsed.is_object() || !parsed.contains("labels") || !parsed.contains("bilinear")) {
        throw Error(ErrorCode::UsageError, "datum JSON needs \"labels\" and \"bilinear\"");
    }
    std::vector<std::string> labels;
    for (const auto& entry : parsed.at("labels")) {
        if (!entry.is_string()) {
            throw Error(ErrorCode::UsageError, "datum labels must be strings");
        }
        labels.push_back(entry.get<std::string>());
    }
    std::vector<std::vector<long long>> bilinear;
    for (const auto& row : parsed.at("bilinear")) {
        std::vector<long long> values;
        for (const auto& entry : row) {
            if (!entry.is_number_integer()) {
                throw Error(ErrorCode::UsageError, "bilinear entries must be integers");
            }
            values.push_back(entry.get<long long>());
        }
        bilinear.push_back(std::move(values));
    }
    return CartanDatum::validate(std::move(labels), std::move(bilinear));
}

std::string read_text_file(const std::string& path) {
    std::ifstream input(path, std::ios::binary);
    if (!input) {
        throw Error(ErrorCode::UsageError, "cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return buffer.str();
}

CartanDatum load_datum(const std::string& path) { return datum_from_json(read_text_file(path)); }

std::string laurent_to_json(const LaurentPoly& p) { return laurent_json(p).dump(); }

LaurentPoly laurent_from_json(const std::string& text) { return laurent_from(parse_json(text)); }

std::string character_to_json(const CartanDatum& d, const Character& ch) {
    Json object = Json::object();
    object["nu"] = root_vector_json(d, ch.nu());
    Json terms = Json::array();
    for (const auto& [word, coefficient] : ch.terms()) {
        Json term = Json::object();
        term["word"] = word_json(d, word);
        term["coeff"] = laurent_json(coefficient);
        terms.push_back(term);
    }
    object["terms"] = terms;
    return object.dump();
}

Character character_from_json(const CartanDatum& d, const std::string& text) {
    const Json parsed = parse_json(text);
    if (!parsed.is_object() || !parsed.contains("nu") || !parsed.contains("terms")) {
        throw Error(ErrorCode::UsageError, "character JSON needs \"nu\" and \"terms\"");
    }
    Character result(root_vector_from(d, parsed.at("nu")));
    for (const auto& term : parsed.at("terms")) {
        result.add_term(word_from(d, term.at("word")), laurent_from(term.at("coeff")));
    }
    return result;
}

Character load_character(const CartanDatum& d, const std::string& path) {
    return character_from_json(d, read_text_file(path));
}

std::string klr_element_to_json(const CartanDatum& d, const KlrElement& element) {
    Json object = Json::object();
    object["nu"] = root_vector_json(d, element.nu());
    Json terms = Json::array();
    for (const auto& [monomial, coefficient] : element.terms()) {
        Json term = Json::object();
        term["word"] = word_json(d, monomial.src);
        Json perm = Json::array();
        for (int t : monomial.psi_word) perm.push_back(t + 1);
        term["perm"] = perm;
        term["dots"] = monomial.dot_powers;
        std::ostringstream stream;
        stream << coefficient;
        term["coeff"] = stream.str();
        terms.push_back(term);
    }
    object["terms"] = terms;
    return object.dump();
}

KlrElement klr_element_from_json(const CartanDatum& d, const std::string& text) {
    const Json parsed = parse_json(text);
    if (!parsed.is_object() || !parsed.contains("nu") || !parsed.contains("terms")) {
        throw Error(ErrorCode::UsageError, "element JSON needs \"nu\" and \"terms\"");
    }
    KlrElement result(root_vector_from(d, parsed.at("nu")));
    for (const auto& term : parsed.at("terms")) {
        PbwMonomial monomial;
        monomial.src = word_from(d, term.at("word"));
        for (const auto& entry : term.at("perm")) {
            monomial.psi_word.push_back(entry.get<int>() - 1);
        }
        monomial.dot_powers = term.at("dots").get<std::vector<int>>();
        if (monomial.dot_powers.size() != monomial.src.size()) {
            throw Error(ErrorCode::UsageError, "dots length must equal the word length");
        }
        Rational coefficient;
        try {
            coefficient = Rational(term.at("coeff").get<std::string>());
        } catch (const std::exception&) {
            throw Error(ErrorCode::UsageError, "coefficient is not a rational string");
        }
        result.add_term(monomial, coefficient);
    }
    return result;
}

KlrElement load_klr_element(const CartanDatum& d, const std::string& path) {
    return klr_element_from_json(d, read_text_file(path));
}

std::string compact_laurent(const LaurentPoly& p) {
    if (p.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exponent, coefficient] : p.terms()) {
        if (!first && coefficient > 0) out << "+";
        first = false;
        if (exponent == 0) {
            out << coefficient;
            continue;
        }
        if (coefficient == -1) {
            out << "-";
        } else if (coefficient != 1) {
            out << coefficient << "*";
        }
        out << "q";
        if (exponent != 1) out << "^" << exponent;
    }
    return out.str();
}

std::string presentation_to_csv(const CyclotomicPresentation& p) {
    LaurentPoly graded;
    for (const auto& [degree, dimension] : p.graded_dimension) {
        graded += LaurentPoly::term(degree, dimension);
    }
    std::ostringstream out;
    out << "nu,lambda,dim,graded_dim\n";
    out << csv_quote(join_ints(p.nu.coefficients())) << ","
        << csv_quote(join_ints(p.lambda.coefficients())) << "," << p.total_dimension << ","
        << compact_laurent(graded) << "\n";
    return out.str();
}

std::string presentation_to_json(const CartanDatum& d, const CyclotomicPresentation& p) {
    Json object = Json::object();
    object["nu"] = root_vector_json(d, p.nu);
    object["lambda"] = weight_json(d, p.lambda);
    object["dim"] = p.total_dimension;
    Json graded = Json::object();
    for (const auto& [degree, dimension] : p.graded_dimension) {
        graded[std::to_string(degree)] = dimension;
    }
    object["graded_dim"] = graded;
    object["nilpotency_witness"] = p.nilpotency_witness;
    object["strand_nilpotency"] = p.strand_nilpotency;
    return object.dump();
}

std::string multiplicities_to_csv(const CrystalGraph& g) {
    std::ostringstream out;
    out << "weight_coords,count\n";
    for (const auto& [nu, count] : weight_multiplicities(g)) {
        out << csv_quote(join_ints(nu.coefficients())) << "," << count << "\n";
    }
    return out.str();
}

std::string graph_to_json(const CrystalGraph& g) {
    Json object = Json::object();
    object["datum"] = parse_json(datum_to_json(g.datum));
    if (g.lambda) {
        object["lambda"] = weight_json(g.datum, *g.lambda);
    } else {
        object["lambda"] = nullptr;
    }
    object["depth_cap"] = g.depth_cap;
    object["complete"] = g.complete;
    Json nodes = Json::array();
    for (size_t id = 0; id < g.nodes.size(); ++id) {
        const CrystalNodeData& data = g.nodes[id];
        Json node = Json::object();
        node["id"] = id;
        node["ref_coords"] = data.coords;
        node["nu"] = root_vector_json(g.datum, data.content);
        node["depth"] = data.depth;
        Json stats = Json::object();
        for (int i = 0; i < g.datum.rank(); ++i) {
            const NodeStats s = binf_stats(g, id, i);
            Json entry = Json::object();
            entry["eps"] = s.eps;
            entry["eps_vee"] = s.eps_vee;
            entry["phi"] = g.lambda ? *s.phi_lambda : s.phi;
            entry["jump"] = s.jump;
            stats[g.datum.label(i)] = entry;
        }
        node["stats"] = stats;
        nodes.push_back(node);
    }
    object["nodes"] = nodes;
    Json edges = Json::array();
    for (const CrystalEdge& edge : g.edges) {
        Json entry = Json::object();
        entry["from"] = edge.from;
        entry["label"] = g.datum.label(edge.label);
        entry["to"] = edge.to;
        edges.push_back(entry);
    }
    object["edges"] = edges;
    return object.dump();
}

}  // namespace klrc
