#include "gog/gogfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gog/errors.hpp"
#include "gog/oracle/group_table.hpp"

namespace gog {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

// "key=value" with a fixed expected key
std::string field_value(const std::string& token, const std::string& key, int line) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw parse_error(line, "expected " + key + "=..., got \"" + token + "\"");
    return token.substr(prefix.size());
}

long long parse_int(const std::string& text, int line, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "bad " + what + " \"" + text + "\"");
    }
}

Rational parse_rational(const std::string& text, int line, const std::string& what) {
    try {
        return Rational::parse(text);
    } catch (const error& e) {
        throw parse_error(line, "bad " + what + " \"" + text + "\": " + e.what());
    }
}

bool parse_bool(const std::string& text, int line, const std::string& what) {
    if (text == "0") return false;
    if (text == "1") return true;
    throw parse_error(line, what + " must be 0 or 1, got \"" + text + "\"");
}

InvariantRecord parse_custom_record(const std::vector<std::string>& tokens, int line) {
    // custom <name> omega= rg= b1l2= vb= vc_eq_rg= norm= hyp=
    if (tokens.size() != 9)
        throw parse_error(line, "custom takes a name and 7 key=value fields");
    InvariantRecord r;
    std::string v = field_value(tokens[2], "omega", line);
    if (v != "undef") r.omega = parse_rational(v, line, "omega");
    r.rank_gradient = parse_rational(field_value(tokens[3], "rg", line), line, "rg");
    r.l2_betti = parse_rational(field_value(tokens[4], "b1l2", line), line, "b1l2");
    r.betti_volume = parse_rational(field_value(tokens[5], "vb", line), line, "vb");
    r.vc_equals_rg = parse_bool(field_value(tokens[6], "vc_eq_rg", line), line, "vc_eq_rg");
    v = field_value(tokens[7], "norm", line);
    if (v != "unbounded") {
        long long n = parse_int(v, line, "norm");
        if (n < 1) throw parse_error(line, "norm must be >= 1 or unbounded");
        r.max_finite_subgroup = n;
    }
    r.hypothesis_ok = parse_bool(field_value(tokens[8], "hyp", line), line, "hyp");
    return r;
}

GroupDescriptor parse_descriptor(const std::string& text, int line,
                                 const std::map<std::string, InvariantRecord>& customs) {
    if (text == "nilpotent") return NilpotentInfinite{};
    if (text == "polycyclic") return PolycyclicInfinite{};
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw parse_error(line, "bad descriptor \"" + text + "\"");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    if (arg.empty()) throw parse_error(line, "bad descriptor \"" + text + "\"");
    // range errors (order < 1, genus < 1, ...) surface here, not at
    // validation time, so they come with a line number
    auto checked = [](GroupDescriptor d) {
        base_invariants(d);
        return d;
    };
    if (kind == "finite") {
        if (std::isdigit(static_cast<unsigned char>(arg[0])))
            return checked(Finite{parse_int(arg, line, "finite order")});
        // named finite group from the brute-force catalog
        try {
            return Finite{oracle::build_group(arg).order()};
        } catch (const error&) {
            throw parse_error(line, "unknown finite group name \"" + arg + "\"");
        }
    }
    if (kind == "surface") return checked(SurfaceGenus{parse_int(arg, line, "genus")});
    if (kind == "free") return checked(FreeOfRank{parse_int(arg, line, "free rank")});
    if (kind == "custom") {
        auto it = customs.find(arg);
        if (it == customs.end())
            throw parse_error(line, "custom group \"" + arg + "\" not declared");
        return Custom{arg, it->second};
    }
    throw parse_error(line, "bad descriptor \"" + text + "\"");
}

}  // namespace

GraphOfGroups parse_gog(std::istream& in) {
    GraphOfGroups g;
    std::map<std::string, InvariantRecord> customs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::vector<std::string> tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        const std::string& head = tokens[0];
        try {
            if (head == "custom") {
                if (tokens.size() < 2) throw parse_error(lineno, "custom needs a name");
                if (customs.count(tokens[1]))
                    throw parse_error(lineno, "custom group \"" + tokens[1] + "\" redeclared");
                customs[tokens[1]] = parse_custom_record(tokens, lineno);
            } else if (head == "vertex") {
                if (tokens.size() != 3)
                    throw parse_error(lineno, "vertex takes an id and a descriptor");
                g.add_vertex(tokens[1], parse_descriptor(tokens[2], lineno, customs));
            } else if (head == "edge") {
                if (tokens.size() != 5)
                    throw parse_error(lineno, "edge takes an id, two endpoints and an order");
                g.add_edge(tokens[1], tokens[2], tokens[3],
                           parse_int(tokens[4], lineno, "edge order"));
            } else {
                throw parse_error(lineno, "unknown directive \"" + head + "\"");
            }
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            throw parse_error(lineno, e.what());
        }
    }
    return g;
}

GraphOfGroups parse_gog_string(const std::string& text) {
    std::istringstream in(text);
    return parse_gog(in);
}

GraphOfGroups load_gog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open \"" + path + "\"");
    return parse_gog(in);
}

namespace {

std::string rational_field(const std::string& key, const Rational& v) {
    return " " + key + "=" + v.str();
}

std::string custom_line(const std::string& name, const InvariantRecord& r) {
    std::string out = "custom " + name;
    out += " omega=" + (r.omega ? r.omega->str() : std::string("undef"));
    out += rational_field("rg", r.rank_gradient);
    out += rational_field("b1l2", r.l2_betti);
    out += rational_field("vb", r.betti_volume);
    out += std::string(" vc_eq_rg=") + (r.vc_equals_rg ? "1" : "0");
    out += " norm=" + (r.max_finite_subgroup ? std::to_string(*r.max_finite_subgroup)
                                             : std::string("unbounded"));
    out += std::string(" hyp=") + (r.hypothesis_ok ? "1" : "0");
    return out;
}

}  // namespace

std::string serialize_gog(const GraphOfGroups& g) {
    std::string out;
    std::map<std::string, InvariantRecord> customs;
    for (const auto& [id, d] : g.vertices())
        if (const Custom* c = std::get_if<Custom>(&d)) {
            auto it = customs.find(c->name);
            if (it == customs.end())
                customs[c->name] = c->record;
            else if (!(it->second == c->record))
                throw domain_error("custom group \"" + c->name +
                                   "\" has two different records");
        }
    for (const auto& [name, record] : customs) out += custom_line(name, record) + "\n";
    for (const auto& [id, d] : g.vertices())
        out += "vertex " + id + " " + descriptor_name(d) + "\n";
    for (const Edge& e : g.edges())
        out += "edge " + e.id + " " + e.u + " " + e.v + " " + std::to_string(e.order) + "\n";
    return out;
}

}  // namespace gog
