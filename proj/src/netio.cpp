#include "dialnet/netio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dialnet {

using json = nlohmann::ordered_json;

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw parse_error(std::string("missing field '") + name + "'");
    return *it;
}

std::string string_field(const json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_string()) throw parse_error(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_array()) throw parse_error(std::string("field '") + name + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw parse_error(std::string("field '") + name + "' must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<NetDocument::Entry> entry_list(const json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_array()) throw parse_error(std::string("field '") + name + "' must be an array");
    std::vector<NetDocument::Entry> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& e = v[i];
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
            throw parse_error(std::string(name) + "[" + std::to_string(i) +
                              "] must be [place, transition, value] strings");
        out.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

NetDocument document_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("net document must be a JSON object");
    NetDocument doc;
    doc.format_version = string_field(j, "format_version");
    doc.lineale = string_field(j, "lineale");
    doc.default_weight = string_field(j, "default_weight");
    doc.places = string_list(j, "places");
    doc.transitions = string_list(j, "transitions");
    doc.pre = entry_list(j, "pre");
    doc.post = entry_list(j, "post");
    return doc;
}

json json_from_document(const NetDocument& doc) {
    json j;
    j["format_version"] = doc.format_version;
    j["lineale"] = doc.lineale;
    j["default_weight"] = doc.default_weight;
    j["places"] = doc.places;
    j["transitions"] = doc.transitions;
    auto entries = [](const std::vector<NetDocument::Entry>& es) {
        json out = json::array();
        for (const auto& e : es) out.push_back(json::array({e.place, e.transition, e.value}));
        return out;
    };
    j["pre"] = entries(doc.pre);
    j["post"] = entries(doc.post);
    return j;
}

std::vector<std::string> labels_of(const FinSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.label(i));
    return out;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

PetriNet net_from_json_value(const json& j, const std::filesystem::path& base_dir, const char* role) {
    if (j.is_string()) return read_net_file(base_dir / j.get<std::string>());
    if (j.is_object()) return net_from_document(document_from_json(j));
    throw parse_error(std::string("field '") + role + "' must be a file path or an inline net");
}

FnTable label_map(const json& j, const char* name, const FinSet& dom, const FinSet& cod, const char* dom_what,
                  const char* cod_what) {
    const auto& m = field(j, name);
    if (!m.is_object()) throw parse_error(std::string("field '") + name + "' must be an object of label -> label");
    std::vector<std::size_t> table(dom.size(), 0);
    std::vector<bool> seen(dom.size(), false);
    for (const auto& [key, value] : m.items()) {
        if (!value.is_string()) throw parse_error(std::string(name) + "[\"" + key + "\"] must be a string");
        auto from = dom.index_of(key);
        if (!from) throw semantic_error(std::string(name) + ": unknown " + dom_what + " '" + key + "'");
        auto to = cod.index_of(value.get<std::string>());
        if (!to)
            throw semantic_error(std::string(name) + "[\"" + key + "\"]: unknown " + cod_what + " '" +
                                 value.get<std::string>() + "'");
        table[*from] = *to;
        seen[*from] = true;
    }
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (!seen[i]) throw semantic_error(std::string(name) + " is not total: no image for " + dom_what + " '" + dom.label(i) + "'");
    return FnTable(dom, cod, std::move(table));
}

}  // namespace

NetDocument parse_net_document(std::string_view text) { return document_from_json(parse_json(text)); }

// Top-level fields one per line; label lists and triples stay on a single line each.
std::string print_net_document(const NetDocument& doc) {
    auto j = json_from_document(doc);
    std::string out = "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        out += first ? "" : ",\n";
        first = false;
        out += "  " + json(key).dump() + ": ";
        if (value.is_array() && !value.empty() && value[0].is_array()) {
            out += "[\n";
            for (std::size_t i = 0; i < value.size(); ++i)
                out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += value.dump();
        }
    }
    return out + "\n}\n";
}

PetriNet net_from_document(const NetDocument& doc) {
    if (doc.format_version != "1")
        throw semantic_error("format_version: unsupported version '" + doc.format_version + "'");
    LinealePtr lineale;
    try {
        lineale = lineale_for(doc.lineale);
    } catch (const parse_error& e) {
        throw semantic_error(std::string("lineale: ") + e.what());
    }
    auto value = [&](const std::string& text, const std::string& where) {
        try {
            return lineale->parse(text);
        } catch (const value_error& e) {
            throw semantic_error(where + ": " + e.what());
        }
    };
    auto default_weight = value(doc.default_weight, "default_weight");
    auto arcs = [&](const std::vector<NetDocument::Entry>& entries, const char* side) {
        std::vector<Arc> out;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            auto where = std::string(side) + "[" + std::to_string(i) + "]";
            out.push_back({entries[i].place, entries[i].transition, value(entries[i].value, where)});
        }
        return out;
    };
    return build_net(lineale, doc.places, doc.transitions, arcs(doc.pre, "pre"), arcs(doc.post, "post"),
                     default_weight);
}

NetDocument document_from_net(const PetriNet& net) {
    NetDocument doc;
    doc.lineale = net.lineale()->name();
    doc.default_weight = format_value(net.default_weight());
    doc.places = labels_of(net.places());
    doc.transitions = labels_of(net.transitions());
    auto entries = [&](const DialObject& rel) {
        std::vector<NetDocument::Entry> out;
        for (std::size_t p = 0; p < rel.rows().size(); ++p)
            for (std::size_t t = 0; t < rel.columns().size(); ++t)
                if (!(rel.weight(p, t) == net.default_weight()))
                    out.push_back({doc.places[p], doc.transitions[t], format_value(rel.weight(p, t))});
        return out;
    };
    doc.pre = entries(net.pre());
    doc.post = entries(net.post());
    return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw error("failed writing '" + path.string() + "'");
}

std::string net_to_text(const PetriNet& net) { return print_net_document(document_from_net(net)); }
PetriNet net_from_text(std::string_view text) { return net_from_document(parse_net_document(text)); }

PetriNet read_net_file(const std::filesystem::path& path) { return net_from_text(read_text_file(path)); }
void write_net_file(const std::filesystem::path& path, const PetriNet& net) { write_text_file(path, net_to_text(net)); }

MorphismDocument parse_morphism_document(std::string_view text, const std::filesystem::path& base_dir) {
    auto j = parse_json(text);
    if (!j.is_object()) throw parse_error("morphism document must be a JSON object");
    if (j.contains("format_version") && (!j["format_version"].is_string() || j["format_version"] != "1"))
        throw semantic_error("format_version: unsupported version");
    auto source = net_from_json_value(field(j, "source"), base_dir, "source");
    auto target = net_from_json_value(field(j, "target"), base_dir, "target");
    if (source.lineale()->name() != target.lineale()->name())
        throw semantic_error("source is over " + source.lineale()->name() + " but target is over " +
                             target.lineale()->name());
    auto forward = label_map(j, "f", source.places(), target.places(), "source place", "target place");
    auto backward =
        label_map(j, "F", target.transitions(), source.transitions(), "target transition", "source transition");
    return MorphismDocument{std::move(source), std::move(target), std::move(forward), std::move(backward)};
}

MorphismDocument read_morphism_file(const std::filesystem::path& path) {
    return parse_morphism_document(read_text_file(path), path.parent_path());
}

std::string export_dot(const PetriNet& net, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
    out << "  rankdir=LR;\n";
    for (std::size_t p = 0; p < net.places().size(); ++p)
        out << "  p" << p << " [shape=circle, label=\"" << dot_escape(net.places().label(p)) << "\"];\n";
    for (std::size_t t = 0; t < net.transitions().size(); ++t)
        out << "  t" << t << " [shape=box, label=\"" << dot_escape(net.transitions().label(t)) << "\"];\n";
    for (std::size_t p = 0; p < net.places().size(); ++p)
        for (std::size_t t = 0; t < net.transitions().size(); ++t) {
            const auto& w = net.pre().weight(p, t);
            if (!(w == net.default_weight()))
                out << "  p" << p << " -> t" << t << " [label=\"" << dot_escape(format_value(w)) << "\"];\n";
        }
    for (std::size_t p = 0; p < net.places().size(); ++p)
        for (std::size_t t = 0; t < net.transitions().size(); ++t) {
            const auto& w = net.post().weight(p, t);
            if (!(w == net.default_weight()))
                out << "  t" << t << " -> p" << p << " [label=\"" << dot_escape(format_value(w)) << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace dialnet
