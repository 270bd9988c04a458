#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dialnet/petrinet.hpp"

namespace dialnet {

// On-disk form of a net (JSON, format_version "1"). Entries missing from
// pre/post take default_weight.
struct NetDocument {
    struct Entry {
        std::string place;
        std::string transition;
        std::string value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    std::string format_version = "1";
    std::string lineale;
    std::string default_weight;
    std::vector<std::string> places;
    std::vector<std::string> transitions;
    std::vector<Entry> pre;
    std::vector<Entry> post;

    friend bool operator==(const NetDocument&, const NetDocument&) = default;
};

// Throws parse_error on malformed JSON or missing/mistyped fields.
NetDocument parse_net_document(std::string_view text);
std::string print_net_document(const NetDocument& doc);

// Throws semantic_error (with the offending label or value) on invariant violations.
PetriNet net_from_document(const NetDocument& doc);
// Lists every entry that differs from the default weight, place-major.
// Unlabelled carriers are labelled by index.
NetDocument document_from_net(const PetriNet& net);

PetriNet read_net_file(const std::filesystem::path& path);
void write_net_file(const std::filesystem::path& path, const PetriNet& net);
std::string net_to_text(const PetriNet& net);
PetriNet net_from_text(std::string_view text);

// A candidate net morphism. F goes from TARGET transitions to SOURCE
// transitions.
struct MorphismDocument {
    PetriNet source;
    PetriNet target;
    FnTable forward;
    FnTable backward;
};

// source/target are file paths (relative to base_dir) or inline net objects;
// "f" maps source places to target places, "F" maps target transitions to
// source transitions.
MorphismDocument parse_morphism_document(std::string_view text, const std::filesystem::path& base_dir);
MorphismDocument read_morphism_file(const std::filesystem::path& path);

// Graphviz: places as circles, transitions as boxes, non-default arcs labelled.
std::string export_dot(const PetriNet& net, std::string_view graph_name = "net");

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace dialnet
