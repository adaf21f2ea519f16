#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "syllogen/ontology.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    const char* dir = std::getenv("SYLLOGEN_TEST_DATA");
    if (!dir) throw std::runtime_error("SYLLOGEN_TEST_DATA not set");
    return std::string(dir) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline syllogen::Ontology toy_ontology() {
    std::ifstream in(data_path("toy_ontology.jsonl"));
    return syllogen::Ontology::ingest_jsonl(in);
}

}  // namespace testutil
