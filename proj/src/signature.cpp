#include "bilat/signature.hpp"

#include "bilat/common.hpp"

#include <array>
#include <cstdio>

namespace bilat {

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

int Signature::index_of(std::string_view op) const {
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (ops[i].name == op) return static_cast<int>(i);
    return -1;
}

int Signature::arity_of(std::string_view op) const {
    int i = index_of(op);
    if (i < 0) throw precondition_error("unknown operation symbol: " + std::string(op));
    return ops[static_cast<std::size_t>(i)].arity;
}

Signature signature_of(Variety v) {
    switch (v) {
        case Variety::DB:
            return {"DB",
                    {{"or_t", 2}, {"and_t", 2}, {"not", 1}, {"0t", 0}, {"1t", 0}, {"0k", 0}, {"1k", 0}}};
        case Variety::DBu:
            return {"DB-", {{"or_t", 2}, {"and_t", 2}, {"or_k", 2}, {"and_k", 2}, {"not", 1}}};
        case Variety::DPB:
            return {"DPB", {{"or_t", 2}, {"and_t", 2}, {"0t", 0}, {"1t", 0}, {"0k", 0}, {"1k", 0}}};
        case Variety::DPBu:
            return {"DPB-", {{"or_t", 2}, {"and_t", 2}, {"or_k", 2}, {"and_k", 2}}};
        case Variety::D:
            return {"D", {{"or", 2}, {"and", 2}, {"0", 0}, {"1", 0}}};
        case Variety::Du:
            return {"D-", {{"or", 2}, {"and", 2}}};
    }
    throw precondition_error("unknown variety");
}

std::string variety_name(Variety v) { return signature_of(v).name; }

Variety parse_variety(std::string_view tag) {
    if (tag == "DB") return Variety::DB;
    if (tag == "DB-" || tag == "DBu") return Variety::DBu;
    if (tag == "DPB") return Variety::DPB;
    if (tag == "DPB-" || tag == "DPBu") return Variety::DPBu;
    if (tag == "D") return Variety::D;
    if (tag == "D-" || tag == "Du") return Variety::Du;
    throw parse_error("unknown variety tag: " + std::string(tag));
}

bool is_bounded(Variety v) {
    return v == Variety::DB || v == Variety::DPB || v == Variety::D;
}

bool has_negation(Variety v) { return v == Variety::DB || v == Variety::DBu; }

bool is_lattice_variety(Variety v) { return v == Variety::D || v == Variety::Du; }

bool has_stored_knowledge_ops(Variety v) { return v == Variety::DBu || v == Variety::DPBu; }

} // namespace bilat
