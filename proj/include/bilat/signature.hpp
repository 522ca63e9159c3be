#ifndef BILAT_SIGNATURE_HPP
#define BILAT_SIGNATURE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace bilat {

/// One operation symbol with its arity (0, 1 or 2).
struct OpSymbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

/// A finite algebraic signature: a named list of pairwise-distinct symbols.
struct Signature {
    std::string name;
    std::vector<OpSymbol> ops;

    int index_of(std::string_view op) const;
    bool has(std::string_view op) const { return index_of(op) >= 0; }
    int arity_of(std::string_view op) const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// The six varieties the toolkit works with.
///
///   DB    distributive bilattices            or_t and_t not 0t 1t 0k 1k
///   DBu   unbounded distributive bilattices  or_t and_t or_k and_k not
///   DPB   distributive pre-bilattices        or_t and_t 0t 1t 0k 1k
///   DPBu  unbounded distributive pre-bilat.  or_t and_t or_k and_k
///   D     bounded distributive lattices      or and 0 1
///   Du    unbounded distributive lattices    or and
enum class Variety { DB, DBu, DPB, DPBu, D, Du };

Signature signature_of(Variety v);
std::string variety_name(Variety v);

/// Accepts "DB", "DB-", "DBu", "DPB-", "D", "D-", ... (case-sensitive).
Variety parse_variety(std::string_view tag);

bool is_bounded(Variety v);     // constants 0t,1t,0k,1k (or 0,1) in the type
bool has_negation(Variety v);   // DB, DBu
bool is_lattice_variety(Variety v); // D, Du
bool has_stored_knowledge_ops(Variety v); // DBu, DPBu

} // namespace bilat

#endif
