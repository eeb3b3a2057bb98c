#include "ksub/io.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <vector>

#include "ksub/errors.hpp"

namespace ksub {

namespace {

struct LineReader {
    std::istream& in;
    int line = 0;

    // Next significant line, split into tokens; comments stripped.
    bool next(std::vector<std::string>& tokens) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
            tokens.clear();
            std::istringstream ss(raw);
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

std::uint64_t parse_uint(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size() || tok[0] == '-') throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what +
                                   ", got '" + tok + "'");
    }
}

TableKind parse_kind(const std::string& tok, int line) {
    if (tok == "pos") return TableKind::PositiveOnly;
    if (tok == "full") return TableKind::Full;
    throw ParseError(line, "expected 'pos' or 'full', got '" + tok + "'");
}

// Shared row parser for KSF bodies: n labels and one value token.
void parse_row(const std::vector<std::string>& tokens, int line, CostTable& table,
               std::set<std::uint64_t>& seen) {
    if (tokens.size() != table.n() + 1)
        throw ParseError(line, "expected " + std::to_string(table.n()) +
                                   " labels and a value, got " +
                                   std::to_string(tokens.size()) + " tokens");
    std::vector<Label> labels(table.n());
    const Label low = table.kind() == TableKind::PositiveOnly ? 1 : 0;
    for (std::size_t i = 0; i < table.n(); ++i) {
        const std::uint64_t l = parse_uint(tokens[i], line, "a label");
        if (l < low || l > table.k())
            throw ParseError(line, "label " + tokens[i] + " outside [" + std::to_string(low) +
                                       "," + std::to_string(table.k()) + "]");
        labels[i] = Label(l);
    }
    const Labeling point{std::vector<Label>(labels)};
    const std::uint64_t enc = encode(point, table.k());
    if (!seen.insert(enc).second)
        throw ParseError(line, "duplicate labeling " + format_labeling(point));
    CostValue value;
    try {
        value = parse_value(tokens.back());
    } catch (const std::exception& e) {
        throw ParseError(line, e.what());
    }
    if (value.is_finite()) table.set_encoded(enc, value.rational());
}

}  // namespace

CostTable parse_ksf(std::istream& in, std::uint64_t max_cells) {
    LineReader reader{in};
    std::vector<std::string> tokens;
    if (!reader.next(tokens)) throw ParseError(1, "missing 'ksub <n> <k> <pos|full>' header");
    if (tokens.size() != 4 || tokens[0] != "ksub")
        throw ParseError(reader.line, "expected 'ksub <n> <k> <pos|full>' header");
    const std::uint64_t n = parse_uint(tokens[1], reader.line, "n");
    const std::uint64_t k = parse_uint(tokens[2], reader.line, "k");
    if (n == 0 || k == 0 || n > 0xFFFFFFFFull || k > 0xFFFFFFFFull)
        throw ParseError(reader.line, "n and k must be positive");
    const TableKind kind = parse_kind(tokens[3], reader.line);

    CostTable table = [&] {
        try {
            return CostTable(std::uint32_t(n), Label(k), kind, max_cells);
        } catch (const SizeGuardError& e) {
            throw ParseError(reader.line, e.what());
        }
    }();

    std::set<std::uint64_t> seen;
    while (reader.next(tokens)) parse_row(tokens, reader.line, table, seen);
    return table;
}

std::string print_ksf(const CostTable& table) {
    std::string out = "ksub " + std::to_string(table.n()) + " " + std::to_string(table.k()) +
                      (table.kind() == TableKind::PositiveOnly ? " pos\n" : " full\n");
    for (const auto& [enc, v] : table.entries()) {
        const Labeling point = decode(enc, table.n(), table.k());
        for (std::size_t i = 0; i < point.size(); ++i)
            out += std::to_string(point[i]) + " ";
        out += format_rational(v);
        out += '\n';
    }
    return out;
}

VcspInstance parse_vcsp(std::istream& in, std::uint64_t max_cells) {
    LineReader reader{in};
    std::vector<std::string> tokens;
    if (!reader.next(tokens)) throw ParseError(1, "missing 'vcsp <n_vars> <k>' header");
    if ((tokens.size() != 3 && tokens.size() != 4) || tokens[0] != "vcsp")
        throw ParseError(reader.line, "expected 'vcsp <n_vars> <k> [pos|full]' header");
    VcspInstance instance;
    const std::uint64_t n_vars = parse_uint(tokens[1], reader.line, "n_vars");
    const std::uint64_t k = parse_uint(tokens[2], reader.line, "k");
    if (n_vars == 0 || k == 0 || n_vars > 0xFFFFFFFFull || k > 0xFFFFFFFFull)
        throw ParseError(reader.line, "n_vars and k must be positive");
    instance.n_vars = std::uint32_t(n_vars);
    instance.k = Label(k);
    const TableKind kind =
        tokens.size() == 4 ? parse_kind(tokens[3], reader.line) : TableKind::PositiveOnly;

    while (reader.next(tokens)) {
        if (tokens[0] != "constraint")
            throw ParseError(reader.line, "expected 'constraint <r> <i1> ... <ir>', got '" +
                                              tokens[0] + "'");
        if (tokens.size() < 2)
            throw ParseError(reader.line, "constraint line is missing its arity");
        const std::uint64_t r = parse_uint(tokens[1], reader.line, "the arity");
        if (r == 0) throw ParseError(reader.line, "arity must be positive");
        if (tokens.size() != 2 + r)
            throw ParseError(reader.line, "expected " + std::to_string(r) + " scope indices");
        std::vector<std::uint32_t> scope;
        for (std::size_t i = 0; i < r; ++i) {
            const std::uint64_t var = parse_uint(tokens[2 + i], reader.line, "a scope index");
            if (var == 0 || var > instance.n_vars)
                throw ParseError(reader.line, "scope index " + std::to_string(var) +
                                                  " outside [1," +
                                                  std::to_string(instance.n_vars) + "]");
            scope.push_back(std::uint32_t(var));
        }

        CostTable table = [&] {
            try {
                return CostTable(std::uint32_t(r), instance.k, kind, max_cells);
            } catch (const SizeGuardError& e) {
                throw ParseError(reader.line, e.what());
            }
        }();
        std::set<std::uint64_t> seen;
        bool terminated = false;
        while (reader.next(tokens)) {
            if (tokens.size() == 1 && tokens[0] == "end") {
                terminated = true;
                break;
            }
            parse_row(tokens, reader.line, table, seen);
        }
        if (!terminated) throw ParseError(reader.line, "constraint block missing 'end'");
        instance.constraints.push_back(Constraint{std::move(table), std::move(scope)});
    }
    validate_instance(instance);
    return instance;
}

std::string print_vcsp(const VcspInstance& instance) {
    TableKind kind = TableKind::PositiveOnly;
    for (const Constraint& constraint : instance.constraints)
        if (constraint.table.kind() == TableKind::Full) kind = TableKind::Full;
    std::string out = "vcsp " + std::to_string(instance.n_vars) + " " +
                      std::to_string(instance.k) +
                      (kind == TableKind::Full ? " full\n" : "\n");
    for (const Constraint& constraint : instance.constraints) {
        out += "constraint " + std::to_string(constraint.table.n());
        for (std::uint32_t var : constraint.scope) out += " " + std::to_string(var);
        out += '\n';
        for (const auto& [enc, v] : constraint.table.entries()) {
            const Labeling point = decode(enc, constraint.table.n(), constraint.table.k());
            for (std::size_t i = 0; i < point.size(); ++i)
                out += std::to_string(point[i]) + " ";
            out += format_rational(v);
            out += '\n';
        }
        out += "end\n";
    }
    return out;
}

}  // namespace ksub
